"""Multiplicity sequences: pinned values, blow-up oracle, sum identities."""

from __future__ import annotations

import pytest

from branch_invariants import (
    CharacteristicExponents,
    DomainError,
    EnumerationBounds,
    PointKind,
    append_smooth_points,
    enumerate_classes,
    multiplicity_sequence,
)
from oracles import blowup_multiplicity_sequence

O, F, S = "origin", "free", "satellite"


def seq_pairs(c: CharacteristicExponents):
    return [
        (p.multiplicity, p.kind.value) for p in multiplicity_sequence(c).points
    ]


class TestPinnedSequences:
    def test_ordinary_cusp(self):
        assert seq_pairs(CharacteristicExponents(2, (3,))) == [
            (2, O), (1, F), (1, S),
        ]

    def test_one_pair_5_7(self):
        assert seq_pairs(CharacteristicExponents(5, (7,))) == [
            (5, O), (2, F), (2, S), (1, S), (1, S),
        ]

    def test_two_pair_4_6_7(self):
        assert seq_pairs(CharacteristicExponents(4, (6, 7))) == [
            (4, O), (2, F), (2, S), (1, F), (1, S),
        ]

    def test_4_6_7_stage_boundary(self):
        stages = [p.stage for p in
                  multiplicity_sequence(CharacteristicExponents(4, (6, 7))).points]
        assert stages == [1, 1, 1, 2, 2]

    def test_tacnode_like_2_5(self):
        assert seq_pairs(CharacteristicExponents(2, (5,))) == [
            (2, O), (2, F), (1, F), (1, S),
        ]


class TestBlowUpOracle:
    def test_small_box(self):
        for c in enumerate_classes(EnumerationBounds(6, 24)):
            assert seq_pairs(c) == blowup_multiplicity_sequence(c.n, c.beta), str(c)

    @pytest.mark.parametrize(
        "n, beta",
        [
            (6, (10, 13)),
            (4, (10, 11)),
            (6, (8, 9)),
            (8, (10, 11)),
            (8, (12, 14, 15)),
            (12, (18, 22, 23)),
            (9, (12, 16)),
            (16, (24, 28, 30, 31)),
        ],
    )
    def test_deeper_classes(self, n, beta):
        c = CharacteristicExponents(n, beta)
        assert seq_pairs(c) == blowup_multiplicity_sequence(n, beta)


class TestStructure:
    def test_sum_identities(self):
        for c in enumerate_classes(EnumerationBounds(12, 80)):
            m = multiplicity_sequence(c)
            assert m.sum_total() == c.beta[-1] + c.n - 1
            assert c.n + m.sum_free() == c.beta[-1]
            assert m.sum_satellite() == c.n - 1

    def test_shape(self):
        for c in enumerate_classes(EnumerationBounds(10, 50)):
            m = multiplicity_sequence(c)
            assert m.points[0].kind is PointKind.ORIGIN
            assert m.points[0].multiplicity == c.n
            assert all(p.kind is not PointKind.ORIGIN for p in m.points[1:])
            assert m.points[-1].multiplicity == 1
            stages = [p.stage for p in m.points]
            assert stages == sorted(stages)
            assert sorted(set(stages)) == list(range(1, c.g + 1))
            # non-increasing within each stage
            for i in range(1, len(m.points)):
                if m.points[i].stage == m.points[i - 1].stage:
                    assert m.points[i].multiplicity <= m.points[i - 1].multiplicity


class TestAppendSmoothPoints:
    def test_appended_points_are_free_ones(self):
        m = multiplicity_sequence(CharacteristicExponents(5, (7,)))
        ext = append_smooth_points(m, 3)
        assert ext.points[: len(m.points)] == m.points
        assert len(ext.points) == len(m.points) + 3
        for p in ext.points[len(m.points):]:
            assert p.multiplicity == 1
            assert p.kind is PointKind.FREE

    def test_zero_is_identity(self):
        m = multiplicity_sequence(CharacteristicExponents(4, (6, 7)))
        assert append_smooth_points(m, 0) == m

    def test_negative_rejected(self):
        m = multiplicity_sequence(CharacteristicExponents(2, (3,)))
        with pytest.raises(DomainError):
            append_smooth_points(m, -1)
