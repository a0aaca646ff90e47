"""Acceptance suite: one test per criterion, one PASS line each.

Every test prints exactly one line of the form

    ACCEPTANCE <k> PASS: <what was established> (<elapsed>s)

so a verbose run doubles as a checklist.  Timing limits are pinned as
constants next to the tests that enforce them.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from time import perf_counter

import pytest

from branch_invariants import (
    CharacteristicExponents,
    EnumerationBounds,
    SemigroupGenerators,
    append_smooth_points,
    char_exponents_from_semigroup,
    differential_gap_count,
    enumerate_classes,
    full_report,
    gap_count,
    generic_component_dim,
    milnor_number,
    minimal_tjurina,
    moduli_dim_term,
    mu_constant_stratum_dim,
    multiplicity_sequence,
    sweep,
    tjurina_lower_bound,
)
from oracles import naive_conductor_and_gaps

SHARP_BOUND_TIME_LIMIT = 1.0  # seconds, criterion 1
SWEEP_TIME_LIMIT = 10.0  # seconds, criterion 2
SWEEP_BOUNDS = EnumerationBounds(max_multiplicity=10, max_beta=60)


def stamp(number: int, detail: str, started: float) -> None:
    print(f"ACCEPTANCE {number} PASS: {detail} ({perf_counter() - started:.2f}s)")


@pytest.fixture(scope="module")
def swept():
    started = perf_counter()
    records, summary = sweep(SWEEP_BOUNDS)
    elapsed = perf_counter() - started
    return records, summary, elapsed


def test_01_sharp_bound_attained_by_consecutive_pairs():
    started = perf_counter()
    for n in range(2, 51):
        seq = multiplicity_sequence(CharacteristicExponents(n, (n + 1,)))
        assert minimal_tjurina(seq) == tjurina_lower_bound(n)
    elapsed = perf_counter() - started
    assert elapsed < SHARP_BOUND_TIME_LIMIT
    stamp(1, "tau_min attains the n-only bound for (n; n+1), n = 2..50", started)


def test_02_quotient_margin_across_sweep(swept):
    records, summary, elapsed = swept
    assert elapsed < SWEEP_TIME_LIMIT
    started = perf_counter()
    assert summary.failed == 0
    assert summary.classes == len(records) > 2000
    for rec in records:
        r = rec.report
        margin = 4 * r.tau_min - 3 * r.mu
        assert margin >= 2 * r.n - 3
        assert Fraction(r.quotient_num, r.quotient_den) < Fraction(4, 3)
    assert summary.max_quotient < Fraction(4, 3)
    stamp(
        2,
        f"4*tau_min - 3*mu >= 2n - 3 on all {summary.classes} classes "
        f"with mult <= 10, exponents <= 60 (sweep took {elapsed:.2f}s)",
        started,
    )


def test_03_multiplicity_sum_identities(swept):
    records, _, _ = swept
    started = perf_counter()
    for rec in records:
        c = rec.char_exponents
        seq = multiplicity_sequence(c)
        assert seq.sum_total() == c.beta[-1] + c.n - 1
        assert c.n + seq.sum_free() == c.beta[-1]
        assert seq.sum_satellite() == c.n - 1
    stamp(3, "all three multiplicity sum identities hold across the sweep", started)


def test_04_even_semigroup_family_tjurina_drop():
    started = perf_counter()
    cases = [(2, 3, 1), (2, 3, 3), (2, 5, 1), (3, 4, 1), (3, 5, 3)]
    for p, q, d in cases:
        assert gcd(p, q) == 1 and d % 2 == 1
        gens = (2 * p, 2 * q, 2 * p * q + d)
        conductor, gaps = naive_conductor_and_gaps(gens)
        mu_oracle = 2 * len(gaps)
        assert conductor == mu_oracle
        c = char_exponents_from_semigroup(SemigroupGenerators(gens))
        report = full_report(c)
        assert report.mu == mu_oracle
        assert report.tau_min == mu_oracle - (p - 1) * (q - 1)
    stamp(
        4,
        "tau_min = mu - (p-1)(q-1) on <2p, 2q, 2pq+d> for five (p, q, d) "
        "cases, mu certified by brute-force gap counting",
        started,
    )


def test_05_one_pair_stratum_dimension():
    started = perf_counter()
    checked = 0
    for n in range(2, 61):
        for m in range(n + 1, 61):
            if gcd(n, m) != 1:
                continue
            seq = multiplicity_sequence(CharacteristicExponents(n, (m,)))
            product = (n - 3) * (m - 3)
            assert product % 2 == 0
            assert mu_constant_stratum_dim(seq) == product // 2 + m // n - 1
            checked += 1
    assert checked > 1000
    stamp(
        5,
        f"mu-constant stratum dimension matches (n-3)(m-3)/2 + floor(m/n) - 1 "
        f"for all {checked} coprime pairs up to 60",
        started,
    )


def test_06_milnor_number_is_twice_the_gap_count(swept):
    records, _, _ = swept
    started = perf_counter()
    for rec in records:
        assert rec.report.mu == 2 * gap_count(rec.semigroup)
    stamp(6, "mu = 2 * #gaps of the value semigroup across the sweep", started)


def test_07_invariants_ignore_extra_smooth_points():
    started = perf_counter()
    bounds = EnumerationBounds(max_multiplicity=8, max_beta=40)
    checked = 0
    for c in enumerate_classes(bounds):
        seq = multiplicity_sequence(c)
        base = (
            milnor_number(seq),
            mu_constant_stratum_dim(seq),
            generic_component_dim(seq),
            minimal_tjurina(seq),
            differential_gap_count(seq),
        )
        for k in (1, 2, 5):
            longer = append_smooth_points(seq, k)
            padded = (
                milnor_number(longer),
                mu_constant_stratum_dim(longer),
                generic_component_dim(longer),
                minimal_tjurina(longer),
                differential_gap_count(longer),
            )
            assert padded == base
        checked += 1
    stamp(
        7,
        f"appending 1, 2 or 5 smooth points preserves every invariant "
        f"on {checked} classes with mult <= 8, exponents <= 40",
        started,
    )


def test_08_gap_count_sign_and_vanishing(swept):
    records, _, _ = swept
    started = perf_counter()
    zero_seen = 0
    for rec in records:
        r = rec.report
        assert r.delta_gen_gaps >= 0
        assert r.mu % 2 == 0
        assert r.delta_gen_gaps == r.tau_min - r.mu // 2 - r.n + 1
        if r.delta_gen_gaps == 0:
            zero_seen += 1
            assert r.tau_min == r.mu // 2 + r.n - 1
    assert zero_seen > 0
    stamp(
        8,
        "differential gap count is nonnegative and vanishes exactly when "
        "tau_min = mu/2 + n - 1",
        started,
    )


def test_09_moduli_term_bound_to_a_million():
    started = perf_counter()
    for k in range(2, 10**6 + 1):
        sigma = moduli_dim_term(k)
        floor_bound = (k - 2) * (k - 4)
        assert 4 * sigma >= floor_bound
        if k % 2 == 0:
            assert 4 * sigma == floor_bound
        else:
            assert 4 * sigma == floor_bound + 1
    stamp(9, "4*sigma(k) >= (k-2)(k-4) with even-case equality up to 10^6", started)


def test_10_worked_examples_pinned():
    started = perf_counter()
    expected = {
        (2, (3,)): (2, 0, 0, 2),
        (5, (7,)): (24, 4, 1, 21),
        (4, (6, 7)): (16, 2, 0, 14),
    }
    for (n, beta), (mu, tau_minus, q_min, tau_min) in expected.items():
        r = full_report(CharacteristicExponents(n, beta))
        assert (r.mu, r.tau_minus, r.q_min, r.tau_min) == (
            mu, tau_minus, q_min, tau_min,
        )
    cusp = full_report(CharacteristicExponents(5, (7,)))
    assert (cusp.quotient_num, cusp.quotient_den) == (8, 7)
    assert cusp.quotient_decimal() == "1.142857"
    twostage = full_report(CharacteristicExponents(4, (6, 7)))
    assert (twostage.quotient_num, twostage.quotient_den) == (8, 7)
    assert twostage.delta_gen_gaps == 3
    stamp(10, "the three worked examples reproduce their pinned values", started)
