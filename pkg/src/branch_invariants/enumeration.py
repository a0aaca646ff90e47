"""Enumeration of equisingularity classes and identity sweeps.

Classes are generated in lexicographic order of (n, beta_1, ..., beta_g)
by extending partial exponent tuples while the gcd chain stays above 1.
A sweep evaluates the full invariant report for every class in range and
records, per class, a set of named boolean identity checks; a class
whose computation raises is recorded as failed rather than aborting the
sweep.

Parallel evaluation is opt-in through the environment variable
BRANCH_INVARIANTS_THREADS (a positive integer capping worker count);
records are re-sorted into enumeration order before being returned, so
output is byte-identical with and without workers.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .combinatorics import (
    CharacteristicExponents,
    SemigroupGenerators,
    semigroup_from_char_exponents,
)
from .errors import BranchInvariantError, DomainError
from .invariants import (
    InvariantReport,
    dimca_greuel_margin,
    full_report,
    mu_constant_stratum_dim,
    tjurina_lower_bound,
)
from .resolution import multiplicity_sequence

THREADS_ENV_VAR = "BRANCH_INVARIANTS_THREADS"

CHECK_NAMES = (
    "satellite_sum",
    "enriques_free",
    "enriques_total",
    "dimca_greuel",
    "lower_bound",
    "peraire",
)
ONE_PAIR_CHECK = "zariski_one_pair"


@dataclass(frozen=True)
class EnumerationBounds:
    """Search box for class enumeration.

    max_multiplicity bounds n, max_beta bounds the largest exponent, and
    max_pairs (None for unbounded) bounds the number of characteristic
    pairs.
    """

    max_multiplicity: int
    max_beta: int
    max_pairs: int | None = None

    def __post_init__(self) -> None:
        if self.max_multiplicity < 2:
            raise DomainError(
                f"max multiplicity must be at least 2, got {self.max_multiplicity}"
            )
        if self.max_beta <= self.max_multiplicity:
            raise DomainError(
                f"max exponent {self.max_beta} must exceed "
                f"max multiplicity {self.max_multiplicity}"
            )
        if self.max_pairs is not None and self.max_pairs < 1:
            raise DomainError(f"max pairs must be positive, got {self.max_pairs}")


def enumerate_classes(bounds: EnumerationBounds) -> Iterator[CharacteristicExponents]:
    """All admissible classes inside bounds, in lexicographic order."""

    def extend(n: int, prefix: tuple[int, ...], e: int):
        start = (prefix[-1] if prefix else n) + 1
        for b in range(start, bounds.max_beta + 1):
            if b % e == 0:
                continue
            e_next = math.gcd(e, b)
            grown = prefix + (b,)
            if e_next == 1:
                yield CharacteristicExponents(n, grown)
            elif bounds.max_pairs is None or len(grown) < bounds.max_pairs:
                yield from extend(n, grown, e_next)

    for n in range(2, bounds.max_multiplicity + 1):
        yield from extend(n, (), n)


@dataclass(frozen=True)
class SweepRecord:
    """One class of a sweep: its encodings, report, and check outcomes.

    checks maps identity names to booleans; report is None and every
    check False when evaluation raised (error then holds the message).
    """

    char_exponents: CharacteristicExponents
    semigroup: SemigroupGenerators | None
    report: InvariantReport | None
    checks: dict[str, bool] = field(default_factory=dict)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(self.checks.values())


def _one_pair_stratum_dim(n: int, m: int) -> int:
    """Stratum dimension of a one-pair class from its exponents alone."""
    return (n - 3) * (m - 3) // 2 + m // n - 1


def evaluate_class(c: CharacteristicExponents) -> SweepRecord:
    """Full report plus named identity checks for one class."""
    try:
        s = semigroup_from_char_exponents(c)
        m = multiplicity_sequence(c)
        r = full_report(c)
    except BranchInvariantError as exc:
        checks = {name: False for name in CHECK_NAMES}
        if c.g == 1:
            checks[ONE_PAIR_CHECK] = False
        return SweepRecord(c, None, None, checks, f"{type(exc).__name__}: {exc}")
    n, beta_g = c.n, c.beta[-1]
    margin = dimca_greuel_margin(r)
    bound = tjurina_lower_bound(n)
    checks = {
        "satellite_sum": m.sum_satellite() == n - 1,
        "enriques_free": n + m.sum_free() == beta_g,
        "enriques_total": m.sum_total() == beta_g + n - 1,
        "dimca_greuel": 3 * r.mu < 4 * r.tau_min and margin >= 2 * n - 3,
        "lower_bound": r.tau_min >= bound
        and (r.tau_min == bound) == (c.beta == (n + 1,)),
        "peraire": r.delta_gen_gaps >= 0
        and r.delta_gen_gaps == r.tau_min - r.mu // 2 - n + 1,
    }
    if c.g == 1:
        checks[ONE_PAIR_CHECK] = r.tau_minus == _one_pair_stratum_dim(n, beta_g)
    return SweepRecord(c, s, r, checks)


@dataclass(frozen=True)
class SweepSummary:
    classes: int
    max_quotient: Fraction
    failed: int


def _worker_count(requested: int | None = None) -> int:
    if requested is None:
        raw = os.environ.get(THREADS_ENV_VAR)
        if raw is None:
            return 1
        try:
            requested = int(raw)
        except ValueError:
            raise DomainError(
                f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}"
            ) from None
    if requested < 1:
        raise DomainError(f"{THREADS_ENV_VAR} must be positive, got {requested}")
    return min(requested, os.cpu_count() or 1)


def sweep(
    bounds: EnumerationBounds, workers: int | None = None
) -> tuple[list[SweepRecord], SweepSummary]:
    """Evaluate every class in bounds; deterministic record order.

    workers defaults to the BRANCH_INVARIANTS_THREADS environment
    variable (serial when unset).  Results are sorted back into
    enumeration order, so worker count never changes the output.
    """
    classes = list(enumerate_classes(bounds))
    count = _worker_count(workers)
    if count > 1 and len(classes) > 1:
        with ProcessPoolExecutor(max_workers=count) as pool:
            records = list(pool.map(evaluate_class, classes, chunksize=64))
    else:
        records = [evaluate_class(c) for c in classes]
    records.sort(key=lambda rec: (rec.char_exponents.n, rec.char_exponents.beta))
    max_q = Fraction(0)
    failed = 0
    for rec in records:
        if not rec.passed:
            failed += 1
        if rec.report is not None:
            q = Fraction(rec.report.quotient_num, rec.report.quotient_den)
            max_q = max(max_q, q)
    return records, SweepSummary(len(records), max_q, failed)
