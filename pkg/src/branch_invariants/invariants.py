"""Numerical invariants of an equisingularity class.

Everything here is exact integer arithmetic over a multiplicity
sequence.  Each invariant that admits two independent expressions is
computed both ways and compared at runtime; a mismatch raises
InternalInvariantViolation because it can only come from a bug.

Quantities, with e_p the multiplicity at point p and e'_p the adjusted
multiplicity (e_p at the origin, e_p + 1 at free points, e_p + 2 at
satellite points):

    milnor_number            mu      = sum e_p (e_p - 1)
    mu_constant_stratum_dim  tau-    = sum (e'_p - 2)(e'_p - 3)/2
    generic_component_dim    q_min   = sum sigma(e'_p)
    minimal_tjurina          tau_min = closed formula, checked against
                                       q_min + mu - tau-
    differential_gap_count           = tau_min - mu/2 - n + 1, checked
                                       against a closed sum over points

with sigma(k) = (k-2)(k-4)/4 for even k and (k-3)^2/4 for odd k.
Multiplicity-1 free points contribute zero to every sum, so invariants
are stable under extending a resolution past the minimal one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext

from .combinatorics import (
    CharacteristicExponents,
    conductor,
    gap_count,
    semigroup_from_char_exponents,
)
from .errors import (
    DomainError,
    InternalInvariantViolation,
    NegativeGapCountError,
    check_int64,
)
from .resolution import (
    InfinitelyNearPoint,
    MultiplicitySequence,
    PointKind,
    multiplicity_sequence,
)


def decimal_ratio(num: int, den: int, places: int = 6) -> str:
    """num/den rendered to a fixed number of places, ties to even."""
    with localcontext() as ctx:
        ctx.prec = 50
        q = Decimal(num) / Decimal(den)
        return str(q.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def _exact_div(a: int, b: int, what: str) -> int:
    """Division that must be exact; a remainder means a broken formula."""
    q, r = divmod(a, b)
    if r != 0:
        raise InternalInvariantViolation(f"{what}: {a} is not divisible by {b}")
    return q


def moduli_dim_term(k: int) -> int:
    """Contribution of one resolution point to the generic moduli dimension.

    (k-2)(k-4)/4 for even k, (k-3)^2/4 for odd k; defined for k >= 2.
    """
    if k < 2:
        raise DomainError(f"moduli term needs k >= 2, got {k}")
    check_int64(k * k)
    if k % 2 == 0:
        return _exact_div((k - 2) * (k - 4), 4, "even moduli term")
    return _exact_div((k - 3) * (k - 3), 4, "odd moduli term")


def adjusted_multiplicity(p: InfinitelyNearPoint) -> int:
    """e_p at the origin, e_p + 1 at free points, e_p + 2 at satellites."""
    if p.kind is PointKind.ORIGIN:
        return p.multiplicity
    if p.kind is PointKind.FREE:
        return p.multiplicity + 1
    return p.multiplicity + 2


def milnor_number(m: MultiplicitySequence) -> int:
    """Milnor number as sum of e_p(e_p - 1) over the resolution points."""
    mu = 0
    for p in m.points:
        term = p.multiplicity * (p.multiplicity - 1)
        check_int64(term)
        mu += term
        check_int64(mu)
    if mu % 2 != 0:
        raise InternalInvariantViolation(f"Milnor number {mu} is odd")
    return mu


def mu_constant_stratum_dim(m: MultiplicitySequence) -> int:
    """Dimension of the stratum of constant Milnor number.

    Sum of (e' - 2)(e' - 3)/2 over points, e' the adjusted multiplicity.
    """
    total = 0
    for p in m.points:
        k = adjusted_multiplicity(p)
        total += _exact_div((k - 2) * (k - 3), 2, "stratum dimension term")
        check_int64(total)
    return total


def generic_component_dim(m: MultiplicitySequence) -> int:
    """Dimension of the moduli component of the generic curve in the class."""
    total = 0
    for p in m.points:
        total += moduli_dim_term(adjusted_multiplicity(p))
        check_int64(total)
    return total


def _minimal_tjurina_formula(m: MultiplicitySequence) -> int:
    """Closed form for the minimal Tjurina number in the class."""
    n = m.origin_multiplicity
    check_int64(n * n)
    total = moduli_dim_term(n) + _exact_div(n * n + 3 * n - 6, 2, "origin term")
    for p in m.points:
        e = p.multiplicity
        if p.kind is PointKind.FREE:
            num = (e - 1) * (e + 2) + 2 * moduli_dim_term(e + 1)
            total += _exact_div(num, 2, "free point term")
        elif p.kind is PointKind.SATELLITE:
            num = e * (e - 1) + 2 * moduli_dim_term(e + 2)
            total += _exact_div(num, 2, "satellite point term")
        check_int64(total)
    return total


def minimal_tjurina(m: MultiplicitySequence) -> int:
    """Minimal Tjurina number over the equisingularity class.

    The closed formula must agree with generic_component_dim + milnor
    - mu_constant_stratum_dim; the two routes share no terms.
    """
    closed = _minimal_tjurina_formula(m)
    recombined = generic_component_dim(m) + milnor_number(m) - mu_constant_stratum_dim(m)
    if closed != recombined:
        raise InternalInvariantViolation(
            f"minimal Tjurina double computation disagrees: "
            f"closed {closed} vs recombined {recombined}"
        )
    return closed


def tjurina_lower_bound(n: int) -> int:
    """Sharp lower bound for the Tjurina number at multiplicity n.

    3n^2/4 - 1 for even n, 3(n^2 - 1)/4 for odd n; attained exactly by
    the class of one pair (n; n + 1).
    """
    if n < 2:
        raise DomainError(f"lower bound needs multiplicity >= 2, got {n}")
    check_int64(n * n)
    if n % 2 == 0:
        return _exact_div(3 * n * n, 4, "even lower bound") - 1
    return _exact_div(3 * (n * n - 1), 4, "odd lower bound")


def _differential_gap_formula(m: MultiplicitySequence) -> int:
    """Closed sum for the generic count of differential-value gaps."""
    n = m.origin_multiplicity
    total = moduli_dim_term(n) + n - 2
    for p in m.points:
        e = p.multiplicity
        if p.kind is PointKind.FREE:
            total += (e - 1) + moduli_dim_term(e + 1)
        elif p.kind is PointKind.SATELLITE:
            total += moduli_dim_term(e + 2)
        check_int64(total)
    return total


def differential_gap_count(m: MultiplicitySequence) -> int:
    """Generic number of gaps of the value set of Kahler differentials.

    Computed as tau_min - mu/2 - n + 1 and checked against the closed
    sum over resolution points; both must agree and be non-negative.
    """
    n = m.origin_multiplicity
    rearranged = (
        minimal_tjurina(m) - _exact_div(milnor_number(m), 2, "half Milnor") - n + 1
    )
    closed = _differential_gap_formula(m)
    if rearranged != closed:
        raise InternalInvariantViolation(
            f"gap count double computation disagrees: "
            f"rearranged {rearranged} vs closed {closed}"
        )
    if closed < 0:
        raise NegativeGapCountError(f"gap count {closed} is negative")
    return closed


@dataclass(frozen=True)
class InvariantReport:
    """All numeric invariants of one equisingularity class."""

    n: int
    mu: int
    tau_minus: int
    q_min: int
    tau_min: int
    quotient_num: int
    quotient_den: int
    tau_lower_bound: int
    delta_gen_gaps: int

    def quotient_decimal(self, places: int = 6) -> str:
        """mu/tau_min rounded half-even to the given number of places."""
        return decimal_ratio(self.quotient_num, self.quotient_den, places)


def report_gap_count(r: InvariantReport) -> int:
    """Gap count recomputed from report fields alone.

    tau_min - mu/2 - n + 1; negative output means the report fields are
    mutually inconsistent and raises NegativeGapCountError.
    """
    gaps = r.tau_min - _exact_div(r.mu, 2, "half Milnor") - r.n + 1
    if gaps < 0:
        raise NegativeGapCountError(
            f"report with mu={r.mu}, tau_min={r.tau_min}, n={r.n} "
            f"implies {gaps} gaps"
        )
    return gaps


def dimca_greuel_margin(r: InvariantReport) -> int:
    """4 tau_min - 3 mu, the slack in the quotient bound mu/tau_min < 4/3."""
    check_int64(4 * r.tau_min, 3 * r.mu)
    return 4 * r.tau_min - 3 * r.mu


def full_report(c: CharacteristicExponents) -> InvariantReport:
    """Compute every invariant of the class and cross-check the lot.

    Raises InternalInvariantViolation if any of the redundant
    computations disagree: Milnor number vs conductor vs twice the
    semigroup gap count, both Tjurina routes, both gap-count routes,
    the quotient margin, and the sharp lower bound.
    """
    s = semigroup_from_char_exponents(c)
    m = multiplicity_sequence(c)
    mu = milnor_number(m)
    cond = conductor(s)
    if mu != cond or mu != 2 * gap_count(s):
        raise InternalInvariantViolation(
            f"{c}: Milnor number {mu} vs conductor {cond} vs semigroup gaps"
        )
    tau_minus = mu_constant_stratum_dim(m)
    q_min = generic_component_dim(m)
    tau_min = minimal_tjurina(m)
    gaps = differential_gap_count(m)
    bound = tjurina_lower_bound(c.n)
    if tau_min < bound:
        raise InternalInvariantViolation(
            f"{c}: tau_min {tau_min} below the lower bound {bound}"
        )
    if (tau_min == bound) != (c.beta == (c.n + 1,)):
        raise InternalInvariantViolation(
            f"{c}: lower bound attained on the wrong class"
        )
    common = math.gcd(mu, tau_min)
    r = InvariantReport(
        n=c.n,
        mu=mu,
        tau_minus=tau_minus,
        q_min=q_min,
        tau_min=tau_min,
        quotient_num=mu // common,
        quotient_den=tau_min // common,
        tau_lower_bound=bound,
        delta_gen_gaps=gaps,
    )
    margin = dimca_greuel_margin(r)
    free_slack = sum(p.multiplicity - 1 for p in m.points if p.kind is PointKind.FREE)
    if margin < 2 * c.n - 3 + free_slack or margin <= 0:
        raise InternalInvariantViolation(
            f"{c}: quotient margin {margin} below 2n - 3 + free slack"
        )
    if report_gap_count(r) != gaps:
        raise InternalInvariantViolation(f"{c}: report gap count mismatch")
    return r
