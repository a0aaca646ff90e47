"""Characteristic exponents and value semigroups of plane branches.

An equisingularity class of an irreducible plane curve germ is encoded
either by its characteristic exponents (n; b_1, ..., b_g) or by the
minimal generators (v_0, ..., v_g) of its semigroup of values.  The two
encodings carry the same information; this module validates both,
converts in both directions, and computes the conductor and the gap
count of the semigroup.

Conventions.  n >= 2 is the multiplicity, g >= 1 the number of
characteristic pairs.  The gcd chain is e_0 = n, e_i = gcd(e_{i-1}, b_i);
admissibility requires n < b_1 < ... < b_g, each b_i not divisible by
e_{i-1}, and e_g = 1.  Smooth branches (g = 0) are rejected everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    DivisibilityViolationError,
    GcdNotOneError,
    InternalInvariantViolation,
    NonIncreasingError,
    NotPlaneError,
    NotSingularError,
    check_int64,
)


@dataclass(frozen=True)
class CharacteristicExponents:
    """Validated characteristic exponents (n; beta_1, ..., beta_g).

    Construction runs the full admissibility check and raises a
    ValidationError subclass naming the first violated condition.
    """

    n: int
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))
        object.__setattr__(self, "n", int(self.n))
        _validate_exponents(self.n, self.beta)

    @property
    def g(self) -> int:
        return len(self.beta)

    @property
    def gcd_chain(self) -> tuple[int, ...]:
        """(e_0, e_1, ..., e_g) with e_0 = n and e_i = gcd(e_{i-1}, beta_i)."""
        chain = [self.n]
        for b in self.beta:
            chain.append(math.gcd(chain[-1], b))
        return tuple(chain)

    def __str__(self) -> str:
        return f"({self.n}; {', '.join(str(b) for b in self.beta)})"


def _validate_exponents(n: int, beta: tuple[int, ...]) -> None:
    check_int64(n, *beta)
    if len(beta) == 0 or n < 2:
        raise NotSingularError(
            f"(n={n}, g={len(beta)}) describes a smooth branch; need n >= 2 and g >= 1"
        )
    prev = n
    for i, b in enumerate(beta, start=1):
        if b <= prev:
            raise NonIncreasingError(
                f"exponents must satisfy n < beta_1 < ... < beta_g; "
                f"beta_{i} = {b} is not greater than {prev}"
            )
        prev = b
    e = n
    for i, b in enumerate(beta, start=1):
        if b % e == 0:
            raise DivisibilityViolationError(
                f"beta_{i} = {b} is divisible by e_{i - 1} = {e}"
            )
        e = math.gcd(e, b)
    if e != 1:
        raise GcdNotOneError(f"gcd chain ends at e_g = {e}, not 1")


@dataclass(frozen=True)
class SemigroupGenerators:
    """Minimal generators (v_0, ..., v_g) of a plane-branch value semigroup.

    Construction validates the plane-branch conditions: v_0 >= 2, the gcd
    chain e_i = gcd(v_0, ..., v_i) strictly decreases to 1, and each
    generator dominates its predecessor via (e_{i-1}/e_i) v_i < v_{i+1}.
    """

    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(int(v) for v in self.gens))
        _validate_generators(self.gens)

    @property
    def n(self) -> int:
        return self.gens[0]

    @property
    def g(self) -> int:
        return len(self.gens) - 1

    @property
    def gcd_chain(self) -> tuple[int, ...]:
        """(e_0, ..., e_g) with e_i = gcd(v_0, ..., v_i)."""
        chain = [self.gens[0]]
        for v in self.gens[1:]:
            chain.append(math.gcd(chain[-1], v))
        return tuple(chain)

    @property
    def multipliers(self) -> tuple[int, ...]:
        """(n_1, ..., n_g) with n_i = e_{i-1}/e_i."""
        chain = self.gcd_chain
        return tuple(chain[i - 1] // chain[i] for i in range(1, len(chain)))

    def __str__(self) -> str:
        return f"<{', '.join(str(v) for v in self.gens)}>"


def _validate_generators(gens: tuple[int, ...]) -> None:
    check_int64(*gens)
    if len(gens) < 2 or gens[0] < 2:
        raise NotSingularError(
            f"generators {list(gens)} describe a smooth branch; "
            f"need v_0 >= 2 and at least two generators"
        )
    n = gens[0]
    if gens[1] <= n:
        raise NonIncreasingError(
            f"v_1 = {gens[1]} must exceed the multiplicity v_0 = {n}"
        )
    chain = [n]
    for v in gens[1:]:
        chain.append(math.gcd(chain[-1], v))
    # the domination inequality is diagnosed first: inputs like <4, 6, 12>
    # fail several conditions at once and the useful message is this one
    for i in range(1, len(gens) - 1):
        n_i = chain[i - 1] // chain[i]
        check_int64(n_i * gens[i])
        if n_i * gens[i] >= gens[i + 1]:
            raise NotPlaneError(
                f"not a plane-branch semigroup: "
                f"{n_i} * {gens[i]} = {n_i * gens[i]} is not < {gens[i + 1]}"
            )
    for i in range(1, len(gens)):
        if chain[i] == chain[i - 1]:
            raise DivisibilityViolationError(
                f"v_{i} = {gens[i]} is divisible by gcd(v_0..v_{i - 1}) = {chain[i - 1]}"
            )
    if chain[-1] != 1:
        raise GcdNotOneError(f"gcd of all generators is {chain[-1]}, not 1")


def validate_char_exponents(n: int, beta) -> CharacteristicExponents:
    """Validate (n; beta_1, ..., beta_g) and return the frozen record."""
    return CharacteristicExponents(n, tuple(beta))


def validate_semigroup(gens) -> SemigroupGenerators:
    """Validate semigroup generators and return the frozen record."""
    return SemigroupGenerators(tuple(gens))


def semigroup_from_char_exponents(c: CharacteristicExponents) -> SemigroupGenerators:
    """Minimal semigroup generators of the class with exponents c.

    v_0 = n, v_1 = beta_1, and each later generator accumulates the
    differences of the gcd chain:
    v_{i+1} = sum_{j<=i} ((e_{j-1} - e_j)/e_i) beta_j + beta_{i+1}.
    """
    chain = c.gcd_chain
    gens = [c.n, c.beta[0]]
    for i in range(1, c.g):
        e_i = chain[i]
        # e_0 = n, so the j = 1 term is (n - e_1) beta_1
        acc = sum((chain[j - 1] - chain[j]) * c.beta[j - 1] for j in range(1, i + 1))
        if acc % e_i != 0:
            raise InternalInvariantViolation(
                f"generator accumulator {acc} not divisible by e_{i} = {e_i}"
            )
        v = acc // e_i + c.beta[i]
        check_int64(acc, v)
        gens.append(v)
    return SemigroupGenerators(tuple(gens))


def char_exponents_from_semigroup(s: SemigroupGenerators) -> CharacteristicExponents:
    """Invert semigroup generators back to characteristic exponents.

    Uses the recursion v_{i+1} = n_i v_i - beta_i + beta_{i+1}; the result
    is re-validated on construction, and the round trip is checked.
    """
    mult = s.multipliers
    beta = [s.gens[1]]
    for i in range(1, s.g):
        b = s.gens[i + 1] - mult[i - 1] * s.gens[i] + beta[i - 1]
        check_int64(b)
        beta.append(b)
    c = CharacteristicExponents(s.gens[0], tuple(beta))
    if semigroup_from_char_exponents(c).gens != s.gens:
        raise InternalInvariantViolation(
            f"round trip through exponents changed {s} into "
            f"{semigroup_from_char_exponents(c)}"
        )
    return c


def _membership_sieve(gens: tuple[int, ...], limit: int) -> bytearray:
    """sieve[v] = 1 iff v < limit is a sum of generators."""
    sieve = bytearray(limit)
    if limit > 0:
        sieve[0] = 1
    for gen in gens:
        for v in range(gen, limit):
            if sieve[v - gen]:
                sieve[v] = 1
    return sieve


def conductor(s: SemigroupGenerators) -> int:
    """Smallest c with c + N contained in the semigroup.

    Computed by the closed form sum_i (n_i - 1) v_i - v_0 + 1 and
    cross-checked against an explicit membership sieve: c - 1 must be a
    gap and the next v_0 consecutive values must all be members.
    """
    mult = s.multipliers
    c = 1 - s.n
    for n_i, v in zip(mult, s.gens[1:]):
        term = (n_i - 1) * v
        check_int64(term)
        c += term
        check_int64(c)
    sieve = _membership_sieve(s.gens, c + s.n)
    if c < 1 or sieve[c - 1]:
        raise InternalInvariantViolation(
            f"conductor formula gave {c} for {s} but {c - 1} is not a gap"
        )
    if not all(sieve[c : c + s.n]):
        raise InternalInvariantViolation(
            f"conductor formula gave {c} for {s} but a larger gap exists"
        )
    return c


def gap_count(s: SemigroupGenerators) -> int:
    """Number of naturals missing from the semigroup.

    Counted from the membership sieve and checked against conductor/2,
    which the symmetry of plane-branch semigroups forces.
    """
    c = conductor(s)
    sieve = _membership_sieve(s.gens, c)
    count = c - sum(sieve)
    if c % 2 != 0 or count != c // 2:
        raise InternalInvariantViolation(
            f"{s} has {count} gaps but conductor {c}; symmetry requires c = 2 * gaps"
        )
    return count
