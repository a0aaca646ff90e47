"""Two infinite families with exact closed-form behavior.

First the (n; n+1) cusps, which attain the lower bound for tau_min
among all branches of multiplicity n.  Then the semigroups
<2p, 2q, 2pq + d>, where tau_min sits exactly (p-1)(q-1) below mu.
"""

from math import gcd

from branch_invariants import (
    CharacteristicExponents,
    SemigroupGenerators,
    char_exponents_from_semigroup,
    full_report,
    tjurina_lower_bound,
)


def sharp_family() -> None:
    print("tau_min of (n; n+1) meets the bound 3n^2/4 - 1, resp 3(n^2-1)/4")
    print(f"  {'n':>3}  {'mu':>5}  {'tau_min':>7}  {'bound':>5}")
    for n in [2, 3, 5, 8, 13, 21, 34]:
        r = full_report(CharacteristicExponents(n, (n + 1,)))
        bound = tjurina_lower_bound(n)
        assert r.tau_min == bound
        print(f"  {n:>3}  {r.mu:>5}  {r.tau_min:>7}  {bound:>5}")
    print()


def even_generator_family() -> None:
    print("tau_min = mu - (p-1)(q-1) on <2p, 2q, 2pq+d>, d odd")
    print(f"  {'p':>2} {'q':>2} {'d':>2}  {'semigroup':>16}  {'mu':>4}"
          f"  {'tau_min':>7}  {'drop':>4}")
    for p, q in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]:
        assert gcd(p, q) == 1
        for d in (1, 3):
            gens = SemigroupGenerators((2 * p, 2 * q, 2 * p * q + d))
            r = full_report(char_exponents_from_semigroup(gens))
            drop = r.mu - r.tau_min
            assert drop == (p - 1) * (q - 1)
            print(f"  {p:>2} {q:>2} {d:>2}  {str(gens):>16}  {r.mu:>4}"
                  f"  {r.tau_min:>7}  {drop:>4}")
    print()


def main() -> None:
    sharp_family()
    even_generator_family()


if __name__ == "__main__":
    main()
