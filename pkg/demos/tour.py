"""Walk through the invariants of a few branches, small to large."""

from branch_invariants import (
    CharacteristicExponents,
    dimca_greuel_margin,
    full_report,
    multiplicity_sequence,
    semigroup_from_char_exponents,
)

CASES = [
    CharacteristicExponents(2, (3,)),
    CharacteristicExponents(5, (7,)),
    CharacteristicExponents(4, (6, 7)),
    CharacteristicExponents(12, (18, 22, 23)),
]


def describe(c: CharacteristicExponents) -> None:
    gens = semigroup_from_char_exponents(c)
    seq = multiplicity_sequence(c)
    r = full_report(c)

    print(f"branch {c}  ~  semigroup {gens}")
    marks = ", ".join(f"{p.multiplicity}{p.kind.value[0]}" for p in seq.points)
    print(f"  infinitely near points: {marks}")
    print(f"  sum check: total {seq.sum_total()} = {c.beta[-1]} + {c.n} - 1,"
          f" free {seq.sum_free()} = {c.beta[-1]} - {c.n},"
          f" satellite {seq.sum_satellite()} = {c.n} - 1")
    print(f"  mu = {r.mu}   tau- = {r.tau_minus}   q_min = {r.q_min}"
          f"   tau_min = {r.tau_min}")
    print(f"  mu/tau_min = {r.quotient_num}/{r.quotient_den}"
          f" = {r.quotient_decimal()}  (always below 4/3)")
    print(f"  margin 4*tau_min - 3*mu = {dimca_greuel_margin(r)}"
          f"  >=  2n - 3 = {2 * r.n - 3}")
    print(f"  bound in n alone: tau_min >= {r.tau_lower_bound}"
          + ("  (attained)" if r.tau_min == r.tau_lower_bound else ""))
    print(f"  generic differential gaps: {r.delta_gen_gaps}")
    print()


def main() -> None:
    for c in CASES:
        describe(c)


if __name__ == "__main__":
    main()
