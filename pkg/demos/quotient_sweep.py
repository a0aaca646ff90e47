"""Chase the supremum of mu/tau_min over boxes of growing size.

The quotient stays strictly below 4/3 on every equisingularity class,
and the classes pushing toward that ceiling are the (n; n+1) cusps.
"""

from fractions import Fraction

from branch_invariants import EnumerationBounds, sweep


def main() -> None:
    print("box sweep, quotient = mu / tau_min")
    print(f"{'bounds':>14}  {'classes':>7}  {'max quotient':>14}  {'4/3 gap':>10}")
    for mult, beta in [(4, 20), (6, 30), (8, 40), (10, 60)]:
        records, summary = sweep(EnumerationBounds(mult, beta))
        gap = Fraction(4, 3) - summary.max_quotient
        print(f"  mult<={mult:<2} b<={beta:<3}  {summary.classes:>7}"
              f"  {str(summary.max_quotient):>14}  {str(gap):>10}")
        assert summary.failed == 0

    print()
    print("ten largest quotients in the last box")
    ranked = sorted(
        records,
        key=lambda rec: Fraction(rec.report.quotient_num, rec.report.quotient_den),
        reverse=True,
    )[:10]
    for rec in ranked:
        r = rec.report
        print(f"  {str(rec.char_exponents):>12}  mu={r.mu:<4} tau_min={r.tau_min:<4}"
              f" quotient={r.quotient_num}/{r.quotient_den}")


if __name__ == "__main__":
    main()
