"""
Lefschetz properties of the square-free algebra
===============================================

Multiplication by x1+...+xn on F[x]/(x1^2,...,xn^2): compare the exact rank
test against the characteristic thresholds for a few primes.
"""

from spechtlab.fields import GF, QQ
from spechtlab.lefschetz import d_surjectivity_equiv, has_slp, has_wlp, slp_threshold_predicate, wlp_threshold_predicate

fields = [QQ, GF(2), GF(3), GF(5), GF(7)]
print("n  " + "  ".join(f"{str(F):>6}" for F in fields) + "   (WLP rank test / threshold)")
for n in range(2, 9):
    cells = []
    for F in fields:
        r, t = has_wlp(n, F), wlp_threshold_predicate(n, F.p)
        cells.append(f"{'Y' if r else 'n'}/{'Y' if t else 'n'}".rjust(6))
    print(f"{n:<2} " + "  ".join(cells))

print("\nSLP at n=4:", {str(F): (has_slp(4, F), slp_threshold_predicate(4, F.p)) for F in fields})

# where the lowering map stops being onto, a primitive element escapes the Specht module
r = d_surjectivity_equiv(5, 2, GF(2))
print(f"\n(n,k)=(5,2) over fp:2: dim P_2 = {r.dim_primitive}, dim V = {r.dim_specht}, witness {r.witness}")
