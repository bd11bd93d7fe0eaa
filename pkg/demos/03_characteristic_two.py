"""
I(5,2) in characteristic two
============================

Over Q the Specht-monomial ideal I(5,2) splits as an intersection and is
Cohen-Macaulay.  Over F_2 the splitting fails and the maximal ideal becomes
an embedded prime.
"""

from spechtlab.fields import GF, QQ
from spechtlab.groebner import cm_certify, embedded_max_prime, ideal_member
from spechtlab.poly import elementary_symmetric
from spechtlab.theorems import check_perfection, check_thm_perfectD, specht_monomial_ideal, y_ideal

for F in (QQ, GF(2)):
    v = check_thm_perfectD(5, 2, F)
    print(f"{F}: intersection identity holds={v.holds} predicate={v.predicate} witness={v.witness}")

F = GF(2)
I = specht_monomial_ideal(5, 2, F)
for vars_ in ([1, 2, 3], [1, 2, 3, 4]):
    e = elementary_symmetric(2, vars_, 5, F)
    print(f"  e2{tuple(vars_)}: in I(5,2) {ideal_member(e, I)}, in y-ideal {ideal_member(e, y_ideal(5, 2, F))}")

ev = embedded_max_prime(I)
print(f"\nembedded prime probe over {F}: {ev.label}, element of (I:m) outside I: {ev.witness}")
print("over q:", embedded_max_prime(specht_monomial_ideal(5, 2, QQ)).label,
      "| CM certificate:", cm_certify(specht_monomial_ideal(5, 2, QQ)).label)

v = check_perfection(5, 2, F)
print("\nperfection evidence over fp:2:", v.details)
