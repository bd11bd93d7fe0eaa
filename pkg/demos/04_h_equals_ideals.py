"""
Unions of diagonal subspaces
============================

Intersect the ideals of all coordinate translates of {x1 = ... = xh} in m
variables and compare with two-row Specht ideals.  At the boundary
h = (m+1)//2 for odd m the answer is a three-row Specht ideal instead.
"""

import itertools

from spechtlab.fields import GF, QQ
from spechtlab.groebner import Ideal, hilbert_data, ideal_equal, intersect_all
from spechtlab.specht import general_specht_polynomial
from spechtlab.theorems import check_radical, linear_translate

for m, h in [(4, 3), (5, 4), (5, 5)]:
    for F in (QQ, GF(2)):
        v = check_radical(m, h, F)
        print(f"m={m} h={h} {F}: equals a{v.details['specht_shape']}: {v.holds}")

m, h = 5, 3
I = intersect_all([linear_translate(S, m, QQ) for S in itertools.combinations(range(1, m + 1), h)])
gens = [general_specht_polynomial([2, 2, 1], [list(p[:2]), list(p[2:4]), [p[4]]])
        for p in itertools.permutations(range(1, 6))]
print(f"\nm=5 h=3: height {hilbert_data(I).height}, equals the (2,2,1) Specht ideal: {ideal_equal(I, Ideal(QQ, 5, gens))}")
