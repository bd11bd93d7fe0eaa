"""
Shifted tableaux and their Specht polynomials
=============================================

Enumerate the standard tableaux of shape (5,1,3), print the polynomial
attached to each one, and check that they form a basis.
"""

from spechtlab.specht import module_basis, specht_polynomial, straighten
from spechtlab.tableaux import ShiftedShape, Tableau, count_subdiagonal, tableau_to_path

shape = ShiftedShape(5, 1, 3)
B = module_basis(shape)
print(f"{len(B)} standard tableaux, closed form {shape.dimension()}, paths {count_subdiagonal(shape)}")
for T, f in zip(B.tableaux, B.polynomials):
    print(f"  {T}  path {tableau_to_path(T)}  F_T = {f}")
print("rank of the coefficient matrix:", B.rank())

# a non-standard filling straightens into the basis with integer coefficients
T = Tableau(shape, (3, 4, 5), (1, 2))
v = straighten(T)
print(f"\n{T} straightens to:")
print(v)
print("expansion agrees:", v.expand() == specht_polynomial(T))
