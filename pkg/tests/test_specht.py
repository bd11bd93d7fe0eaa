import itertools

import pytest
from hypothesis import given, settings, strategies as st

from spechtlab.errors import InvalidFilling, SupportViolation
from spechtlab.fields import GF, QQ
from spechtlab.linalg import ExactMatrix
from spechtlab.poly import Polynomial, parse_poly
from spechtlab.specht import (
    SpechtVector,
    act,
    coefficient_vector,
    delete_largest,
    general_specht_polynomial,
    module_basis,
    phi_map,
    restrict_support,
    specht_polynomial,
    squarefree_index,
    straighten,
    straighten_by_solving,
    supported_tableaux,
)
from spechtlab.tableaux import ShiftedShape, Tableau, all_tableaux, enumerate_standard

# generator table, factored exactly as printed alongside the 513 example
TABLE_513 = {
    ((2, 4, 5), (1, 3)): "(x2-x3)*x4*x5",
    ((2, 3, 5), (1, 4)): "(x2-x4)*x3*x5",
    ((2, 3, 4), (1, 5)): "(x2-x5)*x3*x4",
    ((1, 4, 5), (2, 3)): "(x1-x3)*x4*x5",
    ((1, 3, 5), (2, 4)): "(x1-x4)*x3*x5",
    ((1, 3, 4), (2, 5)): "(x1-x5)*x3*x4",
    ((1, 2, 5), (3, 4)): "(x1-x4)*x2*x5",
    ((1, 2, 4), (3, 5)): "(x1-x5)*x2*x4",
    ((1, 2, 3), (4, 5)): "(x1-x5)*x2*x3",
}


def factored(s, n=5):
    # tiny evaluator for "(xa-xb)*xc*xd" strings
    f = Polynomial.constant(QQ, n, 1)
    for part in s.split("*"):
        f = f * parse_poly(part.strip("()"), n)
    return f


def shapes(nmax, nmin=1):
    for n in range(nmin, nmax + 1):
        for k in range(0, n // 2 + 1):
            for d in range(k, n - k + 1):
                yield ShiftedShape(n, k, d)


def test_first_513_generator():
    T = Tableau(ShiftedShape(5, 1, 3), (2, 4, 5), (1, 3))
    assert specht_polynomial(T) == parse_poly("x2*x4*x5 - x3*x4*x5", 5)


def test_monomial_case():
    T = Tableau(ShiftedShape(4, 0, 2), (1, 3), (2, 4))
    assert specht_polynomial(T) == parse_poly("x1*x3", 4)


def test_column_swap_negates():
    T = Tableau(ShiftedShape(4, 2, 2), (1, 2), (3, 4))
    assert specht_polynomial(T.swap(1, 3)) == -specht_polynomial(T)


def test_basis_513_matches_table():
    B = module_basis(ShiftedShape(5, 1, 3))
    got = {(T.top, T.bottom): f for T, f in zip(B.tableaux, B.polynomials)}
    assert set(got) == set(TABLE_513)
    for key, s in TABLE_513.items():
        assert got[key] == factored(s)
    assert B.rank() == 9


def test_monomial_basis():
    for n in range(1, 7):
        for d in range(0, n + 1):
            B = module_basis(ShiftedShape(n, 0, d))
            assert len(B) == len(squarefree_index(n, d))
            assert all(len(f) == 1 for f in B.polynomials)


def test_422_rank():
    B = module_basis(ShiftedShape(4, 2, 2))
    assert len(B) == 2 and B.matrix.nrows == 6 and B.rank() == 2


@pytest.mark.parametrize("sh", list(shapes(9)))
def test_basis_size_and_full_rank(sh):
    B = module_basis(sh)
    assert len(B) == sh.dimension()
    assert B.rank() == len(B)


def test_general_specht_small():
    assert general_specht_polynomial([3], [[2, 1, 3]]) == Polynomial.constant(QQ, 3, 1)
    f = general_specht_polynomial([1, 1], [[1], [2]])
    assert f in (parse_poly("x1 - x2", 2), parse_poly("x2 - x1", 2))
    with pytest.raises(InvalidFilling):
        general_specht_polynomial([2, 1], [[1, 1], [2]])


@pytest.mark.parametrize("n", range(2, 7))
def test_general_specht_agrees_at_d_equals_k(n):
    for k in range(1, n // 2 + 1):
        for T in enumerate_standard(ShiftedShape(n, k, k)):
            # partition (n-k, k): the first row is i's and bottom singles; the
            # two-cell columns sit at the right end of the tableau
            cols = T.columns()
            long_row = [c[0] if len(c) == 1 else c[0] for c in cols]
            short_row = [c[1] for c in cols if len(c) == 2]
            g = general_specht_polynomial([n - k, k], [long_row[-k:] + long_row[:-k], short_row])
            assert g == specht_polynomial(T)


def test_standard_straightens_to_unit():
    for T in enumerate_standard(ShiftedShape(5, 1, 3)):
        v = straighten(T)
        assert v.coords == {T: 1}


def test_411_descent():
    T = Tableau(ShiftedShape(4, 1, 1), (1,), (2, 3, 4))
    v = straighten(T)
    assert 0 < len([c for c in v.coords.values() if c != 0]) <= 3
    assert v.expand() == specht_polynomial(T)
    assert v.coords == straighten_by_solving(T).coords


def test_case_two_witness():
    # top (1,4), bottom (2,3): the top cell right of the pair exceeds j1 > i1
    T = Tableau(ShiftedShape(4, 1, 2), (1, 4), (2, 3))
    v = straighten(T)
    assert v.expand() == specht_polynomial(T)
    assert v.coords == straighten_by_solving(T).coords


@pytest.mark.parametrize("sh", list(shapes(6)))
def test_straighten_sound_exhaustive(sh):
    for T in all_tableaux(sh):
        v = straighten(T)
        assert all(S.is_standard() for S in v.coords)
        assert v.expand() == specht_polynomial(T)


@pytest.mark.parametrize("sh", [s for s in shapes(5) if s.k])
@pytest.mark.parametrize("F", [QQ, GF(2), GF(3)])
def test_straighten_matches_linear_solve(sh, F):
    for T in all_tableaux(sh):
        assert straighten(T, F).coords == straighten_by_solving(T, F).coords


@pytest.mark.parametrize("n", range(2, 7))
def test_phi_sign_on_generators(n):
    for k in range(1, n // 2 + 1):
        for T in enumerate_standard(ShiftedShape(n, k, k)):
            Tp = delete_largest(T)
            assert phi_map(specht_polynomial(T)) == specht_polynomial(Tp, nvars=n).scale((-1) ** k)


def test_phi_fixes_xn():
    xn = Polynomial.var(QQ, 4, 4)
    assert phi_map(xn) == xn


def test_restrict_identity_and_k_equals_m():
    sh = ShiftedShape(5, 2, 2)
    T = enumerate_standard(sh)[0]
    v = straighten(T)
    assert restrict_support(v, 0) is v
    w = restrict_support(SpechtVector(sh, QQ, {S: 1 for S in supported_tableaux(sh, 2)}), 2)
    assert w.shape.k == 0


def test_restrict_rejects_unsupported():
    sh = ShiftedShape(5, 2, 2)
    bad = [T for T in enumerate_standard(sh) if T.top[0] != 1][0]
    with pytest.raises(SupportViolation):
        restrict_support(SpechtVector(sh, QQ, {bad: 1}), 1)


@pytest.mark.parametrize("n,k,d,m", [(5, 2, 2, 1), (6, 2, 3, 1), (6, 2, 3, 2), (6, 1, 4, 3)])
@pytest.mark.parametrize("F", [QQ, GF(2)])
def test_restriction_injective(n, k, d, m, F):
    sh = ShiftedShape(n, k, d)
    supp = supported_tableaux(sh, m)
    images = [restrict_support(SpechtVector(sh, F, {T: F.one}), m) for T in supp]
    polys = [v.expand(n) for v in images]
    idx = squarefree_index(n, d - m, 0)
    M = ExactMatrix.from_columns(F, [coefficient_vector(f, idx) for f in polys], len(idx))
    assert M.rank() == len(supp)
    if (n, k, d, m) == (5, 2, 2, 1):
        T = Tableau(sh, (1, 3), (2, 4, 5))
        image = restrict_support(SpechtVector(sh, F, {T: F.one}), 1)
        (S,) = image.coords
        assert S.shape == ShiftedShape(4, 1, 1, 1) and (S.top, S.bottom) == ((3,), (2, 4, 5))


@pytest.mark.parametrize("sh", [s for s in shapes(6, 2)])
def test_sn_closure(sh):
    n = sh.n
    for T in enumerate_standard(sh):
        for a in range(1, n):
            U = act({a: a + 1, a + 1: a}, T)
            assert straighten(U).expand() == specht_polynomial(U)


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 6), st.data())
def test_straighten_linear_in_field(n, data):
    k = data.draw(st.integers(1, n // 2))
    d = data.draw(st.integers(k, n - k))
    sh = ShiftedShape(n, k, d)
    T = data.draw(st.sampled_from(list(all_tableaux(sh))))
    q = straighten(T, QQ)
    f = straighten(T, GF(3))
    # reducing rational (integer) coordinates mod 3 gives the mod-3 coordinates
    red = {S: GF(3)(c) for S, c in q.coords.items() if GF(3)(c) != 0}
    assert red == f.coords
