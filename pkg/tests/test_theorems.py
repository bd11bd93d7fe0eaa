import itertools

import pytest

from spechtlab.errors import CharacteristicTooSmall, InvalidShape, ParameterOutOfRange, TooLarge
from spechtlab.fields import GF, QQ
from spechtlab.groebner import Ideal, ideal_contains, ideal_equal, ideal_member
from spechtlab.poly import Polynomial, elementary_symmetric, parse_poly
from spechtlab.specht import module_basis
from spechtlab.tableaux import ShiftedShape
from spechtlab.theorems import (
    check_coc,
    check_hE,
    check_hE_grades,
    check_lemma_jnk,
    check_perfection,
    check_primary_shape,
    check_radical,
    check_thm_perfectD,
    check_thm_radD,
    j_ideal,
    mixed_height_evidence,
    run_check,
    specht_ideal,
    specht_monomial_ideal,
    squarefree_power,
    theorem_c_chain,
    translates_depend_on_subset,
    y_ideal,
)

FIELDS = [QQ, GF(2), GF(3), GF(5)]
ids = [str(F) for F in FIELDS]


def ok(p, k):
    return p == 0 or p >= k + 1


def gens(I):
    return set(map(str, I.generators))


def test_ideal_513_generators():
    I = specht_ideal(5, 1, 3)
    assert set(I.generators) == set(module_basis(ShiftedShape(5, 1, 3)).polynomials)
    assert len(I.generators) == 9


def test_monomial_and_tiny_cases():
    for n in range(1, 6):
        for d in range(0, n + 1):
            assert ideal_equal(specht_ideal(n, 0, d), squarefree_power(n, d))
    assert ideal_equal(specht_ideal(2, 1, 1), Ideal(QQ, 2, [parse_poly("x1 - x2", 2)]))
    with pytest.raises(InvalidShape):
        squarefree_power(3, 4)


def test_I31():
    expected = Ideal(QQ, 3, [parse_poly(s, 3) for s in ("x1 - x3", "x2 - x3", "x1*x2", "x1*x3", "x2*x3")])
    assert ideal_equal(specht_monomial_ideal(3, 1), expected)


def test_y_ideal_31():
    Y = y_ideal(3, 1)
    # products of one y at a time, plus x3^2
    assert gens(Y) == {"-x1 + x3", "-x2 + x3", "x3^2"}
    assert ideal_equal(Y, specht_monomial_ideal(3, 1))


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (5, 2), (6, 2)])
def test_specht_inside_I(n, k):
    assert ideal_contains(specht_monomial_ideal(n, k), specht_ideal(n, k, k))


def test_nk_range():
    for bad in ((4, 2), (3, 0), (2, 1)):
        with pytest.raises(ParameterOutOfRange):
            specht_monomial_ideal(*bad)


def test_j_ideal_shape():
    J = j_ideal(5, 2)
    assert J.nvars == 5
    assert ideal_contains(J, y_ideal(5, 2))


# --- radD -------------------------------------------------------------------

def test_radD_examples():
    assert check_thm_radD(4, 1, 2, QQ).holds
    assert check_thm_radD(5, 1, 3, GF(2)).holds
    assert check_thm_radD(5, 0, 2, QQ).holds
    with pytest.raises(ParameterOutOfRange):
        check_thm_radD(5, 2, 2)
    with pytest.raises(TooLarge):
        check_thm_radD(7, 1, 2)


RAD_D_GRID = [(n, k, d) for n in range(2, 7) for k in range(0, n // 2 + 1) for d in range(k + 1, n - k + 1)]


@pytest.mark.parametrize("F", [QQ, GF(2), GF(3)], ids=str)
def test_radD_grid(F):
    for n, k, d in RAD_D_GRID:
        v = check_thm_radD(n, k, d, F)
        assert v.holds, (n, k, d, str(v.witness))


# --- radical identity ----------------------------------------------------------

def test_radical_examples():
    for F in (QQ, GF(2)):
        v = check_radical(4, 3, F)
        assert v.holds and v.details["components"] == 4
    assert check_radical(5, 4, GF(3)).holds
    with pytest.raises(ParameterOutOfRange):
        check_radical(3, 2)


@pytest.mark.parametrize("F", [QQ, GF(2)], ids=str)
def test_radical_grid(F):
    for m, h in [(3, 3), (4, 3), (4, 4), (5, 4), (5, 5)]:
        assert check_radical(m, h, F).holds


def test_translates_depend_on_subset():
    for n in (3, 4):
        for h in range(2, n + 1):
            assert translates_depend_on_subset(n, h, QQ)
            assert translates_depend_on_subset(n, h, GF(2), squared=True)


# --- change of coordinates -----------------------------------------------------

def test_coc_examples():
    assert check_coc(4, 2, QQ).holds
    v = check_coc(2, 1, QQ)
    assert v.holds
    assert check_coc(5, 2, GF(2)).holds


@pytest.mark.parametrize("F", FIELDS, ids=ids)
def test_coc_grid(F):
    for n in range(2, 7):
        for k in range(1, n // 2 + 1):
            v = check_coc(n, k, F)
            assert v.details == {"sums_equal": True, "phi_generatorwise": True}


# --- perfectD -------------------------------------------------------------------

def test_perfectD_examples():
    assert check_thm_perfectD(5, 2, QQ).holds
    v = check_thm_perfectD(5, 2, GF(2))
    assert v.holds is False and v.matches
    w = v.witness
    assert w == elementary_symmetric(2, [1, 2, 3], 5, GF(2))
    assert ideal_member(w, y_ideal(5, 2, GF(2)))
    assert not ideal_member(w, specht_monomial_ideal(5, 2, GF(2)))
    assert check_thm_perfectD(4, 1, GF(2)).holds


def test_e2_on_four_variables_mod_2():
    # the y-ideal misses e2(x1..x4) in characteristic 2, so it cannot witness the failure
    F = GF(2)
    e24 = elementary_symmetric(2, [1, 2, 3, 4], 5, F)
    assert not ideal_member(e24, y_ideal(5, 2, F))
    assert not ideal_member(e24, specht_monomial_ideal(5, 2, F))
    e23 = elementary_symmetric(2, [1, 2, 3], 5, F)
    assert ideal_member(e23, y_ideal(5, 2, F))
    assert not ideal_member(e23, specht_monomial_ideal(5, 2, F))
    # over F3 the four-variable sum lies in I(5,2)
    assert ideal_member(elementary_symmetric(2, [1, 2, 3, 4], 5, GF(3)), specht_monomial_ideal(5, 2, GF(3)))


@pytest.mark.parametrize("F", FIELDS, ids=ids)
def test_perfectD_grid(F):
    for n in range(3, 6):
        for k in range(1, (n - 1) // 2 + 1):
            v = check_thm_perfectD(n, k, F)
            assert v.holds == ok(F.p, k), (n, k)
            assert v.details["lhs_in_rhs"]


# --- J(n,k), primary shape, heights -----------------------------------------------

def test_jnk_examples():
    assert check_lemma_jnk(4, 1, QQ).holds
    assert check_lemma_jnk(5, 2, QQ).holds
    assert check_lemma_jnk(5, 2, GF(3)).holds
    with pytest.raises(CharacteristicTooSmall):
        check_lemma_jnk(5, 2, GF(2))


def test_primary_examples():
    v = check_primary_shape(5, 2, QQ)
    assert v.holds and v.details["components"] == 5
    assert check_primary_shape(5, 2, GF(2)).holds is False
    for F in FIELDS:
        assert check_primary_shape(3, 1, F).holds


def test_hE_examples():
    r = check_hE_grades(specht_ideal(5, 2, 2), squarefree_power(5, 3))
    assert (r.height_I, r.height_J, r.height_sum) == (3, 3, 4) and r.pattern
    A = specht_ideal(4, 1, 1)
    assert not check_hE_grades(A, A).pattern
    r = check_hE_grades(specht_ideal(3, 1, 1), squarefree_power(3, 2))
    assert (r.height_I, r.height_J, r.height_sum) == (2, 2, 3)


@pytest.mark.parametrize("F", FIELDS, ids=ids)
def test_hE_grid(F):
    for n in range(3, 7):
        for k in range(1, (n - 1) // 2 + 1):
            assert check_hE(n, k, F).holds


# --- perfection ------------------------------------------------------------------

def test_perfection_examples():
    v = check_perfection(5, 2, QQ)
    assert v.holds and v.details["I"] == "CertifiedCM"
    v = check_perfection(5, 2, GF(2))
    assert v.holds is False and v.matches
    assert v.details["I"] == "MaxIdealAssociated"
    assert v.details["hE_heights"] == [3, 3, 4] or v.details["hE_heights"] == (3, 3, 4)
    assert v.details["specht_6_3"] == "not perfect"


@pytest.mark.parametrize("F", FIELDS, ids=ids)
def test_perfection_small(F):
    for n, k in [(3, 1), (4, 1), (5, 1), (5, 2)]:
        assert check_perfection(n, k, F).matches, (n, k)


# --- mixed heights and the agreement chain ------------------------------------------

@pytest.mark.parametrize("F", [QQ, GF(2)], ids=str)
def test_mixed_heights(F):
    for n in range(4, 7):
        for k in range(1, n // 2 + 1):
            for d in range(k + 2, n - k + 1):
                r = mixed_height_evidence(n, k, d, F)
                assert r.mixed
                assert (r.height, r.saturated_height) == (n - d + 1, n - k)
    with pytest.raises(ParameterOutOfRange):
        mixed_height_evidence(5, 1, 2)


@pytest.mark.parametrize("F", FIELDS, ids=ids)
def test_agreement_chain(F):
    for n, k in [(3, 1), (4, 1), (5, 1), (5, 2)]:
        c = theorem_c_chain(n, k, F)
        pred = c.pop("predicate")
        assert pred == ok(F.p, k)
        assert all(v == pred for v in c.values()), (n, k, c)


def test_dispatch():
    assert run_check("rad", 4, 3).holds
    assert run_check("hE", 5, 2).holds
    with pytest.raises(ParameterOutOfRange):
        run_check("radD", 4, 1)


@pytest.mark.parametrize("F", [QQ, GF(2)], ids=str)
def test_boundary_h_equals_is_three_row_specht(F):
    # h = (m+1)//2 at m=5: no two-row shape exists, the three-row (2,2,1) one takes over
    from spechtlab.groebner import intersect_all
    from spechtlab.specht import general_specht_polynomial
    from spechtlab.theorems import linear_translate

    I = intersect_all([linear_translate(S, 5, F) for S in itertools.combinations(range(1, 6), 3)])
    gens = [general_specht_polynomial([2, 2, 1], [list(p[:2]), list(p[2:4]), [p[4]]], F)
            for p in itertools.permutations(range(1, 6))]
    assert ideal_equal(I, Ideal(F, 5, gens))
