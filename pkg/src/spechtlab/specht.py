"""Shifted Specht polynomials, the standard basis, and straightening."""

from __future__ import annotations

import itertools
from math import factorial
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import InvalidFilling, NonTermination, ShapeMismatch, SupportViolation
from .fields import QQ, FieldSpec
from .linalg import ExactMatrix
from .poly import Polynomial, substitute
from .tableaux import ShiftedShape, Tableau, all_tableaux, enumerate_standard, is_standard


def _linear(field, n, i, j) -> Polynomial:
    # x_i - x_j
    e1 = [0] * n
    e2 = [0] * n
    e1[i - 1] = 1
    e2[j - 1] = 1
    return Polynomial._raw(field, n, {tuple(e1): field.one, tuple(e2): field.neg(field.one)})


def specht_polynomial(T: Tableau, field: FieldSpec = QQ, nvars: int | None = None) -> Polynomial:
    """``prod_t (x_{i_t} - x_{j_t}) * x_{i_{k+1}} ... x_{i_d}``.

    ``nvars`` defaults to ``offset + n`` so labels index variables directly.
    """
    sh = T.shape
    n = sh.offset + sh.n if nvars is None else nvars
    e = [0] * n
    for i in T.top_singles:
        e[i - 1] += 1
    result = Polynomial._raw(field, n, {tuple(e): field.one})
    for i, j in T.pairs:
        result = result * _linear(field, n, i, j)
    return result


def general_specht_polynomial(shape: Sequence[int], filling: Sequence[Sequence[int]],
                              field: FieldSpec = QQ) -> Polynomial:
    """Product over columns of ``prod_{r<s} (x_{C[r]} - x_{C[s]})`` (rows top to bottom)."""
    shape = list(shape)
    if any(a <= 0 for a in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise InvalidFilling(f"{shape} is not a partition")
    rows = [list(r) for r in filling]
    if [len(r) for r in rows] != shape:
        raise InvalidFilling("filling does not match the partition")
    n = sum(shape)
    if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
        raise InvalidFilling(f"filling is not a bijection onto 1..{n}")
    result = Polynomial.constant(field, n, 1)
    for c in range(shape[0] if shape else 0):
        col = [r[c] for r in rows if c < len(r)]
        for a, b in itertools.combinations(col, 2):
            result = result * _linear(field, n, a, b)
    return result


# ---------------------------------------------------------------------------
# the standard basis


def squarefree_index(n: int, d: int, offset: int = 0) -> dict:
    """Map each d-subset of ``offset+1..offset+n`` (as exponent tuple in
    ``offset+n`` variables) to its lexicographic position."""
    N = offset + n
    idx = {}
    for pos, S in enumerate(itertools.combinations(range(offset + 1, N + 1), d)):
        e = [0] * N
        for i in S:
            e[i - 1] = 1
        idx[tuple(e)] = pos
    return idx


@dataclass(frozen=True)
class SpechtModuleBasis:
    shape: ShiftedShape
    field: FieldSpec
    tableaux: tuple
    polynomials: tuple
    matrix: ExactMatrix = dc_field(repr=False)

    def __len__(self):
        return len(self.tableaux)

    def rank(self) -> int:
        return self.matrix.rank()

    def index(self, T: Tableau) -> int:
        return self.tableaux.index(T)


def coefficient_vector(f: Polynomial, index: dict) -> list:
    v = [f.field.zero] * len(index)
    for e, c in f.terms.items():
        try:
            v[index[e]] = c
        except KeyError:
            raise ShapeMismatch("polynomial is not square-free of the expected degree") from None
    return v


def module_basis(shape: ShiftedShape, field: FieldSpec = QQ) -> SpechtModuleBasis:
    tabs = tuple(enumerate_standard(shape))
    polys = tuple(specht_polynomial(T, field) for T in tabs)
    idx = squarefree_index(shape.n, shape.d, shape.offset)
    cols = [coefficient_vector(f, idx) for f in polys]
    M = ExactMatrix.from_columns(field, cols, len(idx)) if cols else ExactMatrix.zeros(field, len(idx), 0)
    return SpechtModuleBasis(shape, field, tabs, polys, M)


# ---------------------------------------------------------------------------
# straightening


@dataclass(frozen=True)
class SpechtVector:
    """Coordinates in the standard basis: a dict standard tableau -> raw scalar."""

    shape: ShiftedShape
    field: FieldSpec
    coords: dict

    def expand(self, nvars: int | None = None) -> Polynomial:
        n = self.shape.offset + self.shape.n if nvars is None else nvars
        f = Polynomial.zero(self.field, n)
        for T, c in self.coords.items():
            f = f + specht_polynomial(T, self.field, n).scale(c)
        return f

    def is_zero(self) -> bool:
        return not any(c != 0 for c in self.coords.values())

    def items(self):
        return sorted(self.coords.items(), key=lambda tc: tc[0].top)

    def __str__(self):
        lines = [f"{self.field.format(c)} * {T}" for T, c in self.items() if c != 0]
        return "\n".join(lines) if lines else "0"


def expand(v: SpechtVector) -> Polynomial:
    return v.expand()


def _rewrite(T: Tableau):
    """One straightening step on a column-sorted, non-standard tableau.

    Returns ``[(coeff, T'), ...]`` with ``F_T = sum coeff * F_{T'}``; the
    tableaux returned may have decreasing columns.
    """
    sh = T.shape
    k = sh.k
    m = sh.n_bottom_singles
    top, bottom = T.top, T.bottom
    # bottom-only cells
    for a in range(m - 1):
        if bottom[a] > bottom[a + 1]:
            return [(1, T.swap(bottom[a], bottom[a + 1]))]
    if k and m and bottom[m - 1] > bottom[m]:
        # last bottom single above the first pair's bottom cell
        s, j1, i1 = bottom[m - 1], bottom[m], top[0]
        return [(1, T.swap(s, j1)), (1, T.swap(i1, s))]
    for b in range(k - 1):
        ib, ib1 = top[b], top[b + 1]
        jb, jb1 = bottom[m + b], bottom[m + b + 1]
        if ib > ib1:
            return [(1, T.swap(ib1, jb)), (1, T.swap(ib1, ib))]
        if jb > jb1:
            return [(1, T.swap(ib1, jb)), (1, T.swap(jb1, jb))]
    if k and sh.d > k and top[k - 1] > top[k]:
        ik, ik1, jk = top[k - 1], top[k], bottom[m + k - 1]
        return [(1, T.swap(ik1, ik)), (1, T.swap(ik1, jk))]
    for a in range(k, sh.d - 1):
        if top[a] > top[a + 1]:
            return [(1, T.swap(top[a], top[a + 1]))]
    raise AssertionError(f"no descent found in {T}")  # pragma: no cover


def _straighten_int(T: Tableau, memo: dict, limit: int, depth: int = 0) -> dict:
    """Integer coordinates of ``F_T`` for a column-sorted ``T``."""
    if T in memo:
        return memo[T]
    if depth > limit:
        raise NonTermination(f"straightening exceeded depth {limit} at {T}")
    if is_standard(T):
        res = {T: 1}
    else:
        res: dict = {}
        for c, T2 in _rewrite(T):
            T2s, sign = T2.column_sorted()
            for S, v in _straighten_int(T2s, memo, limit, depth + 1).items():
                res[S] = res.get(S, 0) + c * sign * v
        res = {S: v for S, v in res.items() if v}
    memo[T] = res
    return res


_MEMOS: dict = {}


def straighten_integer(T: Tableau) -> dict:
    """Integer straightening coefficients, valid over every field."""
    Ts, sign = T.column_sorted()
    memo = _MEMOS.setdefault(T.shape, {})
    sh = T.shape
    limit = factorial(sh.n) // max(1, 2 ** sh.k)
    res = _straighten_int(Ts, memo, limit)
    return {S: sign * v for S, v in res.items()}


def straighten(T: Tableau, field: FieldSpec = QQ) -> SpechtVector:
    coords = {}
    for S, v in straighten_integer(T).items():
        c = field(v)
        if c != 0:
            coords[S] = c
    return SpechtVector(T.shape, field, coords)


def straighten_by_solving(T: Tableau, field: FieldSpec = QQ) -> SpechtVector:
    """Independent route: solve ``F_T = sum c_S F_S`` against the standard basis."""
    from .linalg import rref_mod_p, rref_q

    B = module_basis(T.shape, field)
    idx = squarefree_index(T.shape.n, T.shape.d, T.shape.offset)
    rhs = coefficient_vector(specht_polynomial(T, field), idx)
    aug = [row + [r] for row, r in zip(B.matrix.rows, rhs)]
    ncols = len(B) + 1
    if field.p:
        import numpy as np

        R, piv = rref_mod_p(np.array(aug, dtype=np.int64).reshape(len(aug), ncols), field.p)
        R = [[int(x) for x in r] for r in R[: len(piv)]]
    else:
        R, piv = rref_q(aug, ncols)
    if len(B) in piv:
        raise ShapeMismatch("polynomial not in the span of the standard basis")
    coords = {}
    for row, pc in zip(R, piv):
        c = field(row[-1])
        if c != 0:
            coords[B.tableaux[pc]] = c
    return SpechtVector(T.shape, field, coords)


# ---------------------------------------------------------------------------
# structural maps


def phi_images(n: int, field: FieldSpec = QQ) -> list:
    xn = Polynomial.var(field, n, n)
    return [xn - Polynomial.var(field, n, i) for i in range(1, n)] + [xn]


def phi_map(f: Polynomial, n: int | None = None) -> Polynomial:
    """Substitute ``x_i -> x_n - x_i`` for ``i < n`` and fix ``x_n``."""
    n = f.nvars if n is None else n
    if n != f.nvars:
        f = f.embed(n)
    return substitute(f, phi_images(n, f.field))


def delete_largest(T: Tableau) -> Tableau:
    """For ``T`` of shape (n,k,k) with ``n`` in the last bottom cell, remove
    ``n``: the result has shape (n-1, k-1, k)."""
    sh = T.shape
    n = sh.offset + sh.n
    if not T.bottom or T.bottom[-1] != n or sh.k != sh.d:
        raise SupportViolation(f"{n} is not the last bottom cell of {T}")
    new = ShiftedShape(sh.n - 1, sh.k - 1, sh.k, sh.offset)
    return Tableau(new, T.top, T.bottom[:-1])


def restrict_tableau(T: Tableau, m: int) -> Tableau:
    sh = T.shape
    lead = tuple(range(sh.offset + 1, sh.offset + m + 1))
    if m > sh.d or T.top[:m] != lead:
        raise SupportViolation(f"{T} does not carry {list(lead)} at the start of its top row")
    new = ShiftedShape(sh.n - m, max(sh.k - m, 0), sh.d - m, sh.offset + m)
    return Tableau(new, T.top[m:], T.bottom)


def restrict_support(v: SpechtVector, m: int) -> SpechtVector:
    """Delete the labels ``1..m`` (shifted by the offset) from every tableau."""
    if m == 0:
        return v
    sh = v.shape
    if m > sh.d:
        raise SupportViolation(f"m={m} exceeds d={sh.d}")
    new_shape = ShiftedShape(sh.n - m, max(sh.k - m, 0), sh.d - m, sh.offset + m)
    coords = {}
    for T, c in v.coords.items():
        if c == 0:
            continue
        coords[restrict_tableau(T, m)] = c
    return SpechtVector(new_shape, v.field, coords)


def supported_tableaux(shape: ShiftedShape, m: int) -> list:
    """Standard tableaux whose top row begins with the m smallest labels."""
    lead = tuple(range(shape.offset + 1, shape.offset + m + 1))
    return [T for T in enumerate_standard(shape) if T.top[:m] == lead]


def act(perm: dict, T: Tableau) -> Tableau:
    """Relabel a tableau by a permutation given as a dict."""
    return Tableau(T.shape, tuple(perm.get(x, x) for x in T.top), tuple(perm.get(x, x) for x in T.bottom))


__all__ = [
    "specht_polynomial",
    "general_specht_polynomial",
    "module_basis",
    "SpechtModuleBasis",
    "SpechtVector",
    "straighten",
    "straighten_integer",
    "straighten_by_solving",
    "expand",
    "phi_map",
    "phi_images",
    "delete_largest",
    "restrict_support",
    "restrict_tableau",
    "supported_tableaux",
    "squarefree_index",
    "coefficient_vector",
    "act",
    "all_tableaux",
]
