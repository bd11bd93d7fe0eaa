"""The operators D, L, H on the square-free algebra and Lefschetz rank tests.

``A = F[x1..xn]/(x1^2..xn^2)`` has the i-subsets of ``1..n`` (in lexicographic
order) as a basis of ``A_i``.  ``L`` multiplies by ``x1+...+xn``, ``D`` is the
sum of partial derivatives and ``H`` scales ``A_i`` by ``n-2i``.  All three
have integer matrices, so the commutator checks are done in exact integer
arithmetic and reduced mod p afterwards.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .errors import CharacteristicTooSmall, DegreeOutOfRange, InvalidShape
from .fields import QQ, FieldSpec, binomial
from .linalg import (
    ExactMatrix,
    column_space_contains,
    column_space_intersection,
    in_column_space,
    matrix_kernel,
    matrix_rank,
    same_column_space,
    vectors_to_matrix,
)
from .poly import Polynomial, elementary_symmetric
from .specht import module_basis, specht_polynomial
from .tableaux import ShiftedShape, enumerate_standard


@lru_cache(maxsize=None)
def _subsets(n: int, i: int) -> tuple:
    if i < 0 or i > n:
        return ()
    return tuple(itertools.combinations(range(1, n + 1), i))


@lru_cache(maxsize=None)
def _index(n: int, i: int) -> dict:
    return {S: pos for pos, S in enumerate(_subsets(n, i))}


@lru_cache(maxsize=None)
def incidence(n: int, i: int, j: int) -> np.ndarray:
    """0/1 matrix with rows indexed by j-subsets and columns by i-subsets
    (i <= j), entry 1 when the column subset is contained in the row subset."""
    rows, cols = _subsets(n, j), _subsets(n, i)
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    cidx = _index(n, i)
    for r, S in enumerate(rows):
        for sub in itertools.combinations(S, i):
            out[r, cidx[sub]] = 1
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class SquareFreeAlgebra:
    n: int
    field: FieldSpec = QQ

    def dim(self, i: int) -> int:
        return binomial(self.n, i)

    def basis(self, i: int) -> tuple:
        return _subsets(self.n, i)

    def vector(self, f: Polynomial, i: int) -> list:
        """Coordinates of the degree-i part of f in A_i (non-square-free terms vanish)."""
        idx = _index(self.n, i)
        v = [self.field.zero] * len(idx)
        for e, c in f.terms.items():
            if sum(e) == i and all(a <= 1 for a in e):
                S = tuple(k + 1 for k, a in enumerate(e) if a)
                v[idx[S]] = self.field.add(v[idx[S]], c)
        return v

    def polynomial(self, v, i: int) -> Polynomial:
        terms = {}
        for S, c in zip(self.basis(i), v):
            if c != 0:
                e = [0] * self.n
                for k in S:
                    e[k - 1] = 1
                terms[tuple(e)] = self.field(c)
        return Polynomial(self.field, self.n, terms)


@dataclass(frozen=True)
class GradedOperator:
    algebra: SquareFreeAlgebra
    kind: str  # "D", "L", "H" or "L^m"
    degree: int
    power: int
    integer_matrix: np.ndarray = dc_field(repr=False, compare=False)

    @property
    def matrix(self) -> ExactMatrix:
        return _to_exact(self.integer_matrix, self.algebra.field)

    @property
    def target_degree(self) -> int:
        if self.kind == "D":
            return self.degree - 1
        if self.kind == "H":
            return self.degree
        return self.degree + self.power


def _to_exact(a: np.ndarray, field: FieldSpec) -> ExactMatrix:
    r, c = a.shape
    if field.p:
        rows = [[int(x) % field.p for x in row] for row in a]
    else:
        rows = [[field(int(x)) for x in row] for row in a]
    return ExactMatrix._trusted(field, rows, c)


def _int_operator(n: int, kind: str, degree: int, power: int = 1) -> np.ndarray:
    if kind == "D":
        src, tgt = _subsets(n, degree), _subsets(n, degree - 1)
        if not src or degree - 1 < 0:
            return np.zeros((len(tgt), len(src)), dtype=np.int64)
        return incidence(n, degree - 1, degree).T.copy()
    if kind == "H":
        m = len(_subsets(n, degree))
        return (n - 2 * degree) * np.eye(m, dtype=np.int64)
    if kind == "L":
        tgt = degree + power
        src_dim = len(_subsets(n, degree))
        if tgt > n:
            return np.zeros((0, src_dim), dtype=np.int64)
        # L^m on square-free monomials is m! times containment incidence
        return math.factorial(power) * incidence(n, degree, tgt)
    raise ValueError(f"unknown operator {kind!r}")


def operator_matrix(alg: SquareFreeAlgebra, kind: str, degree: int, power: int = 1) -> GradedOperator:
    """Matrix of D (A_i -> A_{i-1}), H (A_i -> A_i) or L^power (A_i -> A_{i+power})."""
    if not 0 <= degree <= alg.n:
        raise DegreeOutOfRange(f"degree {degree} outside 0..{alg.n}")
    if power < 0:
        raise DegreeOutOfRange("negative power of L")
    mat = _int_operator(alg.n, kind, degree, power)
    if alg.field.p:
        mat = mat % alg.field.p
    label = kind if (kind != "L" or power == 1) else f"L^{power}"
    return GradedOperator(alg, label, degree, power if kind == "L" else 1, mat)


def check_sl2_relations(alg: SquareFreeAlgebra) -> bool:
    """[D,L] = H, [H,D] = 2D, [H,L] = -2L on every graded piece."""
    n, p = alg.n, alg.field.p

    def red(a):
        return a % p if p else a

    def op(kind, i):
        if i < 0 or i > n:
            return None
        return _int_operator(n, kind, i)

    for i in range(n + 1):
        Li, Di, Hi = op("L", i), op("D", i), op("H", i)
        # [D, L] on A_i
        DL = _int_operator(n, "D", i + 1) @ Li if i + 1 <= n else np.zeros_like(Hi)
        LD = _int_operator(n, "L", i - 1) @ Di if i >= 1 else np.zeros_like(Hi)
        if not np.array_equal(red(DL - LD), red(Hi)):
            return False
        if i >= 1:
            HD = _int_operator(n, "H", i - 1) @ Di - Di @ Hi
            if not np.array_equal(red(HD), red(2 * Di)):
                return False
        if i + 1 <= n:
            HL = _int_operator(n, "H", i + 1) @ Li - Li @ Hi
            if not np.array_equal(red(HL), red(-2 * Li)):
                return False
    return True


def primitive_subspace(alg: SquareFreeAlgebra, k: int) -> list:
    """Basis (coordinate vectors in A_k) of ``ker(D) ∩ A_k``."""
    if not 0 <= k <= alg.n:
        raise DegreeOutOfRange(f"degree {k} outside 0..{alg.n}")
    if k == 0:
        return [[alg.field.one]]
    return matrix_kernel(operator_matrix(alg, "D", k).matrix)


def _rank(alg, kind, degree, power=1) -> int:
    return matrix_rank(operator_matrix(alg, kind, degree, power).matrix)


def has_wlp(n: int, field: FieldSpec = QQ) -> bool:
    """Does ``x1+...+xn`` give maximal rank maps ``A_i -> A_{i+1}`` in every degree?"""
    alg = SquareFreeAlgebra(n, field)
    for i in range(n):
        if _rank(alg, "L", i) != min(binomial(n, i), binomial(n, i + 1)):
            return False
    return True


def wlp_threshold_predicate(n: int, p: int) -> bool:
    return p == 0 or p >= (n + 3) // 2


def has_slp(n: int, field: FieldSpec = QQ) -> bool:
    """Is ``L^{n-2k}: A_k -> A_{n-k}`` bijective for every ``k <= n/2``?"""
    alg = SquareFreeAlgebra(n, field)
    for k in range(n // 2 + 1):
        if _rank(alg, "L", k, n - 2 * k) != binomial(n, k):
            return False
    return True


def slp_threshold_predicate(n: int, p: int) -> bool:
    return p == 0 or p >= n + 1


# ---------------------------------------------------------------------------
# Specht modules inside A


def specht_module_matrix(n: int, k: int, d: int, field: FieldSpec = QQ) -> ExactMatrix:
    """Columns: coordinates in A_d of the standard shifted Specht polynomials."""
    return module_basis(ShiftedShape(n, k, d), field).matrix


def _predicate_k(k: int, p: int) -> bool:
    return p == 0 or p >= k + 1


@dataclass
class DSurjectivityReport:
    n: int
    k: int
    field: FieldSpec
    surjective: dict  # i -> bool for i = 1..k
    dim_primitive: int
    dim_specht: int
    specht_equals_primitive: bool
    predicate: bool
    witness: Polynomial | None = None

    @property
    def consistent(self) -> bool:
        all_surj = all(self.surjective.values())
        top = self.surjective.get(self.k, True)
        return all_surj == top == self.specht_equals_primitive == self.predicate


def d_surjectivity_equiv(n: int, k: int, field: FieldSpec = QQ) -> DSurjectivityReport:
    if 2 * k > n or k < 0:
        raise InvalidShape(f"need 2k <= n, got n={n}, k={k}")
    alg = SquareFreeAlgebra(n, field)
    surj = {i: _rank(alg, "D", i) == binomial(n, i - 1) for i in range(1, k + 1)}
    P = primitive_subspace(alg, k)
    V = specht_module_matrix(n, k, k, field)
    Pm = vectors_to_matrix(field, P, binomial(n, k))
    equal = len(P) == V.rank() and column_space_contains(Pm, V)
    witness = None
    p = field.p
    if p and p <= k:
        # e_p(x1..x_{2p-1}) is primitive in characteristic p but not a Specht combination
        alpha = elementary_symmetric(p, range(1, 2 * p), n, field)
        a_vec = alg.vector(alpha, p)
        D = operator_matrix(alg, "D", p).matrix
        in_P = all(x == 0 for x in D.apply(a_vec))
        in_V = in_column_space(specht_module_matrix(n, p, p, field), a_vec)
        if in_P and not in_V:
            witness = alpha
    return DSurjectivityReport(n, k, field, surj, len(P), V.rank(), equal, _predicate_k(k, p), witness)


def sl2_string_identity(n: int, k: int, m: int, field: FieldSpec = QQ) -> bool:
    """``D(L^m a) = m (n-2k+1-m) L^{m-1} a`` for every a in a basis of P_k."""
    alg = SquareFreeAlgebra(n, field)
    P = primitive_subspace(alg, k)
    if not P:
        return True
    Pm = vectors_to_matrix(field, P, binomial(n, k))
    if m == 0:
        return (operator_matrix(alg, "D", k).matrix @ Pm).is_zero() if k else True
    if k + m > n:
        return True  # L^m a = 0 and the right side is L^{m-1} a scaled by m(n-2k+1-m)
    lhs_int = _int_operator(n, "D", k + m) @ _int_operator(n, "L", k, m)
    rhs_int = m * (n - 2 * k + 1 - m) * _int_operator(n, "L", k, m - 1)
    lhs = _to_exact(lhs_int, field) @ Pm
    rhs = _to_exact(rhs_int, field) @ Pm
    return lhs == rhs


@dataclass
class DecompositionReport:
    n: int
    k: int
    d: int
    field: FieldSpec
    summand_dims: dict  # i -> dim L^{d-i}(P_i)
    dim_specht: int
    direct: bool
    equals_sum: bool
    equals_kernel: bool
    explicit_bases_ok: bool

    @property
    def holds(self) -> bool:
        return self.direct and self.equals_sum and self.equals_kernel and self.explicit_bases_ok


def _complement_elementary(T, j: int, n: int, field) -> Polynomial:
    comp = [v for v in range(1, n + 1) if v not in T.support()]
    return elementary_symmetric(j, comp, n, field)


def primitive_decomposition(n: int, k: int, d: int, field: FieldSpec = QQ) -> DecompositionReport:
    ShiftedShape(n, k, d)  # validates
    if not slp_threshold_predicate(n, field.p):
        raise CharacteristicTooSmall(f"need p = 0 or p >= {n + 1}, got p = {field.p}")
    alg = SquareFreeAlgebra(n, field)
    dim_d = binomial(n, d)
    V = specht_module_matrix(n, k, d, field)
    # kernel of L^{n-k-d+1} on A_d
    K = vectors_to_matrix(field, matrix_kernel(operator_matrix(alg, "L", d, n - k - d + 1).matrix), dim_d)
    parts = []
    dims = {}
    explicit_ok = True
    for i in range(k, d + 1):
        P = primitive_subspace(alg, i)
        Pm = vectors_to_matrix(field, P, binomial(n, i))
        img = operator_matrix(alg, "L", i, d - i).matrix @ Pm if P else ExactMatrix.zeros(field, dim_d, 0)
        dims[i] = img.rank() if img.ncols else 0
        parts.append(img)
        if 2 * i <= n and d - i <= n - 2 * i:
            cols = []
            for T in enumerate_standard(ShiftedShape(n, i, i)):
                g = _complement_elementary(T, d - i, n, field) * specht_polynomial(T, field, n)
                cols.append(alg.vector(g, d))
            E = vectors_to_matrix(field, cols, dim_d)
            explicit_ok &= same_column_space(E, img) and E.rank() == len(cols)
        else:
            explicit_ok &= dims[i] == 0
    total = parts[0]
    for M in parts[1:]:
        total = total.hstack(M)
    total_rank = total.rank() if total.ncols else 0
    direct = total_rank == sum(dims.values())
    return DecompositionReport(
        n, k, d, field, dims, V.rank(), direct,
        same_column_space(V, total), same_column_space(V, K), explicit_ok,
    )


@dataclass
class RestrictionReport:
    n: int
    j: int
    k: int
    field: FieldSpec
    contained: bool
    equal: bool


def restriction_report(n: int, j: int, k: int, field: FieldSpec = QQ) -> RestrictionReport:
    """Compare ``V(j,k,k)`` with ``V(n,k,k) ∩ B_k`` where B uses x1..xj."""
    if not 2 * k <= j <= n:
        raise InvalidShape(f"need 2k <= j <= n, got n={n}, j={j}, k={k}")
    alg = SquareFreeAlgebra(n, field)
    dim = binomial(n, k)
    Vn = specht_module_matrix(n, k, k, field)
    small = [specht_polynomial(T, field, n) for T in enumerate_standard(ShiftedShape(j, k, k))]
    Vj = vectors_to_matrix(field, [alg.vector(f, k) for f in small], dim)
    idx = _index(n, k)
    Bcols = []
    for S in _subsets(j, k):
        v = [field.zero] * dim
        v[idx[S]] = field.one
        Bcols.append(v)
    B = vectors_to_matrix(field, Bcols, dim)
    inter = column_space_intersection(Vn, B)
    contained = column_space_contains(Vn, Vj) and column_space_contains(B, Vj)
    equal = contained and column_space_contains(Vj, inter)
    return RestrictionReport(n, j, k, field, contained, equal)


def restriction_identity(n: int, j: int, k: int, field: FieldSpec = QQ) -> bool:
    if not _predicate_k(k, field.p):
        raise CharacteristicTooSmall(f"need p = 0 or p >= {k + 1}, got p = {field.p}")
    return restriction_report(n, j, k, field).equal


__all__ = [
    "SquareFreeAlgebra",
    "GradedOperator",
    "operator_matrix",
    "check_sl2_relations",
    "primitive_subspace",
    "has_wlp",
    "wlp_threshold_predicate",
    "has_slp",
    "slp_threshold_predicate",
    "d_surjectivity_equiv",
    "DSurjectivityReport",
    "sl2_string_identity",
    "primitive_decomposition",
    "DecompositionReport",
    "restriction_identity",
    "restriction_report",
    "RestrictionReport",
    "incidence",
]
