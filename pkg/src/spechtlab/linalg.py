"""Exact dense linear algebra over Q and F_p.

Prime-field elimination runs on numpy ``int64`` arrays (all primes used here
are below 2**31, so a product of two residues fits).  Rational rank uses the
fraction-free Bareiss scheme on an integer-scaled copy, with a fast exit when
the rank modulo a large prime is already maximal (rank can only drop mod p).
Kernels over Q come from a reduced row echelon form on ``gmpy2.mpq`` entries.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from gmpy2 import mpq

from .errors import DimensionMismatch, FieldMismatch
from .fields import QQ, FieldSpec

_BIG_PRIME = 2147483647  # 2**31 - 1


class ExactMatrix:
    """A dense matrix of raw field elements, stored as a list of rows."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows: Sequence[Sequence], ncols: int | None = None):
        self.field = field
        self.rows = [[field(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix")

    @classmethod
    def _trusted(cls, field, rows, ncols):
        obj = cls.__new__(cls)
        obj.field = field
        obj.rows = rows
        obj.nrows = len(rows)
        obj.ncols = ncols
        return obj

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "ExactMatrix":
        return cls._trusted(field, [[field.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field: FieldSpec, cols: Sequence[Sequence], nrows: int | None = None):
        cols = list(cols)
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        rows = [[field(c[i]) for c in cols] for i in range(nrows)]
        return cls._trusted(field, rows, len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "ExactMatrix":
        if self.nrows == 0 or self.ncols == 0:
            return ExactMatrix.zeros(self.field, self.ncols, self.nrows)
        return ExactMatrix._trusted(self.field, [list(c) for c in zip(*self.rows)], self.nrows)

    def _same(self, other: "ExactMatrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        f = self.field
        if f.p:
            a = self.to_numpy() if self.nrows and self.ncols else None
            b = other.to_numpy() if other.nrows and other.ncols else None
            if a is None or b is None:
                return ExactMatrix.zeros(f, self.nrows, other.ncols)
            prod = _matmul_mod(a, b, f.p)
            return ExactMatrix._trusted(f, [[int(x) for x in r] for r in prod], other.ncols)
        cols = other.columns()
        rows = []
        for r in self.rows:
            nz = [(k, x) for k, x in enumerate(r) if x != 0]
            rows.append([sum((x * c[k] for k, x in nz), mpq(0)) for c in cols])
        return ExactMatrix._trusted(f, rows, other.ncols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        f = self.field
        return ExactMatrix._trusted(
            f, [[f.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __neg__(self):
        f = self.field
        return ExactMatrix._trusted(f, [[f.neg(a) for a in r] for r in self.rows], self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        f = self.field
        c = f(c)
        return ExactMatrix._trusted(f, [[f.mul(a, c) for a in r] for r in self.rows], self.ncols)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        f = self.field
        v = [f(x) for x in v]
        out = []
        for r in self.rows:
            s = f.zero
            for a, b in zip(r, v):
                if a != 0 and b != 0:
                    s = f.add(s, f.mul(a, b))
            out.append(s)
        return out

    def to_numpy(self) -> np.ndarray:
        if not self.field.p:
            raise FieldMismatch("numpy view only for prime fields")
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same(other)
        if self.nrows != other.nrows:
            raise DimensionMismatch("row counts differ")
        return ExactMatrix._trusted(
            self.field, [r + s for r, s in zip(self.rows, other.rows)], self.ncols + other.ncols
        )

    def rank(self) -> int:
        return matrix_rank(self)

    def kernel(self) -> list:
        return matrix_kernel(self)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field})"


# ---------------------------------------------------------------------------
# prime-field kernels


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if p < 2**20:
        # rows of length <= 2**23 keep the int64 accumulator safe
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = (out + np.outer(a[:, k], b[k, :]) % p) % p
    return out


def rref_mod_p(a: np.ndarray, p: int):
    """Reduced row echelon form mod ``p``; returns ``(R, pivot_columns)``."""
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _rank_mod_p(rows, nrows, ncols, p) -> int:
    if nrows == 0 or ncols == 0:
        return 0
    a = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64)
    return len(rref_mod_p(a, p)[1])


# ---------------------------------------------------------------------------
# rational kernels


def _integer_rows(rows):
    out = []
    for r in rows:
        den = 1
        for x in r:
            if x != 0:
                den = den * int(x.denominator) // math.gcd(den, int(x.denominator))
        out.append([int(x * den) for x in r])
    return out


def bareiss_rank(int_rows) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    a = [list(r) for r in int_rows if any(r)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            ri = a[i]
            f = ri[c]
            if f == 0:
                a[i] = [(pv * x) // prev for x in ri]
            else:
                a[i] = [(pv * x - f * y) // prev for x, y in zip(ri, pr)]
        prev = pv
        r += 1
    return r


def rref_q(rows, ncols):
    """Reduced row echelon form over Q on mpq entries; returns ``(R, pivots)``."""
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        pr = [x * inv for x in a[r]]
        a[r] = pr
        nzc = [j for j in range(c, ncols) if pr[j] != 0]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f != 0:
                    ri = a[i]
                    for j in nzc:
                        ri[j] = ri[j] - f * pr[j]
        pivots.append(c)
        r += 1
    return a[:r], pivots


# ---------------------------------------------------------------------------
# public API


def matrix_rank(M: ExactMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    p = M.field.p
    if p:
        return len(rref_mod_p(M.to_numpy(), p)[1])
    int_rows = _integer_rows(M.rows)
    full = min(M.nrows, M.ncols)
    # rank mod a prime never exceeds the rational rank
    if _rank_mod_p(int_rows, M.nrows, M.ncols, _BIG_PRIME) == full:
        return full
    return bareiss_rank(int_rows)


def _rref(M: ExactMatrix):
    if M.field.p:
        R, piv = rref_mod_p(M.to_numpy(), M.field.p)
        return [[int(x) for x in row] for row in R[: len(piv)]], piv
    return rref_q(M.rows, M.ncols)


def matrix_kernel(M: ExactMatrix) -> list:
    """A basis (list of raw vectors) of ``{v : M v = 0}``."""
    f = M.field
    n = M.ncols
    if M.nrows == 0 or n == 0:
        basis = []
        for j in range(n):
            v = [f.zero] * n
            v[j] = f.one
            basis.append(v)
        return basis
    R, pivots = _rref(M)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [f.zero] * n
        v[free] = f.one
        for row, pc in zip(R, pivots):
            v[pc] = f.neg(f(row[free]))
        basis.append(v)
    return basis


def in_column_space(M: ExactMatrix, v: Sequence) -> bool:
    if len(v) != M.nrows:
        raise DimensionMismatch(f"vector of length {len(v)} for {M.shape} matrix")
    col = ExactMatrix._trusted(M.field, [[M.field(x)] for x in v], 1)
    if M.ncols == 0:
        return all(x == 0 for x in col.column(0))
    return matrix_rank(M.hstack(col)) == matrix_rank(M)


def column_space_contains(M: ExactMatrix, N: ExactMatrix) -> bool:
    """Is every column of ``N`` in the column space of ``M``?"""
    if M.nrows != N.nrows:
        raise DimensionMismatch("ambient dimensions differ")
    if N.ncols == 0:
        return True
    if M.ncols == 0:
        return N.is_zero()
    return matrix_rank(M.hstack(N)) == matrix_rank(M)


def same_column_space(M: ExactMatrix, N: ExactMatrix) -> bool:
    return column_space_contains(M, N) and column_space_contains(N, M)


def column_space_basis(M: ExactMatrix) -> ExactMatrix:
    """Columns of ``M`` at pivot positions: a basis of its column space."""
    if M.nrows == 0 or M.ncols == 0:
        return ExactMatrix.zeros(M.field, M.nrows, 0)
    _, pivots = _rref(M)
    return ExactMatrix.from_columns(M.field, [M.column(j) for j in pivots], M.nrows)


def column_space_intersection(M: ExactMatrix, N: ExactMatrix) -> ExactMatrix:
    """A spanning set (as columns) for ``col(M) ∩ col(N)``."""
    if M.nrows != N.nrows:
        raise DimensionMismatch("ambient dimensions differ")
    f = M.field
    if M.ncols == 0 or N.ncols == 0:
        return ExactMatrix.zeros(f, M.nrows, 0)
    ker = matrix_kernel(M.hstack(-N))
    cols = []
    for v in ker:
        cols.append(M.apply(v[: M.ncols]))
    if not cols:
        return ExactMatrix.zeros(f, M.nrows, 0)
    return column_space_basis(ExactMatrix.from_columns(f, cols, M.nrows))


def vectors_to_matrix(field: FieldSpec, vectors: Sequence[Sequence], dim: int) -> ExactMatrix:
    """Stack vectors as the columns of a ``dim``-row matrix."""
    if not vectors:
        return ExactMatrix.zeros(field, dim, 0)
    return ExactMatrix.from_columns(field, vectors, dim)


__all__ = [
    "ExactMatrix",
    "matrix_rank",
    "matrix_kernel",
    "in_column_space",
    "column_space_contains",
    "same_column_space",
    "column_space_basis",
    "column_space_intersection",
    "vectors_to_matrix",
    "bareiss_rank",
    "rref_mod_p",
    "rref_q",
    "QQ",
]
