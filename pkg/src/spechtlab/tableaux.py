"""Shifted two-row shapes, their tableaux, dominance, and NE lattice paths.

A tableau of shape ``(n, k, d)`` has a top row ``i_1..i_d`` and a bottom row
``i_{d+1}..i_{n-k}, j_1..j_k``.  Reading the ``n-k`` columns from left to
right gives ``n-k-d`` bottom-only cells, then ``k`` two-cell columns
``(i_t over j_t)``, then ``d-k`` top-only cells.

Labels are ``offset+1 .. offset+n``; the offset is only nonzero for tableaux
produced by deleting the smallest labels (see :func:`spechtlab.specht.restrict_support`).
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    EndpointMismatch,
    InvalidEndpoints,
    InvalidFilling,
    InvalidShape,
    ParseError,
    ShapeMismatch,
)
from .fields import binomial


@dataclass(frozen=True, order=True)
class ShiftedShape:
    n: int
    k: int
    d: int
    offset: int = 0

    def __post_init__(self):
        n, k, d = self.n, self.k, self.d
        if not (0 <= k <= d <= n - k):
            raise InvalidShape(f"need 0 <= k <= d <= n-k, got (n,k,d)=({n},{k},{d})")
        if self.offset < 0:
            raise InvalidShape("negative label offset")

    @property
    def labels(self) -> range:
        return range(self.offset + 1, self.offset + self.n + 1)

    @property
    def ncols(self) -> int:
        return self.n - self.k

    @property
    def n_bottom_singles(self) -> int:
        return self.n - self.k - self.d

    @property
    def top_len(self) -> int:
        return self.d

    @property
    def bottom_len(self) -> int:
        return self.n - self.d

    def dimension(self) -> int:
        """Closed-form number of standard tableaux."""
        return binomial(self.n, self.d) - binomial(self.n, self.k - 1)

    def __str__(self):
        s = f"({self.n},{self.k},{self.d})"
        return s if not self.offset else s + f"+{self.offset}"


@dataclass(frozen=True, order=True)
class Tableau:
    shape: ShiftedShape
    top: tuple
    bottom: tuple

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        sh = self.shape
        if len(self.top) != sh.d or len(self.bottom) != sh.n - sh.d:
            raise InvalidFilling(
                f"rows of length {len(self.top)}/{len(self.bottom)} for shape {sh}"
            )
        if sorted(self.top + self.bottom) != list(sh.labels):
            raise InvalidFilling(f"entries are not a permutation of {sh.labels.start}..{sh.labels.stop - 1}")

    # structure --------------------------------------------------------------

    @property
    def pairs(self) -> tuple:
        """The two-cell columns ``(i_t, j_t)``, t = 1..k."""
        m = self.shape.n_bottom_singles
        return tuple(zip(self.top[: self.shape.k], self.bottom[m:]))

    @property
    def top_singles(self) -> tuple:
        return self.top[self.shape.k :]

    @property
    def bottom_singles(self) -> tuple:
        return self.bottom[: self.shape.n_bottom_singles]

    def columns(self) -> list:
        """Columns left to right; a two-cell column is ``(top, bottom)``."""
        return (
            [(b,) for b in self.bottom_singles]
            + [tuple(p) for p in self.pairs]
            + [(t,) for t in self.top_singles]
        )

    def support(self) -> frozenset:
        """Labels in the two-cell columns or in the top row."""
        return frozenset(self.top) | frozenset(j for _, j in self.pairs)

    def complement(self) -> tuple:
        """Labels outside the support: the bottom-only cells."""
        return tuple(sorted(self.bottom_singles))

    def swap(self, a: int, b: int) -> "Tableau":
        """The tableau ``(a, b) . T`` with the labels a and b exchanged."""
        t = {a: b, b: a}
        return Tableau(
            self.shape,
            tuple(t.get(x, x) for x in self.top),
            tuple(t.get(x, x) for x in self.bottom),
        )

    def column_sorted(self) -> tuple["Tableau", int]:
        """Swap each decreasing two-cell column; return the result and the sign."""
        sign = 1
        top = list(self.top)
        bottom = list(self.bottom)
        m = self.shape.n_bottom_singles
        for t in range(self.shape.k):
            if top[t] > bottom[m + t]:
                top[t], bottom[m + t] = bottom[m + t], top[t]
                sign = -sign
        return Tableau(self.shape, tuple(top), tuple(bottom)), sign

    def is_standard(self) -> bool:
        return is_standard(self)

    def to_text(self) -> str:
        return "top=" + ",".join(map(str, self.top)) + ";bottom=" + ",".join(map(str, self.bottom))

    def __str__(self):
        return f"[{' '.join(map(str, self.top))} / {' '.join(map(str, self.bottom))}]"


def parse_tableau(text: str, shape: ShiftedShape | None = None) -> Tableau:
    """Parse ``top=1,3;bottom=2,4``; the shape is inferred when ``k`` is given
    through ``shape`` or, failing that, taken to be as large as possible."""
    m = re.fullmatch(r"\s*top=([\d,\s]*);\s*bottom=([\d,\s]*)\s*", text)
    if not m:
        raise ParseError(f"bad tableau text {text!r}; expected top=...;bottom=...")

    def nums(s):
        s = s.strip()
        return tuple(int(x) for x in s.split(",") if x.strip()) if s else ()

    top, bottom = nums(m.group(1)), nums(m.group(2))
    if shape is None:
        n, d = len(top) + len(bottom), len(top)
        shape = ShiftedShape(n, min(d, n - d), d, offset=min(top + bottom, default=1) - 1)
    return Tableau(shape, top, bottom)


def _row_increasing(row) -> bool:
    return all(a < b for a, b in zip(row, row[1:]))


def is_standard(T: Tableau) -> bool:
    return (
        _row_increasing(T.top)
        and _row_increasing(T.bottom)
        and all(i < j for i, j in T.pairs)
    )


def tableau_from_top(shape: ShiftedShape, top: Sequence[int]) -> Tableau:
    """The row-increasing tableau with the given top row."""
    top = tuple(sorted(top))
    rest = tuple(x for x in shape.labels if x not in set(top))
    return Tableau(shape, top, rest)


def enumerate_standard(shape: ShiftedShape) -> list[Tableau]:
    """All standard tableaux, ordered lexicographically by top row."""
    out = []
    for top in itertools.combinations(shape.labels, shape.d):
        T = tableau_from_top(shape, top)
        if is_standard(T):
            out.append(T)
    return out


def all_tableaux(shape: ShiftedShape) -> Iterator[Tableau]:
    """Every filling of the shape (n! of them)."""
    d = shape.d
    for perm in itertools.permutations(shape.labels):
        yield Tableau(shape, perm[:d], perm[d:])


def column_filling_tableau(shape: ShiftedShape) -> Tableau:
    """Fill the columns left to right (top cell first): the dominance maximum."""
    labels = iter(shape.labels)
    top, bottom_singles, pair_bottoms = [], [], []
    for _ in range(shape.n_bottom_singles):
        bottom_singles.append(next(labels))
    for _ in range(shape.k):
        top.append(next(labels))
        pair_bottoms.append(next(labels))
    top.extend(labels)
    return Tableau(shape, tuple(top), tuple(bottom_singles + pair_bottoms))


# ---------------------------------------------------------------------------
# composition series and dominance


def composition_series(T: Tableau) -> list[list[int]]:
    """Matrix with ``n-k`` rows and ``n`` columns; entry (b, a) counts the
    labels ``<= a`` in column b (labels shifted to start at 1)."""
    return [list(r) for r in _gamma(T)]


@functools.lru_cache(maxsize=65536)
def _gamma(T: Tableau) -> tuple:
    off = T.shape.offset
    return tuple(
        tuple(sum(1 for c in col if c - off <= a) for a in range(1, T.shape.n + 1))
        for col in T.columns()
    )


def vector_dominated(v: Sequence[int], w: Sequence[int]) -> bool:
    """``v <| w``: every prefix sum of v is at most that of w."""
    sv = sw = 0
    for x, y in zip(v, w):
        sv += x
        sw += y
        if sv > sw:
            return False
    return True


def dominates(T: Tableau, T2: Tableau) -> bool:
    """True when ``T <| T2``, i.e. T2 dominates T in the composition order."""
    if T.shape != T2.shape:
        raise ShapeMismatch(f"{T.shape} vs {T2.shape}")
    g1, g2 = _gamma(T), _gamma(T2)
    for a in range(T.shape.n):
        s1 = s2 = 0
        for r1, r2 in zip(g1, g2):
            s1 += r1[a]
            s2 += r2[a]
            if s1 > s2:
                return False
    return True


# ---------------------------------------------------------------------------
# NE lattice paths


@dataclass(frozen=True)
class LatticePath:
    steps: str
    start: tuple = (0, 0)

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise ParseError(f"path steps must be N or E, got {self.steps!r}")

    @property
    def end(self) -> tuple:
        return (
            self.start[0] + self.steps.count("E"),
            self.start[1] + self.steps.count("N"),
        )

    def points(self) -> list[tuple]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    def max_excess(self) -> int:
        """Largest ``y - x`` along the path."""
        return max(y - x for x, y in self.points())

    def __str__(self):
        return self.steps


def path_to_tableau(P: LatticePath, shape: ShiftedShape) -> Tableau:
    """Step i carries label ``n-i+1``; N steps go to the top row."""
    n, d = shape.n, shape.d
    if len(P.steps) != n or P.steps.count("N") != d or P.start != (0, 0):
        raise EndpointMismatch(f"path ending at {P.end} does not fit shape {shape}")
    off = shape.offset
    top, bottom = [], []
    for i, s in enumerate(P.steps, start=1):
        (top if s == "N" else bottom).append(off + n - i + 1)
    return Tableau(shape, tuple(sorted(top)), tuple(sorted(bottom)))


def tableau_to_path(T: Tableau) -> LatticePath:
    top = set(T.top)
    off, n = T.shape.offset, T.shape.n
    return LatticePath("".join("N" if off + v in top else "E" for v in range(n, 0, -1)))


def path_is_subdiagonal(P: LatticePath, shape: ShiftedShape) -> bool:
    """Every point satisfies ``y - x <= d - k``."""
    return P.max_excess() <= shape.d - shape.k


def all_paths(end: tuple) -> Iterator[LatticePath]:
    e, nn = end
    for pos in itertools.combinations(range(e + nn), nn):
        s = ["E"] * (e + nn)
        for i in pos:
            s[i] = "N"
        yield LatticePath("".join(s))


def count_paths(start: tuple, end: tuple) -> int:
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        raise InvalidEndpoints(f"{end} is not north-east of {start}")
    return binomial(dx + dy, dy)


def count_subdiagonal(shape: ShiftedShape) -> int:
    """Paths from the origin to ``(n-d, d)`` staying on or below ``y = x + (d-k)``,
    counted by the reflection principle."""
    n, k, d = shape.n, shape.k, shape.d
    total = count_paths((0, 0), (n - d, d))
    # a path touching y = x + c + 1 reflects to one ending at (d - c - 1, n - d + c + 1)
    c = d - k
    rx, ry = d - c - 1, n - d + c + 1
    bad = count_paths((0, 0), (rx, ry)) if rx >= 0 and ry >= 0 else 0
    return total - bad


def count_touching(shape: ShiftedShape) -> int:
    """Closed-form number of paths to ``(n-d, d)`` that touch ``y = x + (d-k) + 1``."""
    return binomial(shape.n, shape.k - 1)
