"""A small Buchberger engine and the ideal operations built on it.

Polynomials inside the engine are plain dicts ``{exponent tuple: raw coeff}``.
Term orders are given by key functions (larger key = larger monomial).
Buchberger uses the sugar selection strategy together with the
Gebauer-Moeller pair update, which implements both of Buchberger's criteria.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ArityMismatch,
    FieldMismatch,
    NonHomogeneous,
    ZeroDimensional,
    ZeroDivisorInput,
)
from .fields import FieldSpec
from .poly import GREVLEX, MonomialOrder, Polynomial, elimination_order

# ---------------------------------------------------------------------------
# monomial helpers


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _sub(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def _add(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def _coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _neg_key(key):
    return tuple([-x for x in key])


# ---------------------------------------------------------------------------
# reduction


class _Reducer:
    """Division by a list of monic polynomials, with a heap over the terms
    of the working polynomial (lazy deletion)."""

    def __init__(self, field: FieldSpec, key):
        self.field = field
        self.key = key

    def reduce(self, f: dict, basis: Sequence[tuple], full: bool = True) -> dict:
        """``basis`` holds ``(lm, poly)`` pairs with monic ``poly``."""
        if not f or not basis:
            return dict(f)
        field, key = self.field, self.key
        p = field.p
        work = dict(f)
        heap = [(_neg_key(key(e)), e) for e in work]
        heapq.heapify(heap)
        out = {}
        while heap:
            _, e = heapq.heappop(heap)
            c = work.pop(e, None)
            if c is None:
                continue
            red = None
            for lm, g in basis:
                if _divides(lm, e):
                    red = (lm, g)
                    break
            if red is None:
                if not full:
                    out[e] = c
                    for e2, c2 in work.items():
                        out[e2] = c2
                    return out
                out[e] = c
                continue
            lm, g = red
            q = _sub(e, lm)
            for ge, gc in g.items():
                if ge == lm:
                    continue
                ne = _add(ge, q)
                old = work.get(ne)
                if p:
                    v = ((old or 0) - c * gc) % p
                else:
                    v = (old if old is not None else 0) - c * gc
                if v == 0:
                    if old is not None:
                        del work[ne]
                else:
                    if old is None:
                        heapq.heappush(heap, (_neg_key(key(ne)), ne))
                    work[ne] = v
        return out


def _leading(f: dict, key):
    return max(f, key=key)


def _monic(f: dict, lm, field: FieldSpec) -> dict:
    c = f[lm]
    if c == 1:
        return f
    inv = field.inv(c)
    return {e: field.mul(v, inv) for e, v in f.items()}


def _weighted_deg(e, weights):
    if weights is None:
        return sum(e)
    return sum(a * w for a, w in zip(e, weights))


def _sugar(f: dict, weights) -> int:
    return max(_weighted_deg(e, weights) for e in f)


# ---------------------------------------------------------------------------
# Buchberger


def buchberger(polys: Iterable[dict], field: FieldSpec, order: MonomialOrder, nvars: int,
               weights: Sequence[int] | None = None) -> list[dict]:
    """Reduced Groebner basis (list of monic dicts, sorted by leading term descending)."""
    key = order.keyfunc(nvars)
    red = _Reducer(field, key)
    polys_in = [dict(f) for f in polys if f]
    if not polys_in:
        return []
    one = tuple([0] * nvars)

    # each basis element: (lm, poly, sugar)
    basis: list = []
    active: list = []  # indices into basis
    pairs: list = []  # heap of (sugar, lcm key, i, j)

    def lm_of(i):
        return basis[i][0]

    def update(h: int):
        nonlocal active, pairs
        lh = lm_of(h)
        C = list(active)
        D = []
        # pairs (h, g): drop those whose lcm is a proper multiple of another's
        while C:
            g1 = C.pop()
            l1 = _lcm(lh, lm_of(g1))
            if _coprime(lh, lm_of(g1)):
                D.append(g1)
                continue
            dominated = False
            for g2 in itertools.chain(C, D):
                if _divides(_lcm(lh, lm_of(g2)), l1):
                    dominated = True
                    break
            if not dominated:
                D.append(g1)
        E = [g for g in D if not _coprime(lh, lm_of(g))]
        kept = []
        for item in pairs:
            _, _, i, j, lij = item
            if _divides(lh, lij) and _lcm(lm_of(i), lh) != lij and _lcm(lh, lm_of(j)) != lij:
                continue
            kept.append(item)
        for g in E:
            lij = _lcm(lh, lm_of(g))
            s = max(basis[h][2] + _weighted_deg(_sub(lij, lh), weights),
                    basis[g][2] + _weighted_deg(_sub(lij, lm_of(g)), weights))
            kept.append((s, key(lij), g, h, lij))
        heapq.heapify(kept)
        pairs = kept
        active = [g for g in active if not _divides(lh, lm_of(g))] + [h]

    def reducers():
        return [(basis[i][0], basis[i][1]) for i in active]

    # seed with the inputs, smallest sugar first
    polys_in.sort(key=lambda f: (_sugar(f, weights), key(_leading(f, key))))
    for f in polys_in:
        f = red.reduce(f, reducers(), full=False)
        if not f:
            continue
        lm = _leading(f, key)
        if lm == one:
            return [{one: field.one}]
        basis.append((lm, _monic(f, lm, field), _sugar(f, weights)))
        update(len(basis) - 1)

    while pairs:
        s, _, i, j, lij = heapq.heappop(pairs)
        (li, fi, _), (lj, fj, _) = basis[i], basis[j]
        # S-polynomial of monic fi, fj
        qi, qj = _sub(lij, li), _sub(lij, lj)
        sp: dict = {}
        p = field.p
        for e, c in fi.items():
            if e == li:
                continue
            sp[_add(e, qi)] = c
        for e, c in fj.items():
            if e == lj:
                continue
            ne = _add(e, qj)
            v = sp.get(ne, 0) - c
            if p:
                v %= p
            if v == 0:
                sp.pop(ne, None)
            else:
                sp[ne] = v
        if not sp:
            continue
        h = red.reduce(sp, reducers(), full=False)
        if not h:
            continue
        lm = _leading(h, key)
        if lm == one:
            return [{one: field.one}]
        basis.append((lm, _monic(h, lm, field), s))
        update(len(basis) - 1)

    # minimal basis, then tail reduction
    G = [basis[i] for i in active]
    G = [g for g in G if not any(h is not g and _divides(h[0], g[0]) and (h[0] != g[0] or id(h) < id(g)) for h in G)]
    out = []
    for idx, (lm, g, _) in enumerate(G):
        others = [(h[0], h[1]) for h in G if h is not G[idx]]
        rest = {e: c for e, c in g.items() if e != lm}
        tail = red.reduce(rest, others, full=True)
        tail[lm] = field.one
        out.append(tail)
    out.sort(key=lambda f: key(_leading(f, key)), reverse=True)
    return out


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Generators plus a per-order cache of reduced Groebner bases."""

    def __init__(self, field: FieldSpec, nvars: int, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.field != field:
                raise FieldMismatch(f"{g.field} generator in an ideal over {field}")
            if g.nvars != nvars:
                raise ArityMismatch(f"generator in {g.nvars} variables, ideal in {nvars}")
            if g:
                gens.append(g)
        self.field = field
        self.nvars = nvars
        self.generators = tuple(gens)
        self._gb: dict = {}

    @classmethod
    def from_basis(cls, field, nvars, basis, order: MonomialOrder = GREVLEX) -> "Ideal":
        I = cls(field, nvars, basis)
        I._gb[order] = tuple(basis)
        return I

    def groebner(self, order: MonomialOrder = GREVLEX) -> tuple:
        gb = self._gb.get(order)
        if gb is None:
            raw = buchberger((g.terms for g in self.generators), self.field, order, self.nvars)
            gb = tuple(Polynomial._raw(self.field, self.nvars, f) for f in raw)
            self._gb[order] = gb
        return gb

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        _check_same(self, other)
        return Ideal(self.field, self.nvars, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _check_same(self, other)
        return Ideal(self.field, self.nvars, [f * g for f in self.generators for g in other.generators])

    def contains(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def __contains__(self, f):
        return self.contains(f)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.nvars} vars over {self.field})"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _check_same(I: Ideal, J: Ideal):
    if I.field != J.field:
        raise FieldMismatch(f"{I.field} vs {J.field}")
    if I.nvars != J.nvars:
        raise ArityMismatch(f"{I.nvars} vs {J.nvars} variables")


def ideal(generators: Sequence[Polynomial], field: FieldSpec | None = None, nvars: int | None = None) -> Ideal:
    gens = list(generators)
    if field is None:
        field = gens[0].field
    if nvars is None:
        nvars = gens[0].nvars
    return Ideal(field, nvars, gens)


def unit_ideal(field: FieldSpec, nvars: int) -> Ideal:
    return Ideal(field, nvars, [Polynomial.constant(field, nvars, 1)])


def maximal_ideal(field: FieldSpec, nvars: int) -> Ideal:
    return Ideal(field, nvars, [Polynomial.var(field, nvars, i) for i in range(1, nvars + 1)])


def groebner_basis(I: Ideal, order: MonomialOrder = GREVLEX) -> tuple:
    return I.groebner(order)


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder = GREVLEX) -> Polynomial:
    if f.field != I.field:
        raise FieldMismatch(f"{f.field} polynomial against an ideal over {I.field}")
    if f.nvars != I.nvars:
        raise ArityMismatch(f"{f.nvars} vs {I.nvars} variables")
    key = order.keyfunc(I.nvars)
    basis = [(_leading(g.terms, key), g.terms) for g in I.groebner(order)]
    out = _Reducer(I.field, key).reduce(f.terms, basis, full=True)
    return Polynomial._raw(I.field, I.nvars, out)


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    return normal_form(f, I).is_zero()


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """Is ``J ⊆ I``?"""
    _check_same(I, J)
    return all(ideal_member(g, I) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check_same(I, J)
    a, b = I.groebner(), J.groebner()
    return len(a) == len(b) and all(f == g for f, g in zip(a, b))


def first_non_member(I: Ideal, J: Ideal):
    """A generator of ``J`` outside ``I``, or None."""
    _check_same(I, J)
    for g in J.groebner():
        if not ideal_member(g, I):
            return g
    return None


# ---------------------------------------------------------------------------
# elimination-based operations


def _lift(f: Polynomial, extra_front: int = 1) -> Polynomial:
    """Embed into a ring with ``extra_front`` new variables placed first."""
    return f.embed(f.nvars + extra_front, [i + extra_front for i in range(f.nvars)])


def _drop_front(f: Polynomial, k: int, nvars: int) -> Polynomial:
    return Polynomial._raw(f.field, nvars, {e[k:]: c for e, c in f.terms.items()})


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` as the t-free part of ``t I + (1-t) J``."""
    _check_same(I, J)
    field, n = I.field, I.nvars
    if I.is_zero() or J.is_zero():
        return Ideal(field, n, [])
    N = n + 1
    t = Polynomial.var(field, N, 1)
    one_minus_t = Polynomial.constant(field, N, 1) - t
    gens = [t * _lift(g) for g in I.groebner()] + [one_minus_t * _lift(g) for g in J.groebner()]
    order = elimination_order([0])
    weights = [0] + [1] * n
    raw = buchberger((g.terms for g in gens), field, order, N, weights=weights)
    kept = [Polynomial._raw(field, n, {e[1:]: c for e, c in f.items()}) for f in raw if all(e[0] == 0 for e in f)]
    out = Ideal(field, n, kept)
    return out


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    ideals = list(ideals)
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J)
    return acc


def exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    """``g / f`` when f divides g exactly (raises ValueError otherwise)."""
    field = g.field
    key = GREVLEX.keyfunc(g.nvars)
    lf = _leading(f.terms, key)
    inv = field.inv(f.terms[lf])
    rem = dict(g.terms)
    q: dict = {}
    while rem:
        lr = _leading(rem, key)
        if not _divides(lf, lr):
            raise ValueError("inexact division")
        m = _sub(lr, lf)
        c = field.mul(rem[lr], inv)
        q[m] = c
        for e, v in f.terms.items():
            ne = _add(e, m)
            nv = field.sub(rem.get(ne, field.zero), field.mul(c, v))
            if nv == 0:
                rem.pop(ne, None)
            else:
                rem[ne] = nv
    return Polynomial._raw(field, g.nvars, q)


def colon(I: Ideal, f: Polynomial | Ideal) -> Ideal:
    """``I : f`` for a polynomial, or ``I : J`` for an ideal (intersection over generators)."""
    if isinstance(f, Ideal):
        _check_same(I, f)
        if f.is_zero():
            return unit_ideal(I.field, I.nvars)
        return intersect_all([colon(I, g) for g in f.generators])
    if f.field != I.field:
        raise FieldMismatch(f"{f.field} vs {I.field}")
    if f.is_zero():
        raise ZeroDivisorInput("colon by the zero polynomial")
    if I.is_zero():
        return I
    K = intersect(I, Ideal(I.field, I.nvars, [f]))
    return Ideal(I.field, I.nvars, [exact_divide(g, f) for g in K.groebner()])


def saturate(I: Ideal, f: Polynomial | Ideal, max_steps: int = 64) -> Ideal:
    """``I : f^∞`` by iterating colons until the ideal stabilizes."""
    cur = I
    for _ in range(max_steps):
        nxt = colon(cur, f)
        if ideal_equal(nxt, cur):
            return cur
        cur = nxt
    raise RuntimeError("saturation did not stabilize")  # pragma: no cover


def saturate_max(I: Ideal) -> Ideal:
    """``I : m^∞`` with m the ideal of all variables."""
    return saturate(I, maximal_ideal(I.field, I.nvars))


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """``f ∈ √I`` iff ``1 ∈ I + (1 - y f)`` with a new variable y."""
    if f.field != I.field:
        raise FieldMismatch(f"{f.field} vs {I.field}")
    if f.is_zero():
        return True
    n = I.nvars
    N = n + 1
    y = Polynomial.var(I.field, N, N)
    gens = [g.embed(N) for g in I.generators] + [Polynomial.constant(I.field, N, 1) - y * f.embed(N)]
    raw = buchberger((g.terms for g in gens), I.field, GREVLEX, N)
    return len(raw) == 1 and all(not any(e) for e in raw[0])


# ---------------------------------------------------------------------------
# Hilbert series


def _hs_numerator(gens: frozenset, n: int, memo: dict) -> tuple:
    """Numerator N(t) of the Hilbert series ``N(t)/(1-t)^n`` of ``R/(gens)``."""
    if gens in memo:
        return memo[gens]
    g = list(gens)
    if not g:
        res = (1,)
    elif any(not any(e) for e in g):
        res = (0,)
    else:
        # pairwise coprime generators: product of (1 - t^deg)
        supports = [frozenset(i for i, a in enumerate(e) if a) for e in g]
        if all(a.isdisjoint(b) for a, b in itertools.combinations(supports, 2)):
            res = (1,)
            for e in g:
                res = _poly_mul(res, _one_minus_t_pow(sum(e)))
        else:
            # pivot on the variable occurring in the most generators
            counts = [0] * n
            for s in supports:
                for i in s:
                    counts[i] += 1
            i = max(range(n), key=lambda j: counts[j])
            xi = tuple(1 if j == i else 0 for j in range(n))
            plus = _minimalize(g + [xi])
            quot = _minimalize([tuple(a - 1 if j == i and a > 0 else a for j, a in enumerate(e)) for e in g])
            res = _poly_add(_hs_numerator(plus, n, memo), (0,) + _hs_numerator(quot, n, memo))
    memo[gens] = res
    return res


def _minimalize(gens) -> frozenset:
    gens = sorted(set(gens), key=sum)
    out = []
    for e in gens:
        if not any(_divides(m, e) for m in out):
            out.append(e)
    return frozenset(out)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_add(a, b):
    m = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)]
    return _trim(out)


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


def _one_minus_t_pow(d):
    out = [0] * (d + 1)
    out[0] = 1
    out[d] -= 1
    return tuple(out)


def _divide_one_minus_t(a):
    """Synthetic division by (1 - t); assumes a(1) == 0."""
    # a = (1 - t) q  =>  q_i = sum_{j<=i} a_j
    q = []
    s = 0
    for x in a[:-1]:
        s += x
        q.append(s)
    return _trim(q) if q else (0,)


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple  # coefficients of t^0, t^1, ...
    krull_dim: int
    nvars: int

    @property
    def height(self) -> int:
        return self.nvars - self.krull_dim

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    def series_coefficients(self, upto: int) -> list:
        """Hilbert function values ``dim (R/I)_i`` for i = 0..upto."""
        from math import comb

        d = self.krull_dim
        out = []
        for i in range(upto + 1):
            if d == 0:
                out.append(self.numerator[i] if i < len(self.numerator) else 0)
            else:
                out.append(sum(c * comb(i - j + d - 1, d - 1) for j, c in enumerate(self.numerator) if j <= i))
        return out

    def numerator_str(self) -> str:
        terms = []
        for i, c in enumerate(self.numerator):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            body = coef + ("*" if coef and mono else "") + mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def leading_monomials(I: Ideal, order: MonomialOrder = GREVLEX) -> list:
    key = order.keyfunc(I.nvars)
    return [_leading(g.terms, key) for g in I.groebner(order)]


def hilbert_data(I: Ideal, order: MonomialOrder = GREVLEX) -> HilbertData:
    if not I.is_homogeneous():
        raise NonHomogeneous("Hilbert series needs a homogeneous ideal")
    n = I.nvars
    lms = leading_monomials(I, order)
    num = _hs_numerator(_minimalize(lms), n, {})
    dim = n
    if num == (0,):
        return HilbertData((0,), -1, n)
    while dim > 0 and sum(num) == 0:
        num = _divide_one_minus_t(num)
        dim -= 1
    return HilbertData(num, dim, n)


# ---------------------------------------------------------------------------
# Cohen-Macaulay certificate and the embedded maximal prime probe


@dataclass(frozen=True)
class CMVerdict:
    certified: bool
    sequence: tuple  # the regular sequence found (Polynomials), when certified
    krull_dim: int
    attempts: int

    @property
    def label(self) -> str:
        return "CertifiedCM" if self.certified else "Inconclusive"


def _partitions(deg: int, parts: int, largest: int | None = None):
    if deg == 0:
        yield ()
        return
    if parts == 0:
        return
    top = deg if largest is None else min(deg, largest)
    for a in range(top, 0, -1):
        for rest in _partitions(deg - a, parts - 1, a):
            yield (a,) + rest


def _monomial_symmetric(lam: tuple, n: int) -> set:
    """Exponent vectors of the monomial symmetric function m_lam in n variables."""
    padded = lam + (0,) * (n - len(lam))
    return set(itertools.permutations(padded))


def _candidate_forms(field: FieldSpec, n: int, trials: int, seed: int):
    """Coordinate forms, symmetric forms of degree at most 3, forms with
    coefficients in {1,-1} on growing supports, then seeded random forms.  Over a finite field the random phase
    mixes in quadrics, and uses only quadrics once every linear form has been
    seen: a small field may have no linear system of parameters at all."""
    count = 0
    seen = set()

    def emit(terms):
        nonlocal count
        f = Polynomial(field, n, terms)
        if not f or f in seen:
            return None
        seen.add(f)
        count += 1
        return f

    def unit(i):
        e = [0] * n
        e[i] = 1
        return tuple(e)

    for i in reversed(range(n)):
        f = emit({unit(i): field.one})
        if f is not None:
            yield f
    # symmetric forms: the ideals of interest are S_n-stable
    coeffs = range(field.p) if field.p and field.p <= 3 else (0, 1)
    for deg in (1, 2, 3):
        mons = [_monomial_symmetric(lam, n) for lam in _partitions(deg, n)]
        for cs in itertools.product(coeffs, repeat=len(mons)):
            terms = {}
            for c, m in zip(cs, mons):
                for e in m:
                    terms[e] = field(c)
            f = emit(terms)
            if f is not None:
                yield f
    structured = trials // 2  # leave the rest of the budget for random forms
    for size in range(2, n + 1):
        for supp in itertools.combinations(range(n), size):
            for signs in itertools.product((1, -1), repeat=size - 1):
                if count >= structured:
                    break
                terms = {unit(supp[0]): field.one}
                for i, s in zip(supp[1:], signs):
                    terms[unit(i)] = field(s)
                f = emit(terms)
                if f is not None:
                    yield f
    rng = random.Random(seed)
    span = field.p if field.p else 7
    n_linear = field.p ** n - 1 if field.p else None
    draws = 0
    while count < trials and draws < 20 * trials:
        draws += 1
        linear_left = n_linear is None or sum(1 for f in seen if f.degree() == 1) < n_linear
        quad = field.p and (not linear_left or count % 2 == 1)
        terms = {}
        if quad:
            for i in range(n):
                for j in range(i, n):
                    e = [0] * n
                    e[i] += 1
                    e[j] += 1
                    terms[tuple(e)] = field(rng.randrange(span))
        else:
            for i in range(n):
                terms[unit(i)] = field(rng.randrange(-span, span + 1) if not field.p else rng.randrange(span))
        f = emit(terms)
        if f is not None:
            yield f


def is_regular_on(J: Ideal, f: Polynomial) -> bool:
    """Is the homogeneous ``f`` a nonzerodivisor on ``R/J``?

    Uses ``HS(R/(J+f)) = (1 - t^deg f) HS(R/J)``, which holds exactly when
    ``(J : f) = J``.
    """
    a = hilbert_data(J)
    b = hilbert_data(J + Ideal(J.field, J.nvars, [f]))
    deg = f.degree()
    # compare b.numerator/(1-t)^b.dim with (1-t^deg) a.numerator/(1-t)^a.dim
    left = b.numerator
    for _ in range(a.krull_dim - b.krull_dim):
        left = _poly_mul(left, (1, -1))
    if b.krull_dim > a.krull_dim:
        return False
    right = _poly_mul(a.numerator, _one_minus_t_pow(deg))
    return _trim(left) == _trim(right)


def cm_certify(I: Ideal, trials: int = 200, seed: int = 0, verify_colon: bool = False,
               branch: int = 4) -> CMVerdict:
    """Search for a homogeneous system of parameters that is a regular sequence.

    Depth-first: at each level up to ``branch`` regular candidates are tried
    before backing up.  Success proves ``R/I`` Cohen-Macaulay.  Failure is
    reported as Inconclusive, never as "not Cohen-Macaulay".
    """
    if not I.is_homogeneous():
        raise NonHomogeneous("cm_certify needs a homogeneous ideal")
    hd = hilbert_data(I)
    d = hd.krull_dim
    if d <= 0:
        return CMVerdict(True, (), max(d, 0), 0)
    attempts = 0

    def search(J: Ideal, level: int):
        nonlocal attempts
        if level == d:
            return []
        used = 0
        for f in _candidate_forms(I.field, I.nvars, trials, seed):
            attempts += 1
            if not is_regular_on(J, f):
                continue
            if verify_colon and not ideal_equal(colon(J, f), J):
                continue
            rest = search(J + Ideal(I.field, I.nvars, [f]), level + 1)
            if rest is not None:
                return [f] + rest
            used += 1
            if used >= branch:
                return None
        return None

    seq = search(I, 0)
    if seq is None:
        return CMVerdict(False, (), d, attempts)
    return CMVerdict(True, tuple(seq), d, attempts)


@dataclass(frozen=True)
class EmbeddedPrimeVerdict:
    associated: bool
    witness: Polynomial | None  # an element of (I : m) outside I

    @property
    def label(self) -> str:
        return "MaxIdealAssociated" if self.associated else "NotAssociated"


def embedded_max_prime(I: Ideal) -> EmbeddedPrimeVerdict:
    """Is the homogeneous maximal ideal an associated prime of a positive-dimensional I?

    The maximal ideal is associated exactly when ``I : m != I``.
    """
    if not I.is_homogeneous():
        raise NonHomogeneous("embedded_max_prime needs a homogeneous ideal")
    hd = hilbert_data(I)
    if hd.krull_dim <= 0:
        raise ZeroDimensional("the maximal ideal is the only prime of a 0-dimensional ideal")
    C = colon(I, maximal_ideal(I.field, I.nvars))
    w = first_non_member(I, C)
    return EmbeddedPrimeVerdict(w is not None, w)


__all__ = [
    "Ideal",
    "ideal",
    "unit_ideal",
    "maximal_ideal",
    "buchberger",
    "groebner_basis",
    "normal_form",
    "ideal_member",
    "ideal_contains",
    "ideal_equal",
    "first_non_member",
    "intersect",
    "intersect_all",
    "colon",
    "saturate",
    "saturate_max",
    "radical_member",
    "exact_divide",
    "hilbert_data",
    "HilbertData",
    "leading_monomials",
    "is_regular_on",
    "cm_certify",
    "CMVerdict",
    "embedded_max_prime",
    "EmbeddedPrimeVerdict",
]
