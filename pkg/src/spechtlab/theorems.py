"""Ideals built from shifted Specht modules, and executable checks of the
structural identities they satisfy.

Each ``check_*`` function returns a :class:`TheoremVerdict`: ``holds`` is the
computed outcome, ``predicate`` the outcome the characteristic condition
predicts, and ``witness`` (when the two sides of an identity differ) a
polynomial lying in exactly one side.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dc_field

from .errors import CharacteristicTooSmall, InvalidShape, ParameterOutOfRange, TooLarge
from .fields import QQ, FieldSpec
from .groebner import (
    CMVerdict,
    Ideal,
    cm_certify,
    colon,
    embedded_max_prime,
    first_non_member,
    hilbert_data,
    ideal_contains,
    ideal_equal,
    ideal_member,
    intersect,
    intersect_all,
    radical_member,
    saturate,
)
from .poly import Polynomial, elementary_symmetric, substitute
from .specht import delete_largest, phi_map, specht_polynomial
from .tableaux import ShiftedShape, enumerate_standard

GROEBNER_CAP = 6


def _char_ok(p: int, k: int) -> bool:
    return p == 0 or p >= k + 1


def _cap(n: int, cap: int | None, what: str):
    if cap is not None and n > cap:
        raise TooLarge(f"{what} with n={n} exceeds the cap {cap}")


# ---------------------------------------------------------------------------
# ideal constructors


@dataclass(frozen=True)
class SpechtIdealSpec:
    n: int
    k: int
    d: int
    field: FieldSpec = QQ

    def __post_init__(self):
        ShiftedShape(self.n, self.k, self.d)

    def ideal(self, nvars: int | None = None) -> Ideal:
        return specht_ideal(self.n, self.k, self.d, self.field, nvars)


def specht_ideal(n: int, k: int, d: int, field: FieldSpec = QQ, nvars: int | None = None) -> Ideal:
    """The ideal generated by the standard shifted Specht polynomials of shape
    (n,k,d), placed in ``nvars >= n`` variables."""
    shape = ShiftedShape(n, k, d)
    nv = n if nvars is None else nvars
    gens = [specht_polynomial(T, field, nv) for T in enumerate_standard(shape)]
    return Ideal(field, nv, gens)


def squarefree_power(n: int, d: int, field: FieldSpec = QQ, nvars: int | None = None) -> Ideal:
    """All square-free degree-d monomials in x_1..x_n."""
    if not 0 <= d <= n:
        raise InvalidShape(f"need 0 <= d <= n, got n={n}, d={d}")
    nv = n if nvars is None else nvars
    gens = [Polynomial.from_squarefree(field, nv, S) for S in itertools.combinations(range(1, n + 1), d)]
    return Ideal(field, nv, gens)


def _monomial_ideal(n: int, k: int, field: FieldSpec, nvars: int | None = None) -> Ideal:
    # no range check; I(n, 0) is the unit ideal
    return specht_ideal(n, k, k, field, nvars) + squarefree_power(n, k + 1, field, nvars)


def _check_nk(n: int, k: int):
    if not (1 <= k and 2 * k + 1 <= n):
        raise ParameterOutOfRange(f"need 1 <= k < k+1 <= n-k, got n={n}, k={k}")


def specht_monomial_ideal(n: int, k: int, field: FieldSpec = QQ) -> Ideal:
    """``I(n,k)``: the (n,k,k) Specht ideal plus all square-free monomials of degree k+1."""
    _check_nk(n, k)
    return _monomial_ideal(n, k, field)


def y_ideal(n: int, k: int, field: FieldSpec = QQ) -> Ideal:
    """Square-free degree-k products of ``y_i = x_n - x_i`` (i < n), plus ``x_n^2``,
    expanded in the x-variables."""
    _check_nk(n, k)
    ys = [Polynomial.var(field, n, n) - Polynomial.var(field, n, i) for i in range(1, n)]
    gens = []
    for S in itertools.combinations(range(1, n), k):
        mono = Polynomial.from_squarefree(field, n, S)
        gens.append(substitute(mono, ys + [Polynomial.var(field, n, n)]))
    gens.append(Polynomial.var(field, n, n) ** 2)
    return Ideal(field, n, gens)


def j_ideal(n: int, k: int, field: FieldSpec = QQ) -> Ideal:
    """``I(n-1,k-1)`` (read in n variables) plus :func:`y_ideal`."""
    _check_nk(n, k)
    return _monomial_ideal(n - 1, k - 1, field, nvars=n) + y_ideal(n, k, field)


def linear_translate(S, n: int, field: FieldSpec = QQ, squared: bool = False) -> Ideal:
    """``(x_{s1} - x_{s2}, ..., x_{s1} - x_{sh})``, plus ``x_{s1}^2`` when squared."""
    S = tuple(S)
    x = [None] + [Polynomial.var(field, n, i) for i in range(1, n + 1)]
    gens = [x[S[0]] - x[s] for s in S[1:]]
    if squared:
        gens.append(x[S[0]] ** 2)
    return Ideal(field, n, gens)


def translates_depend_on_subset(n: int, h: int, field: FieldSpec = QQ, squared: bool = False) -> bool:
    """Check that sigma applied to the ideal on {1..h} depends only on sigma({1..h})."""
    base = linear_translate(range(1, h + 1), n, field, squared)
    by_subset = {}
    for perm in itertools.permutations(range(1, n + 1)):
        imgs = [Polynomial.var(field, n, perm[i]) for i in range(n)]
        J = Ideal(field, n, [substitute(g, imgs) for g in base.generators])
        S = tuple(sorted(perm[:h]))
        ref = by_subset.setdefault(S, linear_translate(S, n, field, squared))
        if not ideal_equal(J, ref):
            return False
    return True


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    params: dict
    holds: bool | None  # None: inconclusive
    predicate: bool
    witness: Polynomial | None = None
    elapsed: float = 0.0
    details: dict = dc_field(default_factory=dict)

    @property
    def matches(self) -> bool | None:
        if self.holds is None:
            return None
        return self.holds == self.predicate

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": dict(self.params),
            "holds": self.holds,
            "predicate": self.predicate,
            "matches": self.matches,
            "witness": None if self.witness is None else str(self.witness),
            "details": _jsonable(self.details),
            "elapsed": round(self.elapsed, 3),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def _compare(I: Ideal, J: Ideal):
    """(equal, witness) where the witness lies in exactly one of I, J."""
    w = first_non_member(I, J)
    if w is None:
        w = first_non_member(J, I)
    return w is None, w


def _params(field: FieldSpec, **kw) -> dict:
    kw["field"] = str(field)
    return kw


def check_thm_radD(n: int, k: int, d: int, field: FieldSpec = QQ, cap: int | None = GROEBNER_CAP) -> TheoremVerdict:
    """``a(n,k,d) = a(n,k,d-1) ∩ (x_1..x_n)^(d)``."""
    if not (0 <= k < d <= n - k):
        raise ParameterOutOfRange(f"need 0 <= k < d <= n-k, got ({n},{k},{d})")
    _cap(n, cap, "radD")
    t0 = time.perf_counter()
    lhs = specht_ideal(n, k, d, field)
    rhs = intersect(specht_ideal(n, k, d - 1, field), squarefree_power(n, d, field))
    eq, w = _compare(lhs, rhs)
    return TheoremVerdict("radD", _params(field, n=n, k=k, d=d), eq, True, w, time.perf_counter() - t0)


def check_radical(m: int, h: int, field: FieldSpec = QQ, cap: int | None = GROEBNER_CAP) -> TheoremVerdict:
    """The intersection of the translates ``(x_{s1}-x_{s2},..,x_{s1}-x_{sh})`` over
    all h-subsets equals the Specht ideal ``a(m, m-h+1, m-h+1)``."""
    if not (1 <= h <= m) or h <= (m + 1) // 2:
        raise ParameterOutOfRange(f"need (m+1)//2 < h <= m, got m={m}, h={h}")
    _cap(m, cap, "radical identity")
    t0 = time.perf_counter()
    j = m - h + 1
    comps = [linear_translate(S, m, field) for S in itertools.combinations(range(1, m + 1), h)]
    lhs = intersect_all(comps)
    rhs = specht_ideal(m, j, j, field)
    eq, w = _compare(lhs, rhs)
    return TheoremVerdict(
        "rad", _params(field, m=m, h=h), eq, True, w, time.perf_counter() - t0,
        {"components": len(comps), "specht_shape": (m, j, j)},
    )


def check_coc(n: int, k: int, field: FieldSpec = QQ, cap: int | None = GROEBNER_CAP) -> TheoremVerdict:
    """``a(n,k,k) + (x_n) = a(n-1,k-1,k) + (x_n)``, plus the generator-wise
    statement that the change of coordinates sends F_T to ``(-1)^k F_{T'}``."""
    if not (1 <= k <= n - k):
        raise ParameterOutOfRange(f"need 1 <= k <= n-k, got n={n}, k={k}")
    _cap(n, cap, "change of coordinates")
    t0 = time.perf_counter()
    xn = Ideal(field, n, [Polynomial.var(field, n, n)])
    lhs = specht_ideal(n, k, k, field) + xn
    rhs = specht_ideal(n - 1, k - 1, k, field, nvars=n) + xn
    eq, w = _compare(lhs, rhs)
    sign = -1 if k % 2 else 1
    images = set()
    phi_ok = True
    for T in enumerate_standard(ShiftedShape(n, k, k)):
        T2 = delete_largest(T)
        images.add(T2)
        if phi_map(specht_polynomial(T, field)) != specht_polynomial(T2, field, n).scale(sign):
            phi_ok = False
    phi_ok = phi_ok and images == set(enumerate_standard(ShiftedShape(n - 1, k - 1, k)))
    return TheoremVerdict(
        "coc", _params(field, n=n, k=k), eq and phi_ok, True, w, time.perf_counter() - t0,
        {"sums_equal": eq, "phi_generatorwise": phi_ok},
    )


def check_thm_perfectD(n: int, k: int, field: FieldSpec = QQ, cap: int | None = GROEBNER_CAP) -> TheoremVerdict:
    """``I(n,k) = I(n-1,k-1) ∩ y_ideal(n,k)``, expected exactly when p=0 or p>=k+1."""
    if n < 3:
        raise ParameterOutOfRange(f"need n >= 3, got {n}")
    _check_nk(n, k)
    _cap(n, cap, "perfectD")
    t0 = time.perf_counter()
    lhs = specht_monomial_ideal(n, k, field)
    rhs = intersect(_monomial_ideal(n - 1, k - 1, field, nvars=n), y_ideal(n, k, field))
    eq, w = _compare(lhs, rhs)
    details = {"lhs_in_rhs": ideal_contains(rhs, lhs)}
    if not eq:
        # e_k on 2k-1 variables is killed by the lowering operator when p = k
        status = {}
        picked = False
        for m in (2 * k - 1, n - 1):
            cand = elementary_symmetric(k, range(1, m + 1), n, field)
            ok = ideal_member(cand, rhs) and not ideal_member(cand, lhs)
            status[str(cand)] = ok
            if ok and not picked:
                w, picked = cand, True
        details["e_k_candidates"] = status
    return TheoremVerdict(
        "perfectD", _params(field, n=n, k=k), eq, _char_ok(field.p, k), w,
        time.perf_counter() - t0, details,
    )


def check_lemma_jnk(n: int, k: int, field: FieldSpec = QQ, cap: int | None = GROEBNER_CAP) -> TheoremVerdict:
    """``J + (x_n) = I(n-1,k-1) + (x_n)`` and ``J : x_n = (x_1..x_{n-1})^(k-1) + (x_n)``."""
    _check_nk(n, k)
    if not _char_ok(field.p, k):
        raise CharacteristicTooSmall(f"needs p=0 or p >= {k + 1}, got p={field.p}")
    _cap(n, cap, "JNK")
    t0 = time.perf_counter()
    xv = Polynomial.var(field, n, n)
    xn = Ideal(field, n, [xv])
    J = j_ideal(n, k, field)
    eq1, w1 = _compare(J + xn, _monomial_ideal(n - 1, k - 1, field, nvars=n) + xn)
    eq2, w2 = _compare(colon(J, xv), squarefree_power(n - 1, k - 1, field, nvars=n) + xn)
    return TheoremVerdict(
        "jnk", _params(field, n=n, k=k), eq1 and eq2, True, w1 if w1 is not None else w2,
        time.perf_counter() - t0, {"sum_with_xn": eq1, "colon_by_xn": eq2},
    )


def check_primary_shape(n: int, k: int, field: FieldSpec = QQ, cap: int | None = GROEBNER_CAP) -> TheoremVerdict:
    """``I(n,k)`` against the intersection of the squared translates over all
    (n-k+1)-subsets; equal exactly when p=0 or p>=k+1."""
    _check_nk(n, k)
    _cap(n, cap, "primary decomposition")
    t0 = time.perf_counter()
    comps = [linear_translate(S, n, field, squared=True) for S in itertools.combinations(range(1, n + 1), n - k + 1)]
    lhs = specht_monomial_ideal(n, k, field)
    rhs = intersect_all(comps)
    eq, w = _compare(lhs, rhs)
    return TheoremVerdict(
        "primary", _params(field, n=n, k=k), eq, _char_ok(field.p, k), w,
        time.perf_counter() - t0, {"components": len(comps)},
    )


@dataclass(frozen=True)
class HEReport:
    height_I: int
    height_J: int
    height_sum: int

    @property
    def pattern(self) -> bool:
        """Heights g, g, g+1."""
        return self.height_I == self.height_J and self.height_sum == self.height_I + 1


def check_hE_grades(I: Ideal, J: Ideal) -> HEReport:
    return HEReport(hilbert_data(I).height, hilbert_data(J).height, hilbert_data(I + J).height)


def _perfect_evidence(I: Ideal, trials: int, seed: int):
    v: CMVerdict = cm_certify(I, trials=trials, seed=seed)
    return (True if v.certified else None), v


def check_perfection(n: int, k: int, field: FieldSpec = QQ, trials: int = 200, seed: int = 0,
                     cap: int | None = GROEBNER_CAP) -> TheoremVerdict:
    """Perfection of ``I(n,k)`` and of the Specht chain ``a(n+1,i+1,i+1)``, 1<=i<=k,
    the latter modelled as ``a(n,i,i) ∩ (x_1..x_n)^(i+1)``.

    Positive answers come from a regular-sequence certificate.  Negative
    answers need the maximal ideal to be an embedded prime of ``I(n,p)``,
    transferred to ``a(n+1,p+1,p+1)`` by the height pattern (g, g, g+1) with
    both summands certified perfect.
    """
    _check_nk(n, k)
    _cap(n, cap, "perfection")
    t0 = time.perf_counter()
    p = field.p
    pred = _char_ok(p, k)
    details: dict = {}
    witness = None
    I = specht_monomial_ideal(n, k, field)
    if pred:
        mono, cv = _perfect_evidence(I, trials, seed)
        details["I"] = cv.label
        chain = True
        for i in range(1, k + 1):
            A = intersect(specht_ideal(n, i, i, field), squarefree_power(n, i + 1, field))
            ok, cv = _perfect_evidence(A, trials, seed)
            details[f"specht_{n + 1}_{i + 1}"] = cv.label
            if ok is None:
                chain = None
        holds = True if (mono and chain) else None
    else:
        ev = embedded_max_prime(I)
        details["I"] = ev.label
        witness = ev.witness
        mono = False if ev.associated else None
        # transfer to the Specht ideal at i = p
        Ip = specht_monomial_ideal(n, p, field) if p != k else I
        evp = ev if p == k else embedded_max_prime(Ip)
        a, b = specht_ideal(n, p, p, field), squarefree_power(n, p + 1, field)
        he = check_hE_grades(a, b)
        ca, cb = cm_certify(a, trials, seed), cm_certify(b, trials, seed)
        details["hE_heights"] = (he.height_I, he.height_J, he.height_sum)
        details["summands"] = (ca.label, cb.label)
        transfer = evp.associated and he.pattern and ca.certified and cb.certified
        details[f"specht_{n + 1}_{p + 1}"] = "not perfect" if transfer else "Inconclusive"
        chain = False if transfer else None
        holds = False if (mono is False and chain is False) else None
    return TheoremVerdict(
        "perfect", _params(field, n=n, k=k), holds, pred, witness, time.perf_counter() - t0, details
    )


def check_hE(n: int, k: int, field: FieldSpec = QQ, cap: int | None = GROEBNER_CAP) -> TheoremVerdict:
    """Heights of ``a(n,k,k)``, ``(x_1..x_n)^(k+1)`` and their sum ``I(n,k)``
    follow the pattern (n-k, n-k, n-k+1) in every characteristic."""
    _check_nk(n, k)
    _cap(n, cap, "height pattern")
    t0 = time.perf_counter()
    r = check_hE_grades(specht_ideal(n, k, k, field), squarefree_power(n, k + 1, field))
    g = n - k
    holds = (r.height_I, r.height_J, r.height_sum) == (g, g, g + 1)
    return TheoremVerdict(
        "hE", _params(field, n=n, k=k), holds, True, None, time.perf_counter() - t0,
        {"heights": (r.height_I, r.height_J, r.height_sum)},
    )


# ---------------------------------------------------------------------------
# mixed heights and the agreement chain


@dataclass(frozen=True)
class MixedHeightReport:
    height: int  # height of a(n,k,d)
    saturated_height: int  # height after removing the coordinate components
    in_linear_prime: bool
    in_coordinate_prime: bool
    probe_outside_radical: bool

    @property
    def mixed(self) -> bool:
        return (
            self.in_linear_prime
            and self.in_coordinate_prime
            and self.probe_outside_radical
            and self.saturated_height > self.height
        )


def mixed_height_evidence(n: int, k: int, d: int, field: FieldSpec = QQ) -> MixedHeightReport:
    """For d > k+1, exhibit associated primes of two heights for ``a(n,k,d)``.

    Saturating by every variable strips the coordinate primes (each contains
    ``x_1...x_n``) and leaves components of height ``n-k``, while the ideal
    itself has height ``n-d+1``.
    """
    if not (1 <= k and k + 1 < d <= n - k):
        raise ParameterOutOfRange(f"need 1 <= k, k+1 < d <= n-k, got ({n},{k},{d})")
    A = specht_ideal(n, k, d, field)
    S = A
    for i in range(1, n + 1):
        S = saturate(S, Polynomial.var(field, n, i))
    lin = linear_translate(range(1, n - k + 2), n, field)
    coord = Ideal(field, n, [Polynomial.var(field, n, i) for i in range(1, n - d + 2)])
    g = Polynomial.from_squarefree(field, n, range(1, n + 1))
    return MixedHeightReport(
        hilbert_data(A).height,
        hilbert_data(S).height,
        ideal_contains(lin, A),
        ideal_contains(coord, A),
        not radical_member(g, A),
    )


def theorem_c_chain(n: int, k: int, field: FieldSpec = QQ, trials: int = 200, seed: int = 0) -> dict:
    """The four verdicts tied to the characteristic condition p=0 or p>=k+1."""
    from .lefschetz import has_wlp

    _check_nk(n, k)
    perf = check_perfection(n, k, field, trials, seed)
    return {
        "predicate": _char_ok(field.p, k),
        "wlp": has_wlp(2 * k, field),
        "perfectD": check_thm_perfectD(n, k, field).holds,
        "perfect_I": {"CertifiedCM": True, "MaxIdealAssociated": False}.get(perf.details["I"]),
        "perfect_chain": perf.holds,
    }


THEOREMS = ("radD", "rad", "coc", "perfectD", "jnk", "primary", "perfect", "hE")


def run_check(theorem: str, n: int, k: int, d: int | None = None, field: FieldSpec = QQ,
              cap: int | None = GROEBNER_CAP, trials: int = 200, seed: int = 0) -> TheoremVerdict:
    """Dispatch by theorem id.  For ``rad``, n and k are read as m and h."""
    if theorem == "radD":
        if d is None:
            raise ParameterOutOfRange("radD needs d")
        return check_thm_radD(n, k, d, field, cap)
    if theorem == "rad":
        return check_radical(n, k, field, cap)
    if theorem == "coc":
        return check_coc(n, k, field, cap)
    if theorem == "perfectD":
        return check_thm_perfectD(n, k, field, cap)
    if theorem == "jnk":
        return check_lemma_jnk(n, k, field, cap)
    if theorem == "primary":
        return check_primary_shape(n, k, field, cap)
    if theorem == "perfect":
        return check_perfection(n, k, field, trials, seed, cap)
    if theorem == "hE":
        return check_hE(n, k, field, cap)
    raise ParameterOutOfRange(f"unknown theorem {theorem!r}")


__all__ = [
    "SpechtIdealSpec",
    "specht_ideal",
    "squarefree_power",
    "specht_monomial_ideal",
    "y_ideal",
    "j_ideal",
    "linear_translate",
    "translates_depend_on_subset",
    "TheoremVerdict",
    "check_thm_radD",
    "check_radical",
    "check_coc",
    "check_thm_perfectD",
    "check_lemma_jnk",
    "check_primary_shape",
    "check_perfection",
    "check_hE",
    "check_hE_grades",
    "HEReport",
    "mixed_height_evidence",
    "MixedHeightReport",
    "theorem_c_chain",
    "run_check",
    "THEOREMS",
]
