"""Command-line front end.

Exit codes: 0 success (for ``verify``: the verdict matches the predicted
outcome), 1 mismatch, 2 inconclusive or over the parameter cap, 64 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import difflib
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from importlib import resources

from . import __version__
from .errors import CharacteristicTooSmall, SpechtLabError, TooLarge
from .fields import QQ, FieldSpec, parse_field
from .groebner import (
    Ideal,
    cm_certify,
    colon,
    embedded_max_prime,
    hilbert_data,
    ideal_member,
    intersect,
    maximal_ideal,
    saturate,
    saturate_max,
)
from .lefschetz import has_slp, has_wlp, slp_threshold_predicate, wlp_threshold_predicate
from .poly import GREVLEX, LEX, Polynomial, elementary_symmetric, parse_poly
from .specht import module_basis, straighten
from .tableaux import ShiftedShape, Tableau, enumerate_standard, parse_tableau
from . import theorems as th

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_MISMATCH, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    params: dict
    field: FieldSpec = QQ
    json: bool = False
    allow_large: bool = False
    seed: int = 0
    timing: bool = False
    extra: dict = dc_field(default_factory=dict)

    @property
    def cap(self):
        return None if self.allow_large else th.GROEBNER_CAP


# ---------------------------------------------------------------------------
# helpers


def _emit(cfg: RunConfig, result: dict, text: str):
    if cfg.json:
        doc = {"schema_version": SCHEMA_VERSION, "command": cfg.command, "result": result}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _split_polys(text: str) -> list[str]:
    return [p for p in (s.strip() for s in text.split(";")) if p]


def _parse_gens(cfg: RunConfig, *texts: str, nvars: int | None = None) -> list[list[Polynomial]]:
    """Parse semicolon-separated generator lists into one common ring."""
    groups = [[parse_poly(p, None, cfg.field) for p in _split_polys(t)] for t in texts]
    n = nvars or max((f.nvars for g in groups for f in g), default=1)
    return [[parse_poly(p, n, cfg.field) for p in _split_polys(t)] for t in texts]


def _ideal_text(I: Ideal) -> str:
    return "\n".join(str(g) for g in I.groebner()) or "0"


def _ring_size(groups) -> int:
    return max(f.nvars for g in groups for f in g)


# ---------------------------------------------------------------------------
# subcommands


def cmd_tableaux(cfg, a):
    shape = ShiftedShape(a.n, a.k, a.d)
    tabs = enumerate_standard(shape)
    if a.count_only:
        _emit(cfg, {"shape": [a.n, a.k, a.d], "count": len(tabs)}, str(len(tabs)))
    else:
        _emit(cfg, {"shape": [a.n, a.k, a.d], "count": len(tabs), "tableaux": [T.to_text() for T in tabs]},
              "\n".join(T.to_text() for T in tabs))
    return EXIT_OK


def cmd_basis(cfg, a):
    B = module_basis(ShiftedShape(a.n, a.k, a.d), cfg.field)
    rows = [{"tableau": T.to_text(), "polynomial": str(f)} for T, f in zip(B.tableaux, B.polynomials)]
    _emit(cfg, {"shape": [a.n, a.k, a.d], "field": str(cfg.field), "basis": rows},
          "\n".join(f"{r['tableau']}  {r['polynomial']}" for r in rows))
    return EXIT_OK


def cmd_straighten(cfg, a):
    T = parse_tableau(a.tableau)
    if a.k is not None:
        T = Tableau(ShiftedShape(T.shape.n, a.k, T.shape.d, T.shape.offset), T.top, T.bottom)
    v = straighten(T, cfg.field)
    terms = [{"coefficient": cfg.field.format(c), "tableau": S.to_text()} for S, c in v.items()]
    _emit(cfg, {"tableau": T.to_text(), "field": str(cfg.field), "terms": terms}, str(v))
    return EXIT_OK


def _lefschetz(cfg, a, test, pred):
    r = test(a.n, cfg.field)
    p = pred(a.n, cfg.field.p)
    doc = {"n": a.n, "field": str(cfg.field), "rank_test": r, "threshold_predicate": p, "agree": r == p}
    print(json.dumps(doc, sort_keys=True) if not cfg.json else
          json.dumps({"schema_version": SCHEMA_VERSION, "command": cfg.command, "result": doc}, indent=2, sort_keys=True))
    return EXIT_OK if r == p else EXIT_MISMATCH


def cmd_wlp(cfg, a):
    return _lefschetz(cfg, a, has_wlp, wlp_threshold_predicate)


def cmd_slp(cfg, a):
    return _lefschetz(cfg, a, has_slp, slp_threshold_predicate)


def _verdict_out(cfg, v: th.TheoremVerdict) -> int:
    d = v.to_dict()
    if cfg.timing:
        print(f"elapsed {v.elapsed:.3f}s", file=sys.stderr)
    d.pop("elapsed")
    if v.matches is None:
        status = "inconclusive"
    else:
        status = "match" if v.matches else "mismatch"
    d["status"] = status
    lines = [
        f"theorem {v.theorem} {' '.join(f'{k}={x}' for k, x in v.params.items())}",
        f"holds: {v.holds}",
        f"predicted: {v.predicate}",
        f"status: {status}",
    ]
    if v.witness is not None:
        lines.append(f"witness: {v.witness}")
    for k, x in d["details"].items():
        lines.append(f"{k}: {x}")
    _emit(cfg, d, "\n".join(lines))
    return {"match": EXIT_OK, "mismatch": EXIT_MISMATCH}.get(status, EXIT_INCONCLUSIVE)


def cmd_decomp(cfg, a):
    return _verdict_out(cfg, th.check_thm_radD(a.n, a.k, a.d, cfg.field, cfg.cap))


def cmd_verify(cfg, a):
    v = th.run_check(a.theorem, a.n, a.k, a.d, cfg.field, cfg.cap, a.trials, cfg.seed)
    return _verdict_out(cfg, v)


def cmd_gb(cfg, a):
    (gens,) = _parse_gens(cfg, a.gens)
    I = Ideal(cfg.field, _ring_size([gens]), gens)
    order = LEX if a.order == "lex" else GREVLEX
    gb = [str(g) for g in I.groebner(order)]
    _emit(cfg, {"field": str(cfg.field), "order": a.order, "basis": gb}, "\n".join(gb))
    return EXIT_OK


def cmd_member(cfg, a):
    gens, (f,) = _parse_gens(cfg, a.gens, a.poly)
    I = Ideal(cfg.field, f.nvars, gens)
    r = ideal_member(f, I)
    _emit(cfg, {"field": str(cfg.field), "member": r}, str(r).lower())
    return EXIT_OK


def cmd_colon(cfg, a):
    if a.by == "m":
        (gens,) = _parse_gens(cfg, a.gens)
        n = _ring_size([gens])
        by = maximal_ideal(cfg.field, n)
    else:
        gens, by_gens = _parse_gens(cfg, a.gens, a.by)
        n = _ring_size([gens, by_gens])
        by = by_gens[0] if len(by_gens) == 1 else Ideal(cfg.field, n, by_gens)
    C = colon(Ideal(cfg.field, n, gens), by)
    _emit(cfg, {"field": str(cfg.field), "basis": [str(g) for g in C.groebner()]}, _ideal_text(C))
    return EXIT_OK


def cmd_intersect(cfg, a):
    g1, g2 = _parse_gens(cfg, a.gens, a.gens2)
    n = _ring_size([g1, g2])
    K = intersect(Ideal(cfg.field, n, g1), Ideal(cfg.field, n, g2))
    _emit(cfg, {"field": str(cfg.field), "basis": [str(g) for g in K.groebner()]}, _ideal_text(K))
    return EXIT_OK


def cmd_saturate(cfg, a):
    if a.by == "m":
        (gens,) = _parse_gens(cfg, a.gens)
        S = saturate_max(Ideal(cfg.field, _ring_size([gens]), gens))
    else:
        gens, (f,) = _parse_gens(cfg, a.gens, a.by)
        S = saturate(Ideal(cfg.field, f.nvars, gens), f)
    _emit(cfg, {"field": str(cfg.field), "basis": [str(g) for g in S.groebner()]}, _ideal_text(S))
    return EXIT_OK


def cmd_hilbert(cfg, a):
    (gens,) = _parse_gens(cfg, a.gens, nvars=a.nvars)
    n = a.nvars or _ring_size([gens])
    h = hilbert_data(Ideal(cfg.field, n, gens))
    doc = {
        "field": str(cfg.field),
        "nvars": n,
        "numerator": list(h.numerator),
        "krull_dim": h.krull_dim,
        "height": h.height,
        "multiplicity": h.multiplicity,
    }
    text = f"numerator: {h.numerator_str()}\nkrull_dim: {h.krull_dim}\nheight: {h.height}\nmultiplicity: {h.multiplicity}"
    _emit(cfg, doc, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# worked examples


def example_513() -> str:
    shape = ShiftedShape(5, 1, 3)
    B = module_basis(shape, QQ)
    lines = [f"shape (5,1,3): {len(B)} standard tableaux; C(5,3) - C(5,0) = {shape.dimension()}"]
    for T, f in zip(B.tableaux, B.polynomials):
        lines.append(f"{T.to_text()}  {f}")
    lines.append(f"rank of the coefficient matrix: {B.rank()}")
    return "\n".join(lines)


def example_i31() -> str:
    I = th.specht_monomial_ideal(3, 1, QQ)
    h = hilbert_data(I)
    cm = cm_certify(I)
    v = th.check_thm_perfectD(3, 1, QQ)
    lines = ["I(3,1) over q", "reduced basis:"]
    lines += [f"  {g}" for g in I.groebner()]
    lines += [
        f"hilbert numerator: {h.numerator_str()}",
        f"krull_dim: {h.krull_dim}",
        f"length of R/I: {h.multiplicity}",
        f"height: {h.height}",
        f"cm_certify: {cm.label}",
        f"I(3,1) = I(2,0) ∩ y-ideal: {v.holds}",
        f"y-ideal equals I(3,1): {th.y_ideal(3, 1, QQ) == I}",
    ]
    return "\n".join(lines)


def example_p23() -> str:
    F2 = FieldSpec(2)
    lines = ["I(5,2) over fp:2"]
    v = th.check_thm_perfectD(5, 2, F2)
    lines.append(f"I(5,2) = I(4,1) ∩ y-ideal: {v.holds} (predicted {v.predicate})")
    lines.append(f"witness: {v.witness}")
    I = th.specht_monomial_ideal(5, 2, F2)
    Y = th.y_ideal(5, 2, F2)
    for m in (3, 4):
        e = elementary_symmetric(2, range(1, m + 1), 5, F2)
        lines.append(
            f"e2(x1..x{m}): in I(4,1) {ideal_member(e, th._monomial_ideal(4, 1, F2, nvars=5))}, "
            f"in y-ideal {ideal_member(e, Y)}, in I(5,2) {ideal_member(e, I)}"
        )
    ev = embedded_max_prime(I)
    lines.append(f"embedded maximal prime: {ev.label}")
    lines.append(f"  element of (I : m) outside I: {ev.witness}")
    he = th.check_hE_grades(th.specht_ideal(5, 2, 2, F2), th.squarefree_power(5, 3, F2))
    lines.append(f"heights a(5,2,2), (x)^(3), sum: {he.height_I}, {he.height_J}, {he.height_sum}")
    ps = th.check_primary_shape(5, 2, F2)
    lines.append(f"I(5,2) equals the intersection of its {ps.details['components']} squared translates: {ps.holds}")
    perf = th.check_perfection(5, 2, F2)
    lines.append(f"perfection verdict: {perf.holds} (predicted {perf.predicate})")
    lines.append("contrast over q:")
    vq = th.check_thm_perfectD(5, 2, QQ)
    lines.append(f"  I(5,2) = I(4,1) ∩ y-ideal: {vq.holds}")
    lines.append(f"  embedded maximal prime: {embedded_max_prime(th.specht_monomial_ideal(5, 2, QQ)).label}")
    lines.append(f"  primary shape: {th.check_primary_shape(5, 2, QQ).holds}")
    return "\n".join(lines)


EXAMPLES = {"513": example_513, "i31": example_i31, "p23": example_p23}


def golden_text(name: str) -> str:
    return resources.files("spechtlab").joinpath("golden", f"{name}.txt").read_text(encoding="utf-8")


def cmd_reproduce(cfg, a):
    out = EXAMPLES[a.example]()
    golden = golden_text(a.example).rstrip("\n")
    diff = list(difflib.unified_diff(golden.splitlines(), out.splitlines(), "golden", "computed", lineterm=""))
    _emit(cfg, {"example": a.example, "report": out.splitlines(), "golden_match": not diff, "diff": diff},
          out + "\n" + ("golden: match" if not diff else "golden: DIFF\n" + "\n".join(diff)))
    return EXIT_OK if not diff else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser and entry points


COMMANDS = {
    "tableaux": cmd_tableaux,
    "basis": cmd_basis,
    "straighten": cmd_straighten,
    "wlp": cmd_wlp,
    "slp": cmd_slp,
    "decomp": cmd_decomp,
    "verify": cmd_verify,
    "gb": cmd_gb,
    "member": cmd_member,
    "colon": cmd_colon,
    "intersect": cmd_intersect,
    "saturate": cmd_saturate,
    "hilbert": cmd_hilbert,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default="q", help="q or fp:<p> (default q)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for the regular-sequence search")
    common.add_argument("--allow-large", action="store_true", help="lift the parameter cap (with a warning)")
    common.add_argument("--timing", action="store_true", help="report elapsed time on stderr")

    p = _Parser(prog="spechtlab", description="Shifted Specht ideals: tableaux, Lefschetz tests, Groebner checks.")
    p.add_argument("--version", action="version", version=f"spechtlab {__version__}")
    p.add_argument("--batch", metavar="MANIFEST", help="JSON list of argument vectors to run concurrently")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def shape_args(sp, d=True):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        if d:
            sp.add_argument("--d", type=int, required=True)

    sp = sub.add_parser("tableaux", parents=[common], help="standard tableaux of a shifted shape")
    shape_args(sp)
    sp.add_argument("--count-only", action="store_true")
    sp = sub.add_parser("basis", parents=[common], help="Specht polynomial basis")
    shape_args(sp)
    sp = sub.add_parser("straighten", parents=[common], help="expand F_T in the standard basis")
    sp.add_argument("--tableau", required=True, help="top=..;bottom=..")
    sp.add_argument("--k", type=int, help="number of two-cell columns (default: as many as fit)")
    for name in ("wlp", "slp"):
        sp = sub.add_parser(name, parents=[common], help=f"{name.upper()} rank test vs threshold")
        sp.add_argument("--n", type=int, required=True)
    sp = sub.add_parser("decomp", parents=[common], help="a(n,k,d) = a(n,k,d-1) ∩ (x)^(d)")
    shape_args(sp)
    sp = sub.add_parser("verify", parents=[common], help="run a theorem check")
    sp.add_argument("--theorem", required=True, choices=th.THEOREMS)
    sp.add_argument("--n", type=int, required=True, help="n (m for --theorem rad)")
    sp.add_argument("--k", type=int, required=True, help="k (h for --theorem rad)")
    sp.add_argument("--d", type=int)
    sp.add_argument("--trials", type=int, default=200)
    sp = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    sp.add_argument("--gens", required=True, help="generators separated by ';'")
    sp.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    sp = sub.add_parser("member", parents=[common], help="ideal membership")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("colon", parents=[common], help="I : f, I : J, or I : m")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--by", required=True, help="polynomial, ';'-separated ideal, or m")
    sp = sub.add_parser("intersect", parents=[common], help="I ∩ J")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--gens2", required=True)
    sp = sub.add_parser("saturate", parents=[common], help="I : f^∞ or I : m^∞")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--by", required=True, help="polynomial or m")
    sp = sub.add_parser("hilbert", parents=[common], help="Hilbert series data")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--nvars", type=int)
    sp = sub.add_parser("reproduce", parents=[common], help="replay a worked example against its golden file")
    sp.add_argument("--example", required=True, choices=sorted(EXAMPLES))
    return p


def run(argv) -> int:
    try:
        a = build_parser().parse_args(list(argv))
        if a.batch:
            return run_batch(a.batch)
        if not a.command:
            raise UsageError("a subcommand is required")
        cfg = RunConfig(a.command, {}, parse_field(a.field), a.json, a.allow_large, a.seed, a.timing)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SpechtLabError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.allow_large:
        print("warning: parameter cap overridden; the run may be slow", file=sys.stderr)
    t0 = time.perf_counter()
    try:
        code = COMMANDS[a.command](cfg, a)
    except (TooLarge, CharacteristicTooSmall) as e:
        print(f"not run: {e}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except SpechtLabError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.timing:
        print(f"total {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


def run_captured(argv) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


def run_batch(path: str, workers: int | None = None) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            jobs = json.load(fh)
        if not isinstance(jobs, list) or not all(isinstance(j, list) and all(isinstance(x, str) for x in j) for j in jobs):
            raise ValueError("manifest must be a list of argument lists")
    except (OSError, ValueError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    with ProcessPoolExecutor(max_workers=workers) as ex:
        results = list(ex.map(run_captured, jobs))
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "batch",
        "result": {"runs": [{"argv": j, "exit_code": c, "stdout": o} for j, (c, o, _) in zip(jobs, results)]},
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return max((c for c, _, _ in results), default=EXIT_OK)


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
