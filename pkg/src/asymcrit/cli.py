"""Command-line front end.

Commands: acv, gcv, infimum, sample, bench, degree-bound.
Exit codes: 0 success, 1 usage error, 2 resource limit or timeout,
3 inconclusive oracle.
"""

from __future__ import annotations

import argparse
import json
import re
import signal
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .acv import (
    DominantMap,
    EmptyOutputError,
    NotDominantError,
    acv_run,
    build_system,
    degree_bound,
    draw_randomness,
    make_family,
)
from .apps import InconclusiveError, gcv, infimum, sample_positive
from .groebner import Budget, IdealBasis, ResourceLimitError, ideal_degree
from .kernel import GF, ParseError, Poly, PolyRing, UnknownVariableError, parse_polynomial
from .realalg import AlgebraicNumber, NotZeroDimensionalError, ShapeError, real_roots

SCHEMA = "asymcrit.report/1"
DEFAULT_TIMEOUT = 48 * 3600
DEFAULT_BENCH = {
    "families": ["f3", "f4", "f5", "g3", "g4", "m3"],
    "dense": ["d2n4", "d3n4", "d3n5"],
}
G_DEGREE_PRIME = 2147483647

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class JobTimeout(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


@contextmanager
def time_limit(seconds: Optional[float]):
    """Raise JobTimeout in the main thread after ``seconds``."""
    if not seconds or seconds <= 0 or not hasattr(signal, "setitimer"):
        yield
        return

    def fire(signum, frame):
        raise JobTimeout(f"timed out after {seconds} s")

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


# -- serialization ----------------------------------------------------------

def poly_json(f: Poly) -> dict:
    terms = [[list(m), str(c)] for m, c in f.sorted_terms()]
    return {"vars": list(f.ring.gens), "terms": terms, "text": str(f)}


def algebraic_json(a: AlgebraicNumber) -> dict:
    out = {
        "poly": [str(c) for c in a.coeffs],
        "interval": [str(a.lo), str(a.hi)],
        "text": str(a),
        "approx": repr(float(a)),
    }
    if a.is_rational():
        out["rational"] = str(a.as_rational())
    return out


def point_json(pt, width=Fraction(1, 10**10)) -> dict:
    box = pt.box(width)
    return {
        "box": {v: [str(lo), str(hi)] for v, (lo, hi) in box.items()},
        "approx": [repr(x) for x in pt.approx()],
    }


# -- input ------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def _natural(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def infer_vars(texts: Sequence[str]) -> List[str]:
    names = set()
    for t in texts:
        names.update(_IDENT.findall(t))
    return sorted(names, key=_natural)


def read_map(args) -> DominantMap:
    if args.file:
        with open(args.file) as fh:
            texts = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    elif args.expr:
        texts = list(args.expr)
    else:
        raise UsageError("give an expression or --file")
    if not texts:
        raise UsageError("no polynomial given")
    vars_ = [v.strip() for v in args.vars.split(",") if v.strip()] if args.vars else infer_vars(texts)
    if not vars_:
        raise UsageError("no variables found; use --vars")
    ring = PolyRing(vars_)
    try:
        comps = [parse_polynomial(t, ring) for t in texts]
    except (ParseError, UnknownVariableError) as exc:
        raise UsageError(str(exc)) from exc
    return DominantMap.of(comps, ring.gens)


def _budget(args) -> Budget:
    return Budget(max_pairs=args.budget_pairs) if args.budget_pairs else Budget()


# -- commands ---------------------------------------------------------------

def cmd_acv(args) -> dict:
    f = read_map(args)
    budget = _budget(args)
    res = acv_run(
        f, args.algo, seed=args.seed, sat=args.sat, mode=args.mode, primes=args.primes, budget=budget
    )
    out = {
        "algorithm": res.algorithm,
        "mode": args.mode,
        "sat": args.sat,
        "input": [poly_json(g) for g in f.components],
        "cvars": list(res.cvars),
        "generators": [poly_json(g) for g in res.generators],
        "degree": res.degree(),
        "empty_set": res.is_empty_set(),
        "randomness": res.randomness.as_dict(),
        "primes": [str(p) for p in res.primes],
        "budget": {"pairs_processed": budget.pairs_processed, "max_pairs": budget.max_pairs},
    }
    if f.p == 1 and not res.is_empty_set():
        out["roots"] = [algebraic_json(r) for r in real_roots(res.univariate())]
    return out


def _single(args) -> DominantMap:
    f = read_map(args)
    if f.p != 1:
        raise UsageError("this command takes a single polynomial")
    return f


def _gcv_json(rep) -> dict:
    return {
        "k0_poly": poly_json(rep.k0_poly),
        "kinf_poly": poly_json(rep.kinf_poly),
        "union_roots": [dict(algebraic_json(r), tag=t) for r, t in rep.tagged()],
        "randomness": rep.randomness.as_dict() if rep.randomness else None,
        "primes": [str(p) for p in rep.acv_primes],
    }


def cmd_gcv(args) -> dict:
    f = _single(args)
    return _gcv_json(gcv(f, args.seed, args.mode, _budget(args)))


def cmd_infimum(args) -> dict:
    f = _single(args)
    v = infimum(f, args.seed, args.mode, _budget(args))
    return {
        "kind": v.kind,
        "value": algebraic_json(v.value) if v.value is not None else None,
        "witnesses": [{"r": str(r), "nonempty": ne} for r, ne in v.witnesses],
        "gcv": _gcv_json(v.report) if v.report else None,
    }


def cmd_sample(args) -> dict:
    f = _single(args)
    s = sample_positive(f, args.seed, args.mode, _budget(args))
    return {
        "empty": s.empty,
        "e": str(s.e),
        "points": [point_json(p) for p in s.points],
    }


def cmd_degree_bound(args) -> dict:
    try:
        b = degree_bound(args.n, args.p, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {"n": args.n, "p": args.p, "d": args.d, "bound": str(b)}


_TAG = re.compile(r"^(?:([fgm])(\d+)|d(\d+)n(\d+))$")


def parse_tag(tag: str):
    m = _TAG.match(tag)
    if not m:
        raise UsageError(f"bad bench tag {tag!r}; use f5, g4, m3 or d3n5")
    if m.group(1):
        return m.group(1), int(m.group(2)), None
    return "dense", int(m.group(4)), int(m.group(3))


def g_degree(f: DominantMap, seed: int, variant: str) -> int:
    """Degree of the j = 1 system G' modulo a word-size prime."""
    rnd = draw_randomness(f.n, f.p, seed)
    system = build_system(f, 1, rnd, variant)
    ring = system.ring.with_domain(GF(G_DEGREE_PRIME))
    return ideal_degree(IdealBasis.of([g.to_ring(ring) for g in system.G], ring))


def bench_row(tag: str, args) -> dict:
    name, n, d = parse_tag(tag)
    f = make_family(name, n, d, seed=args.seed)
    row = {"tag": tag, "n": n, "d": f.d, "bound": str(degree_bound(f.n, f.p, f.d))}
    t0 = time.perf_counter()
    try:
        with time_limit(args.timeout):
            res = acv_run(f, args.algo, seed=args.seed, sat=args.sat, mode=args.mode, primes=args.primes,
                          budget=_budget(args))
            row["time"] = f"{time.perf_counter() - t0:.3f}"
            row["output_degree"] = str(res.degree())
            row["g_degree"] = str(g_degree(f, args.seed, args.algo))
    except (JobTimeout, ResourceLimitError):
        row.setdefault("time", "timeout")
        row.setdefault("output_degree", "timeout")
        row["g_degree"] = "timeout"
    return row


def cmd_bench(args) -> dict:
    tags = args.tags or DEFAULT_BENCH[args.suite]
    rows = [bench_row(t, args) for t in tags]
    return {"algorithm": args.algo, "mode": args.mode, "rows": rows}


# -- text rendering ---------------------------------------------------------

def render_text(command: str, payload: dict) -> str:
    if command == "degree-bound":
        return payload["bound"]
    if command == "acv":
        lines = [g["text"] for g in payload["generators"]]
        if "roots" in payload:
            lines.append("real roots: " + (", ".join(r["text"] for r in payload["roots"]) or "none"))
        lines.append(f"seed {payload['seed']}, primes {' '.join(payload['primes']) or '-'}")
        return "\n".join(lines)
    if command == "gcv":
        return "\n".join([
            f"k0:   {payload['k0_poly']['text']}",
            f"kinf: {payload['kinf_poly']['text']}",
            "values: " + (", ".join(f"{r['text']} ({r['tag']})" for r in payload["union_roots"]) or "none"),
        ])
    if command == "infimum":
        v = payload["value"]
        return payload["kind"] + (f" {v['text']}" if v else "")
    if command == "sample":
        if payload["empty"]:
            return f"empty (fiber f = {payload['e']})"
        pts = "\n".join("  (" + ", ".join(p["approx"]) + ")" for p in payload["points"])
        return f"nonempty, fiber f = {payload['e']}:\n{pts}"
    if command == "bench":
        cols = ["tag", "time", "output_degree", "g_degree", "bound"]
        rows = [cols] + [[str(r[c]) for c in cols] for r in payload["rows"]]
        widths = [max(len(r[i]) for r in rows) for i in range(len(cols))]
        return "\n".join("  ".join(x.ljust(w) for x, w in zip(r, widths)) for r in rows)
    return json.dumps(payload, indent=2)


# -- parser -----------------------------------------------------------------

COMMANDS = {
    "acv": cmd_acv,
    "gcv": cmd_gcv,
    "infimum": cmd_infimum,
    "sample": cmd_sample,
    "bench": cmd_bench,
    "degree-bound": cmd_degree_bound,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--mode", choices=["modular", "rational"], default="modular")
    common.add_argument("--primes", type=int, default=2)
    common.add_argument("--algo", choices=["acv1", "acv2", "kos"], default="acv2")
    common.add_argument("--sat", choices=["auto", "rabinowitsch", "bayer"], default="auto")
    common.add_argument("--budget-pairs", type=int, default=None)
    common.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    common.add_argument("--json", action="store_true")

    inputs = _Parser(add_help=False)
    inputs.add_argument("expr", nargs="*", help="polynomials (one per component)")
    inputs.add_argument("--vars", default=None, help="comma-separated variables")
    inputs.add_argument("--file", default=None, help="file with one polynomial per line")

    parser = _Parser(prog="asymcrit", description="Asymptotic critical values and applications.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("acv", "gcv", "infimum", "sample"):
        sub.add_parser(name, parents=[common, inputs])
    b = sub.add_parser("bench", parents=[common])
    b.add_argument("tags", nargs="*", help="rows such as f5, g4, m3, d3n5")
    b.add_argument("--suite", choices=sorted(DEFAULT_BENCH), default="families")
    db = sub.add_parser("degree-bound", parents=[common])
    db.add_argument("-n", type=int, required=True)
    db.add_argument("-p", type=int, required=True)
    db.add_argument("-d", type=int, required=True)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Parse ``argv``, run the command and print its report; return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        if args.command == "bench":
            payload = COMMANDS[args.command](args)
        else:
            with time_limit(args.timeout):
                payload = COMMANDS[args.command](args)
    except (UsageError, NotDominantError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (ResourceLimitError, JobTimeout) as exc:
        print(f"resource limit: {exc}", file=err)
        return EXIT_LIMIT
    except (InconclusiveError, ShapeError, NotZeroDimensionalError, EmptyOutputError) as exc:
        print(f"inconclusive: {exc}", file=err)
        return EXIT_INCONCLUSIVE
    report: Dict[str, object] = {"schema": SCHEMA, "command": args.command, "seed": str(args.seed)}
    report.update(payload)
    report["wall_time"] = f"{time.perf_counter() - t0:.6f}"
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True), file=out)
    else:
        print(render_text(args.command, report), file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
