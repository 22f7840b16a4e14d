"""``srglab`` command-line front end.

Every subcommand prints one JSON object with the keys ``command``, ``inputs``,
``results`` and ``checks`` (sorted keys, floats to 12 significant digits), or an
aligned plain-text rendering with ``--format text``.

Exit codes: 0 success, 1 a condition reported Excluded under ``--assert`` (or a
failed verification), 2 usage error, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

import numpy as np

from . import constructions as cons
from .errors import InvalidParams, NotPrime, SrglabError
from .feasibility import feasibility
from .friendship import verify_friendship_theorem
from .graph import SrgParams, complement, detect_srg
from .invariants import (
    chromatic_number,
    clique_number,
    ell_friendship_bounds,
    independence_number,
    srg_invariant_bounds,
    tightness,
)
from .io import format_graph, read_graph, to_graph6
from .spectral import eigenvalues, energy, srg_energy, srg_spectrum
from .subgraphs import (
    ConditionReport,
    cycle_theta_energy,
    find_induced_cycles,
    induced_srg_pair,
    induced_theta_energy,
    spanning_simple,
    spanning_theta,
    triangular_host_test,
)
from .theta import theta_sdp, theta_srg_exact, theta_srg, theta_srg_complement

SIG_DIGITS = 12


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output


def _clean(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else _clean(float(obj))
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.{SIG_DIGITS}g}")
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, SrgParams):
        return list(obj.as_tuple())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        width = max((len(k) for k in obj), default=0)
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val and any(isinstance(v, (dict, list)) for v in (val.values() if isinstance(val, dict) else val)):
                lines.append(f"{pad}{key}:")
                lines += _text(val, indent + 1)
            else:
                lines.append(f"{pad}{key.ljust(width)}  {_scalar(val)}")
    elif isinstance(obj, list) and obj and all(isinstance(v, dict) for v in obj):
        cols = sorted({k for row in obj for k in row})
        cells = [[_scalar(row.get(c)) for c in cols] for row in obj]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
        lines.append(pad + "  ".join(c.ljust(w) for c, w in zip(cols, widths)))
        lines += [pad + "  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in cells]
    elif isinstance(obj, list):
        lines += [f"{pad}- {_scalar(v)}" for v in obj]
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _scalar(val) -> str:
    if isinstance(val, (dict, list)):
        return json.dumps(val, sort_keys=True)
    if val is None:
        return "-"
    return str(val)


def _emit(args, command: str, inputs: dict, results, checks=None) -> None:
    payload = _clean({"command": command, "inputs": inputs, "results": results, "checks": checks or []})
    if args.format == "text":
        print("\n".join(_text({k: v for k, v in payload.items() if v != []})))
    else:
        print(json.dumps(payload, sort_keys=True))


# ---------------------------------------------------------------------------
# argument helpers


def _params(text: str) -> SrgParams:
    try:
        return SrgParams.parse(text)
    except InvalidParams as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_range(text: str) -> list[int]:
    """``a..b`` (inclusive) or a comma-separated list."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from exc


def load_catalog() -> dict:
    path = resources.files("srglab") / "data" / "catalog.json"
    return json.loads(path.read_text())


def _named_params(name: str) -> SrgParams:
    catalog = load_catalog()
    if name not in catalog:
        raise UsageError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(catalog))}")
    return SrgParams(*catalog[name]["params"])


def build_named(name: str, args: list[int]):
    """Construct a graph by name; ``args`` are the integer arguments."""
    simple = {
        "petersen": (cons.petersen, 0),
        "shrikhande": (cons.shrikhande, 0),
        "rook": (cons.rook, 1),
        "triangular": (cons.triangular, 1),
        "cycle": (cons.cycle, 1),
        "path": (cons.path, 1),
        "star": (cons.star, 1),
        "windmill": (cons.windmill, 1),
        "complete": (cons.complete, 1),
        "symplectic": (cons.symplectic_polar, 2),
    }
    if name == "symplectic-complement":
        if len(args) != 2:
            raise UsageError("symplectic-complement takes n and q")
        return complement(cons.symplectic_polar(*args))
    if name not in simple:
        raise UsageError(f"unknown construction {name!r}")
    fn, arity = simple[name]
    if len(args) != arity:
        raise UsageError(f"{name} takes {arity} integer argument(s), got {len(args)}")
    return fn(*args)


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    g = build_named(args.name, args.args)
    if args.emit:
        sys.stdout.write(format_graph(g, args.emit))
        return 0
    p = detect_srg(g)
    _emit(
        args,
        "construct",
        {"name": args.name, "args": args.args},
        {"order": g.order, "edges": g.num_edges, "graph6": to_graph6(g), "srg": p},
    )
    return 0


def _spectrum_dict(spec) -> list[dict]:
    return [{"eigenvalue": v, "multiplicity": m} for v, m in spec.pairs]


def cmd_spectrum(args) -> int:
    if args.srg:
        spec = srg_spectrum(args.srg)
        inputs = {"srg": args.srg}
    else:
        spec = eigenvalues(read_graph(args.graph), method=args.method)
        inputs = {"graph": args.graph, "method": args.method}
    _emit(args, "spectrum", inputs, {"spectrum": _spectrum_dict(spec), "energy": spec.energy})
    return 0


def cmd_energy(args) -> int:
    if args.srg:
        _emit(args, "energy", {"srg": args.srg}, {"energy": srg_energy(args.srg)})
    else:
        _emit(args, "energy", {"graph": args.graph}, {"energy": energy(read_graph(args.graph))})
    return 0


def cmd_theta(args) -> int:
    if args.srg:
        p = args.srg
        exact = theta_srg_exact(p)
        theta = exact[0] if exact else theta_srg(p)
        theta_c = exact[1] if exact else theta_srg_complement(p)
        _emit(
            args,
            "theta",
            {"srg": p},
            {"theta": theta, "theta_complement": theta_c, "method": "SrgClosedForm"},
            [{"name": "product identity", "value": theta * theta_c, "expected": p.n}],
        )
        return 0
    g = read_graph(args.graph)
    res = theta_sdp(g, tol=args.tol)
    results = {
        "theta": res.value,
        "method": "Sdp",
        "iterations": res.iterations,
        "duality_gap": res.duality_gap,
    }
    checks = []
    if args.complement:
        resc = theta_sdp(complement(g), tol=args.tol)
        results["theta_complement"] = resc.value
        checks.append({"name": "product lower bound", "value": res.value * resc.value, "expected_at_least": g.order})
    p = detect_srg(g)
    if p is not None:
        checks.append({"name": "srg closed form", "value": theta_srg(p), "sdp": res.value})
    _emit(args, "theta", {"graph": args.graph, "tol": args.tol}, results, checks)
    return 0


def cmd_invariants(args) -> int:
    g = read_graph(args.graph)
    gc = complement(g)
    results = {
        "alpha": independence_number(g),
        "omega": clique_number(g),
        "chi": chromatic_number(g),
        "chi_complement": chromatic_number(gc),
    }
    _emit(args, "invariants", {"graph": args.graph}, results)
    return 0


def _parse_actual(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        key, _, val = item.partition("=")
        if key not in {"alpha", "omega", "chi", "chi_complement"} or not val.isdigit():
            raise UsageError(f"bad --actual entry {item!r}")
        out[key] = int(val)
    return out


def cmd_invariant_bounds(args) -> int:
    if args.srg:
        bounds = srg_invariant_bounds(args.srg)
        inputs = {"srg": args.srg}
    else:
        try:
            n, d, ell = (int(x) for x in args.ell.split(","))
        except ValueError as exc:
            raise UsageError(f"--ell expects n,d,ell, got {args.ell!r}") from exc
        bounds = ell_friendship_bounds(n, d, ell)
        inputs = {"ell": [n, d, ell]}
    actual = _parse_actual(args.actual)
    checks = []
    if actual:
        inputs["actual"] = actual
        checks = [{"name": k, "tight": v} for k, v in tightness(bounds, actual).items()]
    _emit(args, "invariant-bounds", inputs, bounds.as_dict(), checks)
    return 0


def cmd_feasible(args) -> int:
    report = feasibility(args.srg)
    print(report.render(), file=sys.stderr)
    data = report.as_dict()
    _emit(args, "feasible", {"srg": args.srg}, {"feasible": data["feasible"]}, data["checks"])
    return 1 if args.assert_ and not report.feasible else 0


def _report_exit(args, reports: list[ConditionReport]) -> int:
    return 1 if args.assert_ and any(r.excluded for r in reports) else 0


def _combined(reports: dict[str, ConditionReport]) -> dict:
    verdict = "Excluded" if any(r.excluded for r in reports.values()) else "Inconclusive"
    return {"verdict": verdict, **{k: r.as_dict() for k, r in reports.items()}}


def cmd_spanning(args) -> int:
    g = _named_params(args.g_named) if args.g_named else args.g
    h = _named_params(args.h_named) if args.h_named else args.h
    if g is None or h is None:
        raise UsageError("spanning-check needs --g and --h (or their --*-named forms)")
    reports = {"simple": spanning_simple(g, h), "theta": spanning_theta(g, h)}
    _emit(args, "spanning-check", {"g": g, "h": h}, _combined(reports))
    return _report_exit(args, list(reports.values()))


def cmd_induced(args) -> int:
    g = _named_params(args.named) if args.named else args.g
    if g is None:
        raise UsageError("induced-check needs --g or --named")
    inputs: dict = {"g": g}
    reports: dict[str, ConditionReport] = {}
    if args.cycle:
        th, en = cycle_theta_energy(args.cycle)
        inputs.update(cycle=args.cycle, theta_h=th, energy_h=en)
        reports["theta_energy"] = induced_theta_energy(g, th, en)
    h = _named_params(args.h_named) if args.h_named else args.h
    if h is not None:
        inputs["h"] = h
        reports["srg_pair"] = induced_srg_pair(g, h)
        reports["theta_energy"] = induced_theta_energy(g, theta_srg(h), srg_energy(h))
    if not reports:
        raise UsageError("induced-check needs --h, --h-named or --cycle")
    _emit(args, "induced-check", inputs, _combined(reports))
    return _report_exit(args, list(reports.values()))


def cmd_triangular_host(args) -> int:
    h = _named_params(args.h_named) if args.h_named else args.h
    if h is None:
        raise UsageError("triangular-host needs --h or --h-named")
    rows, reports = [], []
    for ell in args.l_range:
        rep = triangular_host_test(h, ell)
        reports.append(rep)
        rows.append({"l": ell, "verdict": rep.verdict.value, **{c.name: c.lhs for c in rep.checks}})
    excluded = [r["l"] for r in rows if r["verdict"] == "Excluded"]
    _emit(
        args,
        "triangular-host",
        {"h": h, "l_range": [args.l_range[0], args.l_range[-1]]},
        {"rows": rows, "excluded": excluded},
    )
    return _report_exit(args, reports)


def cmd_induced_cycles(args) -> int:
    g = read_graph(args.graph)
    lengths = sorted(find_induced_cycles(g, min(args.max, g.order)))
    _emit(args, "induced-cycles", {"graph": args.graph, "max": args.max}, {"lengths": lengths})
    return 0


def cmd_verify_friendship(args) -> int:
    scan = verify_friendship_theorem(args.max_n, jobs=args.jobs)
    ok = scan.all_windmills
    if args.format == "json":
        _emit(args, "verify-friendship", {"max_n": args.max_n}, scan.as_dict(), [{"name": "all survivors are windmills", "passed": ok}])
    else:
        print(f"scanned {scan.graphs_scanned} labelled graphs on 2..{args.max_n} vertices")
        for n, count in scan.per_order.items():
            print(f"  order {n}: {count} with the friendship property")
        for s in sorted(set(scan.satisfying), key=lambda x: (len(x), x)):
            print(f"  {s}")
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def table_symplectic(qs, ns, cap: int) -> list[dict]:
    """Rows of the complement-of-Sp(2n, q) table; constructed and checked when within ``cap``."""
    rows = []
    for q in qs:
        if not cons.is_prime(q):
            raise NotPrime(f"{q} is not prime; only prime fields are supported")
        for n in ns:
            p = cons.symplectic_complement_params(n, q)
            exact = theta_srg_exact(p)
            theta_h, theta_hbar = (exact if exact else (theta_srg(p), theta_srg_complement(p)))
            row = {
                "n": n,
                "q": q,
                "params": p,
                "ell": p.lam,
                "theta_H": theta_h,
                "theta_Hbar": theta_hbar,
                "alpha_H": (q**n - 1) // (q - 1),
                "chi_H": q**n + 1,
                "alpha_chi_source": "literature identity",
                "constructed": None,
            }
            if p.n <= cap:
                h = complement(cons.symplectic_polar(n, q, cap=cap))
                row["constructed"] = detect_srg(h) == p
            rows.append(row)
    return rows


def cmd_table(args) -> int:
    if args.table != "symplectic":
        raise UsageError(f"unknown table {args.table!r}")
    rows = table_symplectic(args.q, args.n, args.cap)
    checks = [
        {
            "n": r["n"],
            "q": r["q"],
            "theta_H_equals_alpha": r["theta_H"] == r["alpha_H"],
            "theta_Hbar_equals_chi": r["theta_Hbar"] == r["chi_H"],
            "constructed": r["constructed"],
        }
        for r in rows
    ]
    _emit(args, "table", {"table": "symplectic", "q": args.q, "n": args.n, "cap": args.cap}, {"rows": rows}, checks)
    failed = any(c["constructed"] is False or not c["theta_H_equals_alpha"] for c in checks)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=None)
    asserting = argparse.ArgumentParser(add_help=False)
    asserting.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 on Excluded")

    parser = argparse.ArgumentParser(prog="srglab", description="Theta, energy and subgraph conditions for strongly regular graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a named graph")
    p.add_argument("name")
    p.add_argument("args", nargs="*", type=int)
    p.add_argument("--emit", choices=["edgelist", "graph6"], help="print the graph itself instead of a summary")
    p.set_defaults(func=cmd_construct)

    for name, func in (("spectrum", cmd_spectrum), ("energy", cmd_energy)):
        p = sub.add_parser(name, parents=[common])
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("graph", nargs="?", help="edge-list or graph6 file, or - for stdin")
        src.add_argument("--srg", type=_params)
        if name == "spectrum":
            p.add_argument("--method", choices=["eigh", "jacobi"], default="eigh")
        p.set_defaults(func=func)

    p = sub.add_parser("theta", parents=[common])
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("graph", nargs="?")
    src.add_argument("--srg", type=_params)
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--complement", action="store_true", help="also solve for the complement")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("invariants", parents=[common], help="exact alpha, omega, chi")
    p.add_argument("graph")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("invariant-bounds", parents=[common])
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--srg", type=_params)
    src.add_argument("--ell", help="n,d,ell for the constant common-neighbour case")
    p.add_argument("--actual", help="known values, e.g. alpha=4,omega=3")
    p.set_defaults(func=cmd_invariant_bounds)

    p = sub.add_parser("feasible", parents=[common, asserting])
    p.add_argument("--srg", type=_params, required=True)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("spanning-check", parents=[common, asserting])
    p.add_argument("--g", type=_params)
    p.add_argument("--h", type=_params)
    p.add_argument("--g-named")
    p.add_argument("--h-named")
    p.set_defaults(func=cmd_spanning)

    p = sub.add_parser("induced-check", parents=[common, asserting])
    p.add_argument("--g", type=_params)
    p.add_argument("--named", help="host family from the bundled catalog")
    p.add_argument("--h", type=_params)
    p.add_argument("--h-named")
    p.add_argument("--cycle", type=int, help="test an induced cycle of this length")
    p.set_defaults(func=cmd_induced)

    p = sub.add_parser("triangular-host", parents=[common, asserting])
    p.add_argument("--h", type=_params)
    p.add_argument("--h-named")
    p.add_argument("--l-range", type=_int_range, default=list(range(4, 41)))
    p.set_defaults(func=cmd_triangular_host)

    p = sub.add_parser("induced-cycles", parents=[common])
    p.add_argument("graph")
    p.add_argument("--max", type=int, default=32)
    p.set_defaults(func=cmd_induced_cycles)

    p = sub.add_parser("verify-friendship", parents=[common])
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_friendship)

    p = sub.add_parser("table", parents=[common])
    p.add_argument("table", choices=["symplectic"])
    p.add_argument("--q", type=_int_range, default=[2, 3, 5, 7])
    p.add_argument("--n", type=_int_range, default=[3, 4, 5, 6])
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_table)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = "text" if args.command == "verify-friendship" else "json"
    if getattr(args, "cap", 0) is None:
        args.cap = cons.vertex_cap()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"srglab: error: {exc}", file=sys.stderr)
        return 2
    except (SrglabError, OSError) as exc:
        print(f"srglab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
