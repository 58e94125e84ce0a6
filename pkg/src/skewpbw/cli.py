"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 degree cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import catalog
from .algebra import check_pbw_consistency, commutator
from .center import central_space, compare_center, is_central
from .fractions import DEFAULT_CAP, CapExceeded, membership_roundtrip, ore_solve, central_fraction_suite
from .growth import estimate_gkdim, filtration_dims, hypothesis_check
from .parser import ParseError
from .specfile import SpecFileError, read_spec_file, spec_json

OK, MISMATCH, USAGE, CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


# -- algebra selection -----------------------------------------------------------


def _algebra_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("algebra")
    g.add_argument("--algebra", default="quantum_plane", help="catalog entry name or path to a JSON presentation file")
    g.add_argument("--field", help="q (rationals) or fp:<p>")
    for name in ("q", "h", "a"):
        g.add_argument(f"--{name}", help=f"scalar parameter {name} (read in the chosen field)")
    g.add_argument("--n", type=int, help="number of variables / variable pairs")
    g.add_argument("--m", type=int, help="expected multiplicative order of q (validated)")
    g.add_argument("--param", action="append", default=[], metavar="KEY=VALUE", help="any other entry parameter")
    return p


def _entry_params(args) -> dict:
    params = {k: getattr(args, k) for k in ("field", "q", "h", "a", "n", "m") if getattr(args, k) is not None}
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"--param expects KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        params[k.strip()] = v.strip()
    return params


def _load(args):
    """(algebra, catalog entry or None)."""
    target = args.algebra
    params = _entry_params(args)
    if target.endswith(".json") or os.path.sep in target or os.path.exists(target):
        if params:
            raise UsageError("entry parameters apply only to catalog algebras, not presentation files")
        return read_spec_file(target), None
    entry = catalog.build(target, params)
    return entry.algebra, entry


def _describe(alg, entry) -> str:
    if entry is None:
        return f"{alg!r}"
    shown = ", ".join(f"{k}={v}" for k, v in entry.params.items())
    return f"{entry.name} ({shown})"


# -- commands ---------------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        entries = catalog.list_entries()
        if args.json:
            _emit_json(entries)
            return OK
        for e in entries:
            schema = ", ".join(f"{p['name']}={p['default']}" for p in e["params"])
            print(f"{e['name']:24s} {e['description']}")
            print(f"{'':24s} params: {schema}")
        return OK
    if not args.name:
        raise UsageError("catalog show needs an entry name")
    args.algebra = args.name
    alg, entry = _load(args)
    info = {
        "name": entry.name,
        "description": entry.description,
        "params": {k: str(v) for k, v in entry.params.items()},
        "generators": list(alg.gen_names),
        "base_ring": str(alg.base),
        "relations": entry.relations_text(),
        "expected_center_generators": entry.expected_center_generators,
        "notes": entry.notes,
    }
    if args.json:
        _emit_json(info)
        return OK
    print(f"{entry.name}: {entry.description}")
    print("parameters: " + ", ".join(f"{k}={v}" for k, v in entry.params.items()))
    print(f"base ring: {alg.base}; generators (PBW order): {', '.join(alg.gen_names)}")
    print("relations:")
    for line in info["relations"] or ["(all generators commute)"]:
        print(f"  {line}")
    expected = entry.expected_center_generators
    if expected is None:
        print("expected center: not recorded")
    elif not expected:
        print("expected center: K")
    else:
        print("expected center: K[" + ", ".join(expected) + "]")
    for note in entry.notes:
        print(f"note: {note}")
    return OK


def cmd_center(args) -> int:
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    alg, entry = _load(args)
    d = args.max_degree
    cb = central_space(alg, d)
    expected = entry.expected_elements() if entry is not None else None
    comparison = compare_center(alg, expected, d) if expected is not None else None
    if comparison is None:
        verdict = "no expected center recorded"
    elif comparison.matches:
        verdict = "matches expected"
    else:
        verdict = "MISMATCH"
    trivial = cb.dim == 1
    if args.json:
        out = {
            "algebra": _describe(alg, entry),
            "max_degree": d,
            "dim": cb.dim,
            "basis": [str(z) for z in cb.basis],
            "dims_by_degree": cb.dims_by_degree,
            "expected_generators": entry.expected_center_generators if entry else None,
            "verdict": verdict,
        }
        if comparison is not None and not comparison.matches:
            out["missing"] = [str(z) for z in comparison.missing]
            out["unexpected"] = [str(z) for z in comparison.extra]
        _emit_json(out)
    else:
        print(f"algebra: {_describe(alg, entry)}")
        print(f"center up to degree {d}: dim {cb.dim}")
        for z in cb.basis:
            print(f"  {z}")
        print("dims_by_degree: " + " ".join(map(str, cb.dims_by_degree)))
        if trivial:
            print(f"center is K up to degree {d}")
        if entry is not None and entry.expected_center_generators:
            print("expected generators: " + ", ".join(entry.expected_center_generators))
        print(f"verdict: {verdict}")
        if comparison is not None and not comparison.matches:
            for z in comparison.missing:
                print(f"  missing: {z}")
            for z in comparison.extra:
                print(f"  unexpected: {z}")
    return MISMATCH if comparison is not None and not comparison.matches else OK


def _table_dict(table) -> dict:
    return {
        "label": table.label,
        "dims": [[n, d] for n, d in table.dims],
        "estimate": round(table.estimate, 6) if table.estimate is not None else None,
        "window": list(table.window) if table.window else None,
        "stride": table.stride,
    }


def _print_table(table) -> None:
    print(f"{table.label}:")
    print("  n:   " + " ".join(f"{n:>5d}" for n, _ in table.dims))
    print("  dim: " + " ".join(f"{d:>5d}" for _, d in table.dims))
    if table.window is None:
        print("  no estimate")
        return
    lo, hi = table.window
    print(f"  fitted exponent {table.estimate:.3f} (samples n = {lo}..{hi} in steps of {table.stride})")


def _rounded(x: float):
    return None if math.isnan(x) else round(x, 6)


def cmd_gkdim(args) -> int:
    if args.max_step < 4:
        raise UsageError("--max-step must be at least 4")
    alg, entry = _load(args)
    table = filtration_dims(alg, args.max_step)
    try:
        estimate_gkdim(table)
        note = None
    except ValueError as e:
        note = f"no estimate: {e}; increase --max-step"
    if args.json:
        out = _table_dict(table)
        out["algebra"] = _describe(alg, entry)
        out["note"] = note
        _emit_json(out)
    else:
        print(f"algebra: {_describe(alg, entry)}")
        _print_table(table)
        if note:
            print(f"note: {note}")
    return OK


def cmd_hypothesis(args) -> int:
    if args.max_step < 4 or args.max_degree < 4:
        raise UsageError("--max-step and --max-degree must be at least 4")
    alg, entry = _load(args)
    v = hypothesis_check(alg, args.max_step, args.max_degree)
    if args.json:
        _emit_json(
            {
                "algebra": _describe(alg, entry),
                "gk_A": _rounded(v.gk_A),
                "gk_Z": _rounded(v.gk_Z),
                "holds": v.holds,
                "verdict": v.describe(),
                "caveat": v.caveat,
                "notes": v.notes,
                "algebra_growth": _table_dict(v.algebra_table),
                "center_growth": _table_dict(v.center_table),
            }
        )
    else:
        print(f"algebra: {_describe(alg, entry)}")
        _print_table(v.algebra_table)
        _print_table(v.center_table)
        gk = [("n/a" if math.isnan(x) else f"{x:.3f}") for x in (v.gk_A, v.gk_Z)]
        print(f"GKdim(A) ~ {gk[0]}, GKdim(Z(A)) ~ {gk[1]}")
        print(f"GKdim(A) < GKdim(Z(A)) + 1: {v.describe()}")
        for note in v.notes:
            print(f"note: {note}")
        print(f"caveat: {v.caveat}")
    return OK


def cmd_eval(args) -> int:
    alg, _ = _load(args)
    print(alg(args.expr))
    return OK


def cmd_mul(args) -> int:
    alg, _ = _load(args)
    out = alg.one()
    for text in args.exprs:
        out = out * alg(text)
    print(out)
    return OK


def cmd_commutator(args) -> int:
    alg, _ = _load(args)
    print(commutator(alg(args.left), alg(args.right)))
    return OK


def cmd_is_central(args) -> int:
    alg, _ = _load(args)
    verdict = is_central(alg(args.expr))
    print("true" if verdict else "false")
    return OK if verdict else MISMATCH


def cmd_ore_solve(args) -> int:
    alg, _ = _load(args)
    a, s = alg(args.left), alg(args.right)
    if not a or not s:
        raise UsageError("ore-solve needs nonzero a and s")
    u, v = ore_solve(a, s, args.cap)
    if args.json:
        _emit_json({"a": str(a), "s": str(s), "u": str(u), "v": str(v), "product": str(a * u), "verified": True})
    else:
        print(f"u = {u}")
        print(f"v = {v}")
        print(f"a*u = s*v = {a * u}  (verified)")
    return OK


def cmd_fractions(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    alg, entry = _load(args)
    reports = [
        central_fraction_suite(alg, args.trials, args.seed),
        membership_roundtrip(alg, args.trials, max(1, args.trials // 2), args.seed, cap=args.cap),
    ]
    passed = all(r.passed for r in reports)
    if args.json:
        _emit_json({"algebra": _describe(alg, entry), "seed": args.seed, "passed": passed, "reports": [r.to_dict() for r in reports]})
    else:
        print(f"algebra: {_describe(alg, entry)}")
        for r in reports:
            print(r)
        print(f"overall: {'pass' if passed else 'FAIL'} (seed {args.seed})")
    return OK if passed else MISMATCH


def cmd_pbw_check(args) -> int:
    alg, entry = _load(args)
    report = check_pbw_consistency(alg, args.degree)
    print(f"algebra: {_describe(alg, entry)}")
    print(report)
    return OK if report.passed else MISMATCH


def cmd_export(args) -> int:
    alg, _ = _load(args)
    sys.stdout.write(spec_json(alg))
    return OK


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewpbw", description="Exact computations in skew PBW extensions.")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suites (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)
    alg_opts = _algebra_options()
    seed_opt = argparse.ArgumentParser(add_help=False)
    seed_opt.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    json_opt = argparse.ArgumentParser(add_help=False)
    json_opt.add_argument("--json", action="store_true", help="machine-readable output")
    common = [alg_opts, seed_opt]

    p = sub.add_parser("catalog", parents=[alg_opts, json_opt], help="list or show built-in algebras")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("center", parents=common + [json_opt], help="degree-bounded center")
    p.add_argument("--max-degree", type=int, default=8)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("gkdim", parents=common + [json_opt], help="filtration growth and GK estimate")
    p.add_argument("--max-step", type=int, default=12)
    p.set_defaults(func=cmd_gkdim)

    p = sub.add_parser("hypothesis", parents=common + [json_opt], help="check GKdim(A) < GKdim(Z(A)) + 1")
    p.add_argument("--max-step", type=int, default=12)
    p.add_argument("--max-degree", type=int, default=12)
    p.set_defaults(func=cmd_hypothesis)

    p = sub.add_parser("eval", parents=common, help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("mul", parents=common, help="product of expressions, left to right")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("commutator", parents=common, help="a*b - b*a")
    p.add_argument("left", metavar="a")
    p.add_argument("right", metavar="b")
    p.set_defaults(func=cmd_commutator)

    p = sub.add_parser("is-central", parents=common, help="exact centrality test (exit 1 if not central)")
    p.add_argument("expr")
    p.set_defaults(func=cmd_is_central)

    p = sub.add_parser("ore-solve", parents=common + [json_opt], help="common right multiple a*u = s*v")
    p.add_argument("left", metavar="a")
    p.add_argument("right", metavar="s")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_ore_solve)

    p = sub.add_parser("fractions", parents=common + [json_opt], help="central fraction property suites")
    p.add_argument("action", choices=["check"])
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_fractions)

    p = sub.add_parser("pbw-check", parents=common, help="associativity check of the presentation")
    p.add_argument("--degree", type=int, default=4)
    p.set_defaults(func=cmd_pbw_check)

    p = sub.add_parser("export", parents=common, help="write the presentation as a JSON spec file")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else OK
    try:
        return args.func(args)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return CAP
    except ParseError as e:
        print(f"error: parse error: {e}", file=sys.stderr)
        return USAGE
    except (UsageError, SpecFileError, OSError, ValueError, KeyError) as e:
        # UnknownEntry is a KeyError; InvalidParams and presentation errors are ValueErrors
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
