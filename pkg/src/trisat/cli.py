"""Command-line front end.

Subcommands: h1, codim, ladder, bibi, alt, decide, table.  Output is UTF-8
JSON by default, or flat TSV with --tsv.  Exit codes: 0 success (and exact
fixture match for `table`), 1 fixture mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures, tables
from .altmethod import AltConfig, alt_saturation_check, h1_alt
from .bibi import BibiConfig, bibi_criterion, search_bibi
from .permgrp import CycleType
from .rootsys import DynkinType
from .saturation import decide, ladder_verdict
from .weil import Triple, codim_order_variety, h1_principal


def _flatten(value, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(value, dict):
        out = []
        for key, sub in value.items():
            path = f"{prefix}.{key}" if prefix else str(key)
            out.extend(_flatten(sub, path))
        return out
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return [(prefix, ",".join(str(v) for v in value))]
        return [(prefix, json.dumps(value))]
    return [(prefix, str(value))]


def _emit(report: dict, args) -> None:
    if getattr(args, "tsv", False):
        for key, value in _flatten(report):
            print(f"{key}\t{value}")
    else:
        print(json.dumps(report, indent=2))


def _trace_log(args):
    if getattr(args, "trace", False):
        return lambda line: print(line, file=sys.stderr)
    return None


def _parse_type(args) -> DynkinType:
    return DynkinType.parse(args.type)


def _parse_triple(args) -> Triple:
    return Triple.parse(args.triple)


def cmd_h1(args) -> int:
    t, tr = _parse_type(args), _parse_triple(args)
    report = h1_principal(t, tr)
    _emit({"type": str(t), "triple": list(tr.orders), **report.as_dict()}, args)
    return 0


def cmd_codim(args) -> int:
    t, tr = _parse_type(args), _parse_triple(args)
    codims = [codim_order_variety(t, n) for n in tr.orders]
    _emit({"type": str(t), "triple": list(tr.orders), "codim": codims}, args)
    return 0


def cmd_ladder(args) -> int:
    t, tr = _parse_type(args), _parse_triple(args)
    verdict = ladder_verdict(t, tr)
    _emit({"type": str(t), "triple": list(tr.orders), **verdict.as_dict()}, args)
    return 0


def cmd_bibi(args) -> int:
    t, tr = _parse_type(args), _parse_triple(args)
    if t.family != "D":
        raise ValueError(f"the bibi method applies to type D_r only, got {t}")
    if args.k is not None:
        verdict = bibi_criterion(BibiConfig(t.rank, args.k), tr)
    else:
        verdict = search_bibi(t.rank, tr)
    _emit({"type": str(t), "triple": list(tr.orders), **verdict.as_dict()}, args)
    return 0


def _parse_shapes(text: str, m: int) -> tuple[CycleType, CycleType, CycleType]:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != 3:
        raise ValueError(f"--shapes needs three comma-separated cycle types, got {text!r}")
    return tuple(CycleType.parse(p).padded(m) for p in parts)


def cmd_alt(args) -> int:
    tr = _parse_triple(args)
    m = args.m
    if m is None:
        raise ValueError("--m is required for the alt command")
    if args.shapes:
        shapes = _parse_shapes(args.shapes, m)
        report = h1_alt(m, shapes, tr)
        try:
            target = str(AltConfig(m).target)
        except ValueError:
            target = None
        _emit({"m": m, "target": target, "triple": list(tr.orders),
               "shapes": [str(s) for s in shapes], "dim_v": report.dim_g,
               "fixed": list(report.fixed_dims), "z1": report.z1, "h1": report.h1},
              args)
        return 0
    verdict = alt_saturation_check(m, tr, search=not args.no_search)
    _emit({"m": m, "triple": list(tr.orders), **verdict.as_dict()}, args)
    return 0


def cmd_decide(args) -> int:
    t, tr = _parse_type(args), _parse_triple(args)
    verdict = decide(t, tr, alt_search=args.alt_search)
    _emit({"type": str(t), "triple": list(tr.orders), **verdict.as_dict()}, args)
    return 0


def cmd_table(args) -> int:
    report = fixtures.check_table(args.id, c_max=args.sample_c,
                                  detail=args.regenerate, log=_trace_log(args))
    if args.regenerate:
        _emit({"id": report["id"], "rows": report.get("rows", [])}, args)
        return 0
    _emit(report, args)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisat",
        description="Exact saturation tests for hyperbolic triangle groups.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output (default)")
    common.add_argument("--tsv", action="store_true", help="flat TSV output")
    common.add_argument("--trace", action="store_true",
                        help="verbose progress/detail on stderr")

    sub = parser.add_subparsers(dest="command", required=True)

    def typed(p):
        p.add_argument("--type", required=True, help="Dynkin type, e.g. D7")
        p.add_argument("--triple", required=True, help="triple a,b,c e.g. 2,3,7")

    p = sub.add_parser("h1", parents=[common],
                       help="principal H^1 report for (type, triple)")
    typed(p)
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("codim", parents=[common],
                       help="codimension of the order-dividing subvarieties")
    typed(p)
    p.set_defaults(func=cmd_codim)

    p = sub.add_parser("ladder", parents=[common],
                       help="principal-ladder verdict with the H^1 chain")
    typed(p)
    p.set_defaults(func=cmd_ladder)

    p = sub.add_parser("bibi", parents=[common],
                       help="SO(2k+1) x SO(2r-2k-1) < D_r criterion or sweep over k")
    typed(p)
    p.add_argument("--k", type=int, default=None, help="fix the smaller factor rank")
    p.set_defaults(func=cmd_bibi)

    p = sub.add_parser("alt", parents=[common],
                       help="alternating-group method for Alt_m")
    p.add_argument("--m", type=int, required=True, help="degree of Alt_m")
    p.add_argument("--triple", required=True, help="triple a,b,c")
    p.add_argument("--shapes", default=None,
                   help='three cycle types "3^3,3^3,7.1^2" (short types are '
                        "padded with fixed points); reports H^1 only")
    p.add_argument("--no-search", action="store_true",
                   help="only consult the built-in generating pairs")
    p.set_defaults(func=cmd_alt)

    p = sub.add_parser("decide", parents=[common],
                       help="combined verdict: ladder, then bibi, then alt")
    typed(p)
    p.add_argument("--alt-search", action="store_true",
                   help="allow the exhaustive Alt_m search beyond the built-in pairs")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("table", parents=[common],
                       help="recompute a built-in table and diff it")
    p.add_argument("--id", required=True, choices=tables.TABLE_IDS)
    p.add_argument("--sample-c", type=int, default=tables.DEFAULT_C_MAX,
                   help="cap for parameterized rows (default 60)")
    p.add_argument("--regenerate", action="store_true",
                   help="print the recomputed rows instead of diffing")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
