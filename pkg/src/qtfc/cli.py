"""Command-line front end: ``qtfc <subcommand> [options]``.

Every run starts its output with the effective configuration, either as a
``# config`` comment line (text) or under the ``config`` key (json).
Exit codes: 0 success, 1 a verification check failed, 2 bad arguments,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import List, Optional

from . import __version__
from .coinvariants import DEFAULT_MAX_ROWS, DEFAULT_SLACK, full_coinvariant_hilbert, generator_tables
from .combinatorics import (area_genfun, coheight_genfun_chains, dyck_paths, filtered_chains, fuss_catalan,
                            fuss_catalan_q, root_poset)
from .errors import DomainError, ResourceError
from .groups import build_group
from .shi import CANDIDATE_CAP, all_regions_count, coheight_genfun, positive_regions, shi_arrangement
from .verification import FAIL, run_tier

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtfc", description="Exact q,t-Fuss-Catalan computations.")
    parser.add_argument("--version", action="version", version=f"qtfc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True, m=True):
        if group:
            p.add_argument("--group", help="group name: A2, B3, D4, I2(5), C6, Cyclic(6), G2 or G(k,p,n)")
        if m:
            p.add_argument("--m", type=int, default=1, help="Fuss parameter (default 1)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (verify only; default 1)")
        return p

    h = common(sub.add_parser("hilbert", help="Cat^(m)(W; q, t) from the minimal generating space"))
    h.add_argument("--qmax", type=int, help="q-degree cap (default: max(N, N*) + slack at m = 1, exact region above)")
    h.add_argument("--tmax", type=int, help="t-degree cap (same default as --qmax)")
    h.add_argument("--det-orientation", choices=("standard", "swapped"), default="standard",
                   help="which determinant power the isotypic projection uses (default standard)")
    h.add_argument("--slack", type=int, default=DEFAULT_SLACK, help=f"slack band (default {DEFAULT_SLACK})")
    h.add_argument("--max-rows", type=int, default=DEFAULT_MAX_ROWS,
                   help=f"row cap per elimination (default {DEFAULT_MAX_ROWS})")

    common(sub.add_parser("catalan", help="Fuss-Catalan number and its q-analogue"))

    d = common(sub.add_parser("dyck", help="m-Dyck paths: count and area generating function"), group=False)
    d.add_argument("--n", type=int, required=True, help="path length n")

    c = common(sub.add_parser("chains", help="filtered chains in a root poset"), group=True)
    c.add_argument("--type", dest="kind", help="poset: A3, B2, G2, ArmstrongI2(k) (default: from --group)")

    s = common(sub.add_parser("shi", help="regions of the extended Shi arrangement"), group=False)
    s.add_argument("--type", dest="kind", required=True, help="root system: A2, B3, G2, ...")
    s.add_argument("--truncate", type=int, help="cap the highest root at positive level K")
    s.add_argument("--all-regions", action="store_true", help="count all regions, not just positive ones")
    s.add_argument("--genfun", action="store_true", help="print only the coheight generating function")
    s.add_argument("--cap", type=int, default=CANDIDATE_CAP, help=f"level-vector cap (default {CANDIDATE_CAP})")

    f = common(sub.add_parser("coinv-full", help="Hilbert series of the full diagonal coinvariant ring"), m=False)
    f.add_argument("--max-degree", type=int, help="total degree cap (default 2 max(N, N*) + 2)")

    v = common(sub.add_parser("verify", help="run the verification harness"))
    v.set_defaults(m=None)
    v.add_argument("--tier", type=int, choices=(0, 1, 2), default=0)
    v.add_argument("--timings", action="store_true", help="include runtimes (output is then not reproducible)")
    return parser


def _emit(args, config: dict, text_lines: List[str], payload: dict, out):
    if args.format == "json":
        out.write(json.dumps({"config": config, "result": payload}, sort_keys=True, indent=2) + "\n")
    else:
        out.write("# config " + json.dumps(config, sort_keys=True) + "\n")
        for line in text_lines:
            out.write(line + "\n")


def _need_group(args):
    if not args.group:
        raise DomainError(f"{args.command} needs --group")
    return build_group(args.group)


def _cmd_hilbert(args, out):
    g = _need_group(args)
    box = None
    if args.qmax is not None or args.tmax is not None:
        if args.qmax is None or args.tmax is None:
            raise DomainError("--qmax and --tmax must be given together")
        box = (args.qmax, args.tmax)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        table = generator_tables(g, args.m, box, args.det_orientation, slack=args.slack,
                                 max_rows=args.max_rows)[-1]
    config = {"command": "hilbert", "group": g.display_name, "m": args.m,
              "det_orientation": args.det_orientation, "slack": args.slack, "max_rows": args.max_rows,
              "degree_box": {"qmax": table.degree_box[0], "tmax": table.degree_box[1],
                             "total_max": table.total_degree_cap}}
    lines = [str(table.polynomial)]
    lines += [f"# warning: {w.message}" for w in caught]
    _emit(args, config, lines, table.to_dict(), out)
    return EXIT_OK


def _cmd_catalan(args, out):
    g = _need_group(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        number = fuss_catalan(g, args.m)
        qpoly = fuss_catalan_q(g, args.m)
    config = {"command": "catalan", "group": g.display_name, "m": args.m, "degrees": list(g.degrees),
              "coxeter_number": g.h}
    lines = [str(number), str(qpoly)] + [f"# warning: {w.message}" for w in caught]
    _emit(args, config, lines, {"number": number, "q_analog": str(qpoly)}, out)
    return EXIT_OK


def _cmd_dyck(args, out):
    if args.n < 0 or args.m < 1:
        raise DomainError("dyck needs n >= 0 and m >= 1")
    count = sum(1 for _ in dyck_paths(args.n, args.m))
    gf = area_genfun(args.n, args.m)
    config = {"command": "dyck", "n": args.n, "m": args.m}
    _emit(args, config, [str(count), str(gf)], {"count": count, "area_genfun": str(gf)}, out)
    return EXIT_OK


def _cmd_chains(args, out):
    kind = args.kind or args.group
    if not kind:
        raise DomainError("chains needs --type or --group")
    poset = root_poset(kind)
    count = sum(1 for _ in filtered_chains(poset, args.m))
    gf = coheight_genfun_chains(poset, args.m)
    config = {"command": "chains", "poset": poset.name, "m": args.m}
    _emit(args, config, [str(count), str(gf)], {"count": count, "genfun": str(gf)}, out)
    return EXIT_OK


def _cmd_shi(args, out):
    arr = shi_arrangement(args.kind, args.m, truncate=args.truncate)
    config = {"command": "shi", "arrangement": arr.name, "m": args.m, "truncate": args.truncate,
              "all_regions": args.all_regions, "cap": args.cap}
    if args.all_regions:
        total = all_regions_count(arr, args.cap)
        _emit(args, config, [str(total)], {"all_regions": total}, out)
        return EXIT_OK
    regions = positive_regions(arr, args.cap)
    gf = coheight_genfun(arr, regions)
    if args.genfun:
        _emit(args, config, [str(gf)], {"genfun": str(gf)}, out)
        return EXIT_OK
    lines = [f"positive regions: {len(regions)}", f"genfun: {gf}"]
    for r in regions:
        wit = ", ".join(str(w) for w in r.witness)
        lines.append(f"{list(r.levels)} coheight={r.coheight} witness=({wit})")
    payload = {"positive_regions": len(regions), "genfun": str(gf), "roots": [list(r) for r in arr.roots],
               "caps": list(arr.caps), "regions": [r.to_dict() for r in regions]}
    _emit(args, config, lines, payload, out)
    return EXIT_OK


def _cmd_coinv_full(args, out):
    g = _need_group(args)
    series = full_coinvariant_hilbert(g, args.max_degree)
    config = {"command": "coinv-full", "group": g.display_name, "max_degree": args.max_degree}
    _emit(args, config, [str(series), f"dimension: {series.value_at_one()}"],
          {"hilbert": str(series), "dimension": series.value_at_one()}, out)
    return EXIT_OK


def _cmd_verify(args, out):
    group = build_group(args.group).display_name if args.group else None
    reports = run_tier(args.tier, jobs=args.jobs, group=group, m=args.m)
    config = {"command": "verify", "tier": args.tier, "group": group, "m": args.m}
    failed = sum(1 for r in reports if r.status == FAIL)
    if not args.timings:
        for r in reports:
            r.runtime = 0.0
    if args.format == "json":
        rows = [r.to_dict() for r in reports]
        if not args.timings:
            for row in rows:
                row.pop("runtime")
        _emit(args, config, [], {"reports": rows, "failed": failed, "total": len(reports)}, out)
    else:
        lines = []
        for r in reports:
            line = r.line()
            lines.append(line if args.timings else line.rsplit(" (", 1)[0])
        lines.append(f"{len(reports) - failed}/{len(reports)} checks without failure")
        _emit(args, config, lines, {}, out)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


_COMMANDS = {
    "hilbert": _cmd_hilbert, "catalan": _cmd_catalan, "dyck": _cmd_dyck, "chains": _cmd_chains,
    "shi": _cmd_shi, "coinv-full": _cmd_coinv_full, "verify": _cmd_verify,
}


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print(f"qtfc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"qtfc: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def main(argv: Optional[List[str]] = None) -> int:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
