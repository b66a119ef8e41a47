"""Command-line front end: build complexes, compute homology, cross-check
closed forms, grind front complexes, and print spectral tables.

Exit codes: 0 success, 1 verification/size failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .acceptance import run_all
from .arcs import e2_table_json
from .chainalg import (InvalidParameterError as ChainInvalidParameterError,
                       homology_integer, homology_mod_p,
                       euler_characteristic, spectral_page_json,
                       spectral_pages)
from .formulas import (GradedGroupList, UnsupportedParameterError,
                       euler_complete, euler_cycle, hom_cycle_cohomology,
                       homplus_cycle_formula, ind_cycle_formula,
                       vanishing_check)
from .graphs import Graph, InvalidParameterError, load, make_standard
from .homspaces import (ComplexTooLargeError, DEFAULT_MAX_CELLS,
                        filtration_by_support, hom_complex, hom_plus,
                        independence_complex)
from .torusfront import (FrontParams, build_band_front_complex, build_phi,
                         cycle_component, garland_census, grind,
                         thin_garland)


def _graph_arg(value: str) -> Graph:
    """`C5`/`K4`/`P3` build standard graphs; anything else is a file path."""
    if len(value) >= 2 and value[0] in "CKP" and value[1:].isdigit():
        kinds = {"C": "cycle", "K": "complete", "P": "path"}
        return make_standard(kinds[value[0]], int(value[1:]))
    if os.path.exists(value):
        return load(value)
    raise InvalidParameterError(
        f"graph spec {value!r} is neither C<k>/K<k>/P<k> nor a readable file")


def _build_complex(args):
    kind = args.kind
    limit = args.max_cells
    if kind == "hom":
        return hom_complex(_graph_arg(args.t), _graph_arg(args.g),
                           max_cells=limit)
    if kind == "homplus":
        return hom_plus(_graph_arg(args.t), _graph_arg(args.g),
                        max_cells=limit)
    if kind == "ind":
        return independence_complex(_graph_arg(args.g)).cell_complex()
    if kind == "phi":
        return build_phi(args.m, args.n, args.gap)
    if kind == "front":
        return build_band_front_complex(
            FrontParams(north=args.north, east=args.east, g=args.gap,
                        band=args.band))
    if kind == "cyclemap":
        return cycle_component(args.m, args.n, args.w)
    raise InvalidParameterError(f"unknown complex kind {kind!r}")


def _groups_rows(groups: dict[int, tuple[int, tuple[int, ...]]]):
    return [(d, b, ",".join(str(k) for k in t))
            for d, (b, t) in sorted(groups.items()) if b or t]


def _emit(args, table_rows, header, json_obj):
    if args.format == "json":
        print(json.dumps(json_obj, sort_keys=True, separators=(",", ":")))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table_rows)
        sys.stdout.write(buf.getvalue())
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in table_rows))
                  if table_rows else len(str(h))
                  for i, h in enumerate(header)]
        print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)))
        for row in table_rows:
            print("  ".join(str(c).ljust(w) for c, w in zip(row, widths)))


def cmd_homology(args) -> int:
    cx = _build_complex(args)
    chain = cx.chain_complex(augmented=not args.unreduced)
    if args.mod:
        bettis = homology_mod_p(chain, args.mod)
        rows = [(d, b, "") for d, b in sorted(bettis.items()) if b]
        obj = {"mod": args.mod,
               "groups": [{"dim": d, "betti": b} for d, b, _ in rows]}
    else:
        result = homology_integer(chain)
        rows = _groups_rows(result.groups)
        obj = result.to_json_dict()
    _emit(args, rows, ("dim", "betti", "torsion"), obj)
    return 0


def cmd_euler(args) -> int:
    cx = _build_complex(args)
    chain = cx.chain_complex(augmented=not args.unreduced)
    value = euler_characteristic(chain)
    _emit(args, [(value,)], ("euler",), {"value": value})
    return 0


def _closed_form_value(args):
    name = args.name
    if name == "ind-cycle":
        return ind_cycle_formula(args.m)
    if name == "homplus-cycle":
        return homplus_cycle_formula(args.m, args.n)
    if name == "hom-cycle":
        return hom_cycle_cohomology(args.m, args.n)
    if name == "euler-cycle":
        return euler_cycle(args.m, args.n)
    if name == "euler-complete":
        return euler_complete(args.m, args.n)
    if name == "vanishing":
        return vanishing_check(args.m, args.n, args.i)
    raise InvalidParameterError(f"unknown closed form {name!r}")


def cmd_closed_form(args) -> int:
    value = _closed_form_value(args)
    if isinstance(value, GradedGroupList):
        rows = _groups_rows(value.groups())
        _emit(args, rows, ("dim", "betti", "torsion"),
              {"groups": value.to_json_list()})
    else:
        scalar = int(value) if isinstance(value, bool) else value
        _emit(args, [(scalar,)], ("value",), {"value": scalar})
    return 0


def cmd_grind(args) -> int:
    params = FrontParams(north=args.north, east=args.east, g=args.gap,
                         band=args.band)
    cx = build_band_front_complex(params)
    result = grind(cx, params)
    if args.format == "json":
        cubes, dims, circles, _ = garland_census(result.thin, params)
        desc = thin_garland(params)
        obj = {"collapses": result.trace_lines,
               "intervals": result.interval_count,
               "garland": desc.to_json_dict(),
               "census": {"cubes": len(cubes), "dims": sorted(dims),
                          "circles": circles}}
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        for line in result.trace_lines:
            print(line)
        desc = thin_garland(params)
        print(f"thin garland: {desc.cube_count} cubes of dim "
              f"{desc.cube_dim}, {desc.circle_count} circle(s)")
    return 0


def cmd_e2(args) -> int:
    ring = args.ring
    if args.method == "closed":
        obj = e2_table_json(args.m, args.n, ring=ring)
        rows = [(e["p"], e["q"], e["group"]) for e in obj["entries"]]
        _emit(args, rows, ("p", "q", "group"), obj)
        return 0
    if ring != "Z2":
        print("spectral method supports ring Z2 only", file=sys.stderr)
        return 2
    cx = hom_plus(make_standard("cycle", args.m),
                  make_standard("complete", args.n),
                  max_cells=args.max_cells)
    filtered = filtration_by_support(cx)
    pages = spectral_pages(filtered, 2, 2)
    obj = spectral_page_json(2, pages[2])
    obj.update({"m": args.m, "n": args.n, "ring": "Z2"})
    rows = [(e["p"], e["q"], e["dim"]) for e in obj["entries"]]
    _emit(args, rows, ("p", "q", "dim"), obj)
    return 0


def _diff(expect: dict, got: dict) -> list[str]:
    lines = []
    for d in sorted(set(expect) | set(got)):
        e, g = expect.get(d, (0, ())), got.get(d, (0, ()))
        if e != g:
            lines.append(f"  dim {d}: expected betti={e[0]} torsion={list(e[1])},"
                         f" got betti={g[0]} torsion={list(g[1])}")
    return lines


def cmd_crosscheck(args) -> int:
    m, n = args.m, args.n
    limit = args.max_cells
    if args.name == "ind-cycle":
        expect = ind_cycle_formula(m).groups()
        got = independence_complex(make_standard("cycle", m)).homology().groups
    elif args.name == "homplus-cycle":
        expect = homplus_cycle_formula(m, n).groups()
        cx = hom_plus(make_standard("cycle", m), make_standard("complete", n),
                      max_cells=limit)
        got = homology_integer(cx.chain_complex(augmented=True)).groups
    elif args.name == "hom-cycle":
        expect = hom_cycle_cohomology(m, n).groups()
        cx = hom_complex(make_standard("cycle", m), make_standard("complete", n),
                         max_cells=limit)
        hom = homology_integer(cx.chain_complex(augmented=True))
        got = hom.cohomology_groups()
    elif args.name == "euler-cycle":
        expect = {"value": euler_cycle(m, n)}
        cx = hom_complex(make_standard("cycle", m), make_standard("complete", n),
                         max_cells=limit)
        got = {"value": euler_characteristic(cx.chain_complex(augmented=True))}
    else:
        raise InvalidParameterError(f"unknown crosscheck {args.name!r}")
    got = {k: v for k, v in got.items() if v != (0, ())}
    expect = {k: v for k, v in expect.items() if v != (0, ())}
    if expect == got:
        print(f"PASS {args.name} m={m}" + (f" n={n}" if n else ""))
        return 0
    print(f"FAIL {args.name} m={m}" + (f" n={n}" if n else ""))
    if "value" in expect:
        print(f"  expected {expect['value']}, got {got['value']}")
    else:
        for line in _diff(expect, got):
            print(line)
    return 1


def cmd_selftest(args) -> int:
    selected = args.only or None
    ok = run_all(selected=selected)
    return 0 if ok else 1


def _add_common(p):
    p.add_argument("--format", choices=("table", "json", "csv"),
                   default="table")
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)


def _add_complex_args(p):
    p.add_argument("kind",
                   choices=("hom", "homplus", "ind", "phi", "front",
                            "cyclemap"))
    p.add_argument("-t", "--t", metavar="GRAPH",
                   help="source graph: C<k>/K<k>/P<k> or a file")
    p.add_argument("-g", "--g", "--graph", dest="g", metavar="GRAPH",
                   help="target graph: C<k>/K<k>/P<k> or a file")
    p.add_argument("-m", type=int, default=0)
    p.add_argument("-n", type=int, default=0)
    p.add_argument("-w", type=int, default=0, help="winding number")
    p.add_argument("--gap", type=int, default=1)
    p.add_argument("--north", type=int, default=0)
    p.add_argument("--east", type=int, default=0)
    p.add_argument("--band", type=int, default=1)
    p.add_argument("--unreduced", action="store_true",
                   help="drop the augmentation (unreduced homology)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclehom",
        description="homology of graph homomorphism complexes of cycles")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="homology of a buildable complex")
    _add_complex_args(p)
    p.add_argument("--mod", type=int, default=0,
                   help="compute Betti numbers over GF(p) instead of Z")
    _add_common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("euler", help="reduced Euler characteristic")
    _add_complex_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("closed-form", help="evaluate a closed formula")
    p.add_argument("name", choices=("ind-cycle", "homplus-cycle", "hom-cycle",
                                    "euler-cycle", "euler-complete",
                                    "vanishing"))
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, default=0)
    p.add_argument("-i", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("grind", help="collapse trace and thin census of a "
                                     "front complex")
    p.add_argument("--north", type=int, required=True)
    p.add_argument("--east", type=int, required=True)
    p.add_argument("--gap", type=int, default=1)
    p.add_argument("--band", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_grind)

    p = sub.add_parser("e2", help="second spectral page for Hom(C_m,K_n)")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--ring", choices=("Z", "Z2"), default="Z2")
    p.add_argument("--method", choices=("closed", "spectral"),
                   default="closed")
    _add_common(p)
    p.set_defaults(func=cmd_e2)

    p = sub.add_parser("crosscheck",
                       help="closed formula against brute force")
    p.add_argument("name", choices=("ind-cycle", "homplus-cycle", "hom-cycle",
                                    "euler-cycle"))
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", type=int, nargs="*",
                   help="criterion numbers to run")
    p.set_defaults(func=cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ComplexTooLargeError as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return 1
    except (InvalidParameterError, UnsupportedParameterError,
            ChainInvalidParameterError, FileNotFoundError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
