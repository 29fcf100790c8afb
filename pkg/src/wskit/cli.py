"""Command-line front end.

Exit codes: 0 success, 1 usage or input-format error, 2 geometry error,
3 exact solver budget exceeded (the best set found is still printed).
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import io as wio
from .errors import BudgetExceeded, GeometryError, WskitError

EXIT_OK, EXIT_USAGE, EXIT_GEOMETRY, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_ALLOW_COLLINEAR = False


def _load(path):
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    return wio.parse_instance(text, allow_collinear=_ALLOW_COLLINEAR)


def _need_points(points):
    if points is None:
        raise UsageError('instance has no "points" array')
    return points


def _emit(doc, out):
    out.write(json.dumps(doc) + "\n")


def _write(path, text):
    with open(path, "w") as f:
        f.write(text)


def cmd_validate(args, out):
    from .geometry import is_x_monotone, reflex_vertices

    poly, points = _load(args.file)
    _emit({"valid": True, "n": poly.n, "reflex": len(reflex_vertices(poly)),
           "monotone": is_x_monotone(poly), "points": 0 if points is None else len(points)}, out)


def cmd_visibility(args, out):
    from .visibility import visibility_region

    poly, _ = _load(args.file)
    p = wio.parse_point(args.point)
    vr = visibility_region(poly, p)
    _emit({"region": wio.points_json(vr.region.vertices),
           "arms": [wio.points_json(s) for s in vr.arms]}, out)
    if args.svg:
        _write(args.svg, wio.render_svg(poly, regions=[vr], witnesses=[p]))


def cmd_disws(args, out):
    from .witness import solve_disws

    poly, points = _load(args.file)
    sol = solve_disws(poly, _need_points(points))
    _emit(wio.solution_json(sol, 1), out)
    if args.svg:
        _svg_solution(args.svg, poly, sol.chosen, points)


def _svg_solution(path, poly, chosen, candidates=()):
    from .visibility import visibility_region

    regs = [visibility_region(poly, p) for p in chosen]
    _write(path, wio.render_svg(poly, regions=regs, candidates=candidates, witnesses=chosen))


def cmd_ws_exact(args, out):
    from .witness import solve_ws_exact

    poly, _ = _load(args.file)
    log = (lambda s: print(s, file=sys.stderr)) if args.verbose else None
    try:
        sol = solve_ws_exact(poly, k_max=args.kmax, log=log)
    except BudgetExceeded as e:
        doc = wio.solution_json(e.best, 1)
        doc["optimal"] = False
        _emit(doc, out)
        raise
    doc = wio.solution_json(sol, 1)
    doc["optimal"] = True
    _emit(doc, out)
    if args.svg:
        _svg_solution(args.svg, poly, sol.chosen)


def cmd_ws_approx(args, out):
    from .witness import solve_ws_approx

    poly, _ = _load(args.file)
    sol, frac = solve_ws_approx(poly, wio.parse_rational(args.eps))
    _emit(wio.solution_json(sol, frac), out)
    if args.svg:
        _svg_solution(args.svg, poly, sol.chosen)


def cmd_candidates(args, out):
    from .discretize import exact_candidates, q_approx, witgen

    poly, _ = _load(args.file)
    if args.mode == "witgen":
        cs = witgen(poly, args.k)
    elif args.mode == "exact":
        cs = exact_candidates(poly, args.k)
    elif args.mode == "q1":
        cs = q_approx(poly, 1)
    else:
        cs = q_approx(poly, 2 * args.k)
    prov = cs.provenance
    pts = cs.points()
    _emit({"size": len(pts), "sizes": cs.sizes, "points": wio.points_json(pts),
           "provenance": [prov[p] for p in pts]}, out)
    if args.svg:
        _write(args.svg, wio.render_svg(poly, candidates=pts))


def cmd_strings(args, out):
    from .region_graph import regions_intersect_general
    from .strings import build_string_model, strings_intersect

    poly, points = _load(args.file)
    m = build_string_model(poly, _need_points(points))
    k = len(m)
    sig = [[i, j] for i in range(k) for j in range(i + 1, k) if strings_intersect(m, i, j)]
    vig = [[i, j] for i in range(k) for j in range(i + 1, k)
           if regions_intersect_general(m.regions[i], m.regions[j])]
    _emit({"epsilon": wio.rational_str(m.epsilon), "delta": wio.rational_str(m.delta),
           "sig_edges": sig, "vig_edges": vig, "isomorphic": sig == vig,
           "strings": [wio.points_json(s) for s in m.strings]}, out)
    if args.svg:
        _write(args.svg, wio.render_svg(m.inflated, strings=m.strings))


def cmd_gen(args, out):
    from .generate import random_monotone_polygon, random_point_in, random_simple_polygon
    from .oracle import comb_generator

    if (args.comb is None) == (args.random is None):
        raise UsageError("gen needs exactly one of --comb G or --random N")
    rng = random.Random(args.seed)
    if args.comb is not None:
        if args.comb < 1:
            raise UsageError("--comb needs G >= 1")
        poly = comb_generator(args.comb, args.seed)
    elif args.simple:
        poly = random_simple_polygon(args.random, rng)
    else:
        poly = random_monotone_polygon(args.random, rng, grid=max(40, args.random + 1))
    points = [random_point_in(poly, rng) for _ in range(args.points)] if args.points else None
    text = wio.serialize(poly, points)
    if args.out:
        _write(args.out, text + "\n")
    else:
        out.write(text + "\n")


def cmd_oracle(args, out):
    from . import oracle

    poly, points = _load(args.file)
    if args.check == "visibility":
        if not args.point:
            raise UsageError("oracle visibility needs --point")
        vr = oracle.naive_visibility(poly, wio.parse_point(args.point))
        _emit({"region": wio.points_json(vr.region.vertices),
               "arms": [wio.points_json(s) for s in vr.arms]}, out)
    elif args.check == "intersection":
        if not (args.a and args.b):
            raise UsageError("oracle intersection needs --a and --b")
        hit = oracle.sample_intersection(poly, wio.parse_point(args.a), wio.parse_point(args.b),
                                         args.density or 100)
        _emit({"common_sample": hit}, out)
    elif args.check == "lower-bound":
        sol = oracle.dense_ws_lower_bound(poly, args.density or 16, solution=True)
        _emit({"lower_bound": sol.size, "witnesses": wio.points_json(sol.chosen)}, out)
    elif args.check == "mis":
        from .region_graph import build_vig

        vig = build_vig(poly, _need_points(points))
        _emit({"mis": oracle.exhaustive_mis(vig)}, out)


def build_parser():
    p = _Parser(prog="wskit", description="Witness sets in simple and monotone polygons.")
    p.add_argument("--allow-collinear", action="store_true",
                   help="accept collinear consecutive vertices in instance files")
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)

    s = sub.add_parser("validate", help="check an instance file")
    s.add_argument("file")
    s.set_defaults(fn=cmd_validate)

    s = sub.add_parser("visibility", help="visibility region of one point")
    s.add_argument("file")
    s.add_argument("--point", required=True, help="X,Y with integer or p/q parts")
    s.add_argument("--svg")
    s.set_defaults(fn=cmd_visibility)

    s = sub.add_parser("disws", help="largest witness set among the embedded points")
    s.add_argument("file")
    s.add_argument("--svg")
    s.set_defaults(fn=cmd_disws)

    s = sub.add_parser("ws-exact", help="maximum witness set of a monotone polygon")
    s.add_argument("file")
    s.add_argument("--kmax", type=int, default=None)
    s.add_argument("--svg")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(fn=cmd_ws_exact)

    s = sub.add_parser("ws-approx", help="approximate witness set of a monotone polygon")
    s.add_argument("file")
    s.add_argument("--eps", required=True)
    s.add_argument("--svg")
    s.set_defaults(fn=cmd_ws_approx)

    s = sub.add_parser("candidates", help="candidate point sets")
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", choices=["witgen", "exact", "q1", "q2i"], default="witgen")
    s.add_argument("--svg")
    s.set_defaults(fn=cmd_candidates)

    s = sub.add_parser("strings", help="string model of the embedded points")
    s.add_argument("file")
    s.add_argument("--svg")
    s.set_defaults(fn=cmd_strings)

    s = sub.add_parser("gen", help="generate an instance")
    s.add_argument("--comb", type=int)
    s.add_argument("--random", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--simple", action="store_true", help="random simple instead of monotone")
    s.add_argument("--points", type=int, default=0, help="also embed this many random points")
    s.add_argument("--out")
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("oracle", help="brute-force reference checks")
    s.add_argument("check", choices=["visibility", "intersection", "lower-bound", "mis"])
    s.add_argument("file")
    s.add_argument("--point")
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--density", type=int)
    s.set_defaults(fn=cmd_oracle)
    return p


def cli_main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        global _ALLOW_COLLINEAR
        args = build_parser().parse_args(argv)
        _ALLOW_COLLINEAR = args.allow_collinear
        if not getattr(args, "fn", None):
            raise UsageError("missing subcommand")
        args.fn(args, out)
        return EXIT_OK
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except GeometryError as e:
        print(f"geometry error: {e}", file=sys.stderr)
        return EXIT_GEOMETRY
    except (WskitError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(cli_main())
