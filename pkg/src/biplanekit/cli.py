"""Command line interface.

Exit codes: 0 on success, 1 on a negative verdict (NOT-BIPLANE or
TOO-MANY-EDGES), 2 on malformed input or bad arguments.  Every randomized
command takes an explicit --seed so runs are reproducible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    brute_force_maximum,
    degree_histogram,
    find_maximal_gap,
    vertex_connectivity,
)
from .augmentation import NotBiplaneError, maximal_augment
from .constructions import (
    apply_boundary_flips,
    apply_corner_flips,
    bounds,
    gen_arc_in_triangle,
    gen_convex,
    gen_grid,
    gen_hgon_with_arc,
)
from .fileio import (
    FileFormatError,
    format_graph,
    format_points,
    parse_graph,
    parse_points,
)
from .geometry import Strictness, convex_hull, validate
from .graphs import GeometricGraph
from .recognition import BiplaneDecomposition, OddCycleWitness, TooManyEdges, test_biplane
from .svgrender import RenderSpec, render_svg
from .triangulation import NotPlaneError, complete_to_triangulation, enumerate_triangulations


def _strictness(args: argparse.Namespace) -> Strictness:
    return Strictness.RELAXED if getattr(args, "relaxed", False) else Strictness.STRICT


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FileFormatError(0, 0, f"cannot read {path}: {exc}")


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _print_edges(edges) -> None:
    for a, b in edges:
        print(f"{a} {b}")


def _cmd_check(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph), _strictness(args))
    verdict = test_biplane(g)
    if isinstance(verdict, BiplaneDecomposition):
        print("BIPLANE")
        print(f"LAYER1 {len(verdict.layer1)}")
        _print_edges(verdict.layer1)
        print(f"LAYER2 {len(verdict.layer2)}")
        _print_edges(verdict.layer2)
        return 0
    if isinstance(verdict, TooManyEdges):
        print("TOO-MANY-EDGES")
        print(f"n={verdict.n} m={verdict.m} cap={verdict.cap}")
        return 1
    assert isinstance(verdict, OddCycleWitness)
    print("NOT-BIPLANE")
    print(f"WITNESS {len(verdict.cycle)}")
    _print_edges(verdict.cycle)
    return 1


def _cmd_triangulate(args: argparse.Namespace) -> int:
    text = _read(args.points)
    strict = _strictness(args)
    try:
        g = parse_graph(text, strict)
    except FileFormatError:
        g = GeometricGraph(parse_points(text, strict), ())
    if strict is Strictness.STRICT:
        rep = validate(g.points)
        if not rep.ok:
            print(f"error: {rep.message}", file=sys.stderr)
            return 2
    if args.enumerate:
        tris = enumerate_triangulations(g.points, cap=args.cap)
        print(f"TRIANGULATIONS {len(tris)}")
        for i, t in enumerate(tris):
            print(f"TRIANGULATION {i} {t.edge_count}")
            _print_edges(t.sorted_edges())
        return 0
    t = complete_to_triangulation(g)
    out = GeometricGraph(g.points, tuple(t.sorted_edges()))
    _emit(args, format_graph(out))
    return 0


def _cmd_augment(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph), _strictness(args))
    result = maximal_augment(g, collect_trace=args.trace)
    if args.trace and result.trace is not None:
        for rec in result.trace:
            print(
                f"flip {rec.edge} clause={rec.clause} new={rec.new_edge} "
                f"faces={rec.merged_faces[0]}+{rec.merged_faces[1]}"
                + (" recolored" if rec.recolored_anchor is not None else ""),
                file=sys.stderr,
            )
    _emit(args, format_graph(result.graph))
    print(f"LAYER1 {len(result.decomposition.layer1)}")
    _print_edges(result.decomposition.layer1)
    print(f"LAYER2 {len(result.decomposition.layer2)}")
    _print_edges(result.decomposition.layer2)
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    family = args.family
    if family == "convex":
        if args.n is None:
            raise FileFormatError(0, 0, "convex needs --n")
        _emit(args, format_points(gen_convex(args.n)))
        return 0
    if family == "arc-triangle":
        if args.n is None:
            raise FileFormatError(0, 0, "arc-triangle needs --n")
        _emit(args, format_points(gen_arc_in_triangle(args.n)))
        return 0
    if family == "hgon-arc":
        if args.n is None or args.h is None:
            raise FileFormatError(0, 0, "hgon-arc needs --n and --h")
        _emit(args, format_points(gen_hgon_with_arc(args.n, args.h)))
        return 0
    if family == "grid":
        if args.k is None:
            raise FileFormatError(0, 0, "grid needs --k")
        grid = gen_grid(args.k)
        for spec in (args.flips or "").split(","):
            spec = spec.strip()
            if not spec:
                continue
            if spec == "corners":
                grid = apply_corner_flips(grid)
            elif spec.startswith("boundary:"):
                grid = apply_boundary_flips(grid, int(spec.split(":", 1)[1]))
            else:
                raise FileFormatError(0, 0, f"unknown flip spec {spec!r}")
        _emit(args, format_graph(grid.graph))
        return 0
    raise FileFormatError(0, 0, f"unknown family {family!r}")


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph), _strictness(args))
    want_all = not (args.connectivity or args.degrees or args.bounds)
    if args.degrees or want_all:
        hist = degree_histogram(g)
        print("DEGREES " + " ".join(f"{d}:{c}" for d, c in hist.items()))
    if args.bounds or want_all:
        h = len(convex_hull(g.points))
        b = bounds(g.n, h)
        cap = b.max_edges_hull if b.max_edges_abs is None else min(
            b.max_edges_hull, b.max_edges_abs
        )
        print(
            f"BOUNDS n={b.n} h={b.h} m={g.m} minMaximal={b.min_maximal} "
            f"maxEdges={cap} maximumLower={b.maximum_lower}"
        )
    if args.connectivity or want_all:
        rep = vertex_connectivity(g)
        cut = ",".join(map(str, rep.witness_cut)) if rep.witness_cut else "-"
        print(f"CONNECTIVITY kappa={rep.kappa} minDegree={rep.min_degree} cut={cut}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    ps = parse_points(_read(args.points), _strictness(args))
    res = brute_force_maximum(ps, cap=args.cap)
    print(
        f"MAXIMUM {res.maximum_edges} triangulations={res.triangulation_count}"
    )
    _print_edges(res.witness.edges)
    return 0


def _cmd_gap(args: argparse.Namespace) -> int:
    ps = parse_points(_read(args.points), _strictness(args))
    rep = find_maximal_gap(ps, trials=args.trials, seed=args.seed)
    print(f"GAP min={rep.smallest} max={rep.largest} sizes={','.join(map(str, rep.sizes))}")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph), _strictness(args))
    verdict = test_biplane(g)
    if not isinstance(verdict, BiplaneDecomposition):
        print("NOT-BIPLANE", file=sys.stderr)
        return 1
    svg = render_svg(g, verdict.layer1, verdict.layer2, RenderSpec())
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    b = bounds(args.n, args.h)
    abs_part = f" maxEdgesAbs={b.max_edges_abs}" if b.max_edges_abs is not None else ""
    print(
        f"BOUNDS n={b.n} h={b.h} minMaximal={b.min_maximal} "
        f"maxEdgesHull={b.max_edges_hull}{abs_part} maximumLower={b.maximum_lower}"
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="biplanekit",
        description="Biplane geometric graphs: recognize, augment, generate, verify.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--relaxed", action="store_true", help="relaxed point set")
        sp.add_argument("--out", help="write the main artifact to this file")

    sp = sub.add_parser("check", help="test biplanarity of a graph file")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("triangulate", help="complete a plane graph or point set")
    sp.add_argument("points")
    sp.add_argument("--enumerate", action="store_true", help="list all triangulations")
    sp.add_argument("--cap", type=int, default=9, help="enumeration size cap")
    common(sp)
    sp.set_defaults(func=_cmd_triangulate)

    sp = sub.add_parser("augment", help="augment a biplane graph to a maximal one")
    sp.add_argument("graph")
    sp.add_argument("--trace", action="store_true", help="log each flip to stderr")
    common(sp)
    sp.set_defaults(func=_cmd_augment)

    sp = sub.add_parser("generate", help="emit a named construction")
    sp.add_argument("family", choices=["convex", "arc-triangle", "hgon-arc", "grid"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--h", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--flips", help="comma list: corners,boundary:I")
    common(sp)
    sp.set_defaults(func=_cmd_generate)

    sp = sub.add_parser("analyze", help="degree/bounds/connectivity report")
    sp.add_argument("graph")
    sp.add_argument("--connectivity", action="store_true")
    sp.add_argument("--degrees", action="store_true")
    sp.add_argument("--bounds", action="store_true")
    common(sp)
    sp.set_defaults(func=_cmd_analyze)

    sp = sub.add_parser("oracle", help="exact maximum size by pair enumeration")
    sp.add_argument("points")
    sp.add_argument("--cap", type=int, default=9)
    common(sp)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("gap", help="hunt for maximal graphs of different sizes")
    sp.add_argument("points")
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_gap)

    sp = sub.add_parser("render", help="render a graph with its layers as SVG")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=_cmd_render)

    sp = sub.add_parser("bounds", help="print the edge-count bound report")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.set_defaults(func=_cmd_bounds)

    return p


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotBiplaneError:
        print("NOT-BIPLANE", file=sys.stderr)
        return 1
    except NotPlaneError as exc:
        print(f"error: input not plane: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
