"""Command-line entry points.

Four subcommands: `analyze` reports the Cheeger data of a polygon,
`minimize` builds prescribed-curvature minimizers (optionally as SVG),
`profile` tabulates the isoperimetric profile as CSV, and `oracle`
cross-checks the exact pipeline against the raster oracle.

Exit codes are scriptable: 0 success, 2 bad input, 3 a hypothesis or
cross-check failed.  All floating-point output is fixed at 12
significant digits so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .cheeger import (g_convexity_defect, isoperimetric_profile,
                      profile_convexity_defect, solve_cheeger)
from .errors import (CharacterizationError, DomainError, InputError,
                     ReachViolationError, StructuralError, SubcriticalError)
from .medial import build_medial
from .minimizers import (CurvatureProblem, interpolant, maximal_minimizer,
                         minimal_minimizer, solve_for_volume)
from .parallel import erode, has_no_neck, inner_area
from .polygon import JordanPolygon
from .raster import (oracle_cheeger, oracle_erode, oracle_no_neck,
                     oracle_open, oracle_perimeter, rasterize)
from .svgout import render_svg

_CONVEXITY_FLOOR = -1e-8


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _clean(obj):
    """Round every float so emitted JSON is reproducible byte-for-byte."""
    if isinstance(obj, float):
        return _round12(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _emit(doc: dict) -> None:
    print(json.dumps(_clean(doc), indent=2))


def load_polygon(path: str) -> tuple[JordanPolygon, str | None]:
    """Read a polygon document: JSON with a "vertices" key, a bare JSON
    vertex list, or whitespace-separated x y lines."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    name = None
    verts = None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, dict):
        if "vertices" not in doc:
            raise InputError(f'{path}: JSON document lacks "vertices"')
        verts = doc["vertices"]
        name = doc.get("name")
    elif isinstance(doc, list):
        verts = doc
    elif doc is None:
        rows = [ln.split() for ln in text.splitlines()
                if ln.strip() and not ln.lstrip().startswith("#")]
        if any(len(row) != 2 for row in rows):
            raise InputError(f"{path}: expected two columns per line")
        try:
            verts = [(float(a), float(b)) for a, b in rows]
        except ValueError as exc:
            raise InputError(f"{path}: {exc}") from exc
    else:
        raise InputError(f"{path}: unsupported document type")
    try:
        signed = sum(x1 * y2 - x2 * y1
                     for (x1, y1), (x2, y2)
                     in zip(verts, verts[1:] + verts[:1]))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed vertex list") from exc
    if signed < 0.0:
        print(f"warning: {path}: clockwise input, reorienting to "
              "counterclockwise", file=sys.stderr)
    return JordanPolygon.from_coords(verts), name


def _set_record(mset) -> dict:
    return {"role": mset.role, "t": mset.t, "volume": mset.volume,
            "perimeter": mset.perimeter, "f_value": mset.f_value}


def cmd_analyze(args: argparse.Namespace) -> int:
    poly, name = load_polygon(args.input)
    graph = build_medial(poly)
    result = solve_cheeger(poly, graph)
    structure = erode(graph, result.r)
    criticals = graph.critical_clearances()
    doc = {
        "inradius": graph.inradius,
        "h": result.h,
        "r": result.r,
        "no_neck": has_no_neck(graph, result.r),
        "gamma1": len(structure.tendrils),
        "gamma2": len(structure.handles),
        "critical_radii": list(criticals),
        "no_neck_at_critical": [has_no_neck(graph, c) for c in criticals],
    }
    if name:
        doc = {"name": name, **doc}
    _emit(doc)
    return 0


def cmd_minimize(args: argparse.Namespace) -> int:
    poly, name = load_polygon(args.input)
    problem = CurvatureProblem(poly, args.kappa)
    try:
        structure = problem.structure()
        maximal = maximal_minimizer(problem, structure)
        minimal = minimal_minimizer(problem, structure)
        if args.volume is not None:
            sets = [solve_for_volume(problem, structure, args.volume)]
        elif args.t is not None:
            sets = [interpolant(problem, structure, args.t)]
        else:
            sets = [maximal, minimal]
    except SubcriticalError as exc:
        print(f"error: empty-set minimizer: {exc}", file=sys.stderr)
        return 3
    doc = {
        "kappa": args.kappa,
        "r": problem.r,
        "unique": len(structure.tendrils) == 0,
        "interval": [minimal.volume, maximal.volume],
        "sets": [_set_record(m) for m in sets],
    }
    if name:
        doc = {"name": name, **doc}
    _emit(doc)
    if args.svg:
        filled = minimal if len(sets) == 2 else sets[0]
        skeleton = tuple(structure.tendrils) + tuple(structure.handles)
        svg = render_svg(poly, minimal=filled.region,
                         maximal=maximal.region, skeleton=skeleton)
        Path(args.svg).write_text(svg)
    return 0


def cmd_profile(args: argparse.Namespace) -> int:
    if args.samples < 2:
        raise InputError(f"--samples must be at least 2, got {args.samples}")
    poly, _ = load_polygon(args.input)
    graph = build_medial(poly)
    base = solve_cheeger(poly, graph)
    v_min = base.cheeger_min.volume
    v_max = poly.area()
    n = args.samples
    grid = [v_min + (v_max - v_min) * i / (n - 1) for i in range(n)]
    table = isoperimetric_profile(poly, grid, graph)

    lines = ["V,J,kappa,t,interval_flag"]
    for row in table.rows:
        t_field = "" if row.t is None else _fmt(row.t)
        lines.append(f"{_fmt(row.volume)},{_fmt(row.j)},{_fmt(row.kappa)},"
                     f"{t_field},{1 if row.interval else 0}")
    dj = profile_convexity_defect(table)
    dg = g_convexity_defect(table)
    ok = dj >= _CONVEXITY_FLOOR and dg >= _CONVEXITY_FLOOR
    lines.append(f"# convexity: {'pass' if ok else 'FAIL'} "
                 f"(slope defect J {_fmt(dj)}, G {_fmt(dg)})")
    text = "\n".join(lines) + "\n"
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 3


def cmd_oracle(args: argparse.Namespace) -> int:
    poly, _ = load_polygon(args.input)
    graph = build_medial(poly)
    fac = max(1.0, 1000.0 / args.resolution)
    mask = rasterize(poly, args.resolution, r_max=args.radius)

    rows = []

    def compare(quantity: str, exact: float, oracle: float,
                tol_rel: float) -> None:
        denom = max(abs(exact), 1e-12)
        rows.append({"quantity": quantity, "exact": exact, "oracle": oracle,
                     "tol_rel": tol_rel,
                     "pass": abs(oracle - exact) <= tol_rel * denom})

    compare("area", poly.area(), mask.area(), 0.02 * fac)
    compare("perimeter", poly.perimeter(), oracle_perimeter(mask),
            0.03 * fac)
    try:
        exact_h = solve_cheeger(poly, graph).h
        _, oracle_h = oracle_cheeger(mask)
        compare("cheeger_h", exact_h, oracle_h, 0.01 * fac)
    except CharacterizationError:
        pass  # no exact constant to compare against
    if args.radius is not None:
        r = args.radius
        structure = erode(graph, r)
        compare("eroded_area", inner_area(structure),
                oracle_erode(mask, r).area(), 0.02 * fac)
        exact_nn = has_no_neck(graph, r)
        oracle_nn = oracle_no_neck(mask, r)
        rows.append({"quantity": "no_neck", "exact": exact_nn,
                     "oracle": oracle_nn, "tol_rel": 0.0,
                     "pass": exact_nn == oracle_nn})
        try:
            problem = CurvatureProblem(poly, 1.0 / r, graph=graph)
            opened = maximal_minimizer(problem, structure)
            compare("opened_area", opened.volume,
                    oracle_open(mask, r).area(), 0.02 * fac)
        except (SubcriticalError, CharacterizationError):
            pass  # maximal minimizer not defined at this radius
    doc = {"resolution": args.resolution, "radius": args.radius,
           "tolerance_factor": fac, "rows": rows,
           "all_pass": all(row["pass"] for row in rows)}
    _emit(doc)
    return 0 if doc["all_pass"] else 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cheegerkit",
        description="Cheeger sets, prescribed-curvature minimizers, and "
                    "isoperimetric profiles of simple polygons.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Cheeger constant and structure")
    p.add_argument("input")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("minimize", help="prescribed-curvature minimizers")
    p.add_argument("input")
    p.add_argument("--kappa", type=float, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--volume", type=float)
    group.add_argument("--t", type=float)
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("profile", help="isoperimetric profile as CSV")
    p.add_argument("input")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("oracle", help="raster cross-validation")
    p.add_argument("input")
    p.add_argument("--resolution", type=float, default=1000.0)
    p.add_argument("--radius", type=float)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SubcriticalError, CharacterizationError, ReachViolationError,
            StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
