"""``lazyvor`` command line.

Exit status: 0 on success, 1 when the input is well formed but the geometric
request fails (`DomainError`), 2 for malformed specs and command lines.
"""
import argparse
import sys
from fractions import Fraction

from . import engine
from .errors import DomainError, LazyvorError, RenderError, SpecError
from .kernel import linalg as la
from .render import RenderScene, render_svg, window_box
from .serialize import dumps
from .sources import load_preset, parse_source_spec, preset_names, preset_text

DEFAULT_MAX_RADIUS_SQ = Fraction(10000)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SpecError(message)


def parse_rational(text, what="value"):
    try:
        return la.scalar(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise SpecError(f"{what}: {text!r} is not a rational number") from None


def parse_csv(text, what="point", length=None):
    items = [t for t in text.split(",")]
    if any(not t.strip() for t in items):
        raise SpecError(f"{what}: empty coordinate in {text!r}")
    values = tuple(parse_rational(t, what) for t in items)
    if length is not None and len(values) != length:
        raise SpecError(f"{what}: expected {length} comma-separated values, got {len(values)}")
    return values


def _load_source(args):
    if args.preset is not None:
        return load_preset(args.preset)
    try:
        with open(args.source, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise SpecError(f"cannot read {args.source}: {err.strerror}") from None
    return parse_source_spec(text)


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as err:
        raise SpecError(f"cannot write {path}: {err.strerror}") from None


def _point(args, src):
    return parse_csv(args.point, "--point", src.dim)


def cmd_classify(args, out):
    src = _load_source(args)
    result = engine.classify_point(src, _point(args, src), args.max_radius_sq)
    out.write(dumps(result))


def cmd_cone(args, out):
    src = _load_source(args)
    p = _point(args, src)
    engine._require_member(src, p)
    scan = engine.direction_cone_scan(src, p, args.radius_sq)
    report = {
        "point": p,
        "radius_sq": args.radius_sq,
        "generators": scan.generators,
        "extreme_generators": scan.reduced().generators,
        "fullspace": engine.cone_is_fullspace(scan),
    }
    if args.stabilize_to is not None:
        report["stabilize_to"] = args.stabilize_to
        report["stabilized"] = engine.cone_stabilized(src, p, args.radius_sq, args.stabilize_to)
    out.write(dumps(report))


def _auto_window(result):
    """A window around the site, the finite vertices and the relevant sites."""
    pts = [result.point] + list(result.relevant_points)
    if result.vrep is not None:
        pts += list(result.vrep.vertices)
    lo = [min(p[i] for p in pts) - 1 for i in range(2)]
    hi = [max(p[i] for p in pts) + 1 for i in range(2)]
    return (lo[0], lo[1], hi[0], hi[1])


def cmd_cell(args, out):
    src = _load_source(args)
    p = _point(args, src)
    if args.truncate is not None:
        lo_hi = parse_csv(args.truncate, "--truncate", 2 * src.dim)
        box = engine.box_hrep(lo_hi[:src.dim], lo_hi[src.dim:])
        result = engine.voronoi_cell_truncated(src, p, box)
    else:
        result = engine.voronoi_cell(src, p, args.max_radius_sq)
    text = dumps(result)
    if args.svg is not None:
        if result.hrep is None:
            raise engine.GeometryError(
                f"a {result.kind} result has no cell to draw; use --truncate")
        if src.dim != 2:
            raise RenderError(f"only planar cells can be rendered, got dimension {src.dim}")
        window = lo_hi if args.truncate is not None else _auto_window(result)
        _write(args.svg, render_svg(RenderScene(window, ((p, result.hrep),))))
    if args.out is not None:
        _write(args.out, text)
    else:
        out.write(text)


def diagram(src, window):
    """Truncated cells of every site in the closed `window`, sorted by site.

    Sites strictly inside use the window itself as truncation box; sites on
    the frame use the window grown by its own size on every side, and the
    renderer clips them back.
    """
    if src.dim != 2:
        raise RenderError(f"diagrams are planar, the source has dimension {src.dim}")
    x0, y0, x1, y1 = window_box(window)
    centre = ((x0 + x1) / 2, (y0 + y1) / 2)
    corner = (x1, y1)
    sites = [q for q in src.points_in_ball(centre, la.dist_sq(centre, corner))
             if x0 <= q[0] <= x1 and y0 <= q[1] <= y1]
    inner = engine.box_hrep((x0, y0), (x1, y1))
    w, h = x1 - x0, y1 - y0
    outer = engine.box_hrep((x0 - w, y0 - h), (x1 + w, y1 + h))
    results = []
    for q in sorted(sites):
        box = inner if inner.strictly_contains(q) else outer
        results.append(engine.voronoi_cell_truncated(src, q, box))
    return results


def cmd_diagram(args, out):
    src = _load_source(args)
    window = parse_csv(args.window, "--window", 4)
    results = diagram(src, window)
    scene = RenderScene(window, tuple((r.point, r.hrep) for r in results))
    _write(args.out, render_svg(scene))
    out.write(dumps({
        "window": window,
        "svg": args.out,
        "cells": [{"site": r.point,
                   "site_facets": r.certificate["site_facets"],
                   "box_facets": r.certificate["box_facets"],
                   "relevant_points": r.relevant_points} for r in results],
    }))


def cmd_preset(args, out):
    _write(args.out, preset_text(args.name))


def build_parser():
    parser = _Parser(prog="lazyvor", description="Exact Voronoi cells of discrete point sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--source", metavar="FILE", help="point source spec (JSON)")
        g.add_argument("--preset", metavar="NAME", help="built-in source: " + ", ".join(preset_names()))
        return p

    rational = lambda what: (lambda t: parse_rational(t, what))  # noqa: E731

    p = with_source(sub.add_parser("classify", help="inner or boundary point"))
    p.add_argument("--point", required=True, metavar="CSV")
    p.add_argument("--max-radius-sq", type=rational("--max-radius-sq"), default=DEFAULT_MAX_RADIUS_SQ)
    p.set_defaults(func=cmd_classify)

    p = with_source(sub.add_parser("cone", help="scanned direction cone"))
    p.add_argument("--point", required=True, metavar="CSV")
    p.add_argument("--radius-sq", required=True, type=rational("--radius-sq"))
    p.add_argument("--stabilize-to", type=rational("--stabilize-to"), metavar="RAT")
    p.set_defaults(func=cmd_cone)

    p = with_source(sub.add_parser("cell", help="Voronoi cell of one site"))
    p.add_argument("--point", required=True, metavar="CSV")
    p.add_argument("--max-radius-sq", type=rational("--max-radius-sq"), default=DEFAULT_MAX_RADIUS_SQ)
    p.add_argument("--truncate", metavar="x0,y0,x1,y1")
    p.add_argument("--out", metavar="FILE", help="write JSON here instead of stdout")
    p.add_argument("--svg", metavar="FILE")
    p.set_defaults(func=cmd_cell)

    p = with_source(sub.add_parser("diagram", help="truncated cells of all sites in a window"))
    p.add_argument("--window", required=True, metavar="x0,y0,x1,y1")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("preset", help="write a built-in source spec")
    p.add_argument("name", choices=preset_names())
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=cmd_preset)
    return parser


# Options whose values may start with a minus sign, e.g. ``--window -2,-6,2,6``.
_VALUE_OPTIONS = {"--point", "--window", "--truncate", "--radius-sq", "--stabilize-to",
                  "--max-radius-sq"}


def _join_negative_values(argv):
    """Rewrite ``--opt -1,2`` as ``--opt=-1,2`` so argparse takes it as a value."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1][:1] == "-" \
                and not argv[i + 1][1:2].isalpha() and argv[i + 1][1:2] != "-":
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
        args.func(args, out)
    except SpecError as e:
        err.write(f"lazyvor: error: {e}\n")
        return 2
    except DomainError as e:
        err.write(f"lazyvor: {type(e).__name__}: {e}\n")
        return 1
    except LazyvorError as e:  # pragma: no cover - every subclass is handled above
        err.write(f"lazyvor: {e}\n")
        return 1
    return 0
