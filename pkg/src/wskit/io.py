"""Instance files, result JSON and SVG rendering.

Coordinates travel as integers or exact "p/q" strings, never floats.
"""
from __future__ import annotations

import json

from gmpy2 import mpq

from .errors import ParseError, PointOutside
from .geometry import Location, Point, Polygon, point_in_polygon, validate_polygon


def parse_rational(v) -> mpq:
    if isinstance(v, bool):
        raise ParseError(f"not a coordinate: {v!r}")
    if isinstance(v, int):
        return mpq(v)
    if isinstance(v, str):
        s = v.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                if int(den) == 0:
                    raise ParseError(f"zero denominator in {v!r}")
                return mpq(int(num), int(den))
            return mpq(int(s))
        except ValueError:
            raise ParseError(f"not an exact rational: {v!r}") from None
    raise ParseError(f"coordinates must be integers or 'p/q' strings, got {v!r}")


def format_rational(q) -> str | int:
    q = mpq(q)
    if q.denominator == 1:
        return int(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_str(q) -> str:
    return str(format_rational(q))


def _pair(raw, what):
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise ParseError(f"{what} must be a coordinate pair, got {raw!r}")
    return Point(parse_rational(raw[0]), parse_rational(raw[1]))


def parse_point(text: str) -> Point:
    """'X,Y' with each part an integer or p/q."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected X,Y, got {text!r}")
    return Point(parse_rational(parts[0]), parse_rational(parts[1]))


def parse_instance(text, allow_collinear: bool = False) -> tuple[Polygon, list[Point] | None]:
    """Parse ``{"vertices": [...], "points": [...]}`` exactly.

    Raises ParseError for malformed documents and GeometryError (from
    validation) for bad polygons or points outside.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ParseError('instance needs a "vertices" array')
    raw = doc["vertices"]
    if not isinstance(raw, list):
        raise ParseError('"vertices" must be an array')
    poly = validate_polygon([_pair(v, "vertex") for v in raw], allow_collinear=allow_collinear)
    points = None
    if "points" in doc:
        if not isinstance(doc["points"], list):
            raise ParseError('"points" must be an array')
        points = [_pair(p, "point") for p in doc["points"]]
        for p in points:
            if point_in_polygon(poly, p) is Location.EXTERIOR:
                raise PointOutside(f"point {p} is outside the polygon")
    return poly, points


def instance_dict(poly: Polygon, points=None) -> dict:
    doc = {"vertices": [[format_rational(x), format_rational(y)] for x, y in poly.vertices]}
    if points is not None:
        doc["points"] = [[format_rational(x), format_rational(y)] for x, y in points]
    return doc


def serialize(poly: Polygon, points=None) -> str:
    return json.dumps(instance_dict(poly, points))


def points_json(points) -> list:
    return [[rational_str(x), rational_str(y)] for x, y in points]


def solution_json(sol, guarantee) -> dict:
    """The result schema: size, witnesses as exact strings, guarantee."""
    return {"size": sol.size, "witnesses": points_json(sol.chosen),
            "guarantee": rational_str(guarantee)}


# SVG

_COLOURS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]


def _num(q) -> str:
    return f"{float(q):.12g}"


def _xy(p) -> str:
    return f"{_num(p[0])},{_num(-p[1])}"


def _path(pts) -> str:
    return "M " + " L ".join(_xy(p) for p in pts) + " Z"


def render_svg(poly: Polygon, regions=(), strings=(), candidates=(), witnesses=(),
               size: int = 600) -> str:
    """Deterministic SVG of a polygon with optional overlays.

    ``regions`` are VisibilityRegion objects, ``strings`` polylines. The
    y axis is flipped so the picture matches the usual orientation.
    """
    x0, y0, x1, y1 = poly.bbox
    span = max(x1 - x0, y1 - y0) or mpq(1)
    pad = span / 20
    vb = f"{_num(x0 - pad)} {_num(-y1 - pad)} {_num(x1 - x0 + 2 * pad)} {_num(y1 - y0 + 2 * pad)}"
    stroke = _num(span / 300)
    dot = _num(span / 120)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="{vb}">',
        f'<path d="{_path(poly.vertices)}" fill="#f4f4f4" stroke="#000" stroke-width="{stroke}"/>',
    ]
    for k, vr in enumerate(regions):
        c = _COLOURS[k % len(_COLOURS)]
        out.append(f'<path d="{_path(vr.region.vertices)}" fill="{c}" fill-opacity="0.3" '
                   f'stroke="{c}" stroke-width="{stroke}"/>')
        for a, b in vr.arms:
            out.append(f'<line x1="{_num(a[0])}" y1="{_num(-a[1])}" x2="{_num(b[0])}" y2="{_num(-b[1])}" '
                       f'stroke="{c}" stroke-width="{stroke}"/>')
    for k, line in enumerate(strings):
        c = _COLOURS[k % len(_COLOURS)]
        pts = " ".join(_xy(p) for p in line)
        out.append(f'<polyline points="{pts}" fill="none" stroke="{c}" stroke-width="{stroke}"/>')
    for p in candidates:
        out.append(f'<circle cx="{_num(p[0])}" cy="{_num(-p[1])}" r="{_num(span / 250)}" fill="#555"/>')
    for p in witnesses:
        out.append(f'<circle cx="{_num(p[0])}" cy="{_num(-p[1])}" r="{dot}" fill="#000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
