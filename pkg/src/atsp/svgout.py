"""Deterministic SVG rendering of instances and adversarial tours.

Output is byte-stable for identical inputs: a fixed 1000x1000 viewport,
uniform scaling with a 5% margin, coordinates printed with three decimals,
and fixed attribute order. Regions live in one layer, candidate dots in
another, and each compared method contributes exactly one polyline layer.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .adversary import AdversarialTour
from .geometry import DiskRegion, Instance, SegmentRegion, compile_candidates
from .report import tour_points

__all__ = ["render_svg", "svg_document"]

VIEWPORT = 1000.0
MARGIN = 0.05 * VIEWPORT

PALETTE = [
    "#d62728",
    "#1f77b4",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
]


def _bounds(instance: Instance):
    xs, ys = [], []
    for region in instance.regions:
        if isinstance(region, DiskRegion):
            xs += [region.center.x - region.radius, region.center.x + region.radius]
            ys += [region.center.y - region.radius, region.center.y + region.radius]
        elif isinstance(region, SegmentRegion):
            xs += [region.a.x, region.b.x]
            ys += [region.a.y, region.b.y]
        else:
            for p in region.candidates:
                xs.append(p.x)
                ys.append(p.y)
    return min(xs), min(ys), max(xs), max(ys)


class _Projection:
    def __init__(self, instance: Instance):
        x0, y0, x1, y1 = _bounds(instance)
        span = max(x1 - x0, y1 - y0)
        self.scale = (VIEWPORT - 2 * MARGIN) / span if span > 0 else 1.0
        self.x0, self.y0 = x0, y0
        self.tx = (VIEWPORT - (x1 - x0) * self.scale) / 2.0
        self.ty = (VIEWPORT - (y1 - y0) * self.scale) / 2.0

    def x(self, x: float) -> float:
        return self.tx + (x - self.x0) * self.scale

    def y(self, y: float) -> float:
        return VIEWPORT - (self.ty + (y - self.y0) * self.scale)


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def svg_document(instance: Instance, tours: dict[str, AdversarialTour]) -> str:
    proj = _Projection(instance)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEWPORT:g}" '
        f'height="{VIEWPORT:g}" viewBox="0 0 {VIEWPORT:g} {VIEWPORT:g}">',
        f"<title>{escape(instance.label)}</title>",
        f'<rect width="{VIEWPORT:g}" height="{VIEWPORT:g}" fill="#ffffff"/>',
        '<g id="regions" stroke="#888888" fill="none" stroke-width="2">',
    ]
    for region in instance.regions:
        if isinstance(region, SegmentRegion):
            parts.append(
                f'<line x1="{_f(proj.x(region.a.x))}" y1="{_f(proj.y(region.a.y))}" '
                f'x2="{_f(proj.x(region.b.x))}" y2="{_f(proj.y(region.b.y))}"/>'
            )
        elif isinstance(region, DiskRegion):
            parts.append(
                f'<circle cx="{_f(proj.x(region.center.x))}" '
                f'cy="{_f(proj.y(region.center.y))}" '
                f'r="{_f(region.radius * proj.scale)}"/>'
            )
    parts.append("</g>")
    parts.append('<g id="candidates" fill="#444444" stroke="none">')
    for region in instance.regions:
        for p in compile_candidates(region):
            parts.append(
                f'<circle cx="{_f(proj.x(p.x))}" cy="{_f(proj.y(p.y))}" r="3"/>'
            )
    parts.append("</g>")
    for i, (method, tour) in enumerate(tours.items()):
        pts = tour_points(instance, tour)
        if tour.closed:
            pts = pts + [pts[0]]
        coords = " ".join(f"{_f(proj.x(x))},{_f(proj.y(y))}" for x, y in pts)
        color = PALETTE[i % len(PALETTE)]
        parts.append(
            f'<g id="tour-{escape(method)}" stroke="{color}" fill="none" '
            'stroke-width="2.5" stroke-opacity="0.75">'
        )
        parts.append(f'<polyline points="{coords}"/>')
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_svg(instance: Instance, tours: dict[str, AdversarialTour], path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(svg_document(instance, tours))
