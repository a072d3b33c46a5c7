"""Deterministic SVG figures of polygons, cuts, marked points and packings.

Viewport: with ``(xmin, ymin, xmax, ymax)`` the polygon's bounding box and
``M`` the margin, the scale is ``s = min((W - 2M)/(xmax - xmin), (H - 2M)/(ymax - ymin))``
and a point maps to ``(M + ox + s (x - xmin), H - M - oy - s (y - ymin))``,
where ``ox, oy`` centre the drawing.  The map is computed exactly and
coordinates are rounded half-even to two decimals only when written out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import Vec2
from .regions import Cell


@dataclass(frozen=True)
class RenderStyle:
    width: int = 480
    height: int = 360
    margin: int = 24
    outline: str = "#000000"
    outline_width: str = "2"
    palette: tuple[str, ...] = ("#e8743b", "#19a979", "#945ecf", "#ed4a7b", "#13a4b4", "#bf399e")
    fill_opacity: str = "0.45"
    leg_width: str = "1.5"
    dash: str = "6,4"
    cut_colour: str = "#555555"
    marker_colour: str = "#000000"
    marker_size: int = 5


def _fmt(q: Fraction) -> str:
    n = round(q * 100)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 100}.{n % 100:02d}"


@dataclass
class _Viewport:
    style: RenderStyle
    points: Sequence[Vec2]
    scale: Fraction = field(init=False)
    ox: Fraction = field(init=False)
    oy: Fraction = field(init=False)

    def __post_init__(self):
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        self.xmin, self.ymin = min(xs), min(ys)
        dx = max(max(xs) - self.xmin, Fraction(1, 10**6))
        dy = max(max(ys) - self.ymin, Fraction(1, 10**6))
        w = Fraction(self.style.width - 2 * self.style.margin)
        h = Fraction(self.style.height - 2 * self.style.margin)
        self.scale = min(w / dx, h / dy)
        self.ox = (w - dx * self.scale) / 2
        self.oy = (h - dy * self.scale) / 2

    def __call__(self, p: Vec2) -> tuple[str, str]:
        m = self.style.margin
        x = m + self.ox + self.scale * (p.x - self.xmin)
        y = self.style.height - m - self.oy - self.scale * (p.y - self.ymin)
        return _fmt(x), _fmt(y)


def _points_attr(view, pts) -> str:
    return " ".join(f"{x},{y}" for x, y in (view(p) for p in pts))


def _cell_edges(cell: Cell):
    pts = list(dict.fromkeys(cell.closure))
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        tight = [
            hp for hp in cell.constraints if hp.tag != "split" and hp.value(a) == 0 and hp.value(b) == 0
        ]
        if tight:
            yield a, b, any(hp.strict for hp in tight)


def render_svg(
    vertices: Sequence[Vec2],
    marked: Sequence[Vec2] = (),
    cut_ends: Sequence[Vec2] = (),
    regions: Iterable[Sequence[Cell]] = (),
    style: RenderStyle = RenderStyle(),
    title: str | None = None,
) -> str:
    """SVG text for a representative with the packed regions shaded.

    Each region is drawn in its own palette colour; pieces created by cut
    flips are shaded without drawing the seams between them.
    """
    view = _Viewport(style, list(vertices))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">',
    ]
    if title:
        out.append(f"  <title>{title}</title>")
    out.append(f'  <rect x="0" y="0" width="{style.width}" height="{style.height}" fill="#ffffff"/>')
    for k, region in enumerate(regions):
        colour = style.palette[k % len(style.palette)]
        out.append(f'  <g class="packed" id="region-{k + 1}">')
        for cell in region:
            pts = list(dict.fromkeys(cell.closure))
            if len(pts) < 3:
                continue
            out.append(
                f'    <polygon points="{_points_attr(view, pts)}" fill="{colour}" '
                f'fill-opacity="{style.fill_opacity}" stroke="none"/>'
            )
            for a, b, strict in _cell_edges(cell):
                (x1, y1), (x2, y2) = view(a), view(b)
                dash = f' stroke-dasharray="{style.dash}"' if strict else ""
                out.append(
                    f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{colour}" '
                    f'stroke-width="{style.leg_width}"{dash}/>'
                )
        out.append("  </g>")
    out.append(
        f'  <polygon class="outline" points="{_points_attr(view, vertices)}" fill="none" '
        f'stroke="{style.outline}" stroke-width="{style.outline_width}"/>'
    )
    for c, e in zip(marked, cut_ends):
        (x1, y1), (x2, y2) = view(c), view(e)
        out.append(
            f'  <line class="cut" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{style.cut_colour}" '
            f'stroke-width="1.5" stroke-dasharray="{style.dash}"/>'
        )
    r = Fraction(style.marker_size)
    for c in marked:
        x, y = view(c)
        fx, fy = Fraction(x), Fraction(y)
        for sx in (1, -1):
            out.append(
                f'  <line class="marked" x1="{_fmt(fx - r)}" y1="{_fmt(fy - sx * r)}" '
                f'x2="{_fmt(fx + r)}" y2="{_fmt(fy + sx * r)}" stroke="{style.marker_colour}" stroke-width="2"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
