"""Exact convex cells cut out by closed and strict half-planes.

A :class:`Cell` carries its defining constraints together with the polygon
that is its closure.  Intersection tests work on closures first and then
check strict constraints at the average of the closure's vertices, which is
a relative-interior point: if a strict constraint were tight there, the
functional would be constant on the closure and the cell would be empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import AffineMap, IntMat2, Vec2, det

@dataclass(frozen=True, slots=True)
class HalfPlane:
    """``normal . p <= bound`` (or ``<`` when ``strict``).

    ``tag`` only informs rendering: ``"leg"``, ``"hyp"``, ``"split"`` or ``""``.
    """

    normal: Vec2
    bound: Fraction
    strict: bool = False
    tag: str = ""

    def value(self, p: Vec2) -> Fraction:
        return self.normal.dot(p) - self.bound

    def holds(self, p: Vec2) -> bool:
        v = self.value(p)
        return v < 0 if self.strict else v <= 0

    def holds_closed(self, p: Vec2) -> bool:
        return self.value(p) <= 0

    def mapped(self, f: AffineMap) -> HalfPlane:
        # a.p <= b with p = M^{-1}(p' - t)  =>  (M^{-T} a).p' <= b + (M^{-T} a).t
        inv_t = f.linear.inverse().transpose()
        n = inv_t.apply(self.normal)
        return HalfPlane(n, self.bound + n.dot(f.offset), self.strict, self.tag)


def clip(points: Sequence[Vec2], hp: HalfPlane) -> list[Vec2]:
    """Sutherland-Hodgman clip of a convex (possibly degenerate) polygon by the closed half-plane."""
    if not points:
        return []
    out: list[Vec2] = []
    n = len(points)
    for k in range(n):
        cur, nxt = points[k], points[(k + 1) % n]
        vc, vn = hp.value(cur), hp.value(nxt)
        if vc <= 0:
            out.append(cur)
        if (vc < 0 < vn) or (vn < 0 < vc):
            t = vc / (vc - vn)
            out.append(cur + (nxt - cur) * t)
    return _dedupe(out)


def _dedupe(points: list[Vec2]) -> list[Vec2]:
    out: list[Vec2] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


@dataclass(frozen=True)
class Cell:
    constraints: tuple[HalfPlane, ...]
    closure: tuple[Vec2, ...]

    @staticmethod
    def from_constraints(constraints: Iterable[HalfPlane], seed: Sequence[Vec2]) -> Cell:
        """Build a cell whose closure is ``seed`` clipped by every constraint.

        ``seed`` must be a convex polygon that contains the cell.
        """
        cons = tuple(constraints)
        pts = list(seed)
        for hp in cons:
            pts = clip(pts, hp)
            if not pts:
                break
        return Cell(cons, tuple(pts))

    def is_empty(self) -> bool:
        if not self.closure:
            return True
        g = interior_witness(self.closure)
        return not all(hp.holds(g) for hp in self.constraints)

    def contains(self, p: Vec2) -> bool:
        return all(hp.holds(p) for hp in self.constraints)

    def restrict(self, hp: HalfPlane) -> Cell:
        return Cell(self.constraints + (hp,), tuple(clip(self.closure, hp)))

    def mapped(self, f: AffineMap) -> Cell:
        return Cell(tuple(hp.mapped(f) for hp in self.constraints), tuple(f.apply(p) for p in self.closure))


def interior_witness(points: Sequence[Vec2]) -> Vec2:
    distinct = list(dict.fromkeys(points))
    s = Vec2(0, 0)
    for p in distinct:
        s = s + p
    return s * Fraction(1, len(distinct))


def cells_intersect(a: Cell, b: Cell) -> bool:
    pts = list(a.closure)
    for hp in b.constraints:
        pts = clip(pts, hp)
        if not pts:
            return False
    g = interior_witness(pts)
    return all(hp.holds(g) for hp in a.constraints + b.constraints)


def regions_intersect(r1: Iterable[Cell], r2: Iterable[Cell]) -> bool:
    r2 = list(r2)
    return any(cells_intersect(c1, c2) for c1 in r1 for c2 in r2)


def closures_inside(region: Iterable[Cell], polygon_vertices: Sequence[Vec2]) -> bool:
    """True when every piece's closure lies in the closed convex polygon (clockwise vertices)."""
    bounds = polygon_halfplanes(polygon_vertices)
    return all(hp.holds_closed(p) for cell in region for p in cell.closure for hp in bounds)


def polygon_halfplanes(vertices: Sequence[Vec2], tag: str = "") -> list[HalfPlane]:
    """Closed half-planes whose intersection is the clockwise convex polygon."""
    out = []
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        e = q - p
        # interior lies to the right of a clockwise edge: det(e, x - p) <= 0
        normal = Vec2(-e.y, e.x)
        out.append(HalfPlane(normal, normal.dot(p), False, tag))
    return out


def triangle_cell(apex: Vec2, v: Vec2, w: Vec2, size: Fraction) -> Cell:
    """The image of the model triangle ``{s, t >= 0, s + t < size}`` under ``(s, t) -> apex + s v + t w``.

    Legs along ``v`` and ``w`` are included and the far side is excluded.
    """
    d = det(v, w)
    if d == 0:
        raise ValueError("triangle directions are parallel")
    # rows of [v w]^{-1}
    r1 = Vec2(w.y / d, -w.x / d)
    r2 = Vec2(-v.y / d, v.x / d)
    cons = (
        HalfPlane(-r1, -r1.dot(apex), False, "leg"),
        HalfPlane(-r2, -r2.dot(apex), False, "leg"),
        HalfPlane(r1 + r2, size + (r1 + r2).dot(apex), True, "hyp"),
    )
    return Cell(cons, (apex, apex + v * size, apex + w * size))


def segment_cell(p: Vec2, q: Vec2) -> Cell:
    """Closed segment as a degenerate cell."""
    e = q - p
    normal = Vec2(-e.y, e.x)
    cons = (
        HalfPlane(normal, normal.dot(p)),
        HalfPlane(-normal, -normal.dot(p)),
        HalfPlane(e, e.dot(q)),
        HalfPlane(-e, -e.dot(p)),
    )
    return Cell(cons, (p, q))


def point_in_polygon(p: Vec2, vertices: Sequence[Vec2], strict: bool = False) -> bool:
    for hp in polygon_halfplanes(vertices):
        v = hp.value(p)
        if v > 0 or (strict and v == 0):
            return False
    return True


@dataclass(frozen=True, slots=True)
class PiecewiseShear:
    """``(x, y) -> (x, y + power*(x - base))`` on ``x >= base`` and the identity elsewhere.

    This is the map that changes a cut direction; it is continuous, and any
    two of them commute.
    """

    base: Fraction
    power: int

    def apply(self, p: Vec2) -> Vec2:
        if p.x >= self.base:
            return Vec2(p.x, p.y + self.power * (p.x - self.base))
        return p

    __call__ = apply

    def inverse(self) -> PiecewiseShear:
        return PiecewiseShear(self.base, -self.power)

    def right_map(self) -> AffineMap:
        return AffineMap(IntMat2(1, 0, self.power, 1, sl2=True), Vec2(0, -self.power * self.base))

    def apply_cell(self, cell: Cell) -> list[Cell]:
        left = cell.restrict(HalfPlane(Vec2(1, 0), self.base, True, "split"))
        right = cell.restrict(HalfPlane(Vec2(-1, 0), -self.base, False, "split"))
        out = []
        if not left.is_empty():
            out.append(left)
        if not right.is_empty():
            out.append(right.mapped(self.right_map()))
        return out


def transport(region: Iterable[Cell], steps: Iterable[PiecewiseShear]) -> list[Cell]:
    cells = list(region)
    for step in steps:
        cells = [piece for cell in cells for piece in step.apply_cell(cell)]
    return cells
