"""Convex rational polygons and the Delzant condition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Iterable, Sequence

from .errors import FamilyDomainError, PolygonError
from .geometry import IntMat2, Vec2, as_rational, det, lex_min, primitive_direction
from .regions import point_in_polygon


def _half(v: Vec2) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if (v.y > 0 or (v.y == 0 and v.x > 0)) else 1


def _angular_key_cmp(u: Vec2, v: Vec2) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    d = det(u, v)
    return -1 if d > 0 else (1 if d < 0 else 0)


def normalize(points: Iterable[Vec2]) -> Polygon:
    """Canonicalize any cyclic ordering of a strictly convex polygon's vertices.

    The result runs clockwise from the lexicographically smallest vertex.
    """
    pts = [p if isinstance(p, Vec2) else Vec2(*p) for p in points]
    if len(set(pts)) != len(pts):
        raise PolygonError("repeated vertex")
    if len(pts) < 3:
        raise PolygonError("a polygon needs at least 3 distinct vertices")
    n = len(pts)
    centre = Vec2(sum((p.x for p in pts), Fraction(0)) / n, sum((p.y for p in pts), Fraction(0)) / n)
    if any(p == centre for p in pts):
        raise PolygonError("vertices are not in convex position")
    ordered = sorted(pts, key=cmp_to_key(lambda p, q: _angular_key_cmp(p - centre, q - centre)))
    for i in range(n):
        a, b = ordered[i] - centre, ordered[(i + 1) % n] - centre
        if det(a, b) == 0:
            raise PolygonError("vertices are not in convex position")
    # counter-clockwise now; every turn must be strictly left
    for i in range(n):
        p, q, r = ordered[i - 1], ordered[i], ordered[(i + 1) % n]
        turn = det(q - p, r - q)
        if turn == 0:
            raise PolygonError(f"collinear vertices around {q}")
        if turn < 0:
            raise PolygonError(f"polygon is not convex at {q}")
    ordered.reverse()
    start = ordered.index(lex_min(ordered))
    return Polygon(tuple(ordered[start:] + ordered[:start]), _checked=True)


@dataclass(frozen=True)
class EdgeData:
    index: int
    direction_primitive: Vec2
    sl2z_length: Fraction
    endpoints: tuple[Vec2, Vec2]


@dataclass(frozen=True)
class Polygon:
    """A strictly convex polygon stored clockwise from its lexicographic minimum.

    Build one with :func:`normalize`; direct construction re-runs it unless the
    vertex tuple is already canonical.
    """

    vertices: tuple[Vec2, ...]
    _checked: bool = False

    def __post_init__(self):
        if not self._checked:
            canon = normalize(self.vertices)
            if canon.vertices != tuple(self.vertices):
                raise PolygonError("vertices are not in canonical order; use normalize()")
        object.__setattr__(self, "_checked", True)

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i: int) -> Vec2:
        return self.vertices[i % len(self.vertices)]

    def __str__(self):
        return ", ".join(str(v) for v in self.vertices)

    @cached_property
    def area(self) -> Fraction:
        return area(self)

    def transformed(self, m: IntMat2, offset: Vec2 = Vec2(0, 0)) -> Polygon:
        return normalize(m.apply(v) + offset for v in self.vertices)

    def scaled(self, k) -> Polygon:
        k = as_rational(k)
        if k <= 0:
            raise PolygonError("scale factor must be positive")
        return normalize(v * k for v in self.vertices)

    def vertical_extent(self, x: Fraction) -> tuple[Fraction, Fraction] | None:
        """Lowest and highest boundary points on the line ``{x}``, or None when it misses."""
        ys = []
        n = len(self.vertices)
        for i in range(n):
            p, q = self.vertices[i], self.vertices[(i + 1) % n]
            lo, hi = min(p.x, q.x), max(p.x, q.x)
            if not (lo <= x <= hi):
                continue
            if p.x == q.x:
                ys.extend((p.y, q.y))
            else:
                ys.append(p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x))
        if not ys:
            return None
        return min(ys), max(ys)

    def contains(self, p: Vec2, strict: bool = False) -> bool:
        return point_in_polygon(p, self.vertices, strict)

    def on_boundary(self, p: Vec2) -> bool:
        return self.contains(p) and not self.contains(p, strict=True)


def area(p: Polygon) -> Fraction:
    verts = p.vertices
    n = len(verts)
    twice = sum((det(verts[i], verts[(i + 1) % n]) for i in range(n)), Fraction(0))
    return abs(twice) / 2


def edge_lengths(p: Polygon) -> list[EdgeData]:
    out = []
    n = len(p)
    for i in range(n):
        a, b = p[i], p[i + 1]
        w, t = primitive_direction(b - a)
        out.append(EdgeData(i, w, t, (a, b)))
    return out


def corner_directions(vertices: Sequence[Vec2], i: int) -> tuple[Vec2, Vec2]:
    """Primitive directions from vertex ``i`` toward its predecessor and its successor.

    For a clockwise convex polygon ``det(u1, u2) > 0``.
    """
    n = len(vertices)
    p = vertices[i % n]
    u1 = primitive_direction(vertices[(i - 1) % n] - p)[0]
    u2 = primitive_direction(vertices[(i + 1) % n] - p)[0]
    return u1, u2


@dataclass(frozen=True)
class VertexCheck:
    index: int
    vertex: Vec2
    u1: Vec2
    u2: Vec2
    determinant: Fraction

    @property
    def ok(self) -> bool:
        return abs(self.determinant) == 1


@dataclass(frozen=True)
class DelzantReport:
    polygon: Polygon
    checks: tuple[VertexCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[VertexCheck]:
        return [c for c in self.checks if not c.ok]

    def __bool__(self):
        return self.ok


def check_delzant(p: Polygon) -> DelzantReport:
    checks = []
    for i, v in enumerate(p.vertices):
        u1, u2 = corner_directions(p.vertices, i)
        checks.append(VertexCheck(i, v, u1, u2, det(u1, u2)))
    return DelzantReport(p, tuple(checks))


def _positive(name, value):
    value = as_rational(value)
    if value <= 0:
        raise FamilyDomainError(f"{name} must satisfy {name}>0")
    return value


def _integer_at_least(name, value, low):
    value = as_rational(value)
    if value.denominator != 1 or value < low:
        raise FamilyDomainError(f"{name} must be an integer with {name} ≥ {low}")
    return int(value)


def make_delzant_family(kind: str, a, b=None, n=None) -> Polygon:
    """A named Delzant family member: ``triangle``, ``rectangle`` or ``hirzebruch``."""
    a = _positive("a", a)
    if kind == "triangle":
        pts = [(0, 0), (a, 0), (0, a)]
    elif kind == "rectangle":
        b = _positive("b", b if b is not None else a)
        pts = [(0, 0), (0, a), (b, a), (b, 0)]
    elif kind == "hirzebruch":
        if b is None or n is None:
            raise FamilyDomainError("hirzebruch needs a, b and n")
        b = _positive("b", b)
        n = _integer_at_least("n", n, 1)
        pts = [(0, 0), (0, a), (b, a), (b + n * a, 0)]
    else:
        raise FamilyDomainError(f"unknown Delzant family {kind!r}")
    return normalize(Vec2(x, y) for x, y in pts)
