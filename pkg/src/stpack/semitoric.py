"""Semitoric polygon representatives and the operations on them.

A representative is a convex polygon with interior marked points, each
carrying a vertical cut ray pointing up (+1) or down (-1).  Boundary points
where cuts land must be fake or hidden corners; every other vertex must be
Delzant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FamilyDomainError, PolygonError, RepresentativeError
from .geometry import Vec2, as_rational, det, format_rational, shear_power, sl2z_length
from .polygon import Polygon, corner_directions, edge_lengths, normalize
from .regions import PiecewiseShear

DELZANT, FAKE, HIDDEN, INVALID = "Delzant", "Fake", "Hidden", "Invalid"


@dataclass(frozen=True)
class CornerInfo:
    index: int
    vertex: Vec2
    kind: str
    cuts: int
    det_plain: Fraction
    det_twisted: Fraction | None

    @property
    def label(self) -> str:
        if self.kind in (FAKE, HIDDEN):
            return f"{self.kind}({self.cuts})"
        return self.kind

    @property
    def is_corner(self) -> bool:
        """True for the corners that anchor packed triangles (Delzant or hidden)."""
        return self.kind in (DELZANT, HIDDEN)


@dataclass(frozen=True)
class CornerClassification:
    corners: tuple[CornerInfo, ...]
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.corners]

    def kinds_multiset(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.corners:
            if c.is_corner:
                out[c.kind] = out.get(c.kind, 0) + 1
        return out


@dataclass(frozen=True)
class SemitoricRepresentative:
    polygon: Polygon
    marked: tuple[Vec2, ...]
    cuts: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.marked)

    def cut_endpoint(self, j: int) -> Vec2:
        c = self.marked[j]
        lo, hi = self.polygon.vertical_extent(c.x)
        return Vec2(c.x, hi if self.cuts[j] > 0 else lo)

    def __str__(self):
        parts = [f"polygon {self.polygon}"]
        for c, e in zip(self.marked, self.cuts):
            parts.append(f"marked {c} {'up' if e > 0 else 'down'}")
        return "; ".join(parts)


def _sorted_marks(marked, cuts):
    pairs = sorted(zip(marked, cuts), key=lambda pc: pc[0].key())
    return tuple(p for p, _ in pairs), tuple(c for _, c in pairs)


def classify_corners(poly: Polygon, marked: Sequence[Vec2], cuts: Sequence[int]) -> CornerClassification:
    """Classify every vertex and collect every violated condition without raising."""
    problems = []
    landing: dict[Vec2, int] = {}
    vertex_set = set(poly.vertices)
    for c, e in zip(marked, cuts):
        if e not in (1, -1):
            problems.append(f"cut direction {e} at {c} is not +1 or -1")
            continue
        if not poly.contains(c, strict=True):
            problems.append(f"marked point {c} is not strictly inside the polygon")
            continue
        lo, hi = poly.vertical_extent(c.x)
        end = Vec2(c.x, hi if e > 0 else lo)
        if end not in vertex_set:
            problems.append(f"cut from {c} exits through {end}, which is not a vertex")
            continue
        landing[end] = landing.get(end, 0) + 1
    corners = []
    for i, v in enumerate(poly.vertices):
        u1, u2 = corner_directions(poly.vertices, i)
        plain = det(u1, u2)
        k = landing.get(v, 0)
        if k == 0:
            kind = DELZANT if abs(plain) == 1 else INVALID
            corners.append(CornerInfo(i, v, kind, 0, plain, None))
            if kind == INVALID:
                problems.append(f"vertex {v}: det = {format_rational(plain)}, fails")
            continue
        twisted = det(u1, shear_power(k).apply(u2))
        if twisted == 0:
            kind = FAKE
        elif twisted == 1:
            kind = HIDDEN
        else:
            kind = INVALID
            problems.append(
                f"vertex {v} on {k} cut(s): det(u1, T^{k} u2) = {format_rational(twisted)}, "
                "neither fake nor hidden"
            )
        corners.append(CornerInfo(i, v, kind, k, plain, twisted))
    return CornerClassification(tuple(corners), tuple(problems))


def validate_representative(poly, marked=(), cuts=()) -> tuple[SemitoricRepresentative, CornerClassification]:
    """Build a representative, raising RepresentativeError if any corner condition fails."""
    if not isinstance(poly, Polygon):
        poly = normalize(poly)
    marked = [m if isinstance(m, Vec2) else Vec2(*m) for m in marked]
    cuts = [int(c) for c in cuts]
    if len(marked) != len(cuts):
        raise RepresentativeError("each marked point needs exactly one cut direction")
    if len(set(marked)) != len(marked):
        raise RepresentativeError("marked points must be distinct")
    marked_t, cuts_t = _sorted_marks(marked, cuts)
    cls = classify_corners(poly, marked_t, cuts_t)
    if not cls.ok:
        err = RepresentativeError("; ".join(cls.problems))
        err.classification = cls
        raise err
    return SemitoricRepresentative(poly, marked_t, cuts_t), cls


_CLASS_CACHE: dict[SemitoricRepresentative, CornerClassification] = {}


def classification(rep: SemitoricRepresentative) -> CornerClassification:
    cls = _CLASS_CACHE.get(rep)
    if cls is None:
        cls = classify_corners(rep.polygon, rep.marked, rep.cuts)
        _CLASS_CACHE[rep] = cls
    return cls


def _rebuilt(points, marked, cuts) -> SemitoricRepresentative:
    try:
        rep, _ = validate_representative(normalize(points), marked, cuts)
    except (PolygonError, RepresentativeError) as exc:  # pragma: no cover - would be a library bug
        raise AssertionError(f"group action produced an invalid representative: {exc}") from exc
    return rep


def apply_global_T(rep: SemitoricRepresentative, power: int = 1) -> SemitoricRepresentative:
    m = shear_power(power)
    return _rebuilt([m.apply(v) for v in rep.polygon.vertices], [m.apply(c) for c in rep.marked], rep.cuts)


def apply_vertical_translation(rep: SemitoricRepresentative, t) -> SemitoricRepresentative:
    off = Vec2(0, as_rational(t))
    return _rebuilt([v + off for v in rep.polygon.vertices], [c + off for c in rep.marked], rep.cuts)


def _drop_collinear(points: list[Vec2]) -> list[Vec2]:
    pts = list(points)
    changed = True
    while changed and len(pts) > 3:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if det(b - a, c - b) == 0:
                del pts[i]
                changed = True
                break
    return pts


def flip_step(rep: SemitoricRepresentative, index: int) -> PiecewiseShear:
    """The plane map realizing a flip of cut ``index`` (1-based)."""
    return PiecewiseShear(rep.marked[index - 1].x, rep.cuts[index - 1])


def flip_cut(rep: SemitoricRepresentative, index: int) -> SemitoricRepresentative:
    """Reverse cut ``index`` (1-based), shearing everything right of its marked point."""
    if not 1 <= index <= rep.m:
        raise IndexError(f"cut index {index} out of range 1..{rep.m}")
    step = flip_step(rep, index)
    j = step.base
    verts = rep.polygon.vertices
    n = len(verts)
    split = []
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        split.append(p)
        if (p.x - j) * (q.x - j) < 0:
            split.append(p + (q - p) * ((j - p.x) / (q.x - p.x)))
    moved = _drop_collinear([step.apply(v) for v in split])
    cuts = list(rep.cuts)
    cuts[index - 1] = -cuts[index - 1]
    return _rebuilt(moved, [step.apply(c) for c in rep.marked], cuts)


def flip_cuts(rep: SemitoricRepresentative, indices: Sequence[int]) -> tuple[SemitoricRepresentative, tuple[PiecewiseShear, ...]]:
    """Flip several cuts in order; also return the plane maps used, in order."""
    steps = []
    for k in indices:
        steps.append(flip_step(rep, k))
        rep = flip_cut(rep, k)
    return rep, tuple(steps)


@dataclass(frozen=True)
class SemitoricEdge:
    index: int
    start: int
    end: int
    edges: tuple[int, ...]
    length: Fraction


def semitoric_edges(rep: SemitoricRepresentative) -> list[SemitoricEdge]:
    """Chains of polygon edges joined at fake corners, clockwise from the first corner."""
    cls = classification(rep)
    n = len(rep.polygon)
    lens = [e.sl2z_length for e in edge_lengths(rep.polygon)]
    anchors = [c.index for c in cls.corners if c.is_corner]
    out = []
    for k, s in enumerate(anchors):
        chain = []
        i = s
        while True:
            chain.append(i)
            i = (i + 1) % n
            if cls.corners[i].is_corner:
                break
        out.append(SemitoricEdge(k, s, i, tuple(chain), sum((lens[e] for e in chain), Fraction(0))))
    return out


def corner_indices(rep: SemitoricRepresentative) -> list[int]:
    return [c.index for c in classification(rep).corners if c.is_corner]


def _chain_hit(verts, start, step, count, x):
    """Walk ``count`` edges from vertex ``start`` in direction ``step``.

    Returns ``(path length, point)`` for the first boundary point with abscissa ``x``.
    """
    n = len(verts)
    acc = Fraction(0)
    i = start
    for _ in range(count):
        p, q = verts[i], verts[(i + step) % n]
        if min(p.x, q.x) <= x <= max(p.x, q.x) and p.x != q.x:
            hit = p + (q - p) * ((x - p.x) / (q.x - p.x))
            return acc + sl2z_length(hit - p), hit
        acc += sl2z_length(q - p)
        i = (i + step) % n
    return None


@dataclass(frozen=True)
class AlphaTerm:
    corner: int
    marked: int
    q: Vec2
    a: Fraction
    b: Fraction
    slope_gap: Fraction

    @property
    def value(self) -> Fraction:
        return self.a + self.b * self.slope_gap


def alpha_terms(rep: SemitoricRepresentative) -> list[list[AlphaTerm]]:
    """Per corner, the candidate bounds contributed by each qualifying marked point."""
    verts = rep.polygon.vertices
    n = len(verts)
    corners = corner_indices(rep)
    d = len(corners)
    out = []
    for k, vi in enumerate(corners):
        p = verts[vi]
        ahead = (corners[(k + 1) % d] - vi) % n or n
        behind = (vi - corners[(k - 1) % d]) % n or n
        u1, u2 = corner_directions(verts, vi)
        gap = abs(u1.x - u2.x)
        terms = []
        for j, c in enumerate(rep.marked):
            if c.x == p.x:
                q, a = p, Fraction(0)
            else:
                hits = [
                    h
                    for h in (_chain_hit(verts, vi, 1, ahead, c.x), _chain_hit(verts, vi, -1, behind, c.x))
                    if h is not None
                ]
                if not hits:
                    continue
                a, q = min(hits, key=lambda h: (h[0], -h[1].y))
            terms.append(AlphaTerm(k, j, q, a, abs(c.y - q.y), gap))
        out.append(terms)
    return out


def alpha_bounds(rep: SemitoricRepresentative) -> list[Fraction | None]:
    """Marked-point caps per corner; ``None`` means no marked point constrains it."""
    return [min((t.value for t in terms), default=None) for terms in alpha_terms(rep)]


def _need(params, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise FamilyDomainError("missing parameter(s): " + ", ".join(missing))
    return [as_rational(params[n]) for n in names]


def _int_param(name, value, low):
    if value.denominator != 1 or value < low:
        raise FamilyDomainError(f"{name} must be an integer with {name} ≥ {low}")
    return int(value)


def _check(cond, message):
    if not cond:
        raise FamilyDomainError(message)


SEMITORIC_FAMILIES = ("type1", "type2", "type3a", "type3b", "type3c", "inverted3b")


def make_semitoric_family(kind: str, **params) -> SemitoricRepresentative:
    """Minimal semitoric polygons with every cut pointing up."""
    if kind == "type1":
        a, h = _need(params, "a", "h")
        _check(a > 0, "a must satisfy a>0")
        _check(0 < h < a / 2, "h must satisfy 0<h<a/2")
        pts, marks = [(0, 0), (a, a / 2), (2 * a, 0)], [(a, h)]
    elif kind == "type2":
        a, b = _need(params, "a", "b")
        if "h" in params:
            h1 = h2 = as_rational(params["h"])
        else:
            h1, h2 = _need(params, "h1", "h2")
        _check(a > 0, "a must satisfy a>0")
        _check(b >= 0, "b must satisfy b≥0")
        _check(0 < h1 < a and 0 < h2 < a, "heights must satisfy 0<h1,h2<a")
        if b == 0:
            _check(h1 != h2, "with b=0 the two marked points must be distinct")
            pts = [(0, 0), (a, a), (2 * a, 0)]
        else:
            pts = [(0, 0), (a, a), (a + b, a), (2 * a + b, 0)]
        marks = [(a, h1), (a + b, h2)]
    elif kind == "type3a":
        a, b, n, h = _need(params, "a", "b", "n", "h")
        _check(a > 0, "a must satisfy a>0")
        _check(b > 0, "b must satisfy b>0")
        n = _int_param("n", n, 1)
        _check(0 < h < a, "h must satisfy 0<h<a")
        pts, marks = [(0, 0), (a, a), (a + b, a), (a * n + b, 0)], [(a, h)]
    elif kind == "type3b":
        a, n, h = _need(params, "a", "n", "h")
        _check(a > 0, "a must satisfy a>0")
        n = _int_param("n", n, 2)
        _check(0 < h < a, "h must satisfy 0<h<a")
        pts, marks = [(0, 0), (a, a), (a * n, 0)], [(a, h)]
    elif kind == "type3c":
        a, b, n, h = _need(params, "a", "b", "n", "h")
        _check(a > 0, "a must satisfy a>0")
        _check(-a < b < 0, "b must satisfy −a<b<0")
        n = _int_param("n", n, 2)
        top = a + b / (n - 1)
        _check(0 < h < top, "h must satisfy 0<h<a+b/(n−1)")
        pts = [(0, 0), (a + b, a + b), (a, top), (a * n + b, 0)]
        marks = [(a, h)]
    elif kind == "inverted3b":
        a, n, h = _need(params, "a", "n", "h")
        _check(a > 0, "a must satisfy a>0")
        n = _int_param("n", n, 2)
        _check(0 < h < a, "h must satisfy 0<h<a")
        pts, marks = [(0, 0), (a, a), (a * n, a), (a, 0)], [(a, h)]
    else:
        raise FamilyDomainError(f"unknown semitoric family {kind!r}")
    poly = normalize(Vec2(x, y) for x, y in pts)
    rep, _ = validate_representative(poly, [Vec2(x, y) for x, y in marks], [1] * len(marks))
    return rep
