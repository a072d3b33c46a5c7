"""Packing Delzant polygons by corner triangles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DelzantError
from .geometry import Vec2, as_rational
from .polygon import Polygon, check_delzant, corner_directions, edge_lengths
from .polytope import (
    HalfspaceSystem,
    PolytopeVertexSet,
    cyclic_system,
    enumerate_vertices,
    max_squared_norm,
    squared_norm,
)
from .regions import Cell, closures_inside, cells_intersect, triangle_cell


@dataclass(frozen=True)
class ToricPackingProblem:
    polygon: Polygon
    lengths: tuple[Fraction, ...]
    system: HalfspaceSystem

    @property
    def dimension(self) -> int:
        return self.system.dimension


@dataclass(frozen=True)
class PackedTriangle:
    """Triangle ``apex + {s v + t w : s, t >= 0, s + t < size}`` packed at corner ``corner``."""

    corner: int
    apex: Vec2
    v: Vec2
    w: Vec2
    size: Fraction

    @property
    def cell(self) -> Cell:
        return triangle_cell(self.apex, self.v, self.w, self.size)

    @property
    def area(self) -> Fraction:
        return self.size * self.size / 2


@dataclass(frozen=True)
class Packing:
    lambdas: tuple[Fraction, ...]
    triangles: tuple[PackedTriangle, ...]
    total_area: Fraction
    density: Fraction


@dataclass(frozen=True)
class DensityResult:
    density: Fraction
    maximizers: tuple[tuple[Fraction, ...], ...]
    max_norm_squared: Fraction
    area: Fraction
    vertices: PolytopeVertexSet

    def __iter__(self):
        yield self.density
        yield list(self.maximizers)


@dataclass(frozen=True)
class Capacity:
    """The quarter root of ``radicand``; volume is measured in polygon-area units."""

    radicand: Fraction
    exponent: Fraction = Fraction(1, 4)

    def approx(self) -> float:
        return float(self.radicand) ** float(self.exponent)


def _require_delzant(p: Polygon) -> None:
    report = check_delzant(p)
    if not report.ok:
        bad = report.failures[0]
        raise DelzantError(f"vertex {bad.vertex}: det = {bad.determinant}, fails", report=report)


def build_toric_problem(p: Polygon) -> ToricPackingProblem:
    _require_delzant(p)
    lengths = tuple(e.sl2z_length for e in edge_lengths(p))
    return ToricPackingProblem(p, lengths, cyclic_system(lengths))


def density_from_vertices(vs: PolytopeVertexSet, area: Fraction) -> DensityResult:
    best, winners = max_squared_norm(vs)
    return DensityResult(best / (2 * area), tuple(winners), best, area, vs)


def toric_density(p: Polygon) -> DensityResult:
    """Exact packing density ``max ||q||^2 / (2 area)`` over polytope vertices, with every maximizer."""
    prob = build_toric_problem(p)
    return density_from_vertices(enumerate_vertices(prob.system), p.area)


def corner_triangle(p: Polygon, i: int, size) -> PackedTriangle:
    """The triangle of the given size at vertex ``i``, legs along the two incident edges."""
    v, w = corner_directions(p.vertices, i)
    return PackedTriangle(i, p[i], v, w, as_rational(size))


def packing_violations(triangles: Sequence[PackedTriangle], polygon_vertices) -> list[str]:
    """Exact overlap and containment failures among packed triangles."""
    problems = []
    cells = [t.cell for t in triangles]
    for k, (t, c) in enumerate(zip(triangles, cells)):
        if not closures_inside([c], polygon_vertices):
            problems.append(f"triangle at corner {t.corner + 1} leaves the polygon")
        for t2, c2 in zip(triangles[k + 1:], cells[k + 1:]):
            if cells_intersect(c, c2):
                problems.append(f"triangles at corners {t.corner + 1} and {t2.corner + 1} overlap")
    return problems


def realize_packing(p: Polygon, lambdas: Sequence) -> Packing:
    """Realize a feasible size vector as corner triangles and verify them exactly.

    Raises InfeasibleError naming the first violated constraint.
    """
    prob = build_toric_problem(p)
    lam = prob.system.require(lambdas)
    tris = tuple(corner_triangle(p, i, s) for i, s in enumerate(lam) if s > 0)
    problems = packing_violations(tris, p.vertices)
    if problems:
        raise AssertionError("feasible sizes produced an invalid packing: " + "; ".join(problems))
    total = sum((t.area for t in tris), Fraction(0))
    return Packing(lam, tris, total, total / p.area)


def alternating_edge_density(p: Polygon) -> Fraction | None:
    """Density from the alternating edge condition, or None when no labelling satisfies it.

    All rotations and both orientations of the edge labels are tried.
    """
    _require_delzant(p)
    lengths = [e.sl2z_length for e in edge_lengths(p)]
    d = len(lengths)
    if d % 2:
        return None
    best = None
    for seq in (lengths, lengths[::-1]):
        for r in range(d):
            rot = seq[r:] + seq[:r]
            if all(rot[2 * j] <= rot[2 * j + 1] for j in range(d // 2)):
                value = sum(rot[2 * j] ** 2 for j in range(d // 2)) / (2 * p.area)
                best = value if best is None else max(best, value)
    return best


def toric_capacity(p: Polygon) -> Capacity:
    res = toric_density(p)
    return Capacity(2 * p.area * res.density)


def packing_area_identity(packing: Packing) -> bool:
    return packing.total_area == squared_norm(packing.lambdas) / 2
