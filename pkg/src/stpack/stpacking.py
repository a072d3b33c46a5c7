"""Semitoric packings: the capped polytope and geometric realization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .geometry import Vec2, sl2z_length
from .polygon import corner_directions
from .polytope import HalfspaceSystem, cyclic_system, enumerate_vertices, squared_norm
from .regions import (
    Cell,
    PiecewiseShear,
    cells_intersect,
    closures_inside,
    regions_intersect,
    segment_cell,
    transport,
    triangle_cell,
)
from .semitoric import (
    DELZANT,
    SemitoricRepresentative,
    alpha_bounds,
    classification,
    corner_indices,
    flip_cuts,
    semitoric_edges,
)
from .toric import Capacity, DensityResult, density_from_vertices


@dataclass(frozen=True)
class SemitoricPackingProblem:
    representative: SemitoricRepresentative
    corners: tuple[int, ...]
    lengths: tuple[Fraction, ...]
    caps: tuple[Fraction | None, ...]
    system: HalfspaceSystem

    @property
    def dimension(self) -> int:
        return self.system.dimension


@dataclass(frozen=True)
class SemitoricTriangle:
    """A triangle packed at corner ``corner`` (0-based among the anchor corners).

    ``flips`` lists the cuts (1-based) reversed to reach ``representative``,
    where the triangle is an honest corner triangle at ``apex``.
    ``base_region`` is the same set pulled back to the original representative.
    """

    corner: int
    flips: tuple[int, ...]
    steps: tuple[PiecewiseShear, ...]
    representative: SemitoricRepresentative
    apex: Vec2
    v: Vec2
    w: Vec2
    size: Fraction
    cuts_met: int
    base_region: tuple[Cell, ...]

    @property
    def cell(self) -> Cell:
        return triangle_cell(self.apex, self.v, self.w, self.size)

    @property
    def area(self) -> Fraction:
        return self.size * self.size / 2


@dataclass(frozen=True)
class SemitoricPacking:
    lambdas: tuple[Fraction, ...]
    triangles: tuple[SemitoricTriangle, ...]
    total_area: Fraction
    density: Fraction


_PROBLEM_CACHE: dict[SemitoricRepresentative, SemitoricPackingProblem] = {}


def build_semitoric_problem(rep: SemitoricRepresentative) -> SemitoricPackingProblem:
    prob = _PROBLEM_CACHE.get(rep)
    if prob is None:
        lengths = tuple(e.length for e in semitoric_edges(rep))
        caps = tuple(alpha_bounds(rep))
        prob = SemitoricPackingProblem(rep, tuple(corner_indices(rep)), lengths, caps, cyclic_system(lengths, caps))
        _PROBLEM_CACHE[rep] = prob
    return prob


_DENSITY_CACHE: dict[SemitoricRepresentative, DensityResult] = {}


def semitoric_density(rep: SemitoricRepresentative) -> DensityResult:
    res = _DENSITY_CACHE.get(rep)
    if res is None:
        prob = build_semitoric_problem(rep)
        res = density_from_vertices(enumerate_vertices(prob.system), rep.polygon.area)
        _DENSITY_CACHE[rep] = res
    return res


def is_perfect(rep: SemitoricRepresentative) -> bool:
    return semitoric_density(rep).density == 1


def semitoric_capacity(rep: SemitoricRepresentative) -> Capacity:
    return Capacity(2 * rep.polygon.area * semitoric_density(rep).density)


@lru_cache(maxsize=4096)
def _flipped(rep: SemitoricRepresentative, subset: tuple[int, ...]):
    return flip_cuts(rep, subset)


def _cut_segments(rep: SemitoricRepresentative) -> list[Cell]:
    return [segment_cell(c, rep.cut_endpoint(j)) for j, c in enumerate(rep.marked)]


def _apply_all(steps: Sequence[PiecewiseShear], p: Vec2) -> Vec2:
    for s in steps:
        p = s.apply(p)
    return p


def corner_realization(rep: SemitoricRepresentative, k: int, size) -> SemitoricTriangle | None:
    """Find a representative in which a triangle of ``size`` packs admissibly at corner ``k``.

    Every subset of cuts is tried.  A candidate must sit at a Delzant vertex
    with both incident edges at least ``size`` long and must not contain a
    marked point.  Among candidates, the fewest cuts crossing the triangle
    wins, then the fewest flips, then the lexicographically first subset.
    Returns None when no subset works.
    """
    size = Fraction(size)
    vi = corner_indices(rep)[k]
    p = rep.polygon.vertices[vi]
    best = None
    for r in range(rep.m + 1):
        for subset in combinations(range(1, rep.m + 1), r):
            other, steps = _flipped(rep, subset)
            apex = _apply_all(steps, p)
            verts = other.polygon.vertices
            try:
                ii = verts.index(apex)
            except ValueError:
                continue
            info = classification(other).corners[ii]
            if info.kind != DELZANT:
                continue
            n = len(verts)
            if size > sl2z_length(verts[(ii - 1) % n] - apex) or size > sl2z_length(verts[(ii + 1) % n] - apex):
                continue
            v, w = corner_directions(verts, ii)
            cell = triangle_cell(apex, v, w, size)
            if any(cell.contains(c) for c in other.marked):
                continue
            met = sum(1 for seg in _cut_segments(other) if cells_intersect(seg, cell))
            key = (met, r, subset)
            if best is None or key < best[0]:
                best = (key, subset, steps, other, apex, v, w, cell, met)
        if best is not None and best[0][0] == 0:
            break
    if best is None:
        return None
    _, subset, steps, other, apex, v, w, cell, met = best
    back = [s.inverse() for s in reversed(steps)]
    region = tuple(transport([cell], back))
    return SemitoricTriangle(k, subset, steps, other, apex, v, w, size, met, region)


def realization_problems(rep: SemitoricRepresentative, triangles: Sequence[SemitoricTriangle]) -> list[str]:
    """Exact geometric failures of a packing, checked in the original representative."""
    problems = []
    for idx, t in enumerate(triangles):
        if not closures_inside(t.base_region, rep.polygon.vertices):
            problems.append(f"triangle at corner {t.corner + 1} leaves the polygon")
        if any(cell.contains(c) for cell in t.base_region for c in rep.marked):
            problems.append(f"triangle at corner {t.corner + 1} contains a marked point")
        for t2 in triangles[idx + 1:]:
            if regions_intersect(t.base_region, t2.base_region):
                problems.append(f"triangles at corners {t.corner + 1} and {t2.corner + 1} overlap")
    return problems


def realize_semitoric_packing(rep: SemitoricRepresentative, lambdas: Sequence) -> SemitoricPacking:
    """Realize a feasible size vector, rechecking the geometry exactly.

    Raises InfeasibleError naming the first violated constraint.
    """
    prob = build_semitoric_problem(rep)
    lam = prob.system.require(lambdas)
    tris = []
    for k, s in enumerate(lam):
        if s == 0:
            continue
        t = corner_realization(rep, k, s)
        if t is None:
            raise AssertionError(f"no representative packs λ{k + 1} = {s}; the caps disagree with the geometry")
        tris.append(t)
    problems = realization_problems(rep, tris)
    if problems:
        raise AssertionError("feasible sizes produced an invalid packing: " + "; ".join(problems))
    total = sum((t.area for t in tris), Fraction(0))
    if total != squared_norm(lam) / 2:  # pragma: no cover
        raise AssertionError("packed area disagrees with the size vector")
    return SemitoricPacking(lam, tuple(tris), total, total / rep.polygon.area)
