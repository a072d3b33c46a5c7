"""Halfspace systems in Q^d with exact vertex enumeration.

Vertices are found by walking d-subsets of constraints depth first while
keeping the chosen rows in reduced row-echelon form.  A row that reduces to
zero is linearly dependent on the ones already chosen, so that whole branch
is skipped before any d x d solve is attempted.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InfeasibleError, UnboundedError
from .geometry import as_rational, format_rational

Point = tuple[Fraction, ...]

WORKERS_ENV = "STPACK_WORKERS"


@dataclass(frozen=True)
class Halfspace:
    coeffs: tuple[Fraction, ...]
    bound: Fraction
    label: str = ""

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        return self.bound - sum((c * v for c, v in zip(self.coeffs, x)), Fraction(0))

    def satisfied(self, x: Sequence[Fraction]) -> bool:
        return self.slack(x) >= 0


@dataclass(frozen=True)
class HalfspaceSystem:
    dimension: int
    constraints: tuple[Halfspace, ...]

    def first_violation(self, x: Sequence[Fraction]) -> Halfspace | None:
        for h in self.constraints:
            if not h.satisfied(x):
                return h
        return None

    def contains(self, x: Sequence[Fraction]) -> bool:
        return self.first_violation(x) is None

    def require(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Return ``x`` as a tuple of Fractions, raising InfeasibleError on a violated constraint."""
        if len(x) != self.dimension:
            raise InfeasibleError(f"expected {self.dimension} sizes, got {len(x)}")
        x = tuple(as_rational(v) for v in x)
        bad = self.first_violation(x)
        if bad is not None:
            raise InfeasibleError(f"{bad.label} violated", constraint=bad)
        return x


def _lam(i: int) -> str:
    return f"λ{i + 1}"


def cyclic_system(lengths: Sequence[Fraction], caps: Sequence[Fraction | None] | None = None) -> HalfspaceSystem:
    """``{λ_i >= 0, λ_i + λ_{i+1} <= ℓ_i, λ_i <= α_i}`` with indices taken cyclically.

    A cap of ``None`` stands for an infinite bound and adds no constraint.
    """
    d = len(lengths)
    zero, one = Fraction(0), Fraction(1)
    cons = []
    for i in range(d):
        row = [zero] * d
        row[i] = -one
        cons.append(Halfspace(tuple(row), zero, f"{_lam(i)} ≥ 0"))
    for i in range(d):
        row = [zero] * d
        row[i] += one
        row[(i + 1) % d] += one
        ell = as_rational(lengths[i])
        cons.append(Halfspace(tuple(row), ell, f"{_lam(i)}+{_lam((i + 1) % d)} ≤ {format_rational(ell)}"))
    for i, cap in enumerate(caps or ()):
        if cap is None:
            continue
        row = [zero] * d
        row[i] = one
        cap = as_rational(cap)
        cons.append(Halfspace(tuple(row), cap, f"{_lam(i)} ≤ {format_rational(cap)}"))
    return HalfspaceSystem(d, tuple(cons))


@dataclass(frozen=True)
class PolytopeVertexSet:
    dimension: int
    vertices: tuple[Point, ...]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, item):
        return tuple(as_rational(v) for v in item) in set(self.vertices)


def _integer_row(h: Halfspace) -> tuple[int, ...]:
    den = 1
    for q in h.coeffs + (h.bound,):
        den = den * q.denominator // math.gcd(den, q.denominator)
    return tuple(int(q * den) for q in h.coeffs + (h.bound,))


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for a in row:
        g = math.gcd(g, a)
    if g > 1:
        row = [a // g for a in row]
    return row


def _reduce_into(basis, row):
    """Try to add an augmented integer row to a reduced row-echelon basis.

    ``basis`` is a list of ``(pivot, row)``; every basis row is zero in the
    pivot columns of the others and has a positive pivot entry.  Returns the
    new basis, or None if the row is linearly dependent.
    """
    row = list(row)
    for piv, brow in basis:
        f = row[piv]
        if f:
            p = brow[piv]
            row = [p * a - f * b for a, b in zip(row, brow)]
    d = len(row) - 1
    piv = next((k for k in range(d) if row[k]), None)
    if piv is None:
        return None
    if row[piv] < 0:
        row = [-a for a in row]
    row = _primitive(row)
    p = row[piv]
    new = []
    for bpiv, brow in basis:
        g = brow[piv]
        if g:
            brow = _primitive([p * a - g * b for a, b in zip(brow, row)])
        new.append((bpiv, brow))
    new.append((piv, row))
    return new


def _search(constraints, d, first_range):
    rows = [_integer_row(h) for h in constraints]
    sparse = [([(k, r[k]) for k in range(d) if r[k]], r[d]) for r in rows]
    found = set()
    m = len(rows)

    def leaf(basis):
        den = 1
        for piv, brow in basis:
            den = den * brow[piv] // math.gcd(den, brow[piv])
        x = [0] * d
        for piv, brow in basis:
            x[piv] = brow[d] * (den // brow[piv])
        for nz, bound in sparse:
            if sum(c * x[k] for k, c in nz) > bound * den:
                return
        found.add(tuple(Fraction(v, den) for v in x))

    def rec(start, basis):
        depth = len(basis)
        if depth == d:
            leaf(basis)
            return
        for k in range(start, m - (d - depth) + 1):
            nb = _reduce_into(basis, rows[k])
            if nb is not None:
                rec(k + 1, nb)

    for k in first_range:
        nb = _reduce_into([], rows[k])
        if nb is not None:
            rec(k + 1, nb)
    return found


def _search_chunk(args):
    constraints, d, ks = args
    return _search(constraints, d, ks)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _raw_vertices(constraints: Sequence[Halfspace], d: int, workers: int) -> set[Point]:
    m = len(constraints)
    firsts = list(range(0, m - d + 1))
    if workers <= 1 or len(firsts) < 2:
        return _search(constraints, d, firsts)
    chunks = [firsts[i::workers] for i in range(workers)]
    out: set[Point] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_search_chunk, [(tuple(constraints), d, c) for c in chunks if c]):
            out |= part
    return out


def _has_cheap_bound(sys: HalfspaceSystem) -> bool:
    d = sys.dimension
    nonneg = set()
    covered = set()
    for h in sys.constraints:
        nz = [k for k, c in enumerate(h.coeffs) if c]
        if len(nz) == 1 and h.coeffs[nz[0]] < 0 and h.bound == 0:
            nonneg.add(nz[0])
        if nz and all(c >= 0 for c in h.coeffs):
            covered.update(k for k in nz if h.coeffs[k] > 0)
    return len(nonneg) == d and len(covered) == d


def is_bounded(sys: HalfspaceSystem) -> bool:
    """Exact boundedness test for a nonempty system.

    A quick certificate handles packing systems.  Otherwise the recession cone
    ``{coeffs . x <= 0}`` is intersected with the cube ``[-1, 1]^d``; the system
    is bounded iff that cube slice has no nonzero vertex.
    """
    if _has_cheap_bound(sys):
        return True
    d = sys.dimension
    cone = [Halfspace(h.coeffs, Fraction(0)) for h in sys.constraints]
    for k in range(d):
        e = [Fraction(0)] * d
        e[k] = Fraction(1)
        cone.append(Halfspace(tuple(e), Fraction(1)))
        e = [Fraction(0)] * d
        e[k] = Fraction(-1)
        cone.append(Halfspace(tuple(e), Fraction(1)))
    verts = _search(cone, d, range(len(cone) - d + 1))
    return all(not any(x) for x in verts)


def enumerate_vertices(sys: HalfspaceSystem, workers: int | None = None) -> PolytopeVertexSet:
    """All extreme points of a bounded system, sorted lexicographically.

    ``workers`` overrides the ``STPACK_WORKERS`` environment variable; values above
    one split the search over a process pool with a deterministic merged result.
    """
    d = sys.dimension
    verts = _raw_vertices(sys.constraints, d, workers if workers is not None else _workers())
    if verts and not is_bounded(sys):
        raise UnboundedError("the halfspace system describes an unbounded region")
    return PolytopeVertexSet(d, tuple(sorted(verts)))


def squared_norm(x: Iterable[Fraction]) -> Fraction:
    return sum((v * v for v in x), Fraction(0))


def max_squared_norm(vs: PolytopeVertexSet | Iterable[Point]) -> tuple[Fraction, list[Point]]:
    """Largest ``sum λ_i^2`` over the vertices, with every attaining vertex.

    Maximizers are listed in descending lexicographic order.
    """
    pts = list(vs)
    if not pts:
        raise ValueError("empty vertex set")
    best = max(squared_norm(p) for p in pts)
    winners = sorted((p for p in pts if squared_norm(p) == best), reverse=True)
    return best, winners


def format_point(x: Sequence[Fraction]) -> str:
    return "(" + ",".join(format_rational(v) for v in x) + ")"
