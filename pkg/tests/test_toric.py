from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from stpack import (
    DelzantError,
    InfeasibleError,
    Vec2,
    alternating_edge_density,
    build_toric_problem,
    make_delzant_family,
    normalize,
    realize_packing,
    toric_capacity,
    toric_density,
)
from stpack.formulas import hirzebruch_density, rectangle_density
from stpack.geometry import IDENTITY, ROTATE_S, SHEAR_T
from stpack.polytope import squared_norm
from stpack.toric import corner_triangle, packing_violations

from corpus import toric_corpus

fam = make_delzant_family


def test_build_problem_examples():
    sq = build_toric_problem(fam("rectangle", 1, 1))
    assert sq.dimension == 4 and sq.lengths == (1, 1, 1, 1) and len(sq.system.constraints) == 8
    assert build_toric_problem(fam("triangle", 1)).lengths == (1, 1, 1)
    assert build_toric_problem(fam("hirzebruch", 1, 1, 2)).lengths == (1, 1, 1, 3)


def test_non_delzant_rejected():
    with pytest.raises(DelzantError) as info:
        build_toric_problem(normalize([Vec2(0, 0), Vec2(1, 1), Vec2(3, 0)]))
    assert not info.value.report.ok


@pytest.mark.parametrize(
    "poly, expected",
    [
        (fam("triangle", 1), 1),
        (fam("rectangle", 1, 2), F(1, 2)),
        (fam("hirzebruch", 3, 2, 1), F(2, 3)),
        (fam("hirzebruch", 1, 1, 2), F(1, 2)),
    ],
)
def test_density_examples(poly, expected):
    density, maximizers = toric_density(poly)
    assert density == expected
    assert all(squared_norm(m) == 2 * poly.area * density for m in maximizers)


def test_realize_unit_square():
    pk = realize_packing(fam("rectangle", 1, 1), (1, 0, 1, 0))
    assert len(pk.triangles) == 2 and pk.total_area == 1 and pk.density == 1


def test_realize_empty_and_whole_triangle():
    tri = fam("triangle", 1)
    assert realize_packing(tri, (0, 0, 0)).triangles == ()
    pk = realize_packing(tri, (1, 0, 0))
    (t,) = pk.triangles
    assert {t.apex, t.apex + t.v * t.size, t.apex + t.w * t.size} == set(tri.vertices)
    assert pk.density == 1


def test_infeasible_names_constraint():
    with pytest.raises(InfeasibleError) as info:
        realize_packing(fam("triangle", 1), (1, 1, 0))
    assert str(info.value) == "λ1+λ2 ≤ 1 violated"
    with pytest.raises(InfeasibleError):
        realize_packing(fam("triangle", 1), (-1, 0, 0))


def test_alternating_examples():
    assert alternating_edge_density(fam("rectangle", 1, 2)) == F(1, 2)
    assert alternating_edge_density(fam("triangle", 1)) is None
    h = fam("hirzebruch", 1, 2, 1)
    # lengths (1,2,1,3), area 5/2, alternating packing (0,1,0,1): 2a/(a+2b) = 2/5
    assert alternating_edge_density(h) == F(2, 5) == toric_density(h).density
    assert alternating_edge_density(fam("hirzebruch", 3, 2, 1)) is None


def test_capacity_examples():
    assert toric_capacity(fam("triangle", 1)).radicand == 1
    assert toric_capacity(fam("rectangle", 1, 1)).radicand == 2
    cap = toric_capacity(fam("rectangle", 1, 2))
    assert cap.radicand == 2 and cap.exponent == F(1, 4)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(toric_corpus())), st.randoms(use_true_random=False))
def test_overlap_iff_adjacent_sum_exceeds_length(name, rnd):
    p = toric_corpus()[name]
    prob = build_toric_problem(p)
    d = prob.dimension
    i = rnd.randrange(d)
    j = (i + 1) % d
    ell = prob.lengths
    cap_i = min(ell[i - 1], ell[i])
    cap_j = min(ell[i], ell[j])
    si = F(rnd.randint(1, 16), 16) * cap_i
    sj = F(rnd.randint(1, 16), 16) * cap_j
    ti, tj = corner_triangle(p, i, si), corner_triangle(p, j, sj)
    assert bool(packing_violations([ti, tj], p.vertices)) == (si + sj > ell[i])


@st.composite
def sl2_matrices(draw):
    m = IDENTITY
    for g in draw(st.lists(st.sampled_from([SHEAR_T, SHEAR_T.inverse(), ROTATE_S]), max_size=6)):
        m = m @ g
    return m


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(toric_corpus())), sl2_matrices(), st.fractions(min_value=F(1, 5), max_value=5, max_denominator=5))
def test_density_invariance(name, m, k):
    p = toric_corpus()[name]
    base = toric_density(p).density
    assert toric_density(p.transformed(m, Vec2(F(1, 3), -2))).density == base
    if k > 0:
        assert toric_density(p.scaled(k)).density == base


def test_closed_form_sample():
    for a, b in [(1, 2), (F(3, 2), F(1, 2)), (3, 3)]:
        assert toric_density(fam("rectangle", a, b)).density == rectangle_density(a, b)
    for a, b, n in [(1, 2, 1), (3, 2, 1), (3, 1, 1), (2, 1, 4)]:
        assert toric_density(fam("hirzebruch", a, b, n)).density == hirzebruch_density(a, b, n)
