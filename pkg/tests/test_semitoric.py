from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from stpack import (
    FamilyDomainError,
    RepresentativeError,
    Vec2,
    alpha_bounds,
    apply_global_T,
    apply_vertical_translation,
    area,
    flip_cut,
    make_semitoric_family,
    normalize,
    semitoric_edges,
    validate_representative,
)
from stpack.geometry import sl2z_length
from stpack.polygon import corner_directions
from stpack.semitoric import alpha_terms, classification, corner_indices

from corpus import semitoric_corpus, st_edges_rep

H = F(1, 2)
V = Vec2


def labels(rep):
    return classification(rep).labels


def test_fake_corner_example():
    rep, cls = validate_representative(normalize([V(0, 0), V(4, 0), V(2, 1)]), [V(2, H)], [1])
    assert cls.labels == ["Delzant", "Fake(1)", "Delzant"]
    assert cls.corners[1].det_twisted == 0


def test_hidden_corner_example():
    rep = make_semitoric_family("type3b", a=1, n=2, h=H)
    assert rep.polygon.vertices == (V(0, 0), V(1, 1), V(2, 0))
    assert labels(rep) == ["Delzant", "Hidden(1)", "Delzant"]


def test_two_cuts_on_one_fake_corner():
    rep = make_semitoric_family("type2", a=1, b=0, h1=F(1, 4), h2=F(3, 4))
    assert labels(rep) == ["Delzant", "Fake(2)", "Delzant"]


@pytest.mark.parametrize(
    "poly, marked, cuts, fragment",
    [
        ([V(0, 0), V(4, 0), V(2, 1)], [V(1, H)], [1], "not strictly inside"),
        ([V(0, 0), V(4, 0), V(2, 1)], [V(1, F(1, 4))], [1], "not a vertex"),
        ([V(0, 0), V(4, 0), V(2, 3)], [V(2, 1)], [1], "neither fake nor hidden"),
        ([V(0, 0), V(1, 1), V(3, 0)], [], [], "det = 3"),
    ],
)
def test_invalid_representatives(poly, marked, cuts, fragment):
    with pytest.raises(RepresentativeError) as info:
        validate_representative(normalize(poly), marked, cuts)
    assert fragment in str(info.value)


def test_marked_points_sorted():
    rep = make_semitoric_family("type2", a=1, b=1, h1=F(3, 4), h2=F(1, 4))
    assert rep.marked == (V(1, F(3, 4)), V(2, F(1, 4)))


def test_global_T_examples():
    from stpack.geometry import SHEAR_T

    assert SHEAR_T.apply(V(2, 1)) == V(2, 3)
    rep = make_semitoric_family("type3b", a=1, n=2, h=H)
    assert apply_global_T(apply_global_T(rep, 1), -1) == rep
    moved = apply_global_T(rep, 1)
    assert sorted(v.x for v in moved.polygon.vertices) == sorted(v.x for v in rep.polygon.vertices)


def test_vertical_translation_examples():
    rep = make_semitoric_family("type1", a=4, h=H)
    assert apply_vertical_translation(rep, 0) == rep
    assert apply_vertical_translation(apply_vertical_translation(rep, 1), -1) == rep
    one = make_semitoric_family("type1", a=2, h=H)
    assert apply_vertical_translation(one, H).marked == (V(2, 1),)


def test_flip_of_fake_corner():
    rep, _ = validate_representative(normalize([V(0, 0), V(4, 0), V(2, 1)]), [V(2, H)], [1])
    down = flip_cut(rep, 1)
    assert down.cuts == (-1,)
    assert down.polygon.vertices == (V(0, 0), V(4, 2), V(2, 0))
    assert V(2, 1) not in down.polygon.vertices
    assert flip_cut(down, 1) == rep


def test_flip_of_hidden_corner():
    rep = make_semitoric_family("type3b", a=1, n=2, h=H)
    flipped = flip_cut(rep, 1)
    assert flipped.polygon.vertices == (V(0, 0), V(1, 1), V(2, 1), V(1, 0))
    # the drawn right-hand representative also applies T^-1 and a unit upward shift
    drawn = apply_vertical_translation(apply_global_T(flipped, -1), 1)
    assert set(drawn.polygon.vertices) == {V(0, 1), V(1, 1), V(2, 0), V(1, 0)}
    info = classification(flipped).corners[flipped.polygon.vertices.index(V(1, 1))]
    assert info.kind == "Delzant"
    assert flip_cut(flipped, 1) == rep


def test_flip_index_checked():
    with pytest.raises(IndexError):
        flip_cut(make_semitoric_family("type1", a=2, h=H), 2)


def test_semitoric_edges_examples():
    rep = st_edges_rep()
    edges = semitoric_edges(rep)
    assert [e.length for e in edges] == [5, 2, 3]
    assert len(edges[0].edges) == 2
    a, b = 2, 3
    rep3a = make_semitoric_family("type3a", a=a, b=b, n=2, h=1)
    assert [e.length for e in semitoric_edges(rep3a)] == [a + b, a, 2 * a + b]
    plain, _ = validate_representative(normalize([V(0, 0), V(0, 1), V(1, 1), V(1, 0)]))
    assert [len(e.edges) for e in semitoric_edges(plain)] == [1, 1, 1, 1]


def test_alpha_examples():
    a, h = 3, F(1, 2)
    assert alpha_bounds(make_semitoric_family("type1", a=a, h=h)) == [a - h, a - h]
    a, b, n = 2, 1, 3
    al = alpha_bounds(make_semitoric_family("type3a", a=a, b=b, n=n, h=h))
    assert al[:2] == [a, b + n * (a - h)]
    assert alpha_bounds(make_semitoric_family("type2", a=2, b=1, h1=h, h2=1)) == [2, 2]
    a, b, n = 2, -1, 3
    al = alpha_bounds(make_semitoric_family("type3c", a=a, b=b, n=n, h=h))
    assert al[1:] == [n * (a - h) + b, (n - 1) * a + b - (n - 2) * h]


def test_type1_top_and_bottom_paths_agree():
    """The line x=a meets both edges at p1; compare the two possible choices of q."""
    a, h = F(2), F(1, 2)
    rep = make_semitoric_family("type1", a=a, h=h)
    (term,) = alpha_terms(rep)[0]
    assert term.q == V(a, a / 2) and term.a == a / 2
    assert term.value == a - h
    # bottom path: q = (a, 0) at length a; with the longer path the sign of the b-term flips
    p = rep.polygon.vertices[0]
    u1, u2 = corner_directions(rep.polygon.vertices, 0)
    bottom_a = sl2z_length(V(a, 0) - p)
    bottom_b = h
    assert bottom_a - bottom_b * abs(u1.x - u2.x) == a - h


def test_family_examples():
    r = make_semitoric_family("type1", a=2, h=H)
    assert r.polygon.vertices == (V(0, 0), V(2, 1), V(4, 0)) and r.marked == (V(2, H),) and r.cuts == (1,)
    r = make_semitoric_family("type2", a=1, b=1, h1=H, h2=H)
    assert set(r.polygon.vertices) == {V(0, 0), V(1, 1), V(2, 1), V(3, 0)}
    assert r.marked == (V(1, H), V(2, H))
    r = make_semitoric_family("inverted3b", a=1, n=2, h=H)
    assert set(r.polygon.vertices) == {V(0, 0), V(1, 1), V(2, 1), V(1, 0)}


@pytest.mark.parametrize(
    "kind, params, fragment",
    [
        ("type1", dict(a=1, h=H), "0<h<a/2"),
        ("type3c", dict(a=2, b=1, n=2, h=H), "−a<b<0"),
        ("type3b", dict(a=1, n=1, h=H), "n ≥ 2"),
        ("type2", dict(a=1, b=-1, h1=H, h2=H), "b≥0"),
        ("nope", dict(a=1), "unknown"),
    ],
)
def test_family_domain_errors(kind, params, fragment):
    with pytest.raises(FamilyDomainError) as info:
        make_semitoric_family(kind, **params)
    assert fragment in str(info.value)


def test_families_validate_over_grid():
    for a in (F(1), F(3, 2), F(2)):
        for h in (a / 8, a / 4, 3 * a / 8):
            make_semitoric_family("type1", a=a, h=h)
        for n in range(1, 5):
            for b in (F(1, 2), 1, 3):
                make_semitoric_family("type3a", a=a, b=b, n=n, h=a / 2)
        for n in range(2, 6):
            make_semitoric_family("type3b", a=a, n=n, h=a / 3)
            make_semitoric_family("inverted3b", a=a, n=n, h=a / 3)
            for b in (-a / 4, -a / 2):
                make_semitoric_family("type3c", a=a, b=b, n=n, h=(a + b / (n - 1)) / 2)


def _invariants(rep):
    return (
        area(rep.polygon),
        [e.length for e in semitoric_edges(rep)],
        alpha_bounds(rep),
        len(corner_indices(rep)),
    )


actions = st.lists(
    st.one_of(
        st.tuples(st.just("flip"), st.integers(0, 5)),
        st.tuples(st.just("T"), st.integers(-2, 2)),
        st.tuples(st.just("shift"), st.fractions(min_value=-3, max_value=3, max_denominator=4)),
    ),
    max_size=6,
)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(semitoric_corpus())), actions)
def test_group_action_invariants(name, ops):
    rep = semitoric_corpus()[name]
    expected = _invariants(rep)
    for op, arg in ops:
        if op == "flip":
            rep = flip_cut(rep, arg % rep.m + 1)
        elif op == "T":
            rep = apply_global_T(rep, arg)
        else:
            rep = apply_vertical_translation(rep, arg)
        assert _invariants(rep) == expected


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(semitoric_corpus())), st.integers(0, 5))
def test_double_flip_is_identity(name, k):
    rep = semitoric_corpus()[name]
    idx = k % rep.m + 1
    assert flip_cut(flip_cut(rep, idx), idx) == rep


def test_fake_corners_vanish_and_hidden_corners_reveal():
    for name, rep in semitoric_corpus().items():
        cls = classification(rep)
        for j in range(rep.m):
            end = rep.cut_endpoint(j)
            info = cls.corners[rep.polygon.vertices.index(end)]
            if info.cuts != 1:
                continue
            flipped = flip_cut(rep, j + 1)
            if info.kind == "Fake":
                assert end not in flipped.polygon.vertices, name
            else:
                where = flipped.polygon.vertices.index(end)
                assert classification(flipped).corners[where].kind == "Delzant", name
