from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from stpack import ParseError, Vec2, make_delzant_family
from stpack.docio import document_for, format_document, parse_document

from corpus import semitoric_corpus, toric_corpus


def test_parse_semitoric():
    doc = parse_document("# type 1\nkind semitoric\nvertex 0 0\nvertex 4 0\nvertex 2 1\n\nmarked 2 1/2 up  # cut\n")
    assert doc.kind == "semitoric"
    assert doc.vertices == [Vec2(0, 0), Vec2(4, 0), Vec2(2, 1)]
    assert doc.marked == [Vec2(2, F(1, 2))] and doc.cuts == [1]
    assert doc.representative().cuts == (1,)


@pytest.mark.parametrize("word, sign", [("up", 1), ("+1", 1), ("down", -1), ("-1", -1)])
def test_cut_directions(word, sign):
    assert parse_document(f"kind semitoric\nmarked 1 1 {word}\n").cuts == [sign]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty document"),
        ("vertex 0 0\n", "first directive"),
        ("kind toric\n", "kind must be"),
        ("kind delzant\nkind delzant\n", "duplicate"),
        ("kind delzant\nvertex 0 0.5\n", "line 2: '0.5' is not an exact"),
        ("kind delzant\nvertex 0 1e3\n", "not an exact"),
        ("kind delzant\nvertex 0 1/0\n", "not an exact"),
        ("kind delzant\nvertex 0 1/00\n", "not an exact"),
        ("kind delzant\nvertex 0 1_000\n", "not an exact"),
        ("kind delzant\nvertex 0 3/-2\n", "not an exact"),
        ("kind delzant\nvertex 0\n", "two coordinates"),
        ("kind delzant\nmarked 0 0 up\n", "need kind semitoric"),
        ("kind semitoric\nmarked 0 0 sideways\n", "cut direction"),
        ("kind semitoric\nmarked 0 0\n", "cut direction"),
        ("kind delzant\nedge 0 0\n", "unknown directive"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_document(text)


def test_round_trip_corpus():
    objs = list(toric_corpus().values()) + list(semitoric_corpus().values())
    for obj in objs:
        doc = document_for(obj)
        again = parse_document(format_document(doc, comment="round trip"))
        assert again == doc


def test_format_is_stable():
    text = format_document(document_for(make_delzant_family("rectangle", 1, F(3, 2))))
    assert text == "kind delzant\nvertex 0 0\nvertex 0 1\nvertex 3/2 1\nvertex 3/2 0\n"


coords = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(coords, coords), max_size=6), st.lists(st.tuples(coords, coords, st.sampled_from([1, -1])), max_size=3))
def test_round_trip_arbitrary(verts, marks):
    from stpack.docio import InputDocument

    doc = InputDocument(
        "semitoric",
        [Vec2(x, y) for x, y in verts],
        [Vec2(x, y) for x, y, _ in marks],
        [e for *_, e in marks],
    )
    assert parse_document(format_document(doc)) == doc
