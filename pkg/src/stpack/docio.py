"""Line-based input documents.

Grammar (one directive per line, ``#`` starts a comment, blank lines ignored)::

    kind delzant|semitoric
    vertex X Y
    marked X Y up|down|+1|-1

Numbers are integers or fractions such as ``-3/2``; decimals are rejected.
``kind`` must come first.  ``marked`` lines are only allowed for semitoric
documents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .geometry import Vec2, format_rational
from .polygon import Polygon, normalize
from .semitoric import SemitoricRepresentative, validate_representative

KINDS = ("delzant", "semitoric")
_DIRECTIONS = {"up": 1, "+1": 1, "1": 1, "down": -1, "-1": -1}


@dataclass
class InputDocument:
    kind: str
    vertices: list[Vec2] = field(default_factory=list)
    marked: list[Vec2] = field(default_factory=list)
    cuts: list[int] = field(default_factory=list)

    def polygon(self) -> Polygon:
        return normalize(self.vertices)

    def representative(self) -> SemitoricRepresentative:
        return validate_representative(self.polygon(), self.marked, self.cuts)[0]


_NUMBER = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


def parse_number(token: str, where: str) -> Fraction:
    # stricter than Fraction(): no decimals, exponents, underscores or spaces
    if not _NUMBER.fullmatch(token) or re.search(r"/0+$", token):
        raise ParseError(f"{where}: {token!r} is not an exact integer or fraction")
    return Fraction(token)


def parse_document(text: str) -> InputDocument:
    doc: InputDocument | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        head, *args = line.split()
        if head == "kind":
            if doc is not None:
                raise ParseError(f"{where}: duplicate kind line")
            if len(args) != 1 or args[0] not in KINDS:
                raise ParseError(f"{where}: kind must be one of {', '.join(KINDS)}")
            doc = InputDocument(args[0])
            continue
        if doc is None:
            raise ParseError(f"{where}: the first directive must be 'kind'")
        if head == "vertex":
            if len(args) != 2:
                raise ParseError(f"{where}: vertex needs two coordinates")
            doc.vertices.append(Vec2(parse_number(args[0], where), parse_number(args[1], where)))
        elif head == "marked":
            if doc.kind != "semitoric":
                raise ParseError(f"{where}: marked points need kind semitoric")
            if len(args) != 3:
                raise ParseError(f"{where}: marked needs two coordinates and a cut direction")
            if args[2] not in _DIRECTIONS:
                raise ParseError(f"{where}: cut direction must be up, down, +1 or -1")
            doc.marked.append(Vec2(parse_number(args[0], where), parse_number(args[1], where)))
            doc.cuts.append(_DIRECTIONS[args[2]])
        else:
            raise ParseError(f"{where}: unknown directive {head!r}")
    if doc is None:
        raise ParseError("empty document")
    return doc


def format_document(doc: InputDocument, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"kind {doc.kind}")
    for v in doc.vertices:
        lines.append(f"vertex {format_rational(v.x)} {format_rational(v.y)}")
    for c, e in zip(doc.marked, doc.cuts):
        lines.append(f"marked {format_rational(c.x)} {format_rational(c.y)} {'up' if e > 0 else 'down'}")
    return "\n".join(lines) + "\n"


def document_for(obj) -> InputDocument:
    if isinstance(obj, Polygon):
        return InputDocument("delzant", list(obj.vertices))
    if isinstance(obj, SemitoricRepresentative):
        return InputDocument("semitoric", list(obj.polygon.vertices), list(obj.marked), list(obj.cuts))
    raise TypeError(f"cannot serialize {type(obj).__name__}")
