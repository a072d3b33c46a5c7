"""Command-line interface: ``stpack validate|density|pack|render|family``.

Exit status is 0 on success, 1 when the input is well formed but fails a
geometric condition or a size vector is infeasible, and 2 on parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .docio import InputDocument, document_for, format_document, parse_document, parse_number
from .errors import DelzantError, PackingError, ParseError, PolygonError, RepresentativeError
from .geometry import format_rational
from .polygon import check_delzant, make_delzant_family
from .polytope import format_point
from .regions import transport
from .render import render_svg
from .semitoric import (
    SEMITORIC_FAMILIES,
    classify_corners,
    flip_cuts,
    make_semitoric_family,
    validate_representative,
)
from .stpacking import realize_semitoric_packing, semitoric_capacity, semitoric_density
from .toric import realize_packing, toric_capacity, toric_density

DELZANT_FAMILIES = ("triangle", "rectangle", "hirzebruch")


class _Exit(Exception):
    def __init__(self, code, message=None):
        super().__init__(message)
        self.code = code
        self.message = message


def _read(path: str) -> InputDocument:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _Exit(2, f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def _lambdas(text: str):
    return tuple(parse_number(tok.strip(), "--lambdas") for tok in text.split(","))


def _mode(doc: InputDocument, args) -> str:
    if getattr(args, "toric", False):
        return "toric"
    if getattr(args, "semitoric", False):
        return "semitoric"
    return "toric" if doc.kind == "delzant" else "semitoric"


def _representative(doc: InputDocument):
    return validate_representative(doc.polygon(), doc.marked, doc.cuts)[0]


def cmd_validate(args, out) -> int:
    doc = _read(args.file)
    poly = doc.polygon()
    if doc.kind == "delzant":
        report = check_delzant(poly)
        if report.ok:
            print(f"{len(report.checks)} Delzant corners; valid", file=out)
            return 0
        for c in report.failures:
            print(f"vertex {c.vertex}: det = {format_rational(c.determinant)}, fails", file=out)
        return 1
    marked = sorted(zip(doc.marked, doc.cuts), key=lambda mc: mc[0].key())
    cls = classify_corners(poly, [m for m, _ in marked], [c for _, c in marked])
    print("corners: " + ", ".join(cls.labels), file=out)
    if cls.ok:
        try:
            _representative(doc)
        except RepresentativeError as exc:
            print(str(exc), file=out)
            return 1
        print("valid", file=out)
        return 0
    for p in cls.problems:
        print(p, file=out)
    return 1


def _density_result(doc, mode):
    if mode == "toric":
        poly = doc.polygon()
        return toric_density(poly), (lambda: toric_capacity(poly))
    rep = _representative(doc)
    return semitoric_density(rep), (lambda: semitoric_capacity(rep))


def cmd_density(args, out) -> int:
    doc = _read(args.file)
    res, capacity = _density_result(doc, _mode(doc, args))
    line = f"density = {format_rational(res.density)}"
    if res.density == 1:
        line += " (perfect)"
    if args.show_lambdas:
        line += "; maximizers: " + ", ".join(format_point(m) for m in res.maximizers)
    print(line, file=out)
    if args.capacity:
        cap = capacity()
        print(
            f"capacity = ({format_rational(cap.radicand)})^(1/4) (approx {cap.approx():.6f})",
            file=out,
        )
    return 0


def _default_lambdas(res):
    return min(res.maximizers)


def _vec(v):
    return [format_rational(v.x), format_rational(v.y)]


def _packing(doc, lambdas_text, mode):
    res, _ = _density_result(doc, mode)
    lam = _lambdas(lambdas_text) if lambdas_text and lambdas_text != "max" else _default_lambdas(res)
    if mode == "toric":
        return realize_packing(doc.polygon(), lam)
    return realize_semitoric_packing(_representative(doc), lam)


def cmd_pack(args, out) -> int:
    doc = _read(args.file)
    mode = _mode(doc, args)
    packing = _packing(doc, args.lambdas, mode)
    tris = []
    for t in packing.triangles:
        item = {"corner": t.corner + 1, "apex": _vec(t.apex), "v": _vec(t.v), "w": _vec(t.w), "size": format_rational(t.size)}
        if mode == "semitoric":
            item["flips"] = list(t.flips)
        tris.append(item)
    payload = {
        "mode": mode,
        "lambdas": [format_rational(x) for x in packing.lambdas],
        "triangles": tris,
        "total_area": format_rational(packing.total_area),
        "density": format_rational(packing.density),
    }
    print(json.dumps(payload, indent=2, ensure_ascii=False), file=out)
    return 0


def _flip_list(text):
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"--flip expects comma-separated cut indices, got {text!r}") from None


def render_document(doc: InputDocument, lambdas_text=None, flips=(), mode=None) -> str:
    mode = mode or ("toric" if doc.kind == "delzant" else "semitoric")
    title = None
    if mode == "toric":
        if flips:
            raise _Exit(1, "--flip needs a semitoric document")
        poly = doc.polygon()
        regions = []
        if lambdas_text:
            regions = [[t.cell] for t in _packing(doc, lambdas_text, mode).triangles]
        return render_svg(poly.vertices, regions=regions, title=title)
    rep = _representative(doc)
    if any(not 1 <= k <= rep.m for k in flips):
        raise _Exit(1, f"cut index out of range 1..{rep.m}")
    shown, steps = flip_cuts(rep, flips)
    regions = []
    if lambdas_text:
        packing = _packing(doc, lambdas_text, mode)
        regions = [transport(t.base_region, steps) for t in packing.triangles]
    ends = [shown.cut_endpoint(j) for j in range(shown.m)]
    return render_svg(shown.polygon.vertices, shown.marked, ends, regions, title=title)


def cmd_render(args, out) -> int:
    doc = _read(args.file)
    svg = render_document(doc, args.lambdas, _flip_list(args.flip), _mode(doc, args))
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        raise _Exit(1, f"cannot write {args.output}: {exc.strerror}") from None
    print(f"wrote {args.output}", file=out)
    return 0


def _family_params(tokens):
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise ParseError(f"family parameter {tok!r} must look like key=value")
        key, value = tok.split("=", 1)
        params[key] = parse_number(value, key)
    return params


def family_document(kind: str, params: dict) -> InputDocument:
    if kind in DELZANT_FAMILIES:
        unknown = set(params) - {"a", "b", "n"}
        if unknown:
            raise ParseError(f"unknown parameter(s) for {kind}: {', '.join(sorted(unknown))}")
        return document_for(make_delzant_family(kind, params.get("a", Fraction(1)), params.get("b"), params.get("n")))
    if kind in SEMITORIC_FAMILIES:
        return document_for(make_semitoric_family(kind, **params))
    raise ParseError(f"unknown family {kind!r}; choose from {', '.join(DELZANT_FAMILIES + SEMITORIC_FAMILIES)}")


def cmd_family(args, out) -> int:
    params = _family_params(args.params)
    doc = family_document(args.kind, params)
    spelled = " ".join([args.kind] + [f"{k}={format_rational(v)}" for k, v in params.items()])
    print(format_document(doc, comment=f"family {spelled}"), end="", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stpack", description="Corner-triangle packings of lattice polygons in exact arithmetic.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check corner conditions")
    p.add_argument("file", help="input document, or - for stdin")
    p.set_defaults(func=cmd_validate)

    for name, func, helptext in (
        ("density", cmd_density, "exact packing density"),
        ("pack", cmd_pack, "realize a packing as JSON"),
        ("render", cmd_render, "draw an SVG figure"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", help="input document, or - for stdin")
        if name == "render":
            p.add_argument("output", help="SVG file to write")
        g = p.add_mutually_exclusive_group()
        g.add_argument("--toric", action="store_true", help="treat the polygon as a Delzant polygon")
        g.add_argument("--semitoric", action="store_true", help="treat the input as a semitoric representative")
        if name == "density":
            p.add_argument("--show-lambdas", action="store_true", help="list every maximizing size vector")
            p.add_argument("--capacity", action="store_true", help="print the exact capacity radicand")
        else:
            p.add_argument("--lambdas", help="comma-separated sizes, or 'max' for a maximal packing")
        if name == "render":
            p.add_argument("--flip", help="comma-separated cut indices to reverse before drawing")
        p.set_defaults(func=func)

    p = sub.add_parser("family", help="emit a document for a named family")
    p.add_argument("kind", help=", ".join(DELZANT_FAMILIES + SEMITORIC_FAMILIES))
    p.add_argument("params", nargs="*", help="key=value parameters such as a=2 h=1/2")
    p.set_defaults(func=cmd_family)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except _Exit as exc:
        if exc.message:
            print(f"error: {exc.message}", file=err)
        return exc.code
    except (DelzantError, RepresentativeError, PolygonError, PackingError) as exc:
        print(f"error: {exc}", file=err)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
