"""Write SVG figures for every named family and their maximal packings.

    python scripts/render_figures.py OUTDIR

For every family with cuts, a second figure shows the first cut flipped.
"""

import sys
from pathlib import Path

from stpack.cli import family_document, render_document

FIGURES = {
    "triangle": ("triangle", {"a": 2}),
    "rectangle": ("rectangle", {"a": 1, "b": 2}),
    "hirzebruch": ("hirzebruch", {"a": 3, "b": 2, "n": 1}),
    "type1": ("type1", {"a": 2, "h": "1/2"}),
    "type2": ("type2", {"a": 1, "b": 1, "h": "1/2"}),
    "type2-b0": ("type2", {"a": 1, "b": 0, "h1": "1/4", "h2": "1/2"}),
    "type3a": ("type3a", {"a": 1, "b": 1, "n": 2, "h": "1/2"}),
    "type3b": ("type3b", {"a": 1, "n": 3, "h": "1/2"}),
    "type3c": ("type3c", {"a": 2, "b": -1, "n": 2, "h": "1/2"}),
    "inverted3b": ("inverted3b", {"a": 1, "n": 2, "h": "1/2"}),
}


def main(argv) -> int:
    if len(argv) != 1:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    out = Path(argv[0])
    out.mkdir(parents=True, exist_ok=True)
    for name, (kind, params) in FIGURES.items():
        doc = family_document(kind, params)
        variants = [("", ())] + ([("-flipped", (1,))] if doc.marked else [])
        for suffix, flips in variants:
            path = out / f"{name}{suffix}.svg"
            path.write_text(render_document(doc, "max", flips), encoding="utf-8")
            print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
