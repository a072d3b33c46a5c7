"""The six figure configurations pinned by golden files.

Each entry names an input document plus the extra arguments given to
``density`` and ``render``.  ``scripts/make_golden.py`` regenerates the
files; ``test_acceptance`` compares against them.
"""

import io
from pathlib import Path

from stpack.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"

ST_EDGES = """kind semitoric
vertex 0 0
vertex 2 2
vertex 5 2
vertex 3 0
marked 2 1 up
"""


def _family(kind, *params):
    out = io.StringIO()
    assert main(["family", kind, *params], out, io.StringIO()) == 0
    return out.getvalue()


CONFIGS = {
    "type1": (_family("type1", "a=2", "h=1/2"), ["--lambdas", "1/2,3/2"]),
    "type3b-up": (_family("type3b", "a=1", "n=2", "h=1/2"), ["--lambdas", "max"]),
    "type3b-flipped": (_family("type3b", "a=1", "n=2", "h=1/2"), ["--lambdas", "max", "--flip", "1"]),
    "st-edges": (ST_EDGES, []),
    "type2-max": (_family("type2", "a=1", "b=1", "h=1/2"), ["--lambdas", "max"]),
    "hirzebruch": (_family("hirzebruch", "a=3", "b=2", "n=1"), ["--lambdas", "max"]),
}


def outputs(name: str, workdir: Path) -> dict[str, str]:
    """Density text and SVG text for one configuration, produced through the CLI."""
    doc, render_args = CONFIGS[name]
    src = workdir / f"{name}.txt"
    src.write_text(doc, encoding="utf-8")
    out = io.StringIO()
    code = main(["density", str(src), "--show-lambdas", "--capacity"], out, io.StringIO())
    assert code == 0, name
    svg = workdir / f"{name}.svg"
    code = main(["render", str(src), str(svg), *render_args], io.StringIO(), io.StringIO())
    assert code == 0, name
    return {
        f"{name}.txt": doc,
        f"{name}.density": out.getvalue(),
        f"{name}.svg": svg.read_text(encoding="utf-8"),
    }
