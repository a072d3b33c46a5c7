"""Regenerate tests/golden from the CLI.

    python scripts/make_golden.py [--check]

With --check nothing is written; the script exits 1 if any file differs.
"""

import argparse
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from golden_configs import CONFIGS, GOLDEN_DIR, outputs  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args()
    GOLDEN_DIR.mkdir(exist_ok=True)
    stale = []
    with tempfile.TemporaryDirectory() as tmp:
        for name in CONFIGS:
            for fname, text in outputs(name, Path(tmp)).items():
                target = GOLDEN_DIR / fname
                if args.check:
                    if not target.exists() or target.read_text(encoding="utf-8") != text:
                        stale.append(fname)
                else:
                    target.write_text(text, encoding="utf-8", newline="\n")
                    print(f"wrote {target.relative_to(GOLDEN_DIR.parent.parent)}")
    for fname in stale:
        print(f"differs: {fname}")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
