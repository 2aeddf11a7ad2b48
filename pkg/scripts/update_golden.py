#!/usr/bin/env python3
"""Regenerate the golden SVG fixtures under tests/data/.

Run after an intentional renderer change, then review the diff before
committing; the acceptance suite compares against these bytes exactly.
"""

from pathlib import Path

from dyckgen.paths import render_grid

DATA_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    target = DATA_DIR / "grid_n4.svg"
    with open(target, "wb") as sink:
        render_grid(4, sink)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
