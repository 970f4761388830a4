"""Write the fully certified subset of the distance tables.

An entry is kept when it lists a single value, the certificates give a
pathway of exactly that length through the intermediate printed with it,
and its lower bound is one of the table's own methods (an I-V annotation,
or a value of at most 2, where parity and distinctness suffice).  Entries
whose lower bound rests on outside work are left out.  Only upper-bound
data decides membership; the obstructions themselves are not evaluated.

    python3 tools/curate.py
"""
from __future__ import annotations

import csv
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from bandpath.atlas import load_atlas  # noqa: E402
from bandpath.pathways import build_graph  # noqa: E402
from bandpath.tables import CURATED_NAME, through_intermediate  # noqa: E402

DATA = ROOT / "src" / "bandpath" / "atlas" / "data"


def main():
    atlas = load_atlas(DATA)
    g = build_graph(atlas)
    rows = []
    for t in (1, 2, 3):
        for e in atlas.expected_table(t):
            if e.is_set or not e.intermediate:
                continue
            if e.value > 2 and not e.method_annotation:
                continue
            if through_intermediate(e, g) == e.value:
                rows.append({"table": t, "row": e.a, "col": e.b, "value": e.value,
                             "intermediate": ";".join(e.intermediate)})
    with open(DATA / CURATED_NAME, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["table", "row", "col", "value", "intermediate"],
                           lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    print(f"{len(rows)} curated entries")


if __name__ == "__main__":
    main()
