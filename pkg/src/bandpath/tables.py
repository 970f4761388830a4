"""Recompute the distance tables from the atlas.

Each row pairs the listed value with the best obstruction lower bound, the
bound named by the table's annotation, and the certified upper bound.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .atlas import DATA_DIR, Atlas, ExpectedEntry
from .obstructions import method_bound
from .pathways import EXACT, PathwayGraph, build_graph, certified_distance, decompose_bound

CURATED_NAME = "curated.csv"

COLUMNS = ["table", "row", "col", "expected", "annotation", "lower", "method",
           "annotated_bound", "upper", "status", "sound", "matches"]


@dataclass(frozen=True)
class TableRow:
    entry: ExpectedEntry
    lower: int
    method: str
    annotated_bound: Optional[int]
    upper: Optional[int]
    status: str

    @property
    def sound(self) -> bool:
        """No obstruction exceeds the listed value."""
        return self.lower <= self.entry.value

    @property
    def matches(self) -> bool:
        return self.status == EXACT and self.upper == self.entry.value

    def as_dict(self) -> Dict[str, object]:
        e = self.entry
        return {"table": e.table, "row": e.a, "col": e.b,
                "expected": ";".join(map(str, e.distance)),
                "annotation": e.method_annotation or "", "lower": self.lower,
                "method": self.method,
                "annotated_bound": "" if self.annotated_bound is None else self.annotated_bound,
                "upper": "" if self.upper is None else self.upper, "status": self.status,
                "sound": self.sound, "matches": self.matches}


def reproduce_entry(e: ExpectedEntry, atlas: Atlas, g: PathwayGraph) -> TableRow:
    rep = decompose_bound(e.a, e.b, atlas, g, intermediates=False)
    ann = None
    if e.method_annotation:
        tk = (atlas.torus_k(e.a), atlas.torus_k(e.b))
        ann = method_bound(e.method_annotation, atlas.bundle(e.a), atlas.bundle(e.b), tk).value
    return TableRow(e, rep.lower.value, rep.lower.method, ann, rep.upper, rep.status)


def reproduce_table(atlas: Atlas, which: int, graph: Optional[PathwayGraph] = None) -> List[TableRow]:
    g = graph if graph is not None else build_graph(atlas)
    return [reproduce_entry(e, atlas, g) for e in atlas.expected_table(which)]


def rows_to_csv(rows: Iterable[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.as_dict())
    return buf.getvalue()


def through_intermediate(e: ExpectedEntry, g: PathwayGraph) -> Optional[int]:
    """Shortest certified length of a pathway forced through a printed
    intermediate, or None when no intermediate is printed or reachable."""
    best = None
    for k in e.intermediate:
        x, y = certified_distance(g, e.a, k), certified_distance(g, k, e.b)
        if x is not None and y is not None:
            best = x + y if best is None else min(best, x + y)
    return best


def curated_keys(atlas: Atlas) -> List[Tuple[int, str, str]]:
    """The (table, row, col) keys of the shipped fully certified subset."""
    path = atlas.root / CURATED_NAME
    if not path.exists():
        path = DATA_DIR / CURATED_NAME
    with open(path, newline="") as fh:
        return [(int(r["table"]), r["row"], r["col"]) for r in csv.DictReader(fh)]


def curated_entries(atlas: Atlas) -> List[ExpectedEntry]:
    keys = set(curated_keys(atlas))
    return [e for t in (1, 2, 3) for e in atlas.expected_table(t) if (t, e.a, e.b) in keys]


__all__ = ["TableRow", "reproduce_entry", "reproduce_table", "rows_to_csv",
           "through_intermediate", "curated_keys", "curated_entries", "COLUMNS"]
