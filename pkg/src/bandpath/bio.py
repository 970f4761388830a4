"""Site-specific recombination read as coherent band surgery.

One recombination event exchanges two DNA strands at a pair of sites, which
on the level of knots and links is a single coherent band surgery.  The
queries here turn distances into statements about recombination products:
how many rounds are needed at least, which mirror image a product must be,
and whether torus-link products are parallel or antiparallel.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .atlas import Atlas
from .errors import UnknownName
from .names import parse_name
from .pathways import DistanceReport, PathwayGraph, build_graph, decompose_bound

PROCESSIVE, INDEPENDENT = "processive", "independent"
DETERMINED, UNDETERMINED = "determined", "undetermined"


@dataclass
class RecombQuery:
    substrate: str
    products: Tuple[str, ...]
    mode: str = INDEPENDENT
    max_components: Optional[int] = None
    mcn_decreasing: bool = False

    def __post_init__(self):
        if self.mode not in (PROCESSIVE, INDEPENDENT):
            raise ValueError(f"mode must be {PROCESSIVE} or {INDEPENDENT}")
        self.products = tuple(self.products)


def _resolve(atlas: Atlas, name: str) -> str:
    n = atlas.canonical(name)
    atlas.record(n)
    return n


def min_events(q: RecombQuery, atlas: Atlas, graph: Optional[PathwayGraph] = None) -> List[DistanceReport]:
    """Distance reports for the substrate against each product, or in
    processive mode for each consecutive pair and then end to end."""
    g = graph if graph is not None else build_graph(atlas)
    chain = [_resolve(atlas, n) for n in (q.substrate,) + q.products]
    if q.mode == INDEPENDENT:
        pairs = [(chain[0], p) for p in chain[1:]]
    else:
        pairs = list(zip(chain, chain[1:]))
        if len(chain) > 2:
            pairs.append((chain[0], chain[-1]))
    return [decompose_bound(a, b, atlas, g) for a, b in pairs]


@dataclass
class ChiralityReport:
    known: Tuple[str, ...]
    candidates: Dict[str, List[DistanceReport]]
    verdict: str
    name: Optional[str] = None

    def score(self, cand: str) -> Tuple[int, int]:
        """(best certified distance or a large sentinel, best lower bound)."""
        reps = self.candidates[cand]
        ups = [r.upper for r in reps if r.upper is not None]
        return (min(ups) if ups else 10 ** 9, min(r.lower.value for r in reps))

    def to_json(self) -> Dict:
        return {"known": list(self.known), "verdict": self.verdict, "name": self.name,
                "candidates": {c: [r.to_json() for r in rs] for c, rs in self.candidates.items()}}


def chirality_infer(known: Sequence[str], unknown: str, atlas: Atlas,
                    graph: Optional[PathwayGraph] = None) -> ChiralityReport:
    """Decide between ``unknown`` and its mirror image.

    A known product separates the candidates when one of them is certified
    to be a single surgery away from it and the other is proved to be
    further.  The verdict is determined when at least one product separates
    them and all separating products pick the same candidate.
    """
    g = graph if graph is not None else build_graph(atlas)
    ks = tuple(_resolve(atlas, k) for k in known)
    base = _resolve(atlas, unknown)
    mirror = _resolve(atlas, parse_name(base).mirrored().render())
    cands = [base] if mirror == base else sorted({base, mirror})
    reps = {c: [decompose_bound(c, k, atlas, g) for k in ks] for c in cands}
    rep = ChiralityReport(ks, reps, UNDETERMINED)
    if len(cands) < 2:
        return rep
    picks = set()
    for i in range(len(ks)):
        near = [c for c in cands if reps[c][i].upper == 1]
        far = [c for c in cands if reps[c][i].lower.value > 1]
        if len(near) == 1 and len(far) == 1 and near != far:
            picks.add(near[0])
    if len(picks) == 1:
        rep.verdict, rep.name = DETERMINED, picks.pop()
    return rep


_TORUS = re.compile(r"^(\d+)\^2_1$")


@dataclass
class OrientationEntry:
    m: int
    candidate: str
    tag: str                   # "parallel" or "antiparallel"
    report: Optional[DistanceReport]
    table: Optional[int] = None

    @property
    def one_step(self) -> Optional[bool]:
        if self.report is None:
            return None
        if self.report.upper == 1:
            return True
        return False if self.report.lower.value > 1 else None

    def to_json(self) -> Dict:
        return {"m": self.m, "candidate": self.candidate, "tag": self.tag,
                "one_step": self.one_step, "table": self.table,
                "report": self.report.to_json() if self.report else None}


@dataclass
class OrientationReport:
    substrate: str
    entries: List[OrientationEntry] = field(default_factory=list)

    def verdict(self, m: int) -> str:
        """antiparallel, parallel, either, or unknown."""
        got = {e.tag for e in self.entries if e.m == m and e.one_step}
        ruled = {e.tag for e in self.entries if e.m == m and e.one_step is False}
        if got == {"antiparallel"} and "parallel" in ruled:
            return "antiparallel"
        if got == {"parallel"} and "antiparallel" in ruled:
            return "parallel"
        if got == {"parallel", "antiparallel"}:
            return "either"
        return "unknown"

    def to_json(self) -> Dict:
        ms = sorted({e.m for e in self.entries})
        return {"substrate": self.substrate, "verdicts": {str(m): self.verdict(m) for m in ms},
                "entries": [e.to_json() for e in self.entries]}


def _torus_m(name: str) -> int:
    text = name.rstrip("'!")
    mt = _TORUS.match(text)
    if not mt or int(mt.group(1)) % 2:
        raise UnknownName(f"{name} is not a (2,2m) torus link name")
    return int(mt.group(1)) // 2


def orientation_infer(substrate: str, products: Sequence[str], atlas: Atlas,
                      graph: Optional[PathwayGraph] = None) -> OrientationReport:
    """For each (2,2m) torus product, test which orientation is one surgery
    from the substrate.  Both mirror images of each orientation are tried.
    Products outside the atlas are reported without a verdict."""
    g = graph if graph is not None else build_graph(atlas)
    sub = _resolve(atlas, substrate)
    try:
        table = {(atlas.canonical(e.a), atlas.canonical(e.b)): e.value
                 for e in atlas.expected_table(2)}
    except ValueError:
        table = {}
    out = OrientationReport(sub)
    for m in sorted({_torus_m(p) for p in products}):
        base = f"{2 * m}^2_1"
        for tag, variants in (("parallel", (base, base + "!")),
                              ("antiparallel", (base + "'", base + "'!"))):
            for v in variants:
                try:
                    c = _resolve(atlas, v)
                except UnknownName:
                    out.entries.append(OrientationEntry(m, v, tag, None))
                    continue
                rep = decompose_bound(c, sub, atlas, g)
                want = table.get((c, sub), table.get((sub, c)))
                out.entries.append(OrientationEntry(m, v, tag, rep, want))
    return out


__all__ = ["RecombQuery", "ChiralityReport", "OrientationEntry", "OrientationReport",
           "min_events", "chirality_infer", "orientation_infer", "PROCESSIVE", "INDEPENDENT",
           "DETERMINED", "UNDETERMINED"]
