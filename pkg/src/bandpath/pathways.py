"""Coherent band pathways over the certificate graph.

A pathway L_0 <-> L_1 <-> ... <-> L_n is a sequence of links where every
step is one coherent band surgery.  Steps come from the atlas certificates
only, so every length found here is an upper bound on the distance; the
obstructions supply the matching lower bounds.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .atlas import Atlas, BandCertificate
from .errors import NoPathWithin, ParityViolation, UnknownName
from .names import parse_name
from .obstructions import BoundWitness, best_lower_bound, linking_arf_bound

MAX_LEN = 12
FANOUT_CAP = 10 ** 5

EXACT, GAP, LOWER_ONLY = "Exact", "Gap", "LowerOnly"


def mcn(name: str) -> int:
    """Crossing number read off the name: summands add."""
    return sum(t.crossing_number for t in parse_name(name).terms())


@dataclass
class PathwayGraph:
    atlas: Atlas
    adj: Dict[str, Dict[str, Tuple[BandCertificate, ...]]]

    @property
    def nodes(self) -> List[str]:
        return sorted(self.adj)

    def edges(self) -> List[Tuple[str, str]]:
        return sorted((a, b) for a in self.adj for b in self.adj[a] if a < b)

    def neighbours(self, name: str) -> List[str]:
        return sorted(self.adj.get(name, ()))

    def has_edge(self, a: str, b: str) -> bool:
        return b in self.adj.get(a, {})

    def components(self) -> List[List[str]]:
        seen, out = set(), []
        for start in self.nodes:
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                n = stack.pop()
                comp.append(n)
                for m in self.adj[n]:
                    if m not in seen:
                        seen.add(m)
                        stack.append(m)
            out.append(sorted(comp))
        return out


def mirror_certificate(c: BandCertificate) -> BandCertificate:
    """A band surgery between L and L' mirrors to one between L! and L'!."""
    m = lambda n: parse_name(n).mirrored().render()  # noqa: E731
    note = "; ".join(x for x in (c.note, "mirror image") if x)
    return BandCertificate(m(c.a), m(c.b), c.source, note)


def build_graph(atlas: Atlas, certificates: Optional[Sequence[BandCertificate]] = None,
                mirrors: bool = True) -> PathwayGraph:
    """Undirected graph of certified distance-1 pairs, closed under taking
    mirror images unless ``mirrors`` is false."""
    certs = list(atlas.certificates() if certificates is None else certificates)
    if mirrors:
        certs += [mirror_certificate(c) for c in certs]
    adj: Dict[str, Dict[str, List[BandCertificate]]] = defaultdict(lambda: defaultdict(list))
    for c in certs:
        a, b = atlas.canonical(c.a), atlas.canonical(c.b)
        if abs(atlas.mu(a) - atlas.mu(b)) != 1:
            raise ParityViolation(f"edge {a} <-> {b} does not change the number of components by one")
        adj[a][b].append(c)
        adj[b][a].append(c.reversed())
    frozen = {a: {b: tuple(dict.fromkeys(cs)) for b, cs in nb.items()} for a, nb in adj.items()}
    return PathwayGraph(atlas, frozen)


@dataclass(frozen=True)
class Pathway:
    nodes: Tuple[str, ...]
    edges: Tuple[Tuple[BandCertificate, ...], ...] = ()

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    def reversed(self) -> "Pathway":
        return Pathway(self.nodes[::-1], tuple(tuple(c.reversed() for c in e) for e in self.edges[::-1]))

    def render(self) -> str:
        return " -> ".join(self.nodes)

    def to_json(self) -> Dict:
        return {"nodes": list(self.nodes), "length": self.length,
                "sources": [sorted({c.source for c in e}) for e in self.edges]}


class PathwayList(list):
    """A list of pathways that remembers whether enumeration was cut short."""
    truncated: bool = False


def _allowed(g: PathwayGraph, max_components: Optional[int], mcn_decreasing: bool):
    def ok(cur: str, nxt: str) -> bool:
        if max_components is not None and g.atlas.mu(nxt) > max_components:
            return False
        if mcn_decreasing and mcn(nxt) > mcn(cur):
            return False
        return True
    return ok


def shortest_pathways(g: PathwayGraph, a: str, b: str, max_len: int = MAX_LEN,
                      max_components: Optional[int] = None, mcn_decreasing: bool = False,
                      cap: int = FANOUT_CAP) -> PathwayList:
    """All minimal pathways from a to b, sorted by node sequence.

    ``mcn_decreasing`` forbids any step that raises the crossing number;
    ``max_components`` bounds the component count of every link on the path
    (endpoints included).  At most ``cap`` pathways are returned; the
    ``truncated`` attribute of the result says whether more exist.
    """
    if max_len > MAX_LEN:
        raise ValueError(f"max_len is limited to {MAX_LEN}")
    atlas = g.atlas
    a, b = atlas.canonical(a), atlas.canonical(b)
    for n in (a, b):
        if n not in g.adj and n not in atlas:
            raise UnknownName(n)
    out = PathwayList()
    if a == b:
        out.append(Pathway((a,)))
        return out
    if max_components is not None and max(atlas.mu(a), atlas.mu(b)) > max_components:
        raise NoPathWithin(f"no pathway {a} -> {b} within {max_len} steps")
    ok = _allowed(g, max_components, mcn_decreasing)

    # forward layers: each node enters at its first layer only
    layer = {a: 0}
    frontier = [a]
    depth = 0
    while frontier and b not in layer and depth < max_len:
        depth += 1
        nxt = []
        for n in frontier:
            for m in g.neighbours(n):
                if m not in layer and ok(n, m):
                    layer[m] = depth
                    nxt.append(m)
        frontier = sorted(set(nxt))
    if b not in layer:
        raise NoPathWithin(f"no pathway {a} -> {b} within {max_len} steps")

    # keep only nodes that still reach b inside the remaining budget
    total = layer[b]
    live = {b}
    ways = {b: 1}
    for d in range(total - 1, -1, -1):
        for n in sorted(k for k, v in layer.items() if v == d):
            succ = [m for m in g.neighbours(n) if m in live and layer[m] == d + 1 and ok(n, m)]
            if succ:
                live.add(n)
                ways[n] = sum(ways[m] for m in succ)

    out.truncated = ways[a] > cap
    path = [a]

    def walk(n: str) -> bool:
        if len(out) >= cap:
            return False
        if n == b:
            out.append(Pathway(tuple(path), tuple(g.adj[x][y] for x, y in zip(path, path[1:]))))
            return True
        for m in g.neighbours(n):
            if m in live and layer[m] == layer[n] + 1 and ok(n, m):
                path.append(m)
                walk(m)
                path.pop()
        return True

    walk(a)
    return out


def certified_distance(g: PathwayGraph, a: str, b: str, max_len: int = MAX_LEN) -> Optional[int]:
    """Length of a shortest certified pathway, or None beyond ``max_len``."""
    a, b = g.atlas.canonical(a), g.atlas.canonical(b)
    if a == b:
        return 0
    seen, frontier = {a}, [a]
    for depth in range(1, max_len + 1):
        nxt = []
        for n in frontier:
            for m in g.adj.get(n, ()):
                if m == b:
                    return depth
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        if not nxt:
            return None
        frontier = nxt
    return None


# -- component sequences ------------------------------------------------------

def _is_steps(s: Sequence[int]) -> bool:
    return all(abs(x - y) == 1 for x, y in zip(s, s[1:])) and all(x >= 1 for x in s)


def normalize_component_sequence(s: Sequence[int]) -> Tuple[int, ...]:
    """Push component counts up early, using the two local moves that never
    lengthen a pathway:

        (m, m-1, m)          -> (m, m+1, m)
        (m-1, m, m+1, m)     -> (m-1, m, m-1, m)

    The leftmost applicable window is rewritten until none applies.  A
    valley produced by the second move, (m-1, m, m-1, m), is left alone;
    lifting it would undo that move.
    """
    s = list(s)
    if not _is_steps(s):
        raise ValueError(f"not a component sequence: {tuple(s)}")
    changed = True
    while changed:
        changed = False
        for i in range(len(s)):
            w = s[i:i + 3]
            if len(w) == 3 and w[0] == w[2] == w[1] + 1 and not (i > 0 and s[i - 1] == w[1]):
                s[i + 1] = w[0] + 1
                changed = True
                break
            w = s[i:i + 4]
            if len(w) == 4 and w[1] == w[0] + 1 and w[2] == w[0] + 2 and w[3] == w[1]:
                s[i + 2] = w[0]
                changed = True
                break
    return tuple(s)


# -- distance reports ---------------------------------------------------------

@dataclass
class DistanceReport:
    pair: Tuple[str, str]
    lower: BoundWitness
    upper: Optional[int] = None
    pathway: Optional[Pathway] = None
    intermediates: Tuple[str, ...] = ()
    truncated: bool = False

    @property
    def status(self) -> str:
        if self.upper is None:
            return LOWER_ONLY
        return EXACT if self.upper == self.lower.value else GAP

    def to_json(self) -> Dict:
        return {"pair": list(self.pair), "lower": self.lower.to_json(), "upper": self.upper,
                "status": self.status,
                "pathway": self.pathway.to_json() if self.pathway else None,
                "intermediates": list(self.intermediates)}


def lower_bound(atlas: Atlas, a: str, b: str) -> BoundWitness:
    return best_lower_bound(atlas.bundle(a), atlas.bundle(b), (atlas.torus_k(a), atlas.torus_k(b)))


def decompose_bound(a: str, b: str, atlas: Atlas, graph: Optional[PathwayGraph] = None,
                    max_len: int = MAX_LEN, intermediates: bool = True) -> DistanceReport:
    """Lower bound from the obstructions, upper bound from certificates.

    For links with the same number of components and a lower bound of at
    least 4, ``intermediates`` lists the links L'' with that many components
    that sit inside a minimal pathway, so d(a, L'') + d(L'', b) = upper.
    """
    g = graph if graph is not None else build_graph(atlas)
    a, b = atlas.canonical(a), atlas.canonical(b)
    if a == b:
        atlas.record(a)
        return DistanceReport((a, b), BoundWitness(0, "Trivial"), 0, Pathway((a,)))
    lower = lower_bound(atlas, a, b)
    mu = atlas.mu(a)
    wanted = intermediates and mu == atlas.mu(b) and lower.value >= 4
    try:
        paths = shortest_pathways(g, a, b, max_len=max_len, cap=FANOUT_CAP if wanted else 1)
    except NoPathWithin:
        return DistanceReport((a, b), lower)
    rep = DistanceReport((a, b), lower, paths[0].length, paths[0],
                         truncated=wanted and paths.truncated)
    if wanted:
        mids = {n for p in paths for n in p.nodes[1:-1] if atlas.mu(n) == mu}
        rep.intermediates = tuple(sorted(mids))
    return rep


# -- validation ---------------------------------------------------------------

@dataclass
class ValidationReport:
    pathway: Pathway
    violations: List[str] = field(default_factory=list)
    uncertified: List[Tuple[str, str]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def certified(self) -> bool:
        return self.ok and not self.uncertified

    def to_json(self) -> Dict:
        return {"pathway": list(self.pathway.nodes), "ok": self.ok,
                "violations": self.violations,
                "uncertified": [list(e) for e in self.uncertified], "notes": self.notes}


def validate_pathway(p, atlas: Atlas, graph: Optional[PathwayGraph] = None) -> ValidationReport:
    """Check a pathway step by step.

    Violations: a step that does not change the component count by one, a
    step some obstruction rules out, and a detour through a 3-component link
    between 2-component links whose linking numbers and Arf invariants both
    differ (no knot can replace the middle link then, and the linking
    numbers would have to agree).  Steps without a certificate are listed
    separately.
    """
    g = graph if graph is not None else build_graph(atlas)
    nodes = tuple(atlas.canonical(n) for n in (p.nodes if isinstance(p, Pathway) else p))
    for n in nodes:
        atlas.record(n)
    rep = ValidationReport(Pathway(nodes))
    for x, y in zip(nodes, nodes[1:]):
        if abs(atlas.mu(x) - atlas.mu(y)) != 1:
            rep.violations.append(f"parity: {x} -> {y} changes components by {atlas.mu(y) - atlas.mu(x)}")
            continue
        if not g.has_edge(x, y):
            w = lower_bound(atlas, x, y)
            if w.value > 1:
                rep.violations.append(f"obstructed: {x} -> {y} needs at least {w.value} ({w.method})")
            else:
                rep.uncertified.append((x, y))
    for x, mid, y in zip(nodes, nodes[1:], nodes[2:]):
        if not (atlas.mu(x) == atlas.mu(y) == 2 and atlas.mu(mid) == 3):
            continue
        bx, by = atlas.bundle(x), atlas.bundle(y)
        knots = sorted(k for k in set(g.neighbours(x)) & set(g.neighbours(y)) if atlas.mu(k) == 1)
        if bx.total_lk == by.total_lk:
            alt = f"knot alternative {knots[0]}" if knots else "no knot alternative certified"
            rep.notes.append(f"{x} -> {mid} -> {y}: linking numbers agree; {alt}")
            continue
        if linking_arf_bound(bx, by).value >= 4:
            rep.violations.append(f"linking: {x} -> {mid} -> {y} joins links with different "
                                  f"linking numbers ({bx.total_lk} vs {by.total_lk}) and Arf invariants")
        else:
            rep.notes.append(f"{x} -> {mid} -> {y}: linking numbers differ, so a knot "
                             f"intermediate must also exist" + (f" ({knots[0]})" if knots else ""))
    return rep


__all__ = ["PathwayGraph", "Pathway", "PathwayList", "DistanceReport", "ValidationReport",
           "build_graph", "mirror_certificate", "shortest_pathways", "normalize_component_sequence",
           "decompose_bound", "validate_pathway", "certified_distance", "lower_bound", "mcn",
           "EXACT", "GAP", "LOWER_ONLY"]
