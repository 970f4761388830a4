"""Oriented planar diagrams (PD codes).

A crossing ``X[a,b,c,d]`` lists its four arc labels counterclockwise,
starting with the incoming under-strand, so the under-strand runs a -> c.
The over-strand runs d -> b for a positive crossing and b -> d for a
negative one.  Orientation is stored explicitly (as the sign), so after
parsing nothing depends on how the labels happen to be numbered.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (BadArc, BadComponentIndex, InconsistentArcs, MalformedPd,
                     OpenStrand, SameComponent)


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def strands(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d

    def switched(self) -> "Crossing":
        """Exchange over and under; the sign negates."""
        if self.sign > 0:
            return Crossing(self.d, self.a, self.b, self.c, -1)
        return Crossing(self.b, self.c, self.d, self.a, 1)

    def relabel(self, f) -> "Crossing":
        return Crossing(f(self.a), f(self.b), f(self.c), f(self.d), self.sign)


class LinkDiagram:
    """Immutable oriented link diagram.

    ``loops`` counts crossingless unknotted components, which are split from
    the rest of the diagram.
    """

    __slots__ = ("crossings", "loops", "name_hint", "_succ", "_components", "_comp_of")

    def __init__(self, crossings: Sequence[Crossing], loops: int = 0,
                 name_hint: Optional[str] = None):
        self.crossings: Tuple[Crossing, ...] = tuple(crossings)
        self.loops = int(loops)
        self.name_hint = name_hint
        self._build()

    # structure
    def _build(self):
        succ: Dict[int, int] = {}
        seen = defaultdict(int)
        for x in self.crossings:
            for s in x.strands:
                seen[s] += 1
            for i, o in ((x.a, x.c), (x.over_in, x.over_out)):
                if i in succ:
                    raise OpenStrand(f"arc {i} enters two crossings")
                succ[i] = o
        bad = sorted(k for k, v in seen.items() if v != 2)
        if bad:
            raise InconsistentArcs(f"arc labels used other than twice: {bad}")
        if set(succ) != set(seen) or set(succ.values()) != set(seen):
            raise OpenStrand("arcs do not close into oriented cycles")
        comps: List[Tuple[int, ...]] = []
        comp_of: Dict[int, int] = {}
        for start in sorted(succ):
            if start in comp_of:
                continue
            cyc = []
            x = start
            while x not in comp_of:
                comp_of[x] = len(comps)
                cyc.append(x)
                x = succ[x]
            if x != start:
                raise OpenStrand("arcs do not close into cycles")
            comps.append(tuple(cyc))
        if not comps and self.loops <= 0:
            raise MalformedPd("diagram has no components")
        self._succ = succ
        self._components = tuple(comps)
        self._comp_of = comp_of

    @property
    def components(self) -> Tuple[Tuple[int, ...], ...]:
        """Arc cycles in orientation order; free loops are not listed."""
        return self._components

    @property
    def mu(self) -> int:
        return len(self._components) + self.loops

    def component_of(self, arc: int) -> int:
        return self._comp_of[arc]

    def successor(self, arc: int) -> int:
        return self._succ[arc]

    def arcs(self) -> List[int]:
        return sorted(self._succ)

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def signs(self) -> List[int]:
        return [x.sign for x in self.crossings]

    def __len__(self):
        return len(self.crossings)

    def endpoints(self) -> Dict[int, List[Tuple[int, int]]]:
        """arc -> [(crossing index, position)] with positions 0..3 for a..d."""
        out: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
        for k, x in enumerate(self.crossings):
            for p, s in enumerate(x.strands):
                out[s].append((k, p))
        return out

    # comparisons
    def key(self):
        return (tuple((x.a, x.b, x.c, x.d, x.sign) for x in self.crossings), self.loops)

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"LinkDiagram({self.to_pd()})"

    # serialization
    def canonical(self) -> "LinkDiagram":
        """Relabel arcs 1..2n along components in orientation order.

        Each component starts at the arc that is incoming at the first listed
        crossing it touches, which keeps the label rules of ``parse_pd``
        unambiguous.
        """
        first_touch: Dict[int, Tuple[int, int]] = {}
        for k, x in enumerate(self.crossings):
            for arc in (x.a, x.over_in):
                ci = self._comp_of[arc]
                if ci not in first_touch:
                    first_touch[ci] = (k, arc)
        order = sorted(range(len(self._components)), key=lambda ci: first_touch[ci][0])
        new: Dict[int, int] = {}
        label = 1
        for ci in order:
            start = first_touch[ci][1]
            x = start
            while True:
                new[x] = label
                label += 1
                x = self._succ[x]
                if x == start:
                    break
        return LinkDiagram([x.relabel(new.__getitem__) for x in self.crossings],
                           self.loops, self.name_hint)

    def to_pd(self) -> str:
        body = ", ".join(f"X[{x.a},{x.b},{x.c},{x.d}]" for x in self.crossings)
        if self.loops:
            return f"PD[{body}; loops={self.loops}]"
        return f"PD[{body}]"

    def max_label(self) -> int:
        return max(self._succ) if self._succ else 0

    def shifted(self, offset: int) -> "LinkDiagram":
        return LinkDiagram([x.relabel(lambda s: s + offset) for x in self.crossings],
                           self.loops, self.name_hint)

    # planar structure
    def faces(self) -> List[List[Tuple[int, int]]]:
        """Faces as cycles of (crossing index, position) corners.

        Leaving crossing k through position p, we follow the arc to its other
        end (k2, p2) and leave again through the clockwise neighbour p2 - 1.
        A connected diagram with n > 0 crossings has n + 2 faces.
        """
        ends = self.endpoints()
        other: Dict[Tuple[int, int], Tuple[int, int]] = {}
        for s, lst in ends.items():
            (k1, p1), (k2, p2) = lst
            other[(k1, p1)] = (k2, p2)
            other[(k2, p2)] = (k1, p1)
        seen = set()
        faces = []
        for k in range(len(self.crossings)):
            for p in range(4):
                if (k, p) in seen:
                    continue
                face = []
                cur = (k, p)
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    k2, p2 = other[cur]
                    cur = (k2, (p2 - 1) % 4)
                faces.append(face)
        return faces

    def crossing_components(self) -> List[List[int]]:
        """Connected pieces of the crossing graph (split pieces of the diagram)."""
        ends = self.endpoints()
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for lst in ends.values():
            (k1, _), (k2, _) = lst
            r1, r2 = find(k1), find(k2)
            if r1 != r2:
                parent[r1] = r2
        groups: Dict[int, List[int]] = defaultdict(list)
        for k in range(len(self.crossings)):
            groups[find(k)].append(k)
        return sorted(groups.values())


# parsing

_PD_RE = re.compile(r"^\s*PD\s*\[(?P<body>.*)\]\s*(?:;\s*loops\s*=\s*(?P<outer>\d+)\s*)?$", re.S)
_X_RE = re.compile(r"X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str, name_hint: Optional[str] = None) -> LinkDiagram:
    m = _PD_RE.match(text)
    if not m:
        raise MalformedPd(f"not a PD code: {text!r}")
    body = m.group("body")
    loops = 0
    if ";" in body:
        body, tail = body.split(";", 1)
        lm = re.fullmatch(r"\s*loops\s*=\s*(\d+)\s*", tail)
        if not lm:
            raise MalformedPd(f"bad loops clause: {tail!r}")
        loops = int(lm.group(1))
    if m.group("outer") is not None:
        loops += int(m.group("outer"))
    quads = []
    pos = 0
    for xm in _X_RE.finditer(body):
        gap = body[pos:xm.start()]
        if gap.strip(" ,\n\t"):
            raise MalformedPd(f"unexpected text {gap.strip()!r}")
        quads.append(tuple(int(v) for v in xm.groups()))
        pos = xm.end()
    if body[pos:].strip(" ,\n\t"):
        raise MalformedPd(f"unexpected text {body[pos:].strip()!r}")
    if any(v <= 0 for q in quads for v in q):
        raise MalformedPd("arc labels must be positive integers")
    return from_quads(quads, loops, name_hint)


def from_quads(quads: Sequence[Sequence[int]], loops: int = 0,
               name_hint: Optional[str] = None) -> LinkDiagram:
    """Build a diagram from unsigned 4-tuples, inferring the orientation."""
    quads = [tuple(q) for q in quads]
    count = defaultdict(int)
    for q in quads:
        for s in q:
            count[s] += 1
    bad = sorted(k for k, v in count.items() if v != 2)
    if bad:
        raise InconsistentArcs(f"arc labels used other than twice: {bad}")
    if not quads and loops <= 0:
        raise MalformedPd("diagram has no components")
    signs = _infer_over_directions(quads)
    return LinkDiagram([Crossing(*q, s) for q, s in zip(quads, signs)], loops, name_hint)


def _infer_over_directions(quads) -> List[int]:
    """Decide, per crossing, whether the over-strand runs d->b (+1) or b->d (-1)."""
    n = len(quads)
    ends: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for k, q in enumerate(quads):
        for p, s in enumerate(q):
            ends[s].append((k, p))
    # head[(k, p)] is True when the arc at that slot points into crossing k
    head: Dict[Tuple[int, int], bool] = {}
    direction: List[Optional[int]] = [None] * n
    stack = []

    def assign(slot, is_head):
        if slot in head:
            if head[slot] != is_head:
                raise OpenStrand("arcs do not close into oriented cycles")
            return
        head[slot] = is_head
        stack.append(slot)

    def set_dir(k, sgn):
        if direction[k] is None:
            direction[k] = sgn
            assign((k, 3), sgn > 0)
            assign((k, 1), sgn < 0)
        elif direction[k] != sgn:
            raise OpenStrand("arcs do not close into oriented cycles")

    def drain():
        while stack:
            k, p = stack.pop()
            s = quads[k][p]
            is_head = head[(k, p)]
            (k1, p1), (k2, p2) = ends[s]
            o = (k2, p2) if (k1, p1) == (k, p) else (k1, p1)
            if o == (k, p):
                continue
            assign(o, not is_head)
            ko, po = o
            if po in (1, 3):
                want_head = not is_head
                # d is head for +, b is head for -
                set_dir(ko, 1 if (po == 3) == want_head else -1)

    for k in range(n):
        assign((k, 0), True)
        assign((k, 2), False)
    drain()
    # remaining crossings: components that are over everywhere
    for k in range(n):
        if direction[k] is not None:
            continue
        a, b, c, d = quads[k]
        succ = _label_successor(quads, ends, b)
        if succ is not None and succ.get(d) == b and succ.get(b) != d:
            set_dir(k, 1)
        elif succ is not None and succ.get(b) == d and succ.get(d) != b:
            set_dir(k, -1)
        else:
            # two-arc component: the smaller label is incoming here
            set_dir(k, 1 if d < b else -1)
        drain()
    return [int(s) for s in direction]


def _label_successor(quads, ends, start) -> Optional[Dict[int, int]]:
    """Cyclic successor in sorted label order of the component through ``start``.

    The component is found geometrically: from an arc at an over slot the
    strand continues through the opposite slot.
    """
    labels = []
    seen = set()
    s = start
    slot = ends[s][0]
    while s not in seen:
        seen.add(s)
        labels.append(s)
        (k1, p1), (k2, p2) = ends[s]
        nxt = (k2, p2) if (k1, p1) == slot else (k1, p1)
        k, p = nxt
        s = quads[k][(p + 2) % 4]
        slot = (k, (p + 2) % 4)
    ordered = sorted(labels)
    if len(ordered) < 3:
        return None
    return {x: ordered[(i + 1) % len(ordered)] for i, x in enumerate(ordered)}


# operations

def unknot() -> LinkDiagram:
    return LinkDiagram([], loops=1)


def unlink(k: int) -> LinkDiagram:
    return LinkDiagram([], loops=k)


def mirror(d: LinkDiagram) -> LinkDiagram:
    return LinkDiagram([x.switched() for x in d.crossings], d.loops, d.name_hint)


def reverse_component(d: LinkDiagram, c: int) -> LinkDiagram:
    if not 0 <= c < d.mu:
        raise BadComponentIndex(f"component {c} out of range 0..{d.mu - 1}")
    if c >= len(d.components):
        return d  # a free loop; reversing it changes nothing visible
    out = []
    for x in d.crossings:
        under_in = d.component_of(x.a) == c
        over_in = d.component_of(x.over_in) == c
        if under_in:
            y = Crossing(x.c, x.d, x.a, x.b, x.sign)
        else:
            y = x
        if under_in != over_in:
            y = Crossing(y.a, y.b, y.c, y.d, -y.sign)
        out.append(y)
    return LinkDiagram(out, d.loops, d.name_hint)


def split_union(a: LinkDiagram, b: LinkDiagram) -> LinkDiagram:
    off = a.max_label()
    return LinkDiagram(list(a.crossings) + list(b.shifted(off).crossings), a.loops + b.loops)


def connected_sum(a: LinkDiagram, b: LinkDiagram, arc_a: Optional[int] = None,
                  arc_b: Optional[int] = None) -> LinkDiagram:
    """Splice ``arc_a`` of a with ``arc_b`` of b, respecting orientation.

    Defaults pick the smallest label of each diagram (component 0).  A
    crossingless operand is an unknot summand and is absorbed.
    """
    if not a.crossings:
        if a.loops < 1:
            raise BadArc("empty diagram")
        return LinkDiagram(b.crossings, b.loops + a.loops - 1)
    if not b.crossings:
        if b.loops < 1:
            raise BadArc("empty diagram")
        return LinkDiagram(a.crossings, a.loops + b.loops - 1)
    arc_a = min(a.arcs()) if arc_a is None else arc_a
    arc_b = min(b.arcs()) if arc_b is None else arc_b
    if arc_a not in a.arcs():
        raise BadArc(f"arc {arc_a} not in first diagram")
    if arc_b not in b.arcs():
        raise BadArc(f"arc {arc_b} not in second diagram")
    off = a.max_label()
    b2 = b.shifted(off)
    arc_b += off
    fresh = b2.max_label() + 1
    # arc_a: tail at P, head at Q.  arc_b: tail at R, head at S.
    # Result: P -> S keeps label arc_a, R -> Q gets the fresh label.
    xs_a = []
    for x in a.crossings:
        if x.a == arc_a or x.over_in == arc_a:
            # head end of arc_a (at Q) now carries the fresh label
            xs_a.append(_replace_slot(x, arc_a, fresh, head=True))
        else:
            xs_a.append(x)
    xs_b = []
    for x in b2.crossings:
        if x.a == arc_b or x.over_in == arc_b:
            x = _replace_slot(x, arc_b, arc_a, head=True)
        if x.c == arc_b or x.over_out == arc_b:
            x = _replace_slot(x, arc_b, fresh, head=False)
        xs_b.append(x)
    return LinkDiagram(xs_a + xs_b, a.loops + b.loops)


def _replace_slot(x: Crossing, old: int, new: int, head: bool) -> Crossing:
    slots = list(x.strands)
    if head:
        idx = 0 if x.a == old else (3 if x.sign > 0 else 1)
    else:
        idx = 2 if x.c == old else (1 if x.sign > 0 else 3)
    assert slots[idx] == old
    slots[idx] = new
    return Crossing(*slots, x.sign)


def linking_number(d: LinkDiagram, i: int, j: int) -> int:
    ncomp = len(d.components)
    for c in (i, j):
        if not 0 <= c < d.mu:
            raise BadComponentIndex(f"component {c} out of range")
    if i == j:
        raise SameComponent("linking number needs two components")
    if i >= ncomp or j >= ncomp:
        return 0
    total = 0
    for x in d.crossings:
        cu, co = d.component_of(x.a), d.component_of(x.over_in)
        if {cu, co} == {i, j}:
            total += x.sign
    return total // 2


def linking_matrix(d: LinkDiagram) -> List[List[int]]:
    n = d.mu
    m = [[0] * n for _ in range(n)]
    for x in d.crossings:
        cu, co = d.component_of(x.a), d.component_of(x.over_in)
        if cu != co:
            m[cu][co] += x.sign
            m[co][cu] += x.sign
    return [[v // 2 for v in row] for row in m]


def total_linking(d: LinkDiagram) -> int:
    return sum(x.sign for x in d.crossings
               if d.component_of(x.a) != d.component_of(x.over_in)) // 2


def is_proper(d: LinkDiagram) -> bool:
    m = linking_matrix(d)
    return all(sum(row) % 2 == 0 for row in m)


def from_braid(word: Sequence[int], strands: Optional[int] = None) -> LinkDiagram:
    """Closure of a braid word; letter +i / -i is a positive / negative
    crossing between positions i and i+1 (strands run downwards)."""
    n = strands or (max((abs(w) for w in word), default=0) + 1)
    cur = list(range(1, n + 1))
    start = list(cur)
    nxt = n + 1
    quads = []
    for w in word:
        i = abs(w) - 1
        if not 0 <= i < n - 1:
            raise BadArc(f"generator {w} out of range for {n} strands")
        left_in, right_in = cur[i], cur[i + 1]
        left_out, right_out = nxt, nxt + 1   # left strand ends SE, right strand ends SW
        nxt += 2
        if w > 0:
            quads.append(Crossing(left_in, right_out, left_out, right_in, 1))
        else:
            quads.append(Crossing(right_in, left_in, right_out, left_out, -1))
        cur[i], cur[i + 1] = right_out, left_out
    # close up: final label at each position is identified with the start label
    ident = {}
    loops = 0
    for j in range(n):
        if cur[j] == start[j]:
            loops += 1
        else:
            ident[cur[j]] = start[j]
    xs = [x.relabel(lambda s: ident.get(s, s)) for x in quads]
    return LinkDiagram(xs, loops)
