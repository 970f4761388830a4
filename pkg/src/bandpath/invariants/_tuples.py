"""Light-weight diagram surgery on raw crossing tuples.

The skein recursions create many short-lived diagrams, so they work on
plain tuples ``(a, b, c, d, sign)`` instead of validated ``LinkDiagram``
objects.  Merged arc classes are represented by their smallest label, which
keeps labels stable along a recursion branch and makes memo hits likely.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

Tup = Tuple[int, int, int, int, int]


def ends_of(xs: Sequence[Tup]) -> Dict[int, List[Tuple[int, int]]]:
    out: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for k, x in enumerate(xs):
        for p in range(4):
            out[x[p]].append((k, p))
    return out


class _UF:
    def __init__(self):
        self.p: Dict[int, int] = {}

    def find(self, x):
        p = self.p
        root = x
        while p.get(root, root) != root:
            root = p[root]
        while x != root:
            nxt = p.get(x, x)
            p[x] = root
            x = nxt
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.p[rb] = ra
            else:
                self.p[ra] = rb


def remove_crossing(xs: Sequence[Tup], k: int, pairs) -> Tuple[Tuple[Tup, ...], int]:
    """Delete crossing k and join its four ends according to ``pairs``.

    Returns the new crossing list and the number of closed loops created.
    """
    uf = _UF()
    for u, v in pairs:
        uf.union(u, v)
    x = xs[k]
    touched = {uf.find(s) for s in x[:4]}
    rest = [y for i, y in enumerate(xs) if i != k]
    used = set()
    out = []
    for y in rest:
        f = uf.find
        z = (f(y[0]), f(y[1]), f(y[2]), f(y[3]), y[4])
        out.append(z)
        used.update(z[:4])
    loops = sum(1 for r in touched if r not in used)
    return tuple(out), loops


def oriented_smoothing_pairs(x: Tup):
    a, b, c, d, s = x
    return ((a, b), (d, c)) if s > 0 else ((a, d), (b, c))


def switch(x: Tup) -> Tup:
    a, b, c, d, s = x
    return (d, a, b, c, -1) if s > 0 else (b, c, d, a, 1)


def remove_kinks(xs: Tuple[Tup, ...]) -> Tuple[Tuple[Tup, ...], int]:
    """Undo Reidemeister I curls; returns the diagram and freed loops."""
    loops = 0
    changed = True
    while changed:
        changed = False
        for k, x in enumerate(xs):
            a, b, c, d = x[:4]
            if a == b:
                curl, pair = a, (c, d)
            elif b == c:
                curl, pair = b, (a, d)
            elif c == d:
                curl, pair = c, (a, b)
            elif d == a:
                curl, pair = d, (b, c)
            else:
                continue
            # the curl merges into the strand passing through
            xs, extra = remove_crossing(xs, k, [pair, (curl, pair[0])])
            loops += extra
            changed = True
            break
    return xs, loops


def pieces(xs: Sequence[Tup]) -> List[Tuple[Tup, ...]]:
    """Split a diagram into its connected pieces."""
    if not xs:
        return []
    ends = ends_of(xs)
    uf = _UF()
    for lst in ends.values():
        uf.union(lst[0][0], lst[1][0])
    groups: Dict[int, List[Tup]] = defaultdict(list)
    for k, x in enumerate(xs):
        groups[uf.find(k)].append(x)
    return [tuple(g) for _, g in sorted(groups.items())]


def faces_arcs(xs: Sequence[Tup]) -> List[List[int]]:
    """Faces of a connected diagram as lists of arc labels."""
    ends = ends_of(xs)
    other = {}
    for lst in ends.values():
        other[lst[0]] = lst[1]
        other[lst[1]] = lst[0]
    seen = set()
    out = []
    for k in range(len(xs)):
        for p in range(4):
            if (k, p) in seen:
                continue
            face = []
            cur = (k, p)
            while cur not in seen:
                seen.add(cur)
                face.append(xs[cur[0]][cur[1]])
                k2, p2 = other[cur]
                cur = (k2, (p2 - 1) % 4)
            out.append(face)
    return out


def sum_split(xs: Tuple[Tup, ...]) -> Optional[Tuple[Tuple[Tup, ...], Tuple[Tup, ...]]]:
    """Find a diagrammatic connected-sum decomposition, if any.

    Looks for two arcs on a common face whose removal disconnects the
    crossing graph.  Each side is closed up by reusing the first arc's label.
    """
    n = len(xs)
    if n < 4:
        return None
    ends = ends_of(xs)
    adj: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for s, lst in ends.items():
        (k1, _), (k2, _) = lst
        adj[k1].append((k2, s))
        adj[k2].append((k1, s))
    tried = set()
    for face in faces_arcs(xs):
        labels = list(dict.fromkeys(face))
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                e1, e2 = labels[i], labels[j]
                key = (min(e1, e2), max(e1, e2))
                if key in tried:
                    continue
                tried.add(key)
                side = _reach(adj, 0, {e1, e2})
                if len(side) == n or len(side) < 1:
                    continue
                a_idx = sorted(side)
                b_idx = [k for k in range(n) if k not in side]
                if len(a_idx) < 1 or len(b_idx) < 1:
                    continue
                part_a = tuple(xs[k] for k in a_idx)
                part_b = tuple(xs[k] for k in b_idx)
                return _close(part_a, e1, e2), _close(part_b, e1, e2)
    return None


def _reach(adj, start, cut):
    seen = {start}
    stack = [start]
    while stack:
        k = stack.pop()
        for k2, s in adj[k]:
            if s in cut or k2 in seen:
                continue
            seen.add(k2)
            stack.append(k2)
    return seen


def _close(part: Tuple[Tup, ...], e1: int, e2: int) -> Tuple[Tup, ...]:
    # each of e1, e2 has exactly one end in this part; rename e2 to e1
    return tuple(tuple(e1 if (s == e2 and i < 4) else s for i, s in enumerate(x)) for x in part)


def relabel_canonical(xs: Sequence[Tup]) -> Tuple[Tup, ...]:
    """Deterministic relabelling by first appearance; used for memo keys."""
    mp: Dict[int, int] = {}
    out = []
    for x in xs:
        row = []
        for s in x[:4]:
            if s not in mp:
                mp[s] = len(mp) + 1
            row.append(mp[s])
        out.append((*row, x[4]))
    return tuple(out)
