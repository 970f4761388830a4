"""Seifert matrices, signature and determinant.

The diagram is first isotoped into a closed braid by Vogel moves: as long
as some face carries two edges from different Seifert circles running the
same way around it, one edge is pushed over the other by a Reidemeister II
move.  Once the circles are nested coherently they are the braid strands,
and the Seifert surface is the usual stack of disks joined by twisted bands.
Its matrix is then written down from the braid word (Collins' rules).

Split diagrams are handled piecewise: the pieces' surfaces are joined by
tubes, each contributing a generator that links nothing.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..codec import LinkDiagram
from ..errors import TooLarge
from . import _tuples as tp

MAX_CROSSINGS = 40
MAX_VOGEL_MOVES = 400

Matrix = List[List[int]]


# -- oriented tuple helpers ---------------------------------------------------

def _over_slots(x) -> Tuple[int, int]:
    """(incoming, outgoing) slot of the over strand."""
    return (3, 1) if x[4] > 0 else (1, 3)


def _heads(xs) -> Dict[int, Tuple[int, int]]:
    """arc -> (crossing, slot) where the arc ends."""
    out = {}
    for k, x in enumerate(xs):
        out[x[0]] = (k, 0)
        out[x[_over_slots(x)[0]]] = (k, _over_slots(x)[0])
    return out


def seifert_circles(xs) -> Dict[int, int]:
    """arc -> index of its Seifert circle."""
    succ = {}
    for x in xs:
        oin, oout = _over_slots(x)
        succ[x[0]] = x[oout]
        succ[x[oin]] = x[2]
    circ: Dict[int, int] = {}
    for start in sorted(succ):
        if start in circ:
            continue
        idx = len(set(circ.values()))
        arc = start
        while arc not in circ:
            circ[arc] = idx
            arc = succ[arc]
    return circ


def _oriented_faces(xs) -> List[List[Tuple[int, bool]]]:
    """Faces as lists of (arc, runs along the face traversal)."""
    ends = tp.ends_of(xs)
    heads = _heads(xs)
    other = {}
    for lst in ends.values():
        if len(lst) == 2:
            other[lst[0]] = lst[1]
            other[lst[1]] = lst[0]
    seen = set()
    faces = []
    for k in range(len(xs)):
        for p in range(4):
            if (k, p) in seen:
                continue
            face = []
            cur = (k, p)
            while cur not in seen:
                seen.add(cur)
                arc = xs[cur[0]][cur[1]]
                k2, p2 = other[cur]
                face.append((arc, heads[arc] == (k2, p2)))
                cur = (k2, (p2 - 1) % 4)
            faces.append(face)
    return faces


def _find_defect(xs) -> Optional[Tuple[int, int, bool]]:
    circ = seifert_circles(xs)
    for face in _oriented_faces(xs):
        for i, (u, du) in enumerate(face):
            for v, dv in face[i + 1:]:
                if du == dv and circ[u] != circ[v]:
                    return u, v, du
    return None


def vogel_move(xs, u: int, v: int, agree: bool):
    """Push edge u over edge v across their common face."""
    heads = _heads(xs)
    top = max(max(x[:4]) for x in xs)
    u2, u3, v2, v3 = top + 1, top + 2, top + 3, top + 4
    out = [list(x) for x in xs]
    ku, pu = heads[u]
    kv, pv = heads[v]
    out[ku][pu] = u3
    out[kv][pv] = v3
    u1, v1 = u, v
    if agree:
        new = [(v2, u2, v3, u1, 1), (v1, u2, v2, u3, -1)]
    else:
        new = [(v1, u3, v2, u2, 1), (v2, u1, v3, u2, -1)]
    return tuple(tuple(x) for x in out) + tuple(new)


def braid_form(xs):
    """Apply Vogel moves until the diagram is a closed braid."""
    for _ in range(MAX_VOGEL_MOVES):
        hit = _find_defect(xs)
        if hit is None:
            return xs
        xs = vogel_move(xs, *hit)
    raise TooLarge("Vogel moves did not terminate within budget")


def read_braid(xs) -> Tuple[List[int], int]:
    """Braid word and strand count of a braided connected diagram."""
    circ = seifert_circles(xs)
    ncirc = len(set(circ.values()))
    if ncirc == 1:
        return [], 1
    cross_circ = []
    adj: Dict[int, set] = {c: set() for c in range(ncirc)}
    for x in xs:
        pair = (circ[x[0]], circ[x[2]])
        cross_circ.append(pair)
        adj[pair[0]].add(pair[1])
        adj[pair[1]].add(pair[0])
    ends = [c for c in adj if len(adj[c]) == 1]
    if len(ends) != 2 or any(len(s) > 2 for s in adj.values()):
        raise ValueError("Seifert graph of a braided diagram must be a path")
    order = [min(ends)]
    while len(order) < ncirc:
        nxt = [c for c in adj[order[-1]] if c not in order]
        order.append(nxt[0])
    pos = {c: i for i, c in enumerate(order)}
    gap = [min(pos[a], pos[b]) + 1 for a, b in cross_circ]

    # crossings met in order along each circle
    heads = _heads(xs)
    seq: Dict[int, List[int]] = {c: [] for c in range(ncirc)}
    by_circle: Dict[int, List[int]] = {}
    for arc, c in circ.items():
        by_circle.setdefault(c, []).append(arc)
    succ = {}
    for x in xs:
        oin, oout = _over_slots(x)
        succ[x[0]] = x[oout]
        succ[x[oin]] = x[2]
    for c, arcs in by_circle.items():
        arc = min(arcs)
        start = arc
        while True:
            seq[c].append(heads[arc][0])
            arc = succ[arc]
            if arc == start:
                break

    # cut each circle so that one arc from the axis meets no band
    linear: List[List[int]] = []
    anchor = None
    for i, c in enumerate(order):
        s = seq[c]
        if anchor is not None:
            j = s.index(anchor)
            s = s[j:] + s[:j]
        linear.append(s)
        nxt_gap = [k for k in s if gap[k] == i + 1]
        anchor = nxt_gap[0] if nxt_gap else None

    # merge the per-circle orders
    indeg = {k: 0 for k in range(len(xs))}
    edges: Dict[int, set] = {k: set() for k in range(len(xs))}
    for s in linear:
        for a, b in zip(s, s[1:]):
            if b not in edges[a]:
                edges[a].add(b)
                indeg[b] += 1
    ready = sorted(k for k, d in indeg.items() if d == 0)
    word = []
    while ready:
        k = ready.pop(0)
        word.append(gap[k] * xs[k][4])
        for b in sorted(edges[k]):
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    if len(word) != len(xs):
        raise ValueError("inconsistent crossing order on Seifert circles")
    return word, ncirc


def braid_seifert_matrix(word: Sequence[int]) -> Matrix:
    """Seifert matrix of the closure of a braid word (Collins' rules)."""
    gens = []
    for g in sorted({abs(w) for w in word}):
        pos = [k for k, w in enumerate(word) if abs(w) == g]
        gens += [(g, p, q) for p, q in zip(pos, pos[1:])]
    m = len(gens)
    V = [[0] * m for _ in range(m)]

    def sgn(k):
        return 1 if word[k] > 0 else -1

    for i, (g, p, q) in enumerate(gens):
        if sgn(p) == sgn(q):
            V[i][i] = -sgn(p)
        for j, (g2, r, s) in enumerate(gens):
            if g2 == g and r == q:
                if sgn(q) > 0:
                    V[j][i] = 1
                else:
                    V[i][j] = -1
            elif g2 == g + 1:
                if r < p < s < q:
                    V[j][i] = 1
                elif p < r < q < s:
                    V[j][i] = -1
    return V


def _block_diag(blocks: Sequence[Matrix], zeros: int) -> Matrix:
    size = sum(len(b) for b in blocks) + zeros
    out = [[0] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[off + i][off:off + len(row)] = row
        off += len(b)
    return out


def seifert_matrix(d: LinkDiagram) -> Matrix:
    if len(d.crossings) > MAX_CROSSINGS:
        raise TooLarge(f"{len(d.crossings)} crossings exceeds the Seifert envelope")
    xs = tuple((x.a, x.b, x.c, x.d, x.sign) for x in d.crossings)
    parts = tp.pieces(xs)
    blocks = []
    for part in parts:
        word, _ = read_braid(braid_form(part))
        blocks.append(braid_seifert_matrix(word))
    tubes = max(len(parts) + d.loops - 1, 0)
    return _block_diag(blocks, tubes)


# -- exact linear algebra -----------------------------------------------------

def symmetric_signature(S: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix by congruence diagonalization."""
    A = [[Fraction(v) for v in row] for row in S]
    n = len(A)
    sig = 0
    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[i], A[j] = A[j], A[i]
                for row in A:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if A[i][j] != 0), None)
                if j is None:
                    continue
                # row/col i += row/col j makes the pivot 2*A[i][j]
                for c in range(n):
                    A[i][c] += A[j][c]
                for r in range(n):
                    A[r][i] += A[r][j]
        p = A[i][i]
        sig += 1 if p > 0 else -1
        for r in range(i + 1, n):
            f = A[r][i] / p
            if f:
                for c in range(i, n):
                    A[r][c] -= f * A[i][c]
        for r in range(i + 1, n):
            A[i][r] = Fraction(0)
            A[r][i] = Fraction(0)
    return sig


def int_det(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant (Bareiss)."""
    A = [list(row) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][k] != 0), None)
            if j is None:
                return 0
            A[k], A[j] = A[j], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def symmetrized(V: Matrix) -> Matrix:
    return [[V[i][j] + V[j][i] for j in range(len(V))] for i in range(len(V))]


def signature(d: LinkDiagram) -> int:
    return symmetric_signature(symmetrized(seifert_matrix(d)))


def determinant(d: LinkDiagram) -> int:
    return abs(int_det(symmetrized(seifert_matrix(d))))
