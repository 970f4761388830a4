"""Jones polynomial via the Kauffman bracket.

The bracket is contracted crossing by crossing.  A partial state is a
matching of the open arc ends on the frontier; states with the same
matching are merged, so the cost depends on the frontier width rather than
on 2^n.  Crossings are added greedily to keep the frontier small.

Convention: <X[a,b,c,d]> = A P[a,b] P[c,d] + A^-1 P[a,d] P[b,c],
loop value d = -A^2 - A^-2, V(t) = (-A^3)^(-w) <D> / d with A = t^(-1/4).
"""
from __future__ import annotations

from typing import Dict, List, Tuple

from ..codec import LinkDiagram
from ..errors import TooLarge
from ..poly import LaurentPolynomial

MAX_CROSSINGS = 40

# A-polynomials use the doubled-exponent storage too: A^k is key 2k
LOOP = LaurentPolynomial({4: -1, -4: -1})


def _order(xs) -> List[int]:
    n = len(xs)
    done = [False] * n
    frontier = set()
    order = []
    for _ in range(n):
        best, best_score = None, None
        for k in range(n):
            if done[k]:
                continue
            labels = set(xs[k][:4])
            shared = len(labels & frontier)
            # prefer closing many ends, then opening few
            score = (shared, -len(labels - frontier), -k)
            if best_score is None or score > best_score:
                best, best_score = k, score
        done[best] = True
        order.append(best)
        for s in xs[best][:4]:
            if s in frontier:
                frontier.discard(s)
            else:
                frontier.add(s)
    return order


def _add_pair(match: Dict[int, int], p: int, q: int) -> int:
    """Insert the strand p--q into a matching; returns closed loops."""
    if p == q:
        return 1
    pp = match.pop(p, None)
    qq = match.pop(q, None)
    if pp is None and qq is None:
        match[p] = q
        match[q] = p
        return 0
    if pp is not None and qq is not None:
        if pp == q:
            # p and q were matched to each other: closes a loop
            return 1
        match[pp] = qq
        match[qq] = pp
        return 0
    end = pp if pp is not None else qq
    new = q if pp is not None else p
    match.pop(end, None)
    match[end] = new
    match[new] = end
    return 0


def bracket(d: LinkDiagram) -> LaurentPolynomial:
    """Unnormalized bracket in A, counting every loop (so <O> = d)."""
    xs = [(x.a, x.b, x.c, x.d) for x in d.crossings]
    if len(xs) > MAX_CROSSINGS:
        raise TooLarge(f"{len(xs)} crossings exceeds the bracket envelope")
    states: Dict[Tuple[Tuple[int, int], ...], Dict[int, int]] = {(): {0: 1}}
    loop_pows = [LaurentPolynomial.const(1)]
    for k in _order(xs):
        a, b, c, e = xs[k]
        new_states: Dict[Tuple[Tuple[int, int], ...], Dict[int, int]] = {}
        for key, coeff in states.items():
            for shift, pairs in ((2, ((a, b), (c, e))), (-2, ((a, e), (b, c)))):
                match = {}
                for u, v in key:
                    match[u] = v
                    match[v] = u
                loops = 0
                for u, v in pairs:
                    loops += _add_pair(match, u, v)
                nkey = tuple(sorted((u, v) for u, v in match.items() if u < v))
                while len(loop_pows) <= loops:
                    loop_pows.append(loop_pows[-1] * LOOP)
                term = LaurentPolynomial(coeff).shift(shift) * loop_pows[loops]
                tgt = new_states.setdefault(nkey, {})
                for ex, cf in term.items():
                    v = tgt.get(ex, 0) + cf
                    if v:
                        tgt[ex] = v
                    else:
                        tgt.pop(ex, None)
        states = new_states
    total = LaurentPolynomial(states.get((), {}))
    for _ in range(d.loops):
        total = total * LOOP
    return total


def jones(d: LinkDiagram) -> LaurentPolynomial:
    """Jones polynomial in t (doubled exponents), V(unknot) = 1."""
    br = bracket(d).divmod_exact(LOOP)
    w = d.writhe()
    # (-A^3)^(-w) = (-1)^w A^(-3w)
    norm = br.shift(-6 * w) * (-1 if w % 2 else 1)
    out = {}
    for e, c in norm.items():
        # e is the doubled A exponent; A^k = t^(-k/4) -> doubled t exponent -k/2
        if e % 4:
            raise ArithmeticError("bracket normalization produced a fractional power")
        out[-e // 4] = c
    return LaurentPolynomial(out)
