"""The unoriented Q polynomial (Brandt-Lickorish-Millett-Ho).

    Q(L+) + Q(L-) = z (Q(L0) + Q(Linf)),  Q(O) = 1,
    Q(k-component unlink) = mu^(k-1) with mu = 2 z^-1 - 1.

Orientation is ignored: a crossing tuple only says which pair of opposite
slots is the under-strand.  Components are walked from fixed base points
and the first crossing met from below is resolved; a diagram without one
is descending and hence an unlink.  Curls are removed (Q is unframed),
split pieces and connected summands factor, and results are memoized.
"""
from __future__ import annotations

import sys
from typing import Dict, Tuple

from ..codec import LinkDiagram
from ..errors import TooLarge
from ..fields import GOLDEN_INV, QuadValue, poly_eval_quad
from ..poly import LaurentPolynomial
from . import _tuples as tp

MAX_CROSSINGS = 40
_ONE = LaurentPolynomial.const(1)
_Z = LaurentPolynomial.monomial(1, 2)
MU = LaurentPolynomial({-2: 2, 0: -1})


class _Q:
    def __init__(self):
        self.memo: Dict[Tuple, LaurentPolynomial] = {}
        self.mu_pows = [_ONE]

    def mu_pow(self, k):
        while len(self.mu_pows) <= k:
            self.mu_pows.append(self.mu_pows[-1] * MU)
        return self.mu_pows[k]

    def run(self, xs, loops):
        """Q of a diagram plus ``loops`` split trivial circles."""
        xs, extra = tp.remove_kinks(xs)
        loops += extra
        if not xs:
            return self.mu_pow(loops - 1)
        parts = tp.pieces(xs)
        res = self.mu_pow(len(parts) + loops - 1)
        for part in parts:
            res = res * self.connected(part)
        return res

    def connected(self, xs):
        key = tp.relabel_canonical(tuple((a, b, c, d, 0) for a, b, c, d, _ in xs))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        split = tp.sum_split(xs)
        if split is not None:
            res = self.run(split[0], 0) * self.run(split[1], 0)
        else:
            res = self._skein(xs)
        self.memo[key] = res
        return res

    def _skein(self, xs):
        k = _first_bad_crossing(xs)
        if k is None:
            return self.mu_pow(_count_components(xs) - 1)
        a, b, c, d, s = xs[k]
        switched = xs[:k] + ((b, c, d, a, s),) + xs[k + 1:]
        s0, l0 = tp.remove_crossing(xs, k, ((a, b), (c, d)))
        s1, l1 = tp.remove_crossing(xs, k, ((a, d), (b, c)))
        return -self.run(switched, 0) + _Z * (self.run(s0, l0) + self.run(s1, l1))


def _walk(xs):
    """Yield (crossing index, is_under) walking each component from its base point."""
    ends = tp.ends_of(xs)
    seen_arcs = set()
    for start in sorted(ends):
        if start in seen_arcs:
            continue
        slot = min(ends[start])
        arc = start
        while arc not in seen_arcs:
            seen_arcs.add(arc)
            e1, e2 = ends[arc]
            k, p = e2 if e1 == slot else e1
            yield k, p in (0, 2)
            slot = (k, (p + 2) % 4)
            arc = xs[k][slot[1]]


def _first_bad_crossing(xs):
    visited = set()
    for k, under in _walk(xs):
        if k in visited:
            continue
        visited.add(k)
        if under:
            return k
    return None


def _count_components(xs):
    ends = tp.ends_of(xs)
    seen = set()
    count = 0
    for start in sorted(ends):
        if start in seen:
            continue
        count += 1
        slot = min(ends[start])
        arc = start
        while arc not in seen:
            seen.add(arc)
            e1, e2 = ends[arc]
            k, p = e2 if e1 == slot else e1
            slot = (k, (p + 2) % 4)
            arc = xs[k][slot[1]]
    return count


def q_polynomial(d: LinkDiagram) -> LaurentPolynomial:
    """Q polynomial in z (doubled exponents)."""
    if len(d.crossings) > MAX_CROSSINGS:
        raise TooLarge(f"{len(d.crossings)} crossings exceeds the skein envelope")
    xs = tuple((x.a, x.b, x.c, x.d, x.sign) for x in d.crossings)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        return _Q().run(xs, d.loops)
    finally:
        sys.setrecursionlimit(old)


def rho_from_q(q: LaurentPolynomial) -> QuadValue:
    return poly_eval_quad(q, GOLDEN_INV)


def rho(d: LinkDiagram) -> QuadValue:
    return rho_from_q(q_polynomial(d))
