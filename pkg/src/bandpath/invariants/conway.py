"""Conway and Alexander polynomials by skein recursion.

Strategy: walk the components from fixed base points.  The first crossing
met from below is switched, using

    nabla(D) = nabla(D') + sign * z * nabla(D0)

where D' is D with that crossing switched and D0 its oriented smoothing.
A diagram with no such crossing is descending, hence an unlink.  Curls are
removed first, split diagrams give 0 and diagrammatic connected sums
factor; all results are memoized.
"""
from __future__ import annotations

import sys
from typing import Dict, Tuple

from ..codec import LinkDiagram
from ..errors import NonConvergentUnknotting, TooLarge
from ..poly import LaurentPolynomial, T_HALF, T_HALF_INV
from . import _tuples as tp

MAX_CROSSINGS = 40
_ONE = LaurentPolynomial.const(1)
_ZERO = LaurentPolynomial()
_Z = LaurentPolynomial.monomial(1, 2)


class _Conway:
    def __init__(self):
        self.memo: Dict[Tuple, LaurentPolynomial] = {}

    def run(self, xs, loops, depth_budget):
        xs, extra = tp.remove_kinks(xs)
        loops += extra
        if not xs:
            return _ONE if loops == 1 else _ZERO
        if loops:
            return _ZERO
        key = tp.relabel_canonical(xs)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if depth_budget < 0:
            raise NonConvergentUnknotting("skein recursion exceeded its depth bound")
        parts = tp.pieces(xs)
        if len(parts) > 1:
            res = _ZERO
        else:
            split = tp.sum_split(xs)
            if split is not None:
                res = self.run(split[0], 0, depth_budget) * self.run(split[1], 0, depth_budget)
            else:
                res = self._skein(xs, depth_budget)
        self.memo[key] = res
        return res

    def _skein(self, xs, depth_budget):
        k = _first_bad_crossing(xs)
        if k is None:
            mu = _count_components(xs)
            return _ONE if mu == 1 else _ZERO
        x = xs[k]
        switched = xs[:k] + (tp.switch(x),) + xs[k + 1:]
        smooth, loops = tp.remove_crossing(xs, k, tp.oriented_smoothing_pairs(x))
        a = self.run(switched, 0, depth_budget - 1)
        b = self.run(smooth, loops, depth_budget - 1)
        return a + b * _Z * x[4]


def _walk_order(xs):
    """Yield (crossing index, is_under) along components in base-point order."""
    succ = {}
    where = {}
    for k, x in enumerate(xs):
        a, b, c, d, s = x
        over_in, over_out = (d, b) if s > 0 else (b, d)
        succ[a] = c
        succ[over_in] = over_out
        where[a] = (k, True)
        where[over_in] = (k, False)
    seen = set()
    for start in sorted(succ):
        if start in seen:
            continue
        arc = start
        while arc not in seen:
            seen.add(arc)
            yield where[arc]
            arc = succ[arc]


def _first_bad_crossing(xs):
    visited = set()
    for k, under in _walk_order(xs):
        if k in visited:
            continue
        visited.add(k)
        if under:
            return k
    return None


def _count_components(xs):
    succ = {}
    for x in xs:
        a, b, c, d, s = x
        succ[a] = c
        if s > 0:
            succ[d] = b
        else:
            succ[b] = d
    seen = set()
    count = 0
    for start in succ:
        if start in seen:
            continue
        count += 1
        arc = start
        while arc not in seen:
            seen.add(arc)
            arc = succ[arc]
    return count


def _tuples(d: LinkDiagram):
    return tuple((x.a, x.b, x.c, x.d, x.sign) for x in d.crossings)


def conway(d: LinkDiagram) -> LaurentPolynomial:
    """Conway polynomial in z (doubled exponents)."""
    if len(d.crossings) > MAX_CROSSINGS:
        raise TooLarge(f"{len(d.crossings)} crossings exceeds the skein envelope")
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10000))
    try:
        return _Conway().run(_tuples(d), d.loops, 2 * len(d.crossings) + 2)
    finally:
        sys.setrecursionlimit(old)


def conway_to_alexander(nabla: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute z = t^(1/2) - t^(-1/2); returns the Conway-normalized Delta."""
    z = T_HALF - T_HALF_INV
    return nabla.substitute(z, None, half=False)


def normalize_alexander(p: LaurentPolynomial) -> LaurentPolynomial:
    """Positive leading coefficient, lowest exponent 0."""
    if p.is_zero():
        return p
    q = p.shift(-p.min_exp())
    if q.coeff(q.max_exp()) < 0:
        q = -q
    return q


def alexander(d: LinkDiagram) -> LaurentPolynomial:
    return normalize_alexander(conway_to_alexander(conway(d)))
