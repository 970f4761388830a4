"""Brute-force reference computations used only by the tests.

These share no code with the package: diagrams come in as plain lists of
4-tuples (KnotTheory PD convention, under-strand a -> c) plus a sign per
crossing, and polynomials are plain ``{exponent: coefficient}`` dicts.
They are exponential in the number of crossings and meant for small
diagrams.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

Poly = Dict[int, int]


def padd(p: Poly, q: Poly) -> Poly:
    out = defaultdict(int, p)
    for e, c in q.items():
        out[e] += c
    return {e: c for e, c in out.items() if c}


def pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = defaultdict(int)
    for (e1, c1), (e2, c2) in itertools.product(p.items(), q.items()):
        out[e1 + e2] += c1 * c2
    return {e: c for e, c in out.items() if c}


def pscale(p: Poly, c: int) -> Poly:
    return {e: c * v for e, v in p.items() if c * v}


def ppow(p: Poly, n: int) -> Poly:
    out = {0: 1}
    for _ in range(n):
        out = pmul(out, p)
    return out


class _UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def _loops_after(quads: Sequence[Tuple[int, int, int, int]], choice: Sequence[int]) -> int:
    """Number of circles after smoothing every crossing.

    choice 0 joins (a,b),(c,d); choice 1 joins (a,d),(b,c).
    """
    uf = _UF()
    labels = set()
    for (a, b, c, d), s in zip(quads, choice):
        labels |= {a, b, c, d}
        if s == 0:
            uf.union(a, b)
            uf.union(c, d)
        else:
            uf.union(a, d)
            uf.union(b, c)
    return len({uf.find(x) for x in labels})


def jones_state_sum(quads, signs, loops: int = 0) -> Poly:
    """Jones polynomial from the full Kauffman state sum.

    Returns doubled t-exponents, so {-5: -1, -1: -1} is -t^(-5/2) - t^(-1/2).
    """
    delta = {2: -1, -2: -1}                      # -A^2 - A^-2
    bracket: Poly = {}
    n = len(quads)
    if n == 0:
        bracket = ppow(delta, max(loops - 1, 0))
    else:
        for choice in itertools.product((0, 1), repeat=n):
            k = choice.count(0) - choice.count(1)
            circles = _loops_after(quads, choice) + loops
            bracket = padd(bracket, pmul({k: 1}, ppow(delta, circles - 1)))
    w = sum(signs)
    # (-A^3)^(-w)
    pre = {-3 * w: (-1) ** (w % 2)}
    poly_a = pmul(pre, bracket)
    # A = t^(-1/4): A^e = t^(-e/4) = doubled exponent -e/2
    out = {}
    for e, c in poly_a.items():
        assert e % 2 == 0, "odd A exponent"
        out[-e // 2] = c
    return out


# -- Q polynomial by the unoriented skein relation -----------------------------

MU_Q = {-1: 2, 0: -1}                            # 2 z^-1 - 1
Z = {1: 1}


def _smooth(quads, over, k, pairs, loops):
    """Remove crossing k, joining its labels along ``pairs``."""
    x = quads[k]
    uf = _UF()
    for p, q in pairs:
        uf.union(x[p], x[q])
    rest = [quads[i] for i in range(len(quads)) if i != k]
    ov = [over[i] for i in range(len(quads)) if i != k]
    used = {s for r in rest for s in r}
    closed = {uf.find(s) for s in x if s not in used}
    # a class closes up when none of its labels reaches another crossing
    for s in x:
        if s in used:
            closed.discard(uf.find(s))
    new = [tuple(uf.find(s) if s in x else s for s in r) for r in rest]
    return new, ov, loops + len(closed)


def _walk(quads):
    """Traverse all components; yield (crossing, entered_on_over_pair) on
    each first visit, plus the number of components."""
    slots = defaultdict(list)
    for k, r in enumerate(quads):
        for p, s in enumerate(r):
            slots[s].append((k, p))
    seen_slot = set()
    first = {}
    comps = 0
    for start in sorted(slots):
        k, p = slots[start][0]
        if (k, p) in seen_slot:
            continue
        comps += 1
        while (k, p) not in seen_slot:
            seen_slot.add((k, p))
            if k not in first:
                first[k] = p % 2
            q = (p + 2) % 4
            seen_slot.add((k, q))
            label = quads[k][q]
            nxt = [sl for sl in slots[label] if sl != (k, q)]
            k, p = nxt[0] if nxt else (k, q)
    return first, comps


def q_skein(quads, over, loops: int = 0) -> Poly:
    """Q polynomial (integer z-exponents).

    ``over[k]`` is 1 when positions b,d of crossing k form the over-strand,
    0 when a,c do.  A diagram whose every crossing is first met on the
    over-strand (components taken in a fixed order) is an unlink.
    """
    if not quads:
        return ppow(MU_Q, max(loops - 1, 0))
    first, comps = _walk(quads)
    bad = [k for k in sorted(first) if first[k] != over[k]]
    if not bad:
        return ppow(MU_Q, comps + loops - 1)
    k = bad[0]
    switched = list(over)
    switched[k] ^= 1
    q0 = q_skein(*_smooth(quads, over, k, ((0, 1), (2, 3)), loops))
    q1 = q_skein(*_smooth(quads, over, k, ((0, 3), (1, 2)), loops))
    # Q(L+) + Q(L-) = z (Q(L0) + Q(Linf))
    return padd(pmul(Z, padd(q0, q1)), pscale(q_skein(quads, switched, loops), -1))


def q_from_pd(quads, loops: int = 0) -> Poly:
    # in the PD convention the under-strand is a -> c, so b,d is over
    return q_skein([tuple(q) for q in quads], [1] * len(quads), loops)


# -- Seifert-matrix invariants ---------------------------------------------------

def bareiss_det(M) -> int:
    """Exact integer determinant by fraction-free elimination."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1]


def _interpolate(xs, ys) -> List[int]:
    """Integer coefficients (low to high) of the polynomial through the points."""
    from fractions import Fraction
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def seifert_invariants(V: List[List[int]]):
    """(signature, |det|, Alexander coefficients up to units) of a Seifert
    matrix.  Signature uses numpy eigenvalues of V + V^T."""
    import numpy as np

    n = len(V)
    if n == 0:
        return 0, 1, [1]
    M = np.array(V, dtype=float)
    ev = np.linalg.eigvalsh(M + M.T)
    sig = int(sum(1 for e in ev if e > 1e-9) - sum(1 for e in ev if e < -1e-9))
    det = abs(bareiss_det([[V[i][j] + V[j][i] for j in range(n)] for i in range(n)]))
    xs = list(range(-n, n + 1))[: n + 1]
    ys = [bareiss_det([[V[i][j] - t * V[j][i] for j in range(n)] for i in range(n)]) for t in xs]
    return sig, det, normalize_coeffs(_interpolate(xs, ys))


def normalize_coeffs(coeffs: List[int]) -> List[int]:
    """Strip zero ends and fix the sign of the leading coefficient."""
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if coeffs and coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs
