"""Lower bounds for the coherent band-Gordian distance.

Each bound takes two ``InvariantBundle`` objects and returns a
``BoundWitness``.  Bounds that do not apply return value 0, so the combiner
is total.  All values are rounded up to the parity of mu(L) - mu(L'),
since every band move changes the component count by one.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .errors import SearchBudgetExceeded
from .fields import (N_MAX, in_jones_ratio_set, in_q_ratio_set)
from .invariants.bundle import InvariantBundle
from .poly import LaurentPolynomial

PARITY = "Parity"
SIGNATURE = "Signature(I)"
JONES = "Jones(II)"
Q = "Q(III)"
ARF = "Arf(IV)"
ALEXANDER = "Alexander(V)"
LINKING_ARF = "LinkingArf"
TRIVIAL = "Trivial"

# which single-method bound a table annotation refers to
ANNOTATION_METHODS = {
    "I": (SIGNATURE,),
    "II": (JONES,),
    "III": (Q,),
    "IV": (ARF, LINKING_ARF),
    "V": (ALEXANDER,),
}

SEARCH_BUDGET = 10 ** 6


@dataclass(frozen=True)
class BoundWitness:
    value: int
    method: str
    detail: str = ""
    applicable: bool = True

    def to_json(self) -> Dict:
        return {"value": self.value, "method": self.method, "detail": self.detail,
                "applicable": self.applicable}


def _dmu(a: InvariantBundle, b: InvariantBundle) -> int:
    return abs(a.mu - b.mu)


def round_parity(value: int, dmu: int) -> int:
    """Smallest v >= value with v = dmu (mod 2)."""
    value = max(value, 0)
    return value + ((value - dmu) % 2)


def parity_bound(a: InvariantBundle, b: InvariantBundle) -> BoundWitness:
    d = _dmu(a, b)
    return BoundWitness(d, PARITY, f"mu = {a.mu}, {b.mu}")


def distinct_bound(a: InvariantBundle, b: InvariantBundle) -> BoundWitness:
    """d = 0 only for equal links; differing invariants force a move."""
    d = _dmu(a, b)
    if d == 0 and a != b:
        return BoundWitness(2, TRIVIAL, "invariants differ")
    return BoundWitness(d, TRIVIAL, "")


def signature_bound(a: InvariantBundle, b: InvariantBundle) -> BoundWitness:
    diff = abs(a.signature - b.signature)
    v = round_parity(diff, _dmu(a, b))
    return BoundWitness(v, SIGNATURE, f"|{a.signature} - ({b.signature})| = {diff}")


def _first_member(test) -> int:
    """Smallest n with the ratio in the n-th set, or N_MAX + 1.

    The sets are not nested (the last element moves with n), so a ratio
    outside the n-th set but inside an earlier one proves nothing.  What
    the theorems do give is: if the ratio lies in none of the sets for
    m < n, the distance is at least n.
    """
    for n in range(0, N_MAX + 1):
        if test(n):
            return n
    return N_MAX + 1


def _jones_value(r, parity_mismatch: bool) -> int:
    return _first_member(lambda n: in_jones_ratio_set(r, n, parity_mismatch))


def jones_bound(a: InvariantBundle, b: InvariantBundle) -> BoundWitness:
    if a.v_at_omega.is_zero() or b.v_at_omega.is_zero():
        return BoundWitness(0, JONES, "V(omega) vanishes", applicable=False)
    mismatch = (a.mu - b.mu) % 2 == 1
    r = a.v_at_omega / b.v_at_omega
    # the ratio sets are closed under inversion, so this is symmetric
    best = _jones_value(r, mismatch)
    v = round_parity(best, _dmu(a, b)) if best else 0
    return BoundWitness(v, JONES, f"V(L;w)/V(L';w) = {r!r}")


def _q_value(r) -> int:
    return _first_member(lambda n: in_q_ratio_set(r, n))


def q_bound(a: InvariantBundle, b: InvariantBundle) -> BoundWitness:
    if a.rho.is_zero() or b.rho.is_zero():
        return BoundWitness(0, Q, "rho vanishes", applicable=False)
    r = a.rho / b.rho
    best = _q_value(r)
    v = round_parity(best, _dmu(a, b)) if best else 0
    return BoundWitness(v, Q, f"rho(L)/rho(L') = {r!r}")


def arf_obstruction(a: InvariantBundle, b: InvariantBundle) -> BoundWitness:
    """If the link with more components is proper, d = mu difference forces
    the other one to be proper with the same Arf invariant."""
    if a.mu == b.mu:
        return BoundWitness(0, ARF, "equal component counts", applicable=False)
    hi, lo = (a, b) if a.mu > b.mu else (b, a)
    d = hi.mu - lo.mu
    if hi.arf is None:
        return BoundWitness(0, ARF, "larger link is not proper", applicable=False)
    if lo.arf is None:
        return BoundWitness(d + 2, ARF, "smaller link is not proper")
    if hi.arf != lo.arf:
        return BoundWitness(d + 2, ARF, f"Arf {hi.arf} vs {lo.arf}")
    return BoundWitness(0, ARF, f"Arf {hi.arf} on both sides")


def linking_arf_bound(a: InvariantBundle, b: InvariantBundle) -> BoundWitness:
    if a.mu != 2 or b.mu != 2:
        return BoundWitness(0, LINKING_ARF, "needs two 2-component links", applicable=False)
    if a.total_lk % 2 or b.total_lk % 2:
        return BoundWitness(0, LINKING_ARF, "odd linking number")
    if a.arf is None or b.arf is None or a.arf == b.arf:
        return BoundWitness(0, LINKING_ARF, "Arf invariants agree")
    if a.total_lk == b.total_lk:
        return BoundWitness(0, LINKING_ARF, "equal linking numbers")
    return BoundWitness(4, LINKING_ARF,
                        f"lk {a.total_lk} vs {b.total_lk}, Arf {a.arf} vs {b.arf}")


# -- Alexander polynomial tests ------------------------------------------------

def _int_coeffs(p: LaurentPolynomial):
    """Integer coefficient list of an integral-exponent polynomial, lowest first."""
    if p.is_zero():
        return []
    lo, hi = p.min_exp() // 2, p.max_exp() // 2
    return [p.coeff(2 * e) for e in range(lo, hi + 1)]


def _trim_mod(coeffs, k):
    c = [x % k for x in coeffs]
    while c and c[0] == 0:
        c.pop(0)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _f_fbar(f):
    n = len(f)
    out = [0] * (2 * n - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(f):
            out[i - j + n - 1] += x * y
    return out


def alexander_mod_k_test(alexander: LaurentPolynomial, k: int) -> bool:
    """Is Delta = +-t^r f(t) f(1/t) (mod k) for some f over Z/k?"""
    if k < 2:
        raise ValueError("k must be at least 2")
    coeffs = _int_coeffs(alexander)
    deg = max(len(coeffs) - 1, 0)
    m = deg // 2
    if k ** (m + 1) > SEARCH_BUDGET:
        raise SearchBudgetExceeded(f"(Z/{k})^{m + 1} exceeds the search envelope")
    targets = {_trim_mod(coeffs, k), _trim_mod([-x for x in coeffs], k)}
    for f in itertools.product(range(k), repeat=m + 1):
        if _trim_mod(_f_fbar(f), k) in targets:
            return True
    return False


def fox_milnor_test(alexander: LaurentPolynomial, bound: int = 3) -> Optional[bool]:
    """Necessary condition for Delta = f(t) f(1/t) over Z.

    False when the determinant is not a square (obstructed), True when a
    factor with coefficients in [-bound, bound] exists, None if inconclusive.
    """
    coeffs = _int_coeffs(alexander)
    det = abs(sum(c * (-1) ** i for i, c in enumerate(coeffs)))
    if math.isqrt(det) ** 2 != det:
        return False
    m = max(len(coeffs) - 1, 0) // 2
    target = tuple(coeffs)
    neg = tuple(-c for c in coeffs)
    for f in itertools.product(range(-bound, bound + 1), repeat=m + 1):
        g = _f_fbar(f)
        while g and g[0] == 0:
            g.pop(0)
        while g and g[-1] == 0:
            g.pop()
        if tuple(g) in (target, neg):
            return True
    return None


def alexander_bound(knot: InvariantBundle, other: InvariantBundle,
                    torus_k: Optional[int]) -> BoundWitness:
    """d(K, T'_{2,2k}) = 1 forces the Alexander congruence mod k.

    ``torus_k`` is the k for which ``other`` is the anti-parallel (2,2k)
    torus link (0 for the 2-component unlink, where the condition is the
    integral Fox-Milnor one), or None.
    """
    if torus_k is None:
        return BoundWitness(0, ALEXANDER, "not an anti-parallel torus link", applicable=False)
    if knot.mu != 1:
        return BoundWitness(0, ALEXANDER, "needs a knot", applicable=False)
    if torus_k == 0:
        res = fox_milnor_test(knot.alexander)
        if res is False:
            return BoundWitness(3, ALEXANDER, "determinant is not a square")
        return BoundWitness(0, ALEXANDER, "Fox-Milnor condition not excluded")
    if torus_k == 1:
        return BoundWitness(0, ALEXANDER, "mod 1 condition is empty")
    try:
        ok = alexander_mod_k_test(knot.alexander, torus_k)
    except SearchBudgetExceeded as exc:
        return BoundWitness(0, ALEXANDER, str(exc), applicable=False)
    if ok:
        return BoundWitness(0, ALEXANDER, f"factorization exists mod {torus_k}")
    return BoundWitness(3, ALEXANDER, f"no f(t)f(1/t) factorization mod {torus_k}")


# -- combiner ---------------------------------------------------------------------

def all_bounds(a: InvariantBundle, b: InvariantBundle,
               torus_k: Tuple[Optional[int], Optional[int]] = (None, None)) -> Dict[str, BoundWitness]:
    """Every single-method bound.  ``torus_k`` gives the anti-parallel torus
    parameter for a and b respectively (see ``alexander_bound``)."""
    out = {
        PARITY: parity_bound(a, b),
        TRIVIAL: distinct_bound(a, b),
        SIGNATURE: signature_bound(a, b),
        JONES: jones_bound(a, b),
        Q: q_bound(a, b),
        ARF: arf_obstruction(a, b),
        LINKING_ARF: linking_arf_bound(a, b),
    }
    alex = [BoundWitness(0, ALEXANDER, "", applicable=False)]
    if a.mu == 1 and b.mu == 2:
        alex.append(alexander_bound(a, b, torus_k[1]))
    if b.mu == 1 and a.mu == 2:
        alex.append(alexander_bound(b, a, torus_k[0]))
    out[ALEXANDER] = max(alex, key=lambda w: w.value)
    return out


_PRIORITY = [SIGNATURE, JONES, Q, ARF, LINKING_ARF, ALEXANDER, TRIVIAL, PARITY]


def best_lower_bound(a: InvariantBundle, b: InvariantBundle,
                     torus_k: Tuple[Optional[int], Optional[int]] = (None, None)) -> BoundWitness:
    bounds = all_bounds(a, b, torus_k)
    dmu = _dmu(a, b)
    best = None
    for name in _PRIORITY:
        w = bounds[name]
        v = round_parity(w.value, dmu) if w.value else dmu
        if best is None or v > best.value:
            best = BoundWitness(v, w.method, w.detail)
    return best


def method_bound(annotation: str, a: InvariantBundle, b: InvariantBundle,
                 torus_k: Tuple[Optional[int], Optional[int]] = (None, None)) -> BoundWitness:
    """The bound named by a table annotation (I..V)."""
    bounds = all_bounds(a, b, torus_k)
    return max((bounds[m] for m in ANNOTATION_METHODS[annotation]), key=lambda w: w.value)
