"""Exact Jones evaluations at the sixth and fourth roots of unity, and Arf.

V(L; omega) is taken with omega = e^{i pi/3} and t^{1/2} = e^{i pi/6}.

V(L; i) needs t^{1/2} = e^{i pi/4}, which lives outside Q(zeta_12) when L
has an even number of components.  We therefore store the rotated value

    v_i(L) = e^{-i pi (mu-1)/4} V(L; i),

which always lies in Q(i).  Murakami's identity V(L; i) = (-sqrt2)^(mu-1)
(-1)^Arf(L) becomes v_i(L) = (i - 1)^(mu-1) (-1)^Arf(L), and v_i(L) = 0
exactly when L is not proper.  For knots v_i is V(K; i) itself.
"""
from __future__ import annotations

from typing import Optional

from ..codec import LinkDiagram, is_proper
from ..fields import C_ONE, CycloValue, I_UNIT, OMEGA, ZETA, poly_eval_cyclo
from ..poly import LaurentPolynomial


def v_at_omega_from(jones: LaurentPolynomial) -> CycloValue:
    return poly_eval_cyclo(jones, OMEGA, ZETA)


def v_at_i_from(jones: LaurentPolynomial, mu: int) -> CycloValue:
    total = CycloValue()
    for e, c in jones.items():
        # t^(e/2) at t^(1/2) = e^{i pi/4}, times e^{-i pi (mu-1)/4}
        k = e - (mu - 1)
        if k % 2:
            raise ValueError("exponent parity does not match the component count")
        total = total + CycloValue.zeta_power(3 * (k // 2)) * c
    return total


def arf_from_v_at_i(v: CycloValue, mu: int) -> Optional[int]:
    """0/1, or None when the value vanishes (link not proper)."""
    if v.is_zero():
        return None
    unit = (I_UNIT - C_ONE) ** (mu - 1)
    if v == unit:
        return 0
    if v == -unit:
        return 1
    raise ArithmeticError(f"V(i) = {v!r} violates Murakami's identity")


def arf_from_conway(conway: LaurentPolynomial) -> int:
    """Arf of a knot: a_2 mod 2."""
    return conway.coeff(4) % 2


def arf(d: LinkDiagram, jones: Optional[LaurentPolynomial] = None) -> Optional[int]:
    if not is_proper(d):
        return None
    if jones is None:
        from .jones import jones as _jones
        jones = _jones(d)
    return arf_from_v_at_i(v_at_i_from(jones, d.mu), d.mu)
