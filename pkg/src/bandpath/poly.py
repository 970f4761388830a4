"""Laurent polynomials with integer coefficients and half-integer exponents.

Exponents are stored doubled, so ``t^(3/2)`` is key 3.  Instances are
immutable and hashable so they can sit in memo tables.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple


class HalfIntegerExponent(ValueError):
    pass


class NonInvertible(ZeroDivisionError):
    pass


class LaurentPolynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        acc: Dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, doubled_exp: int) -> "LaurentPolynomial":
        return cls({doubled_exp: c})

    @classmethod
    def _raw(cls, terms: Dict[int, int]) -> "LaurentPolynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def span(self) -> int:
        """Doubled breadth, max exponent minus min exponent."""
        return self.max_exp() - self.min_exp() if self._terms else 0

    def has_half_exponents(self) -> bool:
        return any(e % 2 for e in self._terms)

    def coeff(self, doubled_exp: int) -> int:
        return self._terms.get(doubled_exp, 0)

    # ring operations
    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.const(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPolynomial._raw({})
            return LaurentPolynomial._raw({e: c * other for e, c in self._terms.items()})
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise NonInvertible("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NonInvertible("coefficient is not a unit")
            return LaurentPolynomial._raw({-e * (-n): c ** (-n)})
        result = LaurentPolynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, doubled: int) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e + doubled: c for e, c in self._terms.items()})

    def divmod_exact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises ValueError when other does not divide self."""
        if other.is_zero():
            raise NonInvertible("division by zero polynomial")
        rem = dict(self._terms)
        q: Dict[int, int] = {}
        dtop = other.max_exp()
        dlead = other._terms[dtop]
        dlow = other.min_exp()
        while rem:
            top = max(rem)
            if top - dtop < min(rem) - dlow:
                raise ValueError("inexact polynomial division")
            c, r = divmod(rem[top], dlead)
            if r:
                raise ValueError("inexact polynomial division")
            shift = top - dtop
            q[shift] = c
            for e, v in other._terms.items():
                k = e + shift
                nv = rem.get(k, 0) - c * v
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return LaurentPolynomial._raw(q)

    def __floordiv__(self, other):
        return self.divmod_exact(other)

    def invert_variable(self) -> "LaurentPolynomial":
        """Substitute t -> 1/t."""
        return LaurentPolynomial._raw({-e: c for e, c in self._terms.items()})

    def scale_variable(self, k: int) -> "LaurentPolynomial":
        """Substitute t -> t^k (k may be negative)."""
        return LaurentPolynomial._raw({e * k: c for e, c in self._terms.items()})

    def substitute(self, value: "LaurentPolynomial", value_inv: "LaurentPolynomial",
                   half: bool = False) -> "LaurentPolynomial":
        """Compose with a polynomial; ``value`` replaces t (or t^(1/2) when half)."""
        out = LaurentPolynomial.const(0)
        for e, c in self._terms.items():
            if half:
                k = e
            else:
                if e % 2:
                    raise HalfIntegerExponent(str(self))
                k = e // 2
            out = out + c * (value ** k if k >= 0 else value_inv ** (-k))
        return out

    def evaluate(self, x, x_inv=None, sqrt_x=None, sqrt_x_inv=None, one=None):
        """Evaluate at a ring element; sqrt_x is needed for half exponents."""
        if not self._terms:
            return (one if one is not None else 1) * 0
        if one is None:
            one = x ** 0 if hasattr(x, "__pow__") else 1
        base, base_inv, step = x, x_inv, 2
        if self.has_half_exponents():
            if sqrt_x is None:
                raise HalfIntegerExponent(str(self))
            base, base_inv, step = sqrt_x, sqrt_x_inv, 1
        total = one * 0
        cache = {}
        for e, c in self._terms.items():
            k = e // step
            if k not in cache:
                if k >= 0:
                    cache[k] = _power(base, k, one)
                else:
                    if base_inv is None:
                        base_inv = one / base
                    cache[k] = _power(base_inv, -k, one)
            total = total + cache[k] * c
        return total

    def to_fraction_coeffs(self):
        return {e: Fraction(c) for e, c in self._terms.items()}

    # comparison and hashing
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.const(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self._terms.items()))

    # formatting
    def to_terms_string(self, var: str = "t") -> str:
        """Golden-file form: ``c*var^(p/2)`` terms in ascending order."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{var}^({e}/2)" for e, c in sorted(self._terms.items()))

    @classmethod
    def from_terms_string(cls, text: str) -> "LaurentPolynomial":
        text = text.strip()
        if text == "0":
            return cls()
        terms = {}
        for part in text.split("+"):
            m = re.fullmatch(r"\s*(-?\d+)\*\w+\^\((-?\d+)/2\)\s*", part)
            if not m:
                raise ValueError(f"bad term {part!r}")
            terms[int(m.group(2))] = terms.get(int(m.group(2)), 0) + int(m.group(1))
        return cls(terms)

    def pretty(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 2:
                mono = var
            elif e % 2 == 0:
                mono = f"{var}^{e // 2}"
            else:
                mono = f"{var}^({e}/2)"
            if mono == "":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPolynomial({self.pretty()})"

    __str__ = pretty


def _power(b, k, one):
    result = one
    while k:
        if k & 1:
            result = result * b
        b = b * b
        k >>= 1
    return result


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.const(1)
T = LaurentPolynomial.monomial(1, 2)
T_INV = LaurentPolynomial.monomial(1, -2)
T_HALF = LaurentPolynomial.monomial(1, 1)
T_HALF_INV = LaurentPolynomial.monomial(1, -1)
