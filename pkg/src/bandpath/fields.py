"""Exact arithmetic in Q(zeta_12) and Q(sqrt 5), plus the ratio-set tests.

``CycloValue`` holds coordinates in the basis 1, z, z^2, z^3 where
z = e^{i pi/6} satisfies z^4 = z^2 - 1.  ``QuadValue`` is a + b*sqrt(5).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Tuple

from .poly import LaurentPolynomial, NonInvertible, HalfIntegerExponent

N_MAX = 12


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class CycloValue:
    __slots__ = ("c",)

    def __init__(self, coords: Iterable = (0, 0, 0, 0)):
        c = tuple(_frac(x) for x in coords)
        if len(c) != 4:
            raise ValueError("need 4 coordinates")
        self.c = c

    @classmethod
    def from_int(cls, n) -> "CycloValue":
        return cls((n, 0, 0, 0))

    @classmethod
    def zeta_power(cls, k: int) -> "CycloValue":
        return _zeta_pow(k % 12)

    def __add__(self, o):
        if not isinstance(o, CycloValue):
            o = CycloValue.from_int(o)
        return CycloValue(a + b for a, b in zip(self.c, o.c))

    __radd__ = __add__

    def __neg__(self):
        return CycloValue(-a for a in self.c)

    def __sub__(self, o):
        if not isinstance(o, CycloValue):
            o = CycloValue.from_int(o)
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if not isinstance(o, CycloValue):
            o = _frac(o)
            return CycloValue(a * o for a in self.c)
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        # reduce with z^4 = z^2 - 1, from the top down
        for k in (6, 5, 4):
            v = prod[k]
            if v:
                prod[k] = Fraction(0)
                prod[k - 2] += v
                prod[k - 4] -= v
        return CycloValue(prod[:4])

    __rmul__ = __mul__

    def _matrix(self):
        # columns are self * z^j for j = 0..3
        cols = []
        cur = self
        z = _zeta_pow(1)
        for _ in range(4):
            cols.append(cur.c)
            cur = cur * z
        return [[cols[j][i] for j in range(4)] for i in range(4)]

    def inverse(self) -> "CycloValue":
        if self.is_zero():
            raise NonInvertible("zero in Q(zeta_12)")
        m = self._matrix()
        # solve m x = e0 by Gauss-Jordan over Q
        aug = [row[:] + [Fraction(1 if i == 0 else 0)] for i, row in enumerate(m)]
        n = 4
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return CycloValue(aug[i][n] for i in range(n))

    def __truediv__(self, o):
        if not isinstance(o, CycloValue):
            o = CycloValue.from_int(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return CycloValue.from_int(o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloValue.from_int(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, o):
        if isinstance(o, int):
            o = CycloValue.from_int(o)
        if not isinstance(o, CycloValue):
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(1j * cmath.pi / 6)
        return sum(float(a) * z ** i for i, a in enumerate(self.c))

    def to_json(self):
        return [str(a) for a in self.c]

    def __repr__(self):
        return "CycloValue(" + ", ".join(str(a) for a in self.c) + ")"


@lru_cache(maxsize=None)
def _zeta_pow(k: int) -> CycloValue:
    if k < 4:
        c = [0, 0, 0, 0]
        c[k] = 1
        return CycloValue(c)
    return _zeta_pow(k - 1) * _zeta_pow(1)


ZETA = _zeta_pow(1)
OMEGA = _zeta_pow(2)
I_UNIT = _zeta_pow(3)
SQRT3 = ZETA + _zeta_pow(11)
I_SQRT3 = I_UNIT * SQRT3
C_ONE = CycloValue.from_int(1)


class QuadValue:
    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _frac(a)
        self.b = _frac(b)

    def __add__(self, o):
        if not isinstance(o, QuadValue):
            o = QuadValue(o)
        return QuadValue(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadValue(-self.a, -self.b)

    def __sub__(self, o):
        if not isinstance(o, QuadValue):
            o = QuadValue(o)
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if not isinstance(o, QuadValue):
            o = _frac(o)
            return QuadValue(self.a * o, self.b * o)
        return QuadValue(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> "QuadValue":
        n = self.norm()
        if n == 0:
            raise NonInvertible("zero in Q(sqrt 5)")
        return QuadValue(self.a / n, -self.b / n)

    def __truediv__(self, o):
        if not isinstance(o, QuadValue):
            o = QuadValue(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return QuadValue(o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadValue(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, o):
        if isinstance(o, int):
            o = QuadValue(o)
        if not isinstance(o, QuadValue):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def to_json(self):
        return [str(self.a), str(self.b)]

    def __repr__(self):
        return f"QuadValue({self.a} + {self.b}*sqrt5)"


SQRT5 = QuadValue(0, 1)
GOLDEN_INV = QuadValue(Fraction(-1, 2), Fraction(1, 2))  # (sqrt5 - 1)/2


def poly_eval_cyclo(p: LaurentPolynomial, x: CycloValue, sqrt_x: CycloValue | None = None) -> CycloValue:
    if x.is_zero() and p.terms and p.min_exp() < 0:
        raise NonInvertible("negative exponent at zero")
    inv = x.inverse() if not x.is_zero() else None
    sinv = sqrt_x.inverse() if sqrt_x is not None and not sqrt_x.is_zero() else None
    return p.evaluate(x, inv, sqrt_x, sinv, one=C_ONE)


def poly_eval_quad(p: LaurentPolynomial, x: QuadValue) -> QuadValue:
    if p.has_half_exponents():
        raise HalfIntegerExponent(str(p))
    if x.is_zero() and p.terms and p.min_exp() < 0:
        raise NonInvertible("negative exponent at zero")
    inv = x.inverse() if not x.is_zero() else None
    return p.evaluate(x, inv, one=QuadValue(1))


@lru_cache(maxsize=None)
def jones_ratio_set(n: int, parity_mismatch: bool) -> Tuple[CycloValue, ...]:
    out = []
    s3n = SQRT3 ** n
    if parity_mismatch:
        for k in range(n):
            for e in (k, -k):
                v = I_UNIT * I_SQRT3 ** e
                out += [v, -v]
        out += [-s3n, -s3n.inverse()]
    else:
        for k in range(n):
            for e in (k, -k):
                v = I_SQRT3 ** e
                out += [v, -v]
        out += [s3n, s3n.inverse()]
    return tuple(dict.fromkeys(out))


def in_jones_ratio_set(r: CycloValue, n: int, parity_mismatch: bool) -> bool:
    if n > N_MAX:
        raise ValueError("n exceeds N_MAX")
    return r in jones_ratio_set(n, parity_mismatch)


@lru_cache(maxsize=None)
def q_ratio_set(n: int) -> Tuple[QuadValue, ...]:
    out = []
    for k in range(n):
        for e in (k, -k):
            v = SQRT5 ** e
            out += [v, -v]
    out += [SQRT5 ** n, SQRT5 ** (-n)]
    return tuple(dict.fromkeys(out))


def in_q_ratio_set(r: QuadValue, n: int) -> bool:
    if n > N_MAX:
        raise ValueError("n exceeds N_MAX")
    return r in q_ratio_set(n)
