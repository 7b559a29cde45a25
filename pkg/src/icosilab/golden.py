"""Exact arithmetic in the golden field Q(sqrt 5).

A :class:`GoldenNum` is the real number ``x + y*sqrt(5)`` with rational
``x`` and ``y``.  Internally it is kept as three integers ``(p, q, d)`` with
value ``(p + q*sqrt(5)) / d``, ``d > 0`` and ``gcd(p, q, d) == 1``, which is
much faster than carrying two :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd, isqrt
import re

__all__ = [
    "GoldenNum",
    "ZERO",
    "ONE",
    "PHI",
    "phi",
    "SQRT5",
    "gadd",
    "gsub",
    "gmul",
    "gneg",
    "gdiv",
    "galois_conj",
    "gsign",
    "tau",
    "as_golden",
]


class GoldenNum:
    """Element ``x + y*sqrt(5)`` of Q(sqrt 5)."""

    __slots__ = ("_p", "_q", "_d")

    def __init__(self, x=0, y=0):
        x = Fraction(x)
        y = Fraction(y)
        d = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
        p = x.numerator * (d // x.denominator)
        q = y.numerator * (d // y.denominator)
        self._set(p, q, d)

    def _set(self, p, q, d):
        g = gcd(gcd(p, q), d)
        if g != 1:
            p //= g
            q //= g
            d //= g
        self._p = p
        self._q = q
        self._d = d

    @classmethod
    def _raw(cls, p, q, d):
        obj = object.__new__(cls)
        obj._set(p, q, d)
        return obj

    # -- components -------------------------------------------------------

    @property
    def x(self) -> Fraction:
        return Fraction(self._p, self._d)

    @property
    def y(self) -> Fraction:
        return Fraction(self._q, self._d)

    def is_rational(self) -> bool:
        return self._q == 0

    def to_tuple(self) -> tuple[int, int, int, int]:
        """Lossless ``(x_num, x_den, y_num, y_den)`` serialization."""
        x, y = self.x, self.y
        return (x.numerator, x.denominator, y.numerator, y.denominator)

    @classmethod
    def from_tuple(cls, t) -> "GoldenNum":
        xn, xd, yn, yd = t
        return cls(Fraction(xn, xd), Fraction(yn, yd))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = as_golden(other)
        if o is None:
            return NotImplemented
        return GoldenNum._raw(self._p * o._d + o._p * self._d,
                              self._q * o._d + o._q * self._d,
                              self._d * o._d)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_golden(other)
        if o is None:
            return NotImplemented
        return GoldenNum._raw(self._p * o._d - o._p * self._d,
                              self._q * o._d - o._q * self._d,
                              self._d * o._d)

    def __rsub__(self, other):
        o = as_golden(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = as_golden(other)
        if o is None:
            return NotImplemented
        p1, q1, p2, q2 = self._p, self._q, o._p, o._q
        return GoldenNum._raw(p1 * p2 + 5 * q1 * q2, p1 * q2 + p2 * q1,
                              self._d * o._d)

    __rmul__ = __mul__

    def __neg__(self):
        return GoldenNum._raw(-self._p, -self._q, self._d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def inverse(self) -> "GoldenNum":
        # 1/(p + q r) = d (p - q r) / (p^2 - 5 q^2)
        n = self._p * self._p - 5 * self._q * self._q
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        p, q = self._p * self._d, -self._q * self._d
        if n < 0:
            n, p, q = -n, -p, -q
        return GoldenNum._raw(p, q, n)

    def __truediv__(self, other):
        o = as_golden(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_golden(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GoldenNum":
        return GoldenNum._raw(self._p, -self._q, self._d)

    def field_norm(self) -> Fraction:
        """``x^2 - 5 y^2``, the product with the Galois conjugate."""
        return Fraction(self._p * self._p - 5 * self._q * self._q, self._d * self._d)

    def sign(self) -> int:
        p, q = self._p, self._q
        if p >= 0 and q >= 0:
            return 1 if (p or q) else 0
        if p <= 0 and q <= 0:
            return -1
        # opposite signs: the term of larger magnitude wins
        pp, qq = p * p, 5 * q * q
        if pp > qq:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    # -- comparison -------------------------------------------------------

    def _key(self):
        return (self._p, self._q, self._d)

    def __eq__(self, other):
        o = as_golden(other)
        if o is None:
            return NotImplemented
        return self._key() == o._key()

    def __hash__(self):
        if self._q == 0:
            # agree with hash(int) / hash(Fraction) for rational values
            return hash(Fraction(self._p, self._d))
        return hash(self._key())

    def _cmp(self, other):
        o = as_golden(other)
        if o is None:
            return NotImplemented
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __bool__(self):
        return bool(self._p or self._q)

    # -- conversion -------------------------------------------------------

    def __float__(self):
        return float(self.to_decimal(40))

    def to_decimal(self, prec: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = prec + 10
            val = (Decimal(self._p) + Decimal(self._q) * Decimal(5).sqrt()) / Decimal(self._d)
            ctx.prec = prec
            return +val

    def __str__(self):
        y = self.y
        sep = "-" if y < 0 else "+"
        return f"{self.x}{sep}{abs(y)}√5"

    def __repr__(self):
        return f"GoldenNum({str(self.x)!r}, {str(self.y)!r})"

    @classmethod
    def parse(cls, text: str) -> "GoldenNum":
        """Inverse of ``str``: parses ``"x+y√5"`` / ``"x-y√5"``."""
        m = _TEXT_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"not a golden number: {text!r}")
        y = Fraction(m.group(3))
        return cls(Fraction(m.group(1)), -y if m.group(2) == "-" else y)


_TEXT_RE = re.compile(r"(-?\d+(?:/\d+)?)([+-])(\d+(?:/\d+)?)√5")


def as_golden(v):
    """Coerce ints and Fractions to GoldenNum; ``None`` for anything else."""
    if isinstance(v, GoldenNum):
        return v
    if isinstance(v, int):
        return GoldenNum._raw(v, 0, 1)
    if isinstance(v, Fraction):
        return GoldenNum._raw(v.numerator, 0, v.denominator)
    return None


ZERO = GoldenNum(0)
ONE = GoldenNum(1)
SQRT5 = GoldenNum(0, 1)
PHI = GoldenNum(Fraction(1, 2), Fraction(1, 2))
"""Big golden ratio (sqrt5 + 1)/2."""
phi = GoldenNum(Fraction(-1, 2), Fraction(1, 2))
"""Little golden ratio (sqrt5 - 1)/2 = 1/PHI."""


def gadd(a, b):
    return as_golden(a) + as_golden(b)


def gsub(a, b):
    return as_golden(a) - as_golden(b)


def gmul(a, b):
    return as_golden(a) * as_golden(b)


def gneg(a):
    return -as_golden(a)


def gdiv(a, b):
    """Exact quotient; raises ``ZeroDivisionError`` when ``b == 0``."""
    return as_golden(a) / as_golden(b)


def galois_conj(a):
    """The involution sqrt5 -> -sqrt5."""
    return as_golden(a).conj()


def gsign(a) -> int:
    """Exact sign of ``x + y*sqrt(5)``; never touches floating point."""
    return as_golden(a).sign()


def tau(a) -> Fraction:
    """Rational trace ``x + y`` used by the icosian norm."""
    a = as_golden(a)
    return Fraction(a._p + a._q, a._d)


def floor_sqrt(r: Fraction) -> int:
    """``floor(sqrt(r))`` for a non-negative rational, exactly."""
    if r < 0:
        raise ValueError("negative argument")
    return isqrt(r.numerator * r.denominator) // r.denominator
