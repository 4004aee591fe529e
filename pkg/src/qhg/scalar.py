"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` rational."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["Scalar", "ZERO", "ONE", "I", "as_scalar"]

_Q0 = mpq(0)
_Q1 = mpq(1)


def _to_mpq(x) -> mpq:
    if isinstance(x, str):
        return mpq(Fraction(x.strip()))
    if isinstance(x, (int, Rational)) or type(x).__name__ == "mpq":
        return mpq(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use a Fraction or a 'num/den' string")
    return mpq(x)


class Scalar:
    """An element of Q(i).

    Both parts are ``gmpy2.mpq`` values, which are always stored reduced with
    positive denominators, so equality and hashing are structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_Q0) else _to_mpq(re)
        self.im = im if type(im) is type(_Q0) else _to_mpq(im)

    @classmethod
    def _raw(cls, re, im) -> Scalar:
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Parse a real rational such as ``"-3/4"``. Complex values go through :meth:`from_json`."""
        return cls(Fraction(text))

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other)
        if not self.im and not other.im:
            return Scalar._raw(self.re + other.re, _Q0)
        return Scalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other)
        if not self.im and not other.im:
            return Scalar._raw(self.re - other.re, _Q0)
        return Scalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return Scalar._raw(a * c, _Q0)
            return Scalar._raw(a * c, a * d)
        if not d:
            return Scalar._raw(a * c, b * c)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = as_scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def inverse(self) -> Scalar:
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero Scalar")
            return Scalar._raw(1 / a, _Q0)
        n = a * a + b * b
        return Scalar._raw(a / n, -b / n)

    def conjugate(self) -> Scalar:
        if not self.im:
            return self
        return Scalar._raw(self.re, -self.im)

    def norm2(self):
        """``|z|^2`` as an mpq."""
        return self.re * self.re + self.im * self.im

    # predicates -----------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        if type(other) is not Scalar:
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((int(self.re.numerator), int(self.re.denominator),
                     int(self.im.numerator), int(self.im.denominator)))

    # presentation ---------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.im:
            return _qstr(self.re)
        if not self.re:
            return f"{_qstr(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{_qstr(self.re)}{sign}{_qstr(abs(self.im))}i"

    def to_json(self) -> dict:
        return {"re": _qfrac(self.re), "im": _qfrac(self.im)}

    @classmethod
    def from_json(cls, obj) -> Scalar:
        if isinstance(obj, dict):
            return cls(Fraction(obj.get("re", "0")), Fraction(obj.get("im", "0")))
        if isinstance(obj, (int, str)):
            return cls(Fraction(obj) if isinstance(obj, str) else obj)
        raise TypeError(f"cannot decode scalar from {obj!r}")

    def __reduce__(self):
        return (Scalar, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                         Fraction(int(self.im.numerator), int(self.im.denominator))))


def _qstr(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _qfrac(q) -> str:
    return f"{q.numerator}/{q.denominator}"


ZERO = Scalar._raw(_Q0, _Q0)
ONE = Scalar._raw(_Q1, _Q0)
I = Scalar._raw(_Q0, _Q1)


def as_scalar(x) -> Scalar:
    if type(x) is Scalar:
        return x
    if isinstance(x, complex):
        raise TypeError("complex floats are not accepted")
    if isinstance(x, tuple) and len(x) == 2:
        return Scalar(x[0], x[1])
    return Scalar(x)
