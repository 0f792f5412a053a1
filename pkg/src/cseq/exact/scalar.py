"""Exact scalars over the Gaussian rationals Q(i).

Real values are plain :class:`fractions.Fraction` objects. Values with a
nonzero imaginary part are :class:`GaussianRational`. Every arithmetic
result is normalized back to ``Fraction`` when its imaginary part vanishes,
so real-only computations never pay for the complex wrapper.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union


class GaussianRational:
    """``re + im*i`` with rational parts and ``im != 0``.

    Use :func:`make` (or arithmetic) rather than the constructor when the
    imaginary part might be zero.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction | int, im: Fraction | int):
        im = Fraction(im)
        if im == 0:
            raise ValueError("GaussianRational requires a nonzero imaginary part; use make()")
        self.re = Fraction(re)
        self.im = im

    # Fraction-compatible accessors
    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return True

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __pos__(self) -> GaussianRational:
        return self

    def __abs__(self) -> float:
        return abs(complex(self))

    def __add__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return make(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return make(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return make(o[0] - self.re, o[1] - self.im)

    def __mul__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return _divide((self.re, self.im), o)

    def __rtruediv__(self, other):
        o = _parts(other)
        if o is None:
            return NotImplemented
        return _divide(o, (self.re, self.im))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self ** -k)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return False
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational]


def _parts(x) -> tuple[Fraction, Fraction] | None:
    if isinstance(x, GaussianRational):
        return x.re, x.im
    if isinstance(x, (int, Fraction)):
        return Fraction(x), Fraction(0)
    return None


def _divide(num: tuple[Fraction, Fraction], den: tuple[Fraction, Fraction]) -> Scalar:
    a, b = num
    c, d = den
    norm = c * c + d * d
    if norm == 0:
        raise ZeroDivisionError("division by zero in Q(i)")
    return make((a * c + b * d) / norm, (b * c - a * d) / norm)


def make(re, im=0) -> Scalar:
    """Build the canonical scalar ``re + im*i``."""
    im = Fraction(im)
    if im == 0:
        return Fraction(re)
    return GaussianRational(re, im)


def as_scalar(x) -> Scalar:
    """Coerce ``int``, ``Fraction``, ``GaussianRational`` or ``str`` to a canonical scalar.

    Floats are rejected: they would silently smuggle rounding into exact code.
    """
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def real_part(x: Scalar) -> Fraction:
    return x.re if isinstance(x, GaussianRational) else Fraction(x)


def imag_part(x: Scalar) -> Fraction:
    return x.im if isinstance(x, GaussianRational) else Fraction(0)


def conjugate(x: Scalar) -> Scalar:
    return x.conjugate() if isinstance(x, GaussianRational) else x


def to_complex(x: Scalar) -> complex:
    return complex(x) if isinstance(x, GaussianRational) else complex(float(x), 0.0)


_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_IMAG = r"[+-]?(?:\d+(?:/\d+)?)?\s*i"
_SCALAR_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RATIONAL})\s*(?:(?P<im>[+-]\s*(?:\d+(?:/\d+)?)?\s*i))?"
    rf"|(?P<im_only>{_IMAG}))\s*$"
)


def _parse_rational(text: str) -> Fraction:
    text = text.replace(" ", "")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _parse_imag(text: str) -> Fraction:
    body = text.replace(" ", "")[:-1]  # strip the trailing "i"
    if body in ("", "+"):
        return Fraction(1)
    if body == "-":
        return Fraction(-1)
    return _parse_rational(body)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p"``, ``"p/q"``, ``"p/q+r/s i"``, ``"r/s i"`` (spaces optional).

    Raises ``ValueError`` on malformed text or a zero denominator.
    """
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"malformed scalar {text!r}")
    if m.group("im_only") is not None:
        return make(0, _parse_imag(m.group("im_only")))
    re_part = _parse_rational(m.group("re"))
    im_part = _parse_imag(m.group("im")) if m.group("im") else Fraction(0)
    return make(re_part, im_part)


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    """Inverse of :func:`parse_scalar`; round-trips exactly."""
    if not isinstance(x, GaussianRational):
        return _format_rational(Fraction(x))
    sign = "-" if x.im < 0 else "+"
    mag = _format_rational(abs(x.im))
    if x.re == 0:
        return f"{'-' if x.im < 0 else ''}{mag}i"
    return f"{_format_rational(x.re)}{sign}{mag}i"
