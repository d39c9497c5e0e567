"""Exact arithmetic in Q and Q(i).

``Rational`` is the stdlib ``fractions.Fraction``: it already guarantees
lowest terms, a positive denominator, and exact field arithmetic, and it
parses/prints the "p/q" form used throughout this package.

``GaussianRational`` adds the imaginary unit on top of that, giving exact
arithmetic in Q(i).  Powers of i cycle with period 4, so integer powers of
any size reduce exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

__all__ = ["Rational", "GaussianRational", "i_pow", "parse_rational", "parse_gaussian"]

_GAUSSIAN_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)\s*\*\s*i\s*$"
)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    @staticmethod
    def from_value(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_as_fraction(x))

    def __add__(self, other) -> "GaussianRational":
        o = GaussianRational.from_value(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussianRational":
        return self + (-GaussianRational.from_value(other))

    def __rsub__(self, other) -> "GaussianRational":
        return GaussianRational.from_value(other) + (-self)

    def __mul__(self, other) -> "GaussianRational":
        o = GaussianRational.from_value(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        o = GaussianRational.from_value(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other) -> "GaussianRational":
        return GaussianRational.from_value(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im < 0:
            return f"{self.re}-{-self.im}*i"
        return f"{self.re}+{self.im}*i"


# i^k for k = 0, 1, 2, 3; arbitrary integers reduce modulo 4
_I_CYCLE = (
    GaussianRational(Fraction(1), Fraction(0)),
    GaussianRational(Fraction(0), Fraction(1)),
    GaussianRational(Fraction(-1), Fraction(0)),
    GaussianRational(Fraction(0), Fraction(-1)),
)


def i_pow(k: int) -> GaussianRational:
    """Exact i**k for any integer k (negative exponents allowed)."""
    return _I_CYCLE[k % 4]


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" (or "p") into an exact Fraction."""
    return Fraction(s.strip())


def parse_gaussian(s: str) -> GaussianRational:
    """Parse the canonical "p/q+r/s*i" form produced by ``str``.

    A bare rational string is accepted as a real Gaussian rational.
    """
    m = _GAUSSIAN_RE.match(s)
    if m is not None:
        im = Fraction(m.group("im"))
        if m.group("sign") == "-":
            im = -im
        return GaussianRational(Fraction(m.group("re")), im)
    try:
        return GaussianRational(Fraction(s.strip()))
    except ValueError:
        raise ValueError(f"not a Gaussian rational: {s!r}") from None
