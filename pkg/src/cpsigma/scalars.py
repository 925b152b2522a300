"""Exact Gaussian-rational scalars: a + b*i with a, b arbitrary-precision rationals.

Components are stored as gmpy2.mpq (hash-compatible with fractions.Fraction,
always in lowest terms with positive denominator); fractions.Fraction and int
inputs are accepted everywhere.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

_MPQ_ZERO = mpq(0)


def _gr(re, im) -> "GaussianRational":
    """Internal fast constructor; arguments must already be mpq."""
    obj = object.__new__(GaussianRational)
    object.__setattr__(obj, "re", re)
    object.__setattr__(obj, "im", im)
    return obj


class GaussianRational:
    """Immutable complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return _gr(mpq(other), _MPQ_ZERO)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _gr(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _gr(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _gr(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.im == 0 and o.im == 0:
            return _gr(self.re * o.re, _MPQ_ZERO)
        return _gr(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.im == 0 and o.im == 0:
            if o.re == 0:
                raise ZeroDivisionError("division by zero GaussianRational")
            return _gr(self.re / o.re, _MPQ_ZERO)
        n2 = o.re * o.re + o.im * o.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return _gr(
            (self.re * o.re + self.im * o.im) / n2,
            (self.im * o.re - self.re * o.im) / n2,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return _gr(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        if self.im == 0:
            return self
        return _gr(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        return GR_ONE / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def to_complex(self) -> complex:
        return float(self.re) + 1j * float(self.im)

    def real_fraction(self) -> Fraction:
        if self.im != 0:
            raise ValueError(f"nonzero imaginary part: {self}")
        return Fraction(self.re)

    def __repr__(self):
        if self.im == 0:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)
