"""Normalized rational functions in the two commuting variables x = xi_plus
and y = xi_minus, with Gaussian-rational coefficients.

Canonical form: gcd(num, den) = 1 and the denominator's lex-leading
coefficient (x ordered before y) is 1. Equality is then structural.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import (
    ONE_PLUS_XY,
    BiPolynomial,
    exact_div,
    poly_gcd,
)
from .scalars import GaussianRational


class EvaluationError(ValueError):
    """Raised when numeric evaluation hits a (near-)vanishing denominator."""


def _coerce_poly_scalar(value):
    if isinstance(value, BiPolynomial):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return BiPolynomial.const(value)
    return None


class BiRationalFn:
    """Exact rational function num/den in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPolynomial, den: BiPolynomial, _canonical=False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("BiRationalFn is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_poly(p: BiPolynomial) -> "BiRationalFn":
        return BiRationalFn(p, BiPolynomial.const(1), _canonical=True)

    @staticmethod
    def const(c) -> "BiRationalFn":
        return BiRationalFn.from_poly(BiPolynomial.const(c))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"not a constant rational function: {self}")
        return self.num.constant_value() / self.den.constant_value()

    def as_fraction(self) -> Fraction:
        """The value of a constant, real rational function."""
        return self.constant_value().real_fraction()

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiRationalFn):
            return other
        p = _coerce_poly_scalar(other)
        if p is None:
            return None
        return BiRationalFn.from_poly(p)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        g = poly_gcd(self.den, o.den)
        if g.is_constant():
            num = self.num * o.den + o.num * self.den
            den = self.den * o.den
        else:
            da = exact_div(self.den, g)
            db = exact_div(o.den, g)
            num = self.num * db + o.num * da
            den = da * o.den
        return BiRationalFn(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return BiRationalFn(-self.num, self.den, _canonical=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RF_ZERO
        # cross-cancel so the product of reduced parts is already coprime
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num if g1.is_constant() else exact_div(self.num, g1)
        d2 = o.den if g1.is_constant() else exact_div(o.den, g1)
        n2 = o.num if g2.is_constant() else exact_div(o.num, g2)
        d1 = self.den if g2.is_constant() else exact_div(self.den, g2)
        num = n1 * n2
        den = d1 * d2
        num, den = _scale_monic(num, den)
        return BiRationalFn(num, den, _canonical=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def reciprocal(self) -> "BiRationalFn":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of the zero function")
        num, den = _scale_monic(self.den, self.num)
        return BiRationalFn(num, den, _canonical=True)

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        result = RF_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    # -- calculus and involution --------------------------------------

    def d_plus(self) -> "BiRationalFn":
        """Exact derivative with respect to x (i.e. xi_plus)."""
        num = self.num.deriv_x() * self.den - self.num * self.den.deriv_x()
        if num.is_zero():
            return RF_ZERO
        return BiRationalFn(num, self.den * self.den)

    def d_minus(self) -> "BiRationalFn":
        """Exact derivative with respect to y (i.e. xi_minus)."""
        num = self.num.deriv_y() * self.den - self.num * self.den.deriv_y()
        if num.is_zero():
            return RF_ZERO
        return BiRationalFn(num, self.den * self.den)

    def involution(self) -> "BiRationalFn":
        """Swap x and y and conjugate coefficients (field conjugation on
        the real slice y = conj(x))."""
        num = self.num.swap_conjugate()
        den = self.den.swap_conjugate()
        num, den = _scale_monic(num, den)
        return BiRationalFn(num, den, _canonical=True)

    def eval_numeric(self, xi_plus: complex) -> complex:
        """Evaluate on the real slice: x = xi_plus, y = conj(xi_plus)."""
        xv = complex(xi_plus)
        yv = xv.conjugate()
        nv = self.num.eval(xv, yv)
        dv = self.den.eval(xv, yv)
        if abs(dv) < 1e-12 * (1.0 + abs(nv)):
            raise EvaluationError(
                f"denominator vanishes near xi_plus={xi_plus!r}"
            )
        return nv / dv

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.den == BiPolynomial.const(1):
            return f"({self.num!r})"
        return f"({self.num!r}) / ({self.den!r})"


def _scale_monic(num: BiPolynomial, den: BiPolynomial):
    _, lc = den.lex_leading()
    if lc == GaussianRational(1):
        return num, den
    inv = lc.inverse()
    return num.scale(inv), den.scale(inv)


def _normalize(num: BiPolynomial, den: BiPolynomial):
    if num.is_zero():
        return BiPolynomial.zero(), BiPolynomial.const(1)
    g = poly_gcd(num, den)
    if not g.is_constant():
        num = exact_div(num, g)
        den = exact_div(den, g)
    return _scale_monic(num, den)


RF_ZERO = BiRationalFn.from_poly(BiPolynomial.zero())
RF_ONE = BiRationalFn.from_poly(BiPolynomial.const(1))
RF_X = BiRationalFn.from_poly(BiPolynomial.var_x())
RF_Y = BiRationalFn.from_poly(BiPolynomial.var_y())
RF_I = BiRationalFn.const(GaussianRational(0, 1))
RF_ONE_PLUS_XY = BiRationalFn.from_poly(ONE_PLUS_XY)
