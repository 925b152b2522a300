"""Exact Krawtchouk polynomial evaluation.

K_j(k; p, N) is the terminating hypergeometric sum
    sum_{r=0}^{min(j,k)} [ (-j)_r (-k)_r / ((-N)_r r!) ] * (1/p)^r,
evaluated either at an exact rational p in (0,1) or symbolically with
p = xy / (1 + xy), i.e. 1/p = (1 + xy)/(xy).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import ONE_PLUS_XY, BiPolynomial
from .rational import BiRationalFn


def _check_indices(j: int, k: int, n: int):
    if n < 1:
        raise ValueError("N must be >= 1")
    if not (0 <= j <= n and 0 <= k <= n):
        raise ValueError(f"indices out of range: j={j}, k={k}, N={n}")


def _sum_coefficients(j: int, k: int, n: int):
    """Rational coefficients of (1/p)^r, r = 0..min(j,k)."""
    coeffs = []
    c = Fraction(1)
    coeffs.append(c)
    for r in range(min(j, k)):
        # multiply by the next Pochhammer ratio: never zero since r < min(j,k) <= N
        c *= Fraction((-j + r) * (-k + r), (-n + r) * (r + 1))
        coeffs.append(c)
    return coeffs


def kraw_sum(j: int, k: int, n: int, p: Fraction) -> Fraction:
    """K_j(k; p, N) from the terminating hypergeometric sum, exact."""
    _check_indices(j, k, n)
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    inv_p = 1 / p
    total = Fraction(0)
    power = Fraction(1)
    for c in _sum_coefficients(j, k, n):
        total += c * power
        power *= inv_p
    return total


def kraw_recurrence(j: int, k: int, n: int, p: Fraction) -> Fraction:
    """K_j(k; p, N) via the three-term recurrence in the degree j:

        p(N-m) K_{m+1} = [p(N-m) + m(1-p) - k] K_m - m(1-p) K_{m-1}

    Independent of kraw_sum; the two are cross-checked in the test suite.
    """
    _check_indices(j, k, n)
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    prev = Fraction(1)  # K_0
    if j == 0:
        return prev
    cur = 1 - Fraction(k) / (n * p)  # K_1
    for m in range(1, j):
        nxt = ((p * (n - m) + m * (1 - p) - k) * cur - m * (1 - p) * prev) / (
            p * (n - m)
        )
        prev, cur = cur, nxt
    return cur


def kraw_symbolic(j: int, k: int, n: int) -> BiRationalFn:
    """K_j(k; p, N) with 1/p replaced by the exact rational function
    (1 + xy)/(xy); the denominator of the result divides (xy)^min(j,k)."""
    _check_indices(j, k, n)
    coeffs = _sum_coefficients(j, k, n)
    m = len(coeffs) - 1
    # sum c_r ((1+xy)/xy)^r over a common denominator (xy)^m
    num = BiPolynomial.zero()
    xy = BiPolynomial.monomial(1, 1)
    for r, c in enumerate(coeffs):
        num = num + (ONE_PLUS_XY ** r * xy ** (m - r)).scale(c)
    return BiRationalFn(num, xy ** m)


@dataclass(frozen=True)
class KrawtchoukQuery:
    """One evaluation request; p is a Fraction in (0,1) or None for the
    symbolic value xy/(1+xy)."""

    j: int
    k: int
    n: int
    p: Fraction | None = None

    def __post_init__(self):
        _check_indices(self.j, self.k, self.n)
        if self.p is not None and not 0 < self.p < 1:
            raise ValueError("p must lie strictly between 0 and 1")

    def evaluate(self):
        if self.p is None:
            return kraw_symbolic(self.j, self.k, self.n)
        return kraw_sum(self.j, self.k, self.n, self.p)
