"""Adaptive Gauss-Legendre quadrature on a finite interval.

All the model integrands depend on the plane point only through u = r^2,
so improper plane integrals reduce to one radial integral which is
compactified with t = u / (1 + u) before being handed to this routine.
Summation order is deterministic (leftmost-interval first), so repeated
runs produce bit-identical results.
"""

from __future__ import annotations

from math import pi

import numpy as np


class QuadratureError(RuntimeError):
    """Non-convergence within the refinement budget; carries the partial
    estimate in .estimate."""

    def __init__(self, message, estimate):
        super().__init__(message)
        self.estimate = estimate


_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)


def _gauss_15(f, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    total = 0.0
    for x, w in zip(_NODES, _WEIGHTS):
        total += w * f(mid + half * x)
    return half * total


def adaptive_gauss_legendre(f, a: float, b: float, tol: float,
                            max_depth: int = 40) -> float:
    """Integrate f over [a, b] to absolute tolerance tol by interval
    bisection of a 15-point Gauss-Legendre rule."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def recurse(lo, hi, whole, budget, depth):
        mid = 0.5 * (lo + hi)
        left = _gauss_15(f, lo, mid)
        right = _gauss_15(f, mid, hi)
        if abs(left + right - whole) <= budget or depth >= max_depth:
            if depth >= max_depth and abs(left + right - whole) > budget:
                raise QuadratureError(
                    f"no convergence on [{lo}, {hi}]", left + right
                )
            return left + right
        return recurse(lo, mid, left, budget / 2, depth + 1) + recurse(
            mid, hi, right, budget / 2, depth + 1
        )

    return recurse(a, b, _gauss_15(f, a, b), tol, 0)


def plane_integral(radial, tol: float) -> float:
    """Integral over the plane of a rotation-invariant density g(u), u = r^2:

        integral = pi * int_0^inf g(u) du = pi * int_0^1 g(t/(1-t)) / (1-t)^2 dt.

    `radial` receives u and must return g(u)."""

    def compactified(t):
        one_minus = 1.0 - t
        u = t / one_minus
        return radial(u) / (one_minus * one_minus)

    return pi * adaptive_gauss_legendre(compactified, 0.0, 1.0, tol / pi)
