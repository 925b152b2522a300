"""Spin matrices attached to the projector family.

The constant ladder matrices sigma^z, sigma^+, sigma^- generate the spin-s
representation; the field-dependent S^z, S^+, S^- are a rational mixing of
them and act as algebraic creation/annihilation operators on the solution
vectors. All square-root entries of the textbook matrices are exactly
representable in the binomial weight gauge:

    sqrt((N-j+1) j) / sqrt(C(N,j-1) C(N,j)) = j / C(N,j-1),

so the whole construction stays inside the Gaussian-rational field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isclose, sqrt

from .model import (
    ModelInstance,
    ProjectorField,
    SolutionVector,
    closed_form_projector,
)
from .rational import (
    RF_ONE,
    RF_ONE_PLUS_XY,
    RF_X,
    RF_Y,
    RF_ZERO,
    BiRationalFn,
)
from .weighted import WeightedMatrix, WeightedVector


@dataclass(frozen=True)
class SpinTriple:
    instance: ModelInstance
    sz: WeightedMatrix
    splus: WeightedMatrix
    sminus: WeightedMatrix
    sigma_z: WeightedMatrix
    sigma_plus: WeightedMatrix
    sigma_minus: WeightedMatrix


def sigma_matrices(inst: ModelInstance):
    """Constant representation matrices, in the weight gauge:
    (sigma^z)_ij = (s - i) delta_ij, off-diagonals carry sqrt((N-j+1)j)."""
    n = inst.two_s
    s = inst.s
    z = WeightedMatrix.from_entries(
        n,
        lambda i, j: BiRationalFn.const((s - i) / comb(n, i)) if i == j else RF_ZERO,
    )
    plus = WeightedMatrix.from_entries(
        n,
        lambda i, j: BiRationalFn.const(Fraction(j, comb(n, j - 1)))
        if i == j - 1
        else RF_ZERO,
    )
    minus = WeightedMatrix.from_entries(
        n,
        lambda i, j: BiRationalFn.const(Fraction(i, comb(n, i - 1)))
        if j == i - 1
        else RF_ZERO,
    )
    _check_gauge_roots(n, plus)
    return z, plus, minus


def _check_gauge_roots(n: int, plus: WeightedMatrix):
    """Numeric re-verification that the gauge entries reproduce the
    square-root matrix elements sqrt((N-j+1) j)."""
    for j in range(1, n + 1):
        gauge = plus.entry(j - 1, j).constant_value().real_fraction()
        semantic = sqrt(comb(n, j - 1) * comb(n, j)) * float(gauge)
        if not isclose(semantic, sqrt((n - j + 1) * j), rel_tol=1e-12):
            raise AssertionError("weight gauge does not close over the ladder entries")


@lru_cache(maxsize=None)
def _spin_cached(two_s: int) -> SpinTriple:
    inst = ModelInstance(two_s)
    sigma_z, sigma_plus, sigma_minus = sigma_matrices(inst)
    u = RF_X * RF_Y
    inv = RF_ONE / RF_ONE_PLUS_XY

    def mix(cz, cp, cm):
        return (
            sigma_z.scale(cz * inv)
            + sigma_plus.scale(cp * inv)
            + sigma_minus.scale(cm * inv)
        )

    sz = mix(u - 1, -RF_Y, -RF_X)
    splus = mix(RF_Y * 2, RF_Y * RF_Y, -RF_ONE)
    sminus = mix(RF_X * 2, -RF_ONE, RF_X * RF_X)
    return SpinTriple(inst, sz, splus, sminus, sigma_z, sigma_plus, sigma_minus)


def spin_matrices(inst: ModelInstance) -> SpinTriple:
    return _spin_cached(inst.two_s)


def sz_tridiagonal(inst: ModelInstance) -> WeightedMatrix:
    """The tridiagonal closed form of S^z, built independently of the
    sigma-matrix mixing (used to cross-check the two constructions)."""
    n = inst.two_s
    s = inst.s
    inv = RF_ONE / RF_ONE_PLUS_XY
    ratio = (RF_ONE - RF_X * RF_Y) * inv

    def entry(i, j):
        if i == j:
            return ratio * Fraction(i - s) / comb(n, i)
        if j == i - 1:
            # gauge value of -xi_+/(1+xy) * sqrt(i(N+1-i))
            return -RF_X * inv * Fraction(i, comb(n, i - 1))
        if j == i + 1:
            return -RF_Y * inv * Fraction(j, comb(n, j - 1))
        return RF_ZERO

    return WeightedMatrix.from_entries(n, entry)


def sz_projector_sum(inst: ModelInstance) -> WeightedMatrix:
    """S^z as the projector combination sum_k (k - s) P_k."""
    mat = WeightedMatrix.zero(inst.two_s)
    for k in range(inst.dim):
        mat = mat + closed_form_projector(inst, k).mat.scale(Fraction(k) - inst.s)
    return mat


def apply_raising(spin: SpinTriple, f: SolutionVector) -> SolutionVector:
    """S^+ f_k; equals -(1+xy) f_{k+1} for k < N and vanishes at k = N."""
    out = spin.splus.matvec(f.vec)
    if out.is_zero():
        return SolutionVector(
            f.instance, f.k, WeightedVector.zero(f.instance.two_s), True
        )
    return SolutionVector(f.instance, f.k + 1, out)


def apply_lowering(spin: SpinTriple, f: SolutionVector) -> SolutionVector:
    """S^- f_k; equals k(k-1-N)/(1+xy) f_{k-1} and vanishes at k = 0."""
    out = spin.sminus.matvec(f.vec)
    if out.is_zero():
        return SolutionVector(
            f.instance, f.k, WeightedVector.zero(f.instance.two_s), True
        )
    return SolutionVector(f.instance, f.k - 1, out)


def eigencheck(spin: SpinTriple, f: SolutionVector) -> bool:
    """Exact check of S^z f_k = (k - s) f_k."""
    lhs = spin.sz.matvec(f.vec)
    rhs = f.vec.scale(Fraction(f.k) - f.instance.s)
    return lhs == rhs


def projector_recurrence_spin(spin: SpinTriple, p: ProjectorField, up: bool):
    """Algebraic projector ladder S^{+-} P_k S^{-+} / tr(...); None when the
    trace vanishes identically (top/bottom of the ladder)."""
    a, b = (spin.splus, spin.sminus) if up else (spin.sminus, spin.splus)
    core = a * p.mat * b
    t = core.trace()
    if t.is_zero():
        return None
    k = p.label
    new_label = (k + 1 if up else k - 1) if isinstance(k, int) else None
    return ProjectorField(p.instance, new_label, core.scale(t.reciprocal()))
