"""Immersed surfaces built from the projector family.

The immersion X_k is an anti-Hermitian traceless matrix field; its induced
metric, curvature, Kahler angle and radius are computed exactly from the
derivative definitions and compared against the closed forms. Plane
quadratures (total action, Gauss-Bonnet) are the only numeric pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import pi, sqrt

import numpy as np

from .basis import BASIS_ID, coordinates, su_basis
from .model import (
    ModelInstance,
    ProjectorField,
    closed_form_fk,
    closed_form_projector,
    projector_from_vector,
)
from .rational import BiRationalFn
from .scalars import GR_I, GaussianRational
from .weighted import WeightedMatrix
from .quadrature import plane_integral


@dataclass(frozen=True)
class ImmersionField:
    instance: ModelInstance
    k: int
    mat: WeightedMatrix

    def check_invariants(self):
        if self.mat.adjoint() != -self.mat:
            raise AssertionError(f"X_{self.k} is not anti-Hermitian")
        if not self.mat.trace().is_zero():
            raise AssertionError(f"X_{self.k} is not traceless")


@dataclass(frozen=True)
class RadiusResult:
    """Exact squared radius from the trace definition, alongside the value
    of the printed polynomial closed form (which disagrees for k >= 1)."""

    radius_squared: Fraction
    printed_closed_form: Fraction
    matches: bool


@dataclass(frozen=True)
class GeometryReport:
    two_s: int
    k: int
    radius_squared: Fraction
    gauss_curvature: Fraction
    cos_kahler: Fraction
    euler_characteristic: float
    total_action: float


@dataclass(frozen=True)
class SurfaceSample:
    xi1: float
    xi2: float
    coords: tuple[float, ...]
    metric_density: float


@dataclass(frozen=True)
class SurfaceSampleSet:
    instance: ModelInstance
    k: int
    grid: int
    radius_bound: float
    basis_id: str
    radius_squared: Fraction
    samples: tuple[SurfaceSample, ...]


@lru_cache(maxsize=None)
def _immersion_matrix(two_s: int, k: int) -> WeightedMatrix:
    inst = ModelInstance(two_s)
    acc = closed_form_projector(inst, k).mat
    for j in range(k):
        acc = acc + closed_form_projector(inst, j).mat.scale(Fraction(2))
    shift = WeightedMatrix.identity(two_s).scale(Fraction(1 + 2 * k, 1 + two_s))
    return (acc - shift).scale(BiRationalFn.const(-GR_I))


def immersion(inst: ModelInstance, k: int) -> ImmersionField:
    """X_k = -i (P_k + 2 sum_{j<k} P_j) + i (1+2k)/(1+2s) * identity."""
    if not 0 <= k <= inst.two_s:
        raise ValueError("level out of range")
    return ImmersionField(inst, k, _immersion_matrix(inst.two_s, k))


def inner(a: WeightedMatrix, b: WeightedMatrix) -> BiRationalFn:
    """Ambient inner product (A, B) = -tr(A B) / 2."""
    return (a * b).trace() * Fraction(-1, 2)


def _as_constant(f: BiRationalFn, what: str) -> Fraction:
    if not f.is_constant():
        raise AssertionError(f"{what} is not constant: {f!r}")
    return f.as_fraction()


def radius(inst: ModelInstance, k: int) -> RadiusResult:
    """Squared radius (X_k, X_k); computed exactly and asserted constant.
    The printed polynomial is evaluated for comparison only."""
    x = _immersion_matrix(inst.two_s, k)
    r2 = _as_constant(inner(x, x), "(X, X)")
    n = inst.two_s
    printed = abs(
        Fraction(-2 * k * k + 2 * k * (n - 1), 1) + inst.s - 1
    ) / (1 + n)
    return RadiusResult(r2, printed, r2 == printed)


def metric_coefficient(inst: ModelInstance, k: int) -> Fraction:
    """The constant 2(2sk + s - k^2) in the closed-form metric density."""
    return 2 * (inst.two_s * k + inst.s - k * k)


@lru_cache(maxsize=None)
def _metric_density_cached(two_s: int, k: int) -> BiRationalFn:
    inst = ModelInstance(two_s)
    p = closed_form_projector(inst, k).mat
    density = (p.d_plus() * p.d_minus()).trace()
    one_plus_u = BiRationalFn.const(1) + _xy()
    closed = metric_coefficient(inst, k) / one_plus_u ** 2
    if density != closed:
        raise AssertionError(
            f"metric density disagrees with closed form at N={two_s}, k={k}"
        )
    return density


def _xy() -> BiRationalFn:
    from .rational import RF_X, RF_Y

    return RF_X * RF_Y


def metric_density(inst: ModelInstance, k: int) -> BiRationalFn:
    """tr(dP_k . d~P_k), computed from derivatives and asserted equal to the
    closed form 2(2sk+s-k^2)/(1+xy)^2."""
    return _metric_density_cached(inst.two_s, k)


@dataclass(frozen=True)
class SecondForm:
    coeff_plus: WeightedMatrix   # dxi_+^2
    coeff_mixed: WeightedMatrix  # dxi_+ dxi_-
    coeff_minus: WeightedMatrix  # dxi_-^2


def second_form(inst: ModelInstance, k: int) -> SecondForm:
    """The three matrix coefficients of the second fundamental form."""
    p = closed_form_projector(inst, k).mat
    dp = p.d_plus()
    dbp = p.d_minus()
    t = (dp * dbp).trace()
    if t.is_zero():
        raise ValueError("degenerate metric: second form undefined")
    t_inv = t.reciprocal()
    plus = dp.commutator(p).scale(t_inv).d_plus().scale(-t)
    minus = dbp.commutator(p).scale(t_inv).d_minus().scale(-t)
    mixed = dbp.commutator(dp).scale(BiRationalFn.const(GaussianRational(0, 2)))
    return SecondForm(plus, mixed, minus)


def gauss_curvature(inst: ModelInstance, k: int) -> Fraction:
    """Gaussian curvature via the conformal formula K = -(2/F) d d~ ln F,
    evaluated with exact derivatives of the computed metric density."""
    f = metric_density(inst, k)
    fx = f.d_plus()
    fy = f.d_minus()
    fxy = fx.d_minus()
    curvature = (fxy * f - fx * fy) * (-2) / f ** 3
    return _as_constant(curvature, "Gaussian curvature")


def kahler_angle(inst: ModelInstance, k: int) -> Fraction:
    """cos(theta_k) from the holomorphic/antiholomorphic tangent densities:
    with a = (I - P) d f and b = (I - P) d~ f,
    tan^2(theta/2) = |b|^2/|a|^2, so cos(theta) = (|a|^2 - |b|^2)/(|a|^2 + |b|^2)."""
    f = closed_form_fk(inst, k)
    complement = WeightedMatrix.identity(inst.two_s) - projector_from_vector(f).mat
    a = complement.matvec(f.vec.d_plus()).norm_squared()
    b = complement.matvec(f.vec.d_minus()).norm_squared()
    cos_theta = (a - b) / (a + b)
    return _as_constant(cos_theta, "Kahler cosine")


def kahler_closed_form(inst: ModelInstance, k: int) -> Fraction:
    return (inst.s - k) / (inst.two_s * k + inst.s - k * k)


def coincidence_check(inst: ModelInstance) -> list[tuple[int, int]]:
    """All pairs k < l whose immersions coincide identically."""
    mats = [_immersion_matrix(inst.two_s, k) for k in range(inst.dim)]
    pairs = []
    for k in range(inst.dim):
        for l in range(k + 1, inst.dim):
            if mats[k] == mats[l]:
                pairs.append((k, l))
    return pairs


def _radial_density(inst: ModelInstance, k: int):
    density = metric_density(inst, k)

    def at_u(u: float) -> float:
        return density.eval_numeric(sqrt(u)).real

    return at_u


def total_action(inst: ModelInstance, k: int, tol: float = 1e-8) -> float:
    """Numeric plane integral of the action density; converges to
    2*pi*(2sk + s - k^2) (finiteness of the action)."""
    return plane_integral(_radial_density(inst, k), tol)


def expected_action(inst: ModelInstance, k: int) -> float:
    return pi * float(metric_coefficient(inst, k))


def gauss_bonnet(inst: ModelInstance, k: int, tol: float = 1e-8) -> float:
    """Numeric (1/2pi) * integral of K dA over the surface; equals the
    Euler-Poincare characteristic 2 of a sphere."""
    curvature = float(gauss_curvature(inst, k))
    radial = _radial_density(inst, k)
    area = plane_integral(radial, tol * 2 * pi / curvature)
    return curvature * area / (2 * pi)


def sample_surface(inst: ModelInstance, k: int, grid: int,
                   radius_bound: float) -> SurfaceSampleSet:
    """Evaluate X_k on a square grid of plane points and expand each value
    in the fixed orthonormal basis of the ambient Lie algebra."""
    if grid < 2:
        raise ValueError("grid must have at least 2 points per axis")
    if radius_bound <= 0:
        raise ValueError("radius bound must be positive")
    x = _immersion_matrix(inst.two_s, k)
    r2 = radius(inst, k).radius_squared
    density = metric_density(inst, k)
    axis = np.linspace(-radius_bound, radius_bound, grid)
    samples = []
    for xi2 in axis:
        for xi1 in axis:
            point = complex(xi1, xi2)
            mat = x.semantic_numeric(point)
            coords = coordinates(mat)
            norm2 = float(np.dot(coords, coords))
            if abs(norm2 - float(r2)) > 1e-10 * float(r2):
                raise AssertionError(
                    f"sample norm {norm2} deviates from radius^2 {r2}"
                )
            samples.append(
                SurfaceSample(
                    float(xi1),
                    float(xi2),
                    tuple(float(c) for c in coords),
                    density.eval_numeric(point).real,
                )
            )
    return SurfaceSampleSet(
        inst, k, grid, float(radius_bound), BASIS_ID, r2, tuple(samples)
    )
