"""Veronese solution family of the projective sigma model.

Builds the level-k solution vectors and rank-1 projector fields, both from
the analytic raising/lowering operators and from the Krawtchouk closed
forms, and provides the exact Euler-Lagrange residuals used to verify that
every constructed field actually solves the model equations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .krawtchouk import kraw_symbolic
from .polynomials import ONE_PLUS_XY, BiPolynomial, is_power_of
from .rational import RF_ONE, RF_ONE_PLUS_XY, RF_X, RF_Y, RF_ZERO, BiRationalFn
from .weighted import WeightedMatrix, WeightedVector, outer_product


@dataclass(frozen=True)
class ModelInstance:
    """The model is fixed by the integer N = 2s >= 1; fields live in
    dimension N + 1."""

    two_s: int

    def __post_init__(self):
        if self.two_s < 1:
            raise ValueError("two_s must be >= 1")

    @property
    def dim(self) -> int:
        return self.two_s + 1

    @property
    def s(self) -> Fraction:
        return Fraction(self.two_s, 2)


@dataclass(frozen=True)
class SolutionVector:
    instance: ModelInstance
    k: int
    vec: WeightedVector
    annihilated: bool = False

    def __post_init__(self):
        if self.vec.order != self.instance.two_s:
            raise ValueError("vector order does not match the model instance")

    def is_zero(self) -> bool:
        return self.vec.is_zero()


@dataclass(frozen=True)
class RankProfile:
    """Inclusion bits, one per level 0..N."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("profile bits must be 0 or 1")

    @property
    def rank(self) -> int:
        return sum(self.bits)


@dataclass(frozen=True)
class ProjectorField:
    instance: ModelInstance
    label: object
    mat: WeightedMatrix

    def check_invariants(self):
        """Exact Hermiticity and idempotency; raises on violation."""
        if self.mat.adjoint() != self.mat:
            raise AssertionError(f"projector {self.label} is not Hermitian")
        if self.mat * self.mat != self.mat:
            raise AssertionError(f"projector {self.label} is not idempotent")


def veronese_f0(inst: ModelInstance) -> SolutionVector:
    """The holomorphic generating vector: gauge entries u_j = x^j (the
    sqrt-binomial factors live in the weight gauge)."""
    entries = [RF_X ** j for j in range(inst.dim)]
    return SolutionVector(inst, 0, WeightedVector(inst.two_s, entries))


def projector_from_vector(f: SolutionVector) -> ProjectorField:
    """Rank-1 projector P = f (x) f^dagger / (f^dagger . f)."""
    if f.annihilated or f.is_zero():
        raise ValueError("cannot project a zero (annihilated) vector")
    norm = f.vec.norm_squared()
    mat = outer_product(f.vec, f.vec).scale(norm.reciprocal())
    return ProjectorField(f.instance, f.k, mat)


def raise_level(f: SolutionVector) -> SolutionVector:
    """Analytic creation operator: f_{k+1} = (I - P_k) d_plus f_k.
    At the top level the result is the zero vector, flagged annihilated."""
    return _ladder(f, up=True)


def lower_level(f: SolutionVector) -> SolutionVector:
    """Analytic annihilation operator: f_{k-1} = (I - P_k) d_minus f_k."""
    return _ladder(f, up=False)


def _ladder(f: SolutionVector, up: bool) -> SolutionVector:
    if f.annihilated:
        raise ValueError("cannot apply a ladder operator to an annihilated vector")
    inst = f.instance
    proj = projector_from_vector(f).mat
    complement = WeightedMatrix.identity(inst.two_s) - proj
    df = f.vec.d_plus() if up else f.vec.d_minus()
    out = complement.matvec(df)
    k_new = f.k + 1 if up else f.k - 1
    if out.is_zero():
        return SolutionVector(inst, f.k, WeightedVector.zero(inst.two_s), True)
    return SolutionVector(inst, k_new, out)


@lru_cache(maxsize=None)
def _closed_form_fk_cached(two_s: int, k: int) -> WeightedVector:
    prefactor = Fraction(factorial(two_s), factorial(two_s - k))
    shell = ((-RF_Y) / RF_ONE_PLUS_XY) ** k * prefactor
    entries = []
    for j in range(two_s + 1):
        entries.append(shell * RF_X ** j * kraw_symbolic(j, k, two_s))
    vec = WeightedVector(two_s, entries)
    for e in vec.entries:
        if not is_power_of(e.den, ONE_PLUS_XY):
            raise AssertionError(
                "xy pole failed to cancel in closed-form solution vector"
            )
    return vec


def closed_form_fk(inst: ModelInstance, k: int) -> SolutionVector:
    """Level-k solution vector from the Krawtchouk closed form. The apparent
    (xy)^k pole of the symbolic Krawtchouk value cancels; the final
    denominators are asserted to be powers of (1 + xy)."""
    if not 0 <= k <= inst.two_s:
        raise ValueError("level out of range")
    return SolutionVector(inst, k, _closed_form_fk_cached(inst.two_s, k))


@lru_cache(maxsize=None)
def _closed_form_projector_cached(two_s: int, k: int) -> WeightedMatrix:
    from math import comb

    xy = RF_X * RF_Y
    shell = xy ** k / RF_ONE_PLUS_XY ** two_s * Fraction(comb(two_s, k))
    kcol = [kraw_symbolic(j, k, two_s) for j in range(two_s + 1)]
    rows = []
    for i in range(two_s + 1):
        row_shell = shell * RF_X ** i * kcol[i]
        rows.append([row_shell * RF_Y ** j * kcol[j] for j in range(two_s + 1)])
    return WeightedMatrix(two_s, rows)


def closed_form_projector(inst: ModelInstance, k: int) -> ProjectorField:
    """Rank-1 projector P_k directly from the Krawtchouk closed form."""
    if not 0 <= k <= inst.two_s:
        raise ValueError("level out of range")
    return ProjectorField(inst, k, _closed_form_projector_cached(inst.two_s, k))


def higher_rank_projector(inst: ModelInstance, profile: RankProfile) -> ProjectorField:
    """Sum of the rank-1 projectors selected by the profile bits."""
    if len(profile.bits) != inst.dim:
        raise ValueError("profile length must be two_s + 1")
    mat = WeightedMatrix.zero(inst.two_s)
    for l, bit in enumerate(profile.bits):
        if bit:
            mat = mat + _closed_form_projector_cached(inst.two_s, l)
    return ProjectorField(inst, profile, mat)


def raise_projector(p: ProjectorField):
    """Projector-level creation: (dP) P (d~P) / tr[...]; annihilated (None)
    when the trace denominator vanishes identically."""
    return _projector_ladder(p, up=True)


def lower_projector(p: ProjectorField):
    return _projector_ladder(p, up=False)


def _projector_ladder(p: ProjectorField, up: bool):
    d1 = p.mat.d_plus() if up else p.mat.d_minus()
    d2 = p.mat.d_minus() if up else p.mat.d_plus()
    core = d1 * p.mat * d2
    t = core.trace()
    if t.is_zero():
        return None
    k = p.label
    new_label = (k + 1 if up else k - 1) if isinstance(k, int) else None
    return ProjectorField(p.instance, new_label, core.scale(t.reciprocal()))


def el_residual_projector(p: ProjectorField) -> WeightedMatrix:
    """Conservation-law residual d[d~P, P] + d~[dP, P]; identically zero for
    every solution projector."""
    dp = p.mat.d_plus()
    dbar_p = p.mat.d_minus()
    term1 = dbar_p.commutator(p.mat).d_plus()
    term2 = dp.commutator(p.mat).d_minus()
    return term1 + term2


def el_residual_vector(f: SolutionVector) -> WeightedVector:
    """Vector-form field-equation residual
    (I - P)[d d~f - ((f^. d~f) df + (f^. df) d~f)/(f^. f)]."""
    if f.annihilated or f.is_zero():
        raise ValueError("residual of a zero (annihilated) vector")
    inst = f.instance
    vec = f.vec
    df = vec.d_plus()
    dbf = vec.d_minus()
    ddbf = df.d_minus()
    norm = vec.norm_squared()
    c_plus = vec.dot(dbf) / norm
    c_minus = vec.dot(df) / norm
    bracket = ddbf - df.scale(c_plus) - dbf.scale(c_minus)
    proj = projector_from_vector(f).mat
    complement = WeightedMatrix.identity(inst.two_s) - proj
    return complement.matvec(bracket)


def action_density(p: ProjectorField) -> BiRationalFn:
    """The Lagrangian density tr(dP . d~P)."""
    return (p.mat.d_plus() * p.mat.d_minus()).trace()


def all_projectors(inst: ModelInstance) -> list[ProjectorField]:
    return [closed_form_projector(inst, k) for k in range(inst.dim)]
