"""Exact-arithmetic toolkit for the Veronese/Krawtchouk solution family of
projective sigma models: rational-function kernel, projector and spin
algebra, surface geometry, and numeric quadratures."""

from .krawtchouk import KrawtchoukQuery, kraw_recurrence, kraw_sum, kraw_symbolic
from .model import (
    ModelInstance,
    ProjectorField,
    RankProfile,
    SolutionVector,
    closed_form_fk,
    closed_form_projector,
    el_residual_projector,
    el_residual_vector,
    higher_rank_projector,
    lower_level,
    projector_from_vector,
    raise_level,
    veronese_f0,
)
from .polynomials import BiPolynomial
from .rational import BiRationalFn, EvaluationError
from .scalars import GaussianRational
from .verify import VerificationReport, run_verification
from .weighted import WeightedMatrix, WeightedVector

__all__ = [
    "BiPolynomial",
    "BiRationalFn",
    "EvaluationError",
    "GaussianRational",
    "KrawtchoukQuery",
    "ModelInstance",
    "ProjectorField",
    "RankProfile",
    "SolutionVector",
    "VerificationReport",
    "WeightedMatrix",
    "WeightedVector",
    "closed_form_fk",
    "closed_form_projector",
    "el_residual_projector",
    "el_residual_vector",
    "higher_rank_projector",
    "kraw_recurrence",
    "kraw_sum",
    "kraw_symbolic",
    "lower_level",
    "projector_from_vector",
    "raise_level",
    "run_verification",
    "veronese_f0",
]

__version__ = "0.1.0"
