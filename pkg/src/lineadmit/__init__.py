"""Line arrangements in the projective plane and admissible rank-one local systems."""

from .admissibility import (
    Certificate,
    ConditionFailed,
    InvariantViolation,
    Method,
    Verdict,
    bounded_shift_search,
    certify_c0_c1,
    certify_c2,
    certify_c3_concurrent,
    decide,
    extremal,
    verify,
)
from .aomoto import aomoto_dims, betti
from .arrangement import (
    Arrangement,
    ArrangementError,
    ProjLine,
    ProjPoint,
    build,
    decone,
    intersect,
    multiple_points,
)
from .classify import classify, covers
from .exact import QComplex, fractional_part, is_positive_integer, rank
from .local_system import LocalSystem, LocalSystemError, ResidueVector, point_residues, standard_lift

__version__ = "0.1.0"

__all__ = [
    "aomoto_dims",
    "Arrangement",
    "ArrangementError",
    "betti",
    "bounded_shift_search",
    "build",
    "Certificate",
    "certify_c0_c1",
    "certify_c2",
    "certify_c3_concurrent",
    "classify",
    "ConditionFailed",
    "covers",
    "decide",
    "decone",
    "extremal",
    "fractional_part",
    "intersect",
    "InvariantViolation",
    "is_positive_integer",
    "LocalSystem",
    "LocalSystemError",
    "Method",
    "multiple_points",
    "point_residues",
    "ProjLine",
    "ProjPoint",
    "QComplex",
    "rank",
    "ResidueVector",
    "standard_lift",
    "Verdict",
    "verify",
]
