"""One-twist twisted generalized Reed-Solomon codes over finite fields.

Finite-field and polynomial arithmetic, MDS/NMDS classification, encoding,
Gaussian-elimination decoding and a seeded error-channel simulator.
"""

from .channel import TrialConfig, TrialReport, inject, run_trials, scaling_run
from .code import (
    Classification,
    CodeKind,
    TGRSCode,
    TwistedPolynomial,
    classify,
    classify_brute_force,
)
from .decoder import (
    DecodeFailure,
    DecodeParams,
    DecodeSuccess,
    FailureReason,
    Variant,
    build_system,
    decode,
    params_for,
)
from .gf import GF, FieldElement
from .linalg import Matrix, mat_vec, null_space, rref
from .poly import Poly

__all__ = [
    "GF",
    "FieldElement",
    "Poly",
    "Matrix",
    "rref",
    "null_space",
    "mat_vec",
    "TGRSCode",
    "TwistedPolynomial",
    "CodeKind",
    "Classification",
    "classify",
    "classify_brute_force",
    "Variant",
    "DecodeParams",
    "FailureReason",
    "DecodeSuccess",
    "DecodeFailure",
    "params_for",
    "build_system",
    "decode",
    "TrialConfig",
    "TrialReport",
    "inject",
    "run_trials",
    "scaling_run",
]

__version__ = "0.1.0"
