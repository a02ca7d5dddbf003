"""Gaussian-elimination decoding of one-twist TGRS codes.

For a received word y we look for a numerator N(x) and a denominator
D(x) with

    N(alpha_j) - D(alpha_j) * y_j = 0        for every j,

take any nonzero kernel vector of this homogeneous system, and divide.
If at most ``radius`` symbols are corrupted, N = D * f for the sent
twisted polynomial f whatever kernel vector is chosen.  The degree caps
on N and D depend on the code's class and the parity of n - k:

    =========  ============  ============  ==============
    variant    deg D <=      deg N <=      radius
    =========  ============  ============  ==============
    mds-odd    (n-k-1)/2     (n+k-1)/2     (n-k-1)/2
    mds-even   (n-k)/2       (n+k)/2       (n-k)/2 - 1
    nmds       (n-k-1)//2    k+ceil(...)   (n-k-1)//2
    =========  ============  ============  ==============

(the nmds numerator cap is ``k + ceil((n-k-1)/2)``).  Every decoded word
is re-encoded and checked to lie within ``radius`` of y, so a success
is always a genuine codeword near the received word.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

import numpy as np

from .code import CodeKind, LengthMismatch, TGRSCode
from .gf import FieldElement
from .linalg import Matrix, null_space_array
from .poly import Poly

__all__ = [
    "Variant",
    "DecodeParams",
    "FailureReason",
    "DecodeSuccess",
    "DecodeFailure",
    "DecodeOutcome",
    "params_for",
    "build_system",
    "decode",
]


class Variant(str, Enum):
    MDS_ODD = "mds-odd"
    MDS_EVEN = "mds-even"
    NMDS = "nmds"


@dataclass(frozen=True)
class DecodeParams:
    variant: Variant
    den_degree: int  # cap on deg D
    num_degree: int  # cap on deg N
    radius: int

    @property
    def unknowns(self) -> int:
        return self.num_degree + self.den_degree + 2


def params_for(code: TGRSCode, variant: Variant | str | None = None) -> DecodeParams:
    """Degree caps and radius; ``variant`` defaults to the code's class."""
    n, k = code.n, code.k
    r = n - k
    if variant is None:
        if code.classification.kind is CodeKind.NMDS:
            variant = Variant.NMDS
        else:
            variant = Variant.MDS_ODD if r % 2 else Variant.MDS_EVEN
    variant = Variant(variant)
    if variant is Variant.MDS_ODD:
        if r % 2 == 0:
            raise ValueError("mds-odd decoding needs n - k odd")
        return DecodeParams(variant, (r - 1) // 2, (n + k - 1) // 2, (r - 1) // 2)
    if variant is Variant.MDS_EVEN:
        if r % 2:
            raise ValueError("mds-even decoding needs n - k even")
        return DecodeParams(variant, r // 2, (n + k) // 2, r // 2 - 1)
    t = (r - 1) // 2
    return DecodeParams(variant, t, k + (r - 1) - t, t)


class FailureReason(str, Enum):
    NONZERO_REMAINDER = "NonzeroRemainder"
    NOT_TWISTED_FORM = "NotTwistedForm"
    DEGREE_TOO_HIGH = "DegreeTooHigh"
    DISTANCE_EXCEEDS_RADIUS = "DistanceExceedsRadius"


@dataclass(frozen=True)
class DecodeSuccess:
    codeword: tuple[FieldElement, ...]
    message: tuple[FieldElement, ...]
    error_positions: tuple[int, ...]
    error_values: tuple[FieldElement, ...]

    success = True


@dataclass(frozen=True)
class DecodeFailure:
    reason: FailureReason

    success = False


DecodeOutcome = Union[DecodeSuccess, DecodeFailure]


def _received_array(code: TGRSCode, y: Sequence) -> np.ndarray:
    arr = np.atleast_1d(code.field.validate(y))
    if arr.size != code.n:
        raise LengthMismatch(f"received word has {arr.size} symbols, n = {code.n}")
    return arr


def _system_array(code: TGRSCode, y: np.ndarray, params: DecodeParams) -> np.ndarray:
    f = code.field
    alpha = code.alpha_array
    width = max(params.num_degree, params.den_degree) + 1
    powers = np.empty((code.n, width), dtype=np.int64)
    powers[:, 0] = 1
    for i in range(1, width):
        powers[:, i] = f.mul(powers[:, i - 1], alpha)
    den_block = f.neg(f.mul(powers[:, : params.den_degree + 1], y[:, None]))
    return np.hstack([powers[:, : params.num_degree + 1], den_block])


def build_system(code: TGRSCode, y: Sequence, params: DecodeParams | None = None) -> Matrix:
    """n x unknowns matrix; unknowns ordered (N_0..N_numdeg, D_0..D_dendeg)."""
    params = params or params_for(code)
    return Matrix(code.field, _system_array(code, _received_array(code, y), params))


def split_kernel_vector(code: TGRSCode, vec: np.ndarray, params: DecodeParams) -> tuple[Poly, Poly]:
    """Numerator and denominator polynomials of a kernel vector."""
    cut = params.num_degree + 1
    return Poly(code.field, vec[:cut]), Poly(code.field, vec[cut:])


def decode(code: TGRSCode, y: Sequence, params: DecodeParams | None = None) -> DecodeOutcome:
    """Decode a received word; never returns a word that is not a codeword."""
    params = params or params_for(code)
    f = code.field
    y = _received_array(code, y)
    system = _system_array(code, y, params)
    assert system.shape[1] > system.shape[0]
    kernel = null_space_array(f, system, limit=1)
    numerator, denominator = split_kernel_vector(code, kernel[0], params)
    # N would have n distinct roots with deg N < n
    assert not denominator.is_zero

    quotient, remainder = divmod(numerator, denominator)
    if not remainder.is_zero:
        return DecodeFailure(FailureReason.NONZERO_REMAINDER)
    if not quotient.is_zero and quotient.degree() > code.k:
        return DecodeFailure(FailureReason.DEGREE_TOO_HIGH)
    top = quotient.coefficient(code.k)
    if top != code.eta * quotient.coefficient(code.hook):
        return DecodeFailure(FailureReason.NOT_TWISTED_FORM)

    message = quotient.padded(code.k)[: code.k]
    codeword = code.encode_array(message)
    positions = np.flatnonzero(codeword != y)
    if positions.size > params.radius:
        return DecodeFailure(FailureReason.DISTANCE_EXCEEDS_RADIUS)
    errors = f.sub(y[positions], codeword[positions])
    return DecodeSuccess(
        codeword=tuple(FieldElement(f, int(v)) for v in codeword),
        message=tuple(FieldElement(f, int(v)) for v in message),
        error_positions=tuple(int(i) for i in positions),
        error_values=tuple(FieldElement(f, int(v)) for v in errors),
    )
