"""One-twist twisted generalized Reed-Solomon codes.

A code is fixed by distinct evaluation points ``alpha`` (length n), a
dimension k, a hook ``0 <= hook < k`` and a nonzero twist coefficient
``eta``.  A message ``(a_0, ..., a_{k-1})`` is mapped to the polynomial

    f(x) = a_0 + a_1 x + ... + a_{k-1} x^(k-1) + eta * a_hook * x^k

and the codeword is ``(f(alpha_1), ..., f(alpha_n))``.

Classification
--------------
A nonzero f has at most k roots, so the minimum distance is n-k or
n-k+1.  It is n-k exactly when some f of degree k splits over a k-subset
I of ``alpha``: f = c * prod_{i in I} (x - alpha_i) with c = eta * a_hook.
Matching the x^hook coefficient against a_hook gives the condition

    eta * (-1)^(k-hook) * e_{k-hook}(alpha_I) == 1

where e_j is the j-th elementary symmetric polynomial.  For hook = k-1
this is ``eta * sum(alpha_I) == -1``.  :func:`classify` decides it with a
dynamic program over (points processed, points chosen, symmetric-function
state); :func:`classify_brute_force` enumerates all k-subsets.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from enum import Enum
from functools import cached_property
from math import comb
from os import PathLike
from typing import Sequence

import numpy as np

from .gf import GF, FieldElement
from .linalg import Matrix
from .poly import Poly

__all__ = [
    "TGRSCode",
    "TwistedPolynomial",
    "CodeKind",
    "Classification",
    "CodeError",
    "DuplicateAlpha",
    "HookOutOfRange",
    "ZeroEta",
    "BadDimensions",
    "LengthMismatch",
    "ClassificationTooLarge",
    "classify",
    "classify_brute_force",
    "sum_rule_witness",
    "witness_message",
]


class CodeError(ValueError):
    pass


class DuplicateAlpha(CodeError):
    pass


class HookOutOfRange(CodeError):
    pass


class ZeroEta(CodeError):
    pass


class BadDimensions(CodeError):
    pass


class LengthMismatch(CodeError):
    pass


class ClassificationTooLarge(RuntimeError):
    """The subset DP state space exceeds the configured budget."""


class CodeKind(str, Enum):
    MDS = "MDS"
    NMDS = "NMDS"


@dataclass(frozen=True)
class Classification:
    kind: CodeKind
    witness: tuple[int, ...] | None = None  # 0-based alpha indices, NMDS only

    def __post_init__(self):
        if (self.kind is CodeKind.MDS) != (self.witness is None):
            raise ValueError("a witness is present exactly for NMDS codes")


@dataclass(frozen=True, eq=True)
class TGRSCode:
    """The code C_{k,1,hook}(alpha, 1, eta) over ``field``.

    ``eta`` and ``alpha`` may be given as canonical integers.
    """

    field: GF
    n: int
    k: int
    hook: int
    eta: FieldElement
    alpha: tuple[FieldElement, ...]
    _cache: dict = dc_field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        f = self.field
        object.__setattr__(self, "eta", f(self.eta) if isinstance(self.eta, FieldElement) else f(int(self.eta)))
        alpha = tuple(f(a) if isinstance(a, FieldElement) else f(int(a)) for a in self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if len(alpha) != self.n:
            raise BadDimensions(f"alpha has {len(alpha)} entries, n = {self.n}")
        if not 1 <= self.k < self.n:
            raise BadDimensions(f"need 1 <= k < n, got k={self.k}, n={self.n}")
        if self.n > f.q:
            raise BadDimensions(f"n = {self.n} exceeds field size {f.q}")
        if not 0 <= self.hook < self.k:
            raise HookOutOfRange(f"hook {self.hook} not in [0, {self.k})")
        if not self.eta:
            raise ZeroEta("eta must be nonzero")
        if len(set(a.value for a in alpha)) != self.n:
            raise DuplicateAlpha("evaluation points must be pairwise distinct")

    # -- cached views ------------------------------------------------------

    @property
    def alpha_array(self) -> np.ndarray:
        arr = self._cache.get("alpha")
        if arr is None:
            arr = np.array([a.value for a in self.alpha], dtype=np.int64)
            arr.setflags(write=False)
            self._cache["alpha"] = arr
        return arr

    @property
    def classification(self) -> Classification:
        c = self._cache.get("classification")
        if c is None:
            c = self._cache["classification"] = classify(self)
        return c

    # -- encoding ----------------------------------------------------------

    def message_array(self, message: Sequence) -> np.ndarray:
        msg = np.atleast_1d(self.field.validate(message))
        if msg.size != self.k:
            raise LengthMismatch(f"message has {msg.size} symbols, k = {self.k}")
        return msg

    def expand(self, message: Sequence) -> Poly:
        """The twisted polynomial of ``message``."""
        msg = self.message_array(message)
        c = np.zeros(self.k + 1, dtype=np.int64)
        c[: self.k] = msg
        c[self.k] = self.field.mul(self.eta.value, msg[self.hook])
        return Poly(self.field, c)

    def encode_array(self, message: Sequence) -> np.ndarray:
        return self.expand(message).eval_many(self.alpha_array)

    def encode(self, message: Sequence) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, int(v)) for v in self.encode_array(message))

    def generator_matrix(self) -> Matrix:
        f = self.field
        rows = np.array([f.power(self.alpha_array, i) for i in range(self.k)], dtype=np.int64)
        rows = rows.reshape(self.k, self.n)
        twist = f.mul(self.eta.value, f.power(self.alpha_array, self.k))
        rows[self.hook] = f.add(rows[self.hook], twist)
        return Matrix(f, rows)

    def classify(self) -> Classification:
        return self.classification

    # -- serialisation -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "n": self.n,
            "k": self.k,
            "hook": self.hook,
            "eta": self.eta.value,
            "alpha": [a.value for a in self.alpha],
        }

    @classmethod
    def from_dict(cls, d: dict) -> TGRSCode:
        field = GF.from_dict(d["field"])
        alpha = d["alpha"]
        return cls(field, d.get("n", len(alpha)), d["k"], d["hook"], d["eta"], alpha)

    @classmethod
    def load(cls, path: str | PathLike) -> TGRSCode:
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def dump(self, path: str | PathLike) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")

    def __repr__(self) -> str:
        return (
            f"TGRSCode({self.field!r}, n={self.n}, k={self.k}, hook={self.hook}, "
            f"eta={self.eta.value}, alpha={[a.value for a in self.alpha]})"
        )


@dataclass(frozen=True)
class TwistedPolynomial:
    code: TGRSCode
    message: tuple[FieldElement, ...]

    def __post_init__(self):
        msg = self.code.message_array(self.message)
        object.__setattr__(self, "message", tuple(FieldElement(self.code.field, int(v)) for v in msg))

    def expand(self) -> Poly:
        return self.code.expand(self.message)


# ---------------------------------------------------------------------------
# Classification

MAX_DP_CELLS = 300_000_000


def _forward_step(field: GF, d: int, a: int):
    """Adding point ``a`` to a subset: e_j <- e_j + a * e_{j-1} (e_0 = 1)."""

    def step(states: np.ndarray) -> np.ndarray:
        out = states.copy()
        prev = np.ones(states.shape[0], dtype=np.int64)
        for j in range(d):
            out[:, j] = field.add(states[:, j], field.mul(a, prev))
            prev = states[:, j]
        return out

    return step


def _reciprocal_step(field: GF, d: int, a: int):
    """State (P, e_1(1/S), ..., e_{d-1}(1/S)); ``a`` must be nonzero."""
    a_inv = int(field.inv(a))

    def step(states: np.ndarray) -> np.ndarray:
        out = states.copy()
        out[:, 0] = field.mul(states[:, 0], a)
        prev = np.ones(states.shape[0], dtype=np.int64)
        for j in range(1, d):
            out[:, j] = field.add(states[:, j], field.mul(a_inv, prev))
            prev = states[:, j]
        return out

    return step


class _SubsetDP:
    """Reachability over (points chosen, state) for every prefix of the points.

    ``step`` maps a batch of states (rows of digit vectors) through the
    bijection "add this point to the subset".
    """

    def __init__(self, field: GF, d: int, points: list[int], steps, init: np.ndarray, kmax: int):
        q = field.q
        size = q**d
        cells = (len(points) + 1) * (kmax + 1) * size
        if cells > MAX_DP_CELLS:
            raise ClassificationTooLarge(f"{cells} DP cells exceed budget {MAX_DP_CELLS}")
        self.field, self.d, self.size, self.kmax = field, d, size, kmax
        weights = q ** np.arange(d, dtype=np.int64)
        all_states = (np.arange(size, dtype=np.int64)[:, None] // weights) % q
        self.perms = []
        for step in steps:
            self.perms.append(step(all_states) @ weights)
        start = int(init @ weights)
        layer = np.zeros((kmax + 1, size), dtype=bool)
        layer[0, start] = True
        self.layers = [layer]
        for perm in self.perms:
            nxt = layer.copy()
            nxt[1:, perm] |= layer[:-1]
            self.layers.append(nxt)
            layer = nxt
        self.weights = weights

    def encode(self, digits: Sequence[int]) -> int:
        return int(np.asarray(digits, dtype=np.int64) @ self.weights)

    def decode(self, s: int) -> np.ndarray:
        return (s // self.weights) % self.field.q

    def backtrack(self, count: int, state: int) -> list[int]:
        """Indices (into ``points``) of one subset reaching (count, state)."""
        chosen = []
        for i in range(len(self.perms), 0, -1):
            if self.layers[i - 1][count, state]:
                continue
            # took point i-1: invert its permutation
            state = int(np.flatnonzero(self.perms[i - 1] == state)[0])
            count -= 1
            chosen.append(i - 1)
        assert count == 0
        return sorted(chosen)


def _target_witness(code: TGRSCode, r: int) -> tuple[int, ...] | None:
    """k-subset I with eta*(-1)^r*e_r(alpha_I) == 1, or None.

    Picks the cheaper of two exact formulations: forward elementary
    symmetric functions e_1..e_r of the subset, or (product, e_1..e_hook of
    the reciprocals).  The second relies on e_r(S) = prod(S) * e_{|S|-r}(1/S).
    """
    f, k = code.field, code.k
    alpha = [a.value for a in code.alpha]
    sign = 1 if r % 2 == 0 else int(f.neg(1))
    # the value e_r must take
    target = int(f.inv(f.mul(code.eta.value, sign)))
    h = k - r
    if r <= h + 1 or h < 0:
        d = r
        steps = [_forward_step(f, d, a) for a in alpha]
        dp = _SubsetDP(f, d, alpha, steps, np.zeros(d, dtype=np.int64), k)
        col = np.flatnonzero(dp.layers[-1][k])
        hit = [s for s in col if dp.decode(int(s))[d - 1] == target]
        if not hit:
            return None
        return tuple(dp.backtrack(k, int(hit[0])))

    # reciprocal form over nonzero points; at most one point is zero
    nonzero = [i for i, a in enumerate(alpha) if a]
    zero_idx = [i for i, a in enumerate(alpha) if not a]
    d = h + 1
    steps = [_reciprocal_step(f, d, alpha[i]) for i in nonzero]
    init = np.zeros(d, dtype=np.int64)
    init[0] = 1
    dp = _SubsetDP(f, d, [alpha[i] for i in nonzero], steps, init, k)

    def search(count: int, sym_index: int):
        for s in np.flatnonzero(dp.layers[-1][count]):
            dig = dp.decode(int(s))
            e = 1 if sym_index == 0 else int(dig[sym_index])
            if int(f.mul(dig[0], e)) == target:
                return int(s)
        return None

    s = search(k, h)
    if s is not None:
        return tuple(nonzero[i] for i in dp.backtrack(k, s))
    if zero_idx and h >= 1:
        s = search(k - 1, h - 1)
        if s is not None:
            return tuple(sorted([nonzero[i] for i in dp.backtrack(k - 1, s)] + zero_idx))
    return None


def classify(code: TGRSCode) -> Classification:
    """MDS/NMDS classification with a minimum-weight support witness."""
    witness = _target_witness(code, code.k - code.hook)
    if witness is None:
        return Classification(CodeKind.MDS)
    return Classification(CodeKind.NMDS, witness)


def classify_brute_force(code: TGRSCode, max_subsets: int = 5_000_000) -> Classification:
    """Enumerate every k-subset and test whether some f splits over it."""
    if comb(code.n, code.k) > max_subsets:
        raise ClassificationTooLarge(f"C({code.n},{code.k}) subsets exceed {max_subsets}")
    f = code.field
    for subset in itertools.combinations(range(code.n), code.k):
        locator = Poly.from_roots(f, (code.alpha[i] for i in subset))
        if code.eta * locator.coefficient(code.hook) == f.one:
            return Classification(CodeKind.NMDS, subset)
    return Classification(CodeKind.MDS)


def sum_rule_witness(code: TGRSCode) -> tuple[int, ...] | None:
    """A k-subset with ``eta * sum(alpha_I) == -1``, or None.

    This is the classification rule for hook = k-1 (where it coincides with
    :func:`classify`).  For other hooks it is not a distance criterion.
    """
    return _target_witness(code, 1)


def witness_message(code: TGRSCode, witness: Sequence[int]) -> tuple[FieldElement, ...]:
    """Message whose codeword vanishes exactly on ``witness``."""
    f = code.field
    locator = Poly.from_roots(f, (code.alpha[i] for i in witness)) * code.eta
    return tuple(locator.coefficient(i) for i in range(code.k))
