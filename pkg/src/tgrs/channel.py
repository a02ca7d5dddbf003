"""Seeded error-channel experiments.

Each trial draws a uniform message, encodes it, corrupts exactly ``w``
uniformly chosen positions with uniform nonzero offsets, and decodes.
Trial ``i`` of a run with seed ``s`` uses its own generator
``numpy.random.Generator(PCG64(SeedSequence([s, i])))``, so trials can be
run in any order, or in parallel, with identical outcomes.
"""

from __future__ import annotations

import io
import time
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .code import TGRSCode
from .decoder import DecodeSuccess, decode, params_for
from .gf import GF

__all__ = [
    "RNG_SCHEME",
    "TrialConfig",
    "TrialReport",
    "TrialOutcome",
    "WeightOutOfRange",
    "InsufficientField",
    "trial_rng",
    "inject",
    "run_trial",
    "run_trials",
    "ScalingRow",
    "scaling_run",
    "scaling_csv",
    "loglog_slope",
]

RNG_SCHEME = "numpy-pcg64(SeedSequence([seed, trial]))"

# counted as a failure: decoder succeeded but returned another codeword
MISCORRECTION = "Miscorrection"


class WeightOutOfRange(ValueError):
    pass


class InsufficientField(ValueError):
    pass


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def inject(field: GF, codeword, w: int, rng: np.random.Generator) -> tuple[np.ndarray, frozenset[int]]:
    """Add an error of weight exactly ``w`` to ``codeword``."""
    cw = np.atleast_1d(field.validate(codeword))
    n = cw.size
    if not 0 <= w <= n:
        raise WeightOutOfRange(f"error weight {w} not in [0, {n}]")
    positions = np.sort(rng.choice(n, size=w, replace=False))
    deltas = rng.integers(1, field.q, size=w)
    received = cw.copy()
    received[positions] = field.add(cw[positions], deltas)
    return received, frozenset(int(i) for i in positions)


@dataclass(frozen=True)
class TrialConfig:
    code: TGRSCode
    trials: int
    error_weight: int
    seed: int

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.error_weight <= self.code.n:
            raise WeightOutOfRange(f"error weight {self.error_weight} not in [0, {self.code.n}]")


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    ok: bool
    reason: str | None
    seconds: float


@dataclass
class TrialReport:
    config: TrialConfig
    successes: int = 0
    failures: dict[str, int] = dc_field(default_factory=dict)
    mean_seconds: float = 0.0
    max_seconds: float = 0.0
    rng_scheme: str = RNG_SCHEME

    @property
    def trials(self) -> int:
        return self.successes + sum(self.failures.values())

    def counts(self) -> tuple[int, tuple[tuple[str, int], ...]]:
        """Timing-free summary, used for determinism checks."""
        return self.successes, tuple(sorted(self.failures.items()))

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "code": cfg.code.to_dict(),
            "trials": cfg.trials,
            "weight": cfg.error_weight,
            "seed": cfg.seed,
            "radius": params_for(cfg.code).radius,
            "successes": self.successes,
            "failures": dict(sorted(self.failures.items())),
            "mean_seconds": self.mean_seconds,
            "max_seconds": self.max_seconds,
            "rng": self.rng_scheme,
        }

    def to_text(self) -> str:
        d = self.to_dict()
        code = self.config.code
        lines = [
            f"code=n:{code.n},k:{code.k},hook:{code.hook},q:{code.field.q}",
            f"trials={d['trials']}",
            f"weight={d['weight']}",
            f"seed={d['seed']}",
            f"radius={d['radius']}",
            f"successes={d['successes']}",
            "failures=" + ",".join(f"{k}:{v}" for k, v in d["failures"].items()),
            f"mean_seconds={d['mean_seconds']:.6g}",
            f"max_seconds={d['max_seconds']:.6g}",
            f"rng={d['rng']}",
        ]
        return "\n".join(lines)


def run_trial(cfg: TrialConfig, trial: int) -> TrialOutcome:
    code = cfg.code
    rng = trial_rng(cfg.seed, trial)
    message = rng.integers(0, code.field.q, size=code.k)
    sent = code.encode_array(message)
    received, _ = inject(code.field, sent, cfg.error_weight, rng)
    t0 = time.perf_counter()
    out = decode(code, received)
    elapsed = time.perf_counter() - t0
    if not isinstance(out, DecodeSuccess):
        return TrialOutcome(trial, False, out.reason.value, elapsed)
    if [c.value for c in out.codeword] != sent.tolist():
        return TrialOutcome(trial, False, MISCORRECTION, elapsed)
    return TrialOutcome(trial, True, None, elapsed)


def run_trials(cfg: TrialConfig, order: Sequence[int] | None = None) -> TrialReport:
    """Run every trial of ``cfg``; ``order`` permutes execution order only."""
    indices = range(cfg.trials) if order is None else order
    report = TrialReport(cfg)
    failures: Counter[str] = Counter()
    times = []
    for i in indices:
        outcome = run_trial(cfg, i)
        times.append(outcome.seconds)
        if outcome.ok:
            report.successes += 1
        else:
            failures[outcome.reason] += 1
    report.failures = dict(sorted(failures.items()))
    report.mean_seconds = float(np.mean(times))
    report.max_seconds = float(np.max(times))
    return report


@dataclass(frozen=True)
class ScalingRow:
    n: int
    mean_seconds: float
    trials: int


def scaling_run(
    rate: float,
    sizes: Sequence[int],
    field: GF,
    seed: int,
    trials: int = 20,
) -> list[ScalingRow]:
    """Mean decode time per code length at error weight equal to the radius.

    For each n a code with k = round(rate*n), hook = k-1, random nonzero
    eta and random distinct points is drawn.  One untimed warm-up decode
    precedes the timed trials.
    """
    rows = []
    for n in sizes:
        if n > field.q:
            raise InsufficientField(f"n = {n} exceeds field size {field.q}")
        k = int(round(rate * n))
        rng = trial_rng(seed, n)
        alpha = rng.choice(field.q, size=n, replace=False)
        eta = int(rng.integers(1, field.q))
        code = TGRSCode(field, n, k, k - 1, eta, alpha)
        radius = params_for(code).radius
        cfg = TrialConfig(code, trials, radius, seed)
        run_trial(cfg, trials)
        outcomes = [run_trial(cfg, i) for i in range(trials)]
        if not all(o.ok for o in outcomes):
            raise AssertionError(f"decoding failed within the radius at n = {n}")
        rows.append(ScalingRow(n, float(np.mean([o.seconds for o in outcomes])), trials))
    return rows


def scaling_csv(rows: Sequence[ScalingRow]) -> str:
    buf = io.StringIO()
    buf.write("n,mean_seconds,trials\n")
    for r in rows:
        buf.write(f"{r.n},{r.mean_seconds:.6g},{r.trials}\n")
    return buf.getvalue()


def loglog_slope(rows: Sequence[ScalingRow]) -> float:
    """Least-squares slope of log(mean time) against log(n)."""
    x = np.log([r.n for r in rows])
    y = np.log([r.mean_seconds for r in rows])
    return float(np.polyfit(x, y, 1)[0])
