"""Random code generators for the tests."""

from __future__ import annotations

import numpy as np

from tgrs import GF, CodeKind, TGRSCode

# the classifier's state space is q^min(k-hook, hook+1); keep it small
DP_STATE_LIMIT = 5000


def feasible_hooks(q: int, k: int) -> list[int]:
    return [h for h in range(k) if q ** min(k - h, h + 1) <= DP_STATE_LIMIT]


def subfield_elements(field: GF, size: int) -> np.ndarray:
    """Elements of the subfield of order ``size``."""
    xs = np.arange(field.q, dtype=np.int64)
    return xs[field.power(xs, size) == xs]


def random_code(rng, field: GF, n: int, k: int, hook=None, points=None) -> TGRSCode:
    pool = np.arange(field.q) if points is None else np.asarray(points)
    alpha = rng.choice(pool, size=n, replace=False)
    if hook is None:
        hook = int(rng.choice(feasible_hooks(field.q, k)))
    eta = int(rng.integers(1, field.q))
    return TGRSCode(field, n, k, hook, eta, alpha)


def random_mds_code(rng, parity: int, n_max: int = 20, min_redundancy: int = 1) -> TGRSCode:
    """MDS code with n-k of the given parity.

    Draws either plain random codes over a large prime field (where MDS is
    the common case) or codes whose points lie in a proper subfield while
    eta does not.  In the second family every symmetric function of the
    points stays in the subfield, so no k-subset can meet the NMDS
    condition.  Every result is confirmed by the classifier.
    """
    while True:
        if rng.random() < 0.5:
            field = GF(int(rng.choice([101, 127, 251])))
            n = int(rng.integers(6, min(n_max, 12) + 1))
            k = int(rng.integers(1, 4))
            pool = None
        else:
            field, sub = [(GF(2, 8), 16), (GF(3, 4), 9), (GF(2, 10), 32), (GF(5, 2), 5)][rng.integers(4)]
            pool = subfield_elements(field, sub)
            n = int(rng.integers(min(6, len(pool)), min(n_max, len(pool)) + 1))
            k = int(rng.integers(1, n - 1))
        if (n - k) % 2 != parity or not 1 <= k < n or n - k < min_redundancy:
            continue
        hooks = feasible_hooks(field.q, k)
        if not hooks:
            continue
        code = random_code(rng, field, n, k, hook=int(rng.choice(hooks)), points=pool)
        if pool is not None and code.eta.value in set(pool.tolist()):
            continue
        if code.classification.kind is CodeKind.MDS:
            return code


def random_nmds_code(rng, n_max: int = 20, min_redundancy: int = 1) -> TGRSCode:
    """NMDS code; points fill most of a small field so a witness is likely."""
    while True:
        field = [GF(7), GF(11), GF(13), GF(2, 4), GF(3, 2), GF(2, 5), GF(5, 2), GF(3, 3)][rng.integers(8)]
        n = int(rng.integers(max(5, field.q // 2), min(n_max, field.q) + 1))
        k = int(rng.integers(1, n - 1))
        hooks = feasible_hooks(field.q, k)
        if not hooks or n - k < min_redundancy:
            continue
        code = random_code(rng, field, n, k, hook=int(rng.choice(hooks)))
        if code.classification.kind is CodeKind.NMDS:
            return code
