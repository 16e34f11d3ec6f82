"""Resonance-module scan and the numerical non-resonance margin.

The resonance module of a frequency vector lambda is the set of integer
vectors k with k . lambda = 0.  Floating frequencies (sqrt(2), ...) force a
tolerance on that dot product; the default 1e-9 * max(lambda) cleanly
separates true integer relations from near-resonances for |k| <= 12.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceError

MAX_N = 12


@dataclass(frozen=True)
class ResonanceScan:
    """Result of enumerating integer vectors with |k|_1 <= N.

    ``module_vectors`` are the nonzero k with |k . lambda| <= tol.
    ``representatives`` hold one minimal-|k| member per equivalence class
    of Z^l modulo the module (zero class excluded), closed under negation.
    """

    module_vectors: tuple
    representatives: tuple
    N: int
    tol: float


def _norm1(k):
    return sum(abs(x) for x in k)


def resonance_scan(lambdas, N: int, tol: float = None) -> ResonanceScan:
    """Enumerate the resonance module and class representatives up to |k|_1 <= N."""
    lambdas = np.asarray(lambdas, dtype=float)
    if lambdas.ndim != 1 or lambdas.size == 0:
        raise DomainError("lambda must be a non-empty vector")
    if N < 1 or N > MAX_N:
        raise ResourceError(f"N must be in 1..{MAX_N}, got {N}")
    if tol is None:
        tol = 1e-9 * float(np.max(lambdas))
    if tol <= 0:
        raise DomainError("tol must be positive")

    l = lambdas.size
    cands = []
    for k in itertools.product(range(-N, N + 1), repeat=l):
        n1 = _norm1(k)
        if 0 < n1 <= N:
            cands.append((k, float(np.dot(k, lambdas))))

    module = sorted(k for k, dot in cands if abs(dot) <= tol)

    # Cluster the non-module vectors by their dot value: k ~ k' iff
    # (k - k') . lambda = 0, i.e. equal dots up to tol.
    rest = sorted(((dot, k) for k, dot in cands if abs(dot) > tol))
    clusters = []
    for dot, k in rest:
        if clusters and dot - clusters[-1][-1][0] <= tol:
            clusters[-1].append((dot, k))
        else:
            clusters.append([(dot, k)])

    reps = []
    for cluster in clusters:
        if cluster[0][0] < 0:
            continue  # handled via the mirrored positive-dot cluster
        members = [k for _, k in cluster]
        m = min(_norm1(k) for k in members)
        minimal = [k for k in members if _norm1(k) == m]
        # the mirrored class contains exactly the negations, so the
        # deterministic pick is the lexicographic minimum over both
        best = min(minimal + [tuple(-x for x in k) for k in minimal])
        reps.append(best)
        reps.append(tuple(-x for x in best))

    return ResonanceScan(
        module_vectors=tuple(module),
        representatives=tuple(sorted(reps)),
        N=int(N),
        tol=float(tol),
    )


def nonresonance_margin(h, epsilon, lambdas, N, scan: ResonanceScan) -> float:
    """min over non-resonant 0 < |k|_1 <= N of |sin((h / 2 epsilon) k . lambda)| / sqrt(h).

    Vectors inside the resonance module are excluded.  The caller compares
    the returned margin against their own constant c.
    """
    lambdas = np.asarray(lambdas, dtype=float)
    if h <= 0 or epsilon <= 0:
        raise DomainError("h and epsilon must be positive")
    if lambdas.size == 0:
        raise DomainError("empty frequency vector has no non-resonant candidates")
    factor = h / (2.0 * epsilon)
    best = None
    for k in itertools.product(range(-N, N + 1), repeat=lambdas.size):
        n1 = _norm1(k)
        if not 0 < n1 <= N:
            continue
        dot = float(np.dot(k, lambdas))
        if abs(dot) <= scan.tol:
            continue
        val = abs(np.sin(factor * dot)) / np.sqrt(h)
        if best is None or val < best:
            best = val
    if best is None:
        raise DomainError("no non-resonant candidate vectors with |k| <= N")
    return float(best)
