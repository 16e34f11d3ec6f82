"""Multi-frequency highly oscillatory Hamiltonian systems.

A system is a diagonal frequency matrix Omega = diag(omega_j I_{d_j}) with
omega_j = lambda_j / epsilon, plus a smooth potential U.  The Hamiltonian is

    H(q, p) = 1/2 sum_j (|p_j|^2 + omega_j^2 |q_j|^2) + U(q),

with block 0 reserved for the slow (lambda_0 = 0) components.  Positions and
momenta are kept as flat vectors; the block layout tells which slice belongs
to which frequency.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ShapeError


@dataclass(frozen=True)
class FrequencyBlock:
    """One (lambda_j, d_j) block of the diagonal frequency matrix."""

    lam: float
    dim: int

    def __post_init__(self):
        if not np.isfinite(self.lam) or self.lam < 0:
            raise DomainError(f"block frequency must be finite and >= 0, got {self.lam!r}")
        if self.dim < 0:
            raise DomainError(f"block dimension must be >= 0, got {self.dim!r}")


@dataclass(frozen=True)
class State:
    """Flat position/momentum vectors with the system's block layout."""

    q: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "q", np.array(self.q, dtype=float))
        object.__setattr__(self, "p", np.array(self.p, dtype=float))
        if self.q.ndim != 1 or self.p.ndim != 1 or self.q.shape != self.p.shape:
            raise ShapeError("q and p must be one-dimensional and the same length")

    @property
    def dim(self) -> int:
        return self.q.size

    def copy(self) -> "State":
        return State(self.q, self.p)


class OscillatorySystem:
    """Immutable system definition: epsilon, frequency blocks and potential.

    The first block must carry lambda = 0 (it may be empty); the remaining
    blocks need lambda >= 1, mutually distinct.  ``potential`` maps q to
    U(q) and ``gradient`` maps q to grad U(q); the stepper uses the force
    g = -grad U.  Energy evaluations are pure, so a system can be shared
    between threads as long as the supplied callables are thread-safe.
    """

    def __init__(self, epsilon, blocks, potential, gradient):
        if not np.isfinite(epsilon) or epsilon <= 0:
            raise DomainError(f"epsilon must be a positive real, got {epsilon!r}")
        blocks = tuple(
            b if isinstance(b, FrequencyBlock) else FrequencyBlock(*b) for b in blocks
        )
        if not blocks or blocks[0].lam != 0.0:
            raise DomainError("the first block must have lambda = 0")
        osc = blocks[1:]
        if any(b.lam < 1.0 for b in osc):
            raise DomainError("oscillatory blocks must have lambda >= 1")
        if any(b.dim < 1 for b in osc):
            raise DomainError("oscillatory blocks must have dim >= 1")
        lams = [b.lam for b in osc]
        if len(set(lams)) != len(lams):
            raise DomainError("oscillatory block frequencies must be mutually distinct")

        self.epsilon = float(epsilon)
        self.blocks = blocks
        self.potential = potential
        self.gradient = gradient

        dims = [b.dim for b in blocks]
        offsets = np.concatenate(([0], np.cumsum(dims)))
        self.dim = int(offsets[-1])
        self.slices = tuple(slice(int(a), int(b)) for a, b in zip(offsets[:-1], offsets[1:]))
        self.lambdas = np.array(lams, dtype=float)          # oscillatory lambdas only
        self.omegas = np.array([b.lam / self.epsilon for b in blocks])
        # per-component omega, used by the stepper and the quadratic energy
        self.omega_flat = np.repeat(self.omegas, dims) if self.dim else np.zeros(0)

    @classmethod
    def free(cls, epsilon, blocks):
        """System with U identically zero (pure harmonic oscillations)."""
        return cls(epsilon, blocks, lambda q: 0.0, lambda q: np.zeros(len(q)))

    @property
    def n_oscillatory(self) -> int:
        return len(self.blocks) - 1

    def _check_state(self, s: State):
        if s.dim != self.dim:
            raise ShapeError(f"state has dimension {s.dim}, system expects {self.dim}")

    def total_energy(self, s: State) -> float:
        """H(q, p): kinetic + harmonic + potential, all blocks included."""
        self._check_state(s)
        wq = self.omega_flat * s.q
        return 0.5 * (s.p @ s.p + wq @ wq) + float(self.potential(s.q))

    def oscillatory_energy(self, s: State, j: int) -> float:
        """I_j(q, p) for oscillatory block j (1-based; block 0 is excluded)."""
        self._check_state(s)
        if not 1 <= j <= self.n_oscillatory:
            raise IndexError(f"oscillatory block index must be in 1..{self.n_oscillatory}, got {j}")
        sl = self.slices[j]
        qj = s.q[sl]
        pj = s.p[sl]
        w = self.omegas[j]
        return 0.5 * (pj @ pj + w * w * (qj @ qj))

    def total_oscillatory_energy(self, s: State) -> float:
        """I(q, p) = sum_j I_j(q, p)."""
        return sum(self.oscillatory_energy(s, j) for j in range(1, self.n_oscillatory + 1))

    def weighted_oscillatory_energy(self, s: State, mu) -> float:
        """I_mu(q, p) = sum_j (mu_j / lambda_j) I_j(q, p)."""
        mu = np.asarray(mu, dtype=float)
        if mu.shape != (self.n_oscillatory,):
            raise ShapeError(
                f"mu must have length {self.n_oscillatory}, got shape {mu.shape}"
            )
        return sum(
            (mu[j - 1] / self.lambdas[j - 1]) * self.oscillatory_energy(s, j)
            for j in range(1, self.n_oscillatory + 1)
        )
