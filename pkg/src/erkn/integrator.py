"""The one-stage explicit ERKN step and the fixed-step driver.

Per frequency block j with xi_j = h * omega_j the step reads

    Q   = cos(c1 xi) q + h c1 sinc(c1 xi) p
    q+  = cos(xi) q + h sinc(xi) p + h^2 bbar1(xi) g(Q)
    p+  = -h omega^2 sinc(xi) q + cos(xi) p + h b1(xi) g(Q)

with g = -grad U, evaluated exactly once per step.  The momentum update is
written with -h omega^2 sinc(xi) rather than -omega sin(xi) so the
lambda = 0 block degenerates smoothly to the Stoermer-type update
q+ = q + h p + h^2 bbar1(0) g, p+ = p + h b1(0) g.

Coefficients depend only on (scheme, system, h); StepWorkspace caches the
flat per-component arrays so repeated stepping costs a handful of vector
operations.  A negative h is accepted (used by the adjoint round-trip
test): the xi-coefficients are even, the sign enters the h prefactors.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, DomainError
from .phi import phi
from .schemes import ErknScheme
from .system import OscillatorySystem, State

#: ||q|| + ||p|| above this counts as divergence (proxy for the compact-set assumption).
DIVERGENCE_NORM = 1e6


class StepWorkspace:
    """Scratch coefficient cache keyed by (scheme identity, system identity, h)."""

    def __init__(self):
        self._key = None
        self._coeffs = None

    def coefficients(self, scheme: ErknScheme, sys: OscillatorySystem, h: float):
        key = (id(scheme), id(sys), h)
        if key != self._key:
            self._coeffs = _build_coefficients(scheme, sys, h)
            self._key = key
        return self._coeffs


def _build_coefficients(scheme, sys, h):
    dims = [b.dim for b in sys.blocks]
    c1 = scheme.c1

    def per_block(f):
        return np.repeat([f(h * w) for w in sys.omegas], dims)

    cos_xi = per_block(lambda xi: phi(0, xi))
    h_sinc = h * per_block(lambda xi: phi(1, xi))
    cos_c = per_block(lambda xi: phi(0, c1 * xi))
    h_c_sinc = h * c1 * per_block(lambda xi: phi(1, c1 * xi))
    # force coefficients with g = -grad U folded in
    neg_h2_bbar = -h * h * per_block(scheme.bbar1)
    neg_h_b1 = -h * per_block(scheme.b1)
    neg_h_w2_sinc = -h * sys.omega_flat**2 * per_block(lambda xi: phi(1, xi))
    return cos_xi, h_sinc, cos_c, h_c_sinc, neg_h2_bbar, neg_h_b1, neg_h_w2_sinc


def step(scheme: ErknScheme, sys: OscillatorySystem, h: float, s: State,
         ws: StepWorkspace = None) -> State:
    """Advance one step of size h.  Deterministic: same inputs, same bits."""
    sys._check_state(s)
    if h == 0 or not np.isfinite(h):
        raise DomainError(f"step size must be finite and nonzero, got {h!r}")
    if ws is None:
        ws = StepWorkspace()
    cos_xi, h_sinc, cos_c, h_c_sinc, neg_h2_bbar, neg_h_b1, neg_h_w2_sinc = \
        ws.coefficients(scheme, sys, h)
    q, p = s.q, s.p
    Q = cos_c * q + h_c_sinc * p
    dU = sys.gradient(Q)
    q1 = cos_xi * q + h_sinc * p + neg_h2_bbar * dU
    p1 = neg_h_w2_sinc * q + cos_xi * p + neg_h_b1 * dU
    if not np.sqrt(q1 @ q1) + np.sqrt(p1 @ p1) < DIVERGENCE_NORM:
        raise DivergenceError(step_index=1)
    return State(q1, p1)


@dataclass
class SampleSeries:
    """Raw observable samples: one named column per observer, plus time."""

    names: list
    t: np.ndarray
    values: np.ndarray  # shape (n_samples, n_observers)

    def __len__(self):
        return self.t.size


def integrate(scheme: ErknScheme, sys: OscillatorySystem, h: float, s0: State,
              n_steps: int, sample_every: int = 1, observers=()) -> SampleSeries:
    """Run n_steps fixed steps, sampling the observers every sample_every steps.

    ``observers`` is a sequence of (name, f) with f(sys, state) -> float.
    Step 0 and step n_steps are always included in the samples.  On
    divergence a DivergenceError is raised with the last finite sample row
    attached as (t, values).
    """
    if n_steps < 1:
        raise DomainError(f"n_steps must be >= 1, got {n_steps}")
    if sample_every < 1:
        raise DomainError(f"sample_every must be >= 1, got {sample_every}")
    if h <= 0 or not np.isfinite(h):
        raise DomainError(f"h must be positive and finite, got {h!r}")
    sys._check_state(s0)

    names = [name for name, _ in observers]
    funcs = [f for _, f in observers]
    cos_xi, h_sinc, cos_c, h_c_sinc, neg_h2_bbar, neg_h_b1, neg_h_w2_sinc = \
        StepWorkspace().coefficients(scheme, sys, h)
    gradient = sys.gradient

    q = s0.q.copy()
    p = s0.p.copy()
    times = []
    rows = []

    def take_sample(n):
        state = State(q, p)
        times.append(n * h)
        rows.append([f(sys, state) for f in funcs])

    take_sample(0)
    for n in range(1, n_steps + 1):
        Q = cos_c * q + h_c_sinc * p
        dU = gradient(Q)
        q, p = (
            cos_xi * q + h_sinc * p + neg_h2_bbar * dU,
            neg_h_w2_sinc * q + cos_xi * p + neg_h_b1 * dU,
        )
        if not np.sqrt(q @ q) + np.sqrt(p @ p) < DIVERGENCE_NORM:
            last = (times[-1], list(rows[-1]))
            raise DivergenceError(step_index=n, last_sample=last)
        if n % sample_every == 0 or n == n_steps:
            take_sample(n)

    return SampleSeries(names=names, t=np.array(times), values=np.array(rows))
