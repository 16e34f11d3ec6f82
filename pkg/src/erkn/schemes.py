"""One-stage explicit ERKN scheme coefficients and the sigma reweighting.

A scheme is the triple (c1, b1, bbar1) with the weights given as scalar
functions of xi = h * omega_j, applied per frequency block.  The four
builtin schemes:

    ERKN1: c1=1/2  bbar1 = phi2(xi^2)                 b1 = cos(xi/2)
    ERKN2: c1=1/2  bbar1 = cos(xi/2) sinc(xi) / 2     b1 = cos(xi/2)^3
    ERKN3: c1=1/2  bbar1 = sinc(xi/2) / 2             b1 = cos(xi/2)
    ERKN4: c1=1/2  bbar1 = sinc(xi) sinc(xi/2) / 2    b1 = sinc(xi) cos(xi/2)

All are second order; only ERKN2-4 are symmetric and only ERKN3 is
symplectic (see conditions.py for the checkers).
"""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import SingularCoefficientError
from .phi import phi
from .system import OscillatorySystem, State

#: |b1| or |bbar1| below this raises instead of dividing (sigma, modified energies).
SINGULARITY_THRESHOLD = 1e-8


@dataclass(frozen=True)
class ErknScheme:
    """Named (c1, b1(xi), bbar1(xi)) coefficient triple.

    b1 and bbar1 must be even in xi and uniformly bounded on the xi range
    the integration touches; consistent schemes have b1(0) = 1 and
    bbar1(0) = 1/2.
    """

    name: str
    c1: float
    b1: Callable[[float], float] = field(repr=False)
    bbar1: Callable[[float], float] = field(repr=False)


def _cos_half(xi):
    return phi(0, 0.5 * xi)


_BUILTINS = {
    "ERKN1": lambda: ErknScheme(
        "ERKN1",
        0.5,
        b1=_cos_half,
        bbar1=lambda xi: phi(2, xi),
    ),
    "ERKN2": lambda: ErknScheme(
        "ERKN2",
        0.5,
        b1=lambda xi: _cos_half(xi) ** 3,
        bbar1=lambda xi: 0.5 * _cos_half(xi) * phi(1, xi),
    ),
    "ERKN3": lambda: ErknScheme(
        "ERKN3",
        0.5,
        b1=_cos_half,
        bbar1=lambda xi: 0.5 * phi(1, 0.5 * xi),
    ),
    "ERKN4": lambda: ErknScheme(
        "ERKN4",
        0.5,
        b1=lambda xi: phi(1, xi) * _cos_half(xi),
        bbar1=lambda xi: 0.5 * phi(1, xi) * phi(1, 0.5 * xi),
    ),
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))


def builtin_scheme(name: str) -> ErknScheme:
    """Return one of the builtin schemes by name (ERKN1..ERKN4)."""
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown scheme {name!r}; builtins are {', '.join(BUILTIN_NAMES)}") from None


def sigma(scheme: ErknScheme, xi: float) -> float:
    """Blockwise energy reweighting factor of the modified energies.

    Computed from the defining two-term expression

        sinc(xi) cos(xi/2) / (2 bbar1)  +  xi^2 sinc(xi) (sinc(xi/2)/2) / (2 b1);

    the closed form cos(xi/2)/b1(xi) is checked as a property in the tests,
    not used here.
    """
    b1 = scheme.b1(xi)
    bbar1 = scheme.bbar1(xi)
    if abs(b1) < SINGULARITY_THRESHOLD:
        raise SingularCoefficientError(xi, "b1")
    if abs(bbar1) < SINGULARITY_THRESHOLD:
        raise SingularCoefficientError(xi, "bbar1")
    s = phi(1, xi)
    return s * phi(0, 0.5 * xi) / (2.0 * bbar1) + xi * xi * s * (0.5 * phi(1, 0.5 * xi)) / (2.0 * b1)


def modified_energies(scheme: ErknScheme, sys: OscillatorySystem, s: State, h: float, mu):
    """Return (H*, I*_mu) at the given state.

    H* adds (sigma(xi_j) - 1) I_j to the total energy; I*_mu weights each
    I_j by sigma(xi_j) mu_j / lambda_j.  Both reduce to the plain energies
    whenever sigma is identically 1 (ERKN3) or h -> 0.
    """
    mu = np.asarray(mu, dtype=float)
    H = sys.total_energy(s)
    hstar = H
    imustar = 0.0
    for j in range(1, sys.n_oscillatory + 1):
        xi = h * sys.lambdas[j - 1] / sys.epsilon
        sig = sigma(scheme, xi)
        Ij = sys.oscillatory_energy(s, j)
        hstar += (sig - 1.0) * Ij
        imustar += sig * (mu[j - 1] / sys.lambdas[j - 1]) * Ij
    return hstar, imustar
