"""Stable scalar evaluation of the trigonometric phi functions.

phi_j is the entire function sum_k (-1)^k V^k / (2k+j)! evaluated at V = xi^2,
so phi_0 = cos(xi), phi_1 = sin(xi)/xi, phi_2 = (1-cos(xi))/xi^2 and
phi_3 = (xi-sin(xi))/xi^3.  Small arguments go through a truncated series to
avoid the cancellation hiding in the closed forms; above the cutoff the
closed forms are rewritten so that no difference of nearly equal terms
remains (phi_2 uses 2*sin^2(xi/2)/xi^2, which is exact to a few ulp).

The xi - sin(xi) subtraction in phi_3 still loses ~4 digits near xi = 0.01,
so order 3 keeps the series up to xi = 2 (12 terms reach full precision
there) and only then falls back to the closed form.
"""

import math

from .errors import DomainError, UnsupportedOrderError

MAX_ORDER = 3

#: Per-order switch point between the truncated series and the closed form.
TAYLOR_CUTOFF = (1e-2, 1e-2, 1e-2, 2.0)

_TAYLOR_TERMS = (4, 4, 4, 12)

# Series coefficients (-1)^k / (2k+j)!, highest power first for Horner.
_SERIES = tuple(
    tuple(
        (-1.0) ** k / math.factorial(2 * k + j)
        for k in reversed(range(_TAYLOR_TERMS[j]))
    )
    for j in range(MAX_ORDER + 1)
)


def phi(j: int, xi: float) -> float:
    """Evaluate phi_j(xi^2) for j in 0..3.

    Even in xi by construction (the sign is dropped before any arithmetic),
    so phi(j, -xi) == phi(j, xi) bit for bit.
    """
    if not isinstance(j, int) or j < 0 or j > MAX_ORDER:
        raise UnsupportedOrderError(f"phi order must be an integer in 0..{MAX_ORDER}, got {j!r}")
    xi = float(xi)
    if not math.isfinite(xi):
        raise DomainError(f"phi argument must be finite, got {xi!r}")
    x = abs(xi)
    if x < TAYLOR_CUTOFF[j]:
        v = x * x
        acc = 0.0
        for c in _SERIES[j]:
            acc = acc * v + c
        return acc
    if j == 0:
        return math.cos(x)
    if j == 1:
        return math.sin(x) / x
    if j == 2:
        s = math.sin(0.5 * x)
        return 2.0 * s * s / (x * x)
    return (x - math.sin(x)) / (x * x * x)


def sinc(x: float) -> float:
    """sin(x)/x with the limit value 1 at x = 0."""
    return phi(1, x)
