import math

import mpmath as mp
import numpy as np
import pytest

from erkn.errors import DomainError, UnsupportedOrderError
from erkn.phi import MAX_ORDER, TAYLOR_CUTOFF, phi, sinc

mp.mp.dps = 40


def phi_mp(j, xi):
    """Arbitrary-precision reference, written directly from the closed forms."""
    x = mp.mpf(xi)          # exact binary conversion
    if x == 0:
        return mp.mpf(1) / mp.factorial(j)
    if j == 0:
        return mp.cos(x)
    if j == 1:
        return mp.sin(x) / x
    if j == 2:
        return (1 - mp.cos(x)) / x**2
    return (x - mp.sin(x)) / x**3


def test_values_at_zero():
    assert phi(0, 0.0) == 1.0
    assert phi(1, 0.0) == 1.0
    assert phi(2, 0.0) == 0.5
    assert phi(3, 0.0) == pytest.approx(1.0 / 6.0, abs=0.0, rel=1e-16)


def test_phi1_at_pi():
    assert abs(phi(1, math.pi)) < 1e-16


def test_phi2_at_one_high_precision():
    # 1 - cos(1) to 20 digits
    assert phi(2, 1.0) == pytest.approx(0.4596976941318602826, rel=1e-15)


def test_sinc_values():
    assert sinc(0.0) == 1.0
    assert sinc(math.pi / 2) == pytest.approx(2.0 / math.pi, rel=1e-15)
    assert sinc(0.7) == pytest.approx(0.92031098176813007668, rel=1e-15)


@pytest.mark.parametrize("j", range(MAX_ORDER + 1))
def test_matches_high_precision_reference(j):
    for xi in np.linspace(1e-4, 10.0, 400):
        ref = float(phi_mp(j, float(xi)))
        assert phi(j, float(xi)) == pytest.approx(ref, rel=8 * np.finfo(float).eps)


def test_evenness_bit_for_bit():
    for j in range(MAX_ORDER + 1):
        for xi in [1e-5, 0.005, 0.0099, 0.5, 1.9, 2.1, 3.0, 9.7]:
            assert phi(j, -xi) == phi(j, xi)
    assert sinc(-0.3) == sinc(0.3)


@pytest.mark.parametrize("j", range(MAX_ORDER + 1))
def test_continuity_at_series_switch(j):
    t = TAYLOR_CUTOFF[j]
    below = phi(j, np.nextafter(t, 0.0))
    above = phi(j, np.nextafter(t, np.inf))
    assert abs(below - above) <= 8 * np.finfo(float).eps


def test_recurrence_multiplied_form():
    # phi_j + xi^2 phi_{j+2} = 1/j!, stable in doubles at any xi
    for j in (0, 1):
        for xi in np.linspace(1e-3, 10.0, 500):
            lhs = phi(j, float(xi)) + xi * xi * phi(j + 2, float(xi))
            assert lhs == pytest.approx(1.0 / math.factorial(j), rel=5e-14)


def test_pythagorean_identity():
    for xi in np.linspace(0.0, 10.0, 500):
        val = phi(0, float(xi)) ** 2 + xi * xi * phi(1, float(xi)) ** 2
        assert val == pytest.approx(1.0, abs=1e-12)


def test_rejects_non_finite():
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(DomainError):
            phi(0, bad)
        with pytest.raises(DomainError):
            sinc(bad)


def test_rejects_unsupported_order():
    with pytest.raises(UnsupportedOrderError):
        phi(4, 1.0)
    with pytest.raises(UnsupportedOrderError):
        phi(-1, 1.0)
