import math

import numpy as np
import pytest
from scipy.special import betainc

from trapmc.special import regularized_incomplete_beta


def test_endpoints():
    assert regularized_incomplete_beta(0.5, 0.5, 0.0) == 0.0
    assert regularized_incomplete_beta(0.5, 0.5, 1.0) == 1.0


def test_arcsine_closed_form():
    # I_x(1/2, 1/2) = (2/pi) arcsin(sqrt(x))
    for x in np.linspace(0.01, 0.99, 25):
        expected = 2.0 / math.pi * math.asin(math.sqrt(x))
        assert regularized_incomplete_beta(0.5, 0.5, x) == pytest.approx(
            expected, abs=1e-10
        )


def test_against_scipy_grid():
    params = [(0.3, 0.7), (0.5, 0.5), (0.7, 0.3), (2.0, 5.0), (0.1, 0.9)]
    xs = np.linspace(0.001, 0.999, 40)
    for a, b in params:
        for x in xs:
            assert regularized_incomplete_beta(a, b, x) == pytest.approx(
                betainc(a, b, x), abs=1e-10
            )


def test_complement_identity():
    for a, b, x in [(0.3, 0.7, 0.2), (0.6, 0.4, 0.85)]:
        left = regularized_incomplete_beta(a, b, x)
        right = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x)
        assert left == pytest.approx(right, abs=1e-12)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        regularized_incomplete_beta(-1.0, 0.5, 0.5)
    with pytest.raises(ValueError):
        regularized_incomplete_beta(0.5, 0.0, 0.5)
    with pytest.raises(ValueError):
        regularized_incomplete_beta(0.5, 0.5, 1.5)
