import math

import numpy as np
import pytest

from hcss.quadrature import QuadratureError, QuadratureSpec, integrate


def test_polynomial_exact():
    res = integrate(lambda x: x ** 5, 0, 2)
    assert res.value == pytest.approx(64 / 6, rel=1e-14)


def test_infinite_tail():
    res = integrate(lambda x: np.exp(-x * x), 0, math.inf)
    assert res.value == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)
    assert res.error < 1e-9


def test_breakpoints_handle_kinks():
    res = integrate(lambda x: np.abs(x - 0.3), 0, 1, points=(0.3,))
    assert res.value == pytest.approx(0.3 ** 2 / 2 + 0.7 ** 2 / 2, rel=1e-13)


def test_vector_valued():
    k = np.array([1.0, 2.0, 3.0])
    res = integrate(lambda x: np.exp(-np.outer(x, k)), 0, math.inf)
    assert res.value.shape == (3,)
    assert np.allclose(res.value, 1 / k, rtol=1e-12)


def test_complex_integrand():
    res = integrate(lambda x: np.exp(1j * x), 0, math.pi)
    assert res.value == pytest.approx(2j, abs=1e-13)


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_nonfinite_raises():
    with pytest.raises(QuadratureError):
        integrate(lambda x: 1 / (x - 0.5), 0, 1)


def test_panel_limit():
    with pytest.raises(QuadratureError):
        integrate(lambda x: np.sin(1 / x), 1e-6, 1, QuadratureSpec(1e-14, 1e-14, 5))


def test_bad_spec():
    with pytest.raises(ValueError):
        QuadratureSpec(0, 1e-10)
