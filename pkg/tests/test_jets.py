import math

import numpy as np
import pytest

from hcss.jets import Jet, derivative, jexp, jlog, jpow, jsqrt


def test_variable_and_constant():
    x = Jet.variable(2.0, 3)
    assert np.allclose(x.coeffs, [2, 1, 0, 0])
    c = Jet.constant(5.0, 2)
    assert np.allclose(c.derivatives(), [5, 0, 0])


def test_product_rule():
    x = Jet.variable(1.5, 4)
    f = x * x * x
    assert np.allclose(f.derivatives(), [1.5 ** 3, 3 * 1.5 ** 2, 6 * 1.5, 6, 0])


def test_exp_log_inverse():
    x = Jet.variable(0.7, 6)
    assert np.allclose(jlog(jexp(x)).coeffs, x.coeffs, atol=1e-14)


def test_exp_derivatives():
    d = jexp(Jet.variable(0.3, 5) * 2).derivatives()
    assert np.allclose(d, [2 ** k * math.exp(0.6) for k in range(6)])


def test_pow_matches_closed_form():
    a = 0.5 - 1.2j
    d = jpow(Jet.variable(2.0, 4), a).derivatives()
    ref, c = [], 1.0
    for k in range(5):
        ref.append(c * 2.0 ** (a - k))
        c *= a - k
    assert np.allclose(d, ref, rtol=1e-13)


def test_integer_pow_with_zero_body():
    d = jpow(Jet.variable(0.0, 3), 2).derivatives()
    assert np.allclose(d, [0, 0, 2, 0])


def test_sqrt_and_division():
    x = Jet.variable(4.0, 3)
    assert np.allclose((jsqrt(x) * jsqrt(x)).coeffs, x.coeffs)
    assert np.allclose((1 / x * x).coeffs, [1, 0, 0, 0])


def test_batched_jets():
    x = Jet.variable(np.array([0.5, 1.0, 2.0]), 2)
    f = jexp(-x * x)
    assert f.coeffs.shape == (3, 3)
    assert np.allclose(f.derivative(1), -2 * x.value * np.exp(-x.value ** 2))


def test_compose():
    inner = jexp(Jet.variable(0.2, 4))
    outer = jlog(Jet.variable(math.exp(0.2), 4))
    assert np.allclose(inner.compose(outer).coeffs, Jet.variable(0.2, 4).coeffs, atol=1e-14)


def test_derivative_helper():
    assert derivative(lambda x: x * x * x, 2.0, 2) == pytest.approx(12)


def test_derivative_order_check():
    with pytest.raises(ValueError):
        Jet.variable(1.0, 2).derivative(3)
