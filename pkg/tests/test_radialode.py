import math

import pytest

from hcss import hcseries
from hcss.radialode import RadialOperator, apply, eigen_residual, phi_method
from hcss.rootdata import parse_pair


def test_constant_is_annihilated():
    op = RadialOperator(3.0, 1.0)
    assert abs(apply(op, lambda t: 2.5, 1.0)) < 1e-9


def test_explicit_eigenfunction():
    lam = 3.0
    op = RadialOperator(-2.0, 0.0)

    def f(t):
        return (1 - lam) * math.exp((lam + 1) * t) + (1 + lam) * math.exp((lam - 1) * t)

    assert apply(op, f, 1.0, 1e-3) == pytest.approx((lam * lam - 1) * f(1.0), rel=1e-6)


def test_finite_series_residual():
    assert eigen_residual(parse_pair("osp:0:1"), 3, "series", (0.7, 1.3)) <= 1e-6


def test_harish_chandra_series_residual():
    # lam = 2.5 lies in Z/2, so the Weyl sum is refused; a single Phi_lam is
    # still an eigenfunction
    pair = parse_pair("u:1:0")
    res = eigen_residual(pair, 2.5, lambda lam, t: hcseries.phi_series(pair, lam, t, t_min=1e-3))
    assert res <= 1e-5
    assert eigen_residual(pair, 2.3, "series") <= 1e-5


def test_zero_function():
    assert eigen_residual(parse_pair("u:1:0"), 1.3, lambda lam, t: 0.0) == 0


@pytest.mark.parametrize("spec, method", [("osp:2:2", "jacobi"), ("osp:0:2", "closed"),
                                          ("osp:1:1", "integral"), ("u:0:1", "integral")])
def test_other_routes(spec, method):
    assert eigen_residual(parse_pair(spec), 1.7 + 0.3j, method, (0.8,)) <= 1e-5


def test_first_order_coefficient():
    op = RadialOperator.for_pair(parse_pair("u:2:1"))
    t = 0.6
    assert op.first_order_coefficient(t) == pytest.approx(2 / math.tanh(t) + 2 / math.tanh(2 * t))


def test_errors():
    with pytest.raises(ValueError):
        RadialOperator.for_pair(parse_pair("gl11"))
    with pytest.raises(ValueError):
        apply(RadialOperator(1, 0), lambda t: t, 1e-3)
    with pytest.raises(ValueError):
        phi_method(parse_pair("osp:1:1"), "closed")
    with pytest.raises(ValueError):
        phi_method(parse_pair("osp:1:1"), "bogus")
