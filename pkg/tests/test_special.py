import math

import pytest

from hcss.special import GammaPole, binom, complex_gamma, pochhammer, rgamma
from reference_values import GAMMA_REFERENCE


def test_examples():
    assert complex_gamma(1) == pytest.approx(1, rel=1e-15)
    assert complex_gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert complex_gamma(3 + 0j) == pytest.approx(2, rel=1e-15)


@pytest.mark.parametrize("z, ref", GAMMA_REFERENCE)
def test_against_mpmath(z, ref):
    assert abs(complex_gamma(z) - ref) <= 1e-12 * abs(ref)


@pytest.mark.parametrize("n", [0, -1, -5])
def test_poles(n):
    with pytest.raises(GammaPole):
        complex_gamma(n)
    assert rgamma(n) == 0


def test_pole_is_zero_division():
    with pytest.raises(ZeroDivisionError):
        complex_gamma(-2 + 1e-14)


def test_rgamma_is_reciprocal():
    for z in (0.3, 2.5, -1.7, 1 + 2j):
        assert rgamma(z) * complex_gamma(z) == pytest.approx(1, rel=1e-13)


def test_pochhammer_and_binom():
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6
    assert pochhammer(2.5, 0) == 1
    assert binom(5, 2) == 10
    assert binom(-2, 3) == pytest.approx(-4)
    assert binom(1.5, -1) == 0
