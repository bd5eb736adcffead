import math

import numpy as np
import pytest

from hcss.jets import Jet, jexp
from hcss.radial import (BerezinMeasure, RadialProfile, gaussian_profile, localize, radial_integral,
                         reduce_dims)
from hcss.verify import random_bump_profile

G = gaussian_profile()


@pytest.mark.parametrize("p, q, ref", [(2, 1, 1.0), (0, 1, 1 / math.pi), (1, 0, math.sqrt(math.pi))])
def test_localize_examples(p, q, ref):
    assert localize(p, q, G) == pytest.approx(ref, abs=1e-12)


@pytest.mark.parametrize("p, q, ref", [(2, 1, 1.0), (4, 2, 1.0), (0, 1, 1 / math.pi),
                                       (1, 1, math.pi ** -0.5)])
def test_radial_integral_examples(p, q, ref):
    assert radial_integral(p, q, G) == pytest.approx(ref, abs=1e-12)


def test_reduce_dims():
    assert reduce_dims(4, 2, 2) == (0, 0)
    assert reduce_dims(2, 1, 1) == (0, 0)
    with pytest.raises(ValueError):
        reduce_dims(2, 2, 2)
    with pytest.raises(ValueError):
        reduce_dims(3, 1, -1)


def test_measure_normalization():
    assert BerezinMeasure(3, 2).normalization == pytest.approx((-2 * math.pi) ** -2)


def test_three_routes_on_bump():
    prof = random_bump_profile(np.random.default_rng(3))
    for p, q in [(0, 2), (1, 2), (3, 1), (4, 1)]:
        a = localize(p, q, prof)
        b = radial_integral(p, q, prof)
        c = BerezinMeasure(p, q).integrate(prof)
        assert a == pytest.approx(b, rel=1e-9, abs=1e-12)
        assert a == pytest.approx(c, rel=1e-9, abs=1e-12)


def test_from_radial_even_extension():
    prof = RadialProfile.from_radial(lambda r: jexp(-r * r * r * r))
    ref = math.gamma(0.25) / 4          # int_0^oo e^{-r^4} dr
    assert radial_integral(1, 0, prof) == pytest.approx(2 * ref, rel=1e-10)


def test_from_radial_rejects_odd_profile():
    prof = RadialProfile.from_radial(lambda r: jexp(-r) * 1.0)
    with pytest.raises(ValueError):
        radial_integral(0, 1, prof)


def test_batched_profile():
    k = np.array([1.0, 2.0])
    prof = RadialProfile(lambda u: jexp(-u * k), batch=(2,))
    vals = radial_integral(2, 0, prof)
    assert np.allclose(vals, math.pi / k, rtol=1e-12)
