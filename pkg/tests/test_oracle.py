import cmath
import math

import mpmath
import numpy as np
import pytest

from hcss import hcseries, oracle
from hcss.cfunc import fit_constant
from hcss.jets import Jet
from hcss.oracle import CutoffSpec, make_cutoff
from hcss.rootdata import GL11Param, parse_pair


def test_h_profile_unitary_examples():
    assert oracle.h_profile_unitary(0.0, 0.0) == pytest.approx(0.0)
    assert oracle.h_profile_unitary(0.0, -3.0) == pytest.approx(math.log(4))
    y2, s = 0.7, 1.3
    assert oracle.h_profile_unitary(0.5j * s, -y2) == pytest.approx(
        0.5 * math.log((1 + y2) ** 2 + s * s))


def test_h_profile_osp_examples():
    assert oracle.h_profile_osp(0.0) == 0
    assert oracle.h_profile_osp(3.0) == pytest.approx(math.log(4))
    d = oracle.h_profile_osp(Jet.variable(1.0, 2)).derivatives()
    assert np.allclose(d, [math.log(2), 0.5, -0.25])


def test_psi_homogeneity():
    c, u, s, t = 0.8, 1.7, 0.4, 2.5
    assert oracle.psi(c, u * t, s * t) == pytest.approx(t * t * oracle.psi(c / t, u, s))


def test_cutoff_shape():
    spec = CutoffSpec((0.6, 1.8), (0.3, 2.7))
    chi = make_cutoff(spec)
    x = np.linspace(0.0, 3.5, 701)
    v = np.asarray(chi(x)).real
    assert np.all((v >= 0) & (v <= 1))
    assert np.all(v[(x >= 0.6) & (x <= 1.8)] == 1)
    assert np.all(v[(x <= 0.3) | (x >= 2.7)] == 0)
    # smooth: the jet derivatives are finite and vanish on the plateau
    d = chi(Jet.variable(np.array([1.0, 2.0]), 4)).derivatives()
    assert np.all(np.isfinite(d))
    assert np.allclose(d[1:, 0], 0)
    w = chi.complement(Jet.variable(2.0, 2)).derivatives()
    assert np.allclose(w + chi(Jet.variable(2.0, 2)).derivatives(), [1, 0, 0])


@pytest.mark.parametrize("plateau, support", [((1.1, 1.8), (0.3, 2.7)), ((0.6, 1.8), (0.7, 2.7)),
                                              ((0.6, 1.8), (0.0, 2.7)), ((0.6, 3.0), (0.3, 2.7))])
def test_cutoff_validation(plateau, support):
    with pytest.raises(ValueError):
        CutoffSpec(plateau, support)


def test_osp_p0_matches_finite_series():
    pair = parse_pair("osp:0:1")
    ts = (0.5, 1.0, 2.0)
    orc = [oracle.phi_integral(pair, 3, t) for t in ts]
    ref = [2 * math.exp(4 * t) - 4 * math.exp(2 * t) for t in ts]
    assert fit_constant(orc, ref)[1] < 1e-13


def test_real_hyperbolic_3_space():
    # osp(2|0) is H^3 (m_alpha = 2) where phi = sinh(lam t) / (lam sinh t)
    pair = parse_pair("osp:2:0")
    pts = [(lam, t) for lam in (2.0, 1.3 + 0.4j) for t in (0.5, 1.0, 2.0)]
    orc = [oracle.phi_integral(pair, lam, t) for lam, t in pts]
    ref = [cmath.sinh(lam * t) / (lam * math.sinh(t)) for lam, t in pts]
    assert fit_constant(orc, ref)[1] < 1e-10


def test_real_hyperbolic_4_space():
    # osp(3|0) is H^4: phi = 2F1((rho+lam)/2, (rho-lam)/2; 2; -sinh^2 t), rho = 3/2
    pair = parse_pair("osp:3:0")
    pts = [(lam, t) for lam in (2.0, 1.3 + 0.4j) for t in (0.5, 1.0, 2.0)]
    orc = [oracle.phi_integral(pair, lam, t) for lam, t in pts]
    ref = [complex(mpmath.hyp2f1((1.5 + lam) / 2, (1.5 - lam) / 2, 2, -math.sinh(t) ** 2))
           for lam, t in pts]
    assert fit_constant(orc, ref)[1] < 1e-10


def test_unitary_against_series():
    pair = parse_pair("u:0:1")
    pts = [(1.3, 0.8), (1.3, 1.5), (0.7 + 0.4j, 0.8)]
    orc = [oracle.phi_integral(pair, lam, t) for lam, t in pts]
    ser = [hcseries.phi_spherical(pair, lam, t) for lam, t in pts]
    assert fit_constant(orc, ser)[1] < 1e-5


def test_plateau_change():
    pair = parse_pair("u:1:1")
    a = oracle.phi_integral(pair, 1.3, 1.0, chi=CutoffSpec((0.6, 1.8), (0.3, 2.7)))
    b = oracle.phi_integral(pair, 1.3, 1.0, chi=CutoffSpec((0.4, 2.5), (0.3, 2.7)))
    assert abs(a - b) <= 1e-6 * abs(a)


def test_full_result_parts():
    pair = parse_pair("osp:2:1")
    res = oracle.phi_integral(pair, 1.3, 1.0, full=True)
    assert res.value == pytest.approx(sum(res.parts))
    assert res.error < 1e-8 * abs(res.value)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_berezin_osp_p0_equals_integral(q):
    pair = parse_pair(f"osp:0:{q}")
    for lam, t in [(2.3, 0.5), (0.7 + 0.3j, 1.0)]:
        a = oracle.phi_berezin_osp_p0(q, lam, t)
        assert a == pytest.approx(oracle.phi_integral(pair, lam, t), rel=1e-12)


def test_gl11_examples():
    assert oracle.phi_integral_gl11(GL11Param(1.0, 0.0), (0.0, 0.5)) == pytest.approx(-math.sinh(1))
    assert oracle.phi_integral_gl11(GL11Param(0.0, 0.7), (0.3, 0.2)) == 0


def test_errors():
    with pytest.raises(ValueError):
        oracle.phi_integral(parse_pair("u:1:0"), 1.3, 0.0)
    with pytest.raises(ValueError):
        oracle.phi_integral(parse_pair("gl11"), 1.3, 1.0)
    with pytest.raises(ValueError):
        oracle.phi_parts_osp(parse_pair("u:1:0"), 1.3, 0.1)
