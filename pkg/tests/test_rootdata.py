from fractions import Fraction

import pytest

from hcss.rootdata import Family, GL11Param, make_pair, parse_pair, weyl_order


def test_unitary_multiplicities():
    pair = make_pair(Family.UNITARY, 2, 1)
    assert (pair.m_alpha, pair.m_2alpha, pair.rho) == (2, 1, 2)


def test_osp_multiplicities():
    pair = make_pair("osp", 0, 1)
    assert (pair.m_alpha, pair.m_2alpha, pair.rho) == (-2, 0, -1)


def test_osp_half_integral_rho():
    assert make_pair("osp", 3, 0).rho == Fraction(3, 2)
    assert make_pair("osp", 1, 1).rho == Fraction(-1, 2)


def test_gl11_forced_dimensions():
    pair = make_pair("gl11", 4, 7)
    assert (pair.p, pair.q) == (1, 1)
    assert (pair.m_alpha, pair.rho, pair.weyl_order) == (-2, -1, 1)
    assert not pair.anisotropic


@pytest.mark.parametrize("spec, order", [("u:0:3", 2), ("osp:0:2", 1), ("gl11", 1),
                                         ("osp:1:0", 2), ("u:1:0", 2)])
def test_weyl_order(spec, order):
    assert weyl_order(parse_pair(spec)) == order


@pytest.mark.parametrize("spec, finite", [("osp:0:1", True), ("osp:2:2", True), ("osp:2:1", True),
                                          ("osp:1:1", False), ("osp:3:0", False), ("u:0:2", False)])
def test_finite_series_flag(spec, finite):
    assert parse_pair(spec).finite_series is finite


def test_parse_roundtrip():
    for spec in ("u:1:1", "osp:2:1", "gl11"):
        assert parse_pair(spec).spec == spec
    assert parse_pair(" OSP : 2 : 1 ").spec == "osp:2:1"


@pytest.mark.parametrize("bad", ["", "sp:1:1", "u:1", "u:a:1", "osp:1:-1", "gl11:2"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_pair(bad)


def test_negative_dimensions_rejected():
    with pytest.raises(ValueError):
        make_pair("u", -1, 0)


def test_gl11_direction_nonzero():
    with pytest.raises(ValueError):
        GL11Param(1.0, 0.0, (0.0, 0.0))
