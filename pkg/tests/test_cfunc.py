import math

import numpy as np
import pytest

from hcss import cfunc
from hcss.cfunc import (FitMethod, NormalizationConstant, c_formula, c_gl11, c_integral_osp,
                        c_integral_unitary, c_limit_oracle, fit_constant, unitary_zeros)
from hcss.oracle import REFERENCE_CUTOFFS
from hcss.rootdata import GL11Param, make_pair, parse_pair
from reference_values import C_FORMULA_REFERENCE


@pytest.mark.parametrize("spec, lam, ref", C_FORMULA_REFERENCE)
def test_formula_against_mpmath(spec, lam, ref):
    assert abs(c_formula(parse_pair(spec), lam) - ref) <= 1e-12 * abs(ref)


def test_formula_examples():
    assert c_formula(parse_pair("u:1:0"), 2) == pytest.approx(0.25, rel=1e-14)
    assert c_formula(parse_pair("osp:0:1"), 2) == pytest.approx(1, rel=1e-14)
    # osp(0|2q): Gamma(lam)/Gamma(lam - q) = prod_{k=1}^{q} (lam - k)
    assert c_formula(parse_pair("osp:0:3"), 5.5) == pytest.approx(4.5 * 3.5 * 2.5, rel=1e-13)


@pytest.mark.parametrize("spec", ["osp:3:0", "osp:1:1", "osp:0:2", "osp:4:1"])
def test_duplication_rewrite(spec):
    pair = parse_pair(spec)
    const = 2 ** (float(pair.rho) - 1) / math.sqrt(math.pi)
    for lam in (1.0, 1.7, 2.3 + 0.5j):
        q = c_formula(pair, lam, "quotient")
        assert q == pytest.approx(const * c_formula(pair, lam, "ratio"), rel=1e-12)


def test_formula_errors():
    with pytest.raises(ValueError):
        c_formula(parse_pair("u:1:1"), 1.3, "ratio")
    with pytest.raises(ValueError):
        c_formula(parse_pair("gl11"), 1.3)
    with pytest.raises(ValueError):
        c_formula(parse_pair("osp:1:1"), 1.3, "bogus")


def test_unitary_zeros():
    assert unitary_zeros(parse_pair("u:0:3")) == [2]
    assert unitary_zeros(parse_pair("u:0:4")) == [3, 1]
    assert unitary_zeros(parse_pair("u:1:1")) == []
    for spec in ("u:0:3", "u:0:4", "u:1:5"):
        pair = parse_pair(spec)
        for z in unitary_zeros(pair):
            assert c_formula(pair, z) == 0
    # half-way between zeros the function does not vanish
    assert abs(c_formula(parse_pair("u:0:1"), 2)) > 0.1


def test_gl11_trichotomy():
    assert c_gl11(GL11Param(7, 0, (1.0, 0.0))) == 0
    assert c_gl11(GL11Param(2, 0, (0.0, 1.0))) == -1
    assert c_gl11(GL11Param(2, 0, (0.5, 2.0))) == -1
    assert c_gl11(GL11Param(2, 0, (0.0, -1.0))) is None


def _fit(integral, formula, pair, grid):
    ref = abs(float(pair.rho)) + 2
    return fit_constant([integral(pair, l) for l in [ref] + grid],
                        [formula(pair, l) for l in [ref] + grid])[1]


@pytest.mark.parametrize("spec", ["u:0:1", "u:0:2", "u:1:1", "u:1:3"])
def test_unitary_integral(spec):
    grid = [1.5, 0.7, 2 + 0.3j]
    assert _fit(c_integral_unitary, c_formula, parse_pair(spec), grid) < 1e-6


def test_unitary_integral_needs_q_ge_p():
    with pytest.raises(ValueError):
        c_integral_unitary(parse_pair("u:1:0"), 1.3)


@pytest.mark.parametrize("spec", ["osp:0:1", "osp:1:1", "osp:3:0", "osp:2:1", "osp:1:2"])
def test_osp_integral(spec):
    grid = [1.0, 1.7, 2.3 + 0.4j]
    assert _fit(c_integral_osp, c_formula, parse_pair(spec), grid) < 1e-6


def test_split_sum_matches_direct():
    pair = parse_pair("u:0:2")
    direct = c_integral_unitary(pair, 1.3)
    for chi in REFERENCE_CUTOFFS:
        assert c_integral_unitary(pair, 1.3, chi=chi) == pytest.approx(direct, rel=1e-9)
    a = cfunc.c_split_unitary(pair, 1.3, REFERENCE_CUTOFFS[0])
    b = cfunc.c_split_unitary(pair, 1.3, REFERENCE_CUTOFFS[1])
    assert abs(a[0] - b[0]) > 1e-3 * abs(a[0] + a[1])


def test_limit_oracle_unitary():
    pair = parse_pair("u:1:0")
    lams = [3.0, 2.0, 1.3 + 0.4j]
    lims = [c_limit_oracle(pair, l) for l in lams]
    assert all(r.converged for r in lims)
    assert fit_constant([r.value for r in lims], [c_formula(pair, l) for l in lams])[1] < 1e-6


def test_limit_oracle_gl11():
    g = make_pair("gl11")
    res = c_limit_oracle(g, GL11Param(2, 0, (0.0, 1.0)))
    assert res.converged and res.value == pytest.approx(-1, abs=1e-12)
    bad = c_limit_oracle(g, GL11Param(2, 0, (0.0, -1.0)))
    assert not bad.converged and math.isnan(bad.value.real)
    with pytest.raises(TypeError):
        c_limit_oracle(g, 2.0)


@pytest.mark.parametrize("lam", [0.0, -0.5, -1 + 2j])
def test_nonpositive_real_part_rejected(lam):
    with pytest.raises(ValueError):
        c_limit_oracle(parse_pair("osp:2:1"), lam)
    with pytest.raises(ValueError):
        c_integral_osp(parse_pair("osp:2:1"), lam)


def test_fit_constant():
    const, err = fit_constant([2, 4, 6.0001], [1, 2, 3])
    assert const.value == 2 and const.method is FitMethod.FITTED_TO_ORACLE
    assert err == pytest.approx(1e-4 / 6.0001)
    with pytest.raises(ValueError):
        fit_constant([1, 2], [1, 2, 3])
    with pytest.raises(ZeroDivisionError):
        fit_constant([1, 2], [0, 1])
    with pytest.raises(ValueError):
        NormalizationConstant(0, 0, FitMethod.UNIT_CONVENTION)
    with pytest.raises(ValueError):
        NormalizationConstant(np.nan, 0, FitMethod.UNIT_CONVENTION)
