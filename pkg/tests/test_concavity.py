import math

import numpy as np
import pytest

from cohom7 import concavity as cc


def test_cos_sides_match_closed_form():
    # unit sphere: both sides equal 2 cos^2 t
    p = cc.builtin_profile("cos")
    for t in (-1.0, 0.0, 0.3, 1.2):
        lhs, rhs = cc.identity_sides(p, t, 1e-3)
        assert lhs == pytest.approx(2 * math.cos(t) ** 2, abs=1e-12)
        assert abs(rhs - 2 * math.cos(t) ** 2) <= 10 * 1e-3**2


def test_cos_residual_at_default_step():
    assert cc.killing_identity_residual(cc.builtin_profile("cos"), 0.3) <= 1e-6


def test_constant_profile_is_exact():
    p = cc.builtin_profile("const:2.5")
    lhs, rhs = cc.identity_sides(p, 0.0, 1e-3)
    assert lhs == 0 and rhs == 0


def test_cosh_identity_with_negative_curvature():
    p = cc.builtin_profile("cosh")
    lhs, _ = cc.identity_sides(p, 0.2, 1e-3)
    assert lhs < 0
    assert cc.killing_identity_residual(p, 0.2, 1e-3) < 1e-5


@pytest.mark.parametrize("t", [-1.0, 0.3, 1.1])
@pytest.mark.parametrize("h", [1e-2, 1e-3])
def test_second_order_convergence(t, h):
    p = cc.builtin_profile("cos")
    r1 = cc.killing_identity_residual(p, t, h)
    r2 = cc.killing_identity_residual(p, t, h / 2)
    assert r1 / r2 >= 3


def test_domain_margin():
    with pytest.raises(cc.DomainMargin):
        cc.killing_identity_residual(cc.builtin_profile("cos"), 1.3999, 1e-3)


def test_horizon_values():
    assert cc.concave_positive_horizon(1, 0, 0.1) == pytest.approx(math.sqrt(20), abs=1e-4)
    t = cc.concave_positive_horizon(1, 1, 0.1)
    assert math.isfinite(t) and t < math.sqrt(20)
    assert cc.concave_positive_horizon(1e-12, 0, 0.1) < 1e-5
    with pytest.raises(ValueError):
        cc.concave_positive_horizon(1, 0, 0)


@pytest.mark.parametrize("f0,df0,eps", [(1, 0, 0.1), (2, -1, 0.5), (0.3, 2, 3)])
def test_horizon_is_sharp(f0, df0, eps):
    # the envelope must vanish at one of ±T
    t = cc.concave_positive_horizon(f0, df0, eps)
    env = [f0 + df0 * s - eps * s * s / 2 for s in (t, -t)]
    assert min(abs(v) for v in env) < 1e-12


def test_verify_cos():
    rep = cc.verify_profile(cc.builtin_profile("cos"))
    assert rep.passed and rep.applicable and rep.concave
    assert rep.curvature_sign == "positive" and rep.max_residual <= 1e-6


def test_verify_sin_mixed():
    rep = cc.verify_profile(cc.builtin_profile("sin+2"))
    assert rep.curvature_sign == "mixed" and not rep.concave and not rep.applicable


def test_verify_exp_not_applicable():
    rep = cc.verify_profile(cc.builtin_profile("exp"))
    assert rep.curvature_sign == "negative" and not rep.applicable


def test_verify_tight_tolerance_fails():
    assert not cc.verify_profile(cc.builtin_profile("cos"), 1e-3, 1e-12).passed


def test_non_positive_profile():
    with pytest.raises(cc.NonPositiveProfile):
        cc.verify_profile(cc.builtin_profile("poly:-1,0,1"))


def test_sampled_profile(tmp_path):
    t = np.linspace(-1.2, 1.2, 241)
    path = tmp_path / "cos.txt"
    np.savetxt(path, np.column_stack([t, np.cos(t)]))
    p = cc.resolve_profile(str(path))
    rep = cc.verify_profile(p, tol=1e-4)
    assert rep.step == pytest.approx(0.01)
    assert rep.passed and rep.curvature_sign == "positive"


def test_sampled_profile_needs_uniform_spacing(tmp_path):
    path = tmp_path / "bad.txt"
    np.savetxt(path, np.array([[0, 1], [0.1, 1], [0.3, 1], [0.4, 1], [0.5, 1]]))
    with pytest.raises(ValueError):
        cc.sampled_profile(path)


def test_unknown_profile():
    with pytest.raises(KeyError):
        cc.builtin_profile("tan")
