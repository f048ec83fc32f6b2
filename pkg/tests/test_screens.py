import pytest

from opmeans.errors import ParamOutOfDomain
from opmeans.functions import (
    ConstantOne,
    Identity,
    PetzHasegawa,
    PowerDifference,
    Stolarsky,
    WeightedArithmetic,
    WeightedGeometric,
    WeightedHarmonic,
)
from opmeans.lab.screens import (
    alg_p_triviality_check,
    classify_triviality,
    triviality_screen,
    zero_limit_propagation_check,
)
from opmeans.means import arithmetic, geometric
from opmeans.reports import Verdict

CANDIDATES = [Identity(), WeightedGeometric(0.5), WeightedHarmonic(0.5), WeightedArithmetic(0.5), PetzHasegawa(0.25)]


@pytest.mark.parametrize("a", [-2.0, -1.5, -1.0, -0.5, 0.0])
def test_stolarsky_nonpositive_is_adjoint_class(a):
    assert "a" in classify_triviality(Stolarsky(a)).hypotheses


@pytest.mark.parametrize("a", [0.25, 0.5, 1.0, 1.5, 2.0])
def test_stolarsky_positive_has_sum_hypothesis(a):
    assert "b" in classify_triviality(Stolarsky(a)).hypotheses


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
def test_harmonic_is_class_c(alpha):
    cls = classify_triviality(WeightedHarmonic(alpha))
    assert cls.label == "c" and not cls.covered and cls.hypotheses == ()


def test_positive_summands_recorded():
    cls = classify_triviality(PetzHasegawa(0.25))
    assert cls.positive_summands == ["phi(0)", "phi'(0)"]
    assert cls.to_dict()["class"] == "a"


def test_screen_finds_violations(small_cfg):
    rep = triviality_screen(geometric(), CANDIDATES, small_cfg)
    assert rep.passed
    run = [i for i in rep.items if i.report is not None]
    assert {i.name.split(" ")[0] for i in run} == {"geom:0.5", "harmonic:0.5"}
    assert all(i.report.verdict is Verdict.VIOLATION for i in run)


def test_screen_class_c_runs_nothing(small_cfg):
    rep = triviality_screen(WeightedHarmonic(0.5), CANDIDATES, small_cfg)
    assert all(i.report is None and i.expected == "not covered" for i in rep.items)


def test_screen_rejects_trivial_mean():
    with pytest.raises(ParamOutOfDomain):
        triviality_screen(ConstantOne(), CANDIDATES)


def test_propagation_adjoint_screen(small_cfg):
    chk = zero_limit_propagation_check(WeightedHarmonic(0.5), geometric(), small_cfg)
    assert chk.adjoint_screen.expected is Verdict.VIOLATION
    assert chk.verdict is Verdict.VIOLATION and chk.consistent


def test_propagation_affine_f_holds(small_cfg):
    # f*(0) = 0 for an affine f, so the adjoint screen is silent; joint concavity gives the inequality
    chk = zero_limit_propagation_check(WeightedArithmetic(0.5), geometric(), small_cfg)
    assert chk.adjoint_screen.expected is None
    assert chk.verdict is Verdict.INCONCLUSIVE and chk.report is None


def test_propagation_identity_vacuous(small_cfg):
    chk = zero_limit_propagation_check(Identity(), geometric(), small_cfg)
    assert chk.verdict is Verdict.HOLDS and not chk.adjoint_screen.applies


def test_propagation_no_conclusion_for_arithmetic(small_cfg):
    chk = zero_limit_propagation_check(WeightedGeometric(0.5), arithmetic(), small_cfg)
    assert chk.adjoint_screen.applies and chk.adjoint_screen.expected is None
    assert chk.verdict is Verdict.INCONCLUSIVE
    d = chk.to_dict()
    assert d["adjoint_screen"]["applies"] is True


@pytest.mark.parametrize("p", [-0.5, 0.5, 1.0, 1.5])
def test_alg_zero_limits(p, small_cfg):
    rep = alg_p_triviality_check(p, small_cfg, candidates=[Identity(), WeightedGeometric(0.5)])
    assert rep.items[0].passed
    assert rep.passed


def test_alg_half_is_sqrt():
    z = classify_triviality(PowerDifference(0.5)).zeros
    assert z.at_zero == 0.0 and z.adjoint_at_zero == 0.0


@pytest.mark.parametrize("p", [-1.0, 2.0, 2.5])
def test_alg_boundary_rejected(p):
    with pytest.raises(ParamOutOfDomain):
        alg_p_triviality_check(p)
