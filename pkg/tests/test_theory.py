import pytest

from opmeans.functions import (
    ConstantOne,
    Identity,
    PetzHasegawa,
    PowerMean,
    Stolarsky,
    WeightedArithmetic,
    WeightedGeometric,
    WeightedHarmonic,
)
from opmeans.lab.theory import ZeroData, predict_equality, predict_sub, predict_super, predict_verdict
from opmeans.reports import Direction, Verdict

H, V = Verdict.HOLDS, Verdict.VIOLATION


@pytest.mark.parametrize(
    "f, phi, verdict",
    [
        (Identity(), WeightedGeometric(0.5), H),
        (ConstantOne(), PetzHasegawa(0.25), H),
        (WeightedGeometric(0.5), WeightedHarmonic(0.3), H),
        (WeightedArithmetic(0.5), WeightedGeometric(0.5), H),
        (WeightedHarmonic(0.5), WeightedGeometric(0.5), V),
        (WeightedHarmonic(0.5), WeightedArithmetic(0.5), V),
        (WeightedGeometric(0.5), WeightedGeometric(0.5), V),
        (WeightedGeometric(0.5), Stolarsky(1.5), V),
        (WeightedGeometric(0.5), WeightedArithmetic(0.5), V),
    ],
    ids=str,
)
def test_predict_sub(f, phi, verdict):
    p = predict_sub(f, phi)
    assert p.decided and p.verdict is verdict and p.reason


@pytest.mark.parametrize(
    "f, phi",
    [(PowerMean(-0.5, 0.5), PowerMean(-0.75, 0.3)), (PetzHasegawa(0.5), WeightedGeometric(0.5))],
    ids=str,
)
def test_undecided_cases(f, phi):
    # a class-c mean, and a pair whose zero limits give no contrapositive
    assert not predict_sub(f, phi).decided


def test_super_via_adjoints():
    # every f satisfies the reverse inequality for the arithmetic mean
    assert predict_super(WeightedGeometric(0.5), WeightedArithmetic(0.5)).verdict is H


@pytest.mark.parametrize(
    "f, phi, verdict",
    [
        (WeightedHarmonic(0.25), WeightedHarmonic(0.75), H),
        (WeightedArithmetic(0.25), WeightedArithmetic(0.5), H),
        (WeightedGeometric(0.5), WeightedGeometric(0.5), V),
        (WeightedHarmonic(0.5), WeightedArithmetic(0.5), V),
    ],
    ids=str,
)
def test_predict_equality(f, phi, verdict):
    assert predict_equality(f, phi).verdict is verdict


def test_predict_verdict_dispatch():
    f, phi = WeightedGeometric(0.5), WeightedArithmetic(0.5)
    assert predict_verdict(f, phi, "subL").verdict is V
    assert predict_verdict(f, phi, Direction.SUPER_R).verdict is H


def test_zero_data():
    z = ZeroData.of(PetzHasegawa(0.5))
    assert z.at_zero == 0.25 and z.adjoint_vanishes and z.sum_positive
    assert ZeroData.of(WeightedHarmonic(0.5)).to_dict() == {"phi(0)": 0.0, "phi*(0)": 0.5, "phi'(0)": 0.0}
