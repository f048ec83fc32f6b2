import itertools
import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from opmeans.errors import HypothesisWarning
from opmeans.functions import Identity, PetzHasegawa, WeightedGeometric, WeightedHarmonic
from opmeans.lab.closed_forms import (
    lemma24_lhs,
    lemma24_matrix_check,
    lemma24_rhs,
    scalar_nabla_identity_check,
)

ZERO_AT_ZERO = [Identity(), WeightedHarmonic(0.5), WeightedGeometric(0.5)]
PHIS = [WeightedHarmonic(0.5), WeightedGeometric(0.5)]
pos = st.floats(1e-2, 1e2)


def test_lhs_example():
    assert math.isclose(lemma24_lhs(Identity(), WeightedGeometric(0.5), 1.0, 1.0), math.sqrt(2), rel_tol=1e-14)


@given(pos, pos)
def test_identity_sides_agree(x, y):
    phi = WeightedGeometric(0.5)
    assert math.isclose(lemma24_lhs(Identity(), phi, x, y), lemma24_rhs(Identity(), phi, x, y), rel_tol=1e-12)


@given(pos, st.sampled_from(ZERO_AT_ZERO), st.sampled_from(PHIS))
def test_diagonal_collapse(x, f, phi):
    pt = phi.transpose()
    assert math.isclose(lemma24_lhs(f, phi, x, x), f(pt(2 * x)), rel_tol=1e-12)
    assert math.isclose(lemma24_rhs(f, phi, x, x), pt(f(2 * x)), rel_tol=1e-12)


def test_hypothesis_warning():
    with pytest.warns(HypothesisWarning):
        lemma24_lhs(PetzHasegawa(0.5), WeightedGeometric(0.5), 1.0, 2.0)


def test_positive_arguments_required():
    with pytest.raises(ValueError):
        lemma24_rhs(Identity(), WeightedGeometric(0.5), 0.0, 1.0)


@pytest.mark.parametrize(
    "f, phi, x, y",
    [(Identity(), WeightedGeometric(0.5), 1.0, 2.0), (WeightedHarmonic(0.5), WeightedHarmonic(0.5), 3.0, 5.0),
     (WeightedGeometric(0.5), WeightedGeometric(0.5), 0.5, 0.5)],
)
def test_matrix_check_examples(f, phi, x, y):
    with warnings.catch_warnings():
        warnings.simplefilter("error", HypothesisWarning)
        chk = lemma24_matrix_check(f, phi, x, y)
    assert chk.error <= 1e-6
    assert chk.direct_error <= 1e-10


@pytest.mark.parametrize("f, phi", list(itertools.product(ZERO_AT_ZERO, PHIS)), ids=str)
def test_matrix_check_grid(f, phi):
    grid = 10.0 ** np.linspace(-1, 1, 3)
    for x, y in itertools.product(grid, grid):
        assert lemma24_matrix_check(f, phi, x, y).error <= 1e-6


def test_nabla_identity():
    assert scalar_nabla_identity_check(Identity(), WeightedGeometric(0.5)) <= 1e-12
    for beta, alpha in itertools.product((0.25, 0.5, 0.75), repeat=2):
        assert scalar_nabla_identity_check(WeightedHarmonic(beta), WeightedHarmonic(alpha)) <= 1e-10
    assert scalar_nabla_identity_check(WeightedGeometric(0.5), WeightedGeometric(0.5)) > 1e-3
