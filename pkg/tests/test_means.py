import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from opmeans import spd
from opmeans.errors import BothSingular, DimensionMismatch, DomainError
from opmeans.functions import (
    STANDARD_GRID,
    Identity,
    PetzHasegawa,
    WeightedArithmetic,
    WeightedGeometric,
    WeightedHarmonic,
    derivative_at_one,
    standard_catalog,
    zero_limit,
)
from opmeans.lab.search import lemma_pair
from opmeans.means import (
    Mean,
    NonPositive,
    adjoint_mean,
    arithmetic,
    check_axioms,
    geometric,
    harmonic,
    mean_matrix,
    mean_scalar,
    regularized_mean,
    transpose_mean,
)
from opmeans.reports import SearchConfig, Verdict

CATALOG = standard_catalog()
IDS = [f.descriptor() for f in CATALOG]
NARROW = (1e-2, 1e2)


def rel2(x, y):
    return np.linalg.norm(x - y, 2) / max(np.linalg.norm(y, 2), 1e-300)


def pair(dim, seed, spectrum=spd.DEFAULT_SPECTRUM):
    return spd.random_spd(dim, [seed, dim, 1], spectrum), spd.random_spd(dim, [seed, dim, 2], spectrum)


# --- scalar means ------------------------------------------------------------


def test_scalar_examples():
    assert mean_scalar(geometric(), 1.0, 4.0) == 2.0
    assert abs(mean_scalar(harmonic(), 1.0, 2.0) - 4 / 3) <= 1e-15


@pytest.mark.parametrize("f", CATALOG, ids=IDS)
def test_scalar_normalization_and_idempotency(f):
    assert abs(mean_scalar(f, 1.0, 1.0) - 1.0) <= 1e-12
    for c in (1e-3, 0.5, 7.0, 1e3):
        assert abs(mean_scalar(f, c, c) - c) <= 1e-12 * c


@pytest.mark.parametrize("f", CATALOG, ids=IDS)
def test_representing_identity(f):
    got = mean_scalar(f, 1.0, STANDARD_GRID)
    assert np.all(np.abs(got - f(STANDARD_GRID)) <= 1e-12 * np.maximum(1.0, f(STANDARD_GRID)))


@given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
def test_scalar_symmetry_follows_phi(x, y):
    assert np.isclose(mean_scalar(geometric(), x, y), mean_scalar(geometric(), y, x), rtol=1e-14)
    sigma = arithmetic(0.3)
    assert np.isclose(mean_scalar(sigma, x, y), 0.7 * x + 0.3 * y, rtol=1e-14)


@pytest.mark.parametrize("x, y", [(0.0, 1.0), (1.0, -2.0), (np.nan, 1.0)])
def test_scalar_nonpositive(x, y):
    with pytest.raises(NonPositive):
        mean_scalar(geometric(), x, y)


# --- matrix means ------------------------------------------------------------


def test_matrix_geometric_scalar_case():
    np.testing.assert_allclose(mean_matrix(geometric(), np.eye(3), 4 * np.eye(3)), 2 * np.eye(3), atol=1e-14)


@pytest.mark.parametrize("f", CATALOG, ids=IDS)
def test_commuting_pairs_are_scalar(f):
    rng = np.random.default_rng(7)
    q = spd.random_orthogonal(4, rng)
    a_diag, b_diag = 10.0 ** rng.uniform(-3, 3, 4), 10.0 ** rng.uniform(-3, 3, 4)
    a, b = (q * a_diag) @ q.T, (q * b_diag) @ q.T
    want = (q * mean_scalar(f, a_diag, b_diag)) @ q.T
    assert rel2(mean_matrix(f, a, b), want) <= 1e-10
    np.testing.assert_allclose(
        mean_matrix(f, np.diag(a_diag), np.diag(b_diag)), np.diag(mean_scalar(f, a_diag, b_diag)), rtol=1e-10
    )


@pytest.mark.parametrize("phi", [WeightedGeometric(0.5), WeightedHarmonic(0.3), PetzHasegawa(1.5)],
                         ids=lambda f: f.descriptor())
@pytest.mark.parametrize("x, y", [(1.0, 2.0), (0.3, 5.0), (4.0, 0.1)])
def test_singular_projection_closed_form(phi, x, y):
    # only the B-route is available with P singular
    assert zero_limit(phi).value == 0.0
    p, q = lemma_pair(x, y)
    sigma = Mean(phi.transpose())
    want = phi.transpose()(4 * x * y / (x + y)) * p
    np.testing.assert_allclose(mean_matrix(sigma, p, q), want, atol=1e-12)
    np.testing.assert_allclose(mean_matrix(sigma, p, q, route="b"), want, atol=1e-12)


@pytest.mark.parametrize("f", CATALOG, ids=IDS)
@pytest.mark.parametrize("dim", [2, 3, 6])
def test_route_independence(f, dim):
    for seed in range(10):
        a, b = pair(dim, seed, NARROW)
        ma, mb, m = mean_matrix(f, a, b, "a"), mean_matrix(f, a, b, "b"), mean_matrix(f, a, b)
        assert rel2(ma, mb) <= 1e-9
        assert rel2(m, ma) <= 1e-9


@pytest.mark.parametrize("f", CATALOG, ids=IDS)
def test_positive_homogeneity(f):
    a, b = pair(3, 4)
    base = mean_matrix(f, a, b)
    for c in (0.1, 1.0, 7.0):
        assert rel2(mean_matrix(f, c * a, c * b), c * base) <= 1e-10


@pytest.mark.parametrize("f", CATALOG, ids=IDS)
def test_harmonic_arithmetic_bracketing(f):
    lam = derivative_at_one(f)
    lo, hi = harmonic(lam), arithmetic(lam)
    for seed in range(100):
        dim = (2, 3, 4, 6)[seed % 4]
        a, b = pair(dim, seed)
        m = mean_matrix(f, a, b)
        assert spd.loewner_compare(mean_matrix(lo, a, b), m).less_equal
        assert spd.loewner_compare(m, mean_matrix(hi, a, b)).less_equal


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
def test_geometric_inversion(alpha):
    sigma = geometric(alpha)
    for seed in range(30):
        a, b = pair(2 + seed % 4, seed)
        lhs = spd.inv_matrix(mean_matrix(sigma, a, b))
        rhs = mean_matrix(sigma, spd.inv_matrix(a), spd.inv_matrix(b))
        assert rel2(lhs, rhs) <= 1e-9


def test_both_singular():
    p = np.diag([1.0, 0.0])
    with pytest.raises(BothSingular):
        mean_matrix(geometric(), p, 2 * p)


def test_rejects_indefinite_and_mismatch():
    with pytest.raises(DomainError):
        mean_matrix(geometric(), np.diag([1.0, -1.0]), np.eye(2))
    with pytest.raises(DimensionMismatch):
        mean_matrix(geometric(), np.eye(2), np.eye(3))


# --- transpose and adjoint means ---------------------------------------------


def test_adjoint_of_arithmetic_is_harmonic():
    a, b = pair(3, 1)
    np.testing.assert_allclose(
        mean_matrix(adjoint_mean(arithmetic()), a, b), mean_matrix(harmonic(), a, b), rtol=1e-9, atol=1e-12
    )


def test_transpose_of_geometric_is_itself():
    a, b = pair(3, 2)
    assert rel2(mean_matrix(transpose_mean(geometric()), a, b), mean_matrix(geometric(), a, b)) <= 1e-10


@pytest.mark.parametrize("p", [-0.5, 0.0, 1.0, 1.5])
def test_adjoint_petz_hasegawa_vanishes(p):
    assert zero_limit(adjoint_mean(Mean(PetzHasegawa(p))).rep).value == 0.0


@pytest.mark.parametrize("p", [-1.0, 2.0])
def test_adjoint_petz_hasegawa_endpoints(p):
    # PH at these endpoints is the harmonic mean, whose adjoint is arithmetic
    rep = adjoint_mean(Mean(PetzHasegawa(p))).rep
    assert abs(zero_limit(rep).value - 0.5) <= 1e-15


@pytest.mark.parametrize("f", CATALOG, ids=IDS)
def test_adjoint_mean_identity(f):
    sigma = Mean(f)
    for seed in range(10):
        a, b = pair(2 + seed % 3, seed)
        lhs = mean_matrix(adjoint_mean(sigma), a, b)
        rhs = spd.inv_matrix(mean_matrix(sigma, spd.inv_matrix(a), spd.inv_matrix(b)))
        assert rel2(lhs, rhs) <= 1e-9


@pytest.mark.parametrize("f", CATALOG, ids=IDS)
def test_transpose_mean_swaps(f):
    a, b = pair(3, 9)
    assert rel2(mean_matrix(transpose_mean(f), a, b), mean_matrix(f, b, a)) <= 1e-9


# --- regularized means --------------------------------------------------------


def test_regularized_idempotent_on_singular():
    p = np.diag([2.0, 0.0, 0.0])
    out = regularized_mean(geometric(), p, p)
    np.testing.assert_allclose(out.value, p, atol=1e-6)


@pytest.mark.parametrize("x, y", [(1.0, 2.0), (0.5, 0.5), (3.0, 5.0)])
def test_regularized_matches_closed_form(x, y):
    p, q = lemma_pair(x, y)
    phi = WeightedGeometric(0.5)
    out = regularized_mean(Mean(phi.transpose()), p, q)
    want = phi.transpose()(4 * x * y / (x + y)) * p
    assert np.linalg.norm(out.value - want, 2) <= 1e-6 * np.linalg.norm(want, 2)


def test_regularized_harmonic_with_zero():
    out = regularized_mean(harmonic(), np.zeros((2, 2)), np.eye(2))
    np.testing.assert_allclose(out.value, 0.0, atol=1e-6)


# --- axioms ------------------------------------------------------------------


def test_axioms_geometric_dim4():
    rep = check_axioms(geometric(), SearchConfig(dims=(4,), trials=200))
    assert rep.passed
    assert rep.monotonicity.worst_residual >= -1e-9
    assert rep.transformer.worst_residual >= -1e-9


def test_axioms_arithmetic_congruence_exact():
    rep = check_axioms(arithmetic(), SearchConfig(dims=(2, 3, 4), trials=50))
    assert rep.congruence.worst_residual >= -1e-10
    assert rep.passed


def test_axioms_zero_congruence():
    a, b = pair(3, 0)
    z = np.zeros((3, 3))
    for sigma in (geometric(), Mean(PetzHasegawa(0.25))):
        assert np.all(spd.congruence(z, mean_matrix(sigma, a, b)) == 0)


def test_axioms_report_dict():
    rep = check_axioms(harmonic(), SearchConfig(dims=(2,), trials=5))
    d = rep.to_dict()
    assert d["passed"] is True and d["monotonicity"]["verdict"] == Verdict.HOLDS.value


def test_identity_mean_is_right_trivial():
    a, b = pair(3, 5)
    np.testing.assert_allclose(mean_matrix(Mean(Identity()), a, b), b, rtol=1e-9, atol=1e-12)
    np.testing.assert_allclose(mean_matrix(Mean(WeightedArithmetic(0.0)), a, b), a, rtol=1e-9, atol=1e-12)
