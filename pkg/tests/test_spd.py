import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from opmeans import spd
from opmeans.errors import BadRange, DimensionMismatch, DomainError, MatrixFormatError, NonSymmetric, SingularMatrix
from opmeans.functions import PetzHasegawa
from opmeans.spd import Relation


def rel_fro(x, y):
    return np.linalg.norm(x - y) / np.linalg.norm(y)


# --- eigen_decompose -------------------------------------------------------


def test_eigen_identity():
    ed = spd.eigen_decompose(np.eye(3))
    np.testing.assert_allclose(ed.eigenvalues, [1, 1, 1])
    q = ed.eigenvectors
    np.testing.assert_allclose(q.T @ q, np.eye(3), atol=1e-12)


def test_eigen_rank_one_half():
    ed = spd.eigen_decompose(0.5 * np.ones((2, 2)))
    np.testing.assert_allclose(ed.eigenvalues, [0.0, 1.0], atol=1e-15)


@pytest.mark.parametrize("seed", range(5))
def test_eigen_reconstruction_and_orthogonality(seed):
    a = spd.random_spd(5, seed)
    ed = spd.eigen_decompose(a)
    assert np.all(np.diff(ed.eigenvalues) >= 0)
    assert np.linalg.norm(ed.reconstruct() - a) <= 1e-10 * np.linalg.norm(a)
    q = ed.eigenvectors
    assert np.linalg.norm(q.T @ q - np.eye(5)) <= 1e-10


def test_eigen_rejects_nonsymmetric():
    with pytest.raises(NonSymmetric):
        spd.eigen_decompose([[1.0, 2.0], [0.0, 1.0]])


def test_symmetry_tolerance_is_relative():
    a = np.array([[1e6, 1.0], [1.0 + 1e-7, 1e6]])
    spd.as_symmetric(a)  # 1e-7 <= 1e-12 * (1 + 1e6)
    with pytest.raises(NonSymmetric):
        spd.as_symmetric(np.array([[1.0, 1.0], [1.0 + 1e-9, 1.0]]))


# --- apply_function --------------------------------------------------------


def test_apply_sqrt_scalar_matrix():
    np.testing.assert_allclose(spd.apply_function(np.sqrt, 4 * np.eye(3)), 2 * np.eye(3), atol=1e-14)


def test_apply_constant_one():
    a = spd.random_spd(4, 3)
    out = spd.apply_function(lambda t: np.ones_like(t), a)
    np.testing.assert_allclose(out, np.eye(4), atol=1e-12)


def test_apply_ph_half_on_semidefinite():
    out = spd.apply_function(PetzHasegawa(0.5), np.diag([0.0, 1.0]))
    np.testing.assert_allclose(out, np.diag([0.25, 1.0]), atol=1e-12)


def test_apply_result_commutes():
    a = spd.random_spd(4, 8)
    fa = spd.apply_function(np.log, a)
    c = fa @ a - a @ fa
    assert np.linalg.norm(c) <= 1e-9 * np.linalg.norm(fa) * np.linalg.norm(a)


def test_apply_domain_error():
    with pytest.raises(DomainError):
        spd.apply_function(lambda t: 1.0 / t, np.diag([0.0, 1.0]))


@pytest.mark.parametrize("dim", [1, 2, 4, 6])
@pytest.mark.parametrize("coeffs", [(1.0,), (0.5, -2.0), (1.0, 0.0, 3.0), (-1.0, 2.0, 0.5, 0.25)])
def test_polynomial_consistency(dim, coeffs):
    a = spd.random_spd(dim, dim * 100 + len(coeffs), (0.1, 10.0))
    got = spd.apply_function(lambda t: np.polyval(coeffs, t), a)
    want = np.zeros_like(a)
    for c in coeffs:  # Horner
        want = want @ a + c * np.eye(dim)
    assert np.linalg.norm(got - want) <= 1e-8 * max(np.linalg.norm(want), 1.0)


@pytest.mark.parametrize("seed", range(4))
def test_unitary_covariance(seed):
    rng = np.random.default_rng(seed)
    a = spd.random_spd(4, seed)
    u = spd.random_orthogonal(4, rng)
    lhs = spd.apply_function(np.sqrt, u @ a @ u.T)
    rhs = u @ spd.apply_function(np.sqrt, a) @ u.T
    assert np.linalg.norm(lhs - rhs) <= 1e-9 * np.linalg.norm(rhs)


# --- congruence ------------------------------------------------------------


def test_congruence_identity_and_scaling():
    a = spd.random_spd(3, 1)
    np.testing.assert_allclose(spd.congruence(np.eye(3), a), a)
    np.testing.assert_allclose(spd.congruence(np.sqrt(7.0) * np.eye(3), a), 7.0 * a, rtol=1e-13)


def test_congruence_hadamard_on_projection():
    u = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)
    out = spd.congruence(u, np.diag([1.0, 0.0]))
    np.testing.assert_allclose(out, 0.5 * np.ones((2, 2)), atol=1e-15)


def test_congruence_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        spd.congruence(np.eye(2), np.eye(3))


def test_congruence_keeps_positive_definite():
    rng = np.random.default_rng(0)
    for trial in range(100):
        dim = 2 + trial % 4
        s = rng.standard_normal((dim, dim)) + 3 * np.eye(dim)
        a = spd.random_spd(dim, trial)
        assert spd.min_eig(spd.congruence(s, a)) > 0


# --- loewner_compare --------------------------------------------------------


@pytest.mark.parametrize(
    "a, b, rel",
    [
        (np.eye(2), 2 * np.eye(2), Relation.LESS_EQUAL),
        (np.diag([3.0, 1.0]), np.diag([3.0, 1.0]), Relation.EQUAL),
        (np.diag([2.0, 0.5]), np.eye(2), Relation.INCOMPARABLE),
        (2 * np.eye(2), np.eye(2), Relation.GREATER_EQUAL),
    ],
)
def test_loewner_examples(a, b, rel):
    v = spd.loewner_compare(a, b)
    assert v.relation is rel
    assert v.less_equal == (v.min_eig_b_minus_a >= -v.tolerance_used)
    if rel is Relation.EQUAL:
        assert v.less_equal and v.greater_equal


_SWAP = {
    Relation.LESS_EQUAL: Relation.GREATER_EQUAL,
    Relation.GREATER_EQUAL: Relation.LESS_EQUAL,
    Relation.EQUAL: Relation.EQUAL,
    Relation.INCOMPARABLE: Relation.INCOMPARABLE,
}


@given(st.integers(0, 10_000), st.integers(1, 5), st.sampled_from(["random", "shift", "same"]))
def test_loewner_antisymmetry(seed, dim, mode):
    a = spd.random_spd(dim, seed)
    rng = np.random.default_rng(seed)
    if mode == "random":
        b = spd.random_spd(dim, seed + 1)
    elif mode == "shift":
        b = a + spd.random_psd_increment(dim, rng)
    else:
        b = a.copy()
    assert spd.loewner_compare(b, a).relation is _SWAP[spd.loewner_compare(a, b).relation]


def test_loewner_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        spd.loewner_compare(np.eye(2), np.eye(3))


# --- random_spd -------------------------------------------------------------


def test_random_spd_scalar():
    a = spd.random_spd(1, 5, (0.5, 2.0))
    assert a.shape == (1, 1) and 0.5 <= a[0, 0] <= 2.0


def test_random_spd_deterministic():
    np.testing.assert_array_equal(spd.random_spd(4, 11), spd.random_spd(4, 11))
    assert not np.array_equal(spd.random_spd(4, 11), spd.random_spd(4, 12))


def test_random_spd_spectrum_bounds():
    lo, hi = 1e-2, 1e2
    for seed in range(1000):
        lam = np.linalg.eigvalsh(spd.random_spd(4, seed, (lo, hi)))
        assert lam[0] >= lo * (1 - 1e-9) and lam[-1] <= hi * (1 + 1e-9)


@pytest.mark.parametrize("rng_", [(0.0, 1.0), (2.0, 1.0), (1e-5, 1e4), (-1.0, 1.0)])
def test_random_spd_bad_range(rng_):
    with pytest.raises(BadRange):
        spd.random_spd(3, 0, rng_)


def test_random_spd_bad_dim():
    with pytest.raises(BadRange):
        spd.random_spd(0, 0)


# --- sqrt / inverse ---------------------------------------------------------


def test_sqrt_inv_examples():
    np.testing.assert_allclose(spd.sqrt_matrix(np.eye(3)), np.eye(3))
    np.testing.assert_allclose(spd.inv_matrix(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))


@given(st.integers(0, 10_000), st.integers(1, 6))
def test_sqrt_inv_random(seed, dim):
    a = spd.random_spd(dim, seed)
    r = spd.sqrt_matrix(a)
    assert rel_fro(r @ r, a) <= 1e-9
    assert np.linalg.norm(spd.inv_matrix(a) @ a - np.eye(dim)) <= 1e-9 * np.linalg.cond(a)


def test_singular_rejected():
    with pytest.raises(SingularMatrix):
        spd.sqrt_matrix(np.diag([1.0, 0.0]))
    with pytest.raises(SingularMatrix):
        spd.inv_matrix(np.diag([1.0, 1e-17]))


# --- exchange format --------------------------------------------------------


def test_exchange_round_trip():
    a = spd.random_spd(3, 2)
    obj = spd.to_exchange(a)
    assert obj["dim"] == 3 and len(obj["entries"]) == 9
    np.testing.assert_array_equal(spd.from_exchange(obj), a)


@pytest.mark.parametrize(
    "obj",
    [
        {"dim": 2},
        {"dim": 2, "entries": [1, 0, 0]},
        {"dim": 0, "entries": []},
        {"dim": True, "entries": [1]},
        {"dim": 1, "entries": ["x"]},
        [1, 2, 3],
    ],
)
def test_exchange_malformed(obj):
    with pytest.raises(MatrixFormatError):
        spd.from_exchange(obj)


def test_exchange_nonsymmetric():
    with pytest.raises(NonSymmetric):
        spd.from_exchange({"dim": 2, "entries": [1, 2, 3, 4]})
