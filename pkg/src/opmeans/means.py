"""Kubo-Ando operator means built from representing functions.

For a representing function ``phi`` (with ``1 s t = phi(t)``) the mean of
positive matrices is::

    A s B = A^{1/2} phi(A^{-1/2} B A^{-1/2}) A^{1/2}          (A invertible)
          = B^{1/2} phi'(B^{-1/2} A B^{-1/2}) B^{1/2}         (B invertible)

with ``phi'`` the transpose ``t phi(1/t)``.  Both routes stay available, but
the default evaluation congruates by ``(A + B)^{-1/2}`` first, which turns
the pair into two commuting matrices summing to ``I`` and is considerably
more accurate when ``A`` or ``B`` is ill-conditioned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import spd
from .errors import BothSingular, DimensionMismatch, DomainError, NoConvergence, OpMeansError
from .functions import (
    RepFunction,
    WeightedArithmetic,
    WeightedGeometric,
    WeightedHarmonic,
)
from .reports import DEFAULT_EPS_SCHEDULE, ResidualTracker, SearchConfig

SINGULAR_REL = 1e-12


class NonPositive(OpMeansError, ValueError):
    pass


@dataclass(frozen=True)
class Mean:
    """The operator mean ``sigma_phi`` with representing function ``rep``."""

    rep: RepFunction

    def __call__(self, a, b):
        return mean_matrix(self, a, b)

    def scalar(self, x, y):
        return mean_scalar(self, x, y)

    def adjoint(self) -> "Mean":
        return adjoint_mean(self)

    def transpose(self) -> "Mean":
        return transpose_mean(self)

    def descriptor(self) -> str:
        return self.rep.descriptor()

    def __str__(self) -> str:
        return self.descriptor()


def arithmetic(alpha: float = 0.5) -> Mean:
    return Mean(WeightedArithmetic(alpha))


def harmonic(alpha: float = 0.5) -> Mean:
    return Mean(WeightedHarmonic(alpha))


def geometric(alpha: float = 0.5) -> Mean:
    return Mean(WeightedGeometric(alpha))


def _as_mean(sigma) -> Mean:
    if isinstance(sigma, Mean):
        return sigma
    if isinstance(sigma, RepFunction):
        return Mean(sigma)
    raise TypeError(f"expected a Mean or RepFunction, got {type(sigma).__name__}")


def mean_scalar(sigma, x, y):
    """``x s y = x phi(y / x)`` for positive scalars (vectorized)."""
    sigma = _as_mean(sigma)
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if np.any(~(xa > 0)) or np.any(~(ya > 0)):
        raise NonPositive(f"scalar means need positive arguments, got {x!r}, {y!r}")
    out = xa * sigma.rep(ya / xa)
    return float(out) if np.ndim(out) == 0 else out


def _psd_info(a: np.ndarray, name: str) -> tuple[np.ndarray, np.ndarray, bool]:
    lam, q = np.linalg.eigh(a)
    norm = max(abs(lam[0]), abs(lam[-1]))
    if lam[0] < -spd.PSD_TOL * max(norm, 1.0):
        raise DomainError(f"{name} is not positive semidefinite (min eigenvalue {lam[0]:.3e})")
    invertible = lam[0] > a.shape[0] * SINGULAR_REL * norm and norm > 0
    return lam, q, invertible


def _check_psd(a: np.ndarray, name: str) -> int:
    """Validate ``a`` and return its numerical nullity."""
    lam = np.linalg.eigvalsh(a)
    norm = max(abs(lam[0]), abs(lam[-1]))
    if lam[0] < -spd.PSD_TOL * max(norm, 1.0):
        raise DomainError(f"{name} is not positive semidefinite (min eigenvalue {lam[0]:.3e})")
    if norm == 0:
        return a.shape[0]
    return int(np.sum(lam <= a.shape[0] * SINGULAR_REL * norm))


def _route(phi: RepFunction, lam: np.ndarray, q: np.ndarray, other: np.ndarray) -> np.ndarray:
    s = np.sqrt(lam)
    root = (q * s) @ q.T
    inv_root = (q / s) @ q.T
    inner = inv_root @ other @ inv_root
    core = spd.apply_function(phi, 0.5 * (inner + inner.T))
    out = root @ core @ root
    return 0.5 * (out + out.T)


def _balanced_route(phi: RepFunction, a: np.ndarray, b: np.ndarray, null_a: int = 0, null_b: int = 0) -> np.ndarray:
    """Congruate by ``S = (A + B)^{-1/2}``; ``SAS + SBS = I`` so the two commute.

    The mean then reduces to the scalar mean on a joint eigenbasis, evaluated
    as ``a phi(b/a)`` or ``b phi'(a/b)`` whichever ratio is at most 1.  Joint
    eigenvalues are Rayleigh quotients, which keeps tiny ones accurate.  The
    ``null_a`` smallest joint eigenvalues of ``A`` (and ``null_b`` of ``B``) are
    set to exactly zero: congruence preserves rank, and rounding noise left
    there would be amplified by functions with infinite slope at 0.
    """
    s = a + b
    lam, q = np.linalg.eigh(s)
    norm = lam[-1]
    if not (norm > 0 and lam[0] > a.shape[0] * SINGULAR_REL * norm):
        raise BothSingular("A and B share a kernel; use regularized_mean or compressed_mean")
    root = (q * np.sqrt(lam)) @ q.T
    inv_root = (q / np.sqrt(lam)) @ q.T
    ap = inv_root @ a @ inv_root
    bp = inv_root @ b @ inv_root
    ap = 0.5 * (ap + ap.T)
    bp = 0.5 * (bp + bp.T)
    _, u = np.linalg.eigh(ap - bp)
    # quotients against the original operands: no cancellation from forming SAS
    w = inv_root @ u
    av = np.maximum(np.einsum("ji,jk,ki->i", w, a, w), 0.0)
    bv = np.maximum(np.einsum("ji,jk,ki->i", w, b, w), 0.0)
    if null_a:
        av[np.argsort(av)[:null_a]] = 0.0
    if null_b:
        bv[np.argsort(bv)[:null_b]] = 0.0
    m = np.empty_like(av)
    left = av >= bv
    if np.any(left):
        m[left] = av[left] * phi(bv[left] / av[left])
    if np.any(~left):
        m[~left] = bv[~left] * phi.transpose()(av[~left] / bv[~left])
    out = root @ (u * m) @ u.T @ root
    return 0.5 * (out + out.T)


def mean_matrix(sigma, a, b, route: str = "auto") -> np.ndarray:
    """Matrix mean ``A s B`` for positive-semidefinite ``A``, ``B``.

    Parameters
    ----------
    sigma : Mean or RepFunction
    a, b : array_like
        Symmetric positive-semidefinite matrices of equal size with
        ``A + B`` invertible (in particular, when either one is invertible).
    route : {"auto", "a", "b"}
        ``"a"`` is ``A^{1/2} phi(A^{-1/2} B A^{-1/2}) A^{1/2}`` and needs ``A``
        invertible; ``"b"`` is ``B^{1/2} phi'(B^{-1/2} A B^{-1/2}) B^{1/2}`` and
        needs ``B`` invertible.  ``"auto"`` congruates by ``(A + B)^{-1/2}``,
        which is markedly more accurate for ill-conditioned operands.

    Raises
    ------
    BothSingular
        If ``A`` and ``B`` have a common kernel; see :func:`regularized_mean`.
    """
    sigma = _as_mean(sigma)
    a = spd.as_symmetric(a, "A")
    b = spd.as_symmetric(b, "B")
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    if route == "auto":
        null_a = _check_psd(a, "A")
        null_b = _check_psd(b, "B")
        return _balanced_route(sigma.rep, a, b, null_a, null_b)
    lam_a, q_a, inv_a = _psd_info(a, "A")
    lam_b, q_b, inv_b = _psd_info(b, "B")
    if route == "a":
        if not inv_a:
            raise spd.SingularMatrix("A is singular; the A-route is unavailable")
        return _route(sigma.rep, lam_a, q_a, b)
    if route == "b":
        if not inv_b:
            raise spd.SingularMatrix("B is singular; the B-route is unavailable")
        return _route(sigma.rep.transpose(), lam_b, q_b, a)
    raise ValueError(f"unknown route {route!r}")


def compressed_mean(sigma, a, b, basis) -> np.ndarray:
    """Mean of two operands supported on the span of the orthonormal ``basis``.

    When ``A`` and ``B`` both vanish on the orthogonal complement of
    ``range(basis)`` the mean splits as ``(A_V s B_V) + 0`` (downward continuity
    applied to ``A + eps I``, ``B + eps I``), so only the compressions matter.
    """
    sigma = _as_mean(sigma)
    v = np.asarray(basis, dtype=float)
    av = v.T @ np.asarray(a) @ v
    bv = v.T @ np.asarray(b) @ v
    m = mean_matrix(sigma, 0.5 * (av + av.T), 0.5 * (bv + bv.T))
    out = v @ m @ v.T
    return 0.5 * (out + out.T)


class RegularizedMean(NamedTuple):
    value: np.ndarray
    gap: float  # relative difference of the last two extrapolants
    iterates: int


def _extrapolate(m_prev2, m_prev, m_last):
    d1 = m_prev - m_prev2
    d2 = m_last - m_prev
    n1 = np.linalg.norm(d1)
    n2 = np.linalg.norm(d2)
    if n2 == 0 or n1 == 0:
        return m_last
    q = n2 / n1
    if q >= 0.95:
        return m_last
    return m_last + d2 * (q / (1.0 - q))


def regularized_mean(sigma, a, b, eps_schedule=DEFAULT_EPS_SCHEDULE, tol: float = 1e-6) -> RegularizedMean:
    """``lim_{eps -> 0} (A + eps I) s (B + eps I)`` by extrapolation.

    The iterates along the decreasing schedule are accelerated with a
    geometric-tail (Aitken) correction whose rate is estimated from the last
    three iterates; this removes both ``O(eps)`` and ``O(eps^gamma)`` leading
    errors.  The reported gap is the relative change between the last two
    extrapolants, measured against ``max(|A|, |B|, |result|)``.

    Raises
    ------
    NoConvergence
        If the gap exceeds ``tol``.
    """
    sigma = _as_mean(sigma)
    a = spd.as_symmetric(a, "A")
    b = spd.as_symmetric(b, "B")
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    eps = sorted((float(e) for e in eps_schedule), reverse=True)
    if len(eps) < 4:
        raise ValueError("eps schedule needs at least four values")
    eye = np.eye(a.shape[0])
    its = [mean_matrix(sigma, a + e * eye, b + e * eye) for e in eps]
    x_last = _extrapolate(its[-3], its[-2], its[-1])
    x_prev = _extrapolate(its[-4], its[-3], its[-2])
    scale = max(spd.spectral_norm(a), spd.spectral_norm(b), spd.spectral_norm(x_last))
    gap = float(np.linalg.norm(x_last - x_prev, 2) / scale) if scale > 0 else 0.0
    if gap > tol:
        raise NoConvergence(f"regularized mean did not settle (gap {gap:.3e} > {tol:.1e})")
    # The limit is positive semidefinite.  Eigenvalues below the achieved
    # resolution (including the overshoot of the extrapolation) are zero.
    lam, q = np.linalg.eigh(0.5 * (x_last + x_last.T))
    floor = max(gap, a.shape[0] * SINGULAR_REL) * scale
    value = (q * np.where(lam <= floor, 0.0, lam)) @ q.T
    return RegularizedMean(0.5 * (value + value.T), gap, len(its))


def adjoint_mean(sigma) -> Mean:
    """``A s* B = (A^{-1} s B^{-1})^{-1}``, represented by ``phi*``."""
    return Mean(_as_mean(sigma).rep.adjoint())


def transpose_mean(sigma) -> Mean:
    """``A s' B = B s A``, represented by ``phi'``."""
    return Mean(_as_mean(sigma).rep.transpose())


# ---------------------------------------------------------------------------
# axiom checks


@dataclass
class AxiomsReport:
    mean: str
    monotonicity: object
    congruence: object
    transformer: object

    @property
    def passed(self) -> bool:
        from .reports import Verdict

        return all(r.verdict is Verdict.HOLDS for r in (self.monotonicity, self.congruence, self.transformer))

    def reports(self):
        return [self.monotonicity, self.congruence, self.transformer]

    def to_dict(self) -> dict:
        return {"mean": self.mean, "passed": self.passed,
                "monotonicity": self.monotonicity.to_dict(),
                "congruence": self.congruence.to_dict(),
                "transformer": self.transformer.to_dict()}


def _lmin_rel(upper: np.ndarray, lower: np.ndarray) -> float:
    d = upper - lower
    scale = max(spd.spectral_norm(upper), spd.spectral_norm(lower))
    if scale == 0:
        return 0.0
    return float(np.linalg.eigvalsh(0.5 * (d + d.T))[0] / scale)


# Singular values of random congruences; keeps cond(S A S^T) within spd.MAX_CONDITION
# for operands drawn from the default spectrum.
CONGRUENCE_SPREAD = 3.0


def _random_invertible(dim: int, rng: np.random.Generator) -> np.ndarray:
    u = spd.random_orthogonal(dim, rng)
    v = spd.random_orthogonal(dim, rng)
    s = np.exp(rng.uniform(-np.log(CONGRUENCE_SPREAD), np.log(CONGRUENCE_SPREAD), size=dim))
    return (u * s) @ v.T


def _random_singular(dim: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """A random rank-deficient ``C`` and an orthonormal basis of its range."""
    rank = int(rng.integers(0, dim)) if dim > 1 else 0
    u = spd.random_orthogonal(dim, rng)
    v = spd.random_orthogonal(dim, rng)
    s = np.zeros(dim)
    s[:rank] = np.exp(rng.uniform(-np.log(CONGRUENCE_SPREAD), np.log(CONGRUENCE_SPREAD), size=rank))
    return (u * s) @ v.T, u[:, :rank]


def trial_rng(seed: int, dim: int, trial: int, salt: int = 0) -> np.random.Generator:
    """Independent stream per (seed, dim, trial); order of execution is irrelevant."""
    return np.random.default_rng([int(seed) & 0xFFFFFFFF, dim, trial, salt])


def check_axioms(sigma, cfg: SearchConfig | None = None) -> AxiomsReport:
    """Randomized check of monotonicity and the transformer inequality.

    Per seeded trial and dimension:

    * monotonicity: ``A <= C``, ``B <= D`` built by adding random PSD
      increments; residual ``lambda_min(C s D - A s B) / |C s D|``;
    * congruence: invertible ``S``, residual ``-|S(A s B)S^T - (SAS^T) s (SBS^T)| / |.|``
      (an equality, judged at ``1e-8``);
    * transformer: rank-deficient ``S``; residual
      ``lambda_min((SAS^T) s (SBS^T) - S(A s B)S^T) / |.|``.  ``S = 0`` is included
      as the rank-0 case.
    """
    sigma = _as_mean(sigma)
    cfg = cfg or SearchConfig()
    name = sigma.descriptor()
    mono = ResidualTracker(cfg, "axiom-monotonicity", mean=name)
    cong = ResidualTracker(cfg.replace(tol=max(cfg.tol, 1e-8)), "axiom-congruence", mean=name)
    trans = ResidualTracker(cfg, "axiom-transformer", mean=name)
    lo, hi = cfg.spectrum_range
    for dim in cfg.dims:
        for trial in range(cfg.trials):
            rng = trial_rng(cfg.seed, dim, trial, salt=1)
            a = spd.random_spd(dim, rng, (lo, hi))
            b = spd.random_spd(dim, rng, (lo, hi))
            m = mean_matrix(sigma, a, b)

            scale = np.exp(rng.uniform(np.log(1e-3), np.log(1.0)))
            c = a + spd.random_psd_increment(dim, rng, scale * spd.spectral_norm(a), int(rng.integers(1, dim + 1)))
            d = b + spd.random_psd_increment(dim, rng, scale * spd.spectral_norm(b), int(rng.integers(1, dim + 1)))
            mono.add(dim, trial, _lmin_rel(mean_matrix(sigma, c, d), m), a, b)

            s = _random_invertible(dim, rng)
            lhs = spd.congruence(s, m)
            rhs = mean_matrix(sigma, spd.congruence(s, a), spd.congruence(s, b))
            rel = np.linalg.norm(lhs - rhs, 2) / max(spd.spectral_norm(rhs), 1e-300)
            cong.add(dim, trial, -float(rel), a, b)

            s0, basis = _random_singular(dim, rng)
            lhs = spd.congruence(s0, m)
            if basis.shape[1] == 0:
                rhs = np.zeros_like(lhs)
            else:
                rhs = compressed_mean(sigma, spd.congruence(s0, a), spd.congruence(s0, b), basis)
            trans.add(dim, trial, _lmin_rel(rhs, lhs), a, b)
    return AxiomsReport(name, mono.report(), cong.report(), trans.report())


def bracket_weight(sigma) -> float:
    """``lambda = phi'(1)``; the mean lies between ``!_lambda`` and ``nabla_lambda``."""
    from .functions import derivative_at_one

    return derivative_at_one(_as_mean(sigma).rep)
