"""The 2x2 closed forms built on ``P = diag(1, 0)`` and the scalar nabla identity."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .. import spd
from ..errors import HypothesisWarning
from ..functions import RepFunction, zero_limit
from ..means import Mean, mean_matrix, regularized_mean
from ..reports import DEFAULT_EPS_SCHEDULE
from .search import lemma_pair
from .theory import ZERO_TOL

DEFAULT_NABLA_GRID = tuple(10.0 ** np.linspace(-2, 2, 21))


def _warn_hypotheses(f: RepFunction, phi: RepFunction) -> None:
    bad = [name for name, g in (("f", f), ("phi", phi)) if zero_limit(g).value > ZERO_TOL]
    if bad:
        warnings.warn(
            f"closed form assumes f(0) = phi(0) = 0; nonzero zero limit for {', '.join(bad)}",
            HypothesisWarning,
            stacklevel=3,
        )


def _check_xy(x: float, y: float) -> None:
    if not (x > 0 and y > 0):
        raise ValueError(f"x and y must be positive, got {x!r}, {y!r}")


def lemma24_lhs(f: RepFunction, phi: RepFunction, x: float, y: float) -> float:
    """Coefficient of ``P`` in ``f(P s_{phi'} Q)``: ``f(phi'(4xy / (x + y)))``.

    Warns with :class:`HypothesisWarning` when ``f(0)`` or ``phi(0)`` is nonzero
    (the value is still returned, but then it need not match the matrix).

    Examples
    --------
    >>> from opmeans.functions import Identity, WeightedGeometric
    >>> round(lemma24_lhs(Identity(), WeightedGeometric(0.5), 1.0, 1.0), 12)
    1.414213562373
    """
    _check_xy(x, y)
    _warn_hypotheses(f, phi)
    return float(f(phi.transpose()(4.0 * x * y / (x + y))))


def lemma24_rhs(f: RepFunction, phi: RepFunction, x: float, y: float) -> float:
    """Coefficient of ``P`` in ``f(P) s_{phi'} f(Q)``: ``phi'(2 f(2x) f(2y) / (f(2x) + f(2y)))``."""
    _check_xy(x, y)
    _warn_hypotheses(f, phi)
    fx, fy = float(f(2.0 * x)), float(f(2.0 * y))
    return float(phi.transpose()(2.0 * fx * fy / (fx + fy)))


@dataclass(frozen=True)
class Lemma24Check:
    x: float
    y: float
    lhs: float
    rhs: float
    direct_error: float  # mean_matrix on the singular pair
    regularized_error: float  # limit of (P + eps I, Q + eps I)
    regularization_gap: float

    @property
    def error(self) -> float:
        return max(self.direct_error, self.regularized_error)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("x", "y", "lhs", "rhs", "direct_error",
                                              "regularized_error", "regularization_gap", "error")}


def _rel(m: np.ndarray, coeff: float, p: np.ndarray) -> float:
    target = coeff * p
    return float(np.linalg.norm(m - target, 2) / max(np.linalg.norm(target, 2), 1e-300))


def lemma24_matrix_check(
    f: RepFunction,
    phi: RepFunction,
    x: float,
    y: float,
    eps_schedule=DEFAULT_EPS_SCHEDULE,
) -> Lemma24Check:
    """Compare both closed forms against matrix evaluation.

    ``f(P s Q)`` and ``f(P) s f(Q)`` with ``s = s_{phi'}`` are computed twice:
    directly (the pair is singular only in ``P``) and as the limit of the
    regularized pairs.  Errors are spectral-norm relative to the closed form.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisWarning)
        lhs = lemma24_lhs(f, phi, x, y)
        rhs = lemma24_rhs(f, phi, x, y)
    _warn_hypotheses(f, phi)
    sigma = Mean(phi.transpose())
    p, q = lemma_pair(x, y)
    fp, fq = spd.apply_function(f, p), spd.apply_function(f, q)

    direct_l = spd.apply_function(f, mean_matrix(sigma, p, q))
    direct_r = mean_matrix(sigma, fp, fq)
    reg_l = regularized_mean(sigma, p, q, eps_schedule)
    reg_r = regularized_mean(sigma, fp, fq, eps_schedule)
    return Lemma24Check(
        x=float(x),
        y=float(y),
        lhs=lhs,
        rhs=rhs,
        direct_error=max(_rel(direct_l, lhs, p), _rel(direct_r, rhs, p)),
        regularized_error=max(_rel(spd.apply_function(f, reg_l.value), lhs, p), _rel(reg_r.value, rhs, p)),
        regularization_gap=max(reg_l.gap, reg_r.gap),
    )


def scalar_nabla_identity_check(f: RepFunction, phi: RepFunction, grid=DEFAULT_NABLA_GRID) -> float:
    """Largest relative gap in ``f*(phi'*(x nabla y)) = phi'*(f*(x) nabla f*(y))`` over grid pairs.

    ``nabla`` is the plain arithmetic mean and ``phi'*`` the adjoint of the
    transpose (which is the dual of ``phi``).  The identity is necessary for
    ``f`` to preserve ``s_phi`` when ``f(0) = phi(0) = 0``.
    """
    g = np.asarray(grid, dtype=float)
    x, y = np.meshgrid(g, g)
    x, y = x.ravel(), y.ravel()
    fa = f.adjoint()
    pa = phi.transpose().adjoint()
    left = fa(pa(0.5 * (x + y)))
    right = pa(0.5 * (fa(x) + fa(y)))
    return float(np.max(np.abs(left - right) / np.maximum(np.abs(right), 1e-300)))

