"""Weighted power means: powers of the geometric mean and quasi-arithmetic characterizations."""

from __future__ import annotations

import math
import re
from typing import Callable

import numpy as np

from .. import spd
from ..errors import DomainError, ParamOutOfDomain
from ..functions import PowerMean, WeightedGeometric
from ..means import Mean, mean_matrix
from ..reports import Direction, PreservationReport, SearchConfig, SuiteReport, Verdict
from .search import check_preservation, commutator_norm, run_search, signed_residual

EQUALITY_POWERS = (-1.0, 0.0, 1.0)
DEFAULT_QA_GRID = tuple(10.0 ** np.linspace(-2, 2, 20))
PRESERVER_BETAS = (0.0, 0.25, 0.5, 0.75, 1.0)
NONCOMMUTING_TOL = 1e-6


def power_geometric_check(r: float, alpha: float, cfg: SearchConfig | None = None,
                          stop_at_violation: bool = False) -> PreservationReport:
    """Search for pairs with ``(A #_alpha B)^r`` not below ``A^r #_alpha B^r``.

    For ``r`` in ``{-1, 0, 1}`` the two sides are equal for every pair, and the
    equality residual is recorded instead of the one-sided one.
    """
    r = float(r)
    alpha = float(alpha)
    if not -2.0 <= r <= 2.0:
        raise ParamOutOfDomain(f"r must lie in [-2, 2], got {r}")
    if not 0.0 < alpha < 1.0:
        raise ParamOutOfDomain(f"alpha must lie in (0, 1), got {alpha}")
    cfg = cfg or SearchConfig()
    sigma = Mean(WeightedGeometric(alpha))
    direction = Direction.EQUALITY if r in EQUALITY_POWERS else Direction.SUB_L
    cfg = cfg.replace(direction=direction)

    def residual(a, b):
        lhs = spd.power_matrix(mean_matrix(sigma, a, b), r)
        rhs = mean_matrix(sigma, spd.power_matrix(a, r), spd.power_matrix(b, r))
        return signed_residual(lhs, rhs, direction)

    name = f"power-geometric:r={r:g},a={alpha:g}"
    return run_search(residual, cfg, name, f=f"t^{r:g}", mean=sigma.descriptor(),
                      stop_at_violation=stop_at_violation)


# ---------------------------------------------------------------------------
# quasi-arithmetic scalar means  t s s = g(alpha g^{-1}(t) + (1 - alpha) g^{-1}(s))

_POWER_TAG = re.compile(r"^power\(?\s*([-+0-9.eE]+)\s*\)?$")


def parse_generator(tag) -> tuple[str, float]:
    """Normalize a generator tag: ``"exp"``, ``"power(a)"`` or ``("power", a)``."""
    if isinstance(tag, tuple):
        kind, *rest = tag
        a = float(rest[0]) if rest else math.nan
    else:
        text = str(tag).strip().lower()
        if text == "exp":
            return "exp", 0.0
        m = _POWER_TAG.match(text)
        if not m:
            raise ParamOutOfDomain(f"unknown generator {tag!r}; use 'exp' or 'power(a)'")
        kind, a = "power", float(m.group(1))
    if kind == "exp":
        return "exp", 0.0
    if kind != "power":
        raise ParamOutOfDomain(f"unknown generator {tag!r}")
    if not (-1.0 <= a <= 1.0) or a == 0.0 or not math.isfinite(a):
        raise ParamOutOfDomain(f"power generator needs a in [-1, 0) or (0, 1], got {a}")
    return "power", a


def _generator(tag) -> tuple[Callable, Callable]:
    kind, a = parse_generator(tag)
    if kind == "exp":
        return np.exp, np.log
    return (lambda u: u ** (1.0 / a)), (lambda t: t**a)


def quasi_arithmetic_scalar(tag, alpha: float, t, s):
    """``g(alpha g^{-1}(t) + (1 - alpha) g^{-1}(s))`` for ``g = exp`` or ``g(u) = u^{1/a}``.

    Examples
    --------
    >>> quasi_arithmetic_scalar("exp", 0.5, 1.0, 4.0)
    2.0
    >>> round(quasi_arithmetic_scalar("power(-1)", 0.5, 1.0, 2.0), 12)
    1.333333333333
    """
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ParamOutOfDomain(f"alpha must lie in [0, 1], got {alpha}")
    ta, sa = np.asarray(t, dtype=float), np.asarray(s, dtype=float)
    if np.any(~(ta > 0)) or np.any(~(sa > 0)):
        raise DomainError("quasi-arithmetic means need positive arguments")
    g, g_inv = _generator(tag)
    out = g(alpha * g_inv(ta) + (1.0 - alpha) * g_inv(sa))
    return float(out) if np.ndim(out) == 0 else out


def quasi_arithmetic_mean(tag, alpha: float) -> Mean:
    """The Kubo-Ando mean agreeing with the quasi-arithmetic scalar mean.

    ``1 s t`` puts weight ``1 - alpha`` on ``t``, so ``exp`` gives ``#_{1-alpha}``
    and ``power(a)`` gives the weighted power mean ``Phi_(a, 1 - alpha)``.
    """
    kind, a = parse_generator(tag)
    if kind == "exp":
        return Mean(WeightedGeometric(1.0 - alpha))
    return Mean(PowerMean(a, 1.0 - alpha))


def quasi_arithmetic_preserver(tag, beta: float) -> Callable:
    """``f(t) = g(beta g^{-1}(t) + (1 - beta) g^{-1}(1))``."""
    beta = float(beta)
    if not 0.0 <= beta <= 1.0:
        raise ParamOutOfDomain(f"beta must lie in [0, 1], got {beta}")
    g, g_inv = _generator(tag)
    one = float(g_inv(1.0))
    return lambda t: g(beta * g_inv(np.asarray(t, dtype=float)) + (1.0 - beta) * one)


def quasi_arithmetic_preserving_check(tag, alpha: float, beta: float, grid=DEFAULT_QA_GRID) -> float:
    """Largest relative gap in ``f(t s s) = f(t) s f(s)`` over grid pairs, ``f`` from ``beta``."""
    f = quasi_arithmetic_preserver(tag, beta)
    g = np.asarray(grid, dtype=float)
    t, s = np.meshgrid(g, g)
    left = f(quasi_arithmetic_scalar(tag, alpha, t, s))
    right = quasi_arithmetic_scalar(tag, alpha, f(t), f(s))
    return float(np.max(np.abs(left - right) / np.abs(right)))


# ---------------------------------------------------------------------------


def _tag_for_power(r: float) -> str:
    return "exp" if r == 0 else f"power({r:g})"


def power_mean_preserver_suite(r: float, alpha: float, cfg: SearchConfig | None = None) -> SuiteReport:
    """Which ``Phi_(r, beta)`` preserve the weighted power mean ``Phi_(r, alpha)``.

    For ``r = +-1`` every ``beta`` gives equality.  For ``-1 < r < 1`` only the
    trivial ``beta in {0, 1}`` do; the others must produce an equality
    violation on a non-commuting pair, although scalar (commuting) equality
    holds for all of them.
    """
    r = float(r)
    alpha = float(alpha)
    if not -1.0 <= r <= 1.0:
        raise ParamOutOfDomain(f"r must lie in [-1, 1], got {r}")
    if not 0.0 < alpha < 1.0:
        raise ParamOutOfDomain(f"alpha must lie in (0, 1), got {alpha}")
    cfg = (cfg or SearchConfig()).replace(direction=Direction.EQUALITY)
    sigma = Mean(PowerMean(r, alpha))
    suite = SuiteReport(f"power-means r={r:g} alpha={alpha:g}")
    endpoint = r in (-1.0, 1.0)
    for beta in PRESERVER_BETAS:
        f = PowerMean(r, beta)
        trivial = beta in (0.0, 1.0)
        if endpoint or trivial:
            rep = check_preservation(f, sigma, cfg)
            suite.add(f"{f.descriptor()} preserves {sigma.descriptor()}", Verdict.HOLDS.value,
                      rep.verdict.value, rep.verdict is Verdict.HOLDS, report=rep)
            continue
        rep = check_preservation(f, sigma, cfg, stop_at_violation=True)
        comm = commutator_norm(rep.witness.a, rep.witness.b) if rep.witness is not None else 0.0
        ok = rep.verdict is Verdict.VIOLATION and comm > NONCOMMUTING_TOL
        suite.add(f"{f.descriptor()} does not preserve {sigma.descriptor()}", Verdict.VIOLATION.value,
                  rep.verdict.value, ok, report=rep, witness_commutator=comm)
        # the scalar identity survives on commuting inputs
        tag = _tag_for_power(r)
        dev = quasi_arithmetic_preserving_check(tag, 1.0 - alpha, beta)
        suite.add(f"scalar equality for {f.descriptor()}", "deviation <= 1e-10", f"{dev:.3e}", dev <= 1e-10,
                  deviation=dev)
    return suite
