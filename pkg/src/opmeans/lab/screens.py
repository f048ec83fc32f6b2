"""Hypothesis screens: which triviality criterion covers a mean, and what it forces.

The screens decide from boundary values alone whether a counterexample must
exist, then ask the search to produce it.  They assert existence of
violations; a universally quantified "f is trivial" cannot be sampled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NoConvergence, ParamOutOfDomain
from ..functions import (
    PowerDifference,
    ZERO_TAIL_EXPONENTS,
    RepFunction,
    is_identity,
    is_trivial,
    numeric_zero_limit,
    standard_catalog,
    zero_limit,
)
from ..means import Mean, _as_mean
from ..reports import Direction, PreservationReport, SearchConfig, SuiteReport, Verdict
from .search import check_preservation
from .theory import ZERO_TOL, ZeroData

ZERO_AGREEMENT = 1e-8


@dataclass(frozen=True)
class TrivialityClass:
    """Which triviality hypothesis ``phi`` satisfies.

    ``label`` is ``"a"`` when ``phi*(0) = 0``, ``"b"`` when
    ``phi(0) + phi'(0) > 0`` (and not (a)), otherwise ``"c"``: no criterion
    applies and no verdict is claimed.  ``hypotheses`` lists all that apply.
    """

    label: str
    adjoint_vanishes: bool
    sum_positive: bool
    zeros: ZeroData

    @property
    def covered(self) -> bool:
        return self.label in ("a", "b")

    @property
    def hypotheses(self) -> tuple[str, ...]:
        """Every criterion that applies; both may hold at once."""
        return tuple(h for h, ok in (("a", self.adjoint_vanishes), ("b", self.sum_positive)) if ok)

    @property
    def positive_summands(self) -> list[str]:
        out = []
        if self.zeros.at_zero > ZERO_TOL:
            out.append("phi(0)")
        if self.zeros.transpose_at_zero > ZERO_TOL:
            out.append("phi'(0)")
        return out

    def to_dict(self) -> dict:
        return {"class": self.label, "hypotheses": list(self.hypotheses), "adjoint_vanishes": self.adjoint_vanishes,
                "sum_positive": self.sum_positive, "positive_summands": self.positive_summands,
                "zeros": self.zeros.to_dict()}


def classify_triviality(phi: RepFunction) -> TrivialityClass:
    """Classify a non-trivial representing function by the triviality criteria.

    Examples
    --------
    >>> from opmeans.functions import Stolarsky, WeightedHarmonic
    >>> classify_triviality(Stolarsky(-1.0)).label
    'a'
    >>> classify_triviality(Stolarsky(1.0)).hypotheses
    ('a', 'b')
    >>> classify_triviality(WeightedHarmonic(0.5)).label
    'c'
    """
    z = ZeroData.of(phi)
    if z.adjoint_vanishes:
        label = "a"
    elif z.sum_positive:
        label = "b"
    else:
        label = "c"
    return TrivialityClass(label, z.adjoint_vanishes, z.sum_positive, z)


def _f_vanishes(f: RepFunction) -> bool:
    return zero_limit(f).value <= ZERO_TOL


def triviality_screen(phi, candidates=None, cfg: SearchConfig | None = None) -> SuiteReport:
    """Per-candidate verdicts of the triviality criteria for ``s_phi``.

    Under class (a) or (b) every candidate ``f != t`` with ``f(0) = 0`` must
    fail the subpreserving inequality, so the search is run expecting
    ``ViolationFound``.  Other candidates, and every candidate under class
    (c), are listed as not covered without running a search.
    """
    phi = _as_mean(phi).rep
    if is_trivial(phi):
        raise ParamOutOfDomain(f"the screen needs a non-trivial mean, got {phi.descriptor()}")
    cfg = (cfg or SearchConfig()).replace(direction=Direction.SUB_L)
    cls = classify_triviality(phi)
    sigma = Mean(phi)
    suite = SuiteReport(f"triviality-screen {phi.descriptor()}")
    candidates = standard_catalog() if candidates is None else list(candidates)
    for f in candidates:
        name = f"{f.descriptor()} against {phi.descriptor()}"
        if not cls.covered:
            suite.add(name, "not covered", "class c: no criterion applies", True, **cls.to_dict())
            continue
        if is_identity(f) or not _f_vanishes(f):
            suite.add(name, "not covered", "f = t or f(0) > 0", True, **cls.to_dict())
            continue
        rep = check_preservation(f, sigma, cfg, stop_at_violation=True)
        suite.add(name, Verdict.VIOLATION.value, rep.verdict.value, rep.verdict is Verdict.VIOLATION,
                  report=rep, **cls.to_dict())
    return suite


@dataclass(frozen=True)
class ScreenOutcome:
    applies: bool
    expected: Verdict | None
    reason: str

    def to_dict(self) -> dict:
        return {"applies": self.applies, "expected": None if self.expected is None else self.expected.value,
                "reason": self.reason}


@dataclass
class PropagationCheck:
    """Both zero-limit screens for one pair plus the search they call for.

    ``verdict`` follows the adjoint screen: the observed search verdict when it
    predicts a violation, ``HoldsOnAllTrials`` for trivial ``f``, otherwise
    ``Inconclusive``.  ``report`` is present whenever a search was run.
    """

    f: str
    mean: str
    verdict: Verdict
    adjoint_screen: ScreenOutcome
    zero_screen: ScreenOutcome
    report: PreservationReport | None = None

    @property
    def consistent(self) -> bool:
        """No screen's predicted violation went unobserved."""
        for s in (self.adjoint_screen, self.zero_screen):
            if s.expected is Verdict.VIOLATION and (self.report is None or self.report.verdict is not Verdict.VIOLATION):
                return False
        return True

    def to_dict(self) -> dict:
        return {"f": self.f, "mean": self.mean, "verdict": self.verdict.value,
                "adjoint_screen": self.adjoint_screen.to_dict(), "zero_screen": self.zero_screen.to_dict(),
                "consistent": self.consistent,
                "report": None if self.report is None else self.report.to_dict()}


def _adjoint_screen(f: RepFunction, z: ZeroData) -> ScreenOutcome:
    if not z.adjoint_vanishes:
        return ScreenOutcome(False, None, "phi*(0) > 0: screen does not apply")
    if zero_limit(f.adjoint()).value > ZERO_TOL:
        return ScreenOutcome(True, Verdict.VIOLATION, "phi*(0) = 0 but f*(0) > 0")
    return ScreenOutcome(True, None, "phi*(0) = 0 and f*(0) = 0: no conclusion")


def _zero_screen(f: RepFunction, z: ZeroData) -> ScreenOutcome:
    if not _f_vanishes(f):
        return ScreenOutcome(False, None, "f(0) > 0: screen does not apply")
    if z.at_zero > ZERO_TOL:
        return ScreenOutcome(True, Verdict.VIOLATION, "f(0) = 0 but phi(0) > 0")
    return ScreenOutcome(True, None, "f(0) = 0 and phi(0) = 0: no conclusion")


def zero_limit_propagation_check(f: RepFunction, phi, cfg: SearchConfig | None = None) -> PropagationCheck:
    """Contrapositive screens on zero limits for the subpreserving inequality.

    A subpreserving ``f`` inherits ``f*(0) = 0`` from ``phi*(0) = 0`` (adjoint
    screen), and ``f(0) = 0`` forces ``phi(0) = 0`` (zero screen).  A
    predicted violation is sent to the search.
    """
    phi = _as_mean(phi).rep
    cfg = (cfg or SearchConfig()).replace(direction=Direction.SUB_L)
    sigma = Mean(phi)
    if is_trivial(f):
        vacuous = ScreenOutcome(False, None, "f is trivial: vacuous")
        rep = check_preservation(f, sigma, cfg)
        return PropagationCheck(f.descriptor(), sigma.descriptor(), rep.verdict, vacuous, vacuous, rep)
    z = ZeroData.of(phi)
    adj, zero = _adjoint_screen(f, z), _zero_screen(f, z)
    rep = None
    if Verdict.VIOLATION in (adj.expected, zero.expected):
        rep = check_preservation(f, sigma, cfg, stop_at_violation=True)
    verdict = rep.verdict if adj.expected is Verdict.VIOLATION else Verdict.INCONCLUSIVE
    return PropagationCheck(f.descriptor(), sigma.descriptor(), verdict, adj, zero, rep)


def _tail_approaches(g: RepFunction, target: float) -> bool:
    """The tail ``g(10^-k)`` moves strictly toward ``target``.

    Fallback when the approach is too slow to settle in double precision
    (``t^e`` with tiny ``e``, or ``1 / log(1/t)`` next to the logarithmic member).
    """
    t = 10.0 ** -np.asarray(ZERO_TAIL_EXPONENTS, dtype=float)
    with np.errstate(all="ignore"):
        v = np.asarray(g(t), dtype=float)
    v = v[np.isfinite(v)]
    gap = np.abs(v - target)
    return v.size >= 3 and bool(np.all(np.diff(gap) < 0))


def _zero_agreement(g: RepFunction) -> dict:
    """Closed-form zero limit against the numeric tail."""
    closed = zero_limit(g).value
    try:
        numeric = numeric_zero_limit(g).value
    except NoConvergence:
        numeric = float(g(10.0 ** -ZERO_TAIL_EXPONENTS[-1]))
    if abs(closed - numeric) <= ZERO_AGREEMENT:
        return {"closed": closed, "numeric": numeric, "method": "numeric-tail", "agrees": True}
    return {"closed": closed, "numeric": numeric, "method": "monotone-tail", "agrees": _tail_approaches(g, closed)}


def alg_p_triviality_check(p: float, cfg: SearchConfig | None = None, candidates=None) -> SuiteReport:
    """Power-difference means with ``p`` in ``(-1, 2)`` admit only trivial preservers.

    Confirms that ``ALG_p(0) = 0`` or ``ALG_p*(0) = 0`` (closed form against
    the numeric tail), runs :func:`triviality_screen`, and looks for an
    equality violation for every non-trivial candidate.
    """
    p = float(p)
    if not -1.0 < p < 2.0:
        raise ParamOutOfDomain(f"p must lie in (-1, 2), got {p}")
    cfg = cfg or SearchConfig()
    phi = PowerDifference(p)
    suite = SuiteReport(f"alg-triviality p={p:g}")
    z0, z1 = _zero_agreement(phi), _zero_agreement(phi.adjoint())
    vanishing = min(z0["closed"], z1["closed"]) <= ZERO_TOL
    suite.add(f"ALG_{p:g}(0) = 0 or ALG_{p:g}*(0) = 0", "one zero limit is 0",
              f"ALG(0) = {z0['closed']:.3g}, ALG*(0) = {z1['closed']:.3g}",
              vanishing and z0["agrees"] and z1["agrees"], zero_limit=z0, adjoint_zero_limit=z1)
    candidates = standard_catalog() if candidates is None else list(candidates)
    suite.extend(triviality_screen(phi, candidates, cfg))
    eq_cfg = cfg.replace(direction=Direction.EQUALITY)
    sigma = Mean(phi)
    for f in candidates:
        if is_trivial(f):
            continue
        rep = check_preservation(f, sigma, eq_cfg, stop_at_violation=True)
        suite.add(f"{f.descriptor()} does not preserve {sigma.descriptor()}", Verdict.VIOLATION.value,
                  rep.verdict.value, rep.verdict is Verdict.VIOLATION, report=rep)
    return suite


__all__ = [
    "PropagationCheck",
    "ScreenOutcome",
    "TrivialityClass",
    "alg_p_triviality_check",
    "classify_triviality",
    "triviality_screen",
    "zero_limit_propagation_check",
]
