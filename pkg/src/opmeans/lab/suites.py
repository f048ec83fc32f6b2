"""Executable theorem suites.

Every suite encodes the verdict the theory expects for each of its items and
records what the numerics observe.  A suite passes when every observation
matches; a mismatch in either direction (a violation where holding is
expected, or holding where a counterexample is guaranteed) fails it.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..errors import ParamOutOfDomain
from ..functions import (
    ALG_GRID,
    ALPHA_GRID,
    PH_GRID,
    STANDARD_GRID,
    STOLARSKY_GRID,
    Identity,
    Logarithmic,
    PetzHasegawa,
    PowerDifference,
    PowerMean,
    RepFunction,
    Stolarsky,
    WeightedArithmetic,
    WeightedGeometric,
    WeightedHarmonic,
    arithmetic_weight,
    harmonic_weight,
    is_trivial,
    same_function,
    standard_catalog,
    zero_limit,
)
from ..means import Mean, check_axioms, mean_scalar, trial_rng
from .. import spd
from ..reports import Direction, SearchConfig, SuiteReport, Verdict
from .closed_forms import lemma24_matrix_check, scalar_nabla_identity_check
from .power_means import (
    power_geometric_check,
    power_mean_preserver_suite,
    quasi_arithmetic_mean,
    quasi_arithmetic_preserving_check,
    quasi_arithmetic_scalar,
)
from .screens import (
    _zero_agreement,
    alg_p_triviality_check,
    classify_triviality,
    triviality_screen,
    zero_limit_propagation_check,
)
from .search import check_preservation, commutator_norm, dual_pair_verdicts
from .theory import ZERO_TOL, predict_equality

LEMMA_GRID = tuple(10.0 ** np.linspace(-1, 1, 5))
LEMMA_TOL = 1e-6
PRESERVING_WEIGHTS = (0.25, 0.5, 0.75)
HARMONIC_WEIGHTS = (0.3, 0.5, 0.7)
POWER_RS = (-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0)
POWER_ALPHAS = (0.25, 0.5, 0.75)
QA_TAGS = ("exp", "power(-1)", "power(-0.5)", "power(0.5)", "power(1)")
QA_BETAS = (0.0, 0.3, 0.7, 1.0)
QA_ALPHAS = (0.3, 0.5)
QA_TOL = 1e-10
INTERIOR_RS = (-0.5, 0.0, 0.5)
NONCOMMUTING_TOL = 1e-6
DUALITY_PAIRS = 25


def _nontrivial(fns):
    return [f for f in fns if not is_trivial(f)]


def _equality_probes() -> list[RepFunction]:
    """A few non-trivial f, one per family, for the equality screens."""
    return [WeightedArithmetic(0.5), WeightedHarmonic(0.5), WeightedGeometric(0.5),
            PowerMean(0.5, 0.5), Logarithmic(), PetzHasegawa(0.25)]


def _expect(suite: SuiteReport, name: str, f: RepFunction, sigma, cfg: SearchConfig, expected: Verdict,
            noncommuting: bool = False, **details):
    """Run one check and record whether it matches ``expected``."""
    stop = expected is Verdict.VIOLATION
    rep = check_preservation(f, sigma, cfg, stop_at_violation=stop)
    ok = rep.verdict is expected
    if noncommuting and rep.witness is not None:
        comm = commutator_norm(rep.witness.a, rep.witness.b)
        details["witness_commutator"] = comm
        ok = ok and comm > NONCOMMUTING_TOL
    return suite.add(name, expected.value, rep.verdict.value, ok, report=rep, **details)


def _equality_screen(suite: SuiteReport, phi: RepFunction, cfg: SearchConfig, probes=None) -> None:
    """Equality verdicts for probe functions, expectations from the preserving theorems."""
    sigma = Mean(phi)
    eq = cfg.replace(direction=Direction.EQUALITY)
    for f in probes or _equality_probes():
        pred = predict_equality(f, phi)
        if pred.verdict is None:
            continue
        _expect(suite, f"{f.descriptor()} preserves {sigma.descriptor()}?", f, sigma, eq, pred.verdict,
                reason=pred.reason)


# ---------------------------------------------------------------------------


def suite_lemma24(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("lemma24")
    fs = (Identity(), WeightedHarmonic(0.5), WeightedGeometric(0.5))
    phis = (WeightedHarmonic(0.5), WeightedGeometric(0.5))
    for f in fs:
        for phi in phis:
            checks = [lemma24_matrix_check(f, phi, x, y, cfg.eps_schedule) for x in LEMMA_GRID for y in LEMMA_GRID]
            worst = max(checks, key=lambda c: c.error)
            suite.add(f"closed forms for f={f.descriptor()}, phi={phi.descriptor()}", f"error <= {LEMMA_TOL:g}",
                      f"{worst.error:.3e}", worst.error <= LEMMA_TOL, worst=worst.to_dict(), grid=list(LEMMA_GRID))
    return suite


def suite_theorem25(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("theorem25-triviality")
    catalog = standard_catalog()
    for phi in _nontrivial(catalog):
        if classify_triviality(phi).adjoint_vanishes:
            suite.extend(triviality_screen(phi, catalog, cfg))
    sub = cfg.replace(direction=Direction.SUB_L)
    rep = check_preservation(PowerMean(0.0, 0.5), Mean(WeightedGeometric(0.5)), sub)
    suite.add("sqrt(t) against geom:0.5: guaranteed counterexample", "violation <= -1e-6",
              f"{rep.worst_residual:.3e}", rep.verdict is Verdict.VIOLATION and rep.worst_residual <= -1e-6, report=rep)
    # zero-limit propagation: predicted violations must be observed
    for phi in (WeightedGeometric(0.5), WeightedArithmetic(0.5), Logarithmic(), PetzHasegawa(0.5)):
        for f in _nontrivial(catalog):
            chk = zero_limit_propagation_check(f, phi, cfg)
            if chk.report is None:
                continue
            suite.add(f"zero-limit screens for f={chk.f} against {chk.mean}", "predicted violations observed",
                      chk.verdict.value, chk.consistent, report=chk.report,
                      adjoint_screen=chk.adjoint_screen.to_dict(), zero_screen=chk.zero_screen.to_dict())
    # the inversion step: (*_L) for (f, s) on (A, B) iff (*_R) for (f*, s*) on the inverses
    pairs = ((PowerMean(0.0, 0.5), WeightedGeometric(0.5)), (WeightedHarmonic(0.5), WeightedArithmetic(0.5)),
             (Logarithmic(), PetzHasegawa(0.25)))
    for f, phi in pairs:
        agree = 0
        for k in range(DUALITY_PAIRS):
            rng = trial_rng(cfg.seed, 2, k, salt=3)
            a = spd.random_spd(2, rng, cfg.spectrum_range)
            b = spd.random_spd(2, rng, cfg.spectrum_range)
            left, right = dual_pair_verdicts(f, Mean(phi), a, b, cfg.tol)
            agree += left == right
        suite.add(f"inversion duality for f={f.descriptor()}, phi={phi.descriptor()}",
                  f"{DUALITY_PAIRS}/{DUALITY_PAIRS} agree", f"{agree}/{DUALITY_PAIRS}", agree == DUALITY_PAIRS)
    return suite


def suite_corollary26(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("corollary26-powers")
    for alpha in POWER_ALPHAS:
        for r in POWER_RS:
            identity = r in (-1.0, 0.0, 1.0)
            expected = Verdict.HOLDS if identity else Verdict.VIOLATION
            rep = power_geometric_check(r, alpha, cfg, stop_at_violation=not identity)
            suite.add(f"(A #_{alpha:g} B)^{r:g} <= A^{r:g} #_{alpha:g} B^{r:g}", expected.value,
                      rep.verdict.value, rep.verdict is expected, report=rep)
    return suite


def suite_corollary27(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("corollary27-screen")
    catalog = standard_catalog()
    for phi in _nontrivial(catalog):
        cls = classify_triviality(phi)
        if cls.label == "c":
            suite.add(f"{phi.descriptor()} is outside both criteria", "no verdict claimed",
                      f"class {cls.label}", True, **cls.to_dict())
        elif cls.sum_positive:
            suite.extend(triviality_screen(phi, catalog, cfg))
    for alpha in ALPHA_GRID:
        cls = classify_triviality(WeightedHarmonic(alpha))
        suite.add(f"harmonic:{alpha:g} is inconclusive", "class c", f"class {cls.label}", cls.label == "c",
                  **cls.to_dict())
    return suite


def suite_stolarsky(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("stolarsky")
    for a, target in ((2.0, WeightedArithmetic(0.5)), (-1.0, WeightedGeometric(0.5)), (0.0, Logarithmic())):
        ok = same_function(Stolarsky(a), target, STANDARD_GRID, 1e-10)
        suite.add(f"stolarsky:{a:g} equals {target.descriptor()}", "agree within 1e-10",
                  "agree" if ok else "differ", ok)
    catalog = standard_catalog()
    for a in sorted(set(STOLARSKY_GRID) | {-2.0, 0.0, 2.0}):
        phi = Stolarsky(a)
        cls = classify_triviality(phi)
        need = "a" if a <= 0 else "b"
        suite.add(f"stolarsky:{a:g} satisfies hypothesis ({need})", need, ",".join(cls.hypotheses) or "none",
                  need in cls.hypotheses, **cls.to_dict())
        if a == 2.0:
            continue  # the arithmetic endpoint has non-trivial preservers
        suite.extend(triviality_screen(phi, catalog, cfg))
        _equality_screen(suite, phi, cfg)
    return suite


def suite_prop210(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = (cfg or SearchConfig()).replace(direction=Direction.SUB_L)
    suite = SuiteReport("prop210-harmonic")
    catalog = standard_catalog()
    for alpha in HARMONIC_WEIGHTS:
        sigma = Mean(WeightedHarmonic(alpha))
        for f in catalog:
            _expect(suite, f"{f.descriptor()} subpreserves {sigma.descriptor()}", f, sigma, cfg, Verdict.HOLDS)
    f_half = WeightedHarmonic(0.5)
    for phi in _nontrivial(catalog):
        if harmonic_weight(phi) is not None:
            continue
        _expect(suite, f"harmonic:0.5 fails against {phi.descriptor()}", f_half, Mean(phi), cfg, Verdict.VIOLATION)
    return suite


def suite_theorem32(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    eq = cfg.replace(direction=Direction.EQUALITY)
    suite = SuiteReport("theorem32-preserving")
    for alpha in PRESERVING_WEIGHTS:
        for beta in PRESERVING_WEIGHTS:
            _expect(suite, f"harmonic:{beta:g} preserves harmonic:{alpha:g}", WeightedHarmonic(beta),
                    Mean(WeightedHarmonic(alpha)), eq, Verdict.HOLDS)
            dev = scalar_nabla_identity_check(WeightedHarmonic(beta), WeightedHarmonic(alpha))
            suite.add(f"nabla identity for harmonic:{beta:g}, harmonic:{alpha:g}", "deviation <= 1e-10",
                      f"{dev:.3e}", dev <= 1e-10, deviation=dev)
    for phi in (WeightedGeometric(0.5), WeightedHarmonic(0.3), Logarithmic()):
        dev = scalar_nabla_identity_check(Identity(), phi)
        suite.add(f"nabla identity for id, {phi.descriptor()}", "deviation <= 1e-12", f"{dev:.3e}", dev <= 1e-12,
                  deviation=dev)
    dev = scalar_nabla_identity_check(WeightedGeometric(0.5), WeightedGeometric(0.5))
    suite.add("nabla identity fails for geom:0.5, geom:0.5", "deviation > 1e-3", f"{dev:.3e}", dev > 1e-3,
              deviation=dev)
    _expect(suite, "sqrt(t) does not preserve geom:0.5", PowerMean(0.0, 0.5), Mean(WeightedGeometric(0.5)), eq,
            Verdict.VIOLATION, noncommuting=True)
    for phi in _nontrivial(standard_catalog()):
        if zero_limit(phi).value <= ZERO_TOL and harmonic_weight(phi) is None:
            _equality_screen(suite, phi, cfg)
    return suite


def suite_corollary33(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    eq = cfg.replace(direction=Direction.EQUALITY)
    suite = SuiteReport("corollary33-arithmetic")
    for alpha in PRESERVING_WEIGHTS:
        for beta in PRESERVING_WEIGHTS:
            _expect(suite, f"arith:{beta:g} preserves arith:{alpha:g}", WeightedArithmetic(beta),
                    Mean(WeightedArithmetic(alpha)), eq, Verdict.HOLDS)
    for phi in _nontrivial(standard_catalog()):
        if zero_limit(phi.adjoint()).value <= ZERO_TOL and arithmetic_weight(phi) is None:
            _equality_screen(suite, phi, cfg)
    return suite


def suite_algp(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("algp")
    for p, target in ((0.5, WeightedGeometric(0.5)), (-1.0, WeightedHarmonic(0.5)), (2.0, WeightedArithmetic(0.5))):
        ok = same_function(PowerDifference(p), target, STANDARD_GRID, 1e-10)
        suite.add(f"alg:{p:g} equals {target.descriptor()}", "agree within 1e-10", "agree" if ok else "differ", ok)
    for p in (-1.0, 2.0):
        try:
            alg_p_triviality_check(p, cfg)
            observed = "accepted"
        except ParamOutOfDomain:
            observed = "rejected"
        suite.add(f"p = {p:g} is outside the open range", "rejected", observed, observed == "rejected")
    for p in ALG_GRID:
        suite.extend(alg_p_triviality_check(p, cfg))
    return suite


def _ph_expected_zeros(p: float) -> tuple[float, float]:
    """``(PH_p(0), PH_p*(0))`` as the case split gives them; endpoints are harmonic."""
    if p in (-1.0, 2.0):
        return 0.0, 0.5
    if 0.0 < p < 1.0:
        return p * (1.0 - p), 0.0
    return 0.0, 0.0


def suite_petz_hasegawa(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("petz-hasegawa")
    catalog = standard_catalog()
    for p in sorted(set(PH_GRID) | {-1.0, 0.0, 1.0, 2.0}):
        phi = PetzHasegawa(p)
        z0, z1 = _zero_agreement(phi), _zero_agreement(phi.adjoint())
        e0, e1 = _ph_expected_zeros(p)
        ok = abs(z0["closed"] - e0) <= 1e-12 and abs(z1["closed"] - e1) <= 1e-12 and z0["agrees"] and z1["agrees"]
        suite.add(f"zero limits of ph:{p:g}", f"PH(0) = {e0:g}, PH*(0) = {e1:g}",
                  f"PH(0) = {z0['closed']:.6g}, PH*(0) = {z1['closed']:.6g}", ok, zero_limit=z0,
                  adjoint_zero_limit=z1)
        ok = same_function(phi, phi.transpose(), STANDARD_GRID, 1e-10)
        suite.add(f"ph:{p:g} is symmetric", "symmetric", "symmetric" if ok else "not symmetric", ok)
        if harmonic_weight(phi) is None:
            suite.extend(triviality_screen(phi, catalog, cfg))
        _equality_screen(suite, phi, cfg)
    # log mean <= PH_p <= PH_1/2 < arithmetic mean, p in (0, 1/2]
    t = STANDARD_GRID
    lo, mid, hi = Logarithmic()(t), PetzHasegawa(0.5)(t), WeightedArithmetic(0.5)(t)
    for p in (0.1, 0.25, 0.4, 0.5):
        v = PetzHasegawa(p)(t)
        slack = float(np.min(np.minimum(v - lo, mid - v) / mid))
        suite.add(f"log mean <= ph:{p:g} <= ph:0.5", "slack >= -1e-12", f"{slack:.3e}", slack >= -1e-12)
    gap = float(np.max((hi - mid) / hi))
    suite.add("ph:0.5 differs from the arithmetic mean", "gap > 1e-3", f"{gap:.3e}", gap > 1e-3)
    return suite


def suite_prop42(cfg: SearchConfig | None = None) -> SuiteReport:
    suite = SuiteReport("prop42-quasi-arithmetic")
    for tag in QA_TAGS:
        for alpha in QA_ALPHAS:
            for beta in QA_BETAS:
                dev = quasi_arithmetic_preserving_check(tag, alpha, beta)
                suite.add(f"{tag} alpha={alpha:g} beta={beta:g}", f"deviation <= {QA_TOL:g}", f"{dev:.3e}",
                          dev <= QA_TOL, deviation=dev)
            # the operator mean with the same scalar values
            g = np.asarray(LEMMA_GRID)
            t, s = np.meshgrid(g, g)
            sigma = quasi_arithmetic_mean(tag, alpha)
            ref = quasi_arithmetic_scalar(tag, alpha, t, s)
            dev = float(np.max(np.abs(mean_scalar(sigma, t, s) - ref) / ref))
            suite.add(f"{tag} alpha={alpha:g} is {sigma.descriptor()}", "deviation <= 1e-12", f"{dev:.3e}",
                      dev <= 1e-12, deviation=dev)
    # a function outside the family breaks the scalar identity
    g = np.asarray(LEMMA_GRID)
    t, s = np.meshgrid(g, g)
    f = WeightedArithmetic(0.5)
    dev = float(np.max(np.abs(f(t ** 0.5 * s ** 0.5) - f(t) ** 0.5 * f(s) ** 0.5)))
    suite.add("arith:0.5 does not preserve the scalar geometric mean", "deviation > 1e-3", f"{dev:.3e}", dev > 1e-3)
    return suite


def suite_prop45(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("prop45-power-means")
    for r in INTERIOR_RS:
        for alpha in (0.3, 0.5):
            suite.extend(power_mean_preserver_suite(r, alpha, cfg))
    return suite


def suite_prop46(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("prop46-endpoints")
    for r in (-1.0, 1.0):
        for alpha in PRESERVING_WEIGHTS:
            suite.extend(power_mean_preserver_suite(r, alpha, cfg))
    return suite


def suite_axioms(cfg: SearchConfig | None = None) -> SuiteReport:
    cfg = cfg or SearchConfig()
    suite = SuiteReport("axioms")
    for phi in standard_catalog():
        rep = check_axioms(Mean(phi), cfg)
        for part, r in (("monotonicity", rep.monotonicity), ("congruence", rep.congruence),
                        ("transformer", rep.transformer)):
            suite.add(f"{part} for {rep.mean}", Verdict.HOLDS.value, r.verdict.value, r.verdict is Verdict.HOLDS,
                      report=r)
    return suite


SUITES: dict[str, Callable[[SearchConfig | None], SuiteReport]] = {
    "lemma24": suite_lemma24,
    "theorem25-triviality": suite_theorem25,
    "corollary26-powers": suite_corollary26,
    "corollary27-screen": suite_corollary27,
    "stolarsky": suite_stolarsky,
    "prop210-harmonic": suite_prop210,
    "theorem32-preserving": suite_theorem32,
    "corollary33-arithmetic": suite_corollary33,
    "algp": suite_algp,
    "petz-hasegawa": suite_petz_hasegawa,
    "prop42-quasi-arithmetic": suite_prop42,
    "prop45-power-means": suite_prop45,
    "prop46-endpoints": suite_prop46,
    "axioms": suite_axioms,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, cfg: SearchConfig | None = None) -> SuiteReport:
    """Run a suite by name; ``"all"`` concatenates every suite in order."""
    if name == "all":
        out = SuiteReport("all")
        for key, fn in SUITES.items():
            for item in fn(cfg).items:
                item.name = f"{key}: {item.name}"
                out.items.append(item)
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return SUITES[name](cfg)


__all__ = ["SUITES", "SUITE_NAMES", "run_suite"] + [n for n in dir() if n.startswith("suite_")]
