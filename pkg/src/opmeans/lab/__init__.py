"""Preservation experiments: residuals, searches, screens and theorem suites."""

from .closed_forms import (
    Lemma24Check,
    lemma24_lhs,
    lemma24_matrix_check,
    lemma24_rhs,
    scalar_nabla_identity_check,
)
from .power_means import (
    power_geometric_check,
    power_mean_preserver_suite,
    quasi_arithmetic_mean,
    quasi_arithmetic_preserving_check,
    quasi_arithmetic_scalar,
)
from .screens import (
    PropagationCheck,
    TrivialityClass,
    alg_p_triviality_check,
    classify_triviality,
    triviality_screen,
    zero_limit_propagation_check,
)
from .search import (
    check_preservation,
    commutator_norm,
    dual_pair_verdicts,
    lemma_pair,
    run_search,
    signed_residual,
    structured_pairs,
    sub_residual,
)
from .suites import SUITE_NAMES, SUITES, run_suite
from .theory import Prediction, predict_verdict

__all__ = [
    "Lemma24Check",
    "Prediction",
    "PropagationCheck",
    "SUITES",
    "SUITE_NAMES",
    "TrivialityClass",
    "alg_p_triviality_check",
    "check_preservation",
    "classify_triviality",
    "commutator_norm",
    "dual_pair_verdicts",
    "lemma24_lhs",
    "lemma24_matrix_check",
    "lemma24_rhs",
    "lemma_pair",
    "power_geometric_check",
    "power_mean_preserver_suite",
    "predict_verdict",
    "quasi_arithmetic_mean",
    "quasi_arithmetic_preserving_check",
    "quasi_arithmetic_scalar",
    "run_search",
    "run_suite",
    "scalar_nabla_identity_check",
    "signed_residual",
    "structured_pairs",
    "sub_residual",
    "triviality_screen",
    "zero_limit_propagation_check",
]
