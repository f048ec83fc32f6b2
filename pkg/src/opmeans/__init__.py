"""Kubo-Ando operator means and the operator monotone functions that (sub)preserve them."""

from .descriptors import parse_function
from .errors import OpMeansError
from .functions import RepFunction, standard_catalog
from .means import Mean, arithmetic, check_axioms, geometric, harmonic, mean_matrix, mean_scalar
from .reports import Direction, PreservationReport, SearchConfig, SuiteReport, Verdict

__version__ = "0.1.0"

__all__ = [
    "Direction",
    "Mean",
    "OpMeansError",
    "PreservationReport",
    "RepFunction",
    "SearchConfig",
    "SuiteReport",
    "Verdict",
    "arithmetic",
    "check_axioms",
    "geometric",
    "harmonic",
    "mean_matrix",
    "mean_scalar",
    "parse_function",
    "standard_catalog",
]
