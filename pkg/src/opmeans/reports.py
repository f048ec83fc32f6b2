"""Configuration and report records shared by the randomized checks."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, fields, replace
from typing import Any

import numpy as np

from .spd import DEFAULT_SPECTRUM, from_exchange, to_exchange

DEFAULT_EPS_SCHEDULE = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8)


class Direction(str, enum.Enum):
    SUB_L = "subL"  # f(A s B) <= f(A) s f(B)
    SUPER_R = "superR"  # f(A s B) >= f(A) s f(B)
    EQUALITY = "equality"

    @classmethod
    def parse(cls, text: "str | Direction") -> "Direction":
        if isinstance(text, Direction):
            return text
        key = str(text).strip().lower()
        aliases = {"subl": cls.SUB_L, "sub": cls.SUB_L, "l": cls.SUB_L,
                   "superr": cls.SUPER_R, "super": cls.SUPER_R, "r": cls.SUPER_R,
                   "equality": cls.EQUALITY, "eq": cls.EQUALITY, "equal": cls.EQUALITY}
        if key not in aliases:
            raise ValueError(f"unknown direction {text!r}; use subL, superR or equality")
        return aliases[key]


class Verdict(str, enum.Enum):
    HOLDS = "HoldsOnAllTrials"
    VIOLATION = "ViolationFound"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of every randomized harness.

    ``trials`` is the number of seeded draws *per dimension*.
    """

    dims: tuple[int, ...] = (2, 3, 4, 6)
    trials: int = 200
    seed: int = 0
    spectrum_range: tuple[float, float] = DEFAULT_SPECTRUM
    tol: float = 1e-9
    direction: Direction = Direction.SUB_L
    structured: bool = True
    eps_schedule: tuple[float, ...] = DEFAULT_EPS_SCHEDULE

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "spectrum_range", tuple(float(v) for v in self.spectrum_range))
        object.__setattr__(self, "eps_schedule", tuple(float(v) for v in self.eps_schedule))
        object.__setattr__(self, "direction", Direction.parse(self.direction))
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError("dims must be a non-empty list of positive integers")
        if self.spectrum_range[0] <= 0:
            raise ValueError("spectrum lower bound must be positive")

    def replace(self, **changes) -> "SearchConfig":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "trials": self.trials,
            "seed": self.seed,
            "spectrum_range": list(self.spectrum_range),
            "tol": self.tol,
            "direction": self.direction.value,
            "structured": self.structured,
            "eps_schedule": list(self.eps_schedule),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchConfig":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


@dataclass
class Witness:
    a: np.ndarray
    b: np.ndarray
    dim: int
    trial: int
    kind: str = "random"  # "random" or "structured"

    def to_dict(self) -> dict:
        return {"A": to_exchange(self.a), "B": to_exchange(self.b), "dim": self.dim,
                "trial": self.trial, "kind": self.kind}

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        return cls(from_exchange(d["A"]), from_exchange(d["B"]), int(d["dim"]), int(d["trial"]), d.get("kind", "random"))


@dataclass
class TrialRecord:
    dim: int
    trial: int
    residual: float
    kind: str = "random"


def _num(x: float):
    """JSON-safe float: non-finite values become strings."""
    x = float(x)
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def _unnum(x) -> float:
    return float(x)


@dataclass
class PreservationReport:
    """Outcome of a randomized inequality search.

    ``worst_residual`` is the smallest signed, scale-free residual seen; a
    negative value below ``-tol`` is a violation and comes with a witness.
    """

    verdict: Verdict
    worst_residual: float
    witness: Witness | None
    trials_run: int
    config: SearchConfig
    f: str = ""
    mean: str = ""
    check: str = "preservation"
    records: list[TrialRecord] = field(default_factory=list)
    failures: int = 0

    @property
    def seed(self) -> int:
        return self.config.seed

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "f": self.f,
            "mean": self.mean,
            "verdict": self.verdict.value,
            "worst_residual": _num(self.worst_residual),
            "witness": None if self.witness is None else self.witness.to_dict(),
            "trials_run": self.trials_run,
            "failures": self.failures,
            "seed": self.config.seed,
            "config_echo": self.config.to_dict(),
            "records": [[r.dim, r.trial, _num(r.residual), r.kind] for r in self.records],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PreservationReport":
        return cls(
            verdict=Verdict(d["verdict"]),
            worst_residual=_unnum(d["worst_residual"]),
            witness=None if d.get("witness") is None else Witness.from_dict(d["witness"]),
            trials_run=int(d["trials_run"]),
            config=SearchConfig.from_dict(d["config_echo"]),
            f=d.get("f", ""),
            mean=d.get("mean", ""),
            check=d.get("check", "preservation"),
            records=[TrialRecord(int(r[0]), int(r[1]), _unnum(r[2]), r[3]) for r in d.get("records", [])],
            failures=int(d.get("failures", 0)),
        )


def verdict_for(worst: float, tol: float, failures: int, trials_run: int) -> Verdict:
    if worst < -tol:
        return Verdict.VIOLATION
    if failures or trials_run == 0:
        return Verdict.INCONCLUSIVE
    return Verdict.HOLDS


class ResidualTracker:
    """Accumulates signed residuals and remembers the worst pair."""

    def __init__(self, config: SearchConfig, check: str, f: str = "", mean: str = "", keep_records: bool = True):
        self.config = config
        self.check = check
        self.f = f
        self.mean = mean
        self.keep = keep_records
        self.records: list[TrialRecord] = []
        self.worst = math.inf
        self.witness: Witness | None = None
        self.trials_run = 0
        self.failures = 0

    def add(self, dim: int, trial: int, residual: float, a=None, b=None, kind: str = "random") -> None:
        self.trials_run += 1
        if not math.isfinite(residual):
            self.failures += 1
        elif residual < self.worst:
            self.worst = residual
            if a is not None:
                self.witness = Witness(np.array(a), np.array(b), dim, trial, kind)
        if self.keep:
            self.records.append(TrialRecord(dim, trial, float(residual), kind))

    @property
    def violated(self) -> bool:
        return self.worst < -self.config.tol

    def report(self) -> PreservationReport:
        worst = self.worst if self.trials_run and math.isfinite(self.worst) else math.nan
        verdict = verdict_for(worst if math.isfinite(worst) else 0.0, self.config.tol, self.failures, self.trials_run)
        witness = self.witness if verdict is Verdict.VIOLATION else None
        return PreservationReport(verdict, worst, witness, self.trials_run, self.config,
                                  self.f, self.mean, self.check, self.records, self.failures)


@dataclass
class SuiteItem:
    name: str
    expected: str
    observed: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)
    report: PreservationReport | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "observed": self.observed,
                "passed": self.passed, "details": _jsonable(self.details),
                "report": None if self.report is None else self.report.to_dict()}


@dataclass
class SuiteReport:
    name: str
    items: list[SuiteItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def add(self, name: str, expected: str, observed: str, passed: bool, report=None, **details) -> SuiteItem:
        item = SuiteItem(name, expected, observed, bool(passed), details, report)
        self.items.append(item)
        return item

    def extend(self, other: "SuiteReport") -> None:
        for item in other.items:
            self.items.append(item)

    def to_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "items": [i.to_dict() for i in self.items]}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, np.ndarray):
        if obj.ndim == 2 and obj.shape[0] == obj.shape[1]:
            return to_exchange(obj)
        return [_jsonable(v) for v in obj.tolist()]
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)
