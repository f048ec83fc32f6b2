"""What the theory predicts for a preservation question, and why.

Every rule returns the expected verdict together with the result it rests
on.  ``None`` means the available results do not decide the question.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..functions import (
    RepFunction,
    arithmetic_weight,
    harmonic_weight,
    is_trivial,
    zero_limit,
)
from ..means import _as_mean
from ..reports import Direction, Verdict

ZERO_TOL = 1e-12


@dataclass(frozen=True)
class Prediction:
    verdict: Verdict | None
    reason: str

    @property
    def decided(self) -> bool:
        return self.verdict is not None

    def to_dict(self) -> dict:
        return {"verdict": None if self.verdict is None else self.verdict.value, "reason": self.reason}


@dataclass(frozen=True)
class ZeroData:
    """Boundary values that decide the triviality criteria for ``phi``."""

    at_zero: float  # phi(0)
    adjoint_at_zero: float  # phi*(0)
    transpose_at_zero: float  # phi'(0)

    @classmethod
    def of(cls, phi: RepFunction) -> "ZeroData":
        return cls(
            zero_limit(phi).value,
            zero_limit(phi.adjoint()).value,
            zero_limit(phi.transpose()).value,
        )

    @property
    def adjoint_vanishes(self) -> bool:
        return self.adjoint_at_zero <= ZERO_TOL

    @property
    def sum_positive(self) -> bool:
        return self.at_zero + self.transpose_at_zero > ZERO_TOL

    def to_dict(self) -> dict:
        return {"phi(0)": self.at_zero, "phi*(0)": self.adjoint_at_zero, "phi'(0)": self.transpose_at_zero}


def _zero(f: RepFunction) -> bool:
    return zero_limit(f).value <= ZERO_TOL


def predict_sub(f: RepFunction, phi: RepFunction) -> Prediction:
    """Expected verdict for ``f(A s B) <= f(A) s f(B)`` with ``s = s_phi``."""
    if is_trivial(f):
        return Prediction(Verdict.HOLDS, "f is trivial, both sides coincide")
    if is_trivial(phi):
        return Prediction(Verdict.HOLDS, "the mean is trivial, both sides coincide")
    if harmonic_weight(phi) is not None:
        return Prediction(Verdict.HOLDS, "every f subpreserves a weighted harmonic mean")
    if arithmetic_weight(f) is not None:
        return Prediction(Verdict.HOLDS, "affine f: joint concavity of the mean gives the inequality")
    if harmonic_weight(f) is not None:
        return Prediction(Verdict.VIOLATION, "a harmonic f subpreserves only weighted harmonic means")
    z = ZeroData.of(phi)
    f0 = _zero(f)
    if f0 and z.adjoint_vanishes:
        return Prediction(Verdict.VIOLATION, "phi*(0) = 0 and f(0) = 0 force f = t")
    if f0 and z.sum_positive:
        return Prediction(Verdict.VIOLATION, "phi(0) + phi'(0) > 0 and f(0) = 0 force f = t")
    if z.adjoint_vanishes and not _zero(f.adjoint()):
        return Prediction(Verdict.VIOLATION, "phi*(0) = 0 requires f*(0) = 0")
    if f0 and z.at_zero > ZERO_TOL:
        return Prediction(Verdict.VIOLATION, "f(0) = 0 requires phi(0) = 0")
    if arithmetic_weight(phi) is not None:
        return Prediction(Verdict.VIOLATION, "operator concavity reverses the inequality for arithmetic means")
    return Prediction(None, "no criterion applies")


def predict_super(f: RepFunction, phi: RepFunction) -> Prediction:
    """``(*_R)`` for ``(f, phi)`` is ``(*_L)`` for ``(f*, phi*)`` after inverting both arguments."""
    p = predict_sub(f.adjoint(), phi.adjoint())
    return Prediction(p.verdict, f"via adjoints: {p.reason}")


def predict_equality(f: RepFunction, phi: RepFunction) -> Prediction:
    if is_trivial(f) or is_trivial(phi):
        return Prediction(Verdict.HOLDS, "trivial f or trivial mean")
    if harmonic_weight(phi) is not None and harmonic_weight(f) is not None:
        return Prediction(Verdict.HOLDS, "harmonic f preserves harmonic means")
    if arithmetic_weight(phi) is not None and arithmetic_weight(f) is not None:
        return Prediction(Verdict.HOLDS, "arithmetic f preserves arithmetic means")
    for p in (predict_sub(f, phi), predict_super(f, phi)):
        if p.verdict is Verdict.VIOLATION:
            return Prediction(Verdict.VIOLATION, f"one inequality already fails ({p.reason})")
    z = ZeroData.of(phi)
    if z.at_zero <= ZERO_TOL:
        return Prediction(Verdict.VIOLATION, "phi(0) = 0: only harmonic pairs are preserving")
    if z.adjoint_vanishes:
        return Prediction(Verdict.VIOLATION, "phi*(0) = 0: only arithmetic pairs are preserving")
    return Prediction(None, "no criterion applies")


def predict_verdict(f: RepFunction, sigma, direction: Direction | str = Direction.SUB_L) -> Prediction:
    """Verdict the theory expects from :func:`~opmeans.lab.search.check_preservation`."""
    phi = _as_mean(sigma).rep
    direction = Direction.parse(direction)
    if direction is Direction.SUB_L:
        return predict_sub(f, phi)
    if direction is Direction.SUPER_R:
        return predict_super(f, phi)
    return predict_equality(f, phi)


__all__ = ["Prediction", "ZeroData", "predict_equality", "predict_sub", "predict_super", "predict_verdict"]
