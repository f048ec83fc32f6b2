"""Normalized operator-monotone functions and their transforms.

Every member of the catalog is an immutable descriptor that evaluates
elementwise on ``numpy`` arrays.  Values at ``t = 0`` are the one-sided limits
``f(0+)``.  Transforms are wrappers evaluated by composition::

    transpose  f'(t)   = t f(1/t)
    adjoint    f*(t)   = 1 / f(1/t)
    dual       f^T(t)  = t / f(t)

Zero limits use exact asymptotic data.  Each base family knows the four
limits ``f(0)``, ``lim f(t)/t`` at 0, ``f(inf)`` and ``lim f(t)/t`` at infinity,
and each transform permutes (and inverts) them, so ``zero_limit`` is
closed-form for every descriptor.  :func:`numeric_zero_limit` is the
independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import DomainError, DuplicatePoints, NoConvergence, ParamOutOfDomain

STANDARD_GRID = 2.0 ** np.arange(-20, 21)
NEAR_ONE = 1e-4
INF = math.inf


def _inv(x: float) -> float:
    if x == 0:
        return INF
    if math.isinf(x):
        return 0.0
    return 1.0 / x


class Asymptotics(NamedTuple):
    """Boundary behaviour: ``f(0+)``, ``lim_{t->0} f(t)/t``, ``f(inf)``, ``lim_{t->inf} f(t)/t``."""

    at_zero: float
    slope_zero: float
    at_inf: float
    slope_inf: float

    def transposed(self) -> "Asymptotics":
        return Asymptotics(self.slope_inf, self.at_inf, self.slope_zero, self.at_zero)

    def adjointed(self) -> "Asymptotics":
        return Asymptotics(
            _inv(self.at_inf), _inv(self.slope_inf), _inv(self.at_zero), _inv(self.slope_zero)
        )

    def dualized(self) -> "Asymptotics":
        return Asymptotics(
            _inv(self.slope_zero), _inv(self.at_zero), _inv(self.slope_inf), _inv(self.at_inf)
        )


class ZeroLimit(NamedTuple):
    value: float
    method: str  # "closed-form" or "numeric-limit"


def _near_one_series(t: np.ndarray, c2: float, closed: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Evaluate a symmetric family with a removable singularity at ``t = 1``.

    Near 1 the value is ``1 + h/2 + c2 h^2 - (c2/2) h^3`` with ``h = t - 1``;
    every family handled here is symmetric (``f(t) = t f(1/t)``), which fixes
    the linear and cubic coefficients in terms of ``c2``.
    """
    h = t - 1.0
    near = np.abs(h) < NEAR_ONE
    out = np.empty_like(t)
    if np.any(near):
        hn = h[near]
        out[near] = 1.0 + hn * (0.5 + hn * (c2 - 0.5 * c2 * hn))
    far = ~near
    if np.any(far):
        with np.errstate(all="ignore"):
            out[far] = closed(t[far])
    return out


def _log_mean(t):
    return (t - 1.0) / np.log(t)


def _adjoint_log_mean(t):
    return t * np.log(t) / (t - 1.0)


def _identric(t):
    return np.exp(t * np.log(t) / (t - 1.0) - 1.0)


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamOutOfDomain(msg)


def _real(x, name: str) -> float:
    try:
        v = float(x)
    except (TypeError, ValueError) as exc:
        raise ParamOutOfDomain(f"{name} must be a real number, got {x!r}") from exc
    _check(math.isfinite(v), f"{name} must be finite, got {x!r}")
    return v


def _fmt(x: float) -> str:
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


@dataclass(frozen=True)
class RepFunction:
    """Base class for normalized positive operator-monotone functions."""

    family = "abstract"

    def __call__(self, t):
        arr = np.asarray(t, dtype=float)
        if np.any(np.isnan(arr)) or np.any(arr < 0):
            raise DomainError(f"{self.descriptor()} is defined on [0, inf), got {t!r}")
        flat = np.atleast_1d(arr).astype(float, copy=True)
        zero = flat == 0
        if np.any(zero):
            flat[zero] = self.asymptotics.at_zero
        pos = ~zero
        if np.any(pos):
            flat[pos] = self._eval(flat[pos])
        if arr.ndim == 0:
            return float(flat[0])
        return flat.reshape(arr.shape)

    def _eval(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @cached_property
    def asymptotics(self) -> Asymptotics:
        return self._asymptotics()

    def _asymptotics(self) -> Asymptotics:
        raise NotImplementedError

    def descriptor(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.descriptor()

    # transforms
    def transpose(self) -> "RepFunction":
        return Transposed(self)

    def adjoint(self) -> "RepFunction":
        return Adjointed(self)

    def dual(self) -> "RepFunction":
        return Dualized(self)

    @property
    def is_trivial(self) -> bool:
        """True for descriptors that are structurally ``1`` or ``t``."""
        return False


@dataclass(frozen=True)
class ConstantOne(RepFunction):
    family = "one"

    def _eval(self, t):
        return np.ones_like(t)

    def _asymptotics(self):
        return Asymptotics(1.0, INF, 1.0, 0.0)

    def descriptor(self):
        return "one"

    @property
    def is_trivial(self):
        return True


@dataclass(frozen=True)
class Identity(RepFunction):
    family = "id"

    def _eval(self, t):
        return np.array(t, dtype=float)

    def _asymptotics(self):
        return Asymptotics(0.0, 1.0, INF, 1.0)

    def descriptor(self):
        return "id"

    @property
    def is_trivial(self):
        return True


@dataclass(frozen=True)
class _Weighted(RepFunction):
    alpha: float

    def __post_init__(self):
        a = _real(self.alpha, "alpha")
        _check(0.0 <= a <= 1.0, f"alpha must lie in [0, 1], got {a}")
        object.__setattr__(self, "alpha", a)

    def descriptor(self):
        return f"{self.family}:{_fmt(self.alpha)}"


@dataclass(frozen=True)
class WeightedArithmetic(_Weighted):
    """``(1 - alpha) + alpha t``."""

    family = "arith"

    def _eval(self, t):
        return (1.0 - self.alpha) + self.alpha * t

    def _asymptotics(self):
        a = self.alpha
        return Asymptotics(1.0 - a, INF if a < 1 else 1.0, INF if a > 0 else 1.0, a)


@dataclass(frozen=True)
class WeightedHarmonic(_Weighted):
    """``((alpha / t) + (1 - alpha))^{-1} = t / (alpha + (1 - alpha) t)``."""

    family = "harmonic"

    def _eval(self, t):
        return t / (self.alpha + (1.0 - self.alpha) * t)

    def _asymptotics(self):
        a = self.alpha
        return Asymptotics(
            0.0 if a > 0 else 1.0,
            _inv(a),
            _inv(1.0 - a),
            0.0 if a < 1 else 1.0,
        )


@dataclass(frozen=True)
class WeightedGeometric(_Weighted):
    """``t^alpha``."""

    family = "geom"

    def _eval(self, t):
        return t**self.alpha

    def _asymptotics(self):
        a = self.alpha
        return Asymptotics(
            0.0 if a > 0 else 1.0,
            INF if a < 1 else 1.0,
            INF if a > 0 else 1.0,
            0.0 if a < 1 else 1.0,
        )


@dataclass(frozen=True)
class PowerMean(RepFunction):
    """Weighted power mean ``(alpha t^r + 1 - alpha)^{1/r}``; ``r = 0`` means ``t^alpha``."""

    r: float
    alpha: float
    family = "power"

    def __post_init__(self):
        r = _real(self.r, "r")
        a = _real(self.alpha, "alpha")
        _check(-1.0 <= r <= 1.0, f"r must lie in [-1, 1], got {r}")
        _check(0.0 <= a <= 1.0, f"alpha must lie in [0, 1], got {a}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "alpha", a)

    def _eval(self, t):
        r, a = self.r, self.alpha
        if r == 0:
            return t**a
        if a == 1:
            return np.array(t, dtype=float)
        if a == 0:
            return np.ones_like(t)
        with np.errstate(over="ignore"):
            return (a * t**r + (1.0 - a)) ** (1.0 / r)

    def _asymptotics(self):
        r, a = self.r, self.alpha
        if r == 0:
            return WeightedGeometric(a)._asymptotics()
        if a == 0:
            return ConstantOne()._asymptotics()
        if a == 1:
            return Identity()._asymptotics()
        if r > 0:
            return Asymptotics((1.0 - a) ** (1.0 / r), INF, INF, a ** (1.0 / r))
        return Asymptotics(0.0, a ** (1.0 / r), (1.0 - a) ** (1.0 / r), 0.0)

    def descriptor(self):
        return f"power:r={_fmt(self.r)},a={_fmt(self.alpha)}"


@dataclass(frozen=True)
class Logarithmic(RepFunction):
    """Logarithmic mean ``(t - 1) / log t``."""

    family = "log"

    def _eval(self, t):
        return _near_one_series(t, -1.0 / 12.0, _log_mean)

    def _asymptotics(self):
        return Asymptotics(0.0, INF, INF, 0.0)

    def descriptor(self):
        return "log"


@dataclass(frozen=True)
class PetzHasegawa(RepFunction):
    """``p(1-p) (t-1)^2 / ((t^p - 1)(t^{1-p} - 1))`` for ``p`` in ``[-1, 2]``.

    ``p = 0`` and ``p = 1`` are the logarithmic mean (the limit in ``p``).
    """

    p: float
    family = "ph"

    def __post_init__(self):
        p = _real(self.p, "p")
        _check(-1.0 <= p <= 2.0, f"p must lie in [-1, 2], got {p}")
        object.__setattr__(self, "p", p)

    def _eval(self, t):
        p = self.p
        if p in (0.0, 1.0):
            return Logarithmic()._eval(t)
        c2 = -(p * p - p + 1.0) / 12.0

        def closed(x):
            lx = np.log(x)
            return p * (1.0 - p) * (x - 1.0) ** 2 / (np.expm1(p * lx) * np.expm1((1.0 - p) * lx))

        return _near_one_series(t, c2, closed)

    def _asymptotics(self):
        q = min(self.p, 1.0 - self.p)
        if q == 0:
            return Logarithmic()._asymptotics()
        if q > 0:
            v = q * (1.0 - q)
            return Asymptotics(v, INF, INF, v)
        # q in [-1, 0): f(t) ~ |q|(1 - q) t^{|q|} at 0
        slope = 2.0 if q == -1.0 else INF
        return Asymptotics(0.0, slope, slope, 0.0)

    def descriptor(self):
        return f"ph:{_fmt(self.p)}"


@dataclass(frozen=True)
class Stolarsky(RepFunction):
    """Stolarsky mean ``S_a(1, t) = ((1 - t^a) / (a (1 - t)))^{1/(a-1)}``, ``a`` in ``[-2, 2]``.

    ``a = 0`` is the logarithmic mean and ``a = 1`` the identric mean
    ``e^{-1} t^{t/(t-1)}``.
    """

    a: float
    family = "stolarsky"

    def __post_init__(self):
        a = _real(self.a, "a")
        _check(-2.0 <= a <= 2.0, f"a must lie in [-2, 2], got {a}")
        object.__setattr__(self, "a", a)

    def _eval(self, t):
        a = self.a
        if a == 0:
            return Logarithmic()._eval(t)
        if a == 1:
            return _near_one_series(t, -1.0 / 24.0, _identric)

        def closed(x):
            ratio = np.expm1(a * np.log(x)) / (a * (x - 1.0))
            return np.exp(np.log(ratio) / (a - 1.0))

        return _near_one_series(t, (a - 2.0) / 24.0, closed)

    def _asymptotics(self):
        a = self.a
        if a == 0:
            return Logarithmic()._asymptotics()
        if a == 1:
            v = math.exp(-1.0)
            return Asymptotics(v, INF, INF, v)
        if a > 0:
            v = a ** (1.0 / (1.0 - a))
            return Asymptotics(v, INF, INF, v)
        return Asymptotics(0.0, INF, INF, 0.0)

    def descriptor(self):
        return f"stolarsky:{_fmt(self.a)}"


@dataclass(frozen=True)
class PowerDifference(RepFunction):
    """Power difference mean ``((p-1)/p) (1 - t^p) / (1 - t^{p-1})``, ``p`` in ``[-1, 2]``.

    ``p = 1`` is the logarithmic mean and ``p = 0`` its adjoint ``t log t / (t - 1)``.
    """

    p: float
    family = "alg"

    def __post_init__(self):
        p = _real(self.p, "p")
        _check(-1.0 <= p <= 2.0, f"p must lie in [-1, 2], got {p}")
        object.__setattr__(self, "p", p)

    def _eval(self, t):
        p = self.p
        if p == 1:
            return Logarithmic()._eval(t)
        if p == 0:
            return _near_one_series(t, -1.0 / 6.0, _adjoint_log_mean)

        def closed(x):
            lx = np.log(x)
            return (p - 1.0) / p * np.expm1(p * lx) / np.expm1((p - 1.0) * lx)

        return _near_one_series(t, (p - 2.0) / 12.0, closed)

    def _asymptotics(self):
        p = self.p
        if p == 1:
            return Logarithmic()._asymptotics()
        if p == 0:
            return Asymptotics(0.0, INF, INF, 0.0)
        if p > 1:
            v = (p - 1.0) / p
            return Asymptotics(v, INF, INF, v)
        if p > 0:
            return Asymptotics(0.0, INF, INF, 0.0)
        v = (p - 1.0) / p
        return Asymptotics(0.0, v, v, 0.0)

    def descriptor(self):
        return f"alg:{_fmt(self.p)}"


@dataclass(frozen=True)
class Transposed(RepFunction):
    inner: RepFunction
    family = "transpose"

    def _eval(self, t):
        return t * self.inner._eval(1.0 / t)

    def _asymptotics(self):
        return self.inner.asymptotics.transposed()

    def descriptor(self):
        return f"transpose({self.inner.descriptor()})"


@dataclass(frozen=True)
class Adjointed(RepFunction):
    inner: RepFunction
    family = "adjoint"

    def _eval(self, t):
        return 1.0 / self.inner._eval(1.0 / t)

    def _asymptotics(self):
        return self.inner.asymptotics.adjointed()

    def descriptor(self):
        return f"adjoint({self.inner.descriptor()})"


@dataclass(frozen=True)
class Dualized(RepFunction):
    inner: RepFunction
    family = "dual"

    def _eval(self, t):
        return t / self.inner._eval(t)

    def _asymptotics(self):
        return self.inner.asymptotics.dualized()

    def descriptor(self):
        return f"dual({self.inner.descriptor()})"


def transpose(f: RepFunction) -> RepFunction:
    return f.transpose()


def adjoint(f: RepFunction) -> RepFunction:
    return f.adjoint()


def dual(f: RepFunction) -> RepFunction:
    return f.dual()


# ---------------------------------------------------------------------------
# limits, derivatives, symmetry

ZERO_TAIL_EXPONENTS = tuple(range(1, 13)) + (16, 24, 32, 48, 64, 96, 128, 192)


def numeric_zero_limit(f: Callable, exponents: Sequence[int] = ZERO_TAIL_EXPONENTS, tol: float = 1e-8) -> ZeroLimit:
    """Estimate ``f(0+)`` from the tail ``f(10^-k)``.

    The tail is cut at the first non-finite value (overflow inside ``f``).
    The estimate is accepted when the last two tail values agree to ``tol``
    (absolute below 1, relative above).  A tail that keeps growing past
    ``1e12`` is reported as ``inf``.  A tail that moves too slowly for that
    (``1 / log(1/t)``, as for the logarithmic mean) is extrapolated to ``k = inf``
    in the variable ``1/k`` and accepted when successive orders agree.

    Raises
    ------
    NoConvergence
        If the tail neither stabilizes nor diverges.
    """
    vals = []
    with np.errstate(all="ignore"):
        for k in exponents:
            v = float(_eval_positive(f, 10.0 ** (-k)))
            if not math.isfinite(v):
                break
            vals.append(v)
    if len(vals) < 3:
        raise NoConvergence(f"tail has too few finite values: {vals}")
    last, prev, prev2 = vals[-1], vals[-2], vals[-3]
    if last > 1e12 and last > prev > prev2:
        return ZeroLimit(INF, "numeric-limit")
    if abs(last - prev) <= tol * max(1.0, abs(last)):
        return ZeroLimit(last, "numeric-limit")
    est = _extrapolate_log_tail(exponents[: len(vals)], vals, tol)
    if est is None:
        raise NoConvergence(f"tail did not stabilize: last values {prev!r}, {last!r}")
    return ZeroLimit(est, "numeric-limit")


def _neville_at_zero(x: Sequence[float], y: Sequence[float]) -> float:
    """Value at 0 of the interpolating polynomial through ``(x, y)``."""
    p = list(y)
    n = len(x)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i])
    return p[0]


def _extrapolate_log_tail(exponents: Sequence[int], vals: Sequence[float], tol: float, depth: int = 4) -> float | None:
    """Richardson extrapolation of ``f(10^-k)`` in ``1/k``, for tails like ``1 / log(1/t)``.

    Estimates of increasing order on the last points must agree to ``tol``.
    """
    if len(vals) < depth + 2:
        return None
    x = [1.0 / k for k in exponents]
    ests = [_neville_at_zero(x[-(m + 1):], vals[-(m + 1):]) for m in range(2, depth + 2)]
    scale = max(1.0, abs(ests[-1]))
    if all(abs(a - b) <= tol * scale for a, b in zip(ests, ests[1:])) and math.isfinite(ests[-1]):
        return float(ests[-1])
    return None


def _eval_positive(f, t):
    if isinstance(f, RepFunction):
        return f._eval(np.array([t]))[0]
    return f(t)


def zero_limit(f: Callable) -> ZeroLimit:
    """``f(0+)``: closed form for catalog descriptors, numeric tail otherwise."""
    if isinstance(f, RepFunction):
        return ZeroLimit(float(f.asymptotics.at_zero), "closed-form")
    return numeric_zero_limit(f)


def infinity_limit(f: RepFunction) -> float:
    """``lim_{t -> inf} f(t)`` (may be ``inf``)."""
    return float(f.asymptotics.at_inf)


def derivative_at_one(f: Callable, step: float = 1e-6) -> float:
    """Central finite difference ``(f(1+h) - f(1-h)) / 2h``.

    For a normalized operator-monotone function the result lies in ``[0, 1]``;
    values within ``1e-8`` of that interval are clamped into it, anything
    further out is returned unchanged so callers can detect it.
    """
    d = (float(f(1.0 + step)) - float(f(1.0 - step))) / (2.0 * step)
    if -1e-8 <= d <= 1.0 + 1e-8:
        return min(max(d, 0.0), 1.0)
    return d


def _max_rel_dev(f, g, grid) -> float:
    grid = np.asarray(grid, dtype=float)
    fv, gv = np.asarray(f(grid)), np.asarray(g(grid))
    return float(np.max(np.abs(fv - gv) / np.maximum(np.abs(fv), np.finfo(float).tiny)))


def is_symmetric(f: RepFunction, grid=STANDARD_GRID, tol: float = 1e-10) -> bool:
    return _max_rel_dev(f, f.transpose(), grid) <= tol


def is_self_adjoint(f: RepFunction, grid=STANDARD_GRID, tol: float = 1e-10) -> bool:
    return _max_rel_dev(f, f.adjoint(), grid) <= tol


def same_function(f: Callable, g: Callable, grid=STANDARD_GRID, tol: float = 1e-10) -> bool:
    """Pointwise agreement on ``grid`` within relative ``tol``."""
    return _max_rel_dev(f, g, grid) <= tol


def harmonic_weight(f: RepFunction, grid=STANDARD_GRID, tol: float = 1e-9) -> float | None:
    """Return ``beta`` if ``f`` equals the weighted harmonic representing function ``!_beta``.

    ``beta`` is read off from the derivative at 1, then the identification is
    confirmed pointwise on ``grid``.  Returns ``None`` otherwise.
    """
    return _weight_if_matches(f, WeightedHarmonic, grid, tol)


def arithmetic_weight(f: RepFunction, grid=STANDARD_GRID, tol: float = 1e-9) -> float | None:
    """Like :func:`harmonic_weight` for the weighted arithmetic means."""
    return _weight_if_matches(f, WeightedArithmetic, grid, tol)


def _weight_if_matches(f, family, grid, tol):
    beta = derivative_at_one(f)
    if not 0.0 <= beta <= 1.0:
        return None
    if beta < 1e-7:
        beta = 0.0
    elif beta > 1 - 1e-7:
        beta = 1.0
    # derivative is accurate to ~1e-10 only; compare on a moderate grid
    if _max_rel_dev(f, family(beta), grid) <= max(tol, 1e-6):
        return beta
    return None


def is_constant_one(f: Callable, grid=STANDARD_GRID) -> bool:
    return same_function(f, ConstantOne(), grid, 1e-12)


def is_identity(f: Callable, grid=STANDARD_GRID) -> bool:
    return same_function(f, Identity(), grid, 1e-12)


def is_trivial(f: Callable, grid=STANDARD_GRID) -> bool:
    """``f == 1`` or ``f == t`` on the grid."""
    return is_constant_one(f, grid) or is_identity(f, grid)


# ---------------------------------------------------------------------------
# Loewner matrices


def _fd_derivative(f: Callable, x: np.ndarray) -> np.ndarray:
    h = np.cbrt(np.finfo(float).eps) * x
    return (np.asarray(f(x + h), dtype=float) - np.asarray(f(x - h), dtype=float)) / (2.0 * h)


def loewner_matrix(f: Callable, points) -> np.ndarray:
    """Divided-difference matrix ``[(f(l_i) - f(l_j)) / (l_i - l_j)]``.

    The diagonal holds a central finite-difference derivative ``f'(l_i)``.

    Raises
    ------
    DuplicatePoints
        If two points coincide to 12 significant digits.
    DomainError
        If a point is not positive.
    """
    x = np.asarray(points, dtype=float).ravel()
    if np.any(~np.isfinite(x)) or np.any(x <= 0):
        raise DomainError("Loewner points must be positive and finite")
    xs = np.sort(x)
    if xs.size > 1 and np.any(np.diff(xs) <= 1e-12 * xs[1:]):
        raise DuplicatePoints(f"points are not distinct: {x}")
    fx = np.asarray(f(x), dtype=float)
    num = fx[:, None] - fx[None, :]
    den = x[:, None] - x[None, :]
    np.fill_diagonal(den, 1.0)
    out = num / den
    np.fill_diagonal(out, _fd_derivative(f, x))
    return 0.5 * (out + out.T)


class MonotonicityCheck(NamedTuple):
    passed: bool
    worst_min_eig: float  # relative to the Loewner matrix's spectral norm


def is_operator_monotone_order_n(
    f: Callable, n: int, trials: int = 100, seed: int = 0, spectrum_range=(1e-2, 1e2)
) -> MonotonicityCheck:
    """Sample ``n``-point Loewner matrices and test them for semidefiniteness.

    A pass is necessary for operator monotonicity of order ``n``, not
    sufficient.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = np.random.default_rng(seed)
    lo, hi = np.log(spectrum_range[0]), np.log(spectrum_range[1])
    worst = INF
    for _ in range(trials):
        pts = np.exp(rng.uniform(lo, hi, size=n))
        lm = loewner_matrix(f, pts)
        lam = np.linalg.eigvalsh(lm)
        norm = max(abs(lam[0]), abs(lam[-1]))
        rel = lam[0] / norm if norm > 0 else 0.0
        worst = min(worst, float(rel))
    return MonotonicityCheck(worst >= -1e-9, worst)


# ---------------------------------------------------------------------------
# catalog

ALPHA_GRID = (0.1, 0.3, 0.5, 0.7, 0.9)
POWER_GRID = ((-0.75, 0.3), (-0.25, 0.5), (0.25, 0.7), (0.5, 0.5), (0.75, 0.3))
PH_GRID = (-1.0, -0.5, 0.25, 0.5, 1.75)
STOLARSKY_GRID = (-2.0, -1.0, -0.5, 0.5, 1.5)
ALG_GRID = (-0.5, 0.0, 0.5, 1.0, 1.5)


def standard_catalog(include_trivial: bool = True) -> list[RepFunction]:
    """Catalog members used by the theorem suites, five parameters per family.

    The identric mean (Stolarsky ``a = 1``) is deliberately left out.
    """
    fns: list[RepFunction] = []
    if include_trivial:
        fns += [ConstantOne(), Identity()]
    fns += [WeightedArithmetic(a) for a in ALPHA_GRID]
    fns += [WeightedHarmonic(a) for a in ALPHA_GRID]
    fns += [WeightedGeometric(a) for a in ALPHA_GRID]
    fns += [PowerMean(r, a) for r, a in POWER_GRID]
    fns += [PetzHasegawa(p) for p in PH_GRID]
    fns += [Stolarsky(a) for a in STOLARSKY_GRID]
    fns += [PowerDifference(p) for p in ALG_GRID]
    fns.append(Logarithmic())
    return fns


FAMILIES = {
    "one": "constant function 1 (left-trivial mean A)",
    "id": "identity t (right-trivial mean B)",
    "arith:ALPHA": "weighted arithmetic (1-alpha) + alpha t, alpha in [0,1]",
    "harmonic:ALPHA": "weighted harmonic t / (alpha + (1-alpha) t), alpha in [0,1]",
    "geom:ALPHA": "weighted geometric t^alpha, alpha in [0,1]",
    "power:r=R,a=ALPHA": "weighted power mean (alpha t^r + 1 - alpha)^(1/r), r in [-1,1]",
    "ph:P": "Petz-Hasegawa p(1-p)(t-1)^2/((t^p-1)(t^(1-p)-1)), p in [-1,2]",
    "stolarsky:A": "Stolarsky ((1-t^a)/(a(1-t)))^(1/(a-1)), a in [-2,2]",
    "alg:P": "power difference ((p-1)/p)(1-t^p)/(1-t^(p-1)), p in [-1,2]",
    "log": "logarithmic mean (t-1)/log t",
    "transpose(F)": "t F(1/t)",
    "adjoint(F)": "1 / F(1/t)",
    "dual(F)": "t / F(t)",
}
