"""Dense real symmetric matrix kernel.

Matrices are plain ``numpy`` arrays of shape ``(n, n)``; the functions here
validate symmetry at the boundary and return new arrays (inputs are never
modified).  Functional calculus goes through the symmetric eigendecomposition
``A = Q diag(lam) Q^T``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import (
    BadRange,
    DimensionMismatch,
    DomainError,
    MatrixFormatError,
    NonSymmetric,
    SingularMatrix,
)

SYMMETRY_TOL = 1e-12
PSD_TOL = 1e-9
SINGULAR_TOL = 1e-14
DEFAULT_SPECTRUM = (1e-3, 1e3)
MAX_CONDITION = 1e8


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        q = self.eigenvectors
        return (q * self.eigenvalues) @ q.T


class Relation(str, enum.Enum):
    LESS_EQUAL = "LessEqual"
    GREATER_EQUAL = "GreaterEqual"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class LoewnerVerdict:
    relation: Relation
    min_eig_b_minus_a: float
    min_eig_a_minus_b: float
    tolerance_used: float

    @property
    def less_equal(self) -> bool:
        return self.min_eig_b_minus_a >= -self.tolerance_used

    @property
    def greater_equal(self) -> bool:
        return self.min_eig_a_minus_b >= -self.tolerance_used


def as_symmetric(a, name: str = "matrix") -> np.ndarray:
    """Return ``a`` as a float array after checking squareness and symmetry.

    The result is the exact symmetrization ``(a + a^T) / 2`` so that
    downstream eigen-solvers see a bit-symmetric input.
    """
    arr = np.array(a, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite entries")
    scale = 1.0 + (np.max(np.abs(arr)) if arr.size else 0.0)
    asym = np.max(np.abs(arr - arr.T)) if arr.size else 0.0
    if asym > SYMMETRY_TOL * scale:
        raise NonSymmetric(f"{name} is not symmetric (max |a_ij - a_ji| = {asym:.3e})")
    return 0.5 * (arr + arr.T)


def _same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")


def spectral_norm(a: np.ndarray) -> float:
    """Largest absolute eigenvalue of a symmetric matrix."""
    if a.size == 0:
        return 0.0
    lam = np.linalg.eigvalsh(a)
    return float(max(abs(lam[0]), abs(lam[-1])))


def min_eig(a: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(a)[0])


def eigen_decompose(a) -> EigenDecomposition:
    """Symmetric eigendecomposition with eigenvalues in ascending order."""
    a = as_symmetric(a)
    lam, q = np.linalg.eigh(a)
    return EigenDecomposition(lam, q)


def apply_function(f: Callable, a) -> np.ndarray:
    """Functional calculus ``f(A) = Q diag(f(lam_i)) Q^T``.

    Eigenvalues that are negative only by rounding (within ``PSD_TOL`` of the
    spectral norm) are snapped to zero, so functions defined on ``[0, inf)``
    through a limit value (all :class:`~opmeans.functions.RepFunction`
    objects) can be applied to positive-semidefinite input.  So are positive
    eigenvalues at rounding level (``dim * SINGULAR_TOL`` relative), which a
    function with infinite slope at 0 would otherwise inflate.

    Raises
    ------
    DomainError
        If ``f`` rejects an eigenvalue or returns a non-finite value.
    """
    a = as_symmetric(a)
    lam, q = np.linalg.eigh(a)
    norm = max(abs(lam[0]), abs(lam[-1])) if lam.size else 0.0
    noise = (lam <= a.shape[0] * SINGULAR_TOL * norm) & (lam >= -PSD_TOL * norm)
    lam = np.where(noise, 0.0, lam)
    try:
        with np.errstate(all="ignore"):
            vals = np.asarray(f(lam), dtype=float)
    except DomainError:
        raise
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        raise DomainError(f"function rejected spectrum {lam}: {exc}") from exc
    vals = np.broadcast_to(vals, lam.shape)
    if not np.all(np.isfinite(vals)):
        bad = lam[~np.isfinite(vals)]
        raise DomainError(f"function is not finite at eigenvalue(s) {bad}")
    out = (q * vals) @ q.T
    return 0.5 * (out + out.T)


def congruence(s, a) -> np.ndarray:
    """``S A S^T`` for a square ``S`` of matching size."""
    s = np.asarray(s, dtype=float)
    a = as_symmetric(a)
    if s.shape != a.shape:
        raise DimensionMismatch(f"shapes differ: {s.shape} vs {a.shape}")
    out = s @ a @ s.T
    return 0.5 * (out + out.T)


def loewner_compare(a, b, tol: float = PSD_TOL) -> LoewnerVerdict:
    """Compare two symmetric matrices in the Loewner order.

    ``A <= B`` is accepted when ``lambda_min(B - A) >= -tol * max(|A|, |B|, 1)``
    with spectral norms.
    """
    a = as_symmetric(a, "A")
    b = as_symmetric(b, "B")
    _same_dim(a, b)
    scale = max(spectral_norm(a), spectral_norm(b), 1.0)
    tol_used = tol * scale
    d = b - a
    lam = np.linalg.eigvalsh(0.5 * (d + d.T))
    bma = float(lam[0])
    amb = float(-lam[-1])
    le = bma >= -tol_used
    ge = amb >= -tol_used
    if le and ge:
        rel = Relation.EQUAL
    elif le:
        rel = Relation.LESS_EQUAL
    elif ge:
        rel = Relation.GREATER_EQUAL
    else:
        rel = Relation.INCOMPARABLE
    return LoewnerVerdict(rel, bma, amb, tol_used)


def make_rng(seed) -> np.random.Generator:
    """Generator from an int, a sequence of ints, or an existing Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_orthogonal(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar orthogonal matrix by QR of a Gaussian matrix with sign correction."""
    z = rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def _check_range(spectrum_range) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in spectrum_range)
    except (TypeError, ValueError) as exc:
        raise BadRange(f"spectrum range must be a pair, got {spectrum_range!r}") from exc
    if not (np.isfinite(lo) and np.isfinite(hi)) or lo <= 0 or hi < lo:
        raise BadRange(f"need 0 < lo <= hi, got ({lo}, {hi})")
    if hi / lo > MAX_CONDITION:
        raise BadRange(f"hi/lo = {hi / lo:.3g} exceeds {MAX_CONDITION:.0e}")
    return lo, hi


def random_spectrum(dim: int, rng: np.random.Generator, spectrum_range=DEFAULT_SPECTRUM) -> np.ndarray:
    lo, hi = _check_range(spectrum_range)
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size=dim))


def random_spd(dim: int, seed=0, spectrum_range=DEFAULT_SPECTRUM) -> np.ndarray:
    """Seeded random positive-definite matrix.

    Eigenvalues are log-uniform in ``spectrum_range`` and the eigenbasis is
    Haar-distributed.  The result depends only on ``(dim, seed, spectrum_range)``.

    Parameters
    ----------
    dim : int
        Matrix size, at least 1.
    seed : int, sequence of int, or numpy Generator
        Entropy for the draw; a Generator is consumed in place.
    spectrum_range : (float, float)
        Bounds ``0 < lo <= hi`` with ``hi / lo <= 1e8``.
    """
    if int(dim) != dim or dim < 1:
        raise BadRange(f"dim must be a positive integer, got {dim!r}")
    dim = int(dim)
    lo, hi = _check_range(spectrum_range)
    rng = make_rng(seed)
    lam = random_spectrum(dim, rng, (lo, hi))
    q = random_orthogonal(dim, rng)
    out = (q * lam) @ q.T
    return 0.5 * (out + out.T)


def random_psd_increment(dim: int, rng: np.random.Generator, scale: float = 1.0, rank: int | None = None) -> np.ndarray:
    """Random positive-semidefinite ``G G^T`` of the given rank (full by default)."""
    rank = dim if rank is None else rank
    g = rng.standard_normal((dim, rank))
    out = scale * (g @ g.T) / max(rank, 1)
    return 0.5 * (out + out.T)


def _check_invertible(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    lam, q = np.linalg.eigh(a)
    norm = max(abs(lam[0]), abs(lam[-1]))
    if lam[0] <= a.shape[0] * SINGULAR_TOL * norm:
        raise SingularMatrix(f"minimum eigenvalue {lam[0]:.3e} is not positive (norm {norm:.3e})")
    return lam, q


def power_matrix(a, exponent: float) -> np.ndarray:
    """``A^p`` for a positive-definite ``A`` and real ``p``."""
    a = as_symmetric(a)
    lam, q = _check_invertible(a)
    out = (q * lam**exponent) @ q.T
    return 0.5 * (out + out.T)


def sqrt_matrix(a) -> np.ndarray:
    a = as_symmetric(a)
    lam, q = _check_invertible(a)
    out = (q * np.sqrt(lam)) @ q.T
    return 0.5 * (out + out.T)


def inv_matrix(a) -> np.ndarray:
    a = as_symmetric(a)
    lam, q = _check_invertible(a)
    out = (q / lam) @ q.T
    return 0.5 * (out + out.T)


def to_exchange(a) -> dict:
    """Matrix exchange object ``{"dim": n, "entries": [row-major n*n numbers]}``."""
    arr = np.asarray(a, dtype=float)
    return {"dim": int(arr.shape[0]), "entries": [float(v) for v in arr.ravel()]}


def from_exchange(obj) -> np.ndarray:
    """Parse a matrix exchange object; the matrix must be symmetric."""
    if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
        raise MatrixFormatError("matrix object needs 'dim' and 'entries' fields")
    dim = obj["dim"]
    entries = obj["entries"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MatrixFormatError(f"'dim' must be a positive integer, got {dim!r}")
    if not isinstance(entries, Sequence) or isinstance(entries, (str, bytes)):
        raise MatrixFormatError("'entries' must be an array of numbers")
    if len(entries) != dim * dim:
        raise MatrixFormatError(f"expected {dim * dim} entries, got {len(entries)}")
    if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entries):
        raise MatrixFormatError("'entries' must contain only numbers")
    arr = np.array(entries, dtype=float).reshape(dim, dim)
    return as_symmetric(arr)
