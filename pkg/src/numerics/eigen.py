from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy import linalg
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, eigs

from src.app.core.config import settings
from src.app.core.exceptions import EigenSolveError
from src.app.core.logging import get_logger

logger = get_logger()


@dataclass(frozen=True)
class EigenPair:
    value: complex
    vector: np.ndarray


def _diagnostics(A: np.ndarray, **extra) -> dict:
    return {
        "shape": A.shape,
        "fro_norm": f"{np.linalg.norm(A):.3e}" if np.all(np.isfinite(A)) else "nan",
        "nonfinite": int(np.count_nonzero(~np.isfinite(A))),
        **extra,
    }


def _checked(A: np.ndarray, values: np.ndarray, vectors: np.ndarray, tol: float) -> List[EigenPair]:
    scale = max(np.linalg.norm(A), np.finfo(float).tiny)
    residuals = np.linalg.norm(A @ vectors - vectors * values[None, :], axis=0)
    worst = float(residuals.max()) if residuals.size else 0.0
    if worst > tol * scale:
        raise EigenSolveError("eigenpair residual above tolerance",
                              _diagnostics(A, max_residual=f"{worst:.3e}", tol=tol))
    return [EigenPair(complex(values[i]), vectors[:, i]) for i in range(values.size)]


def dense_eigensolve(A, target: Optional[complex] = None, tol: Optional[float] = None) -> List[EigenPair]:
    """
    All eigenpairs of a dense complex matrix, sorted by |lambda - target|
    when a target is given. Each pair satisfies ||Av - lv|| <= tol ||A||.
    """
    A = np.asarray(A, dtype=complex)
    tol = settings.EIGEN_RESIDUAL_TOL if tol is None else tol
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise EigenSolveError("matrix must be square", _diagnostics(A))
    if not np.all(np.isfinite(A)):
        raise EigenSolveError("matrix has non-finite entries", _diagnostics(A))

    try:
        values, vectors = linalg.eig(A)
    except linalg.LinAlgError as e:
        logger.error(f"Dense eigensolve failed: {e}")
        raise EigenSolveError(f"LAPACK eigensolver failed: {e}", _diagnostics(A))

    pairs = _checked(A, values, vectors, tol)
    if target is not None:
        pairs.sort(key=lambda pair: abs(pair.value - target))
    return pairs


def nearest_eigenpairs(A, target: complex = 1.0, count: int = 2, tol: Optional[float] = None) -> List[EigenPair]:
    """
    The `count` eigenpairs closest to `target`, by shift-invert Arnoldi for
    large matrices and by the dense solver otherwise.

    The Arnoldi shift sits EIGEN_SHIFT_OFFSET away from the target so that
    A - sigma I stays invertible when the target is itself an eigenvalue.
    """
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    if n <= max(settings.DENSE_EIG_LIMIT, count + 3):
        return dense_eigensolve(A, target=target, tol=tol)[:count]

    tol = settings.EIGEN_RESIDUAL_TOL if tol is None else tol
    sigma = target + settings.EIGEN_SHIFT_OFFSET
    try:
        values, vectors = eigs(A, k=count + 1, sigma=sigma, which="LM")
        pairs = _checked(A, values, vectors, tol)
    except (ArpackNoConvergence, ArpackError, EigenSolveError) as e:
        logger.warning(f"Shift-invert Arnoldi failed near {target} ({e}); using the dense solver")
        return dense_eigensolve(A, target=target, tol=tol)[:count]

    pairs.sort(key=lambda pair: abs(pair.value - target))
    return pairs[:count]
