"""Dense brute-force reference implementations.

Deliberately naive: row-pivoted Gaussian elimination with no structure
exploitation, O(n^3), trusted because there is nothing clever to get
wrong.  Used by the test suites and the CLI verify mode, never on the
library's fast paths.  Dense matrices are plain (n, n) float arrays;
n up to a few hundred is the intended envelope.
"""

from __future__ import annotations

import numpy as np

from .core import TriToeplitzSpec
from .errors import DimensionMismatch, SingularMatrix, ZeroVector

__all__ = [
    "dense_from_spec",
    "lu_solve",
    "lu_det",
    "dense_inverse",
    "eigen_check",
]


def dense_from_spec(spec: TriToeplitzSpec) -> np.ndarray:
    """Materialise the matrix: diagonal b, subdiagonal a, superdiagonal c."""
    n = spec.n
    m = np.zeros((n, n))
    idx = np.arange(n)
    m[idx, idx] = spec.b
    m[idx[1:], idx[:-1]] = spec.a
    m[idx[:-1], idx[1:]] = spec.c
    return m


def _as_square(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def _lu_factor(m: np.ndarray):
    """In-place LU with partial pivoting; returns (lu, swaps, parity)."""
    lu = np.array(m, dtype=float)
    n = lu.shape[0]
    swaps = np.arange(n)
    parity = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        swaps[k] = p
        if p != k:
            lu[[k, p], :] = lu[[p, k], :]
            parity = -parity
        pivot = lu[k, k]
        if pivot != 0.0 and k + 1 < n:
            lu[k + 1 :, k] /= pivot
            lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return lu, swaps, parity


def _pivot_tolerance(m: np.ndarray) -> float:
    return m.shape[0] * np.finfo(float).eps * max(1.0, float(np.max(np.abs(m))))


def _substitute(lu: np.ndarray, swaps: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = lu.shape[0]
    y = np.array(b, dtype=float)
    for k in range(n):
        if swaps[k] != k:
            y[[k, swaps[k]]] = y[[swaps[k], k]]
    for k in range(1, n):
        y[k] -= lu[k, :k] @ y[:k]
    for k in range(n - 1, -1, -1):
        y[k] = (y[k] - lu[k, k + 1 :] @ y[k + 1 :]) / lu[k, k]
    return y


def lu_solve(m, rhs) -> np.ndarray:
    """Solve m x = rhs by elimination with partial pivoting."""
    m = _as_square(m)
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape != (m.shape[0],):
        raise DimensionMismatch(
            f"rhs shape {rhs.shape} does not match matrix order {m.shape[0]}"
        )
    lu, swaps, _ = _lu_factor(m)
    if np.min(np.abs(np.diag(lu))) <= _pivot_tolerance(m):
        raise SingularMatrix("numerically zero pivot during elimination")
    return _substitute(lu, swaps, rhs)


def lu_det(m) -> float:
    """Determinant via pivoted elimination; 0.0 for singular input."""
    m = _as_square(m)
    lu, _, parity = _lu_factor(m)
    return float(parity * np.prod(np.diag(lu)))


def _logabsdet(m) -> tuple[float, float]:
    """(sign, log|det|); sign 0.0 with log -inf for singular input."""
    m = _as_square(m)
    lu, _, parity = _lu_factor(m)
    diag = np.diag(lu)
    if np.any(diag == 0.0):
        return 0.0, -np.inf
    sign = parity * np.prod(np.sign(diag))
    return float(sign), float(np.sum(np.log(np.abs(diag))))


def dense_inverse(m) -> np.ndarray:
    """Columnwise solve against the basis vectors."""
    m = _as_square(m)
    lu, swaps, _ = _lu_factor(m)
    if np.min(np.abs(np.diag(lu))) <= _pivot_tolerance(m):
        raise SingularMatrix("numerically zero pivot during elimination")
    return _substitute(lu, swaps, np.eye(m.shape[0]))


def eigen_check(m, value: float, vector) -> float:
    """Residual ||m v - value v||_inf / ||v||_inf."""
    m = _as_square(m)
    v = np.asarray(vector, dtype=float)
    if v.shape != (m.shape[0],):
        raise DimensionMismatch(
            f"vector shape {v.shape} does not match matrix order {m.shape[0]}"
        )
    scale = float(np.max(np.abs(v)))
    if scale == 0.0:
        raise ZeroVector("eigenvector candidate must be nonzero")
    return float(np.max(np.abs(m @ v - value * v))) / scale
