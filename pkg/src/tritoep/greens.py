"""Closed inverse of the tridiagonal Toeplitz matrix and fast solvers.

The inverse has semiseparable structure: with f_k = (-1)^(k-1) U_{k-1}(x)
and g_k = (-1)^(k-1) U_{n-k}(x), entry (i, j) of the inverse equals

    q^(i-j) * f_min(i,j) * g_max(i,j) / (s * U_n(x)).

Both sequences solve the same three-term recurrence, so their discrete
Wronskian f_k g_{k+1} - f_{k+1} g_k is constant and equals U_n(x); this is
validated when a kernel is built.  Everything is carried as sign plus
log-magnitude, which keeps entries computable for orders in the thousands
even when the Chebyshev values themselves would overflow.

``apply_inverse`` exploits the rank-one triangles with prefix/suffix scans
(O(n)); ``thomas_solve`` is the classical elimination baseline and the only
routine here that does not need a*c > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cheby import ScaledValue, _LOG_MAX, _log1mexp, _u_sequence_arrays
from .core import SymmetrisedForm, TriToeplitzSpec, symmetrise
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NearSingularPivot,
    NotInGappedRegime,
    SingularMatrix,
    TriToeplitzError,
)

__all__ = [
    "GreenKernel",
    "DecayEnvelope",
    "build_kernel",
    "inverse_entry",
    "inverse_dense",
    "apply_inverse",
    "thomas_solve",
    "decay_envelope",
    "decay_bound",
    "hyperbolic_inverse_entry",
]

_WRONSKIAN_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class GreenKernel:
    """Assembled inverse kernel of one matrix.

    ``f_signs/f_logs`` and ``g_signs/g_logs`` hold the two recurrence
    solutions for k = 0..n+1 in scaled form (sign arrays contain -1, 0, +1
    as floats).  ``wronskian`` equals U_n(x); ``invertible`` is a queried
    flag, entry and solve operations raise SingularMatrix when it is
    False.
    """

    n: int
    s: float
    q: float
    x: float
    f_signs: np.ndarray
    f_logs: np.ndarray
    g_signs: np.ndarray
    g_logs: np.ndarray
    wronskian: ScaledValue
    invertible: bool
    wronskian_residual: float
    singular_tol: float

    def f_at(self, k: int) -> ScaledValue:
        return ScaledValue(int(self.f_signs[k]), float(self.f_logs[k]))

    def g_at(self, k: int) -> ScaledValue:
        return ScaledValue(int(self.g_signs[k]), float(self.g_logs[k]))


@dataclass(frozen=True)
class DecayEnvelope:
    """Geometric envelope of the symmetrised inverse for x > 1.

    Entry (i, j) of the symmetrised inverse is bounded by
    prefactor * eta^(-|i-j|).
    """

    eta: float
    prefactor: float


def build_kernel(spec: TriToeplitzSpec, singular_tol: float = 1e-12) -> GreenKernel:
    """Assemble the f/g sequences, Wronskian and invertibility flag.

    The matrix counts as invertible when |U_n(x)| exceeds
    singular_tol * max(1, |U_{n-1}(x)|); construction never raises
    SingularMatrix, only the entry/apply operations do.
    """
    if not singular_tol > 0:
        raise TriToeplitzError(f"singular_tol must be positive, got {singular_tol!r}")
    form = symmetrise(spec)
    n = spec.n
    usigns, ulogs = _u_sequence_arrays(n, form.x)

    # f_k = (-1)^(k-1) U_{k-1}, g_k = (-1)^(k-1) U_{n-k}, k = 0..n+1,
    # with U_{-1} := 0 covering both boundary entries
    alt = np.where(np.arange(n + 2) % 2 == 1, 1.0, -1.0)
    f_signs = np.concatenate(([0.0], alt[1:] * usigns[np.arange(0, n + 1)]))
    f_logs = np.concatenate(([-np.inf], ulogs[np.arange(0, n + 1)]))
    g_signs = np.concatenate((alt[: n + 1] * usigns[np.arange(n, -1, -1)], [0.0]))
    g_logs = np.concatenate((ulogs[np.arange(n, -1, -1)], [-np.inf]))

    wronskian = ScaledValue(int(usigns[n]), float(ulogs[n]))
    log_threshold = math.log(singular_tol) + max(0.0, float(ulogs[n - 1]))
    invertible = wronskian.sign != 0 and wronskian.log_mag > log_threshold

    residual = math.nan
    if invertible:
        t1 = (
            f_signs[: n + 1]
            * g_signs[1:]
            * wronskian.sign
            * np.exp(f_logs[: n + 1] + g_logs[1:] - wronskian.log_mag)
        )
        t2 = (
            f_signs[1:]
            * g_signs[: n + 1]
            * wronskian.sign
            * np.exp(f_logs[1:] + g_logs[: n + 1] - wronskian.log_mag)
        )
        residual = float(np.max(np.abs(t1 - t2 - 1.0)))
        if residual > _WRONSKIAN_TOL:
            raise TriToeplitzError(
                f"kernel self-check failed: Wronskian residual {residual:.3e}"
            )
    return GreenKernel(
        n=n,
        s=form.s,
        q=form.q,
        x=form.x,
        f_signs=f_signs,
        f_logs=f_logs,
        g_signs=g_signs,
        g_logs=g_logs,
        wronskian=wronskian,
        invertible=invertible,
        wronskian_residual=residual,
        singular_tol=singular_tol,
    )


def _check_entry_indices(kernel_n: int, i: int, j: int):
    for idx in (i, j):
        if not isinstance(idx, (int, np.integer)) or isinstance(idx, bool):
            raise IndexOutOfRange(f"indices must be integers, got {idx!r}")
        if not 1 <= idx <= kernel_n:
            raise IndexOutOfRange(f"index {idx} outside 1..{kernel_n}")
    return int(i), int(j)


def _require_invertible(kernel: GreenKernel) -> None:
    if not kernel.invertible:
        raise SingularMatrix(
            f"|U_n(x)| = exp({kernel.wronskian.log_mag!r}) is below the "
            f"singularity tolerance {kernel.singular_tol!r}"
        )


def inverse_entry(kernel: GreenKernel, i: int, j: int) -> float:
    """Entry (i, j) of the inverse, 1-based.

    For i <= j this is (-1)^(i+j) q^(i-j) U_{i-1} U_{n-j} / (s U_n); for
    i > j the Chebyshev indices swap while the q power keeps the signed
    exponent i-j.  Raises OverflowError when the plain value leaves the
    float range.
    """
    _require_invertible(kernel)
    i, j = _check_entry_indices(kernel.n, i, j)
    lo, hi = (i, j) if i <= j else (j, i)
    sign_q = 1.0 if kernel.q > 0 else -1.0
    sign = (
        kernel.f_signs[lo]
        * kernel.g_signs[hi]
        * kernel.wronskian.sign
        * sign_q ** (i - j)
    )
    if sign == 0.0:
        return 0.0
    log_mag = (
        kernel.f_logs[lo]
        + kernel.g_logs[hi]
        - kernel.wronskian.log_mag
        - math.log(kernel.s)
        + (i - j) * math.log(abs(kernel.q))
    )
    if log_mag > _LOG_MAX:
        raise OverflowError(
            f"inverse entry ({i},{j}) has log-magnitude {log_mag:.6g}, "
            "beyond the float range"
        )
    return float(sign * math.exp(log_mag))


def inverse_dense(kernel: GreenKernel) -> np.ndarray:
    """Materialise the full inverse (O(n^2)); agrees with inverse_entry."""
    _require_invertible(kernel)
    n = kernel.n
    idx = np.arange(1, n + 1)
    lo = np.minimum.outer(idx, idx)
    hi = np.maximum.outer(idx, idx)
    diff = np.subtract.outer(idx, idx)
    sign_q = 1.0 if kernel.q > 0 else -1.0
    signs = (
        kernel.f_signs[lo]
        * kernel.g_signs[hi]
        * kernel.wronskian.sign
        * np.power(sign_q, diff)
    )
    logs = (
        kernel.f_logs[lo]
        + kernel.g_logs[hi]
        - kernel.wronskian.log_mag
        - math.log(kernel.s)
        + diff * math.log(abs(kernel.q))
    )
    if np.any((signs != 0.0) & (logs > _LOG_MAX)):
        raise OverflowError("some inverse entries exceed the float range")
    with np.errstate(under="ignore"):
        return signs * np.exp(np.where(signs == 0.0, -np.inf, logs))


def _scan_scaled(term_signs, term_logs, weights):
    """Running sums of sign*weight*exp(log) with on-the-fly rescaling.

    Returns arrays (acc, scale) where the partial sum through index k is
    acc[k] * exp(scale[k]).  Accumulators are renormalised by the running
    dominant magnitude, so the scan never overflows.
    """
    m = len(weights)
    accs = np.empty(m)
    scales = np.empty(m)
    acc, scale = 0.0, -math.inf
    for k in range(m):
        w = weights[k]
        sgn = term_signs[k]
        if w != 0.0 and sgn != 0.0:
            t = term_logs[k]
            top = max(scale, t)
            acc = acc * math.exp(scale - top) + sgn * w * math.exp(t - top)
            scale = top
        accs[k] = acc
        scales[k] = scale
    return accs, scales


def apply_inverse(kernel: GreenKernel, rhs) -> np.ndarray:
    """Solve A x = rhs through the semiseparable kernel in O(n).

    Uses prefix sums of f-terms and suffix sums of g-terms with running
    rescaling; deterministic for fixed input.
    """
    _require_invertible(kernel)
    n = kernel.n
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape != (n,):
        raise DimensionMismatch(f"expected rhs of length {n}, got shape {rhs.shape}")

    log_q = math.log(abs(kernel.q))
    sign_q = 1.0 if kernel.q > 0 else -1.0
    k = np.arange(n + 2)
    q_pow_signs = np.power(sign_q, k)

    # prefix over j <= i of f_j q^(-j) rhs_j   (j = 1..n)
    p_acc, p_scale = _scan_scaled(
        kernel.f_signs[1 : n + 1] * q_pow_signs[1 : n + 1],
        kernel.f_logs[1 : n + 1] - k[1 : n + 1] * log_q,
        rhs,
    )
    # suffix over j > i of g_j q^(-j) rhs_j
    q_acc_rev, q_scale_rev = _scan_scaled(
        (kernel.g_signs[1 : n + 1] * q_pow_signs[1 : n + 1])[::-1],
        (kernel.g_logs[1 : n + 1] - k[1 : n + 1] * log_q)[::-1],
        rhs[::-1],
    )
    # q_tail[i] = sum over j >= i+2 ... shift so index i (0-based row) sums j > i+1
    q_acc = np.zeros(n)
    q_scale = np.full(n, -math.inf)
    if n > 1:
        q_acc[:-1] = q_acc_rev[::-1][1:]
        q_scale[:-1] = q_scale_rev[::-1][1:]

    i = np.arange(1, n + 1)
    base = i * log_q - math.log(kernel.s) - kernel.wronskian.log_mag
    sign_base = q_pow_signs[1 : n + 1] * kernel.wronskian.sign
    with np.errstate(under="ignore", over="ignore", invalid="ignore"):
        term_g = (
            kernel.g_signs[1 : n + 1]
            * sign_base
            * p_acc
            * np.exp(kernel.g_logs[1 : n + 1] + base + p_scale)
        )
        term_f = (
            kernel.f_signs[1 : n + 1]
            * sign_base
            * q_acc
            * np.exp(kernel.f_logs[1 : n + 1] + base + q_scale)
        )
    return np.where(np.isnan(term_g), 0.0, term_g) + np.where(
        np.isnan(term_f), 0.0, term_f
    )


def thomas_solve(spec: TriToeplitzSpec, rhs, pivot_tol: float = 1e-300) -> np.ndarray:
    """Classical unpivoted tridiagonal elimination; O(n).

    Works for any spec (symmetrisable or not) but raises
    NearSingularPivot as soon as a running pivot magnitude drops below
    pivot_tol times the row scale; there is no pivoting fallback.
    """
    n = spec.n
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape != (n,):
        raise DimensionMismatch(f"expected rhs of length {n}, got shape {rhs.shape}")
    threshold = pivot_tol * spec.row_scale()
    a, b, c = spec.a, spec.b, spec.c

    w = np.empty(n)
    z = np.empty(n)
    piv = b
    if abs(piv) <= threshold:
        raise NearSingularPivot(f"pivot {piv!r} at row 1 below tolerance")
    w[0] = c / piv
    z[0] = rhs[0] / piv
    for k in range(1, n):
        piv = b - a * w[k - 1]
        if abs(piv) <= threshold:
            raise NearSingularPivot(f"pivot {piv!r} at row {k + 1} below tolerance")
        w[k] = c / piv
        z[k] = (rhs[k] - a * z[k - 1]) / piv

    x = np.empty(n)
    x[n - 1] = z[n - 1]
    for k in range(n - 2, -1, -1):
        x[k] = z[k] - w[k] * x[k + 1]
    return x


def _logsinh(t: float) -> float:
    """log(sinh(t)) for t > 0, stable for both tiny and huge t."""
    return t + _log1mexp(2.0 * t) - math.log(2.0)


def decay_envelope(spec: TriToeplitzSpec) -> DecayEnvelope:
    """Decay base eta = x + sqrt(x^2 - 1) and the envelope prefactor 2/(s*(eta - 1/eta))."""
    form = symmetrise(spec)
    if not form.x > 1.0:
        raise NotInGappedRegime(f"x = b/(2s) = {form.x!r} is not > 1")
    eta = form.x + math.sqrt((form.x - 1.0) * (form.x + 1.0))
    gamma = math.acosh(form.x)
    prefactor = math.exp(math.log(2.0 / form.s) - math.log(2.0) - _logsinh(gamma))
    return DecayEnvelope(eta=eta, prefactor=prefactor)


def decay_bound(spec: TriToeplitzSpec, i: int, j: int) -> float:
    """Envelope bound (2/s) (eta - 1/eta)^-1 |q|^(i-j) eta^-|i-j| on |A^-1_(i,j)|."""
    form = symmetrise(spec)
    if not form.x > 1.0:
        raise NotInGappedRegime(f"x = b/(2s) = {form.x!r} is not > 1")
    i, j = _check_entry_indices(spec.n, i, j)
    gamma = math.acosh(form.x)
    log_bound = (
        math.log(2.0 / form.s)
        - math.log(2.0)
        - _logsinh(gamma)
        + (i - j) * math.log(abs(form.q))
        - abs(i - j) * gamma
    )
    if log_bound > _LOG_MAX:
        raise OverflowError(f"decay bound ({i},{j}) exceeds the float range")
    return math.exp(log_bound)


def hyperbolic_inverse_entry(form: SymmetrisedForm, i: int, j: int) -> float:
    """Symmetric-case inverse entry through ratios of hyperbolic sines.

    For x > 1 and gamma = arccosh(x), entry (i, j) with i <= j equals
    (-1)^(i+j) sinh(i g) sinh((n+1-j) g) / (s sinh((n+1) g) sinh(g));
    indices mirror for i > j.  Computed entirely in log space.
    """
    if not form.x > 1.0:
        raise NotInGappedRegime(f"x = {form.x!r} is not > 1")
    i, j = _check_entry_indices(form.n, i, j)
    lo, hi = (i, j) if i <= j else (j, i)
    gamma = math.acosh(form.x)
    log_mag = (
        _logsinh(lo * gamma)
        + _logsinh((form.n + 1 - hi) * gamma)
        - _logsinh((form.n + 1) * gamma)
        - _logsinh(gamma)
        - math.log(form.s)
    )
    sign = 1.0 if (i + j) % 2 == 0 else -1.0
    if log_mag > _LOG_MAX:
        raise OverflowError(f"entry ({i},{j}) exceeds the float range")
    return sign * math.exp(log_mag)
