"""Fourier and Taylor coefficients, partial sums, trigonometric interpolation.

Coefficients are the midpoint-rule values of

    alpha_k = (1/pi) int cos(k t) f(t) dt,   beta_k = (1/pi) int sin(k t) f(t) dt

on a :class:`~compact_hilbert.grid.PeriodicGrid`. They are computed with a
real FFT and a phase correction for the half-step offset of the nodes; the
result is the same finite sum, so trig polynomials of degree < n/2 come
back exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AliasingError, TruncationError
from .grid import PeriodicGrid, SampledFunction


def _frozen(a, dtype=float) -> np.ndarray:
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FourierCoefficients:
    """``alpha[k-1]``, ``beta[k-1]`` hold the k-th cosine and sine coefficients."""

    alpha: np.ndarray
    beta: np.ndarray
    alpha0: float = 0.0

    def __post_init__(self):
        alpha, beta = _frozen(self.alpha), _frozen(self.beta)
        if alpha.ndim != 1 or alpha.shape != beta.shape or alpha.size == 0:
            raise ValueError("alpha and beta must be 1-d arrays of equal, positive length")
        if not (np.all(np.isfinite(alpha)) and np.all(np.isfinite(beta))
                and np.isfinite(self.alpha0)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "alpha0", float(self.alpha0))

    @property
    def k_max(self) -> int:
        return self.alpha.size

    @classmethod
    def from_modes(cls, k_max: int, alpha: dict | None = None,
                   beta: dict | None = None, alpha0: float = 0.0):
        """Build from sparse ``{k: value}`` mappings."""
        a, b = np.zeros(k_max), np.zeros(k_max)
        for k, v in (alpha or {}).items():
            a[k - 1] = v
        for k, v in (beta or {}).items():
            b[k - 1] = v
        return cls(a, b, alpha0)

    def truncated(self, N: int) -> FourierCoefficients:
        _check_order(N, self.k_max)
        return FourierCoefficients(self.alpha[:N], self.beta[:N], self.alpha0)

    def __neg__(self):
        return FourierCoefficients(-self.alpha, -self.beta, -self.alpha0)


@dataclass(frozen=True, eq=False)
class TaylorCoefficients:
    """``c[k]`` for ``k = 0..k_max`` of the power series ``sum c_k z^k``."""

    c: np.ndarray

    def __post_init__(self):
        c = _frozen(self.c, complex)
        if c.ndim != 1 or c.size < 2:
            raise ValueError("need at least c_0 and c_1")
        object.__setattr__(self, "c", c)

    @property
    def k_max(self) -> int:
        return self.c.size - 1


@dataclass(frozen=True)
class InnerAnalyticPoint:
    rho: float
    theta: float
    u: float
    v: float

    @property
    def w(self) -> complex:
        return complex(self.u, self.v)


def max_order(grid: PeriodicGrid) -> int:
    """Largest k_max allowed without aliasing."""
    return grid.n // 2 - 1


def _check_order(N, k_max):
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise TruncationError(f"order must be a positive integer, got {N!r}")
    if N > k_max:
        raise TruncationError(f"order N={N} exceeds available k_max={k_max}")


def _raw_spectrum(s: SampledFunction) -> np.ndarray:
    """``(h/pi) * sum_j f_j exp(-i k t_j)`` for k = 0..n/2."""
    g = s.grid
    k = np.arange(g.n // 2 + 1)
    # t_j = -pi + h/2 + j h
    phase = np.exp(-1j * k * (-np.pi + 0.5 * g.step))
    return (g.step / np.pi) * phase * np.fft.rfft(s.values)


def compute_coefficients(s: SampledFunction, k_max: int | None = None) -> FourierCoefficients:
    n = s.grid.n
    limit = max_order(s.grid)
    if k_max is None:
        k_max = limit
    if not isinstance(k_max, (int, np.integer)) or k_max < 1:
        raise ValueError(f"k_max must be a positive integer, got {k_max!r}")
    if k_max > limit:
        raise AliasingError(
            f"k_max={k_max} exceeds the anti-aliasing bound n/2-1={limit} for n={n}"
        )
    raw = _raw_spectrum(s)
    # c_k = alpha_k - i beta_k
    return FourierCoefficients(raw[1:k_max + 1].real, -raw[1:k_max + 1].imag,
                               alpha0=raw[0].real)


def taylor_from_fourier(fc: FourierCoefficients) -> TaylorCoefficients:
    c = np.empty(fc.k_max + 1, dtype=complex)
    c[0] = fc.alpha0 / 2
    c[1:] = fc.alpha - 1j * fc.beta
    return TaylorCoefficients(c)


def eval_partial_sum_disk(tc: TaylorCoefficients, rho: float, theta: float,
                          N: int) -> InnerAnalyticPoint:
    """``S_N(z) = sum_{k=0}^N c_k z^k`` at ``z = rho exp(i theta)``."""
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    _check_order(N, tc.k_max)
    k = np.arange(N + 1)
    w = np.sum(tc.c[:N + 1] * rho ** k * np.exp(1j * k * theta))
    return InnerAnalyticPoint(float(rho), float(theta), float(w.real), float(w.imag))


def partial_sum_series(fc: FourierCoefficients, N: int, theta):
    """``sum_{k=1}^N alpha_k cos(k theta) + beta_k sin(k theta)``; vectorized in theta."""
    _check_order(N, fc.k_max)
    theta = np.asarray(theta, dtype=float)
    k = np.arange(1, N + 1)
    kt = np.multiply.outer(theta, k)
    out = np.cos(kt) @ fc.alpha[:N] + np.sin(kt) @ fc.beta[:N]
    return float(out) if out.ndim == 0 else out


def conjugate_coefficients(fc: FourierCoefficients) -> FourierCoefficients:
    """Coefficients of ``sum alpha_k sin(k t) - beta_k cos(k t)``."""
    return FourierCoefficients(-fc.beta, fc.alpha.copy(), 0.0)


def parseval_sum(fc: FourierCoefficients) -> float:
    """``(alpha0/2)^2 + (1/2) sum (alpha_k^2 + beta_k^2)``, the mean of f^2."""
    return (fc.alpha0 / 2) ** 2 + 0.5 * float(np.sum(fc.alpha ** 2 + fc.beta ** 2))


def trig_interpolate(s: SampledFunction, theta):
    """Evaluate the trigonometric interpolant of ``s`` at arbitrary angles.

    Uses all modes up to the Nyquist frequency, with the Nyquist sine term at
    half weight, so the interpolant reproduces the samples exactly.
    """
    raw = _raw_spectrum(s)
    n = s.grid.n
    theta = np.asarray(theta, dtype=float)
    k = np.arange(n // 2 + 1)
    weights = raw.copy()
    weights[0] *= 0.5
    weights[-1] *= 0.5
    out = np.real(np.exp(1j * np.multiply.outer(theta, k)) @ weights)
    return float(out) if out.ndim == 0 else out


def spectral_derivative(s: SampledFunction) -> np.ndarray:
    """Derivative of the trigonometric interpolant at the grid nodes."""
    g = s.grid
    n = g.n
    raw = _raw_spectrum(s)
    k = np.arange(n // 2 + 1)
    d = 1j * k * raw
    # Nyquist sine term has zero derivative at the midpoint nodes
    d[-1] = 0.0
    d *= np.exp(1j * k * (-np.pi + 0.5 * g.step))
    return (n / 2) * np.fft.irfft(d, n)
