"""Dirichlet, conjugate-Dirichlet and remainder operators.

With ``Delta = t - theta`` and ``N1 = N + 1/2``:

    S_N(theta) = (1/2pi)    int sin(N1 Delta) / sin(Delta/2) f(t) dt
    R_N(theta) = (1/2pi) PV int cos(N1 Delta) / sin(Delta/2) g(t) dt

where ``g = H_c[f]``. The remainder operator is the composition
``D_r[N, f] = D_c[N, H_c[f]]``.

The remainder kernel ``K_Dr`` obtained by composing the two kernels under
the integral sign is available in its double-integral and reduced forms.
Evaluated pointwise (theta != theta_1) it equals minus the Dirichlet kernel:
the identity part of ``D_r = I - D_s`` is concentrated on the diagonal and
is not seen by a pointwise kernel. :func:`remainder_via_kernel` adds it back.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import PreconditionError, QuadratureError, SingularityError, TruncationError
from .fourier import spectral_derivative, trig_interpolate
from .grid import SampledFunction, has_zero_mean
from .hilbert import PRECONDITION_RTOL, SUBTRACTION, PvStrategy, hilbert_function

LIMIT_TOL = 1e-8
COINCIDE_TOL = 1e-9
SINGULAR_TOL = 1e-14
DEFAULT_QUADRATURE_N = 8192


def dirichlet_kernel(N: int, delta):
    """``(1/2pi) sin(N1 delta) / sin(delta/2)``; even in delta."""
    # 2pi-periodic with limit (2N+1)/2pi at every multiple of 2pi, so no wrapping
    delta = np.asarray(delta, dtype=float)
    s = np.sin(delta / 2)
    small = np.abs(s) < LIMIT_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.sin((N + 0.5) * delta) / s
    if np.any(small):
        out = np.where(small, 2 * N + 1.0, out)
    out /= 2 * np.pi
    return float(out) if out.ndim == 0 else out


def conjugate_dirichlet_kernel(N: int, delta):
    """``(1/2pi) cos(N1 (t - theta)) / sin((t - theta)/2)`` with ``delta = theta - t``."""
    delta = np.asarray(delta, dtype=float)
    s = np.sin(-delta / 2)
    if np.any(np.abs(s) < SINGULAR_TOL):
        raise SingularityError("conjugate Dirichlet kernel is singular at delta = 0 (mod 2pi)")
    out = np.cos((N + 0.5) * delta) / s / (2 * np.pi)
    return float(out) if out.ndim == 0 else out


def _check_N(N):
    if not isinstance(N, (int, np.integer)) or isinstance(N, bool) or N < 1:
        raise TruncationError(f"N must be a positive integer, got {N!r}")


def _thetas(theta):
    theta = np.asarray(theta, dtype=float)
    return theta, np.atleast_1d(theta)


def _scalar_or_array(shape_src, out):
    return float(out[0]) if shape_src.ndim == 0 else out.reshape(shape_src.shape)


def partial_sum_dirichlet(s: SampledFunction, N: int, theta):
    """Midpoint rule for the Dirichlet integral; vectorized in theta."""
    _check_N(N)
    src, th = _thetas(theta)
    g = s.grid
    a = N + 0.5
    # numerator sin(a (theta - t)) by angle addition; only the denominator needs a matrix sin
    num = (np.multiply.outer(np.sin(a * th), np.cos(a * g.nodes))
           - np.multiply.outer(np.cos(a * th), np.sin(a * g.nodes)))
    den = np.sin(np.subtract.outer(th, g.nodes) / 2)
    small = np.abs(den) < LIMIT_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        K = num / den
    if np.any(small):
        K[small] = 2 * N + 1.0
    out = g.step / (2 * np.pi) * (K @ s.values)
    return _scalar_or_array(src, out)


def _conjugate_dirichlet_sum(g: SampledFunction, N: int, th: np.ndarray,
                             deriv: np.ndarray | None = None) -> np.ndarray:
    """``D_c[N, g]`` at each angle in ``th`` by singularity subtraction.

    Subtracts ``g(theta) cot(Delta/2)``, whose PV integral over the circle is
    zero. The remaining integrand is smooth and 2pi-periodic; at a node it
    takes the limit value ``2 g'(theta)``.
    """
    grid = g.grid
    h = grid.step
    half = np.subtract.outer(grid.nodes, th).T / 2  # (m, n): Delta/2
    centre = trig_interpolate(g, th)
    hit = np.abs(np.sin(half)) < COINCIDE_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        integrand = (np.cos((2 * N + 1) * half) * g.values
                     - centre[:, None] * np.cos(half)) / np.sin(half)
    if np.any(hit):
        if deriv is None:
            deriv = spectral_derivative(g)
        rows, cols = np.nonzero(hit)
        integrand[rows, cols] = 2.0 * deriv[cols]
    return h / (2 * np.pi) * integrand.sum(axis=1)


def _require_zero_average(s: SampledFunction, name: str):
    if not (s.zero_average or has_zero_mean(s.values, PRECONDITION_RTOL)):
        raise PreconditionError(f"{name} must be zero-average (grid mean {s.mean:.3e})")


def remainder_via_conjugate(g: SampledFunction, N: int, theta):
    """``R_N`` of f from samples of its conjugate ``g = H_c[f]``."""
    _check_N(N)
    _require_zero_average(g, "conjugate function g")
    src, th = _thetas(theta)
    return _scalar_or_array(src, _conjugate_dirichlet_sum(g, N, th))


def remainder_operator(f: SampledFunction, N: int, theta,
                       strategy: PvStrategy = SUBTRACTION, g: SampledFunction | None = None):
    """``D_r[N, f](theta) = D_c[N, H_c[f]](theta)``.

    ``g`` may be passed to reuse an already computed transform.
    """
    _check_N(N)
    _require_zero_average(f, "f")
    if g is None:
        g = hilbert_function(f, strategy)
    return remainder_via_conjugate(g, N, theta)


def remainder_function(f: SampledFunction, N: int,
                       strategy: PvStrategy = SUBTRACTION) -> SampledFunction:
    """``D_r[N, f]`` sampled on the grid of ``f``."""
    g = hilbert_function(f, strategy)
    vals = _conjugate_dirichlet_sum(g, N, f.grid.nodes)
    return SampledFunction(f.grid, vals - vals.mean(), zero_average=True)


# -- remainder kernel --------------------------------------------------------

def _midpoints(q: int, start: float) -> np.ndarray:
    if q < 4 or q % 2:
        raise QuadratureError(f"quadrature_n must be even and >= 4, got {q}")
    return start + (np.arange(q) + 0.5) * (2 * np.pi / q)


def _node_distance(points: np.ndarray, start: float, h: float) -> float:
    """Smallest distance from ``points`` to the grid ``start + (j + 1/2) h``."""
    u = np.mod((points - start) / h - 0.5, 1.0)
    return float(np.min(np.minimum(u, 1 - u))) * h


def _double_grid(theta, theta1, q, method):
    """Quadrature nodes for the double form with theta at a cell boundary.

    For ``method="offset"`` theta_1 must also land on a cell boundary;
    otherwise the grid is shifted by a quarter step if theta_1 is too close
    to a node.
    """
    h = 2 * np.pi / q
    pts = np.array([theta, theta1])
    if method == "offset":
        if _node_distance(np.array([theta1]), theta, h) < 0.5 * h - 1e-9 * h:
            raise QuadratureError(
                "offset-grid PV needs theta - theta1 to be a multiple of 2pi/quadrature_n"
            )
        return _midpoints(q, theta)
    best = None
    for shift in (0.0, 0.25, -0.25, 0.125, -0.125):
        start = theta + shift * h
        d = _node_distance(pts, start, h)
        if best is None or d > best[0]:
            best = (d, start)
        if d >= h / 8:
            break
    if best[0] < 1e-12:
        raise QuadratureError("could not place quadrature nodes away from both singular points")
    return _midpoints(q, best[1])


def kernel_dr_double(N: int, theta: float, theta1: float,
                     quadrature_n: int = DEFAULT_QUADRATURE_N,
                     method: str = "subtraction") -> float:
    """Remainder kernel as a PV integral over an intermediate angle.

        (1/4pi^2) PV int cos(N1 (t - theta)) cos((t - theta1)/2)
                         / [sin((t - theta)/2) sin((t - theta1)/2)] dt

    ``method="subtraction"`` removes both simple poles with cotangent terms
    (each with zero PV integral) and integrates the smooth remainder;
    ``method="offset"`` relies on symmetric cancellation with both poles at
    cell boundaries.
    """
    _check_N(N)
    d = theta - theta1
    if abs(np.sin(d / 2)) < SINGULAR_TOL:
        raise SingularityError("kernel_dr_double needs theta != theta1 (mod 2pi)")
    t = _double_grid(theta, theta1, quadrature_n, method)
    a, b = (t - theta) / 2, (t - theta1) / 2
    F = np.cos((2 * N + 1) * a) * np.cos(b) / (np.sin(a) * np.sin(b))
    if method == "subtraction":
        ra = 1.0 / np.tan(d / 2)
        rb = np.cos((N + 0.5) * d) / np.sin(-d / 2)
        F = F - ra / np.tan(a) - rb / np.tan(b)
    elif method != "offset":
        raise ValueError(f"unknown method {method!r}")
    return float(np.sum(F)) * (2 * np.pi / quadrature_n) / (4 * np.pi ** 2)


def _reduced_numerator(N, t, gamma):
    return np.cos(N * t) * np.cos((N + 1) * gamma) + np.cos((N + 1) * t) * np.cos(N * gamma)


def kernel_dr_reduced(N: int, delta: float,
                      quadrature_n: int = DEFAULT_QUADRATURE_N,
                      method: str = "subtraction") -> float:
    """Two-term reduced form with ``gamma = delta/2``.

        (1/4pi^2) PV int [cos(N t) cos((N+1) gamma) + cos((N+1) t) cos(N gamma)]
                         / [cos(gamma) - cos(t)] dt

    singular at ``t = +-gamma``. The default method subtracts the numerator's
    value at ``t = gamma``; ``PV int dt / (cos gamma - cos t) = 0``, so the
    result is unchanged and the integrand becomes smooth. ``method="offset"``
    uses the bare symmetric sum, which requires ``+-gamma`` at cell
    boundaries of the quadrature grid.
    """
    _check_N(N)
    if abs(np.sin(delta / 2)) < SINGULAR_TOL:
        raise SingularityError("kernel_dr_reduced needs delta != 0 (mod 2pi)")
    gamma = delta / 2
    t = _midpoints(quadrature_n, -np.pi)
    h = 2 * np.pi / quadrature_n
    dist = _node_distance(np.array([gamma, -gamma]), -np.pi, h)
    denom = np.cos(gamma) - np.cos(t)
    if method == "subtraction":
        if dist < 1e-12:
            raise QuadratureError("a quadrature node coincides with a singular point")
        num = _reduced_numerator(N, t, gamma) - 2 * np.cos(N * gamma) * np.cos((N + 1) * gamma)
    elif method == "offset":
        if dist < 0.5 * h - 1e-9 * h:
            raise QuadratureError(
                "offset-grid PV needs delta/2 to be a multiple of 2pi/quadrature_n"
            )
        num = _reduced_numerator(N, t, gamma)
    else:
        raise ValueError(f"unknown method {method!r}")
    return float(np.sum(num / denom)) * h / (4 * np.pi ** 2)


def kernel_dr_dropped_terms(N: int, delta: float,
                            quadrature_n: int = DEFAULT_QUADRATURE_N) -> float:
    """PV integral of the two odd numerator terms discarded by the reduced form.

    They are odd in the integration variable over an even denominator, so
    the symmetric midpoint sum cancels them pairwise.
    """
    gamma = delta / 2
    t = _midpoints(quadrature_n, -np.pi)
    n1 = N + 0.5
    odd = (-np.cos(n1 * t) * np.cos(n1 * gamma) * np.sin(t / 2) * np.sin(gamma / 2)
           + np.sin(n1 * t) * np.sin(n1 * gamma) * np.cos(t / 2) * np.cos(gamma / 2))
    q = np.sin((t - gamma) / 2) * np.sin((t + gamma) / 2)
    if np.min(np.abs(q)) < 1e-12:
        raise QuadratureError("a quadrature node coincides with a singular point")
    return float(np.sum(odd / q)) * (2 * np.pi / quadrature_n) / (4 * np.pi ** 2)


def kernel_dr_action(f: SampledFunction, N: int, theta: float,
                     quadrature_n: int = 2048) -> float:
    """``int K_Dr(N, theta - t) f(t) dt`` with the pointwise (reduced) kernel.

    Away from the diagonal the kernel is smooth, so no PV is needed in the
    outer integral. The result is ``-S_N(theta)``, not ``R_N(theta)``.
    """
    _require_zero_average(f, "f")
    g = f.grid
    hit = np.abs(np.sin((theta - g.nodes) / 2)) < COINCIDE_TOL
    if np.any(hit):
        raise QuadratureError("theta coincides with a node; evaluate off the grid")
    K = np.array([kernel_dr_reduced(N, theta - t, quadrature_n) for t in g.nodes])
    return g.step * float(K @ f.values)


def remainder_via_kernel(f: SampledFunction, N: int, theta: float,
                         quadrature_n: int = 2048) -> float:
    """``f(theta)`` (the diagonal identity term) plus the pointwise kernel action."""
    return trig_interpolate(f, theta) + kernel_dr_action(f, N, theta, quadrature_n)


# -- convergence diagnostics -------------------------------------------------

@dataclass(frozen=True)
class ConvergenceReport:
    thetas: list
    Ns: list
    remainders: np.ndarray
    sup_per_N: list = field(default=None)
    verdict_threshold: float = 1e-3

    def __post_init__(self):
        r = np.array(self.remainders, dtype=float)
        if r.shape != (len(self.Ns), len(self.thetas)):
            raise ValueError("remainder matrix must be |Ns| x |thetas|")
        if not np.all(np.isfinite(r)) or np.any(r < 0):
            raise ValueError("remainders must be finite and non-negative")
        r.setflags(write=False)
        object.__setattr__(self, "remainders", r)
        object.__setattr__(self, "sup_per_N", [float(x) for x in r.max(axis=1)])

    @property
    def decreasing(self) -> bool:
        """sup_per_N never increases, ignoring moves below the threshold."""
        s, tol = self.sup_per_N, self.verdict_threshold
        return all(b <= max(a, tol) for a, b in zip(s, s[1:]))

    @property
    def below_threshold(self) -> bool:
        return self.sup_per_N[-1] <= self.verdict_threshold

    @property
    def verdict(self) -> str:
        """Finite-N diagnostic only; a sweep cannot decide the limit."""
        if self.below_threshold and self.decreasing:
            return "below-threshold"
        return "decreasing" if self.decreasing else "not-decreasing"


def convergence_sweep(f: SampledFunction, Ns: Sequence[int], thetas: Sequence[float],
                      strategy: PvStrategy = SUBTRACTION,
                      verdict_threshold: float = 1e-3) -> ConvergenceReport:
    Ns = [int(N) for N in Ns]
    if not Ns or any(b <= a for a, b in zip(Ns, Ns[1:])):
        raise ValueError("Ns must be non-empty and strictly increasing")
    for N in Ns:
        _check_N(N)
    _require_zero_average(f, "f")
    thetas = [float(t) for t in thetas]
    g = hilbert_function(f, strategy)
    th = np.array(thetas)
    rows = [np.abs(_conjugate_dirichlet_sum(g, N, th)) for N in Ns]
    return ConvergenceReport(thetas, Ns, np.array(rows), verdict_threshold=verdict_threshold)
