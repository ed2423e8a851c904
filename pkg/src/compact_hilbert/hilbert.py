"""The compact Hilbert transform on the circle.

For a zero-average f,

    H_c[f](theta) = -(1/2pi) PV int cot((t - theta)/2) f(t) dt,

which sends cos(k t) to sin(k t) and sin(k t) to -cos(k t). Two quadrature
realizations of the principal value are provided:

``subtraction``
    Uses PV int cot((t - theta)/2) dt = 0 to rewrite the transform as the
    proper integral of cot((t - theta)/2) (f(t) - f(theta)). The integrand
    is smooth and periodic, so the midpoint rule is spectrally accurate. When
    theta is a node, that node contributes the removable limit 2 f'(theta),
    with f' taken from the trigonometric interpolant.

``offset-grid``
    Places the singularity exactly halfway between two quadrature nodes so
    the symmetric Riemann sum realizes the principal value by cancellation.
    At a cell boundary this is the full grid; at a node it is the sub-grid
    of nodes an odd number of steps away (step 2h).

At angles that are neither nodes nor cell boundaries the offset-grid
strategy falls back to subtraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import PreconditionError, SingularityError
from .fourier import (
    FourierCoefficients,
    conjugate_coefficients,
    spectral_derivative,
    trig_interpolate,
)
from .grid import SampledFunction, has_zero_mean, project_zero_average, wrap_angle

SINGULAR_TOL = 1e-14
# zero-average tolerance for the transform's precondition; looser than the
# flag tolerance so raw samples of zero-mean functions pass
PRECONDITION_RTOL = 1e-10


@dataclass(frozen=True)
class PvStrategy:
    tag: Literal["subtraction", "offset-grid"] = "subtraction"
    epsilon: float = 1e-9

    def __post_init__(self):
        if self.tag not in ("subtraction", "offset-grid"):
            raise ValueError(f"unknown PV strategy {self.tag!r}")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")


SUBTRACTION = PvStrategy("subtraction")
OFFSET_GRID = PvStrategy("offset-grid")


def kernel_hc(delta):
    """``(1/2pi) cot(delta/2)`` with ``delta = theta - theta_1``."""
    delta = np.asarray(delta, dtype=float)
    s = np.sin(delta / 2)
    if np.any(np.abs(s) < SINGULAR_TOL):
        raise SingularityError("kernel_hc is singular at delta = 0 (mod 2pi)")
    out = np.cos(delta / 2) / s / (2 * np.pi)
    return float(out) if out.ndim == 0 else out


def _require_zero_average(s: SampledFunction):
    if not (s.zero_average or has_zero_mean(s.values, PRECONDITION_RTOL)):
        raise PreconditionError(
            f"compact Hilbert transform needs a zero-average input (grid mean {s.mean:.3e})"
        )


def _check_strategy_epsilon(strategy: PvStrategy, step: float):
    if strategy.tag == "offset-grid" and not strategy.epsilon < step / 2:
        raise ValueError(f"epsilon={strategy.epsilon} must be below half the grid step")


def _pv_sum(values, nodes, theta, step, center_value):
    """``-(h/2pi) sum_j cot((t_j - theta)/2) (f_j - center_value)``."""
    return -step / (2 * np.pi) * float(
        np.sum((values - center_value) / np.tan((nodes - theta) / 2))
    )


def _at_node(s: SampledFunction, i: int, strategy: PvStrategy, deriv=None) -> float:
    g = s.grid
    n, h = g.n, g.step
    m = (np.arange(n) - i) % n
    if strategy.tag == "offset-grid":
        sel = m % 2 == 1
        return _pv_sum(s.values[sel], g.nodes[sel], g.nodes[i], 2 * h, 0.0)
    sel = m != 0
    if deriv is None:
        deriv = spectral_derivative(s)
    total = _pv_sum(s.values[sel], g.nodes[sel], g.nodes[i], h, s.values[i])
    return total - h / (2 * np.pi) * 2.0 * deriv[i]


def pv_transform(s: SampledFunction, theta: float,
                 strategy: PvStrategy = SUBTRACTION) -> float:
    """Quadrature of the transform integral without the zero-average check.

    On constants this returns (numerically) zero, the transform's value on
    the k=0 basis element.
    """
    g = s.grid
    _check_strategy_epsilon(strategy, g.step)
    kind, i = g.locate(theta, tol=min(strategy.epsilon / g.step, 1e-6))
    if kind == "node":
        return _at_node(s, i, strategy)
    theta = float(wrap_angle(theta))
    if kind == "offset":
        # nodes are symmetric about theta, so the centering term sums to zero
        center = 0.0 if strategy.tag == "offset-grid" else trig_interpolate(s, theta)
        return _pv_sum(s.values, g.nodes, theta, g.step, center)
    return _pv_sum(s.values, g.nodes, theta, g.step, trig_interpolate(s, theta))


def hilbert_pv(s: SampledFunction, theta: float,
               strategy: PvStrategy = SUBTRACTION) -> float:
    """``H_c[f](theta)`` from samples of a zero-average ``f``."""
    _require_zero_average(s)
    return pv_transform(s, theta, strategy)


def inverse_hilbert_pv(s: SampledFunction, theta: float,
                       strategy: PvStrategy = SUBTRACTION) -> float:
    """``H_c^{-1} = -H_c``."""
    return -hilbert_pv(s, theta, strategy)


def hilbert_spectral(fc: FourierCoefficients) -> FourierCoefficients:
    return conjugate_coefficients(fc)


def hilbert_function(s: SampledFunction,
                     strategy: PvStrategy = SUBTRACTION) -> SampledFunction:
    """Apply the transform at every node; the result is flagged zero-average."""
    _require_zero_average(s)
    _check_strategy_epsilon(strategy, s.grid.step)
    deriv = spectral_derivative(s) if strategy.tag == "subtraction" else None
    out = np.array([_at_node(s, i, strategy, deriv) for i in range(s.grid.n)])
    return project_zero_average(SampledFunction(s.grid, out))


def inverse_hilbert_function(s: SampledFunction,
                             strategy: PvStrategy = SUBTRACTION) -> SampledFunction:
    return -hilbert_function(s, strategy)
