"""Uniform midpoint grids on the circle and functions sampled on them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import EvaluationError, GridSizeError

# relative tolerance for the zero-average flag
ZERO_AVERAGE_RTOL = 1e-12


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class PeriodicGrid:
    """``n`` nodes ``-pi + (j + 1/2) * 2pi/n`` on ``[-pi, pi)``.

    The half-step offset keeps ``0`` and ``+-pi`` off the grid, and the grid
    is symmetric under ``theta -> -theta`` for even ``n``.
    """

    n: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise GridSizeError(f"grid size must be an integer, got {self.n!r}")
        if self.n < 4 or self.n % 2:
            raise GridSizeError(f"grid size must be even and >= 4, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        j = np.arange(self.n)
        object.__setattr__(self, "_nodes", _frozen(-np.pi + (j + 0.5) * self.step))

    @property
    def step(self) -> float:
        return 2.0 * np.pi / self.n

    @property
    def nodes(self) -> np.ndarray:
        return self._nodes

    @property
    def offset_points(self) -> np.ndarray:
        """Points half a step to the right of each node (cell boundaries)."""
        return self._nodes + 0.5 * self.step

    def locate(self, theta: float, tol: float = 1e-9):
        """Classify ``theta`` as ``("node", i)``, ``("offset", i)`` or ``("generic", None)``.

        ``("offset", i)`` means ``theta`` sits half a step right of node ``i``.
        """
        u = (wrap_angle(theta) + np.pi) / self.step - 0.5
        i = int(np.floor(u + 0.5))
        if abs(u - i) < tol:
            return "node", i % self.n
        i = int(np.floor(u))
        if abs(u - i - 0.5) < tol:
            return "offset", i % self.n
        return "generic", None

    def __eq__(self, other):
        return isinstance(other, PeriodicGrid) and other.n == self.n

    def __hash__(self):
        return hash(("PeriodicGrid", self.n))

    def __repr__(self):
        return f"PeriodicGrid(n={self.n})"


def wrap_angle(theta):
    """Map angles into ``[-pi, pi)``."""
    return np.mod(np.asarray(theta, dtype=float) + np.pi, 2.0 * np.pi) - np.pi


@dataclass(frozen=True, eq=False)
class SampledFunction:
    grid: PeriodicGrid
    values: np.ndarray
    zero_average: bool = False

    def __post_init__(self):
        values = _frozen(self.values)
        if values.shape != (self.grid.n,):
            raise ValueError(
                f"expected {self.grid.n} values, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            bad = int(np.flatnonzero(~np.isfinite(values))[0])
            raise EvaluationError(
                f"non-finite value at node {bad} (theta={self.grid.nodes[bad]!r})"
            )
        object.__setattr__(self, "values", values)
        if self.zero_average and not has_zero_mean(values):
            raise ValueError("values flagged zero-average but the grid mean is not zero")

    @property
    def mean(self) -> float:
        return float(np.mean(self.values))

    def __add__(self, other: SampledFunction) -> SampledFunction:
        _same_grid(self, other)
        return SampledFunction(self.grid, self.values + other.values)

    def __sub__(self, other: SampledFunction) -> SampledFunction:
        _same_grid(self, other)
        return SampledFunction(self.grid, self.values - other.values)

    def __mul__(self, a: float) -> SampledFunction:
        return SampledFunction(self.grid, a * self.values)

    __rmul__ = __mul__

    def __neg__(self) -> SampledFunction:
        return SampledFunction(self.grid, -self.values, self.zero_average)


def _same_grid(a: SampledFunction, b: SampledFunction):
    if a.grid != b.grid:
        raise ValueError(f"grid mismatch: {a.grid} vs {b.grid}")


def has_zero_mean(values: np.ndarray, rtol: float = ZERO_AVERAGE_RTOL) -> bool:
    scale = max(1.0, float(np.max(np.abs(values)))) if values.size else 1.0
    return abs(float(np.mean(values))) <= rtol * scale


def make_grid(n: int) -> PeriodicGrid:
    return PeriodicGrid(n)


def sample(fn: Callable, grid: PeriodicGrid) -> SampledFunction:
    """Evaluate ``fn`` at every node.

    ``fn`` may be vectorized over numpy arrays or a plain scalar function.
    """
    nodes = grid.nodes
    try:
        with np.errstate(all="ignore"):
            raw = np.asarray(fn(nodes), dtype=float)
        values = np.broadcast_to(raw, nodes.shape).astype(float)
    except (TypeError, ValueError):
        values = np.empty(grid.n)
        for j, t in enumerate(nodes):
            try:
                values[j] = float(fn(float(t)))
            except (ZeroDivisionError, OverflowError, ValueError) as exc:
                raise EvaluationError(f"evaluation failed at node {j} (theta={t!r}): {exc}") from exc
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        j = int(bad[0])
        raise EvaluationError(
            f"non-finite sample at node {j} (theta={nodes[j]!r}): {values[j]}"
        )
    return SampledFunction(grid, values)


def project_zero_average(s: SampledFunction) -> SampledFunction:
    """Subtract the grid mean. Idempotent."""
    if s.zero_average:
        return s
    values = s.values - np.mean(s.values)
    return SampledFunction(s.grid, values, zero_average=True)
