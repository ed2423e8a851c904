"""Closed-form test functions with known coefficients and conjugates.

Every entry is zero-average on (-pi, pi). The conjugate ``g`` is the sum of
``alpha_k sin(k t) - beta_k cos(k t)``.

Golden files hold remainders computed by direct tail summation; see
``scripts/make_golden.py``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Literal

import numpy as np

from .fourier import FourierCoefficients
from .grid import wrap_angle

GENERATOR_VERSION = "tailsum-1"
GOLDEN_FILE = "golden_remainders.txt"
GOLDEN_TERMS = 10 ** 6


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    f: Callable
    g: Callable | None
    alpha_fn: Callable
    beta_fn: Callable
    smoothness: Literal["analytic", "jump", "log-singular"]
    degree: int | None = None  # set for trig polynomials

    def coefficients(self, k_max: int) -> FourierCoefficients:
        k = np.arange(1, k_max + 1)
        return FourierCoefficients(self.alpha_fn(k), self.beta_fn(k), 0.0)

    def conjugate_series(self, theta, terms: int):
        k = np.arange(1, terms + 1)
        a, b = self.alpha_fn(k), self.beta_fn(k)
        return math.fsum(a * np.sin(k * theta) - b * np.cos(k * theta))


def _mode(K: int):
    return lambda k: np.where(np.asarray(k) == K, 1.0, 0.0)


def _zero(k):
    return np.zeros(np.shape(k))


def pure_mode(kind: str, K: int) -> CatalogEntry:
    if kind == "cos":
        return CatalogEntry(f"cos{K}", lambda t: np.cos(K * np.asarray(t)),
                            lambda t: np.sin(K * np.asarray(t)),
                            _mode(K), _zero, "analytic", K)
    if kind == "sin":
        return CatalogEntry(f"sin{K}", lambda t: np.sin(K * np.asarray(t)),
                            lambda t: -np.cos(K * np.asarray(t)),
                            _zero, _mode(K), "analytic", K)
    raise ValueError(kind)


def _square_beta(k):
    k = np.asarray(k)
    return np.where(k % 2 == 1, 4.0 / (np.pi * np.maximum(k, 1)), 0.0)


def _sawtooth_beta(k):
    k = np.asarray(k, dtype=float)
    return 2.0 * np.where(k % 2 == 1, 1.0, -1.0) / k


def _sawtooth_g(t):
    return -2.0 * np.log(2.0 * np.cos(wrap_angle(t) / 2))


SQUARE = CatalogEntry(
    "square",
    lambda t: np.sign(wrap_angle(t)),
    lambda t: (2.0 / np.pi) * np.log(np.abs(np.tan(np.asarray(t, dtype=float) / 2))),
    _zero, _square_beta, "jump",
)

SAWTOOTH = CatalogEntry(
    "sawtooth",
    lambda t: wrap_angle(t),
    _sawtooth_g,
    _zero, _sawtooth_beta, "jump",
)

# the sawtooth's conjugate; its own conjugate is minus the sawtooth
LOGCOS = CatalogEntry(
    "logcos",
    _sawtooth_g,
    lambda t: -wrap_angle(t),
    lambda k: -_sawtooth_beta(k), _zero, "log-singular",
)


def random_trig_poly(seed: int, degree: int = 32, name: str | None = None) -> CatalogEntry:
    """Zero-average trig polynomial with N(0, 1) coefficients from ``seed``."""
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(degree)
    b = rng.standard_normal(degree)
    return from_coefficients(name or f"randpoly-{seed}-{degree}", FourierCoefficients(a, b))


def from_coefficients(name: str, fc: FourierCoefficients) -> CatalogEntry:
    """Entry for the trig polynomial with the given coefficients (constant dropped)."""
    ks = np.arange(1, fc.k_max + 1)
    a, b = fc.alpha, fc.beta

    def pick(arr):
        def fn(k):
            k = np.asarray(k)
            out = np.zeros(k.shape)
            m = (k >= 1) & (k <= fc.k_max)
            out[m] = arr[k[m] - 1]
            return out
        return fn

    def f(t):
        kt = np.multiply.outer(np.asarray(t, dtype=float), ks)
        return np.cos(kt) @ a + np.sin(kt) @ b

    def g(t):
        kt = np.multiply.outer(np.asarray(t, dtype=float), ks)
        return np.sin(kt) @ a - np.cos(kt) @ b

    return CatalogEntry(name, f, g, pick(a), pick(b), "analytic", fc.k_max)


def catalog_entries() -> list[CatalogEntry]:
    entries = [pure_mode("cos", k) for k in range(1, 17)]
    entries += [pure_mode("sin", k) for k in range(1, 17)]
    entries += [SQUARE, SAWTOOTH, LOGCOS, random_trig_poly(0, 32, name="randpoly")]
    return entries


def get_entry(name: str) -> CatalogEntry:
    """Look up by name; ``randpoly-SEED-DEGREE`` builds a seeded polynomial."""
    for e in catalog_entries():
        if e.name == name:
            return e
    if name.startswith("randpoly-"):
        parts = name.split("-")
        if len(parts) == 3 and parts[1].isdigit() and parts[2].isdigit() and int(parts[2]) > 0:
            return random_trig_poly(int(parts[1]), int(parts[2]))
    raise KeyError(f"unknown catalog function {name!r}")


def tail_sum_oracle(entry: CatalogEntry, N: int, theta: float,
                    terms: int = GOLDEN_TERMS) -> float:
    """``sum_{k=N+1}^{terms} alpha_k cos(k theta) + beta_k sin(k theta)``.

    Brute-force remainder; the truncation error is of the size of the first
    omitted term for alternating tails and is zero for trig polynomials.
    """
    if terms < 10 * N:
        raise ValueError(f"terms={terms} must be at least 10*N={10 * N}")
    k = np.arange(N + 1, terms + 1)
    kt = k * float(theta)
    return math.fsum(entry.alpha_fn(k) * np.cos(kt) + entry.beta_fn(k) * np.sin(kt))


# -- golden files --------------------------------------------------------------

GOLDEN_CASES = (
    ("sawtooth", 8, math.pi / 2),
    ("sawtooth", 10, math.pi / 2),
    ("sawtooth", 16, math.pi / 2),
    ("sawtooth", 32, math.pi / 2),
    ("sawtooth", 64, math.pi / 2),
    ("square", 5, math.pi / 2),
    ("square", 8, math.pi / 2),
    ("square", 16, math.pi / 2),
    ("square", 32, math.pi / 2),
    ("square", 64, math.pi / 2),
)

GOLDEN_HEADER = ("name", "N", "theta", "value", "terms", "generator_version")


def golden_rows(cases=GOLDEN_CASES, terms: int = GOLDEN_TERMS):
    for name, N, theta in cases:
        value = tail_sum_oracle(get_entry(name), N, theta, terms)
        yield {"name": name, "N": N, "theta": theta, "value": value,
               "terms": terms, "generator_version": GENERATOR_VERSION}


def write_golden(path, rows) -> None:
    lines = [" ".join(GOLDEN_HEADER)]
    for r in rows:
        lines.append(f"{r['name']} {r['N']} {r['theta']!r} {r['value']!r} "
                     f"{r['terms']} {r['generator_version']}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_golden(path=None) -> list[dict]:
    if path is None:
        text = resources.files("compact_hilbert").joinpath("data", GOLDEN_FILE).read_text()
    else:
        text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    header = tuple(lines[0].split())
    if header != GOLDEN_HEADER:
        raise ValueError(f"unexpected golden header {header}")
    rows = []
    for ln in lines[1:]:
        name, N, theta, value, terms, version = ln.split()
        rows.append({"name": name, "N": int(N), "theta": float(theta),
                     "value": float(value), "terms": int(terms),
                     "generator_version": version})
    return rows


def golden_value(name: str, N: int, theta: float, rows=None) -> float:
    for r in rows or read_golden():
        if r["name"] == name and r["N"] == N and abs(r["theta"] - theta) < 1e-12:
            return r["value"]
    raise KeyError(f"no golden value for {name} N={N} theta={theta}")
