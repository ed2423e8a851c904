import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compact_hilbert.catalog import SQUARE, random_trig_poly
from compact_hilbert.errors import AliasingError, TruncationError
from compact_hilbert.fourier import (
    FourierCoefficients,
    compute_coefficients,
    conjugate_coefficients,
    eval_partial_sum_disk,
    max_order,
    parseval_sum,
    partial_sum_series,
    spectral_derivative,
    taylor_from_fourier,
    trig_interpolate,
)
from compact_hilbert.grid import make_grid, sample


def direct_coefficients(values, nodes, k_max):
    """Midpoint-rule quadrature written out term by term, no FFT involved."""
    h = 2 * np.pi / len(nodes)
    a = [h / np.pi * sum(v * np.cos(k * x) for v, x in zip(values, nodes))
         for k in range(1, k_max + 1)]
    b = [h / np.pi * sum(v * np.sin(k * x) for v, x in zip(values, nodes))
         for k in range(1, k_max + 1)]
    return np.array(a), np.array(b)


@pytest.mark.parametrize("n", [8, 16, 30])
def test_fft_matches_direct_quadrature(n, rng):
    g = make_grid(n)
    values = rng.standard_normal(n)
    fc = compute_coefficients(sample(lambda t: values, g))
    a, b = direct_coefficients(values, g.nodes, max_order(g))
    np.testing.assert_allclose(fc.alpha, a, atol=1e-13)
    np.testing.assert_allclose(fc.beta, b, atol=1e-13)
    assert fc.alpha0 == pytest.approx(values.mean() * 2, abs=1e-13)


def test_cos3():
    fc = compute_coefficients(sample(lambda t: np.cos(3 * t), make_grid(64)))
    expected = np.zeros(31)
    expected[2] = 1.0
    np.testing.assert_allclose(fc.alpha, expected, atol=1e-12)
    np.testing.assert_allclose(fc.beta, 0.0, atol=1e-12)


def test_sin_plus_two_sin5():
    fc = compute_coefficients(sample(lambda t: np.sin(t) + 2 * np.sin(5 * t), make_grid(64)))
    assert fc.beta[0] == pytest.approx(1.0, abs=1e-12)
    assert fc.beta[4] == pytest.approx(2.0, abs=1e-12)
    others = np.delete(fc.beta, [0, 4])
    assert np.max(np.abs(others)) < 1e-12
    assert np.max(np.abs(fc.alpha)) < 1e-12


def test_square_first_sine_coefficient():
    fc = compute_coefficients(sample(SQUARE.f, make_grid(4096)), k_max=5)
    assert fc.beta[0] == pytest.approx(4 / np.pi, abs=1e-6)
    assert fc.beta[2] == pytest.approx(4 / (3 * np.pi), abs=1e-5)
    assert np.max(np.abs(fc.alpha)) < 1e-12


def test_aliasing_guard():
    s = sample(np.cos, make_grid(16))
    compute_coefficients(s, k_max=7)
    with pytest.raises(AliasingError):
        compute_coefficients(s, k_max=8)


@given(st.integers(2, 64).map(lambda m: 2 * m), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_band_limited_round_trip(n, seed):
    g = make_grid(n)
    entry = random_trig_poly(seed, max_order(g))
    fc = compute_coefficients(sample(entry.f, g))
    np.testing.assert_allclose(fc.alpha, entry.alpha_fn(np.arange(1, fc.k_max + 1)), atol=1e-10)
    np.testing.assert_allclose(partial_sum_series(fc, fc.k_max, g.nodes), entry.f(g.nodes),
                               atol=1e-10)


def test_parseval(seeded_polys):
    for entry in seeded_polys[:5]:
        s = sample(entry.f, make_grid(256))
        fc = compute_coefficients(s)
        assert parseval_sum(fc) == pytest.approx(np.mean(s.values ** 2), abs=1e-8)


def test_taylor_cos_zero_hot():
    fc = FourierCoefficients.from_modes(3, alpha={1: 1.0})
    np.testing.assert_allclose(taylor_from_fourier(fc).c, [0, 1, 0, 0])


def test_taylor_sin():
    fc = FourierCoefficients.from_modes(3, beta={1: 1.0})
    np.testing.assert_allclose(taylor_from_fourier(fc).c, [0, -1j, 0, 0])


def test_taylor_zero():
    fc = FourierCoefficients(np.zeros(4), np.zeros(4))
    assert np.all(taylor_from_fourier(fc).c == 0)


def test_disk_cos_boundary():
    tc = taylor_from_fourier(FourierCoefficients.from_modes(2, alpha={1: 1.0}))
    p = eval_partial_sum_disk(tc, 1.0, 0.0, 1)
    assert (p.u, p.v) == pytest.approx((1.0, 0.0), abs=1e-15)


def test_disk_half_radius():
    tc = taylor_from_fourier(FourierCoefficients.from_modes(2, alpha={1: 1.0}))
    p = eval_partial_sum_disk(tc, 0.5, np.pi / 2, 1)
    assert (p.u, p.v) == pytest.approx((0.0, 0.5), abs=1e-15)


def test_disk_truncation_error():
    tc = taylor_from_fourier(FourierCoefficients.from_modes(2, alpha={1: 1.0}))
    with pytest.raises(TruncationError):
        eval_partial_sum_disk(tc, 0.5, 0.0, 3)
    with pytest.raises(ValueError):
        eval_partial_sum_disk(tc, 1.5, 0.0, 1)


@given(st.floats(0, 1), st.floats(-np.pi, np.pi), st.integers(0, 1000))
@settings(max_examples=50, deadline=None)
def test_disk_boundary_real_part_is_series(rho, theta, seed):
    entry = random_trig_poly(seed, 8)
    fc = entry.coefficients(8)
    p = eval_partial_sum_disk(taylor_from_fourier(fc), rho, theta, 8)
    k = np.arange(1, 9)
    u = np.sum(rho ** k * (fc.alpha * np.cos(k * theta) + fc.beta * np.sin(k * theta)))
    v = np.sum(rho ** k * (fc.alpha * np.sin(k * theta) - fc.beta * np.cos(k * theta)))
    assert p.u == pytest.approx(u, abs=1e-12)
    assert p.v == pytest.approx(v, abs=1e-12)


def test_partial_sum_examples():
    fc = FourierCoefficients.from_modes(1, alpha={1: 1.0})
    assert partial_sum_series(fc, 1, 0.0) == pytest.approx(1.0)
    sq = SQUARE.coefficients(1)
    assert partial_sum_series(sq, 1, np.pi / 2) == pytest.approx(4 / np.pi, abs=1e-15)
    with pytest.raises(TruncationError):
        partial_sum_series(fc, 2, 0.0)


def test_partial_sum_zero_N_rejected():
    fc = FourierCoefficients.from_modes(2, alpha={1: 1.0})
    with pytest.raises(TruncationError):
        partial_sum_series(fc, 0, 0.0)


def test_conjugate_examples():
    c = conjugate_coefficients(FourierCoefficients.from_modes(2, alpha={1: 1.0}))
    np.testing.assert_array_equal(c.alpha, [0, 0])
    np.testing.assert_array_equal(c.beta, [1, 0])
    c = conjugate_coefficients(FourierCoefficients.from_modes(2, beta={1: 1.0}))
    np.testing.assert_array_equal(c.alpha, [-1, 0])
    np.testing.assert_array_equal(c.beta, [0, 0])


@given(st.integers(0, 10 ** 6))
def test_conjugate_twice_negates_exactly(seed):
    fc = random_trig_poly(seed, 12).coefficients(12)
    cc = conjugate_coefficients(conjugate_coefficients(fc))
    np.testing.assert_array_equal(cc.alpha, -fc.alpha)
    np.testing.assert_array_equal(cc.beta, -fc.beta)


def test_interpolant_reproduces_samples(rng):
    g = make_grid(32)
    s = sample(lambda t: rng.standard_normal(32), g)
    np.testing.assert_allclose(trig_interpolate(s, g.nodes), s.values, atol=1e-13)


def test_interpolant_off_grid_band_limited():
    g = make_grid(64)
    entry = random_trig_poly(3, 20)
    t = np.linspace(-3, 3, 17)
    np.testing.assert_allclose(trig_interpolate(sample(entry.f, g), t), entry.f(t), atol=1e-11)


def test_spectral_derivative():
    g = make_grid(128)
    s = sample(lambda t: np.exp(np.cos(t)), g)
    exact = -np.sin(g.nodes) * np.exp(np.cos(g.nodes))
    np.testing.assert_allclose(spectral_derivative(s), exact, atol=1e-12)


def test_coefficients_are_immutable():
    fc = FourierCoefficients.from_modes(2, alpha={1: 1.0})
    with pytest.raises(ValueError):
        fc.alpha[0] = 2.0
    with pytest.raises(ValueError):
        FourierCoefficients([np.nan], [0.0])
