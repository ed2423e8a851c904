import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compact_hilbert.errors import EvaluationError, GridSizeError
from compact_hilbert.grid import (
    PeriodicGrid,
    SampledFunction,
    make_grid,
    project_zero_average,
    sample,
)

even_n = st.integers(2, 512).map(lambda m: 2 * m)


def test_n4_nodes():
    g = make_grid(4)
    np.testing.assert_allclose(g.nodes, [-3 * np.pi / 4, -np.pi / 4, np.pi / 4, 3 * np.pi / 4],
                               rtol=0, atol=1e-15)


def test_n8_step_and_first_node():
    g = make_grid(8)
    assert g.step == pytest.approx(np.pi / 4, abs=1e-15)
    assert g.nodes[0] == pytest.approx(-7 * np.pi / 8, abs=1e-15)


@pytest.mark.parametrize("n", [5, 2, 0, -4, 7])
def test_bad_sizes(n):
    with pytest.raises(GridSizeError):
        make_grid(n)


def test_non_integer_size():
    with pytest.raises(GridSizeError):
        PeriodicGrid(8.0)


@given(even_n)
def test_grid_invariants(n):
    g = make_grid(n)
    x = g.nodes
    assert x.size == n
    assert np.all(np.diff(x) > 0)
    assert x[0] >= -np.pi and x[-1] < np.pi
    assert not np.any(x == 0.0)
    assert not np.any(np.abs(x) == np.pi)
    # symmetric under theta -> -theta
    np.testing.assert_allclose(x, -x[::-1], rtol=0, atol=4 * np.finfo(float).eps * np.pi)


def test_nodes_are_readonly():
    g = make_grid(8)
    with pytest.raises(ValueError):
        g.nodes[0] = 1.0


def test_locate():
    g = make_grid(16)
    assert g.locate(g.nodes[3]) == ("node", 3)
    assert g.locate(g.nodes[3] + g.step / 2) == ("offset", 3)
    assert g.locate(g.nodes[-1] + g.step / 2) == ("offset", 15)
    assert g.locate(g.nodes[3] + g.step / 3) == ("generic", None)
    assert g.locate(g.nodes[0] + 2 * np.pi) == ("node", 0)


def test_sample_cos():
    g = make_grid(4)
    s = sample(np.cos, g)
    np.testing.assert_array_equal(s.values, np.cos(g.nodes))
    assert not s.zero_average


def test_sample_scalar_function():
    import math
    g = make_grid(8)
    np.testing.assert_allclose(sample(math.sin, g).values, np.sin(g.nodes), rtol=0, atol=0)


def test_sample_zero():
    s = sample(lambda t: 0.0, make_grid(8))
    assert np.all(s.values == 0.0)


def test_sample_near_pole_is_large_but_finite():
    # tan(t/2 + pi/2) has its pole at t = 0, which the midpoint grid never hits
    g = make_grid(64)
    s = sample(lambda t: np.tan(t / 2 + np.pi / 2), g)
    assert np.all(np.isfinite(s.values))
    assert np.max(np.abs(s.values)) == pytest.approx(1 / np.tan(g.step / 4), rel=1e-12)


def test_sample_non_finite_names_node():
    g = make_grid(8)
    bad = g.nodes[5]
    with pytest.raises(EvaluationError, match="node 5"):
        sample(lambda t: np.where(t == bad, np.inf, 0.0), g)


def test_project_constant():
    s = SampledFunction(make_grid(8), np.full(8, 5.0))
    p = project_zero_average(s)
    np.testing.assert_allclose(p.values, 0.0, atol=1e-15)
    assert p.zero_average


def test_project_cos_unchanged():
    s = sample(np.cos, make_grid(64))
    np.testing.assert_allclose(project_zero_average(s).values, s.values, rtol=0, atol=1e-15)


def test_project_example():
    g = make_grid(4)
    p = project_zero_average(SampledFunction(g, [1.0, 2.0, 3.0, 4.0]))
    np.testing.assert_allclose(p.values, [-1.5, -0.5, 0.5, 1.5], rtol=0, atol=1e-15)


@given(even_n, st.integers(0, 2 ** 32 - 1), st.floats(-1e3, 1e3))
@settings(max_examples=50)
def test_projection_idempotent_and_mean_zero(n, seed, shift):
    values = np.random.default_rng(seed).standard_normal(n) + shift
    s = SampledFunction(make_grid(n), values)
    once = project_zero_average(s)
    twice = project_zero_average(once)
    np.testing.assert_allclose(twice.values, once.values, rtol=0, atol=1e-15)
    assert abs(once.values.mean()) <= 1e-12 * max(1.0, np.max(np.abs(once.values)))


def test_zero_average_flag_is_validated():
    with pytest.raises(ValueError):
        SampledFunction(make_grid(4), [1.0, 1.0, 1.0, 1.0], zero_average=True)


def test_wrong_length():
    with pytest.raises(ValueError):
        SampledFunction(make_grid(4), [1.0, 2.0])


def test_arithmetic():
    g = make_grid(8)
    a, b = sample(np.cos, g), sample(np.sin, g)
    np.testing.assert_allclose((2 * a - b).values, 2 * np.cos(g.nodes) - np.sin(g.nodes))
    with pytest.raises(ValueError):
        a + sample(np.cos, make_grid(16))
