import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fejer.kernel import FejerKernel, eval_kernel_closed, eval_kernel_sum, fejer_hat
from fejer.spectral import Signal, SpectralGrid

from oracles import exponential_kernel


def test_order_zero_is_constant():
    assert eval_kernel_sum(0, 1.234) == 1.0
    assert eval_kernel_closed(0, 1.234) == pytest.approx(1.0, abs=1e-15)


def test_peak_value():
    assert eval_kernel_sum(2, 0.0) == pytest.approx(3.0, abs=1e-14)
    assert eval_kernel_closed(3, 0.0) == 4.0
    assert eval_kernel_closed(3, 2 * np.pi) == 4.0


def test_closed_form_zero_at_pi():
    assert eval_kernel_closed(1, np.pi) == pytest.approx(0.0, abs=1e-15)


def test_cross_formula_points():
    assert eval_kernel_sum(4, np.pi) == pytest.approx(eval_kernel_closed(4, np.pi), abs=1e-10)
    assert eval_kernel_closed(5, 0.7) == pytest.approx(eval_kernel_sum(5, 0.7), abs=1e-10)


def test_cosine_form_matches_exponential_sum():
    x = np.linspace(-np.pi, np.pi, 37)
    for n in (0, 1, 6, 31):
        ref = exponential_kernel(n, x)
        assert np.max(np.abs(ref.imag)) <= 1e-10
        np.testing.assert_allclose(eval_kernel_sum(n, x), ref.real, atol=1e-10 * (n + 1))


@pytest.mark.parametrize("n, xi, expected", [(7, 0, 1.0), (4, 5, 0.0), (4, 3, 0.4),
                                             (4, -3, 0.4), (4, 4.5, 0.0), (2, 1.5, 0.5)])
def test_tent_values(n, xi, expected):
    assert fejer_hat(n, xi) == pytest.approx(expected, abs=1e-15)


def test_scalar_in_scalar_out():
    assert isinstance(eval_kernel_sum(3, 0.1), float)
    assert isinstance(fejer_hat(3, 1), float)
    assert eval_kernel_closed(3, np.zeros(4)).shape == (4,)


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        eval_kernel_sum(-1, 0.0)
    with pytest.raises(ValueError):
        FejerKernel(-2)


def test_kernel_object():
    K = FejerKernel(5)
    assert K(0.0) == 6.0
    assert K.by_sum(0.3) == pytest.approx(K(0.3), abs=1e-12)
    assert K.hat(5) == pytest.approx(1 / 6)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 512), st.floats(-np.pi, np.pi, exclude_max=True))
def test_formula_equivalence_and_symmetry(n, x):
    tol = 1e-10 * (n + 1)
    a = eval_kernel_sum(n, x)
    b = eval_kernel_closed(n, x)
    assert abs(a - b) <= tol
    assert b >= -1e-12
    assert abs(eval_kernel_closed(n, -x) - b) <= tol
    assert abs(eval_kernel_sum(n, x + 2 * np.pi) - a) <= tol


@pytest.mark.parametrize("n", [0, 1, 5, 40])
def test_unit_mean(n):
    M = 2 * n + 2
    x = -np.pi + 2 * np.pi * np.arange(M) / M
    # periodic trapezoid rule on [-pi, pi)
    assert np.mean(eval_kernel_closed(n, x)) == pytest.approx(1.0, abs=1e-9)
    assert fejer_hat(n, 0) == 1.0


@pytest.mark.parametrize("n, M", [(3, 8), (10, 22), (25, 64), (63, 128)])
def test_coefficients_are_the_tent(n, M):
    grid = SpectralGrid(M)
    f = Signal.from_function(grid, lambda x: eval_kernel_closed(n, x))
    for j in range(-grid.max_frequency, grid.max_frequency + 1):
        assert abs(f.coefficient(j) - fejer_hat(n, j)) <= 1e-9
