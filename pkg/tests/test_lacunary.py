import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fejer.errors import EmptySequence, InvalidAlpha, NonPositiveTerm, NotLacunary
from fejer.lacunary import generate, geometric_tail_bound, ratio_tail_sum, validate


def test_dyadic_alpha():
    assert validate([1, 2, 4, 8]).alpha == 2.0


def test_min_ratio_is_certified():
    seq = validate([2, 3, 4])
    assert seq.alpha == pytest.approx(4 / 3)
    with pytest.raises(NotLacunary):
        validate([2, 3, 4], min_alpha=1.4)


@pytest.mark.parametrize("terms, exc", [((5, 5, 10), NotLacunary), ((), EmptySequence),
                                        ((0, 2, 4), NonPositiveTerm), ((4, 2), NotLacunary),
                                        ((-1, 3), NonPositiveTerm)])
def test_invalid_sequences(terms, exc):
    with pytest.raises(exc):
        validate(terms)


def test_one_based_access():
    seq = validate([2, 4, 8])
    assert seq[1] == 2 and seq[3] == 8
    with pytest.raises(IndexError):
        seq[0]


def test_generate_examples():
    assert generate(1, 2.0, 5).terms == (1, 2, 4, 8, 16)
    assert generate(3, 1.5, 4).terms == (3, 5, 8, 12)
    with pytest.raises(InvalidAlpha):
        generate(1, 1.0, 3)


def test_generate_reads_alpha_as_decimal():
    assert generate(10, 1.1, 3).terms == (10, 11, 13)


def test_generate_clamps_small_ratios():
    seq = generate(1, 1.01, 6)
    assert seq.terms == (1, 2, 3, 4, 5, 6)


@pytest.mark.parametrize("alpha, expected", [(2, 4.0), (1.5, 6.0), (3, 3.0), (1.05, 42.0)])
def test_geometric_tail_bound(alpha, expected):
    assert geometric_tail_bound(alpha) == pytest.approx(expected, rel=1e-13)


def test_geometric_tail_bound_limits():
    assert abs(geometric_tail_bound(1e6) - 2) <= 1e-5
    a = np.linspace(1.01, 50, 400)
    vals = [geometric_tail_bound(x) for x in a]
    assert all(x > y for x, y in zip(vals, vals[1:]))
    with pytest.raises(InvalidAlpha):
        geometric_tail_bound(1.0)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 50), st.floats(1.001, 4.0), st.integers(2, 25))
def test_generated_sequences_validate(n1, alpha, count):
    seq = generate(n1, alpha, count)
    assert len(seq) == count and seq.n1 == n1
    ratios = seq.ratios()
    assert seq.alpha == pytest.approx(ratios.min())
    assert np.all(np.diff(seq.terms) > 0)
    for a, r in zip(seq.terms, ratios):
        if a * alpha >= a + 1:
            assert r >= alpha - 1e-12
    assert validate(seq.terms).alpha == seq.alpha


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 20), st.floats(1.05, 5.0), st.integers(3, 20), st.data())
def test_geometric_step(n1, alpha, count, data):
    seq = generate(n1, alpha, count)
    a = seq.alpha
    k0 = data.draw(st.integers(1, count - 1))
    last = data.draw(st.integers(k0, count - 1))
    assert ratio_tail_sum(seq, k0, last) <= a / (a - 1) + 1e-12
    assert ratio_tail_sum(seq, k0, last, shifted=True) <= a / (a - 1) + 1e-12


def test_ratio_tail_sum_value():
    seq = validate([1, 2, 4, 8])
    assert ratio_tail_sum(seq, 2, 4) == pytest.approx(1 + 0.5 + 0.25)
    assert ratio_tail_sum(seq, 1, 3, shifted=True) == pytest.approx(0.5 + 0.25 + 0.125)
    assert math.isinf(validate([7]).alpha)
