import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fejer.bounds import (abs_sum_profile, check_uniform_bound, check_uniform_bounds,
                          crossing_index, operator_bound_check, proof_chain,
                          real_frequency_sweep, strong_type_22_check)
from fejer.errors import IndexOutOfRange, InvalidAlpha, ZeroSignal
from fejer.experiments import gen_signal
from fejer.lacunary import generate, validate
from fejer.spectral import Signal, SpectralGrid

from oracles import exact_abs_sum, exact_blocks

DYADIC = validate([2, 4, 8, 16])


def brute_max(terms, N):
    """Exact (value, smallest witness) of max_j I(j) over |j| <= n_{N+1}."""
    top = terms[N]
    return max((exact_abs_sum(terms, N, j), -abs(j), j) for j in range(-top, top + 1))


def test_crossing_index():
    assert crossing_index(DYADIC, 3) == 2
    assert crossing_index(DYADIC, -3) == 2
    assert crossing_index(DYADIC, 0) == 1
    assert crossing_index(validate([2, 4, 8]), 100) is None


def test_abs_sum_profile_examples():
    I1, I2 = abs_sum_profile(DYADIC, 3, 3)
    assert I1 == 0.0
    expected = Fraction(2, 5) + Fraction(4, 15) + Fraction(8, 51)
    assert expected == Fraction(14, 17)
    assert I2 == pytest.approx(14 / 17, abs=1e-15)
    assert abs_sum_profile(DYADIC, 3, 0) == (0.0, 0.0)
    assert abs_sum_profile(DYADIC, 3, 20) == (0.0, 0.0)
    with pytest.raises(IndexOutOfRange):
        abs_sum_profile(DYADIC, 4, 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10), st.floats(1.1, 3.0), st.integers(3, 10), st.data())
def test_profile_split(n1, alpha, count, data):
    seq = generate(n1, alpha, count)
    N = data.draw(st.integers(1, count - 1))
    j = data.draw(st.integers(-seq.terms[-1] - 3, seq.terms[-1] + 3))
    I1, I2 = abs_sum_profile(seq, N, j)
    assert I1 == 0.0
    assert abs(I1 + I2 - float(exact_abs_sum(seq.terms, N, j))) <= 1e-14


def test_uniform_bound_dyadic_from_one():
    seq = validate([1, 2, 4, 8, 16, 32])
    rep = check_uniform_bound(seq, 5)
    assert rep.paper_bound == 4.0
    value, _, witness = brute_max(seq.terms, 5)
    assert rep.max_abs_sum == pytest.approx(float(value), abs=1e-15)
    assert rep.witness_j == witness
    assert rep.max_abs_sum <= 1 + 1e-12 and rep.ok


def test_uniform_bound_single_block():
    rep = check_uniform_bound(validate([2, 4]), 1)
    value, _, witness = brute_max((2, 4), 1)
    assert value == Fraction(2, 5) and witness == 3
    assert rep.max_abs_sum == pytest.approx(0.4, abs=1e-15) and rep.witness_j == 3


def test_uniform_bound_alpha_one_and_a_half():
    seq = generate(3, 1.5, 10)
    rep = check_uniform_bound(seq, 9, alpha=1.5)
    assert rep.paper_bound == pytest.approx(6.0)
    assert rep.max_abs_sum <= 6.0 and rep.ok


def test_alpha_override_must_be_certified():
    with pytest.raises(InvalidAlpha):
        check_uniform_bound(DYADIC, 2, alpha=2.5)
    assert check_uniform_bound(DYADIC, 2, alpha=1.5).paper_bound == pytest.approx(6.0)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.floats(1.05, 3.0), st.integers(2, 9), st.data())
def test_scan_matches_exact_enumeration(n1, alpha, count, data):
    seq = generate(n1, alpha, count)
    N = data.draw(st.integers(1, count - 1))
    chunk = data.draw(st.sampled_from([1, 3, 7, 1 << 20]))
    rep = check_uniform_bounds(seq, [N], chunk=chunk)[0]
    value, _, witness = brute_max(seq.terms, N)
    assert rep.max_abs_sum == pytest.approx(float(value), abs=1e-14)
    assert rep.witness_j == witness
    assert rep.ok


def test_monotone_in_N():
    seq = generate(1, 1.7, 14)
    reps = check_uniform_bounds(seq, range(1, 14))
    vals = [r.max_abs_sum for r in reps]
    assert all(a <= b + 1e-15 for a, b in zip(vals, vals[1:]))
    for N in range(1, 13):
        # growth from N to N+1 is at most the tent mass missing beyond n_{N+1}
        assert vals[N] - vals[N - 1] <= 1 - (1 - seq[N + 1] / (seq[N + 1] + 1)) + 1e-15


def test_proof_chain_each_step():
    seq = generate(1, 1.3, 12)
    for N in range(1, 12):
        for j in range(0, seq.terms[N] + 2):
            chain = proof_chain(seq, N, j)
            assert chain.holds(), (N, j, chain)
            blocks = exact_blocks(seq.terms, N, j)
            total = float(sum(abs(d) for d in blocks))
            assert abs(chain.straddle + chain.exact - total) <= 1e-14
            assert total <= chain.geometric


def test_real_frequency_sweep():
    assert real_frequency_sweep(DYADIC, 3) <= 1.0
    assert real_frequency_sweep(DYADIC, 3) >= 14 / 17 - 1e-15


def test_report_json_fields():
    rep = check_uniform_bound(DYADIC, 3)
    d = json.loads(rep.to_json())
    assert set(d) == {"alpha", "N", "paper_bound", "max_abs_sum", "sup_symbol", "witness_j",
                      "telescope_max", "pass"}
    assert all(d["pass"].values())


def test_operator_bound_examples():
    g = SpectralGrid(64)
    rng = np.random.default_rng(5)
    f = gen_signal("random_bandlimited", g, B=20, seed=5)
    rep = operator_bound_check(DYADIC, [0.0] * 3, 3, [f])
    assert rep.worst_ratio == 0.0 and rep.ok
    rep = operator_bound_check(DYADIC, [1.0] * 3, 3, [f])
    witness_mode = gen_signal("pure_mode", g, j=rep.witness_j)
    rep2 = operator_bound_check(DYADIC, [1.0] * 3, 3, [witness_mode])
    assert rep2.worst_ratio == pytest.approx(rep2.sup_symbol, abs=1e-10)
    assert "worst_ratio" in rep2.to_dict()
    seq = generate(1, 2.0, 9)
    g = SpectralGrid(1024)
    for _ in range(10):
        c = rng.uniform(-1, 1, 8)
        sig = gen_signal("random_bandlimited", g, B=int(rng.integers(1, 500)),
                         seed=int(rng.integers(1 << 30)))
        rep = operator_bound_check(seq, c, 8, [sig])
        assert rep.worst_ratio <= 1 + 1e-9 and rep.ok
    with pytest.raises(ZeroSignal):
        operator_bound_check(DYADIC, [1.0] * 3, 3, [Signal.zeros(SpectralGrid(64))])


def test_strong_type_examples():
    seq = generate(1, 2.0, 10)
    g = SpectralGrid(2048)
    one = gen_signal("constant", g)
    rep = strong_type_22_check(seq, [1.0] * 9, 9, [one])
    assert rep.ratios[0] <= 1e-15
    # telescoping limit for a pure mode: coefficient -> 1 - hat K_{n_1}(j)
    j = 5
    f = gen_signal("pure_mode", g, j=j)
    rep = strong_type_22_check(seq, [1.0] * 9, 9, [f])
    assert rep.ratios[0] == pytest.approx(1 - j / (seq[10] + 1), abs=1e-12)
    assert abs(rep.ratios[0] - 1.0) <= rep.tail_bounds[0] + 1e-12
    alt = [(-1.0) ** k for k in range(1, 10)]
    sig = gen_signal("random_bandlimited", g, B=100, seed=9)
    rep = strong_type_22_check(seq, alt, 9, [sig])
    assert rep.passed and rep.empirical_constant <= 1 + 1e-9
