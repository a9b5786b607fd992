# type: ignore
"""

    test_information.py

    Tests for the information measures and channel capacity

    Copyright © 2026 the Halfcrit authors

    This software is licensed under the MIT License:

        Permission is hereby granted, free of charge, to any person
        obtaining a copy of this software and associated documentation
        files (the "Software"), to deal in the Software without restriction,
        including without limitation the rights to use, copy, modify, merge,
        publish, distribute, sublicense, and/or sell copies of the Software,
        and to permit persons to whom the Software is furnished to do so,
        subject to the following conditions:

        The above copyright notice and this permission notice shall be
        included in all copies or substantial portions of the Software.

        THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
        EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
        MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
        IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY
        CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT,
        TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE
        SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

"""

import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from halfcrit import (
    ChannelMatrix,
    DiscreteDistribution,
    RangeError,
    ValidationError,
    binary_entropy,
    channel_capacity,
    conditional_entropy,
    entropy,
    inverse_binary_entropy,
    mutual_information,
    noise_entropy,
    normalize,
)

H_011 = -0.11 * math.log2(0.11) - 0.89 * math.log2(0.89)

weights = st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=1, max_size=5)


@st.composite
def prior_and_channel(draw):
    n_in = draw(st.integers(min_value=1, max_value=4))
    n_out = draw(st.integers(min_value=1, max_value=4))
    cell = st.floats(min_value=0.0, max_value=1.0)
    mass = st.floats(min_value=0.001, max_value=1.0)
    prior = normalize(draw(st.lists(mass, min_size=n_in, max_size=n_in)))
    # The extra output keeps every row normalizable
    rows = [
        draw(st.lists(cell, min_size=n_out, max_size=n_out)) + [1e-3]
        for _ in range(n_in)
    ]
    return prior, ChannelMatrix.from_counts(rows)


def test_entropy():
    assert entropy(DiscreteDistribution([0.5, 0.5])) == 1.0
    assert entropy(DiscreteDistribution([1.0, 0.0])) == 0.0
    assert entropy(DiscreteDistribution([0.11, 0.89])) == pytest.approx(0.49992, abs=1e-4)
    assert entropy(DiscreteDistribution.uniform(4)) == pytest.approx(2.0, abs=1e-12)
    assert entropy(DiscreteDistribution([1.0])) == 0.0


def test_distribution_validation():
    with pytest.raises(ValidationError):
        DiscreteDistribution([0.5, 0.6])
    with pytest.raises(ValidationError):
        DiscreteDistribution([1.5, -0.5])
    with pytest.raises(ValidationError):
        DiscreteDistribution([])
    with pytest.raises(ValidationError):
        DiscreteDistribution([float("nan"), 1.0])
    # Within the summation tolerance
    DiscreteDistribution([0.5, 0.5 + 1e-12])
    d = DiscreteDistribution([0.25, 0.75])
    with pytest.raises(ValueError):
        d.probs[0] = 0.5
    assert normalize([1, 3]).probs.tolist() == [0.25, 0.75]
    with pytest.raises(ValidationError):
        normalize([0, 0])


@given(weights)
def test_entropy_range(w):
    d = normalize(w)
    h = entropy(d)
    assert 0.0 <= h <= math.log2(len(d))


def test_binary_entropy():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.11) == pytest.approx(0.49992, abs=1e-4)
    for p in (-0.1, 1.1, float("nan")):
        with pytest.raises(RangeError):
            binary_entropy(p)


@given(st.floats(min_value=0.0, max_value=1.0))
def test_binary_entropy_symmetry(p):
    assert abs(binary_entropy(p) - binary_entropy(1.0 - p)) <= 1e-12


def test_inverse_binary_entropy():
    assert inverse_binary_entropy(1.0) == 0.5
    assert inverse_binary_entropy(0.0) == 0.0
    p = inverse_binary_entropy(0.5)
    assert 0.1099 <= p <= 0.1102
    # "The probability of error is less than about 10%"
    assert abs(p - 0.10) <= 0.02
    with pytest.raises(RangeError):
        inverse_binary_entropy(1.5)
    with pytest.raises(RangeError):
        inverse_binary_entropy(-0.01)


@given(st.floats(min_value=0.0, max_value=1.0))
def test_inverse_binary_entropy_roundtrip(h):
    p = inverse_binary_entropy(h)
    assert 0.0 <= p <= 0.5
    assert abs(binary_entropy(p) - h) <= 1e-9


def test_conditional_entropy():
    uniform = DiscreteDistribution.uniform(2)
    identity = ChannelMatrix([[1.0, 0.0], [0.0, 1.0]])
    constant = ChannelMatrix([[0.5, 0.5], [0.5, 0.5]])
    bsc = ChannelMatrix.binary_symmetric(0.11)
    assert conditional_entropy(uniform, identity) == 0.0
    assert conditional_entropy(uniform, constant) == pytest.approx(1.0, abs=1e-12)
    assert conditional_entropy(uniform, bsc) == pytest.approx(H_011, abs=1e-12)
    assert noise_entropy(uniform, bsc) == pytest.approx(H_011, abs=1e-12)
    assert noise_entropy(uniform, identity) == 0.0
    with pytest.raises(ValidationError):
        conditional_entropy(DiscreteDistribution.uniform(3), bsc)


def test_mutual_information():
    uniform = DiscreteDistribution.uniform(2)
    assert mutual_information(uniform, ChannelMatrix([[1, 0], [0, 1]])) == pytest.approx(1.0)
    skewed = DiscreteDistribution([0.3, 0.7])
    assert mutual_information(skewed, ChannelMatrix([[0.2, 0.8], [0.2, 0.8]])) == pytest.approx(
        0.0, abs=1e-12
    )
    assert mutual_information(
        uniform, ChannelMatrix.binary_symmetric(0.11)
    ) == pytest.approx(1.0 - H_011, abs=1e-12)


@given(prior_and_channel())
@settings(max_examples=200, deadline=None)
def test_information_identities(pc):
    prior, ch = pc
    h = entropy(prior)
    eq = conditional_entropy(prior, ch)
    mi = mutual_information(prior, ch)
    assert mi >= -1e-9
    assert eq <= h + 1e-9
    assert abs(mi + eq - h) <= 1e-9
    assert noise_entropy(prior, ch) >= 0.0


def test_channel_matrix():
    with pytest.raises(ValidationError) as e:
        ChannelMatrix([[0.5, 0.5], [0.6, 0.6]])
    assert "Channel row 1" in str(e.value)
    with pytest.raises(ValidationError):
        ChannelMatrix([[]])
    ch = ChannelMatrix.from_counts([[3, 1], [0, 2]])
    assert ch.rows.tolist() == [[0.75, 0.25], [0.0, 1.0]]
    bec = ChannelMatrix.binary_erasure(0.3)
    assert (bec.n_inputs, bec.n_outputs) == (2, 3)
    with pytest.raises(RangeError):
        ChannelMatrix.binary_symmetric(1.2)


def test_capacity_simple():
    res = channel_capacity(ChannelMatrix([[1.0, 0.0], [0.0, 1.0]]))
    assert res.converged
    assert res.capacity == pytest.approx(1.0, abs=1e-9)
    assert res.optimal_prior.probs.tolist() == pytest.approx([0.5, 0.5])
    res = channel_capacity(ChannelMatrix([[1.0]]))
    assert res.capacity == 0.0
    with pytest.raises(RangeError):
        channel_capacity(ChannelMatrix([[1.0]]), tol=0.0)


@pytest.mark.parametrize("p", [0.01, 0.11, 0.25, 0.49])
def test_capacity_bsc(p):
    res = channel_capacity(ChannelMatrix.binary_symmetric(p))
    assert res.converged
    assert res.capacity == pytest.approx(1.0 - binary_entropy(p), abs=1e-6)


@pytest.mark.parametrize("eps", [0.1, 0.3, 0.7])
def test_capacity_bec(eps):
    res = channel_capacity(ChannelMatrix.binary_erasure(eps))
    assert res.converged
    assert res.capacity == pytest.approx(1.0 - eps, abs=1e-6)


def test_capacity_asymmetric():
    # Z channel: input 0 is noiseless, input 1 is flipped half the time
    ch = ChannelMatrix([[1.0, 0.0], [0.5, 0.5]])
    res = channel_capacity(ch, tol=1e-12, max_iter=10000)
    assert res.converged
    # Known closed form: log2(1 + 2^(-h(q)/(1-q))) with q = 0.5
    assert res.capacity == pytest.approx(math.log2(1.25), abs=1e-6)
    assert res.capacity <= res.upper_bound + 1e-12
    assert res.optimal_prior.probs[0] > 0.5
    # The iterates never lose mutual information
    assert all(b >= a - 1e-12 for a, b in zip(res.history, res.history[1:]))


def test_capacity_no_convergence(caplog):
    ch = ChannelMatrix([[1.0, 0.0], [0.5, 0.5]])
    with caplog.at_level(logging.INFO, logger="halfcrit"):
        res = channel_capacity(ch, tol=1e-15, max_iter=2)
    assert not res.converged
    assert res.iterations == 2
    assert 0.0 <= res.capacity <= 1.0
    assert res.gap >= 1e-15
    # The reported gap is the one the iteration stopped on
    [record] = [r for r in caplog.records if "did not converge" in r.getMessage()]
    assert record.levelno == logging.INFO
    assert "gap {0:.3e}".format(res.gap) in record.getMessage()
    res = channel_capacity(ch, tol=1e-6, max_iter=10000)
    assert res.converged
    assert res.gap < 1e-6


@given(prior_and_channel())
@settings(max_examples=50, deadline=None)
def test_capacity_bounds(pc):
    prior, ch = pc
    res = channel_capacity(ch)
    ceiling = min(math.log2(ch.n_inputs), math.log2(ch.n_outputs))
    assert 0.0 <= res.capacity <= ceiling + 1e-9
    if res.converged:
        # Capacity is the supremum of the mutual information
        assert mutual_information(prior, ch) <= res.capacity + 1e-6
    assert len(res.history) == res.iterations


if __name__ == "__main__":
    # When invoked as a main module, do a verbose test
    test_entropy()
    test_binary_entropy()
    test_inverse_binary_entropy()
    test_conditional_entropy()
    test_mutual_information()
    test_capacity_simple()
    test_capacity_asymmetric()
