# type: ignore
"""

    test_rademacher.py

    Tests for the Rademacher complexity estimators

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

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from halfcrit import (
    EnumerationLimitError,
    FiniteClass,
    RangeError,
    StumpClass,
    ThresholdClass,
    ValidationError,
    exact_rademacher,
    mc_rademacher,
    sup_correlation_finite,
    sup_correlation_threshold,
)


def all_signs(n):
    return np.array(list(itertools.product((-1, 1), repeat=n)), dtype=np.int8)


def test_sup_correlation_finite():
    one = FiniteClass([[1, 1]])
    assert sup_correlation_finite(one, [1, 1]) == 1.0
    assert sup_correlation_finite(one, [1, -1]) == 0.0
    two = FiniteClass([[1, 1], [-1, -1]])
    assert sup_correlation_finite(two, [-1, -1]) == 1.0
    with pytest.raises(ValidationError):
        sup_correlation_finite(two, [1, 1, 1])
    with pytest.raises(ValidationError):
        sup_correlation_finite(two, [1, 0])


def test_finite_class_validation():
    with pytest.raises(ValidationError):
        FiniteClass([[1, -1], [1, -1]])
    with pytest.raises(ValidationError):
        FiniteClass([[1, 0]])
    with pytest.raises(ValidationError):
        FiniteClass([[]])
    assert FiniteClass.complete(3).size == 8


def test_sup_correlation_threshold():
    assert sup_correlation_threshold(ThresholdClass([0, 1]), [1, -1]) == 1.0
    assert sup_correlation_threshold(ThresholdClass([0, 1]), [1, 1]) == 1.0
    assert sup_correlation_threshold(ThresholdClass([0, 1, 2]), [1, -1, 1]) == pytest.approx(
        1 / 3
    )
    # Points are sorted on construction and sign vectors refer to sorted order
    tc = ThresholdClass([2.0, 0.0, 1.0])
    assert tc.points.tolist() == [0.0, 1.0, 2.0]
    with pytest.raises(ValidationError):
        sup_correlation_threshold(tc, [1, 1])
    # A threshold labeling in sorted order, but not in the given order
    tc = ThresholdClass([3.0, 0.0, 1.0, 2.0])
    assert sup_correlation_threshold(tc, [-1, -1, 1, 1]) == 1.0
    assert sup_correlation_threshold(tc, [-1, 1, 1, -1]) == 0.5


def test_threshold_duplicates():
    # Equal points always get the same label
    tc = ThresholdClass([1.0, 1.0])
    assert sup_correlation_threshold(tc, [1, -1]) == 0.0
    assert tc.induced_class().size == 2
    assert exact_rademacher(tc, 2).mean == pytest.approx(0.5)


def test_exact_rademacher():
    assert exact_rademacher(FiniteClass([[1]]), 1).mean == 0.0
    for n in range(1, 5):
        est = exact_rademacher(FiniteClass.complete(n), n)
        assert est.mean == 1.0
        assert est.std_error == 0.0
        assert est.draws == 2**n
        assert est.method == "exact"
    assert exact_rademacher(FiniteClass([[1, 1], [-1, -1]]), 2).mean == pytest.approx(0.5)
    # Six of the eight labelings of three distinct points are thresholds
    assert exact_rademacher(ThresholdClass([0, 1, 2]), 3).mean == pytest.approx(5 / 6)
    with pytest.raises(EnumerationLimitError):
        exact_rademacher(FiniteClass([[1] * 21]), 21)
    with pytest.raises(EnumerationLimitError):
        exact_rademacher(FiniteClass([[1] * 5]), 5, max_n=4)
    with pytest.raises(ValidationError):
        exact_rademacher(FiniteClass([[1, 1]]), 3)


def test_callable_oracle():
    cls = FiniteClass([[1, 1], [-1, -1]])
    est = exact_rademacher(lambda sigma: abs(int(np.sum(sigma))) / 2, 2)
    assert est.mean == exact_rademacher(cls, 2).mean


def test_monotone_in_class():
    small = FiniteClass([[1, 1, -1], [-1, 1, 1]])
    large = FiniteClass([[1, 1, -1], [-1, 1, 1], [1, -1, 1]])
    assert exact_rademacher(large, 3).mean >= exact_rademacher(small, 3).mean


def test_mc_rademacher():
    est = mc_rademacher(FiniteClass([[1] * 8]), 8, 10000, seed=3)
    assert abs(est.mean) <= 3 * est.std_error
    est = mc_rademacher(FiniteClass.complete(6), 6, 100, seed=5)
    assert est.mean == 1.0
    assert est.std_error == 0.0
    assert est.method == "monte_carlo"
    assert (est.draws, est.seed) == (100, 5)
    est = mc_rademacher(FiniteClass([[1, 1], [-1, -1]]), 2, 10000, seed=11)
    assert abs(est.mean - 0.5) <= 3 * est.std_error
    with pytest.raises(ValidationError):
        mc_rademacher(FiniteClass([[1]]), 1, 1, seed=1)
    with pytest.raises(RangeError):
        mc_rademacher(FiniteClass([[1]]), 1, 10, seed=-1)


def test_mc_determinism():
    tc = ThresholdClass(np.linspace(0.0, 1.0, 30))
    a = mc_rademacher(tc, 30, 500, seed=42)
    b = mc_rademacher(tc, 30, 500, seed=42)
    c = mc_rademacher(tc, 30, 500, seed=42, workers=4)
    d = mc_rademacher(tc, 30, 500, seed=43)
    assert a == b
    assert a == c
    assert a.mean != d.mean


def test_mc_against_exact():
    rng = np.random.default_rng(2024)
    hits = 0
    for trial in range(20):
        n = int(rng.integers(2, 11))
        k = int(rng.integers(1, 17))
        rows = np.unique(2 * rng.integers(0, 2, size=(k, n)) - 1, axis=0)
        cls = FiniteClass(rows)
        exact = exact_rademacher(cls, n)
        est = mc_rademacher(cls, n, 10000, seed=trial)
        if abs(est.mean - exact.mean) <= 3 * est.std_error + 1e-12:
            hits += 1
    assert hits >= 19


@pytest.mark.parametrize("seed", range(5))
def test_threshold_oracle_matches_enumeration(seed):
    rng = np.random.default_rng(seed)
    n = 12
    points = rng.normal(size=n)
    tc = ThresholdClass(points)
    labelings = tc.induced_class()
    signs = all_signs(n)
    assert np.array_equal(tc.batch(signs), labelings.batch(signs))


@given(
    st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=7),
    st.data(),
)
@settings(max_examples=100, deadline=None)
def test_threshold_oracle_property(points, data):
    tc = ThresholdClass(points)
    n = len(points)
    sigma = data.draw(st.lists(st.sampled_from((-1, 1)), min_size=n, max_size=n))
    value = sup_correlation_threshold(tc, sigma)
    assert value == sup_correlation_finite(tc.induced_class(), sigma)
    # The class is closed under negation
    assert 0.0 <= value <= 1.0


def test_stump_class():
    # A single sorted feature gives the threshold class
    x = np.linspace(-1.0, 1.0, 8)
    signs = all_signs(8)
    assert np.array_equal(StumpClass(x).batch(signs), ThresholdClass(x).batch(signs))
    # Sign vectors refer to rows, whatever their order
    perm = np.array([3, 0, 7, 1, 6, 2, 5, 4])
    shuffled = StumpClass(x[perm])
    assert np.array_equal(
        shuffled.batch(signs[:, perm]), ThresholdClass(x).batch(signs)
    )
    # More features can only increase the complexity
    rng = np.random.default_rng(0)
    two = np.column_stack((x, rng.normal(size=8)))
    assert np.all(StumpClass(two).batch(signs) >= StumpClass(x).batch(signs))
    assert StumpClass(two).n_features == 2


if __name__ == "__main__":
    # When invoked as a main module, do a verbose test
    test_sup_correlation_finite()
    test_sup_correlation_threshold()
    test_exact_rademacher()
    test_mc_rademacher()
    test_mc_determinism()
