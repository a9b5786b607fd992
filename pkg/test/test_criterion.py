# type: ignore
"""

    test_criterion.py

    Tests for the half criterion

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

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from halfcrit import (
    BoundParams,
    CriterionInput,
    RangeError,
    binary_entropy,
    classify_branch,
    low_branch_entropy,
    relaxed_criterion,
    shannon_condition,
    strict_criterion,
    strict_criterion_from_bounds,
    strict_error_threshold,
)
from halfcrit.criterion import (
    BRANCH_A,
    BRANCH_B,
    CLAUSE_MIN_HYX,
    CLAUSE_R_F,
    STATUS_SATISFIED,
    STATUS_UNVERIFIABLE,
    STATUS_VIOLATED,
)

unit = st.floats(min_value=0.0, max_value=1.0)


def test_shannon_condition():
    c = shannon_condition(CriterionInput(r_f=0.6, min_hyx=0.3))
    assert c.satisfied
    assert c.margin == pytest.approx(0.1)
    c = shannon_condition(CriterionInput(r_f=0.5, min_hyx=0.5))
    assert not c.satisfied
    assert c.margin == 0.0
    c = shannon_condition(CriterionInput(r_f=1.0, min_hyx=0.2))
    assert not c.satisfied
    assert c.margin == pytest.approx(-0.2)


def test_branch():
    assert classify_branch(CriterionInput(r_f=0.6, min_hyx=0.3)).branch == BRANCH_A
    assert classify_branch(CriterionInput(r_f=0.2, min_hyx=0.4)).branch == BRANCH_B
    tie = classify_branch(CriterionInput(r_f=0.3, min_hyx=0.3))
    assert tie.branch == BRANCH_A and tie.tie
    v = relaxed_criterion(CriterionInput(r_f=0.3, min_hyx=0.3))
    assert any("branch A" in w for w in v.warnings)


def test_relaxed_criterion():
    v = relaxed_criterion(CriterionInput(r_f=0.6, min_hyx=0.3, max_hx=1.0))
    assert v.relaxed_satisfied
    assert v.relaxed_clause == CLAUSE_MIN_HYX
    assert v.branch == BRANCH_A
    assert v.shannon_condition
    assert v.strict_satisfied is None
    assert v.summary() == "RELAXED SATISFIED via min_hyx <= max_hx/2"

    v = relaxed_criterion(CriterionInput(r_f=0.4, min_hyx=0.7, max_hx=1.0))
    assert v.relaxed_satisfied
    assert v.relaxed_clause == CLAUSE_R_F
    assert v.branch == BRANCH_B
    assert not v.shannon_condition

    v = relaxed_criterion(CriterionInput(r_f=0.6, min_hyx=0.6, max_hx=1.0))
    assert not v.relaxed_satisfied
    assert v.relaxed_clause is None
    assert v.summary() == "VIOLATED"

    # The boundary itself satisfies the relaxed clauses
    v = relaxed_criterion(CriterionInput(r_f=0.9, min_hyx=0.5))
    assert v.relaxed_satisfied and v.margins[CLAUSE_MIN_HYX] == 0.0


def test_real_application_warning():
    v = relaxed_criterion(CriterionInput(r_f=0.4, min_hyx=0.7), real_application=True)
    assert any("r_f" in w for w in v.warnings)
    v = relaxed_criterion(CriterionInput(r_f=0.8, min_hyx=0.1), real_application=True)
    assert not v.warnings


def test_strict_criterion():
    c = strict_criterion(0.45)
    assert c.satisfied and c.margin == pytest.approx(0.05)
    assert not strict_criterion(0.5).satisfied
    assert strict_criterion(binary_entropy(0.05)).satisfied
    with pytest.raises(RangeError):
        strict_criterion(-0.1)
    v = relaxed_criterion(CriterionInput(r_f=0.6, min_hyx=0.3, max_hyx=0.45))
    assert v.strict_satisfied is True
    assert v.summary() == "RELAXED SATISFIED via min_hyx <= max_hx/2; STRICT SATISFIED"
    v = relaxed_criterion(CriterionInput(r_f=0.6, min_hyx=0.3, max_hyx=0.9))
    assert v.strict_satisfied is False
    assert v.margins["strict"] == pytest.approx(-0.4)


def test_input_validation():
    for bad in (
        dict(r_f=1.5, min_hyx=0.1),
        dict(r_f=-0.1, min_hyx=0.1),
        dict(r_f=0.5, min_hyx=-0.1),
        dict(r_f=0.5, min_hyx=0.1, max_hx=0.0),
        dict(r_f=0.5, min_hyx=0.1, max_hyx=float("nan")),
    ):
        with pytest.raises(RangeError):
            CriterionInput(**bad)
    inp = CriterionInput(r_f=0.5, min_hyx=1.2, max_hyx=1.5)
    assert inp.min_hyx == 1.0 and inp.max_hyx == 1.0
    assert len(inp.warnings) == 2


def test_error_threshold():
    t = strict_error_threshold()
    assert 0.1099 <= t <= 0.1102
    assert binary_entropy(t) == pytest.approx(0.5, abs=1e-9)
    assert strict_error_threshold(2.0) == 0.5
    with pytest.raises(RangeError):
        strict_error_threshold(0.0)


def test_implication_grid():
    # Every point satisfying the Shannon condition satisfies the relaxed criterion
    grid = np.linspace(0.0, 1.0, 101)
    failures = 0
    for r_f in grid:
        for min_hyx in grid:
            v = relaxed_criterion(CriterionInput(r_f=float(r_f), min_hyx=float(min_hyx)))
            if v.shannon_condition and not v.relaxed_satisfied:
                failures += 1
    assert failures == 0


@given(unit, unit, unit)
def test_verdict_invariants(r_f, min_hyx, max_hyx):
    v = relaxed_criterion(CriterionInput(r_f=r_f, min_hyx=min_hyx, max_hyx=max_hyx))
    assert v.relaxed_satisfied == (min_hyx <= 0.5 or r_f <= 0.5)
    assert v.strict_satisfied == (max_hyx < 0.5)
    # Flags agree with the signs of their margins
    assert v.shannon_condition == (v.margins["shannon"] > 0.0)
    assert v.strict_satisfied == (v.margins["strict"] > 0.0)
    if min_hyx <= max_hyx and v.strict_satisfied:
        assert v.relaxed_satisfied
    again = relaxed_criterion(CriterionInput(r_f=r_f, min_hyx=min_hyx, max_hyx=max_hyx))
    assert again == v


def test_strict_from_bounds():
    base = dict(e2=0.0, d=1.0, A=2.0, r=1.0, c=1.0)
    out = strict_criterion_from_bounds(
        BoundParams(m=2**20, delta=1.0, n_param=1.0, **base)
    )
    assert out.status == STATUS_SATISFIED
    assert out.bounds.e_max == pytest.approx(0.0391, abs=1e-4)
    assert out.bounds.h_e_max == pytest.approx(binary_entropy(math.sqrt(1600 / 2**20)))
    assert out.margin == pytest.approx(0.5 - out.bounds.h_e_max)
    out = strict_criterion_from_bounds(
        BoundParams(m=1024, delta=0.5, n_param=4.0, **base)
    )
    assert out.status == STATUS_UNVERIFIABLE
    assert out.satisfied is None and out.margin is None
    assert out.warnings
    out = strict_criterion_from_bounds(
        BoundParams(m=1024, delta=0.5, n_param=4.0, **dict(base, c=1e-30))
    )
    assert out.status == STATUS_SATISFIED
    assert out.bounds.h_e_max == pytest.approx(0.0, abs=1e-9)


def test_strict_from_bounds_above_half():
    # c chosen so that e_max is about 0.9, where h(e_max) is below 1/2
    p = BoundParams(e2=0.0, m=1024, d=1.0, delta=0.5, A=2.0, n_param=4.0, r=1.0, c=0.518)
    out = strict_criterion_from_bounds(p)
    assert 0.85 < out.bounds.e_max < 0.95
    assert out.bounds.h_e_max < 0.5
    assert out.status == STATUS_VIOLATED
    assert out.satisfied is False
    assert out.margin == -0.5
    assert any("exceeds 1/2" in w for w in out.warnings)


def test_low_branch_entropy():
    assert low_branch_entropy(0.0) == 0.0
    assert low_branch_entropy(0.11) == binary_entropy(0.11)
    assert low_branch_entropy(0.5) == 1.0
    assert low_branch_entropy(0.9) == 1.0
    assert low_branch_entropy(1.0) == 1.0
    with pytest.raises(RangeError):
        low_branch_entropy(1.5)


@given(unit, unit)
def test_low_branch_entropy_monotone(a, b):
    lo, hi = min(a, b), max(a, b)
    assert low_branch_entropy(lo) <= low_branch_entropy(hi) + 1e-12


if __name__ == "__main__":
    # When invoked as a main module, do a verbose test
    test_shannon_condition()
    test_branch()
    test_relaxed_criterion()
    test_strict_criterion()
    test_implication_grid()
