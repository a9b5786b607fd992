"""
    Halfcrit: Classifier uncertainty auditing

    Criterion module

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

    This module decides the half criterion for a classifier viewed as a
    noisy channel whose transmission rate is identified with the
    Rademacher complexity R(f) of the problem:

    Shannon condition    R(f) + min H_y(x) < Max H(x)

    Relaxed criterion    min H_y(x) <= Max H(x) / 2
                      or R(f) <= Max H(x) / 2

    Strict criterion     H(e_max) < Max H(x) / 2

    The Shannon condition implies the relaxed criterion: if R(f) exceeds
    min H_y(x) (branch A) then 2 min H_y(x) < Max H(x), otherwise
    (branch B) 2 R(f) < Max H(x). The converse does not hold, so
    verdicts always report the Shannon condition separately.

    Every flag is derived from the sign of its margin, so a margin and
    its flag never disagree. The relaxed clauses are inclusive (a zero
    margin satisfies them); the Shannon condition and the strict
    criterion are strict (a zero margin fails them).

"""

from typing import Any, Dict, NamedTuple, Optional, Tuple

import dataclasses
import logging
import math

from .basics import RangeError, check_probability
from .bounds import BoundParams, BoundResult, bound_entropies
from .information import binary_entropy, inverse_binary_entropy


logger = logging.getLogger(__name__)

BRANCH_A = "A"  # R(f) > min H_y(x)
BRANCH_B = "B"  # R(f) < min H_y(x)

CLAUSE_MIN_HYX = "min_hyx"
CLAUSE_R_F = "r_f"

CLAUSE_DESCRIPTIONS = {
    CLAUSE_MIN_HYX: "min_hyx <= max_hx/2",
    CLAUSE_R_F: "r_f <= max_hx/2",
}

STATUS_SATISFIED = "satisfied"
STATUS_VIOLATED = "violated"
STATUS_UNVERIFIABLE = "unverifiable"


class Check(NamedTuple):
    satisfied: bool
    margin: float


class BranchResult(NamedTuple):
    branch: str
    tie: bool


@dataclasses.dataclass(frozen=True)
class CriterionInput:

    """Inputs of the half criterion. Entropies above max_hx are
    clamped to max_hx and the clamping is listed in warnings."""

    r_f: float
    min_hyx: float
    max_hyx: Optional[float] = None
    max_hx: float = 1.0
    warnings: Tuple[str, ...] = dataclasses.field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.max_hx) and self.max_hx > 0.0):
            raise RangeError("max_hx must be positive, got {0!r}".format(self.max_hx))
        if not (math.isfinite(self.r_f) and 0.0 <= self.r_f <= 1.0):
            raise RangeError("r_f must lie in [0, 1], got {0!r}".format(self.r_f))
        warnings = list(self.warnings)
        for name in ("min_hyx", "max_hyx"):
            val = getattr(self, name)
            if val is None:
                continue
            if not (math.isfinite(val) and val >= 0.0):
                raise RangeError(
                    "{0} must be a non-negative entropy, got {1!r}".format(name, val)
                )
            if val > self.max_hx:
                msg = "{0} = {1!r} exceeds max_hx = {2!r}; clamped".format(
                    name, val, self.max_hx
                )
                logger.warning(msg)
                warnings.append(msg)
                object.__setattr__(self, name, self.max_hx)
        object.__setattr__(self, "warnings", tuple(warnings))


@dataclasses.dataclass(frozen=True)
class CriterionVerdict:

    """Outcome of evaluating the half criterion"""

    shannon_condition: bool
    branch: str
    relaxed_satisfied: bool
    # The clause that decided the relaxed verdict, if any
    relaxed_clause: Optional[str]
    # None when no upper-bound entropy was supplied
    strict_satisfied: Optional[bool]
    margins: Dict[str, float]
    warnings: Tuple[str, ...]

    def summary(self) -> str:
        """One-line verdict, as printed by the command line tool"""
        if self.relaxed_satisfied:
            assert self.relaxed_clause is not None
            s = "RELAXED SATISFIED via {0}".format(
                CLAUSE_DESCRIPTIONS[self.relaxed_clause]
            )
        else:
            s = "VIOLATED"
        if self.strict_satisfied is not None:
            s += "; STRICT {0}".format(
                "SATISFIED" if self.strict_satisfied else "VIOLATED"
            )
        return s

    def as_dict(self) -> Dict[str, Any]:
        d = dataclasses.asdict(self)
        d["warnings"] = list(self.warnings)
        return d


def shannon_condition(inp: CriterionInput) -> Check:
    """R(f) + min H_y(x) < Max H(x)"""
    margin = inp.max_hx - inp.r_f - inp.min_hyx
    return Check(margin > 0.0, margin)


def classify_branch(inp: CriterionInput) -> BranchResult:
    """Branch A if R(f) > min H_y(x), branch B if R(f) < min H_y(x).
    A tie goes to branch A."""
    if inp.r_f == inp.min_hyx:
        return BranchResult(BRANCH_A, True)
    return BranchResult(BRANCH_A if inp.r_f > inp.min_hyx else BRANCH_B, False)


def strict_criterion(max_hyx: float, max_hx: float = 1.0) -> Check:
    """H(e_max) < Max H(x) / 2"""
    if not max_hyx >= 0.0:
        raise RangeError("max_hyx must be non-negative, got {0!r}".format(max_hyx))
    if not max_hx > 0.0:
        raise RangeError("max_hx must be positive, got {0!r}".format(max_hx))
    margin = max_hx / 2.0 - max_hyx
    return Check(margin > 0.0, margin)


def relaxed_criterion(
    inp: CriterionInput, *, real_application: bool = False
) -> CriterionVerdict:
    """Evaluate the relaxed half criterion, together with the Shannon
    condition, the branch and (if max_hyx is given) the strict criterion.
    With real_application set, a complexity at or below max_hx / 2 is
    flagged, since hard real-world problems are expected to exceed it."""
    half = inp.max_hx / 2.0
    warnings = list(inp.warnings)
    shannon = shannon_condition(inp)
    branch = classify_branch(inp)
    if branch.tie:
        msg = "r_f equals min_hyx ({0!r}); assigned to branch A".format(inp.r_f)
        logger.warning(msg)
        warnings.append(msg)

    margins = {
        "shannon": shannon.margin,
        CLAUSE_MIN_HYX: half - inp.min_hyx,
        CLAUSE_R_F: half - inp.r_f,
    }
    holds = {clause: margins[clause] >= 0.0 for clause in (CLAUSE_MIN_HYX, CLAUSE_R_F)}
    # Prefer the clause that the branch analysis predicts
    preferred = CLAUSE_MIN_HYX if branch.branch == BRANCH_A else CLAUSE_R_F
    other = CLAUSE_R_F if preferred == CLAUSE_MIN_HYX else CLAUSE_MIN_HYX
    clause = preferred if holds[preferred] else other if holds[other] else None

    if real_application and holds[CLAUSE_R_F]:
        msg = (
            "r_f = {0!r} <= max_hx/2, although complex real applications "
            "are expected to have r_f > max_hx/2".format(inp.r_f)
        )
        logger.warning(msg)
        warnings.append(msg)

    strict: Optional[bool] = None
    if inp.max_hyx is not None:
        check = strict_criterion(inp.max_hyx, inp.max_hx)
        margins["strict"] = check.margin
        strict = check.satisfied

    return CriterionVerdict(
        shannon_condition=shannon.satisfied,
        branch=branch.branch,
        relaxed_satisfied=clause is not None,
        relaxed_clause=clause,
        strict_satisfied=strict,
        margins=margins,
        warnings=tuple(warnings),
    )


def strict_error_threshold(max_hx: float = 1.0) -> float:
    """The error probability p <= 1/2 with binary entropy max_hx / 2:
    errors below it satisfy the strict criterion. For max_hx = 1 this
    is about 0.110."""
    if not 0.0 < max_hx <= 2.0:
        raise RangeError("max_hx must lie in (0, 2], got {0!r}".format(max_hx))
    return inverse_binary_entropy(max_hx / 2.0)


def low_branch_entropy(e: float) -> float:
    """Binary entropy of an error probability on its increasing branch;
    errors of 1/2 or more count as a full bit"""
    e = check_probability(e, "e")
    return binary_entropy(e) if e <= 0.5 else 1.0


class StrictOutcome(NamedTuple):
    status: str
    # None when the status is unverifiable
    satisfied: Optional[bool]
    margin: Optional[float]
    bounds: BoundResult
    error_threshold: float
    warnings: Tuple[str, ...]


def strict_criterion_from_bounds(p: BoundParams, max_hx: float = 1.0) -> StrictOutcome:
    """Evaluate the strict criterion on the entropy of the upper error
    bound. An upper bound above 1 is vacuous, and the criterion is then
    reported as unverifiable rather than decided on a clamped value.
    Upper bounds between 1/2 and 1 count as a full bit."""
    res = bound_entropies(p)
    threshold = strict_error_threshold(min(max_hx, 2.0))
    warnings = []
    if res.ordering_violated:
        warnings.append("e_min exceeds e_max")
    if res.e_max_exceeds_one:
        warnings.append(
            "e_max = {0!r} exceeds 1; the strict criterion is unverifiable".format(
                res.e_max
            )
        )
        return StrictOutcome(
            STATUS_UNVERIFIABLE, None, None, res, threshold, tuple(warnings)
        )
    if res.e_max > 0.5:
        warnings.append(
            "e_max = {0!r} exceeds 1/2; its entropy is taken as 1 bit, "
            "above the error threshold {1!r}".format(res.e_max, threshold)
        )
    check = strict_criterion(low_branch_entropy(res.e_max), max_hx)
    status = STATUS_SATISFIED if check.satisfied else STATUS_VIOLATED
    return StrictOutcome(
        status, check.satisfied, check.margin, res, threshold, tuple(warnings)
    )
