"""
    Halfcrit: Classifier uncertainty auditing

    Generalization bounds module

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

    This module evaluates a lower and an upper bound on the generalization
    error of a trained neural network classifier,

        e_min = e2 + max((d - 1) / 32m, 7 ln(1/delta) / 8m)

        e_max = e2 + sqrt(c/m * (A^2 n / r^2 * log(A/r) * log(m)^2
                                 + log(1/delta)))

    together with the binary entropies of both. Here e2 is the mean
    squared training error, m the number of training patterns, d a
    complexity parameter, delta the confidence, A the size of the network
    weights, n a network size parameter, r a margin and c a universal
    constant. "ln" is the natural logarithm; the base of "log" is
    configurable and defaults to 2.

    The planners min_samples_for_strict() and max_weight_for_strict()
    answer the practical questions of how many patterns are needed, and
    how large the weights may grow, for the entropy of the upper bound to
    stay below half the maximum source entropy.

"""

from typing import Iterable, List, NamedTuple, Optional, Tuple

import dataclasses
import logging
import math

from scipy.optimize import brentq

from .basics import ValidationError, RangeError, InvariantError
from .information import binary_entropy, inverse_binary_entropy
from .settings import Settings


logger = logging.getLogger(__name__)

# Default upper end of the sample-size search in min_samples_for_strict()
M_SEARCH_MAX = 2**40
# e_max is non-increasing in m from here on
M_MONOTONE_FROM = 8


@dataclasses.dataclass(frozen=True)
class BoundParams:

    """Parameters of the lower and upper error bounds"""

    e2: float
    m: int
    d: float
    delta: float
    A: float
    n_param: float
    r: float
    c: float = 1.0
    log_base: float = 2.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.e2 <= 1.0:
            raise RangeError("e2 must lie in [0, 1], got {0!r}".format(self.e2))
        if int(self.m) != self.m or self.m < 1:
            raise RangeError("m must be an integer >= 1, got {0!r}".format(self.m))
        if not self.d >= 1.0:
            raise RangeError("d must be >= 1, got {0!r}".format(self.d))
        if not 0.0 < self.delta <= 1.0:
            raise RangeError("delta must lie in (0, 1], got {0!r}".format(self.delta))
        if not self.A > 0.0:
            raise RangeError("A must be positive, got {0!r}".format(self.A))
        if not self.n_param >= 1.0:
            raise RangeError("n_param must be >= 1, got {0!r}".format(self.n_param))
        if not self.r > 0.0:
            raise RangeError("r must be positive, got {0!r}".format(self.r))
        if not self.c > 0.0:
            raise RangeError("c must be positive, got {0!r}".format(self.c))
        if not self.log_base > 1.0:
            raise RangeError("log_base must exceed 1, got {0!r}".format(self.log_base))
        if not self.A / self.r > 1.0:
            raise ValidationError(
                "A / r must exceed 1 (got A = {0!r}, r = {1!r})".format(self.A, self.r)
            )
        object.__setattr__(self, "m", int(self.m))

    @classmethod
    def from_settings(cls, **overrides: float) -> "BoundParams":
        """Construct parameters from the [bounds] settings, with any
        explicitly given (non-None) values taking precedence"""
        values = dict(
            e2=0.0,
            d=Settings.BOUND_D,
            delta=Settings.BOUND_DELTA,
            A=Settings.BOUND_A,
            n_param=Settings.BOUND_N_PARAM,
            r=Settings.BOUND_R,
            c=Settings.BOUND_C,
            log_base=Settings.LOG_BASE,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        if "m" not in values:
            raise ValidationError("The number of training patterns m is required")
        return cls(**values)  # type: ignore

    def replace(self, **changes: float) -> "BoundParams":
        return dataclasses.replace(self, **changes)  # type: ignore

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


class BoundResult(NamedTuple):
    e_min: float
    e_max: float
    e_max_clamped: float
    h_e_min: float
    h_e_max: float
    e_max_exceeds_one: bool
    # e_min > e_max; the ordering is not guaranteed by the bounds
    ordering_violated: bool
    params: BoundParams


def _log(x: float, base: float) -> float:
    return math.log2(x) if base == 2.0 else math.log(x) / math.log(base)


def _upper(p: BoundParams, *, m: Optional[int] = None, A: Optional[float] = None) -> float:
    """The upper bound, optionally at another m or weight size"""
    m = p.m if m is None else m
    A = p.A if A is None else A
    base = p.log_base
    radicand = (p.c / m) * (
        (A * A * p.n_param / (p.r * p.r)) * _log(A / p.r, base) * _log(m, base) ** 2
        + _log(1.0 / p.delta, base)
    )
    if radicand < 0.0:
        raise InvariantError("Negative radicand {0!r} in upper bound".format(radicand))
    return p.e2 + math.sqrt(radicand)


def e_min(p: BoundParams) -> float:
    """The lower bound on the generalization error"""
    return p.e2 + max((p.d - 1.0) / (32.0 * p.m), 7.0 * math.log(1.0 / p.delta) / (8.0 * p.m))


def e_max(p: BoundParams) -> float:
    """The upper bound on the generalization error; may exceed 1"""
    return _upper(p)


def bound_entropies(p: BoundParams) -> BoundResult:
    """Evaluate both bounds and their binary entropies"""
    lo = e_min(p)
    if lo > 1.0:
        raise ValidationError(
            "Lower error bound {0!r} exceeds 1; the parameters are degenerate".format(lo)
        )
    hi = e_max(p)
    clamped = min(max(hi, 0.0), 1.0)
    ordering_violated = lo > hi
    if ordering_violated:
        logger.warning("Lower error bound %.6g exceeds upper bound %.6g", lo, hi)
    if hi > 1.0:
        logger.info("Upper error bound %.6g exceeds 1 and is vacuous", hi)
    return BoundResult(
        e_min=lo,
        e_max=hi,
        e_max_clamped=clamped,
        h_e_min=binary_entropy(min(lo, 1.0)),
        h_e_max=binary_entropy(clamped),
        e_max_exceeds_one=hi > 1.0,
        ordering_violated=ordering_violated,
        params=p,
    )


def sweep_m(p: BoundParams, ms: Iterable[int]) -> List[Tuple[int, float, float]]:
    """(m, e_min, e_max) for each m, all other parameters fixed"""
    return [(m, e_min(p.replace(m=m)), e_max(p.replace(m=m))) for m in ms]


def _error_threshold(max_hx: float) -> float:
    return inverse_binary_entropy(min(max_hx / 2.0, 1.0))


def min_samples_for_strict(
    p: BoundParams, *, max_hx: float = 1.0, m_max: int = M_SEARCH_MAX
) -> Optional[int]:
    """Smallest m >= 8 at which the upper error bound lies below the
    error probability whose entropy is max_hx / 2, other parameters
    fixed. Returns None if no m up to m_max suffices."""
    threshold = _error_threshold(max_hx)
    lo, hi = M_MONOTONE_FROM, int(m_max)
    if _upper(p, m=lo) < threshold:
        return lo
    if _upper(p, m=hi) >= threshold:
        return None
    # Invariant: fails at lo, holds at hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _upper(p, m=mid) < threshold:
            hi = mid
        else:
            lo = mid
    return hi


def max_weight_for_strict(p: BoundParams, *, max_hx: float = 1.0) -> Optional[float]:
    """Supremum of the weight sizes A > r at which the upper error bound
    lies below the error probability whose entropy is max_hx / 2, other
    parameters fixed. Returns None if even A -> r fails."""
    threshold = _error_threshold(max_hx)

    def excess(a: float) -> float:
        return _upper(p, A=a) - threshold

    if excess(p.r) >= 0.0:
        return None
    hi = 2.0 * p.r
    for _ in range(200):
        if excess(hi) >= 0.0:
            break
        hi *= 2.0
    else:
        raise InvariantError("Could not bracket the largest admissible weight size")
    return float(brentq(excess, p.r, hi, xtol=1e-12))
