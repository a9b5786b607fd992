"""
    Halfcrit: Classifier uncertainty auditing

    Rademacher complexity module

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

    This module estimates the empirical Rademacher complexity

        R(F) = E_sigma [ (1/n) sup_{f in F} sum_i sigma_i f(x_i) ]

    of a class F of {-1, +1} valued functions on n sample points.

    The supremum is delegated to an oracle. Three exact oracles are
    provided: FiniteClass (explicit labelings), ThresholdClass (all
    1-D thresholds of both polarities) and StumpClass (axis-aligned
    stumps over several features). Any callable from a sign vector to
    a real can also serve as an oracle.

    The expectation is either computed exactly by enumerating all 2^n
    sign vectors, or estimated by Monte-Carlo. Monte-Carlo draw i takes
    its sign vector from a random substream derived from (seed, i), and
    the mean is reduced in draw order, so the estimate is bit-identical
    whatever the number of worker threads.

"""

from typing import Callable, List, NamedTuple, Optional, Sequence, Union

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import numpy as np
from typing_extensions import Protocol

from .basics import ValidationError, RangeError, EnumerationLimitError
from .settings import Settings


logger = logging.getLogger(__name__)

METHOD_EXACT = "exact"
METHOD_MONTE_CARLO = "monte_carlo"

SignVector = np.ndarray


class HypothesisOracle(Protocol):

    """Returns the best sign correlation achievable by a hypothesis
    class against sign vectors on its n_points sample points.
    Implementations must be safe to call concurrently."""

    n_points: int

    def __call__(self, sigma: SignVector) -> float: ...

    def batch(self, signs: np.ndarray) -> np.ndarray: ...


class RademacherEstimate(NamedTuple):
    mean: float
    std_error: float
    draws: int
    seed: Optional[int]
    method: str


def as_sign_vector(values: Union[Sequence[int], np.ndarray]) -> SignVector:
    """Validate and convert a sequence of -1/+1 values to a sign vector"""
    a = np.asarray(values)
    if a.ndim != 1 or a.size < 1:
        raise ValidationError("A sign vector must be a non-empty 1-D sequence")
    if not np.all((a == 1) | (a == -1)):
        raise ValidationError("Sign vector entries must be -1 or +1")
    return a.astype(np.int64)


def _check_length(sigma: SignVector, n: int) -> None:
    if sigma.shape[-1] != n:
        raise ValidationError(
            "Sign vector has length {0}, expected {1}".format(sigma.shape[-1], n)
        )


class FiniteClass:

    """A finite hypothesis class given as a matrix of -1/+1 labels,
    one row per hypothesis and one column per sample point"""

    def __init__(self, values: Union[Sequence[Sequence[int]], np.ndarray]) -> None:
        v = np.asarray(values)
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise ValidationError(
                "A finite class needs at least one hypothesis and one point"
            )
        if not np.all((v == 1) | (v == -1)):
            raise ValidationError("Hypothesis labels must be -1 or +1")
        if np.unique(v, axis=0).shape[0] != v.shape[0]:
            raise ValidationError("A finite class must not contain duplicate rows")
        self._values = v.astype(np.int64)
        self._values.setflags(write=False)
        self.n_points: int = v.shape[1]

    @classmethod
    def complete(cls, n: int) -> "FiniteClass":
        """The class of all 2^n labelings of n points"""
        return cls(_all_sign_vectors(n))

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def size(self) -> int:
        """Number of hypotheses in the class"""
        return self._values.shape[0]

    def __call__(self, sigma: SignVector) -> float:
        return sup_correlation_finite(self, sigma)

    def batch(self, signs: np.ndarray) -> np.ndarray:
        _check_length(signs, self.n_points)
        best = (signs.astype(np.int64) @ self._values.T).max(axis=1)
        return best / self.n_points


def cut_positions(sorted_points: np.ndarray) -> np.ndarray:
    """Indices k such that a threshold can separate the first k sorted
    points from the rest: 0, n, and every change of value"""
    n = sorted_points.size
    changes = np.flatnonzero(sorted_points[1:] != sorted_points[:-1]) + 1
    return np.concatenate(([0], changes, [n]))


def _threshold_sup(signs: np.ndarray, cuts: np.ndarray) -> np.ndarray:
    """Best correlation over thresholds and both polarities, for sign
    vectors given in ascending point order. A threshold at cut k labels
    the first k points -1 and the rest +1, scoring total - 2 * prefix_k;
    the opposite polarity scores the negation."""
    signs = np.atleast_2d(signs).astype(np.int64)
    prefix = np.zeros((signs.shape[0], signs.shape[1] + 1), dtype=np.int64)
    np.cumsum(signs, axis=1, out=prefix[:, 1:])
    total = prefix[:, -1:]
    best = np.abs(total - 2 * prefix[:, cuts]).max(axis=1)
    return best / signs.shape[1]


class ThresholdClass:

    """The class of 1-D threshold functions x -> sign(x - t) and
    x -> -sign(x - t) over all thresholds t. Points are stored in
    ascending order and sign vectors refer to that order."""

    def __init__(self, points: Union[Sequence[float], np.ndarray]) -> None:
        p = np.sort(np.asarray(points, dtype=np.float64).reshape(-1), kind="stable")
        if p.size < 1:
            raise ValidationError("A threshold class needs at least one point")
        if not np.all(np.isfinite(p)):
            raise ValidationError("Threshold class points must be finite")
        p.setflags(write=False)
        self._points = p
        self._cuts = cut_positions(p)
        self.n_points: int = p.size

    @property
    def points(self) -> np.ndarray:
        return self._points

    def induced_class(self) -> FiniteClass:
        """The finite class of distinct labelings that thresholds
        achieve on the points"""
        idx = np.arange(self.n_points)
        rows = [np.where(idx < k, -1, 1) for k in self._cuts]
        rows += [-r for r in rows]
        return FiniteClass(np.unique(np.array(rows), axis=0))

    def __call__(self, sigma: SignVector) -> float:
        return sup_correlation_threshold(self, sigma)

    def batch(self, signs: np.ndarray) -> np.ndarray:
        _check_length(signs, self.n_points)
        return _threshold_sup(signs, self._cuts)


class StumpClass:

    """Axis-aligned decision stumps over the columns of a feature
    matrix: the union of the threshold classes of each feature.
    Sign vectors refer to the rows of the feature matrix."""

    def __init__(self, features: np.ndarray) -> None:
        x = np.asarray(features, dtype=np.float64)
        if x.ndim == 1:
            x = x[:, np.newaxis]
        if x.ndim != 2 or x.shape[0] < 1 or x.shape[1] < 1:
            raise ValidationError("Stump class needs a non-empty feature matrix")
        self._orders: List[np.ndarray] = []
        self._cuts: List[np.ndarray] = []
        for j in range(x.shape[1]):
            order = np.argsort(x[:, j], kind="stable")
            self._orders.append(order)
            self._cuts.append(cut_positions(x[order, j]))
        self.n_points: int = x.shape[0]
        self.n_features: int = x.shape[1]

    def __call__(self, sigma: SignVector) -> float:
        sigma = as_sign_vector(sigma)
        _check_length(sigma, self.n_points)
        return float(self.batch(sigma[np.newaxis, :])[0])

    def batch(self, signs: np.ndarray) -> np.ndarray:
        signs = np.atleast_2d(signs)
        _check_length(signs, self.n_points)
        return np.max(
            [
                _threshold_sup(signs[:, order], cuts)
                for order, cuts in zip(self._orders, self._cuts)
            ],
            axis=0,
        )


class CallableOracle:

    """Adapts a plain function from sign vectors to reals into an oracle"""

    def __init__(self, func: Callable[[SignVector], float], n_points: int) -> None:
        self._func = func
        self.n_points = n_points

    def __call__(self, sigma: SignVector) -> float:
        return float(self._func(sigma))

    def batch(self, signs: np.ndarray) -> np.ndarray:
        return np.array([self._func(row) for row in signs], dtype=np.float64)


OracleLike = Union[HypothesisOracle, Callable[[SignVector], float]]


def as_oracle(oracle: OracleLike, n: int) -> HypothesisOracle:
    """Return an oracle with a batch() method for n points"""
    if hasattr(oracle, "batch"):
        n_points = getattr(oracle, "n_points", n)
        if n_points != n:
            raise ValidationError(
                "Oracle is defined on {0} points, not {1}".format(n_points, n)
            )
        return oracle  # type: ignore
    return CallableOracle(oracle, n)


def sup_correlation_finite(cls: FiniteClass, sigma: SignVector) -> float:
    """max over hypotheses f of (1/n) sum_i sigma_i f(x_i)"""
    sigma = as_sign_vector(sigma)
    _check_length(sigma, cls.n_points)
    return int((cls.values @ sigma).max()) / cls.n_points


def sup_correlation_threshold(cls: ThresholdClass, sigma: SignVector) -> float:
    """Exact supremum of the sign correlation over all thresholds and
    both polarities, by one prefix-sum scan"""
    sigma = as_sign_vector(sigma)
    _check_length(sigma, cls.n_points)
    return float(cls.batch(sigma[np.newaxis, :])[0])


@lru_cache(maxsize=8)
def _all_sign_vectors(n: int) -> np.ndarray:
    """All 2^n sign vectors as rows; bit i of the row index gives sigma_i"""
    bits = (np.arange(2**n, dtype=np.int64)[:, np.newaxis] >> np.arange(n)) & 1
    signs = (2 * bits - 1).astype(np.int8)
    signs.setflags(write=False)
    return signs


def exact_rademacher(
    sup_oracle: OracleLike, n: int, *, max_n: Optional[int] = None
) -> RademacherEstimate:
    """Exact Rademacher complexity by enumerating all 2^n sign vectors"""
    max_n = Settings.EXACT_MAX_N if max_n is None else max_n
    if n < 1:
        raise RangeError("n must be at least 1")
    if n > max_n:
        raise EnumerationLimitError(
            "Exact enumeration is limited to n <= {0} points (got {1}); "
            "use the Monte-Carlo estimator instead".format(max_n, n)
        )
    oracle = as_oracle(sup_oracle, n)
    values = oracle.batch(_all_sign_vectors(n))
    return RademacherEstimate(
        mean=float(np.mean(values)),
        std_error=0.0,
        draws=2**n,
        seed=None,
        method=METHOD_EXACT,
    )


def _draw_signs(seed: int, start: int, stop: int, n: int) -> np.ndarray:
    """Sign vectors for draws start..stop-1, each from its own substream"""
    signs = np.empty((stop - start, n), dtype=np.int8)
    for row, i in enumerate(range(start, stop)):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(i,)))
        signs[row] = 2 * rng.integers(0, 2, size=n, dtype=np.int8) - 1
    return signs


def mc_rademacher(
    sup_oracle: OracleLike,
    n: int,
    draws: int,
    seed: int,
    *,
    workers: Optional[int] = None,
) -> RademacherEstimate:
    """Monte-Carlo estimate of the Rademacher complexity, with the
    standard error of the mean"""
    if draws < 2:
        raise ValidationError("At least 2 draws are needed, got {0}".format(draws))
    if n < 1:
        raise RangeError("n must be at least 1")
    if seed is None or int(seed) < 0:
        raise RangeError("A non-negative integer seed is required")
    seed = int(seed)
    workers = Settings.WORKERS if workers is None else max(1, int(workers))
    oracle = as_oracle(sup_oracle, n)

    def evaluate(bounds: np.ndarray) -> np.ndarray:
        if bounds.size == 0:
            return np.empty(0)
        start, stop = int(bounds[0]), int(bounds[-1]) + 1
        return oracle.batch(_draw_signs(seed, start, stop, n))

    chunks = np.array_split(np.arange(draws), min(workers, draws))
    logger.debug("Evaluating %d draws in %d chunks", draws, len(chunks))
    if len(chunks) == 1:
        values = evaluate(chunks[0])
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            # map() preserves chunk order, so the reduction is in draw order
            values = np.concatenate(list(executor.map(evaluate, chunks)))

    return RademacherEstimate(
        mean=float(np.mean(values)),
        std_error=float(np.std(values, ddof=1)) / math.sqrt(draws),
        draws=draws,
        seed=seed,
        method=METHOD_MONTE_CARLO,
    )
