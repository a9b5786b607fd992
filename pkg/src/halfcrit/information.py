"""
    Halfcrit: Classifier uncertainty auditing

    Information module

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

    This module implements exact Shannon quantities for finite alphabets:
    entropy, binary entropy and its inverse, equivocation H(X|Y), noise
    entropy H(Y|X), mutual information and the capacity of a discrete
    memoryless channel by the Blahut-Arimoto iteration.

    All logarithms are base 2 and 0 log 0 is taken to be 0. Inputs are
    validated but never silently renormalized; use normalize() to turn
    counts into a distribution.

    All functions are pure and may be called from any number of threads.

"""

from typing import NamedTuple, Optional, Sequence, Tuple, Union

import logging
import math

import numpy as np
from scipy.optimize import bisect

from .basics import ValidationError, RangeError, check_probability
from .settings import Settings


logger = logging.getLogger(__name__)

ArrayLike = Union[Sequence[float], np.ndarray]

# Absolute tolerance of the bisection in inverse_binary_entropy()
_BISECT_XTOL = 1e-14


def _plogp(p: np.ndarray) -> np.ndarray:
    """Elementwise p * log2(p), with 0 log 0 = 0"""
    out = np.zeros_like(p, dtype=np.float64)
    np.log2(p, out=out, where=p > 0.0)
    return p * out


class DiscreteDistribution:

    """A probability vector over a finite alphabet"""

    __slots__ = ("_probs",)

    def __init__(self, probs: ArrayLike, *, tol: Optional[float] = None) -> None:
        p = np.array(probs, dtype=np.float64).reshape(-1)
        if p.size < 1:
            raise ValidationError("A distribution needs at least one entry")
        if not np.all(np.isfinite(p)):
            raise ValidationError("Distribution entries must be finite")
        if np.any(p < 0.0) or np.any(p > 1.0):
            bad = p[(p < 0.0) | (p > 1.0)][0]
            raise ValidationError(
                "Distribution entry {0!r} lies outside [0, 1]".format(float(bad))
            )
        tol = Settings.DISTRIBUTION_TOLERANCE if tol is None else tol
        total = float(p.sum())
        if abs(total - 1.0) > tol:
            raise ValidationError(
                "Distribution entries sum to {0!r}, not 1".format(total)
            )
        p.setflags(write=False)
        self._probs = p

    @classmethod
    def uniform(cls, k: int) -> "DiscreteDistribution":
        """The uniform distribution over k symbols"""
        if k < 1:
            raise ValidationError("Alphabet size must be at least 1")
        return cls(np.full(k, 1.0 / k))

    @property
    def probs(self) -> np.ndarray:
        """The (read-only) probability vector"""
        return self._probs

    def __len__(self) -> int:
        return self._probs.size

    def __repr__(self) -> str:
        return "DiscreteDistribution({0})".format(self._probs.tolist())


def normalize(counts: ArrayLike) -> DiscreteDistribution:
    """Convert non-negative counts (or weights) to a distribution"""
    c = np.array(counts, dtype=np.float64).reshape(-1)
    if c.size < 1 or np.any(c < 0.0) or not np.all(np.isfinite(c)):
        raise ValidationError("Counts must be finite and non-negative")
    total = c.sum()
    if total <= 0.0:
        raise ValidationError("Counts must not all be zero")
    return DiscreteDistribution(c / total)


class ChannelMatrix:

    """A discrete memoryless channel given by its row-stochastic
    transition matrix: rows are input symbols, columns output symbols,
    and entry [x, y] is P(y | x)."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Union[ArrayLike, Sequence[ArrayLike]]) -> None:
        w = np.array(rows, dtype=np.float64)
        if w.ndim != 2 or w.shape[0] < 1 or w.shape[1] < 1:
            raise ValidationError(
                "A channel matrix needs at least one row and one column"
            )
        for ix, row in enumerate(w):
            try:
                DiscreteDistribution(row)
            except ValidationError as e:
                raise ValidationError("Channel row {0}: {1}".format(ix, e))
        w.setflags(write=False)
        self._rows = w

    @classmethod
    def from_counts(cls, counts: Sequence[ArrayLike]) -> "ChannelMatrix":
        """Row-normalize a matrix of non-negative counts"""
        return cls([normalize(row).probs for row in counts])

    @classmethod
    def binary_symmetric(cls, p: float) -> "ChannelMatrix":
        """The binary symmetric channel with flip probability p"""
        p = check_probability(p)
        return cls([[1.0 - p, p], [p, 1.0 - p]])

    @classmethod
    def binary_erasure(cls, eps: float) -> "ChannelMatrix":
        """The binary erasure channel; output 1 is the erasure symbol"""
        eps = check_probability(eps, "eps")
        return cls([[1.0 - eps, eps, 0.0], [0.0, eps, 1.0 - eps]])

    @property
    def rows(self) -> np.ndarray:
        """The (read-only) transition matrix"""
        return self._rows

    @property
    def n_inputs(self) -> int:
        return self._rows.shape[0]

    @property
    def n_outputs(self) -> int:
        return self._rows.shape[1]

    def __repr__(self) -> str:
        return "ChannelMatrix({0})".format(self._rows.tolist())


class CapacityResult(NamedTuple):
    """The result of a Blahut-Arimoto capacity computation"""

    capacity: float
    optimal_prior: DiscreteDistribution
    iterations: int
    converged: bool
    # Upper bound on the capacity at exit (max_x D(W(.|x) || q))
    upper_bound: float
    # Mutual information of the prior at each iteration
    history: Tuple[float, ...]
    # Gap between the capacity bounds at the last iteration
    gap: float


def entropy(d: DiscreteDistribution) -> float:
    """Shannon entropy of a distribution, in bits"""
    h = -float(_plogp(d.probs).sum())
    return min(max(h, 0.0), math.log2(len(d)))


def binary_entropy(p: float) -> float:
    """The binary entropy function h(p), in bits"""
    p = check_probability(p)
    h = -float(_plogp(np.array([p, 1.0 - p])).sum())
    return min(max(h, 0.0), 1.0)


def inverse_binary_entropy(h: float) -> float:
    """The unique p in [0, 1/2] with binary_entropy(p) == h"""
    h = float(h)
    if not (0.0 <= h <= 1.0):
        raise RangeError("Entropy must lie in [0, 1] bits, got {0!r}".format(h))
    if h == 0.0:
        return 0.0
    if h == 1.0:
        return 0.5
    p = bisect(
        lambda x: binary_entropy(x) - h, 0.0, 0.5, xtol=_BISECT_XTOL, maxiter=200
    )
    return min(max(float(p), 0.0), 0.5)


def _check_dimensions(prior: DiscreteDistribution, ch: ChannelMatrix) -> None:
    if len(prior) != ch.n_inputs:
        raise ValidationError(
            "Prior has {0} symbols but the channel has {1} inputs".format(
                len(prior), ch.n_inputs
            )
        )


def _joint(prior: DiscreteDistribution, ch: ChannelMatrix) -> np.ndarray:
    return prior.probs[:, np.newaxis] * ch.rows


def conditional_entropy(prior: DiscreteDistribution, ch: ChannelMatrix) -> float:
    """Equivocation H(X|Y) of the channel input given its output,
    in bits, for the joint distribution prior(x) * P(y|x)"""
    _check_dimensions(prior, ch)
    joint = _joint(prior, ch)
    # H(X|Y) = H(X,Y) - H(Y); outputs of zero probability contribute 0
    h_xy = -float(_plogp(joint).sum())
    h_y = -float(_plogp(joint.sum(axis=0)).sum())
    return min(max(h_xy - h_y, 0.0), entropy(prior))


def noise_entropy(prior: DiscreteDistribution, ch: ChannelMatrix) -> float:
    """Noise entropy H(Y|X) of the channel output given its input, in bits"""
    _check_dimensions(prior, ch)
    row_entropies = -_plogp(ch.rows).sum(axis=1)
    return max(float(prior.probs @ row_entropies), 0.0)


def mutual_information(prior: DiscreteDistribution, ch: ChannelMatrix) -> float:
    """Mutual information I(X;Y) = H(X) - H(X|Y), in bits"""
    return entropy(prior) - conditional_entropy(prior, ch)


def _divergences(p: np.ndarray, w: np.ndarray) -> np.ndarray:
    """D(W(.|x) || pW) for every input x, in bits"""
    q = p @ w
    ratio = np.ones_like(w)
    np.divide(w, q[np.newaxis, :], out=ratio, where=w > 0.0)
    logs = np.zeros_like(w)
    np.log2(ratio, out=logs, where=w > 0.0)
    return (w * logs).sum(axis=1)


def channel_capacity(
    ch: ChannelMatrix, tol: Optional[float] = None, max_iter: Optional[int] = None
) -> CapacityResult:
    """Compute the capacity of a discrete memoryless channel, in bits,
    by Blahut-Arimoto iteration from the uniform prior. Iteration stops
    when the gap between the upper and lower capacity bounds drops below
    tol. Failure to converge within max_iter is reported in the result,
    not raised."""
    tol = Settings.CAPACITY_TOLERANCE if tol is None else float(tol)
    max_iter = Settings.CAPACITY_MAX_ITER if max_iter is None else int(max_iter)
    if not tol > 0.0:
        raise RangeError("Tolerance must be positive")
    if max_iter < 1:
        raise RangeError("max_iter must be at least 1")

    w = ch.rows
    ceiling = min(math.log2(ch.n_inputs), math.log2(ch.n_outputs))
    p = np.full(ch.n_inputs, 1.0 / ch.n_inputs)
    history = []
    converged = False
    upper = ceiling
    gap = math.inf
    iterations = 0
    for iterations in range(1, max_iter + 1):
        d = _divergences(p, w)
        history.append(float(p @ d))
        weights = p * np.exp2(d - d.max())
        lower = float(d.max() + math.log2(weights.sum()))
        upper = float(d.max())
        p = weights / weights.sum()
        gap = upper - lower
        logger.debug("Blahut-Arimoto iteration %d: gap %.3e", iterations, gap)
        if gap < tol:
            converged = True
            break

    capacity = float(p @ _divergences(p, w))
    capacity = min(max(capacity, 0.0), ceiling)
    if not converged:
        logger.info(
            "Blahut-Arimoto did not converge in %d iterations (gap %.3e)",
            max_iter,
            gap,
        )
    prior = DiscreteDistribution(p / p.sum())
    return CapacityResult(
        capacity=capacity,
        optimal_prior=prior,
        iterations=iterations,
        converged=converged,
        upper_bound=min(upper, ceiling),
        history=tuple(history),
        gap=gap,
    )

