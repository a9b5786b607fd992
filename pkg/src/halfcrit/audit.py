"""
    Halfcrit: Classifier uncertainty auditing

    Audit pipeline module

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

    This module implements the end-to-end audit of a binary classifier:

    1. load a dataset from a CSV file or generate a synthetic one,
    2. optionally split off a holdout set for evaluation,
    3. train a classifier by exact empirical risk minimization, either
       a decision stump or the best member of a finite hypothesis class,
    4. tabulate the confusion matrix of true against predicted labels,
    5. view the classifier as a noisy channel from true to predicted
       label and measure its equivocation H(X|Y) and capacity,
    6. estimate the Rademacher complexity of the hypothesis class,
    7. decide the half criterion, and optionally the strict criterion
       on the upper generalization error bound,

    and emits a JSON report that carries every input needed to recompute
    its own verdicts (see verify_report()).

    Identical configurations, seeds included, produce identical reports
    apart from the timestamp field.

"""

from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import csv
import dataclasses
import io
import json
import logging
import math
from contextlib import contextmanager
from datetime import datetime, timezone

import numpy as np
from typing_extensions import Literal, Protocol, TypedDict

from .basics import (
    AuditError,
    RangeError,
    ValidationError,
    JSON_DIGITS,
    format_number,
)
from .bounds import BoundParams, sweep_m
from .criterion import (
    CriterionInput,
    low_branch_entropy,
    relaxed_criterion,
    strict_criterion_from_bounds,
    strict_error_threshold,
)
from .fileio import read_dataset_csv, read_sign_matrix_csv, write_locked
from .information import (
    ChannelMatrix,
    DiscreteDistribution,
    binary_entropy,
    channel_capacity,
    conditional_entropy,
    entropy,
    inverse_binary_entropy,
    mutual_information,
    noise_entropy,
    normalize,
)
from .rademacher import (
    METHOD_EXACT,
    METHOD_MONTE_CARLO,
    FiniteClass,
    RademacherEstimate,
    StumpClass,
    cut_positions,
    exact_rademacher,
    mc_rademacher,
)
from .settings import Settings


logger = logging.getLogger(__name__)

# Version of the report layout
REPORT_SCHEMA = "halfcrit.audit/1"

# Labels in the order of confusion matrix rows and columns
LABELS = (-1, 1)

# The m grid of the exported bound curves
CURVE_MS = tuple(2**k for k in range(3, 21))


@dataclasses.dataclass(frozen=True, eq=False)
class Dataset:

    """A labelled binary classification dataset"""

    features: np.ndarray
    labels: np.ndarray
    name: str = "dataset"

    def __post_init__(self) -> None:
        x = np.asarray(self.features, dtype=np.float64)
        if x.ndim == 1:
            x = x[:, np.newaxis]
        y = np.asarray(self.labels)
        if x.ndim != 2 or y.ndim != 1 or x.shape[0] != y.size:
            raise ValidationError(
                "Features must be an n x k matrix and labels a vector of length n"
            )
        if y.size < 2:
            raise ValidationError("A dataset needs at least 2 examples")
        if x.shape[1] < 1:
            raise ValidationError("A dataset needs at least one feature")
        if not np.all(np.isfinite(x)):
            raise ValidationError("Feature values must be finite")
        if not np.all((y == 1) | (y == -1)):
            raise ValidationError("Labels must be -1 or +1")
        x = x.copy()
        y = y.astype(np.int64)
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "features", x)
        object.__setattr__(self, "labels", y)

    @property
    def n(self) -> int:
        return self.labels.size

    @property
    def k(self) -> int:
        return self.features.shape[1]

    @property
    def n_positive(self) -> int:
        return int((self.labels == 1).sum())

    @property
    def n_negative(self) -> int:
        return int((self.labels == -1).sum())

    def subset(self, indices: np.ndarray, name: str) -> "Dataset":
        return Dataset(self.features[indices], self.labels[indices], name)

    def summary(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "n_negative": self.n_negative,
            "n_positive": self.n_positive,
        }


def load_dataset(path: str) -> Dataset:
    """Load a dataset from a CSV file with a header row and a final
    'label' column"""
    features, labels, _ = read_dataset_csv(path)
    return Dataset(features, labels, path)


def generate_gaussian_1d(
    n: int, separation: float, label_noise: float, seed: int
) -> Dataset:
    """Two unit-variance Gaussian classes of n/2 points each, with means
    separation apart, labels -1 (left) and +1 (right), each label
    flipped independently with probability label_noise"""
    if int(n) != n or n < 2 or n % 2:
        raise ValidationError("n must be an even integer >= 2, got {0!r}".format(n))
    if not (math.isfinite(separation) and separation >= 0.0):
        raise RangeError("separation must be >= 0, got {0!r}".format(separation))
    if not 0.0 <= label_noise <= 0.5:
        raise RangeError("label_noise must lie in [0, 0.5], got {0!r}".format(label_noise))
    if seed is None or int(seed) < 0:
        raise RangeError("A non-negative integer seed is required")
    n = int(n)
    half = n // 2
    rng = np.random.default_rng(int(seed))
    x = np.concatenate(
        (
            rng.normal(-separation / 2.0, 1.0, half),
            rng.normal(separation / 2.0, 1.0, half),
        )
    )
    y = np.concatenate((np.full(half, -1), np.full(half, 1)))
    flips = rng.random(n) < label_noise
    y[flips] = -y[flips]
    name = "gaussian_1d(n={0}, separation={1!r}, label_noise={2!r}, seed={3})".format(
        n, float(separation), float(label_noise), int(seed)
    )
    return Dataset(x, y, name)


class Classifier(Protocol):
    def predict(self, data: Dataset) -> np.ndarray: ...

    def describe(self) -> Dict[str, Any]: ...


class StumpModel(NamedTuple):

    """Predicts polarity if x[feature_index] > threshold, else -polarity"""

    feature_index: int
    threshold: float
    polarity: int

    def predict(self, data: Dataset) -> np.ndarray:
        if not 0 <= self.feature_index < data.k:
            raise ValidationError(
                "Stump uses feature {0} but the data has {1} features".format(
                    self.feature_index, data.k
                )
            )
        x = data.features[:, self.feature_index]
        return np.where(x > self.threshold, self.polarity, -self.polarity)

    def describe(self) -> Dict[str, Any]:
        return {
            "kind": "stump",
            "feature_index": self.feature_index,
            "threshold": self.threshold,
            "polarity": self.polarity,
        }


class FiniteClassModel(NamedTuple):

    """The member of a finite class with the fewest training errors;
    its labels are tied to the points of the training data"""

    row_index: int
    labels: Tuple[int, ...]
    class_size: int

    def predict(self, data: Dataset) -> np.ndarray:
        if data.n != len(self.labels):
            raise ValidationError(
                "Hypothesis labels {0} points but the data has {1}".format(
                    len(self.labels), data.n
                )
            )
        return np.array(self.labels, dtype=np.int64)

    def describe(self) -> Dict[str, Any]:
        return {
            "kind": "finite",
            "row_index": self.row_index,
            "class_size": self.class_size,
        }


def _require_both_labels(data: Dataset) -> None:
    if data.n_positive == 0 or data.n_negative == 0:
        raise ValidationError(
            "Training data '{0}' contains only one label".format(data.name)
        )


def _split_threshold(xs: np.ndarray, k: int) -> float:
    """A threshold t with x > t false for the first k sorted points and
    true for the rest"""
    if k == 0:
        t = float(xs[0]) - 1.0
        return t if t < xs[0] else float(np.nextafter(xs[0], -np.inf))
    if k == xs.size:
        return float(xs[-1]) + 1.0
    lo, hi = float(xs[k - 1]), float(xs[k])
    # The midpoint can round onto hi for neighbouring floats
    t = lo + (hi - lo) / 2.0
    return t if lo <= t < hi else lo


def train_stump(data: Dataset) -> StumpModel:
    """Exact empirical risk minimizer over all stumps, by one sorted scan
    per feature. Ties go to the lowest feature index, then the lowest
    threshold, then polarity +1."""
    _require_both_labels(data)
    best: Optional[Tuple[int, StumpModel]] = None
    for j in range(data.k):
        order = np.argsort(data.features[:, j], kind="stable")
        xs = data.features[order, j]
        ys = data.labels[order]
        cuts = cut_positions(xs)
        # A cut at k predicts -polarity for the first k sorted points
        pos_before = np.concatenate(([0], np.cumsum(ys == 1)))[cuts]
        neg_before = np.concatenate(([0], np.cumsum(ys == -1)))[cuts]
        errors_plus = pos_before + (data.n_negative - neg_before)
        errors = np.column_stack((errors_plus, data.n - errors_plus)).reshape(-1)
        ix = int(np.argmin(errors))
        if best is not None and errors[ix] >= best[0]:
            continue
        threshold = _split_threshold(xs, int(cuts[ix // 2]))
        best = (int(errors[ix]), StumpModel(j, threshold, 1 if ix % 2 == 0 else -1))
    assert best is not None
    logger.debug("Best stump %r with %d training errors", best[1], best[0])
    return best[1]


def train_finite(cls: FiniteClass, data: Dataset) -> FiniteClassModel:
    """The hypothesis of a finite class with the fewest training errors,
    lowest row index on ties"""
    _require_both_labels(data)
    if cls.n_points != data.n:
        raise ValidationError(
            "Finite class covers {0} points but the data has {1}".format(
                cls.n_points, data.n
            )
        )
    errors = (cls.values != data.labels[np.newaxis, :]).sum(axis=1)
    ix = int(np.argmin(errors))
    return FiniteClassModel(ix, tuple(int(v) for v in cls.values[ix]), cls.size)


class ConfusionMatrix(NamedTuple):

    """Counts of (true, predicted) label pairs; rows and columns are
    ordered as LABELS, i.e. -1 first"""

    counts: Tuple[Tuple[int, int], Tuple[int, int]]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    @property
    def errors(self) -> int:
        return self.counts[0][1] + self.counts[1][0]

    @property
    def error_rate(self) -> float:
        return self.errors / self.total


def make_confusion(counts: Sequence[Sequence[int]]) -> ConfusionMatrix:
    """Validate and wrap a 2 x 2 matrix of counts"""
    c = np.asarray(counts)
    if c.shape != (2, 2) or np.any(c < 0) or np.any(c != np.round(c)):
        raise ValidationError("A confusion matrix holds 2 x 2 non-negative counts")
    if c.sum() < 1:
        raise ValidationError("A confusion matrix must hold at least one count")
    rows = tuple(tuple(int(v) for v in row) for row in c)
    return ConfusionMatrix(rows)  # type: ignore


def confusion(model: Classifier, data: Dataset) -> ConfusionMatrix:
    """Tabulate true against predicted labels"""
    predicted = model.predict(data)
    counts = [
        [int(np.sum((data.labels == t) & (predicted == p))) for p in LABELS]
        for t in LABELS
    ]
    return make_confusion(counts)


class ChannelView(NamedTuple):
    prior: DiscreteDistribution
    channel: ChannelMatrix
    # The true labels that remain as channel inputs
    inputs: Tuple[int, ...]
    warnings: Tuple[str, ...]


def channel_view(cm: ConfusionMatrix) -> ChannelView:
    """View a classifier as a channel from true to predicted label.
    True labels that never occur are dropped from the input alphabet."""
    counts = np.array(cm.counts, dtype=np.float64)
    if counts.sum() <= 0.0:
        raise ValidationError("Cannot view an empty confusion matrix as a channel")
    keep = counts.sum(axis=1) > 0
    warnings = []
    for label, kept in zip(LABELS, keep):
        if not kept:
            msg = "True label {0:+d} never occurs; dropped from the channel".format(label)
            logger.warning(msg)
            warnings.append(msg)
    counts = counts[keep]
    return ChannelView(
        prior=normalize(counts.sum(axis=1)),
        channel=ChannelMatrix.from_counts(counts),
        inputs=tuple(label for label, kept in zip(LABELS, keep) if kept),
        warnings=tuple(warnings),
    )


GaussianSpec = NamedTuple(
    "GaussianSpec",
    [("n", int), ("separation", float), ("label_noise", float)],
)


@dataclasses.dataclass(frozen=True)
class AuditConfig:

    """Configuration of one audit run. Exactly one of dataset_path and
    gaussian must be given; class_path None selects the stump class.
    A seed is required whenever anything random happens."""

    dataset_path: Optional[str] = None
    gaussian: Optional[GaussianSpec] = None
    class_path: Optional[str] = None
    method: Literal["exact", "monte_carlo"] = METHOD_MONTE_CARLO
    draws: Optional[int] = None
    seed: Optional[int] = None
    workers: Optional[int] = None
    holdout: Optional[float] = None
    bounds: Optional[BoundParams] = None
    real_application: bool = False
    max_hx: Optional[float] = None

    def __post_init__(self) -> None:
        if (self.dataset_path is None) == (self.gaussian is None):
            raise ValidationError(
                "Specify exactly one of a dataset file and a dataset generator"
            )
        if self.method not in (METHOD_EXACT, METHOD_MONTE_CARLO):
            raise ValidationError("Unknown estimation method '{0}'".format(self.method))
        stochastic = (
            self.gaussian is not None
            or self.method == METHOD_MONTE_CARLO
            or self.holdout is not None
        )
        if stochastic and self.seed is None:
            raise ValidationError("A seed is required for reproducible results")
        if self.holdout is not None:
            if not 0.0 < self.holdout < 1.0:
                raise RangeError("holdout fraction must lie in (0, 1)")
            if self.class_path is not None:
                raise ValidationError(
                    "A finite class is tied to the training points; "
                    "holdout evaluation is not possible"
                )

    @property
    def effective_draws(self) -> int:
        return Settings.AUDIT_DRAWS if self.draws is None else self.draws

    @property
    def effective_max_hx(self) -> float:
        return Settings.MAX_HX if self.max_hx is None else self.max_hx

    def as_dict(self) -> Dict[str, Any]:
        d = dataclasses.asdict(self)
        d["gaussian"] = None if self.gaussian is None else self.gaussian._asdict()
        d["draws"] = self.effective_draws if self.method == METHOD_MONTE_CARLO else None
        d["max_hx"] = self.effective_max_hx
        return d


class AuditReport(TypedDict):
    schema: str
    version: str
    timestamp: str
    config: Dict[str, Any]
    settings: Dict[str, Any]
    dataset: Dict[str, Any]
    model: Dict[str, Any]
    evaluation: Dict[str, Any]
    channel: Dict[str, Any]
    rademacher: Dict[str, Any]
    criterion: Dict[str, Any]
    bounds: Optional[Dict[str, Any]]
    warnings: List[str]


@contextmanager
def _stage(name: str) -> Iterator[None]:
    """Run a pipeline stage, reporting any failure with the stage name"""
    logger.info("Audit stage: %s", name)
    try:
        yield
    except AuditError:
        raise
    except Exception as e:
        raise AuditError(name, str(e)) from e


def _split(data: Dataset, fraction: float, seed: int) -> Tuple[Dataset, Dataset]:
    """Split into (train, evaluation) by a seeded shuffle"""
    n_eval = int(round(data.n * fraction))
    if not 1 <= n_eval <= data.n - 2:
        raise ValidationError(
            "Holdout fraction {0!r} leaves no room for training or evaluation "
            "on {1} examples".format(fraction, data.n)
        )
    perm = np.random.default_rng(seed).permutation(data.n)
    eval_ix = np.sort(perm[:n_eval])
    train_ix = np.sort(perm[n_eval:])
    return (
        data.subset(train_ix, data.name + " [train]"),
        data.subset(eval_ix, data.name + " [holdout]"),
    )


def _bounds_section(p: BoundParams, max_hx: float) -> Dict[str, Any]:
    outcome = strict_criterion_from_bounds(p, max_hx)
    res = outcome.bounds
    return {
        "params": p.as_dict(),
        "e_min": res.e_min,
        "e_max": res.e_max,
        "e_max_clamped": res.e_max_clamped,
        "h_e_min": res.h_e_min,
        "h_e_max": res.h_e_max,
        "e_max_exceeds_one": res.e_max_exceeds_one,
        "ordering_violated": res.ordering_violated,
        "strict_status": outcome.status,
        "strict_margin": outcome.margin,
        "error_threshold": outcome.error_threshold,
        "warnings": list(outcome.warnings),
    }


def run_audit(config: AuditConfig) -> AuditReport:
    """Run the complete audit pipeline and return its report.
    Any failure raises AuditError naming the stage; no partial
    report is ever returned."""
    from . import __version__

    warnings: List[str] = []
    max_hx = config.effective_max_hx

    with _stage("load"):
        if config.gaussian is not None:
            assert config.seed is not None
            g = config.gaussian
            data = generate_gaussian_1d(g.n, g.separation, g.label_noise, config.seed)
        else:
            assert config.dataset_path is not None
            data = load_dataset(config.dataset_path)
        cls: Optional[FiniteClass] = None
        if config.class_path is not None:
            cls = FiniteClass(read_sign_matrix_csv(config.class_path))

    with _stage("split"):
        if config.holdout is not None:
            assert config.seed is not None
            train, evaluation = _split(data, config.holdout, config.seed)
        else:
            train = evaluation = data

    with _stage("train"):
        model: Classifier = (
            train_stump(train) if cls is None else train_finite(cls, train)
        )

    with _stage("confusion"):
        cm = confusion(model, evaluation)
        error_rate = cm.error_rate
        error_entropy = binary_entropy(error_rate)
        if error_rate > 0.5:
            msg = (
                "Error rate {0!r} exceeds 1/2; the strict criterion counts it "
                "as a full bit".format(error_rate)
            )
            logger.warning(msg)
            warnings.append(msg)

    with _stage("channel"):
        view = channel_view(cm)
        warnings.extend(view.warnings)
        h_x = entropy(view.prior)
        h_y_x = conditional_entropy(view.prior, view.channel)

    with _stage("capacity"):
        capacity = channel_capacity(view.channel)

    with _stage("rademacher"):
        oracle = StumpClass(train.features) if cls is None else cls
        if config.method == METHOD_EXACT:
            estimate: RademacherEstimate = exact_rademacher(oracle, train.n)
        else:
            assert config.seed is not None
            estimate = mc_rademacher(
                oracle,
                train.n,
                config.effective_draws,
                config.seed,
                workers=config.workers,
            )
        r_f = min(max(estimate.mean, 0.0), 1.0)
        if r_f != estimate.mean:
            msg = "Rademacher estimate {0!r} clamped to {1!r}".format(
                estimate.mean, r_f
            )
            logger.warning(msg)
            warnings.append(msg)

    with _stage("criterion"):
        inp = CriterionInput(
            r_f=r_f,
            min_hyx=h_y_x,
            max_hyx=low_branch_entropy(error_rate),
            max_hx=max_hx,
        )
        verdict = relaxed_criterion(inp, real_application=config.real_application)
        warnings.extend(verdict.warnings)

    bounds: Optional[Dict[str, Any]] = None
    if config.bounds is not None:
        with _stage("bounds"):
            bounds = _bounds_section(config.bounds, max_hx)
            warnings.extend(bounds["warnings"])

    with _stage("report"):
        report = AuditReport(
            schema=REPORT_SCHEMA,
            version=__version__,
            timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            config=config.as_dict(),
            settings=Settings.snapshot(),
            dataset=dict(
                data.summary(),
                evaluation="in_sample" if config.holdout is None else "holdout",
                n_train=train.n,
                n_eval=evaluation.n,
            ),
            model=model.describe(),
            evaluation={
                "confusion": [list(row) for row in cm.counts],
                "error_rate": error_rate,
                "error_entropy": error_entropy,
                "error_threshold": strict_error_threshold(min(max_hx, 2.0)),
            },
            channel={
                "inputs": list(view.inputs),
                "prior": view.prior.probs.tolist(),
                "rows": view.channel.rows.tolist(),
                "h_x": h_x,
                "equivocation": h_y_x,
                "noise_entropy": noise_entropy(view.prior, view.channel),
                "mutual_information": mutual_information(view.prior, view.channel),
                "capacity": capacity.capacity,
                "capacity_prior": capacity.optimal_prior.probs.tolist(),
                "capacity_iterations": capacity.iterations,
                "capacity_converged": capacity.converged,
            },
            rademacher={
                "hypothesis_class": "stump" if cls is None else "finite",
                "mean": estimate.mean,
                "std_error": estimate.std_error,
                "draws": estimate.draws,
                "seed": estimate.seed,
                "method": estimate.method,
            },
            criterion={
                "input": {
                    "r_f": inp.r_f,
                    "min_hyx": inp.min_hyx,
                    "max_hyx": inp.max_hyx,
                    "max_hx": inp.max_hx,
                },
                "real_application": config.real_application,
                "verdict": verdict.as_dict(),
                "summary": verdict.summary(),
            },
            bounds=bounds,
            warnings=warnings,
        )
        problems = verify_report(report)
        if problems:
            raise AuditError("report", "; ".join(problems))
    logger.info("Audit complete: %s", verdict.summary())
    return report


def _differs(recorded: Any, recomputed: Any) -> bool:
    if isinstance(recomputed, dict):
        return not isinstance(recorded, dict) or any(
            _differs(recorded.get(k), v) for k, v in recomputed.items()
        )
    if isinstance(recomputed, (list, tuple)):
        return (
            not isinstance(recorded, (list, tuple))
            or len(recorded) != len(recomputed)
            or any(_differs(a, b) for a, b in zip(recorded, recomputed))
        )
    return recorded != recomputed


def verify_report(report: Union[AuditReport, Dict[str, Any]]) -> List[str]:
    """Recompute the verdicts and derived quantities of a report from
    its own recorded inputs. Returns a list of discrepancies, empty if
    the report is self-consistent."""
    problems: List[str] = []
    try:
        cm = make_confusion(report["evaluation"]["confusion"])
        error_rate = cm.error_rate
        if _differs(report["evaluation"]["error_rate"], error_rate):
            problems.append("error_rate does not match the confusion matrix")
        error_entropy = binary_entropy(error_rate)
        if _differs(report["evaluation"]["error_entropy"], error_entropy):
            problems.append("error_entropy does not match error_rate")

        view = channel_view(cm)
        h_y_x = conditional_entropy(view.prior, view.channel)
        channel = report["channel"]
        if _differs(channel["equivocation"], h_y_x):
            problems.append("equivocation does not match the confusion matrix")
        if abs(channel["mutual_information"] + channel["equivocation"] - channel["h_x"]) > 1e-9:
            problems.append("mutual_information + equivocation differs from h_x")

        rec = report["criterion"]["input"]
        r_f = min(max(float(report["rademacher"]["mean"]), 0.0), 1.0)
        if _differs(rec["r_f"], r_f):
            problems.append("r_f does not match the Rademacher estimate")
        if _differs(rec["min_hyx"], min(h_y_x, rec["max_hx"])):
            problems.append("min_hyx does not match the equivocation")
        if _differs(rec["max_hyx"], min(low_branch_entropy(error_rate), rec["max_hx"])):
            problems.append("max_hyx does not match the error rate")
        threshold = strict_error_threshold(min(float(rec["max_hx"]), 2.0))
        if _differs(report["evaluation"]["error_threshold"], threshold):
            problems.append("error_threshold does not match max_hx")

        inp = CriterionInput(
            r_f=float(rec["r_f"]),
            min_hyx=float(rec["min_hyx"]),
            max_hyx=None if rec["max_hyx"] is None else float(rec["max_hyx"]),
            max_hx=float(rec["max_hx"]),
        )
        verdict = relaxed_criterion(
            inp, real_application=bool(report["criterion"]["real_application"])
        ).as_dict()
        del verdict["warnings"]
        if _differs(report["criterion"]["verdict"], verdict):
            problems.append("criterion verdict does not match its inputs")

        if report["bounds"] is not None:
            params = BoundParams(**report["bounds"]["params"])
            recomputed = _bounds_section(params, float(rec["max_hx"]))
            if _differs(report["bounds"], recomputed):
                problems.append("bounds section does not match its parameters")
    except (KeyError, TypeError, ValueError) as e:
        problems.append("malformed report: {0}".format(e))
    return problems


def _encode(obj: Any, indent: int, level: int) -> str:
    """JSON encoding with reals written to JSON_DIGITS significant digits"""
    pad = "\n" + " " * (indent * (level + 1))
    end = "\n" + " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            "{0}: {1}".format(_encode(str(k), indent, level + 1), _encode(v, indent, level + 1))
            for k, v in obj.items()
        ]
        return "{" + pad + ("," + pad).join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [_encode(v, indent, level + 1) for v in obj]
        return "[" + pad + ("," + pad).join(items) + end + "]"
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        if not math.isfinite(obj):
            raise ValidationError("Reports hold finite numbers only, got {0!r}".format(obj))
        return format_number(obj, JSON_DIGITS)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    raise TypeError("Cannot encode {0!r} as JSON".format(obj))


def dumps_report(report: AuditReport, *, include_timestamp: bool = True) -> str:
    """Serialize a report to JSON text. Without the timestamp, identical
    configurations give byte-identical payloads."""
    payload: Dict[str, Any] = dict(report)
    if not include_timestamp:
        del payload["timestamp"]
    return _encode(payload, 2, 0) + "\n"


def write_report(report: AuditReport, path: str) -> None:
    """Atomically write a report as JSON"""
    write_locked(path, dumps_report(report))


def curve_rows(report: Optional[AuditReport] = None) -> List[Tuple[str, float, float]]:
    """The (curve, x, y) rows exported by emit_curves()"""
    grid = [i / 100.0 for i in range(101)]
    rows: List[Tuple[str, float, float]] = []
    rows += [("binary_entropy", p, binary_entropy(p)) for p in grid]
    rows += [("bsc_capacity", p, 1.0 - binary_entropy(p)) for p in grid]
    rows += [("inverse_binary_entropy", h, inverse_binary_entropy(h)) for h in grid]
    if report is not None and report["bounds"] is not None:
        params = BoundParams(**report["bounds"]["params"])
        sweep = sweep_m(params, CURVE_MS)
        rows += [("e_min_vs_m", float(m), lo) for m, lo, _ in sweep]
        rows += [("e_max_vs_m", float(m), hi) for m, _, hi in sweep]
    return rows


def emit_curves(path: str, report: Optional[AuditReport] = None) -> None:
    """Write the entropy, capacity and (if the report carries bound
    parameters) bound curves as a long-form CSV file"""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("curve", "x", "y"))
    for name, x, y in curve_rows(report):
        w.writerow((name, format_number(x, JSON_DIGITS), format_number(y, JSON_DIGITS)))
    write_locked(path, buf.getvalue())
