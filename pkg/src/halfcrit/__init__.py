"""
    Halfcrit: Classifier uncertainty auditing

    Package initialization

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

    This module exposes the Halfcrit API, i.e. the information measures,
    the Rademacher complexity estimators, the generalization error bounds,
    the half criterion and the audit pipeline, so that they are directly
    accessible via the halfcrit module object after importing it.

"""

# Expose the Halfcrit API

import importlib.metadata

from .basics import (
    HalfcritError,
    ConfigError,
    ValidationError,
    RangeError,
    EnumerationLimitError,
    InvariantError,
    AuditError,
)
from .fileio import LockError, OutputError
from .information import (
    DiscreteDistribution,
    ChannelMatrix,
    CapacityResult,
    normalize,
    entropy,
    binary_entropy,
    inverse_binary_entropy,
    conditional_entropy,
    noise_entropy,
    mutual_information,
    channel_capacity,
)
from .rademacher import (
    HypothesisOracle,
    RademacherEstimate,
    FiniteClass,
    ThresholdClass,
    StumpClass,
    sup_correlation_finite,
    sup_correlation_threshold,
    exact_rademacher,
    mc_rademacher,
)
from .bounds import (
    BoundParams,
    BoundResult,
    e_min,
    e_max,
    bound_entropies,
    sweep_m,
    min_samples_for_strict,
    max_weight_for_strict,
)
from .criterion import (
    CriterionInput,
    CriterionVerdict,
    shannon_condition,
    classify_branch,
    strict_criterion,
    relaxed_criterion,
    strict_error_threshold,
    low_branch_entropy,
    strict_criterion_from_bounds,
)
from .audit import (
    Dataset,
    StumpModel,
    FiniteClassModel,
    ConfusionMatrix,
    AuditConfig,
    AuditReport,
    GaussianSpec,
    load_dataset,
    generate_gaussian_1d,
    train_stump,
    train_finite,
    confusion,
    channel_view,
    run_audit,
    verify_report,
    write_report,
    emit_curves,
)
from .settings import Settings

__author__ = "the Halfcrit authors"
__copyright__ = "© 2026 the Halfcrit authors"
try:
    __version__ = importlib.metadata.version("halfcrit")
except importlib.metadata.PackageNotFoundError:
    # Running from a source tree that has not been installed
    __version__ = "0.0.0"

__all__ = (
    "HalfcritError",
    "ConfigError",
    "ValidationError",
    "RangeError",
    "EnumerationLimitError",
    "InvariantError",
    "AuditError",
    "LockError",
    "OutputError",
    "DiscreteDistribution",
    "ChannelMatrix",
    "CapacityResult",
    "normalize",
    "entropy",
    "binary_entropy",
    "inverse_binary_entropy",
    "conditional_entropy",
    "noise_entropy",
    "mutual_information",
    "channel_capacity",
    "HypothesisOracle",
    "RademacherEstimate",
    "FiniteClass",
    "ThresholdClass",
    "StumpClass",
    "sup_correlation_finite",
    "sup_correlation_threshold",
    "exact_rademacher",
    "mc_rademacher",
    "BoundParams",
    "BoundResult",
    "e_min",
    "e_max",
    "bound_entropies",
    "sweep_m",
    "min_samples_for_strict",
    "max_weight_for_strict",
    "CriterionInput",
    "CriterionVerdict",
    "shannon_condition",
    "classify_branch",
    "strict_criterion",
    "relaxed_criterion",
    "strict_error_threshold",
    "low_branch_entropy",
    "strict_criterion_from_bounds",
    "Dataset",
    "StumpModel",
    "FiniteClassModel",
    "ConfusionMatrix",
    "AuditConfig",
    "AuditReport",
    "GaussianSpec",
    "load_dataset",
    "generate_gaussian_1d",
    "train_stump",
    "train_finite",
    "confusion",
    "channel_view",
    "run_audit",
    "verify_report",
    "write_report",
    "emit_curves",
    "Settings",
    "__version__",
    "__author__",
    "__copyright__",
)

Settings.read("config/Halfcrit.conf")
