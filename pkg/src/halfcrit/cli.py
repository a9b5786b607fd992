"""
    Halfcrit: Classifier uncertainty auditing

    Command line interface

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

    This module implements the halfcrit command line tool, with the
    subcommands entropy, capacity, rademacher, bounds, criterion and audit.

    All numbers on stdout are written with 12 significant digits and
    identical arguments always give identical output. Diagnostics go
    to stderr. Exit codes:

        0   computation succeeded, criterion satisfied
        1   criterion violated (criterion and audit subcommands)
        2   invalid input or configuration
        3   internal error

"""

from typing import Any, Callable, List, Optional, Sequence, Union

import argparse
import logging
import sys

from .basics import (
    AuditError,
    ConfigError,
    HalfcritError,
    ValidationError,
    LOG_BASES,
    format_number,
)
from .audit import AuditConfig, GaussianSpec, emit_curves, run_audit, write_report
from .bounds import BoundParams, max_weight_for_strict, min_samples_for_strict
from .criterion import CriterionInput, relaxed_criterion, strict_criterion_from_bounds
from .fileio import read_matrix_csv, read_sign_matrix_csv
from .information import (
    ChannelMatrix,
    DiscreteDistribution,
    binary_entropy,
    channel_capacity,
    entropy,
)
from .rademacher import (
    METHOD_EXACT,
    METHOD_MONTE_CARLO,
    FiniteClass,
    ThresholdClass,
    exact_rademacher,
    mc_rademacher,
)
from .settings import Settings


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3

# Marks --holdout given without a fraction
_DEFAULT_HOLDOUT = "default"


def _holdout_fraction(s: str) -> Union[float, str]:
    # argparse also passes the const through here
    if s == _DEFAULT_HOLDOUT:
        return s
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid fraction '{0}'".format(s))


def _out(key: str, value: Any) -> None:
    """Print a key = value line"""
    if value is None:
        s = "none"
    elif isinstance(value, bool):
        s = "true" if value else "false"
    elif isinstance(value, float):
        s = format_number(value)
    elif isinstance(value, (list, tuple)):
        s = ",".join(format_number(v) for v in value)
    else:
        s = str(value)
    print("{0} = {1}".format(key, s))


def _parse_reals(s: str, what: str) -> List[float]:
    """Parse a comma-separated list of reals, naming any malformed item"""
    result = []
    for item in s.split(","):
        try:
            result.append(float(item.strip()))
        except ValueError:
            raise ValidationError("Malformed {0} value '{1}'".format(what, item.strip()))
    return result


def _require_seed(args: argparse.Namespace) -> int:
    if args.seed is None:
        raise ValidationError(
            "--seed is required for Monte-Carlo estimation; results must be reproducible"
        )
    return args.seed


def _log_base(args: argparse.Namespace) -> Optional[float]:
    return None if args.log_base is None else LOG_BASES[args.log_base]


def _bound_params(args: argparse.Namespace) -> BoundParams:
    return BoundParams.from_settings(
        e2=args.e2,
        m=args.m,
        d=args.d,
        delta=args.delta,
        A=args.A,
        n_param=args.n_param,
        r=args.r,
        c=args.c,
        log_base=_log_base(args),
    )


def _max_hx(args: argparse.Namespace) -> float:
    return Settings.MAX_HX if args.max_hx is None else args.max_hx


def cmd_entropy(args: argparse.Namespace) -> int:
    if args.binary is not None:
        h = binary_entropy(args.binary)
    else:
        h = entropy(DiscreteDistribution(_parse_reals(args.dist, "probability")))
    print(format_number(h))
    return EXIT_OK


def cmd_capacity(args: argparse.Namespace) -> int:
    ch = ChannelMatrix(read_matrix_csv(args.channel))
    res = channel_capacity(ch, tol=args.tol, max_iter=args.max_iter)
    _out("capacity", res.capacity)
    _out("upper_bound", res.upper_bound)
    _out("gap", res.gap)
    _out("prior", res.optimal_prior.probs.tolist())
    _out("iterations", res.iterations)
    _out("converged", res.converged)
    return EXIT_OK


def cmd_rademacher(args: argparse.Namespace) -> int:
    if args.class_file is not None:
        cls: Any = FiniteClass(read_sign_matrix_csv(args.class_file))
    else:
        cls = ThresholdClass(_parse_reals(args.points, "point"))
    n = cls.n_points
    if args.exact:
        est = exact_rademacher(cls, n)
    else:
        draws = Settings.AUDIT_DRAWS if args.draws is None else args.draws
        est = mc_rademacher(cls, n, draws, _require_seed(args), workers=args.workers)
    _out("method", est.method)
    _out("n", n)
    _out("mean", est.mean)
    _out("std_error", est.std_error)
    _out("draws", est.draws)
    _out("seed", est.seed)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    p = _bound_params(args)
    max_hx = _max_hx(args)
    outcome = strict_criterion_from_bounds(p, max_hx)
    for w in outcome.warnings:
        logger.warning(w)
    res = outcome.bounds
    _out("e_min", res.e_min)
    _out("e_max", res.e_max)
    _out("h_e_min", res.h_e_min)
    _out("h_e_max", res.h_e_max)
    _out("error_threshold", outcome.error_threshold)
    _out("strict", outcome.status)
    if args.plan:
        _out("min_samples_for_strict", min_samples_for_strict(p, max_hx=max_hx))
        _out("max_weight_for_strict", max_weight_for_strict(p, max_hx=max_hx))
    return EXIT_OK


def cmd_criterion(args: argparse.Namespace) -> int:
    inp = CriterionInput(
        r_f=args.rf,
        min_hyx=args.min_hyx,
        max_hyx=args.max_hyx,
        max_hx=_max_hx(args),
    )
    verdict = relaxed_criterion(inp, real_application=args.real_application)
    print(verdict.summary())
    _out("shannon_condition", verdict.shannon_condition)
    _out("branch", verdict.branch)
    for key in sorted(verdict.margins):
        _out("margin." + key, verdict.margins[key])
    if not verdict.relaxed_satisfied or verdict.strict_satisfied is False:
        return EXIT_VIOLATED
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    holdout = args.holdout
    if holdout == _DEFAULT_HOLDOUT:
        holdout = Settings.HOLDOUT_FRACTION
    gaussian = None
    if args.generate is not None:
        gaussian = GaussianSpec(args.n, args.separation, args.label_noise)
    config = AuditConfig(
        dataset_path=args.data,
        gaussian=gaussian,
        class_path=args.class_file,
        method=METHOD_EXACT if args.exact else METHOD_MONTE_CARLO,
        draws=args.draws,
        seed=args.seed,
        workers=args.workers,
        holdout=holdout,
        bounds=None if args.m is None else _bound_params(args),
        real_application=args.real_application,
        max_hx=args.max_hx,
    )
    report = run_audit(config)
    write_report(report, args.out)
    if args.emit_curves is not None:
        emit_curves(args.emit_curves, report)
    summary = report["criterion"]["summary"]
    if report["bounds"] is not None:
        summary += "; BOUNDS STRICT {0}".format(report["bounds"]["strict_status"].upper())
    print(summary)
    if report["criterion"]["verdict"]["strict_satisfied"] is False:
        return EXIT_VIOLATED
    return EXIT_OK


def _add_bound_flags(p: argparse.ArgumentParser, *, m_required: bool) -> None:
    g = p.add_argument_group("error bound parameters")
    g.add_argument("--e2", type=float, default=0.0, help="training squared error")
    g.add_argument("--m", type=int, required=m_required, help="number of training patterns")
    g.add_argument("--d", type=float, help="complexity parameter of the lower bound")
    g.add_argument("--delta", type=float, help="confidence parameter")
    g.add_argument("--A", type=float, help="weight size")
    g.add_argument("--n-param", type=float, help="network size")
    g.add_argument("--r", type=float, help="margin")
    g.add_argument("--c", type=float, help="constant of the upper bound")


def _add_estimator_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--exact", action="store_true", help="enumerate all sign vectors (n <= 20)"
    )
    p.add_argument("--draws", type=int, help="number of Monte-Carlo draws")
    p.add_argument("--seed", type=int, help="seed of the Monte-Carlo draws")
    p.add_argument("--workers", type=int, help="number of worker threads")


def build_parser() -> argparse.ArgumentParser:
    from . import __version__

    parser = argparse.ArgumentParser(
        prog="halfcrit",
        description="Audit classifier uncertainty with the half criterion",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    parser.add_argument(
        "--log-base",
        choices=sorted(LOG_BASES),
        help="base of the logarithm in the upper error bound",
    )
    parser.add_argument("--config", help="read settings from this file")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument(
        "-v", "--verbose", action="count", default=0, help="more diagnostics"
    )
    verbosity.add_argument(
        "-q", "--quiet", action="store_true", help="errors only"
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("entropy", help="Shannon entropy of a distribution")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--dist", help="comma-separated probabilities")
    g.add_argument("--binary", type=float, help="binary entropy h(p)")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("capacity", help="capacity of a discrete memoryless channel")
    p.add_argument("--channel", required=True, help="CSV file of channel rows")
    p.add_argument("--tol", type=float, help="convergence tolerance in bits")
    p.add_argument("--max-iter", type=int, help="iteration limit")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("rademacher", help="empirical Rademacher complexity")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--class-file", help="CSV file of -1/+1 hypotheses, one per row")
    g.add_argument("--points", help="comma-separated points for the threshold class")
    _add_estimator_flags(p)
    p.set_defaults(func=cmd_rademacher)

    p = sub.add_parser("bounds", help="generalization error bounds")
    _add_bound_flags(p, m_required=True)
    p.add_argument("--max-hx", type=float, help="maximum source entropy")
    p.add_argument(
        "--plan",
        action="store_true",
        help="also find the sample size and weight size limits of the strict criterion",
    )
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("criterion", help="evaluate the half criterion")
    p.add_argument("--rf", type=float, required=True, help="Rademacher complexity")
    p.add_argument(
        "--min-hyx", type=float, required=True, help="entropy of the lower error bound"
    )
    p.add_argument("--max-hyx", type=float, help="entropy of the upper error bound")
    p.add_argument("--max-hx", type=float, help="maximum source entropy")
    p.add_argument(
        "--real-application",
        action="store_true",
        help="flag a low complexity as implausible for a real problem",
    )
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("audit", help="audit a classifier end to end")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--data", help="dataset CSV file with a final 'label' column")
    g.add_argument(
        "--generate", choices=["gaussian_1d"], help="generate a synthetic dataset"
    )
    p.add_argument("--n", type=int, default=200, help="generated dataset size")
    p.add_argument("--separation", type=float, default=6.0, help="class mean distance")
    p.add_argument("--label-noise", type=float, default=0.0, help="label flip rate")
    p.add_argument("--class-file", help="finite hypothesis class instead of stumps")
    _add_estimator_flags(p)
    p.add_argument(
        "--holdout",
        nargs="?",
        const=_DEFAULT_HOLDOUT,
        type=_holdout_fraction,
        help="evaluate on a held out fraction of the data",
    )
    _add_bound_flags(p, m_required=False)
    p.add_argument("--max-hx", type=float, help="maximum source entropy")
    p.add_argument("--real-application", action="store_true")
    p.add_argument("--out", required=True, help="JSON report file")
    p.add_argument("--emit-curves", help="CSV file for entropy and bound curves")
    p.set_defaults(func=cmd_audit)

    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    elif Settings.DEBUG:
        level = logging.DEBUG
    else:
        level = getattr(logging, Settings.LOG_LEVEL.upper())
    logging.basicConfig(
        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger("halfcrit").setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line tool and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help, --version and usage errors
        return e.code if isinstance(e.code, int) else EXIT_INVALID
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        if args.config is not None:
            Settings.read(args.config, force=True, from_package=False)
        _configure_logging(args)
        return func(args)
    except (ValidationError, ConfigError) as e:
        print("halfcrit: error: {0}".format(e), file=sys.stderr)
        return EXIT_INVALID
    except AuditError as e:
        print("halfcrit: error: {0}".format(e), file=sys.stderr)
        return EXIT_INVALID if e.is_validation else EXIT_INTERNAL
    except HalfcritError as e:
        print("halfcrit: error: {0}".format(e), file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:
        logger.exception("Internal error")
        return EXIT_INTERNAL
