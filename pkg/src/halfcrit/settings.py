"""
    Halfcrit: Classifier uncertainty auditing

    Settings module

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

    This module reads and interprets the Halfcrit.conf configuration
    file. The file can include other files using the $include directive,
    making it easier to arrange configuration sections into logical and
    manageable pieces.

    Sections are identified like so: [ section_name ]

    Comments start with # signs.

    Each line within a section is an assignment of the form key = value,
    interpreted by the handler for that section.

"""

from typing import Any, Callable, Dict, Optional, Tuple

import threading

from .basics import (
    ConfigError,
    LineReader,
    LOG_BASES,
    DISTRIBUTION_TOLERANCE,
    EXACT_MAX_N,
)


# Type of a converter from a configuration string to a setting value
Converter = Callable[[str], Any]

_LOG_LEVELS = frozenset(("debug", "info", "warning", "error", "critical"))


def _to_bool(s: str) -> bool:
    if s.lower() == "true":
        return True
    if s.lower() == "false":
        return False
    raise ValueError(s)


def _to_positive_int(s: str) -> int:
    val = int(s)
    if val < 1:
        raise ValueError(s)
    return val


def _to_positive_float(s: str) -> float:
    val = float(s)
    if not val > 0.0:
        raise ValueError(s)
    return val


def _to_log_level(s: str) -> str:
    if s.lower() not in _LOG_LEVELS:
        raise ValueError(s)
    return s.lower()


def _to_log_base(s: str) -> float:
    return LOG_BASES[s.strip().lower()]


def _to_fraction(s: str) -> float:
    val = float(s)
    if not 0.0 < val < 1.0:
        raise ValueError(s)
    return val


def _to_delta(s: str) -> float:
    val = float(s)
    if not 0.0 < val <= 1.0:
        raise ValueError(s)
    return val


def _to_at_least_one(s: str) -> float:
    val = float(s)
    if not val >= 1.0:
        raise ValueError(s)
    return val


# Section name -> { key: (Settings attribute, converter) }
_SECTIONS: Dict[str, Dict[str, Tuple[str, Converter]]] = {
    "settings": {
        "debug": ("DEBUG", _to_bool),
        "log_level": ("LOG_LEVEL", _to_log_level),
    },
    "information": {
        "distribution_tolerance": ("DISTRIBUTION_TOLERANCE", _to_positive_float),
        "capacity_tolerance": ("CAPACITY_TOLERANCE", _to_positive_float),
        "capacity_max_iter": ("CAPACITY_MAX_ITER", _to_positive_int),
    },
    "rademacher": {
        "exact_max_n": ("EXACT_MAX_N", _to_positive_int),
        "workers": ("WORKERS", _to_positive_int),
    },
    "bounds": {
        "log_base": ("LOG_BASE", _to_log_base),
        "c": ("BOUND_C", _to_positive_float),
        "d": ("BOUND_D", _to_at_least_one),
        "a": ("BOUND_A", _to_positive_float),
        "n_param": ("BOUND_N_PARAM", _to_at_least_one),
        "r": ("BOUND_R", _to_positive_float),
        "delta": ("BOUND_DELTA", _to_delta),
    },
    "audit": {
        "max_hx": ("MAX_HX", _to_positive_float),
        "draws": ("AUDIT_DRAWS", _to_positive_int),
        "holdout_fraction": ("HOLDOUT_FRACTION", _to_fraction),
    },
}


class Settings:
    """Global settings"""

    _lock = threading.Lock()
    loaded: bool = False

    # [settings]
    DEBUG: bool = False
    LOG_LEVEL: str = "warning"

    # [information]
    DISTRIBUTION_TOLERANCE: float = DISTRIBUTION_TOLERANCE
    CAPACITY_TOLERANCE: float = 1e-9
    CAPACITY_MAX_ITER: int = 1000

    # [rademacher]
    EXACT_MAX_N: int = EXACT_MAX_N
    WORKERS: int = 1

    # [bounds]
    LOG_BASE: float = 2.0
    BOUND_C: float = 1.0
    BOUND_D: float = 1.0
    BOUND_A: float = 2.0
    BOUND_N_PARAM: float = 1.0
    BOUND_R: float = 1.0
    BOUND_DELTA: float = 0.05

    # [audit]
    MAX_HX: float = 1.0
    AUDIT_DRAWS: int = 2000
    HOLDOUT_FRACTION: float = 0.5

    @staticmethod
    def _make_handler(section: str) -> Callable[[str], None]:
        """Return a handler for key = value lines within a section"""
        keys = _SECTIONS[section]

        def handler(s: str) -> None:
            if "=" not in s:
                raise ConfigError(
                    "Expected 'key = value' in section [{0}]".format(section)
                )
            a = s.split("=", maxsplit=1)
            par = a[0].strip().lower()
            sval = a[1].strip()
            if par not in keys:
                raise ConfigError(
                    "Unknown configuration parameter '{0}' in [{1}]".format(
                        par, section
                    )
                )
            attr, convert = keys[par]
            try:
                setattr(Settings, attr, convert(sval))
            except (ValueError, KeyError):
                raise ConfigError(
                    "Invalid parameter value: {0} = {1}".format(par, sval)
                )

        return handler

    @staticmethod
    def snapshot() -> Dict[str, Any]:
        """Return the current settings as a dict, keyed by section.key,
        for echoing into reports"""
        result: Dict[str, Any] = {}
        for section, keys in _SECTIONS.items():
            for key, (attr, _) in keys.items():
                result["{0}.{1}".format(section, key)] = getattr(Settings, attr)
        return result

    @staticmethod
    def read(fname: str, force: bool = False, from_package: bool = True) -> None:
        """Read a configuration file, either from the package resources
        or (if from_package is False) from the file system"""

        with Settings._lock:

            if Settings.loaded and not force:
                return

            CONFIG_HANDLERS: Dict[str, Callable[[str], None]] = {
                section: Settings._make_handler(section) for section in _SECTIONS
            }
            handler: Optional[Callable[[str], None]] = None  # Current section handler

            rdr: Optional[LineReader] = None
            try:
                rdr = LineReader(
                    fname, package_name=__name__ if from_package else None
                )
                for s in rdr.lines():
                    # Ignore comments
                    ix = s.find("#")
                    if ix >= 0:
                        s = s[0:ix]
                    s = s.strip()
                    if not s:
                        continue
                    if s[0] == "[" and s[-1] == "]":
                        # New section
                        section = s[1:-1].strip().lower()
                        if section in CONFIG_HANDLERS:
                            handler = CONFIG_HANDLERS[section]
                            continue
                        raise ConfigError("Unknown section name '{0}'".format(section))
                    if handler is None:
                        raise ConfigError("No handler for config line '{0}'".format(s))
                    try:
                        handler(s)
                    except ConfigError as e:
                        # Add file name and line number information to the exception
                        # if it's not already there
                        e.set_pos(rdr.fname(), rdr.line())
                        raise e

            except ConfigError as e:
                if rdr:
                    e.set_pos(rdr.fname(), rdr.line())
                raise e

            Settings.loaded = True
