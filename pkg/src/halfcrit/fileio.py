"""
    Halfcrit: Classifier uncertainty auditing

    File input/output module

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

    This module reads the CSV input files of the toolkit (datasets,
    finite hypothesis classes and channel matrices) and writes output
    files atomically.

    Output files are written to a temporary file in the target directory
    which then replaces the target, under a FileLock held on a companion
    .lock file, so that concurrent audits writing the same report never
    interleave. A quick way to use a blocking FileLock is as follows:

    with FileLock('report.json'):
        code_that_only_one_process_can_run_simultaneously()

"""

from typing import IO, Any, Callable, List, Optional, Tuple

import csv
import io
import logging
import os
import stat
import tempfile

import numpy as np

from .basics import HalfcritError, ValidationError


logger = logging.getLogger(__name__)

# Name of the final column in dataset files
LABEL_COLUMN = "label"


class LockError(HalfcritError):
    """Lock could not be obtained"""

    pass


class OutputError(ValidationError):
    """An output file or its lock file cannot be written"""

    pass


POSIX: bool = False

try:
    # Try Linux/POSIX
    import fcntl
except ImportError:

    try:
        # Try Windows
        import msvcrt
    except ImportError:

        # Not Unix, not Windows: bail out
        def _lock_file(file: IO[str], block: bool) -> None:
            raise TypeError("File locking not supported on this platform")

        def _unlock_file(file: IO[str]) -> None:
            raise TypeError("File locking not supported on this platform")

    else:

        # Windows

        def _lock_file(file: IO[str], block: bool) -> None:
            # Lock just the first byte of the file
            retry = True
            while retry:
                retry = False
                try:
                    msvcrt.locking(  # type: ignore
                        file.fileno(),
                        msvcrt.LK_LOCK if block else msvcrt.LK_NBLCK,  # type: ignore
                        1,
                    )
                except OSError as e:
                    if block and e.errno == 36:
                        # 'Resource deadlock avoided': keep waiting
                        retry = True
                    else:
                        raise LockError(
                            "Couldn't lock {0}, errno is {1}".format(file.name, e.errno)
                        )

        def _unlock_file(file: IO[str]) -> None:
            try:
                file.seek(0)
                msvcrt.locking(file.fileno(), msvcrt.LK_UNLCK, 1)  # type: ignore
            except OSError as e:
                raise LockError(
                    "Couldn't unlock {0}, errno is {1}".format(file.name, e.errno)
                )

else:

    # Linux/POSIX

    POSIX = True  # type: ignore

    def _lock_file(file: IO[str], block: bool) -> None:
        try:
            fcntl.flock(file.fileno(), fcntl.LOCK_EX | (0 if block else fcntl.LOCK_NB))
        except IOError:
            raise LockError("Couldn't lock {0}".format(file.name))

    def _unlock_file(file: IO[str]) -> None:
        # File is automatically unlocked on close
        pass


class FileLock:

    """An advisory interprocess lock on an output path, implemented
    as a lock on the companion file <path>.lock"""

    def __init__(self, path: str) -> None:
        assert path and isinstance(path, str)
        self._path = path + ".lock"
        self._fp: Optional[IO[str]] = None

    def acquire(self, block: bool = True) -> None:
        """Acquire the lock, blocking if block = True"""
        if self._fp is not None:
            # Already hold the lock
            return
        try:
            fp = open(self._path, "a+")
            if POSIX:
                os.fchmod(fp.fileno(), stat.S_IRUSR | stat.S_IWUSR | stat.S_IRGRP)
        except OSError as e:
            raise OutputError(
                "Couldn't open or create lock file {0}: {1}".format(self._path, e.strerror)
            )
        try:
            _lock_file(fp, block)
        except:
            fp.close()
            raise
        self._fp = fp

    def release(self) -> None:
        """Release the lock"""
        if self._fp is not None:
            _unlock_file(self._fp)
            self._fp.close()
            self._fp = None

    def __enter__(self):
        """Python context manager protocol"""
        self.acquire(block=True)
        return self

    def __exit__(self, exc_type: Any, exc_value: Any, traceback: Any):
        """Python context manager protocol"""
        self.release()
        return False


def atomic_write_text(path: str, text: str) -> None:
    """Write text to path so that readers see either the old or the
    new contents, never a partial file"""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(
        dir=directory, prefix="." + os.path.basename(path) + ".", suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    logger.debug("Wrote %s", path)


def write_locked(path: str, text: str) -> None:
    """Atomically write text to path while holding its FileLock"""
    with FileLock(path):
        try:
            atomic_write_text(path, text)
        except OSError as e:
            raise OutputError("Cannot write {0}: {1}".format(path, e.strerror))


def _read_rows(path: str) -> List[Tuple[int, List[str]]]:
    """Non-blank CSV rows of a file, with their 1-based line numbers"""
    result: List[Tuple[int, List[str]]] = []
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise ValidationError("Cannot read {0}: {1}".format(path, e.strerror))
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise ValidationError("File {0}, line {1}: invalid UTF-8".format(path, line))
    rdr = csv.reader(io.StringIO(text, newline=""))
    for row in rdr:
        cells = [c.strip() for c in row]
        if any(cells):
            result.append((rdr.line_num, cells))
    return result


def _to_float(path: str, line: int, s: str) -> float:
    try:
        val = float(s)
    except ValueError:
        val = float("nan")
    if not np.isfinite(val):
        raise ValidationError(
            "File {0}, line {1}: invalid number '{2}'".format(path, line, s)
        )
    return val


def _to_sign(path: str, line: int, s: str) -> int:
    val = _to_float(path, line, s)
    if val not in (-1.0, 1.0):
        raise ValidationError(
            "File {0}, line {1}: expected -1 or +1, got '{2}'".format(path, line, s)
        )
    return int(val)


def read_dataset_csv(path: str) -> Tuple[np.ndarray, np.ndarray, List[str]]:
    """Read a dataset file: a header row, feature columns, and a final
    column named 'label' holding -1 or +1. Returns the feature matrix,
    the label vector and the feature column names."""
    rows = _read_rows(path)
    if not rows:
        raise ValidationError("File {0} is empty".format(path))
    header_line, header = rows[0]
    if len(header) < 2 or header[-1].lower() != LABEL_COLUMN:
        raise ValidationError(
            "File {0}, line {1}: header must list the feature columns "
            "followed by '{2}'".format(path, header_line, LABEL_COLUMN)
        )
    features: List[List[float]] = []
    labels: List[int] = []
    for line, row in rows[1:]:
        if len(row) != len(header):
            raise ValidationError(
                "File {0}, line {1}: expected {2} columns, got {3}".format(
                    path, line, len(header), len(row)
                )
            )
        features.append([_to_float(path, line, s) for s in row[:-1]])
        labels.append(_to_sign(path, line, row[-1]))
    return (
        np.array(features, dtype=np.float64).reshape(len(labels), len(header) - 1),
        np.array(labels, dtype=np.int64),
        header[:-1],
    )


def _read_matrix(path: str, convert: Callable[[str, int, str], Any]) -> List[List[Any]]:
    """Read a headerless rectangular CSV file, converting each cell"""
    rows = _read_rows(path)
    if not rows:
        raise ValidationError("File {0} is empty".format(path))
    width = len(rows[0][1])
    matrix: List[List[Any]] = []
    for line, row in rows:
        if len(row) != width:
            raise ValidationError(
                "File {0}, line {1}: expected {2} columns, got {3}".format(
                    path, line, width, len(row)
                )
            )
        matrix.append([convert(path, line, s) for s in row])
    return matrix


def read_sign_matrix_csv(path: str) -> np.ndarray:
    """Read a finite hypothesis class: one row of -1/+1 entries per
    hypothesis, no header"""
    return np.array(_read_matrix(path, _to_sign), dtype=np.int64)


def read_matrix_csv(path: str) -> np.ndarray:
    """Read a real matrix, such as a channel transition matrix, with
    one row per line and no header"""
    return np.array(_read_matrix(path, _to_float), dtype=np.float64)
