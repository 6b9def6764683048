"""Integer sequences playing the role of additive complements of the squares.

The square set in use throughout is S = {1, 4, 9, ...}; 0 is not a square
here, while 0 is a perfectly valid sequence element.  A candidate sequence
covers an integer n when n = k^2 + w for some k >= 1 and some element w.
"""

from __future__ import annotations

import math
import os.path
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, TextIO

import numpy as np

# Largest n any counting query may touch: elements and limits must satisfy
# w + k^2 <= 2n <= INT64_MAX so the numpy int64 sieves can never wrap.
INT64_MAX = 2**63 - 1
MAX_QUERY_LIMIT = INT64_MAX // 2

# counts arrays above this limit are not materialized (see counting module)
MAX_MATERIALIZED_LIMIT = 2**30


class SequenceFormatError(ValueError):
    """Malformed sequence file; carries the 1-based offending line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class ComplementCandidate:
    """A strictly increasing sequence of non-negative integers.

    Immutable after construction; all operations on it are pure functions,
    so instances can be shared freely across threads.
    """

    elements: tuple[int, ...]
    label: str = ""

    def __init__(self, elements: Iterable[int], label: str = ""):
        elems = tuple(int(e) for e in elements)
        prev = -1
        for e in elems:
            if e < 0:
                raise ValueError(f"negative element {e}")
            if e <= prev:
                raise ValueError(f"elements not strictly increasing at {e}")
            if e > INT64_MAX:
                raise OverflowError(f"element {e} exceeds the 64-bit range")
            prev = e
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "label", label)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: int) -> bool:
        i = bisect_right(self.elements, value)
        return i > 0 and self.elements[i - 1] == value

    @cached_property
    def as_array(self) -> np.ndarray:
        """Elements as a read-only int64 array (cached; safe to share)."""
        arr = np.asarray(self.elements, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    def with_label(self, label: str) -> "ComplementCandidate":
        return ComplementCandidate(self.elements, label)


@dataclass(frozen=True)
class CoverageReport:
    """Integers of [0, limit] left uncovered by S + W.

    threshold is the smallest M with every n in [M, limit] covered; it is
    None exactly when limit itself is uncovered.  Note n = 0 is never
    covered (squares start at 1), so threshold >= 1 whenever it exists.
    """

    limit: int
    uncovered: tuple[int, ...]
    threshold: Optional[int]

    def to_text(self) -> str:
        lines = [
            f"limit: {self.limit}",
            f"uncovered_count: {len(self.uncovered)}",
            f"threshold: {self.threshold if self.threshold is not None else 'none'}",
        ]
        lines.append("uncovered: " + ",".join(str(n) for n in self.uncovered))
        return "\n".join(lines) + "\n"

    def to_csv_rows(self) -> list[list]:
        return [[n] for n in self.uncovered]

    CSV_HEADER = ["uncovered"]


def check_query_range(candidate: ComplementCandidate, limit: int) -> None:
    """Reject queries whose intermediate sums could exceed the int64 range."""
    if limit > MAX_QUERY_LIMIT:
        raise OverflowError(
            f"limit {limit} exceeds the checked query range {MAX_QUERY_LIMIT}"
        )
    if candidate.elements and candidate.elements[-1] + limit > INT64_MAX:
        raise OverflowError(
            f"max element {candidate.elements[-1]} + limit {limit} would overflow int64"
        )


def counting_function(candidate: ComplementCandidate, x: int) -> int:
    """Number of elements not exceeding x (inclusive)."""
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    return bisect_right(candidate.elements, x)


def covered_mask(candidate: ComplementCandidate, limit: int) -> np.ndarray:
    """Boolean array m with m[n] true iff n = k^2 + w, k >= 1, w in W, n <= limit."""
    check_query_range(candidate, limit)
    mask = np.zeros(limit + 1, dtype=bool)
    elems = candidate.as_array
    k_max = math.isqrt(limit)
    for k in range(1, k_max + 1):
        square = k * k
        hi = bisect_right(candidate.elements, limit - square)
        if hi:
            mask[elems[:hi] + square] = True
    return mask


def coverage_report(candidate: ComplementCandidate, limit: int) -> CoverageReport:
    """List every n in [0, limit] with no representation k^2 + w."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    mask = covered_mask(candidate, limit)
    uncovered = tuple(int(n) for n in np.flatnonzero(~mask))
    if not uncovered:
        threshold: Optional[int] = 0
    elif uncovered[-1] < limit:
        threshold = uncovered[-1] + 1
    else:
        threshold = None
    return CoverageReport(limit=limit, uncovered=uncovered, threshold=threshold)


# ---------------------------------------------------------------------------
# Sequence file format: optional '# label' header, then one ascending
# decimal per line.  Diff-able and readable by any tool.
# ---------------------------------------------------------------------------

def write_sequence(candidate: ComplementCandidate, stream: TextIO) -> None:
    stream.write(f"# {candidate.label}\n")
    for e in candidate.elements:
        stream.write(f"{e}\n")


def write_sequence_file(candidate: ComplementCandidate, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_sequence(candidate, fh)


def read_sequence(stream: TextIO, default_label: str = "") -> ComplementCandidate:
    label = default_label
    elements: list[int] = []
    prev = -1
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if lineno == 1 or not elements:
                label = line[1:].strip()
                continue
            raise SequenceFormatError("header after data", lineno)
        try:
            value = int(line)
        except ValueError:
            raise SequenceFormatError(f"not a decimal integer: {line!r}", lineno) from None
        if value < 0:
            raise SequenceFormatError(f"negative value {value}", lineno)
        if value <= prev:
            raise SequenceFormatError(f"value {value} not strictly increasing", lineno)
        prev = value
        elements.append(value)
    return ComplementCandidate(elements, label)


def read_sequence_file(path) -> ComplementCandidate:
    with open(path, "r", encoding="utf-8") as fh:
        from os.path import basename, splitext

        return read_sequence(fh, default_label=splitext(basename(str(path)))[0])
