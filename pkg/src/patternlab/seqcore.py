"""Core combinatorial classes: inversion sequences, ascent sequences,
primitive ascent sequences and permutations.

Sequences and permutations are plain tuples of ints.  Sequences are words
over the non-negative integers; permutations use one-line notation with
values 1..n.  Positions in all public output are 1-based.
"""

from __future__ import annotations

import itertools
import math
import os
from enum import Enum

from .errors import (
    ClassTooLargeError,
    NotInClassError,
    SequenceParseError,
    ShiftUnderflowError,
)

Seq = tuple[int, ...]

DEFAULT_CAP = 10**8


class ClassId(Enum):
    INVERSION = "inv"
    ASCENT = "asc"
    PRIMITIVE_ASCENT = "pasc"
    PERMUTATION = "perm"

    @property
    def kind(self) -> str:
        """'word' for the sequence classes, 'perm' for permutations."""
        return "perm" if self is ClassId.PERMUTATION else "word"


# ---------------------------------------------------------------------------
# membership

def ascents(w) -> int:
    """Number of indices i with w_i < w_{i+1}."""
    return sum(1 for a, b in zip(w, w[1:]) if a < b)


def is_inversion_sequence(w) -> bool:
    return all(0 <= v <= i for i, v in enumerate(w))


def is_ascent_sequence(w) -> bool:
    if not is_inversion_sequence(w):
        return False
    asc = 0
    for i in range(1, len(w)):
        if w[i] > asc + 1:
            return False
        if w[i] > w[i - 1]:
            asc += 1
    return True


def is_primitive_ascent_sequence(w) -> bool:
    if not is_ascent_sequence(w):
        return False
    return all(a != b for a, b in zip(w, w[1:]))


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


_CHECKERS = {
    ClassId.INVERSION: is_inversion_sequence,
    ClassId.ASCENT: is_ascent_sequence,
    ClassId.PRIMITIVE_ASCENT: is_primitive_ascent_sequence,
    ClassId.PERMUTATION: is_permutation,
}


def check_member(class_id: ClassId, w) -> bool:
    return _CHECKERS[class_id](tuple(w))


# ---------------------------------------------------------------------------
# class sizes and the enumeration cap

def _count_ascent_like(n: int, primitive: bool) -> int:
    # DP over (ascent count, last entry); the next entry is bounded both by
    # the ascent count + 1 and by the inversion condition.
    if n == 0:
        return 1
    states = {(0, 0): 1}
    for i in range(1, n):
        new: dict[tuple[int, int], int] = {}
        for (asc, last), cnt in states.items():
            for v in range(min(asc + 1, i) + 1):
                if primitive and v == last:
                    continue
                key = (asc + (v > last), v)
                new[key] = new.get(key, 0) + cnt
        states = new
    return sum(states.values())


def class_size(class_id: ClassId, n: int) -> int:
    """Exact number of objects of length n in the class."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if class_id in (ClassId.INVERSION, ClassId.PERMUTATION):
        return math.factorial(n)
    return _count_ascent_like(n, class_id is ClassId.PRIMITIVE_ASCENT)


def resolve_cap(cap: int | None = None) -> int:
    """Class-size cap; the PATTERNLAB_CAP environment variable overrides."""
    if cap is not None:
        return cap
    return int(os.environ.get("PATTERNLAB_CAP", DEFAULT_CAP))


def check_cap(class_id: ClassId, n: int, cap: int | None = None) -> None:
    limit = resolve_cap(cap)
    size = class_size(class_id, n)
    if size > limit:
        raise ClassTooLargeError(
            f"class too large: |{class_id.value}_{n}| = {size} exceeds cap {limit}"
        )


# ---------------------------------------------------------------------------
# enumeration (lexicographic, streaming)

def _iter_ascent_like(n: int, primitive: bool):
    if n == 0:
        yield ()
        return
    w = [0]

    def rec(asc: int):
        i = len(w)
        if i == n:
            yield tuple(w)
            return
        last = w[-1]
        for v in range(min(asc + 1, i) + 1):
            if primitive and v == last:
                continue
            w.append(v)
            yield from rec(asc + (v > last))
            w.pop()

    yield from rec(0)


def iter_class(class_id: ClassId, n: int, cap: int | None = None):
    """Stream all members of the class in lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    check_cap(class_id, n, cap)
    if class_id is ClassId.INVERSION:
        return itertools.product(*(range(i + 1) for i in range(n)))
    if class_id is ClassId.PERMUTATION:
        return itertools.permutations(range(1, n + 1))
    return _iter_ascent_like(n, class_id is ClassId.PRIMITIVE_ASCENT)


def enumerate_class(class_id: ClassId, n: int, cap: int | None = None) -> list[Seq]:
    """All members of the class, in lexicographic order of entries."""
    return list(iter_class(class_id, n, cap))


# ---------------------------------------------------------------------------
# the shift primitive

def sigma_shift(s, t: int) -> Seq:
    """Fix every zero entry and add t to every nonzero entry.

    The result need not belong to any class; it is a raw word.  Nonzero
    entries must stay positive, otherwise the shift is refused.
    """
    out = []
    for i, v in enumerate(s):
        if v == 0:
            out.append(0)
        else:
            if v + t < 1:
                raise ShiftUnderflowError(
                    f"shift underflow: entry {v} at position {i + 1} with t={t}"
                )
            out.append(v + t)
    return tuple(out)


# ---------------------------------------------------------------------------
# text formats

def parse_sequence(text: str) -> Seq:
    """Parse comma-separated entries, or a compact digit string.

    The compact form maps each character to one entry, so it is only valid
    when every entry is a single digit.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        entries = []
        offset = 0
        for part in text.split(","):
            stripped = part.strip()
            if not stripped.isdigit():
                raise SequenceParseError(f"parse error: bad entry {part!r}", offset)
            entries.append(int(stripped))
            offset += len(part) + 1
        return tuple(entries)
    for i, ch in enumerate(text):
        if not ch.isdigit():
            raise SequenceParseError(f"parse error: bad character {ch!r}", i)
    return tuple(int(ch) for ch in text)


def format_sequence(s, style: str = "comma") -> str:
    if style == "comma":
        return ",".join(str(v) for v in s)
    if style == "compact":
        for i, v in enumerate(s):
            if v >= 10:
                raise ValueError(
                    f"compact style refused: entry {v} at position {i + 1} is >= 10"
                )
        return "".join(str(v) for v in s)
    raise ValueError(f"unknown style {style!r}")


def format_sequence_auto(s) -> str:
    """Compact when every entry is a single digit, comma style otherwise."""
    if all(v < 10 for v in s):
        return format_sequence(s, "compact")
    return format_sequence(s, "comma")


def parse_permutation(text: str) -> Seq:
    """Parse comma-separated one-line notation, e.g. '2,4,1,3'."""
    text = text.strip()
    if not text:
        return ()
    values = parse_sequence(text if "," in text else ",".join(text))
    if not is_permutation(values):
        raise NotInClassError(f"not a permutation of 1..{len(values)}: {values}")
    return values
