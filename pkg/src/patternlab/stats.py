"""Statistics on sequences and permutations, tail sequences and weights.

All extreme-value statistics (right-to-left minima etc.) use strict
comparisons: position i is a right-to-left minimum when w_i < w_j for every
j > i.  With repeated values this counts the last occurrence of each
running minimum; the equidistribution checks in the verification suite
validate this convention.
"""

from __future__ import annotations

from .errors import KindMismatchError, NotPrimitiveError
from .numbers import IntPoly
from .seqcore import Seq, ascents


def asc(w) -> int:
    """Number of adjacent ascents w_i < w_{i+1}."""
    return ascents(w)


def zero(w) -> int:
    return sum(1 for v in w if v == 0)


def last_entry(w) -> int:
    if not w:
        raise ValueError("last is undefined for the empty sequence")
    return w[-1]


def perm_last(pi) -> int:
    """n minus the final value of the permutation."""
    if not pi:
        raise ValueError("last is undefined for the empty permutation")
    return len(pi) - pi[-1]


def rmin(w) -> int:
    """Right-to-left minima: positions i with w_i < w_j for all j > i."""
    count = 0
    cur = None
    for v in reversed(w):
        if cur is None or v < cur:
            count += 1
            cur = v
    return count


def rmax(w) -> int:
    """Right-to-left maxima, strict."""
    count = 0
    cur = None
    for v in reversed(w):
        if cur is None or v > cur:
            count += 1
            cur = v
    return count


def lmax(w) -> int:
    """Left-to-right maxima, strict."""
    count = 0
    cur = None
    for v in w:
        if cur is None or v > cur:
            count += 1
            cur = v
    return count


def lmin(w) -> int:
    """Left-to-right minima, strict."""
    count = 0
    cur = None
    for v in w:
        if cur is None or v < cur:
            count += 1
            cur = v
    return count


def max_hits(w) -> int:
    """Positions taking their maximal allowed value: entries with w_i = i - 1."""
    return sum(1 for i, v in enumerate(w) if v == i)


def rep(w) -> int:
    """Number of repeated entries: length minus number of distinct values."""
    return len(w) - len(set(w))


SEQ_STATS = {
    "asc": asc,
    "zero": zero,
    "last": last_entry,
    "rmin": rmin,
    "max": max_hits,
    "rep": rep,
}

PERM_STATS = {
    "asc": asc,
    "last": perm_last,
    "rmin": rmin,
    "rmax": rmax,
    "lmax": lmax,
    "lmin": lmin,
}

_TABLES = {"word": SEQ_STATS, "perm": PERM_STATS}


def stat_function(stat_id: str, kind: str = "word"):
    """Look up a named statistic for a host kind ('word' or 'perm')."""
    try:
        table = _TABLES[kind]
    except KeyError:
        raise KindMismatchError(f"unknown kind {kind!r}") from None
    try:
        return table[stat_id]
    except KeyError:
        raise KindMismatchError(
            f"statistic {stat_id!r} is not defined on kind {kind!r}"
        ) from None


def stat(stat_id: str, w, kind: str = "word") -> int:
    """Evaluate a named statistic on a sequence ('word') or permutation."""
    return stat_function(stat_id, kind)(w)


# ---------------------------------------------------------------------------
# runs, tails and weights of primitive sequences

def _check_primitive(e) -> None:
    for a, b in zip(e, e[1:]):
        if a == b:
            raise NotPrimitiveError(f"not primitive: equal adjacent entries {a}")


def runs(e) -> list[Seq]:
    """Maximal strictly decreasing factors; the input must be primitive."""
    _check_primitive(e)
    out: list[Seq] = []
    start = 0
    for i in range(1, len(e)):
        if e[i - 1] < e[i]:  # ascents are the cut points
            out.append(tuple(e[start:i]))
            start = i
    if e:
        out.append(tuple(e[start:]))
    return out


def tail_sequence(e) -> Seq:
    """Final (least) entry of each run; has length asc(e) + 1."""
    return tuple(r[-1] for r in runs(e))


def weight_polynomial(e) -> IntPoly:
    """x to the number of non-tail entries, i.e. x^(len(e) - asc(e) - 1)."""
    tails = tail_sequence(e)
    return IntPoly.monomial(len(e) - len(tails))
