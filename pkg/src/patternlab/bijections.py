"""The invcode encoding of permutations and its pattern-class restriction.

invcode maps a permutation to the sequence counting, at each position, the
earlier entries that are larger.  It is a bijection onto inversion
sequences and it preserves the last-entry statistic: the final code entry
counts the values above the final permutation entry, which is n - pi_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInClassError
from .patterns import avoiding, parse_pattern
from .seqcore import ClassId, Seq, is_inversion_sequence, is_permutation

PATTERN_3214 = parse_pattern("3[21]4")
PATTERN_120 = parse_pattern("[12]0")


def invcode(pi) -> Seq:
    """Sequence whose i-th entry counts indices j < i with pi_j > pi_i."""
    if not is_permutation(pi):
        raise NotInClassError(f"not a permutation: {pi}")
    return tuple(
        sum(1 for j in range(i) if pi[j] > pi[i]) for i in range(len(pi))
    )


def invcode_inverse(e) -> Seq:
    """Permutation whose invcode is e.

    Scanning right to left, position i must hold the (e_i + 1)-th largest
    value not used by later positions: larger unused values sit earlier, so
    they are exactly the earlier-and-larger entries the code counts.
    """
    e = tuple(e)
    if not is_inversion_sequence(e):
        raise NotInClassError(f"not an inversion sequence: {e}")
    unused = sorted(range(1, len(e) + 1), reverse=True)  # descending
    out = [0] * len(e)
    for i in range(len(e) - 1, -1, -1):
        out[i] = unused.pop(e[i])
    return tuple(out)


@dataclass(frozen=True)
class RestrictionReport:
    n: int
    passed: bool
    perm_side: int
    seq_side: int
    witness: str | None = None


def check_restriction(n: int) -> RestrictionReport:
    """Check that invcode maps the 3[21]4-avoiding permutations exactly
    onto the [12]0-avoiding inversion sequences, preserving last."""
    perms = avoiding(ClassId.PERMUTATION, n, (PATTERN_3214,))
    target = set(avoiding(ClassId.INVERSION, n, (PATTERN_120,)))
    image = set()
    count = 0
    for pi in perms:
        count += 1
        e = invcode(pi)
        if n and (len(pi) - pi[-1]) != e[-1]:
            return RestrictionReport(n, False, count, len(target), f"last not preserved at {pi}")
        if e not in target:
            return RestrictionReport(
                n, False, count, len(target), f"invcode({pi}) = {e} not in the sequence class"
            )
        image.add(e)
    if image != target or count != len(target):
        missing = sorted(target - image)
        witness = f"image misses {missing[0]}" if missing else "image not injective"
        return RestrictionReport(n, False, count, len(target), witness)
    return RestrictionReport(n, True, count, len(target))
