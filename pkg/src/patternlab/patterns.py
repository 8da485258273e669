"""Vincular patterns and pattern matching for words and permutations.

A vincular pattern is a classical pattern plus adjacency constraints:
bracketed letters in the text form must occupy consecutive host positions
in any occurrence.  Word patterns (letters may repeat, alphabet includes 0)
match sequences; permutation patterns (letters form 1..k) match
permutations.

Matching semantics: an index tuple i_1 < ... < i_k is an occurrence when
the host subword is order isomorphic to the pattern letters -- equal
pattern letters require equal host letters, strict pattern inequalities
require the same strict host inequalities -- and every bracketed pair of
pattern positions is adjacent in the host.

Occurrence searching is naive backtracking over the pattern's adjacency
blocks.  Patterns here have length at most 4, so clarity wins over
asymptotics.  The one performance-sensitive entry point is
``iter_avoiding``, which generates a class while pruning any prefix as soon
as its freshly appended entry completes an occurrence; containment is
monotone under appending, so this is a complete avoidance check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import KindMismatchError, PatternParseError
from .seqcore import ClassId, Seq, check_cap, is_permutation

WORD = "word"
PERM = "perm"


@dataclass(frozen=True)
class VincularPattern:
    letters: tuple[int, ...]
    adjacent: frozenset[int]  # 1-based positions p: positions p, p+1 adjacent
    kind: str

    def __post_init__(self):
        k = len(self.letters)
        if self.kind not in (WORD, PERM):
            raise PatternParseError(f"pattern parse error: bad kind {self.kind!r}")
        if not self.adjacent <= set(range(1, k)):
            raise PatternParseError("pattern parse error: adjacency out of range")
        if self.kind == PERM and sorted(self.letters) != list(range(1, k + 1)):
            raise PatternParseError(
                f"pattern parse error: {self.letters} is not a permutation of 1..{k}"
            )

    def __str__(self) -> str:
        out = []
        i = 0
        k = len(self.letters)
        while i < k:
            j = i
            while j < k - 1 and (j + 1) in self.adjacent:
                j += 1
            chunk = "".join(str(v) for v in self.letters[i : j + 1])
            out.append(f"[{chunk}]" if j > i else chunk)
            i = j + 1
        return "".join(out)


def parse_pattern(text: str, kind: str | None = None) -> VincularPattern:
    """Parse pattern text with bracketed adjacent groups, e.g. "[12]0".

    Kind is inferred when omitted: a 0 letter forces a word pattern,
    letters forming a permutation of 1..k suggest a permutation pattern.
    """
    letters: list[int] = []
    adjacent: set[int] = set()
    in_group = False
    group_len = 0
    for i, ch in enumerate(text):
        if ch == "[":
            if in_group:
                raise PatternParseError(f"pattern parse error: nested '[' at {i}")
            in_group = True
            group_len = 0
        elif ch == "]":
            if not in_group:
                raise PatternParseError(f"pattern parse error: unmatched ']' at {i}")
            if group_len == 0:
                raise PatternParseError(f"pattern parse error: empty group at {i}")
            in_group = False
        elif ch.isdigit():
            letters.append(int(ch))
            if in_group:
                group_len += 1
                if group_len > 1:
                    adjacent.add(len(letters) - 1)
        else:
            raise PatternParseError(f"pattern parse error: bad character {ch!r} at {i}")
    if in_group:
        raise PatternParseError("pattern parse error: unclosed '['")
    if not letters:
        raise PatternParseError("pattern parse error: empty pattern")
    if kind is None:
        if 0 in letters:
            kind = WORD
        elif sorted(letters) == list(range(1, len(letters) + 1)):
            kind = PERM
        else:
            kind = WORD
    return VincularPattern(tuple(letters), frozenset(adjacent), kind)


def _check_host_kind(host, pattern: VincularPattern) -> None:
    if pattern.kind == PERM and not is_permutation(host):
        raise KindMismatchError(
            "pattern/host kind mismatch: permutation pattern needs a permutation host"
        )
    if pattern.kind == WORD and any(v < 0 for v in host):
        raise KindMismatchError("pattern/host kind mismatch: negative host entry")


def _sign(a: int, b: int) -> int:
    return (a > b) - (a < b)


class CompiledPattern:
    """Pattern preprocessed into adjacency blocks plus pairwise relations."""

    def __init__(self, pattern: VincularPattern):
        self.pattern = pattern
        letters = pattern.letters
        k = len(letters)
        self.k = k
        blocks = []
        a = 0
        while a < k:
            b = a
            while (b + 1) in pattern.adjacent:  # 1-based position b+1 => b, b+1 adjacent
                b += 1
            blocks.append((a, b - a + 1))
            a = b + 1
        self.blocks = blocks
        rel = [[_sign(letters[a], letters[b]) for b in range(k)] for a in range(k)]
        # comparison lists for forward placement (blocks left to right)
        self.fwd_cmp = [
            tuple((b, rel[a][b]) for b in range(a)) for a in range(k)
        ]
        # comparison lists for end-pinned placement: last block first, then
        # the remaining blocks left to right
        last_start, last_len = blocks[-1]
        order = list(range(last_start, k)) + list(range(last_start))
        placed_before: list[list[int]] = []
        seen: list[int] = []
        rank = {}
        for pos in order:
            rank[pos] = len(seen)
            placed_before.append(list(seen))
            seen.append(pos)
        self.end_cmp = [
            tuple((b, rel[a][b]) for b in placed_before[rank[a]]) for a in range(k)
        ]

    # -- full search -------------------------------------------------------

    def occurrences(self, host) -> list[tuple[int, ...]]:
        """All occurrences as 1-based index tuples, lexicographically."""
        h = list(host)
        n = len(h)
        blocks = self.blocks
        tail_len = [sum(L for _, L in blocks[t:]) for t in range(len(blocks) + 1)]
        assign = [0] * self.k
        found: list[tuple[int, ...]] = []

        def place(t: int, lo: int) -> None:
            if t == len(blocks):
                found.append(tuple(i + 1 for i in assign))
                return
            pstart, blen = blocks[t]
            for s in range(lo, n - tail_len[t] + 1):
                ok = True
                for off in range(blen):
                    a = pstart + off
                    ia = s + off
                    va = h[ia]
                    for b, r in self.fwd_cmp[a]:
                        if _sign(va, h[assign[b]]) != r:
                            ok = False
                            break
                    if not ok:
                        break
                    assign[a] = ia
                if ok:
                    place(t + 1, s + blen)

        place(0, 0)
        return found

    def contains(self, host) -> bool:
        h = list(host)
        n = len(h)
        blocks = self.blocks
        tail_len = [sum(L for _, L in blocks[t:]) for t in range(len(blocks) + 1)]
        assign = [0] * self.k

        def place(t: int, lo: int) -> bool:
            if t == len(blocks):
                return True
            pstart, blen = blocks[t]
            for s in range(lo, n - tail_len[t] + 1):
                ok = True
                for off in range(blen):
                    a = pstart + off
                    ia = s + off
                    va = h[ia]
                    for b, r in self.fwd_cmp[a]:
                        if _sign(va, h[assign[b]]) != r:
                            ok = False
                            break
                    if not ok:
                        break
                    assign[a] = ia
                if ok and place(t + 1, s + blen):
                    return True
            return False

        return place(0, 0)

    # -- incremental search ------------------------------------------------

    def occurs_at_end(self, h) -> bool:
        """True when some occurrence uses the final host position.

        ``h`` is a list whose last element is the freshly appended entry.
        Appending can only create occurrences that end at the new position,
        so this check keeps a growing prefix avoidance-clean.
        """
        q = len(h) - 1
        k = self.k
        if q + 1 < k:
            return False
        blocks = self.blocks
        last_start, last_len = blocks[-1]
        s_last = q - last_len + 1
        if s_last < last_start:
            return False
        assign = [0] * k
        for off in range(last_len):
            a = last_start + off
            ia = s_last + off
            va = h[ia]
            for b, r in self.end_cmp[a]:
                if _sign(va, h[assign[b]]) != r:
                    return False
            assign[a] = ia
        n_free = len(blocks) - 1
        if n_free == 0:
            return True
        tail_len = [sum(L for _, L in blocks[t:n_free]) for t in range(n_free + 1)]

        def place(t: int, lo: int) -> bool:
            if t == n_free:
                return True
            pstart, blen = blocks[t]
            for s in range(lo, s_last - tail_len[t] + 1):
                ok = True
                for off in range(blen):
                    a = pstart + off
                    ia = s + off
                    va = h[ia]
                    for b, r in self.end_cmp[a]:
                        if _sign(va, h[assign[b]]) != r:
                            ok = False
                            break
                    if not ok:
                        break
                    assign[a] = ia
                if ok and place(t + 1, s + blen):
                    return True
            return False

        return place(0, 0)


def _compile(pattern: VincularPattern) -> CompiledPattern:
    return _compile_cached(pattern)


@lru_cache(maxsize=None)
def _compile_cached(pattern: VincularPattern) -> CompiledPattern:
    return CompiledPattern(pattern)


def occurrences(host, pattern: VincularPattern) -> list[tuple[int, ...]]:
    """All occurrences of the pattern in the host, 1-based, in lex order."""
    _check_host_kind(host, pattern)
    return _compile(pattern).occurrences(host)


def avoids(host, pattern: VincularPattern) -> bool:
    _check_host_kind(host, pattern)
    return not _compile(pattern).contains(host)


def _as_patterns(patterns, kind: str) -> tuple[VincularPattern, ...]:
    out = []
    for p in patterns:
        if isinstance(p, str):
            p = parse_pattern(p)  # kind inferred from the letters
        if p.kind != kind:
            raise KindMismatchError(
                f"pattern/host kind mismatch: {p} is a {p.kind} pattern, class needs {kind}"
            )
        out.append(p)
    return tuple(out)


def iter_avoiding(class_id: ClassId, n: int, patterns=(), cap: int | None = None):
    """Stream class members avoiding every pattern, in lexicographic order.

    Generation is a depth-first search over prefixes; a candidate entry is
    rejected as soon as it completes an occurrence of some pattern, so the
    search tree is the set of avoiding prefixes rather than the whole class.
    """
    pats = _as_patterns(patterns, class_id.kind)
    check_cap(class_id, n, cap)
    checks = [_compile(p) for p in pats]
    if class_id is ClassId.PERMUTATION:
        return _iter_perm_avoiding(n, checks)
    return _iter_word_avoiding(class_id, n, checks)


def _iter_word_avoiding(class_id: ClassId, n: int, checks):
    if n == 0:
        yield ()
        return
    ascent = class_id in (ClassId.ASCENT, ClassId.PRIMITIVE_ASCENT)
    primitive = class_id is ClassId.PRIMITIVE_ASCENT
    w: list[int] = []

    def rec(asc: int):
        i = len(w)
        if i == n:
            yield tuple(w)
            return
        last = w[-1] if w else -1
        hi = min(asc + 1, i) if ascent else i
        for v in range(hi + 1):
            if primitive and v == last:
                continue
            w.append(v)
            if not any(c.occurs_at_end(w) for c in checks):
                yield from rec(asc + (1 if i > 0 and v > last else 0))
            w.pop()

    yield from rec(0)


def _iter_perm_avoiding(n: int, checks):
    if n == 0:
        yield ()
        return
    w: list[int] = []
    unused = list(range(1, n + 1))

    def rec():
        if not unused:
            yield tuple(w)
            return
        for idx in range(len(unused)):
            v = unused[idx]
            w.append(v)
            if not any(c.occurs_at_end(w) for c in checks):
                unused.pop(idx)
                yield from rec()
                unused.insert(idx, v)
            w.pop()

    yield from rec()


def filter_avoiding(class_id: ClassId, n: int, patterns=(), cap: int | None = None) -> list[Seq]:
    """Class members avoiding every listed pattern, lexicographic order."""
    return list(iter_avoiding(class_id, n, patterns, cap))


_CACHE_MAX_N = 9


@lru_cache(maxsize=None)
def _avoiding_cached(class_id: ClassId, n: int, patterns) -> tuple[Seq, ...]:
    return tuple(iter_avoiding(class_id, n, patterns))


def avoiding(class_id: ClassId, n: int, patterns=()):
    """Like filter_avoiding but memoized for small n; returns an iterable.

    Repeated verification passes over the same class at n <= 9 hit the
    cache; larger classes are streamed fresh each time.
    """
    pats = _as_patterns(patterns, class_id.kind)
    if n <= _CACHE_MAX_N:
        return _avoiding_cached(class_id, n, pats)
    return iter_avoiding(class_id, n, pats)
