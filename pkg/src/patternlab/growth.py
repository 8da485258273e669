"""Growth machinery for inversion sequences avoiding the vincular pattern
with an adjacent ascent followed by a smaller entry ("[12]0").

Each such sequence e with k zeros produces C(k+1,2) + 1 children of length
n+1, one per succession case:

* top case: prepend 0 to the shifted sequence (child has k+1 zeros),
* one case: additionally turn every old zero into a 1 (child has one zero),
* middle case (j, m) for 2 <= j <= k, 1 <= m <= j: keep the first j old
  zeros except the m-th, turn the rest into 1s, then repair the sequence
  with a backward shift so it avoids the pattern again.

The backward shift walks a window leftward through the prefix, moving a
marker past blocks while decrementing them; the forward shift is its exact
inverse and is what ungrow uses to recover the parent.  Together they make
the growth a bijection onto the next level, which is what gives the class
the powered Catalan succession rule.

Positions reported publicly are 1-based; internally lists are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedInputError, NotInClassError
from .patterns import CompiledPattern, avoids, parse_pattern
from .seqcore import Seq, is_inversion_sequence, sigma_shift

PATTERN_120 = parse_pattern("[12]0")
_CHECK_120 = CompiledPattern(PATTERN_120)


@dataclass(frozen=True)
class GrowthCase:
    """Succession case tag.  zeros is the child's zero count; m is set only
    for the middle cases."""

    zeros: int
    m: int | None = None

    @property
    def tag(self) -> str:
        if self.m is not None:
            return f"({self.zeros},{self.m})"
        if self.zeros == 1:
            return "(1)"
        return f"({self.zeros - 1}+1)"


def _require_in_class(e) -> None:
    if not is_inversion_sequence(e):
        raise NotInClassError(f"not in class: {e} is not an inversion sequence")
    if not avoids(e, PATTERN_120):
        raise NotInClassError(f"not in class: {e} contains the pattern [12]0")


def decompose_zero_blocks(e) -> tuple[tuple[int, ...], list[Seq]]:
    """Zero positions (1-based) and the zero-free blocks between them.

    With zeros at i_1 < ... < i_k the sequence splits as
    0 W_1 0 W_2 0 ... 0 W_{k-1} 0 W_k; the inner blocks W_1..W_{k-1} of an
    avoiding sequence are necessarily non-increasing.
    """
    e = tuple(e)
    if not e:
        raise NotInClassError("not in class: empty sequence")
    _require_in_class(e)
    zeros = tuple(i + 1 for i, v in enumerate(e) if v == 0)
    blocks: list[Seq] = []
    for idx, z in enumerate(zeros):
        end = zeros[idx + 1] - 1 if idx + 1 < len(zeros) else len(e)
        blocks.append(e[z:end])
    for w in blocks[:-1]:
        assert all(a >= b for a, b in zip(w, w[1:])), "inner block not non-increasing"
    return zeros, blocks


# ---------------------------------------------------------------------------
# backward shift

def backward_shift(e, m: int, j: int, trace: list | None = None) -> Seq:
    """Repair step for the middle succession case.

    The input must look like 0 0 U_1 0 ... 0 U_{m-1} 1 U_m 0 ... 0 U_j
    1 U_{j+1} 1 ... 1 U_k with exactly j zeros and, left of the trailing
    part, a single 1 preceded by exactly m zeros.  When m = j or the block
    after that 1 is empty the input is already repaired.  Otherwise a window
    [L delta R] is repeatedly rewritten to [L sigma_{-1}(R) delta], where
    delta is the single symbol left of R and L is the maximal zero-free run
    left of delta, until the decremented block bottoms out at 1 next to a
    zero.

    When given, ``trace`` collects (snapshot, lo, hi) with the 1-based
    bounds of the freshly decremented block after each rewrite.
    """
    seq = list(e)
    n = len(seq)
    if not 1 <= m <= j:
        raise MalformedInputError(f"malformed BS input: need 1 <= m <= j, got m={m} j={j}")
    if not seq or seq[0] != 0:
        raise MalformedInputError("malformed BS input: sequence must start with 0")
    zero_idx = [i for i, v in enumerate(seq) if v == 0]
    if len(zero_idx) != j:
        raise MalformedInputError(
            f"malformed BS input: expected {j} zeros, found {len(zero_idx)}"
        )
    last_zero = zero_idx[-1]
    ones_before = [i for i in range(last_zero) if seq[i] == 1]
    if m == j:
        if ones_before:
            raise MalformedInputError("malformed BS input: unexpected 1 left of the last zero")
        return tuple(seq)
    if len(ones_before) != 1:
        raise MalformedInputError(
            "malformed BS input: need exactly one 1 left of the last zero"
        )
    t = ones_before[0]
    if sum(1 for i in zero_idx if i < t) != m:
        raise MalformedInputError(
            f"malformed BS input: the lone 1 is not preceded by exactly {m} zeros"
        )
    # U_m = maximal zero-free run right of the lone 1
    r0 = t + 1
    r1 = t
    while r1 + 1 < n and seq[r1 + 1] != 0:
        r1 += 1
    if r1 < r0:
        return tuple(seq)  # U_m empty

    while True:
        d = r0 - 1
        if d < 0:
            raise MalformedInputError("malformed BS input: window ran off the left end")
        delta = seq[d]
        if delta not in (0, 1):
            raise MalformedInputError("malformed BS input: marker left of block is not 0 or 1")
        l0 = d
        while l0 - 1 >= 0 and seq[l0 - 1] != 0:
            l0 -= 1
        l1 = d - 1  # L = seq[l0..l1], empty when l0 > l1
        dec = [v - 1 for v in seq[r0 : r1 + 1]]
        seq[d:r1] = dec
        seq[r1] = delta
        if trace is not None:
            trace.append((tuple(seq), d + 1, r1))
        if l0 <= l1:
            r0, r1 = l0, l1
        elif min(dec) == 1:
            break
        else:
            r0, r1 = d, r1 - 1
    return tuple(seq)


# ---------------------------------------------------------------------------
# forward shift

def forward_shift(e, trace: list | None = None) -> Seq:
    """Inverse of the backward shift on its image.

    Requires at least two zeros and one 1.  The zero zone is the substring
    strictly between the leftmost and the rightmost zero; with fewer than
    two 1s there the input is returned unchanged.  Otherwise windows
    [L 0 R] are rewritten to [0 sigma_1(L) R] left to right, starting from
    the block that contains the leftmost 1 of the zone, until R ends with
    the rightmost 1 of the zone; a final rewrite moves that 1 to the front
    of its block.
    """
    seq = list(e)
    n = len(seq)
    zero_idx = [i for i, v in enumerate(seq) if v == 0]
    if len(zero_idx) < 2:
        raise MalformedInputError("malformed FS input: need at least two zeros")
    if 1 not in seq:
        raise MalformedInputError("malformed FS input: need at least one 1")
    z_first, z_last = zero_idx[0], zero_idx[-1]
    zone_ones = [i for i in range(z_first + 1, z_last) if seq[i] == 1]
    if len(zone_ones) < 2:
        return tuple(seq)
    rm1 = zone_ones[-1]
    # L = the zero-free block containing the leftmost 1 of the zone
    l0 = zone_ones[0]
    while l0 - 1 >= 0 and seq[l0 - 1] != 0:
        l0 -= 1
    l1 = zone_ones[0]
    while l1 + 1 < n and seq[l1 + 1] != 0:
        l1 += 1

    if l1 == rm1:
        # The starting block already ends with the rightmost 1 of the zone:
        # it came from a single backward rewrite, so restore it in place via
        # R' 1 -> 1 sigma_1(R') without any forward pass.
        if seq[l1] != 1 or l0 >= l1 or l1 + 1 >= n or seq[l1 + 1] != 0:
            raise MalformedInputError("malformed FS input: bad terminal block")
        rp = seq[l0:l1]
        seq[l0] = 1
        seq[l0 + 1 : l1 + 1] = [v + 1 for v in rp]
        if trace is not None:
            trace.append((tuple(seq), l0 + 2, l1 + 1))
        return tuple(seq)

    while True:
        z = l1 + 1
        if z >= n or seq[z] != 0 or z > z_last:
            raise MalformedInputError("malformed FS input: no zero right of the block")
        r0 = z + 1
        r1 = z
        while r1 + 1 < n and seq[r1 + 1] != 0:
            r1 += 1
        inc = [v + 1 for v in seq[l0 : l1 + 1]]
        seq[l0] = 0
        seq[l0 + 1 : l1 + 2] = inc
        if trace is not None:
            trace.append((tuple(seq), l0 + 2, l1 + 2))
        if r1 >= r0 and r1 == rm1:
            if seq[r1] != 1 or r1 + 1 >= n or seq[r1 + 1] != 0:
                raise MalformedInputError("malformed FS input: bad terminal window")
            if r0 > r1 - 1:
                # lone 1: rewrite sigma_1(L) 1 0 -> 1 sigma_2(L) 0
                cur = seq[l0 + 1 : z + 1]
                seq[l0 + 1] = 1
                seq[l0 + 2 : z + 2] = [v + 1 for v in cur]
                if trace is not None:
                    trace.append((tuple(seq), l0 + 2, z + 1))
            else:
                # rewrite R' 1 0 -> 1 sigma_1(R') 0
                rp = seq[r0:r1]
                seq[r0] = 1
                seq[r0 + 1 : r1 + 1] = [v + 1 for v in rp]
                if trace is not None:
                    trace.append((tuple(seq), r0 + 2, r1 + 1))
            break
        if r1 < r0:
            l0, l1 = l0 + 1, l1 + 1
        else:
            l0, l1 = r0, r1
    return tuple(seq)


# ---------------------------------------------------------------------------
# grow / ungrow

def grow(e) -> list[tuple[GrowthCase, Seq]]:
    """All children of e, each tagged with its succession case.

    Children are returned top case first, then the one case, then the
    middle cases with j ascending and m descending.
    """
    e = tuple(e)
    zeros, _ = decompose_zero_blocks(e)  # validates membership
    k = len(zeros)
    eprime = list((0,) + sigma_shift(e, 1))
    # index p in eprime corresponds to 1-based position p of e
    children: list[tuple[GrowthCase, Seq]] = [(GrowthCase(k + 1), tuple(eprime))]
    c1 = eprime.copy()
    for p in zeros:
        c1[p] = 1
    children.append((GrowthCase(1), tuple(c1)))
    for j in range(2, k + 1):
        base = eprime.copy()
        for p in zeros[j:]:
            base[p] = 1
        for m in range(j, 0, -1):
            cand = base.copy()
            cand[zeros[m - 1]] = 1
            children.append((GrowthCase(j, m), backward_shift(cand, m, j)))
    return children


def _strip_level(eprime) -> Seq:
    """Invert the common prefix step: drop the leading 0 and shift down."""
    if not eprime or eprime[0] != 0:
        raise NotInClassError("not in class: child must start with 0")
    return sigma_shift(eprime[1:], -1)


def ungrow(child) -> tuple[Seq, GrowthCase]:
    """Parent of a child of length >= 2, with the succession case used.

    Case detection: a child without 1s came from the top case, a child with
    a single zero from the one case, anything else from a middle case.
    """
    child = tuple(child)
    if len(child) < 2:
        raise NotInClassError("not in class: child must have length >= 2")
    _require_in_class(child)
    zc = sum(1 for v in child if v == 0)
    if 1 not in child:
        parent = _strip_level(child)
        case = GrowthCase(zc)
    elif zc == 1:
        eprime = tuple(0 if v == 1 else v for v in child)
        parent = _strip_level(eprime)
        case = GrowthCase(1)
    else:
        edd = forward_shift(child)
        first_one = edd.index(1)
        eprime = tuple(0 if v == 1 else v for v in edd)
        parent = _strip_level(eprime)
        parent_zeros = [i + 1 for i, v in enumerate(parent) if v == 0]
        # the replaced zero of the parent sits at eprime index first_one
        try:
            m = parent_zeros.index(first_one) + 1
        except ValueError:
            raise NotInClassError(
                f"not in class: {child} is not a middle-case child"
            ) from None
        case = GrowthCase(zc, m)
    if not is_inversion_sequence(parent) or not avoids(parent, PATTERN_120):
        raise NotInClassError(f"not in class: recovered parent {parent} invalid")
    return parent, case


# ---------------------------------------------------------------------------
# succession rules as label rewriting systems

def rule_children(rule: str, label):
    """Child labels of a node, per rule 'pcat' ((k) labels) or 'pq120'
    ((p, q) labels)."""
    if rule == "pcat":
        k = int(label)
        if k < 1:
            raise ValueError(f"bad pcat label {label!r}")
        out = [1]
        for i in range(2, k + 1):
            out.extend([i] * i)
        out.append(k + 1)
        return out
    if rule == "pq120":
        p, q = label
        if p < 1 or q < 1:
            raise ValueError(f"bad pq120 label {label!r}")
        first = [(p - i + 1, i + 1) for i in range(1, p + 1)]
        second = [(p + i, q + 1 - i) for i in range(1, q + 1)]
        return first + second
    raise ValueError(f"unknown rule {rule!r}")


ROOTS = {"pcat": 1, "pq120": (1, 1)}

TREE_LEVEL_CAP = 14


def tree_levels(rule: str, n_max: int, cap: int = TREE_LEVEL_CAP) -> list[dict]:
    """Label counts per generating-tree level 1..n_max.

    Only counts are kept, never the tree; level sizes grow like the powered
    Catalan numbers, hence the cap.
    """
    if rule not in ROOTS:
        raise ValueError(f"unknown rule {rule!r}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > cap:
        raise ValueError(f"cap exceeded: n_max={n_max} > {cap}")
    level = {ROOTS[rule]: 1}
    out = [dict(level)]
    for _ in range(n_max - 1):
        nxt: dict = {}
        for label, count in level.items():
            for child in rule_children(rule, label):
                nxt[child] = nxt.get(child, 0) + count
        level = nxt
        out.append(dict(level))
    return out


def params_120(e) -> tuple[int, int]:
    """The (p, q) label of an avoiding sequence under the pq120 rule.

    p counts appendable entries above the last entry (always n - e_n);
    q counts appendable entries at most the last entry, checked by actually
    appending and testing avoidance.
    """
    e = tuple(e)
    if not e:
        raise NotInClassError("not in class: empty sequence")
    _require_in_class(e)
    n = len(e)
    p = n - e[-1]
    q = 0
    host = list(e) + [0]
    for v in range(e[-1] + 1):
        host[-1] = v
        if not _CHECK_120.occurs_at_end(host):
            q += 1
    return p, q
