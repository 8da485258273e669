import pytest

from patternlab.errors import KindMismatchError, NotPrimitiveError
from patternlab.numbers import IntPoly
from patternlab.patterns import avoids, parse_pattern
from patternlab.seqcore import ClassId, iter_class, parse_sequence
from patternlab.stats import (
    asc,
    last_entry,
    lmax,
    lmin,
    max_hits,
    perm_last,
    rep,
    rmax,
    rmin,
    runs,
    stat,
    tail_sequence,
    weight_polynomial,
    zero,
)


def test_asc_examples():
    e = parse_sequence("0102324325")
    assert asc(e) == 5
    assert len(tail_sequence(e)) == 6
    assert asc(()) == 0
    assert asc((0,)) == 0


def test_zero_and_last():
    assert zero(parse_sequence("010211002565")) == 4
    assert last_entry((0, 1, 2)) == 2
    assert perm_last((2, 4, 1, 3)) == 1
    with pytest.raises(ValueError):
        last_entry(())
    with pytest.raises(ValueError):
        perm_last(())


def test_max_and_rep():
    e = parse_sequence("0102324325")
    assert max_hits(e) == 2
    assert rep(e) == 4


def test_extrema_conventions():
    # the final position is always a right-to-left minimum and maximum
    assert rmin((0, 0)) == 1
    assert rmax((0, 0)) == 1
    assert rmin((1, 2, 3)) == 3
    assert rmax((1, 2, 3)) == 1
    assert lmax((1, 2, 3)) == 3
    assert lmin((3, 1, 2)) == 2
    identity = tuple(range(1, 7))
    assert rmin(identity) == 6
    assert rmax(identity) == 1
    assert lmax(identity) == 6


def test_lmax_complement_invariant():
    for pi in iter_class(ClassId.PERMUTATION, 5):
        non_lmax = sum(
            1 for i in range(5) if any(pi[j] > pi[i] for j in range(i))
        )
        assert lmax(pi) + non_lmax == 5


def test_zero_at_least_one_on_inversion_sequences():
    for n in range(1, 7):
        assert all(zero(e) >= 1 for e in iter_class(ClassId.INVERSION, n))


def test_stat_dispatch():
    assert stat("last", (2, 4, 1, 3), "perm") == 1
    assert stat("last", (0, 0, 2), "word") == 2
    with pytest.raises(KindMismatchError):
        stat("zero", (2, 1), "perm")
    with pytest.raises(KindMismatchError):
        stat("rmax", (0, 1), "word")
    with pytest.raises(KindMismatchError):
        stat("asc", (0, 1), "matrix")


def test_runs_and_tails_paper_example():
    e = parse_sequence("0102324325")
    assert runs(e) == [(0,), (1, 0), (2,), (3, 2), (4, 3, 2), (5,)]
    assert tail_sequence(e) == parse_sequence("002225")


def test_tail_sequence_trivial_cases():
    assert tail_sequence((0,)) == (0,)
    assert tail_sequence((0, 1, 2)) == (0, 1, 2)
    assert tail_sequence(()) == ()


def test_tail_rejects_non_primitive():
    with pytest.raises(NotPrimitiveError):
        tail_sequence((0, 0, 1))
    with pytest.raises(NotPrimitiveError):
        weight_polynomial((0, 1, 1))


def test_tail_length_is_asc_plus_one():
    for n in range(1, 9):
        for e in iter_class(ClassId.PRIMITIVE_ASCENT, n):
            t = tail_sequence(e)
            assert len(t) == asc(e) + 1
            # tails form an inversion sequence of their own length
            assert all(0 <= t[i] <= i for i in range(len(t)))


def test_tail_lemma_small():
    p120 = parse_pattern("[12]0")
    for n in range(1, 9):
        for e in iter_class(ClassId.PRIMITIVE_ASCENT, n):
            t = tail_sequence(e)
            nondecreasing = all(a <= b for a, b in zip(t, t[1:]))
            assert avoids(e, p120) == nondecreasing


def test_weight_polynomial_examples():
    assert weight_polynomial(parse_sequence("0102324325")) == IntPoly.monomial(4)
    assert weight_polynomial((0,)) == IntPoly([1])
    assert weight_polynomial((0, 1, 0)) == IntPoly.monomial(1)
