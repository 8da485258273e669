import itertools

import pytest

from patternlab.bijections import (
    PATTERN_120,
    PATTERN_3214,
    check_restriction,
    invcode,
    invcode_inverse,
)
from patternlab.errors import NotInClassError
from patternlab.patterns import avoids


def test_invcode_examples():
    assert invcode((3, 2, 1)) == (0, 1, 2)
    assert invcode((2, 4, 1, 3)) == (0, 0, 2, 1)
    assert invcode((1, 2, 3, 4, 5)) == (0, 0, 0, 0, 0)
    assert invcode(()) == ()


def test_invcode_inverse_examples():
    assert invcode_inverse((0, 1, 2)) == (3, 2, 1)
    assert invcode_inverse((0, 0, 0, 0)) == (1, 2, 3, 4)
    assert invcode_inverse(()) == ()


def test_invcode_validates_input():
    with pytest.raises(NotInClassError):
        invcode((1, 3))
    with pytest.raises(NotInClassError):
        invcode_inverse((1, 0))


def test_round_trip_exhaustive():
    for n in range(0, 9):
        seen = set()
        for pi in itertools.permutations(range(1, n + 1)):
            e = invcode(pi)
            assert invcode_inverse(e) == pi
            seen.add(e)
        # bijection onto all inversion sequences of length n
        import math

        assert len(seen) == math.factorial(n)


def test_last_statistic_preserved():
    for n in range(1, 9):
        for pi in itertools.permutations(range(1, n + 1)):
            assert invcode(pi)[-1] == n - pi[-1]


def test_containment_equivalence():
    # the permutation contains 3[21]4 exactly when its code contains [12]0
    for n in range(1, 9):
        for pi in itertools.permutations(range(1, n + 1)):
            assert avoids(pi, PATTERN_3214) == avoids(invcode(pi), PATTERN_120)


def test_check_restriction_small():
    for n in range(1, 7):
        report = check_restriction(n)
        assert report.passed, report
        assert report.perm_side == report.seq_side
    assert check_restriction(4).perm_side == 23
