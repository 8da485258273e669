import pytest

from patternlab.errors import MalformedInputError, NotInClassError
from patternlab.growth import (
    GrowthCase,
    backward_shift,
    decompose_zero_blocks,
    forward_shift,
    grow,
    params_120,
    rule_children,
    tree_levels,
    ungrow,
)
from patternlab.numbers import c_triangle, powered_catalan
from patternlab.patterns import avoids, iter_avoiding, parse_pattern
from patternlab.seqcore import ClassId, parse_sequence

P120 = parse_pattern("[12]0")
E12 = parse_sequence("010211002565")

# the eleven children of 010211002565, by case tag
CHILDREN_OF_E12 = {
    "(4+1)": "0020322003676",
    "(1)": "0121322113676",
    "(2,2)": "0021322113676",
    "(2,1)": "0110322113676",
    "(3,3)": "0020322113676",
    "(3,2)": "0102111013676",
    "(3,1)": "0110322013676",
    "(4,4)": "0020322013676",
    "(4,3)": "0020322103676",
    "(4,2)": "0102111003676",
    "(4,1)": "0110322003676",
}


def test_decompose_example():
    zeros, blocks = decompose_zero_blocks(E12)
    assert zeros == (1, 3, 7, 8)
    assert blocks == [(1,), (2, 1, 1), (), (2, 5, 6, 5)]


def test_decompose_trivial_and_error():
    assert decompose_zero_blocks((0,)) == ((1,), [()])
    with pytest.raises(NotInClassError):
        decompose_zero_blocks(parse_sequence("00120"))
    with pytest.raises(NotInClassError):
        decompose_zero_blocks(())


def test_grow_reproduces_worked_example():
    got = {case.tag: "".join(map(str, child)) for case, child in grow(E12)}
    assert got == CHILDREN_OF_E12


def test_grow_child_count_and_order():
    cases = [case for case, _ in grow(E12)]
    assert len(cases) == 11  # C(5,2) + 1 with four zeros
    assert cases[0] == GrowthCase(5)
    assert cases[1] == GrowthCase(1)
    assert cases[2:5] == [GrowthCase(2, 2), GrowthCase(2, 1), GrowthCase(3, 3)]


def test_grow_smallest():
    assert grow((0,)) == [(GrowthCase(2), (0, 0)), (GrowthCase(1), (0, 1))]


def test_grow_zero_count_contract():
    for n in range(1, 7):
        for e in iter_avoiding(ClassId.INVERSION, n, [P120]):
            k = e.count(0)
            children = grow(e)
            tags = sorted(case.zeros for case, _ in children)
            expected = sorted([k + 1, 1] + [j for j in range(2, k + 1) for _ in range(j)])
            assert tags == expected
            for case, child in children:
                assert child.count(0) == case.zeros
                assert avoids(child, P120)
            assert len({child for _, child in children}) == len(children)


def test_grow_rejects_non_members():
    with pytest.raises(NotInClassError):
        grow(parse_sequence("00120"))
    with pytest.raises(NotInClassError):
        grow((1, 0))


def test_backward_shift_framed_example():
    out = backward_shift(parse_sequence("0022201740980131"), m=3, j=5)
    assert out == parse_sequence("0111052010980131")


def test_backward_shift_trace_matches_worked_intermediates():
    trace = []
    backward_shift(parse_sequence("0022201740980131"), m=3, j=5, trace=trace)
    snaps = ["".join(map(str, s)) for s, _, _ in trace]
    assert snaps == ["0022206310980131", "0022252010980131", "0111052010980131"]


def test_backward_shift_noop_cases():
    # m == j leaves the input unchanged
    e = parse_sequence("0020322013676")
    assert backward_shift(e, m=4, j=4) == e
    # empty block after the lone 1 leaves the input unchanged
    e = parse_sequence("0020322103676")
    assert backward_shift(e, m=3, j=4) == e


def test_backward_shift_validates_shape():
    with pytest.raises(MalformedInputError):
        backward_shift(parse_sequence("0022201740980131"), m=3, j=4)  # wrong zero count
    with pytest.raises(MalformedInputError):
        backward_shift(parse_sequence("0102111013676"), m=2, j=3)  # two 1s before last zero
    with pytest.raises(MalformedInputError):
        backward_shift((1, 0), m=1, j=1)
    with pytest.raises(MalformedInputError):
        backward_shift((0, 0, 2), m=2, j=1)


def test_forward_shift_framed_example():
    trace = []
    out = forward_shift(parse_sequence("0111052010980131"), trace=trace)
    assert out == parse_sequence("0022201740980131")
    snaps = ["".join(map(str, s)) for s, _, _ in trace]
    assert snaps == ["0022252010980131", "0022206310980131", "0022201740980131"]


def test_forward_shift_noop_when_zone_has_one_1():
    e = parse_sequence("0020322103676")  # single 1 inside the zero zone
    assert forward_shift(e) == e
    e = parse_sequence("0020322013676")  # no 1 inside the zero zone
    assert forward_shift(e) == e


def test_forward_shift_validates_preconditions():
    with pytest.raises(MalformedInputError):
        forward_shift((0, 2, 3))  # one zero only
    with pytest.raises(MalformedInputError):
        forward_shift((0, 2, 0))  # no ones


def test_shift_round_trip_on_grow_images():
    # forward o backward is the identity on every middle-case child
    for n in range(1, 8):
        for e in iter_avoiding(ClassId.INVERSION, n, [P120]):
            zeros = [i + 1 for i, v in enumerate(e) if v == 0]
            k = len(zeros)
            eprime = [0] + [v + 1 if v else 0 for v in e]
            for j in range(2, k + 1):
                base = eprime.copy()
                for p in zeros[j:]:
                    base[p] = 1
                for m in range(1, j + 1):
                    cand = base.copy()
                    cand[zeros[m - 1]] = 1
                    shifted = backward_shift(cand, m, j)
                    assert forward_shift(shifted) == tuple(cand), (e, j, m)


def test_ungrow_worked_example():
    assert ungrow(parse_sequence("0020322003676")) == (E12, GrowthCase(5))
    assert ungrow(parse_sequence("0102111013676")) == (E12, GrowthCase(3, 2))
    assert ungrow(parse_sequence("0121322113676")) == (E12, GrowthCase(1))


def test_ungrow_errors():
    with pytest.raises(NotInClassError):
        ungrow((0,))
    with pytest.raises(NotInClassError):
        ungrow(parse_sequence("00120"))


def test_grow_ungrow_bijection_small():
    for n in range(1, 8):
        level = list(iter_avoiding(ClassId.INVERSION, n, [P120]))
        children = []
        for e in level:
            for case, child in grow(e):
                assert ungrow(child) == (e, case)
                children.append(child)
        assert sorted(children) == list(iter_avoiding(ClassId.INVERSION, n + 1, [P120]))


# ---------------------------------------------------------------------------
# succession rules

def test_rule_children_pcat():
    assert rule_children("pcat", 1) == [1, 2]
    assert rule_children("pcat", 2) == [1, 2, 2, 3]
    assert rule_children("pcat", 3) == [1, 2, 2, 3, 3, 3, 4]


def test_rule_children_pq120():
    assert rule_children("pq120", (1, 1)) == [(1, 2), (2, 1)]
    assert sorted(rule_children("pq120", (2, 1))) == [(1, 3), (2, 2), (3, 1)]
    with pytest.raises(ValueError):
        rule_children("pq120", (0, 1))
    with pytest.raises(ValueError):
        rule_children("nope", 1)


def test_params_examples():
    assert params_120((0,)) == (1, 1)
    assert params_120((0, 1)) == (1, 2)
    assert params_120((0, 0)) == (2, 1)
    with pytest.raises(NotInClassError):
        params_120(parse_sequence("00120"))


def test_params_against_definition():
    for n in range(1, 7):
        for e in iter_avoiding(ClassId.INVERSION, n, [P120]):
            p, q = params_120(e)
            above = sum(
                1 for v in range(e[-1] + 1, n + 1) if avoids(e + (v,), P120)
            )
            below = sum(1 for v in range(e[-1] + 1) if avoids(e + (v,), P120))
            assert (p, q) == (above, below)
            assert p == n - e[-1]


def test_tree_levels_match_c_triangle():
    levels = tree_levels("pcat", 12)
    ct = c_triangle(12)
    for n in range(1, 13):
        assert levels[n - 1] == {k: ct.entry(n, k) for k in range(1, n + 1)}


def test_tree_level_sizes_are_powered_catalan():
    for rule in ("pcat", "pq120"):
        sizes = [sum(d.values()) for d in tree_levels(rule, 9)]
        assert sizes == [powered_catalan(n) for n in range(1, 10)]


def test_tree_levels_cap():
    with pytest.raises(ValueError):
        tree_levels("pcat", 15)
    assert len(tree_levels("pcat", 15, cap=15)) == 15
