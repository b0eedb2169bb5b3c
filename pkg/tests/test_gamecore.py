import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pcalm import gamecore as gc
from pcalm.padic import mord, nim_sum, ord_p

SAT3_NIM2_TABLE = [[0, 1, 2, 3], [1, 2, 0, 4], [2, 0, 1, 5], [3, 4, 5, 6]]


def brute_sg(spec, A, memo=None):
    """Plain recursive mex over game.options, sharing nothing with EvalTable."""
    memo = {} if memo is None else memo
    if A not in memo:
        vals = {brute_sg(spec, B, memo) for B in gc.options(spec, A)}
        g = 0
        while g in vals:
            g += 1
        memo[A] = g
    return memo[A]


def test_table_one():
    table = gc.EvalTable(gc.saturate(gc.nim(2), 3), 3)
    assert [[table.value((i, j))[0] for j in range(4)] for i in range(4)] == SAT3_NIM2_TABLE


def test_saturation_membership_examples():
    assert gc.is_saturation_move(3, (1, 0))
    assert not gc.is_saturation_move(3, (1, 2))
    assert gc.is_saturation_move(3, (1, 1))
    assert not gc.is_saturation_move(3, (0, 0))


@settings(max_examples=300)
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 60), min_size=1, max_size=4))
def test_digit_criterion_matches_definition(p, C):
    C = tuple(C)
    if any(C):
        assert gc.is_saturation_move(p, C) == (ord_p(p, sum(C)) == mord(p, C))


def test_options_are_lexicographic():
    assert gc.options(gc.nim(2), (1, 2)) == [(0, 2), (1, 0), (1, 1)]
    assert gc.options(gc.welter(2), (2, 0)) == [(1, 0)]
    with pytest.raises(ValueError):
        gc.options(gc.welter(2), (1, 1))


def test_weight_one_is_inside_every_saturation():
    for p in (2, 3, 5):
        assert gc.saturate(gc.welter(3), p).moves == gc.Saturation(3, p)


def test_saturate_rejects_moves_outside():
    bad = gc.explicit_game(2, [(1, 2)])
    with pytest.raises(ValueError):
        gc.saturate(bad, 3)
    assert gc.saturate(bad, 2).moves.p == 2


def test_sum_of_nims_is_nim():
    assert gc.disjunctive_sum([gc.nim(1), gc.nim(2)]) == gc.nim(3)
    s = gc.disjunctive_sum([gc.welter(2), gc.nim(1)])
    assert s.component_arities == (2, 1)
    nested = gc.disjunctive_sum([s, gc.welter(3)])
    assert nested.component_arities == (2, 1, 3)


def test_sum_moves_touch_one_summand():
    s = gc.disjunctive_sum([gc.welter(2), gc.nim(1)])
    assert s.moves.contains((1, 0, 0))
    assert not s.moves.contains((1, 0, 1))
    assert gc.options(s, (2, 0, 1)) == [(1, 0, 1), (2, 0, 0)]


def test_two_point_game():
    g = gc.two_point_game(3)
    assert gc.options(g, (3,)) == [(0,)]
    assert gc.sg(gc.saturate(g, 3), (3,)) == 1


@pytest.mark.parametrize("spec", [gc.nim(2), gc.welter(3), gc.saturate(gc.nim(2), 3),
                                  gc.saturate(gc.welter(2), 5),
                                  gc.saturate(gc.disjunctive_sum([gc.welter(2), gc.nim(1)]), 2)])
def test_eval_table_matches_recursive_mex(spec):
    bound = 4
    table = gc.EvalTable(spec, bound).fill()
    memo = {}
    for A in spec.enumerate(bound):
        assert table.value(A)[0] == brute_sg(spec, A, memo)


def test_lg_and_descendants_by_brute_paths():
    spec = gc.saturate(gc.welter(2), 3)
    table = gc.EvalTable(spec, 4)
    for A in spec.enumerate(4):
        reach, frontier = set(), [A]
        while frontier:
            X = frontier.pop()
            for B in gc.options(spec, X):
                if B not in reach:
                    reach.add(B)
                    frontier.append(B)
        assert table.descendants(A) == frozenset(reach)
        longest = max((1 + table.value(B)[1] for B in gc.options(spec, A)), default=0)
        assert table.value(A)[1] == longest


def test_saturated_nim_is_base_p_nim_small():
    for p in (2, 3):
        table = gc.EvalTable(gc.saturate(gc.nim(3), p), 3)
        for A in itertools.product(range(4), repeat=3):
            assert table.value(A)[0] == nim_sum(p, A)


def test_table_bound_and_mismatch():
    table = gc.EvalTable(gc.nim(1), 3)
    with pytest.raises(ValueError):
        table.value((4,))
    with pytest.raises(ValueError):
        gc.sg(gc.nim(2), (1, 1), table=table)
    assert gc.lg(gc.nim(2), (2, 3)) == 5
    assert gc.is_full(gc.saturate(gc.nim(2), 2), (2, 1))


def test_mex():
    assert gc.mex([]) == 0
    assert gc.mex([0, 1, 3]) == 2


def test_parse_game(tmp_path):
    assert gc.parse_game("nim:2") == gc.nim(2)
    assert gc.parse_game("sum:welter:3+welter:1").component_arities == (3, 1)
    f = tmp_path / "g.game"
    f.write_text("m=1\n3\npositions:\n0\n3\n")
    g = gc.parse_game(f"explicit:@{f}")
    assert gc.options(g, (3,)) == [(0,)]
    for bad in ("nim", "rook:2", "explicit:g.game"):
        with pytest.raises(ValueError):
            gc.parse_game(bad)
