import random

import pytest

from sproutgames.bs2 import (
    Bs2Move,
    Bs2Position,
    NoWinningMove,
    bs2_children_after_forced_move,
    bs2_engine_move,
    bs2_intermediate_nimber,
    bs2_nimber,
    bs2_play_length_bounds,
    bs2_second_player_strategy,
)
from sproutgames.circular import GameSum, GrundyTable, canonicalize

from oracles import sum_play_length_range

TABLE = GrundyTable()


def test_children_after_forced_move_dedup():
    sums = bs2_children_after_forced_move(3, 3)
    assert len(sums) == 3
    canon = {tuple(tuple(canonicalize(c)) for c in gs) for gs in sums}
    assert (tuple(canonicalize((0, 1, 0, 1))), tuple(canonicalize((1, 1, 1, 1)))) in canon


def test_children_substitution_shapes():
    sums = bs2_children_after_forced_move(3, 4)
    first = [tuple(c) for c in sums[0]]
    assert first == [(0, 1, 0, 1), (1, 1, 2, 1)]  # i=2, j=2
    p, q = 6, 9
    shapes = {tuple(tuple(c) for c in gs) for gs in bs2_children_after_forced_move(p, q)}
    assert ((p - 2, 1, 0, 1), (0, 1, q - 2, 1)) in shapes  # i=p, j=2


def test_children_reject_small_crosses():
    with pytest.raises(ValueError):
        bs2_children_after_forced_move(2, 3)
    with pytest.raises(ValueError):
        bs2_nimber(3, 2, TABLE)
    with pytest.raises(ValueError):
        bs2_play_length_bounds(1, 1, TABLE)


def test_nimber_is_zero_with_nonzero_intermediate():
    for p, q in [(3, 3), (5, 7), (4, 4), (3, 8)]:
        assert bs2_intermediate_nimber(p, q, TABLE) >= 1
        assert bs2_nimber(p, q, TABLE) == 0


def test_play_length_bounds_examples():
    assert bs2_play_length_bounds(3, 3, TABLE) == (6, 6)
    assert bs2_play_length_bounds(4, 6, TABLE) == (6, 10)


def test_play_length_bounds_against_joint_enumeration():
    # oracle: 2 setup moves, then every reply sum is enumerated jointly
    for p, q in [(3, 3), (3, 4)]:
        memo = {}
        ranges = [sum_play_length_range(gs, memo) for gs in bs2_children_after_forced_move(p, q)]
        expected = (2 + min(lo for lo, _ in ranges), 2 + max(hi for _, hi in ranges))
        assert bs2_play_length_bounds(p, q, TABLE) == expected


def test_position_phases_and_notation():
    pos = Bs2Position.start(3, 4)
    assert pos.phase == "start" and pos.notation() == "BS2[3,4]"
    assert pos.legal_moves() == [Bs2Move("forced")]
    pos = pos.apply(Bs2Move("forced"))
    assert pos.phase == "after-move-1"
    assert len(pos.legal_moves()) == (3 - 1) * (4 - 1)
    pos = pos.apply(Bs2Move("join", xi=2, yj=2))
    assert pos.phase == "decomposed"
    assert pos.notation() == "CS[0,1,0,1]+CS[1,1,2,1]"
    assert not pos.is_terminal()


def test_position_rejections():
    pos = Bs2Position.start(3, 3)
    with pytest.raises(ValueError):
        pos.apply(Bs2Move("join", xi=2, yj=2))
    pos = pos.apply(Bs2Move("forced"))
    with pytest.raises(ValueError):
        pos.apply(Bs2Move("join", xi=1, yj=2))  # tip 1 was used by the opening
    with pytest.raises(ValueError):
        pos.apply(Bs2Move("join", xi=2, yj=4))
    with pytest.raises(ValueError):
        Bs2Position.start(2, 5)


def test_strategy_zeroes_the_reply():
    pos = Bs2Position.start(4, 5).apply(Bs2Move("forced"))
    move = bs2_second_player_strategy(pos, TABLE)
    assert move.kind == "join"
    assert pos.apply(move).components.nimber(TABLE) == 0


def test_strategy_signals_no_winning_move_on_zero_sums():
    zero = Bs2Position("decomposed", 3, 3, GameSum([(2, 1, 2, 1), (1, 1, 1, 1)]))
    assert zero.components.nimber(TABLE) == 0
    with pytest.raises(NoWinningMove):
        bs2_second_player_strategy(zero, TABLE)


def test_strategy_refuses_the_opening():
    with pytest.raises(ValueError):
        bs2_second_player_strategy(Bs2Position.start(3, 3), TABLE)


def test_strategy_example_sums_have_value_zero():
    # mirrored components cancel
    for a, b in [(1, 2), (3, 4)]:
        gs = GameSum([(a, 1, a, 1), (b, 1, b, 1)])
        assert gs.nimber(TABLE) == 0
    # a pair of lopsided components worth 2 each cancels too
    for p2, q2 in [(2, 2), (3, 5)]:
        gs = GameSum([(p2, 1, 1, 1), (1, 1, q2, 1)])
        assert gs.nimber(TABLE) == 0


def test_engine_move_covers_all_phases():
    pos = Bs2Position.start(3, 3)
    move = bs2_engine_move(pos, TABLE)
    assert move == Bs2Move("forced")
    pos = pos.apply(move)
    move = bs2_engine_move(pos, TABLE)
    assert move.kind == "join"
    pos = pos.apply(move)
    move = bs2_engine_move(pos, TABLE)
    assert move.kind == "split"


def test_engine_as_second_player_beats_random_adversaries():
    for p, q, seed in [(3, 3, 1), (3, 4, 2), (4, 4, 3), (5, 3, 4)]:
        rng = random.Random(seed)
        pos = Bs2Position.start(p, q)
        mover = 1
        while not pos.is_terminal():
            if mover == 2:
                move = bs2_engine_move(pos, TABLE)
            else:
                move = rng.choice(pos.legal_moves())
            pos = pos.apply(move)
            last = mover
            mover = 3 - mover
        assert last == 2
