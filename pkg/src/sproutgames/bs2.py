"""The two-cross game on triangle-free planar boards, via circular decomposition.

Start with two spots carrying p and q tips (p, q >= 3).  The opening join
between the crosses is unique up to relabelling of tips, so the game tree
root has a single child.  The reply must join tip i of the first spot to
tip j of the second (i, j >= 2), and that second curve closes a cycle that
splits the board into a sum of two 4-spot circular games:

    [i-2, 1, j-2, 1]  and  [p-i, 1, q-j, 1]

From then on play proceeds inside the sum and the circular engine takes
over.  The adapter never searches the opening move; it is hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circular import (
    BestMove,
    CircularState,
    GameSum,
    GrundyTable,
    Move,
    apply_move,
    best_move,
    legal_moves,
    _canon,
)
from .nimber import mex, sum_nimber

PHASE_START = "start"
PHASE_AFTER_FORCED = "after-move-1"
PHASE_DECOMPOSED = "decomposed"


class NoWinningMove(Exception):
    """Raised when the mover's position already has value 0."""


@dataclass(frozen=True)
class Bs2Move:
    """One move of the two-cross game.

    kind "forced" is the unique opening join, kind "join" picks the tips
    (xi, yj) of the reply that creates the decomposition, and kind "split"
    wraps a circular move inside one component of the resulting sum.
    """

    kind: str
    xi: int = 0
    yj: int = 0
    component: int = 0
    move: Move | None = None


def _check_pq(p: int, q: int) -> None:
    if p < 3 or q < 3:
        raise ValueError(f"the two-cross game needs p, q >= 3, got ({p}, {q})")


class Bs2Position:
    """A two-cross position: opening phase, reply phase, or decomposed sum."""

    __slots__ = ("phase", "p", "q", "components")

    def __init__(self, phase: str, p: int, q: int, components: GameSum | None = None):
        if phase not in (PHASE_START, PHASE_AFTER_FORCED, PHASE_DECOMPOSED):
            raise ValueError(f"unknown phase {phase!r}")
        _check_pq(p, q)
        if (components is not None) != (phase == PHASE_DECOMPOSED):
            raise ValueError("components are carried exactly in the decomposed phase")
        self.phase = phase
        self.p = p
        self.q = q
        self.components = components

    @classmethod
    def start(cls, p: int, q: int) -> "Bs2Position":
        return cls(PHASE_START, p, q)

    def legal_moves(self) -> list[Bs2Move]:
        if self.phase == PHASE_START:
            return [Bs2Move("forced")]
        if self.phase == PHASE_AFTER_FORCED:
            return [
                Bs2Move("join", xi=i, yj=j)
                for i in range(2, self.p + 1)
                for j in range(2, self.q + 1)
            ]
        return [
            Bs2Move("split", component=idx, move=m)
            for idx, comp in enumerate(self.components)
            for m in legal_moves(comp)
        ]

    def apply(self, move: Bs2Move) -> "Bs2Position":
        if self.phase == PHASE_START:
            if move.kind != "forced":
                raise ValueError("the opening position admits only the forced join")
            return Bs2Position(PHASE_AFTER_FORCED, self.p, self.q)
        if self.phase == PHASE_AFTER_FORCED:
            if move.kind != "join":
                raise ValueError("the reply must join a tip of each cross")
            if not (2 <= move.xi <= self.p and 2 <= move.yj <= self.q):
                raise ValueError(
                    f"reply tips out of range: ({move.xi}, {move.yj}) with p={self.p}, q={self.q}"
                )
            comps = GameSum([
                (move.xi - 2, 1, move.yj - 2, 1),
                (self.p - move.xi, 1, self.q - move.yj, 1),
            ])
            return Bs2Position(PHASE_DECOMPOSED, self.p, self.q, comps)
        if move.kind != "split" or move.move is None:
            raise ValueError("a decomposed position takes component moves")
        if not (0 <= move.component < len(self.components)):
            raise ValueError(f"no component {move.component}")
        s1, s2 = apply_move(self.components[move.component], move.move)
        comps = GameSum(
            tuple(self.components[:move.component])
            + (s1, s2)
            + tuple(self.components[move.component + 1:])
        )
        return Bs2Position(PHASE_DECOMPOSED, self.p, self.q, comps)

    def is_terminal(self) -> bool:
        return self.phase == PHASE_DECOMPOSED and self.components.is_terminal()

    def notation(self) -> str:
        if self.phase == PHASE_DECOMPOSED:
            return self.components.notation()
        return f"BS2[{self.p},{self.q}]"

    def __repr__(self) -> str:
        return f"Bs2Position({self.phase!r}, {self.notation()})"


def bs2_children_after_forced_move(p: int, q: int) -> list[GameSum]:
    """Every sum reachable by the reply move, deduplicated.

    Two replies count as the same child when the ordered pair of canonical
    component forms matches.
    """
    _check_pq(p, q)
    seen = set()
    out = []
    for i in range(2, p + 1):
        for j in range(2, q + 1):
            first = (i - 2, 1, j - 2, 1)
            second = (p - i, 1, q - j, 1)
            key = (_canon(first), _canon(second))
            if key in seen:
                continue
            seen.add(key)
            out.append(GameSum([first, second]))
    return out


def bs2_intermediate_nimber(p: int, q: int, table: GrundyTable | None = None) -> int:
    """Value of the position after the forced opening join (always >= 1)."""
    table = table if table is not None else GrundyTable()
    return mex(gs.nimber(table) for gs in bs2_children_after_forced_move(p, q))


def bs2_nimber(p: int, q: int, table: GrundyTable | None = None) -> int:
    """Value of the whole two-cross game; 0 whenever p, q >= 3.

    The root has exactly one child (the opening join is forced), so its
    value is the mex of a singleton.
    """
    return mex([bs2_intermediate_nimber(p, q, table)])


def bs2_play_length_bounds(p: int, q: int, table: GrundyTable | None = None) -> tuple[int, int]:
    """Shortest and longest full play of the two-cross game, in moves.

    Two moves set up the decomposition; after that each component of the
    chosen sum is played to the end independently.
    """
    table = table if table is not None else GrundyTable()
    sums = bs2_children_after_forced_move(p, q)
    mins = []
    maxs = []
    for gs in sums:
        bounds = [table.play_length_bounds(c) for c in gs]
        mins.append(2 + sum(mn for mn, _ in bounds))
        maxs.append(2 + sum(mx for _, mx in bounds))
    return min(mins), max(maxs)


def bs2_second_player_strategy(position: Bs2Position, table: GrundyTable | None = None) -> Bs2Move:
    """Winning reply for the second player, leaving the total value at 0.

    Raises :class:`NoWinningMove` if the mover already faces a value-0
    position, and refuses the opening position outright (that move belongs
    to the first player).
    """
    table = table if table is not None else GrundyTable()
    if position.phase == PHASE_START:
        raise ValueError("the opening join is the first player's move")
    if position.phase == PHASE_AFTER_FORCED:
        for move in position.legal_moves():
            if position.apply(move).components.nimber(table) == 0:
                return move
        raise NoWinningMove("no reply reaches a value-0 sum")
    bm = best_move(position.components, table)
    if bm is None or not bm.winning:
        raise NoWinningMove("position value is already 0")
    return Bs2Move("split", component=bm.component, move=bm.move)


def bs2_engine_move(position: Bs2Position, table: GrundyTable | None = None) -> Bs2Move | None:
    """Move the engine plays for whichever side is up; None when terminal.

    Picks a value-restoring move when one exists, otherwise the least legal
    move.
    """
    table = table if table is not None else GrundyTable()
    if position.phase == PHASE_START:
        return Bs2Move("forced")
    if position.phase == PHASE_AFTER_FORCED:
        try:
            return bs2_second_player_strategy(position, table)
        except NoWinningMove:
            return position.legal_moves()[0]
    bm = best_move(position.components, table)
    if bm is None:
        return None
    return Bs2Move("split", component=bm.component, move=bm.move)
