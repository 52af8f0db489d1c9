"""Random playouts of the unrestricted planar game, tracked on the sphere.

The state keeps only what the move rules can see: the faces (regions) of
the drawing and, for each face, the boundary walks around it.  Open tips
are anonymous tokens on a boundary component, and because tokens are
indistinguishable a component is fully described by how many tips it
carries.  A region is therefore a multiset of tip counts and the whole
state a multiset of regions.

Moves inside one region:

* split: join two tips of the same boundary component.  The component is
  cut into two arcs, each arc plus one crossbar tip becomes the principal
  boundary of a daughter region, and the region's other components are
  divided between the daughters.
* merge: join tips on two distinct components of the region.  The two
  components splice into one and both crossbar tips stay in the region.

Either way two tips are consumed and two created, so the total tip count
never changes, and every daughter region is born with at least one tip.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

Region = tuple  # tip counts of the region's boundary components
SphereState = tuple  # the regions


@dataclass(frozen=True)
class PlayoutMove:
    """One playout move.

    split: cut component ``comp`` of region ``region``; ``gap`` tips go to
    the first arc, and bit k of ``assignment`` sends the region's k-th
    other component to the first daughter.
    merge: splice components ``comp`` and ``other`` of region ``region``.
    """

    kind: str
    region: int
    comp: int
    other: int = 0
    gap: int = 0
    assignment: int = 0


def initial_sphere_state(tips: Sequence[int]) -> SphereState:
    """One region whose boundary components are the starting spots."""
    ts = tuple(int(t) for t in tips)
    if any(t < 0 for t in ts):
        raise ValueError(f"tip counts must be non-negative: {ts}")
    if not ts:
        return ()
    return (ts,)


def total_tips(state: SphereState) -> int:
    return sum(sum(region) for region in state)


def is_terminal(state: SphereState) -> bool:
    return all(sum(region) <= 1 for region in state)


def legal_playout_moves(state: SphereState) -> list[PlayoutMove]:
    """Every split and merge; empty exactly when each region has <= 1 tip."""
    moves = []
    for r, region in enumerate(state):
        tipped = [k for k, c in enumerate(region) if c >= 1]
        for x in range(len(tipped)):
            for y in range(x + 1, len(tipped)):
                moves.append(PlayoutMove("merge", r, tipped[x], other=tipped[y]))
        others = len(region) - 1
        for k, c in enumerate(region):
            if c < 2:
                continue
            for gap in range(c - 1):
                for mask in range(1 << others):
                    moves.append(PlayoutMove("split", r, k, gap=gap, assignment=mask))
    return moves


def apply_playout_move(state: SphereState, move: PlayoutMove) -> SphereState:
    """Apply a split or merge; raises on anything illegal."""
    if not (0 <= move.region < len(state)):
        raise ValueError(f"no region {move.region}")
    region = state[move.region]
    rest = state[:move.region] + state[move.region + 1:]
    if move.kind == "merge":
        if move.comp == move.other:
            raise ValueError("a merge joins two distinct boundary components")
        if not (0 <= move.comp < len(region) and 0 <= move.other < len(region)):
            raise ValueError(f"component index out of range: {move}")
        c1, c2 = region[move.comp], region[move.other]
        if c1 < 1 or c2 < 1:
            raise ValueError("both merged components need an open tip")
        merged = tuple(
            c for k, c in enumerate(region) if k not in (move.comp, move.other)
        ) + (c1 + c2,)
        return rest + (merged,)
    if move.kind != "split":
        raise ValueError(f"unknown move kind {move.kind!r}")
    if not (0 <= move.comp < len(region)):
        raise ValueError(f"component index out of range: {move}")
    c = region[move.comp]
    if c < 2:
        raise ValueError("a split needs two tips on one component")
    if not (0 <= move.gap <= c - 2):
        raise ValueError(f"gap out of range: {move}")
    others = [cnt for k, cnt in enumerate(region) if k != move.comp]
    if move.assignment < 0 or move.assignment >> len(others):
        raise ValueError(f"assignment mask out of range: {move}")
    side_a = [move.gap + 1]
    side_b = [c - 2 - move.gap + 1]
    for bit, cnt in enumerate(others):
        (side_a if (move.assignment >> bit) & 1 else side_b).append(cnt)
    return rest + (tuple(side_a), tuple(side_b))


def random_playout(tips: Sequence[int], seed: int) -> tuple[int, SphereState]:
    """Play uniformly random legal moves until no move remains.

    Returns the move count and the final state; the same seed always
    reproduces the same playout.
    """
    state = initial_sphere_state(tips)
    rng = random.Random(seed)
    count = 0
    while True:
        moves = legal_playout_moves(state)
        if not moves:
            return count, state
        state = apply_playout_move(state, rng.choice(moves))
        count += 1


def euler_check(final: SphereState, tips: Sequence[int], move_count: int) -> bool:
    """Terminal-state accounting: regions equal total tips, and the drawing
    (n + x vertices, 2x edges, one face per region) satisfies the sphere's
    Euler formula V - E + F = 2."""
    if not is_terminal(final):
        raise ValueError("euler_check needs a terminal state")
    total = sum(int(t) for t in tips)
    vertices = len(tips) + move_count
    edges = 2 * move_count
    return len(final) == total and vertices - edges + total == 2


def playout_record(tips: Sequence[int], seed: int) -> dict:
    """One playout summarised as a flat record (the line-oriented format)."""
    count, final = random_playout(tips, seed)
    return {
        "seed": seed,
        "tips": list(tips),
        "move_count": count,
        "region_count": len(final),
        "euler_ok": euler_check(final, tips, count),
    }
