"""Exhaustive solver for circular sprout positions.

A position is a cycle of spots, each carrying a count of open tips that
point into the enclosed region.  A move joins one tip of spot ``i`` to one
tip of spot ``j``; the two spots must sit at cyclic distance at least 2,
because joining a spot to itself would close a 2-cycle and joining
neighbours would close a triangle, and the ambient graphs must keep girth
at least 4.  The joining curve cuts the region in two and the crossbar
drawn on it contributes one fresh tip to each side, so every move replaces
the game by a disjoint sum of two smaller circular games:

    first side   (a, t[i+1], ..., t[j-1], b, 1)
    second side  (t[i]-1-a, t[j+1], ..., t[i-1], t[j]-1-b, 1)

where ``a`` of spot i's remaining tips and ``b`` of spot j's go to the
first side.  Tips are conserved: two are consumed, two are created.

Rotating or mirroring the circle gives the exact same game, so positions
are memoised under their dihedral canonical form.  Zero-tip spots are kept
in the sequence; they still carry distance information.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .nimber import mex, sum_nimber


class CircularState(tuple):
    """Cyclic sequence of per-spot open-tip counts (at least 3 spots)."""

    def __new__(cls, tips: Iterable[int]) -> "CircularState":
        ts = tuple(int(t) for t in tips)
        if len(ts) < 3:
            raise ValueError(f"a boundary cycle needs at least 3 spots, got {len(ts)}")
        if any(t < 0 for t in ts):
            raise ValueError(f"tip counts must be non-negative: {ts}")
        return super().__new__(cls, ts)

    @property
    def total_tips(self) -> int:
        return sum(self)

    def notation(self) -> str:
        return "CS[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return self.notation()


class Move(NamedTuple):
    """A tip-joining move: spots ``i < j`` plus the two tip-split choices.

    ``a`` of spot i's remaining tips and ``b`` of spot j's land on the side
    that runs from i to j in increasing cyclic order.
    """

    i: int
    j: int
    a: int
    b: int


def cyclic_distance(n: int, i: int, j: int) -> int:
    """Hop count between positions i and j on a cycle of length n."""
    d = (j - i) % n
    return min(d, n - d)


def _canon(t: tuple) -> tuple:
    n = len(t)
    best = t
    for seq in (t, t[::-1]):
        dbl = seq + seq
        for r in range(n):
            cand = dbl[r:r + n]
            if cand < best:
                best = cand
    return best


def canonicalize(state: Iterable[int]) -> CircularState:
    """Lexicographically least sequence over all rotations and reflections.

    Two states are game-isomorphic exactly when their canonical forms are
    equal, which is what makes this usable as a memo key.
    """
    return CircularState(_canon(tuple(state)))


def legal_moves(state: Iterable[int]) -> list[Move]:
    """All legal moves, (i, j) normalised to i < j, in lexicographic order.

    Empty exactly when the state is terminal.
    """
    t = tuple(state)
    n = len(t)
    moves = []
    for i in range(n):
        if t[i] == 0:
            continue
        for j in range(i + 2, n):
            if n - (j - i) < 2 or t[j] == 0:
                continue
            for a in range(t[i]):
                for b in range(t[j]):
                    moves.append(Move(i, j, a, b))
    return moves


def _child_tuples(t: tuple, i: int, j: int, a: int, b: int) -> tuple[tuple, tuple]:
    first = (a,) + t[i + 1:j] + (b, 1)
    second = (t[i] - 1 - a,) + t[j + 1:] + t[:i] + (t[j] - 1 - b, 1)
    return first, second


def apply_move(state: Iterable[int], move: Move) -> tuple[CircularState, CircularState]:
    """Split ``state`` along ``move`` into its two daughter games."""
    t = tuple(state)
    n = len(t)
    i, j, a, b = move
    if not (0 <= i < j < n):
        raise ValueError(
            f"spot indices must satisfy 0 <= i < j < n, got {move}; "
            "joining a spot to itself would create a 2-cycle (girth < 4)"
        )
    if cyclic_distance(n, i, j) < 2:
        raise ValueError(
            f"spots {i} and {j} are adjacent on the cycle; "
            "the join would create a triangle (girth < 4)"
        )
    if t[i] < 1 or t[j] < 1:
        raise ValueError(f"both joined spots need an open tip: {move} on {t}")
    if not (0 <= a < t[i] and 0 <= b < t[j]):
        raise ValueError(f"tip split out of range: {move} on {t}")
    first, second = _child_tuples(t, i, j, a, b)
    return CircularState(first), CircularState(second)


class GameSum(tuple):
    """Disjoint union of independent circular games; its value is the XOR of parts."""

    def __new__(cls, components: Iterable[Iterable[int]]) -> "GameSum":
        return super().__new__(cls, tuple(CircularState(c) for c in components))

    def notation(self) -> str:
        return "+".join(c.notation() for c in self)

    def nimber(self, table: "GrundyTable") -> int:
        return sum_nimber(table.grundy(c) for c in self)

    def is_terminal(self) -> bool:
        return all(not legal_moves(c) for c in self)


class GrundyTable:
    """Memo of solved positions: canonical state -> (nimber, min moves, max moves).

    Entries are immutable once computed, so concurrent last-writer-wins
    insertion is safe; recomputing any entry from its children reproduces
    the stored value.
    """

    FORMAT = "sproutgames-grundy-cache-v1"

    def __init__(self):
        self.entries: dict[tuple, tuple[int, int, int]] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def solve(self, state: Iterable[int]) -> tuple[int, int, int]:
        key = _canon(tuple(state))
        entry = self.entries.get(key)
        if entry is not None:
            return entry
        # Depth is bounded by the total tip count: each daughter keeps
        # strictly fewer tips than its parent.
        need = 4 * sum(key) + 200
        if sys.getrecursionlimit() < need:
            sys.setrecursionlimit(need)
        return self._solve(key)

    def _solve(self, key: tuple) -> tuple[int, int, int]:
        entry = self.entries.get(key)
        if entry is not None:
            return entry
        n = len(key)
        seen_pairs = set()
        values = set()
        min_len = max_len = None
        for i in range(n):
            ti = key[i]
            if ti == 0:
                continue
            for j in range(i + 2, n):
                if n - (j - i) < 2:
                    continue
                tj = key[j]
                if tj == 0:
                    continue
                for a in range(ti):
                    for b in range(tj):
                        c1, c2 = _child_tuples(key, i, j, a, b)
                        k1 = _canon(c1)
                        k2 = _canon(c2)
                        pair = (k1, k2) if k1 <= k2 else (k2, k1)
                        if pair in seen_pairs:
                            continue
                        seen_pairs.add(pair)
                        g1, mn1, mx1 = self._solve(k1)
                        g2, mn2, mx2 = self._solve(k2)
                        values.add(g1 ^ g2)
                        mn = mn1 + mn2 + 1
                        mx = mx1 + mx2 + 1
                        if min_len is None or mn < min_len:
                            min_len = mn
                        if max_len is None or mx > max_len:
                            max_len = mx
        if not seen_pairs:
            entry = (0, 0, 0)
        else:
            g = 0
            while g in values:
                g += 1
            assert g <= 2 * sum(key), f"nimber {g} exceeds the 2*tips bound for {key}"
            entry = (g, min_len, max_len)
        self.entries[key] = entry
        return entry

    def grundy(self, state: Iterable[int]) -> int:
        return self.solve(state)[0]

    def play_length_bounds(self, state: Iterable[int]) -> tuple[int, int]:
        _, mn, mx = self.solve(state)
        return mn, mx

    def save(self, path) -> None:
        payload = {
            "format": self.FORMAT,
            "entries": {",".join(map(str, k)): list(v) for k, v in self.entries.items()},
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)

    @classmethod
    def load(cls, path) -> "GrundyTable":
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("format") != cls.FORMAT:
            raise ValueError(f"unrecognised cache format in {path!s}")
        table = cls()
        for text, triple in payload["entries"].items():
            key = tuple(int(x) for x in text.split(","))
            table.entries[key] = tuple(triple)
        return table


def grundy(state: Iterable[int], table: GrundyTable | None = None) -> int:
    """Nimber of a circular state: mex over the XOR values of its children."""
    return (table if table is not None else GrundyTable()).grundy(state)


def play_length_bounds(state: Iterable[int], table: GrundyTable | None = None) -> tuple[int, int]:
    """Shortest and longest possible playout of ``state``, in moves."""
    return (table if table is not None else GrundyTable()).play_length_bounds(state)


@dataclass(frozen=True)
class BestMove:
    """Engine move choice: ``winning`` is False when every move loses."""

    component: int
    move: Move
    winning: bool


def best_move(gsum: Iterable[Iterable[int]], table: GrundyTable | None = None) -> BestMove | None:
    """Optimal move in a sum of circular games, or None when terminal.

    From a nonzero position this returns a move that brings the total
    nimber back to 0 (one always exists); ties break on the least
    (component, i, j, a, b).  From a zero position it returns the least
    legal move, flagged losing.
    """
    table = table if table is not None else GrundyTable()
    comps = [CircularState(c) for c in gsum]
    values = [table.grundy(c) for c in comps]
    total = sum_nimber(values)
    indexed_moves = [(idx, m) for idx, c in enumerate(comps) for m in legal_moves(c)]
    if not indexed_moves:
        return None
    if total != 0:
        for idx, m in indexed_moves:
            s1, s2 = apply_move(comps[idx], m)
            if total ^ values[idx] ^ table.grundy(s1) ^ table.grundy(s2) == 0:
                return BestMove(idx, m, True)
        raise AssertionError("a nonzero position must have a value-restoring move")
    idx, m = indexed_moves[0]
    return BestMove(idx, m, False)
