"""Closed-form move counts and winners for the generalized cross-joining game.

Every function here is an exact formula, no search involved.  The engine
in :mod:`sproutgames.circular` provides the independent brute-force side
for the one non-trivial closed form, ``cs4_nimber_formula``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GameSpec:
    """Initial setup: per-spot tip counts, surface genus, and a girth floor."""

    tips: tuple[int, ...]
    genus: int = 0
    girth: int = 3

    def __post_init__(self):
        object.__setattr__(self, "tips", tuple(int(t) for t in self.tips))
        if len(self.tips) < 1:
            raise ValueError("a game needs at least one spot")
        if any(t < 0 for t in self.tips):
            raise ValueError(f"tip counts must be non-negative: {self.tips}")
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.girth < 3:
            raise ValueError("girth bound must be at least 3")

    @property
    def n(self) -> int:
        return len(self.tips)

    @property
    def total_tips(self) -> int:
        return sum(self.tips)


def forest_moves(spec: GameSpec) -> int:
    """Moves in the forest-restricted game: always exactly n - 1.

    The finished drawing is a tree on n + x vertices with 2x edges, and
    a tree has one fewer edge than vertices.
    """
    return spec.n - 1


def _move_count_set(spec: GameSpec, step: int) -> tuple[int, ...]:
    base = (spec.n - 2) + spec.total_tips
    values = tuple(base + step * j for j in range(spec.genus + 1))
    if values[0] < 0:
        raise ValueError(
            f"degenerate setup: {spec.n} spot(s) with {spec.total_tips} tips "
            "cannot sustain a full play"
        )
    return values


def orientable_moves(spec: GameSpec) -> tuple[int, ...]:
    """Possible total move counts on orientable surfaces of genus <= spec.genus.

    The count is (n - 2) + 2j + sum(tips) where j is the least genus the
    finished drawing actually needs, so all values share one parity.
    """
    return _move_count_set(spec, 2)


def nonorientable_moves(spec: GameSpec) -> tuple[int, ...]:
    """Possible total move counts on non-orientable surfaces of genus <= spec.genus.

    The count is (n - 2) + j + sum(tips); consecutive j differ by one, so
    for genus >= 1 both parities occur and the winner depends on the play.
    """
    return _move_count_set(spec, 1)


def first_player_wins_planar(spec: GameSpec) -> bool:
    """Winner of the orientable-surface game: first player iff n + sum(tips) is odd.

    On the sphere the move count is fixed, and raising the orientable genus
    only shifts it by even amounts, so the winner never changes.
    """
    return (spec.n + spec.total_tips) % 2 == 1


def girth_forces_tree(spec: GameSpec) -> bool:
    """True when the girth floor is so high the drawing can never close a cycle.

    After n moves there would be 2n vertices and 2n edges, hence a cycle of
    length at most 2n; a girth bound of 2n + 1 or more forbids that, so the
    game ends after exactly n - 1 moves, same as the forest game.
    """
    return spec.girth >= 2 * spec.n + 1


def bs_p4_move_bounds(spec: GameSpec) -> tuple[int, int]:
    """Move-count range for the triangle-free planar game: (4 + n, n - 2 + sum(tips)).

    Requires at least two spots, each carrying at least three tips.
    """
    if spec.n < 2:
        raise ValueError("the triangle-free bounds need at least 2 spots")
    if any(t < 3 for t in spec.tips):
        raise ValueError("the triangle-free bounds need every spot to carry at least 3 tips")
    return (4 + spec.n, (spec.n - 2) + spec.total_tips)


def cs4_nimber_formula(p: int, q: int) -> int:
    """Closed-form nimber of the 4-spot circular state [p, 1, q, 1].

    With p <= q (the state is symmetric in p and q):

        1                                   if p == q
        2p                                  if q >= 2p - floor(|p - 2| / 2)
        (4/5)(p + q - i) + 2*floor(i / 4)   otherwise,

    where i is the residue of p + q modulo 5 taken in {1, ..., 5}.  In the
    middle case p + q - i is a multiple of 5, so the value is an integer.
    """
    if p < 0 or q < 0:
        raise ValueError("tip counts must be non-negative")
    if p > q:
        p, q = q, p
    if p == q:
        return 1
    if q >= 2 * p - abs(p - 2) // 2:
        return 2 * p
    i = (p + q - 1) % 5 + 1
    return 4 * (p + q - i) // 5 + 2 * (i // 4)
