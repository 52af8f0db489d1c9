"""Nimbers, optimal play, and move-count formulas for sprout-style games.

The package covers four layers:

* :mod:`sproutgames.nimber` and :mod:`sproutgames.circular`: the value
  primitives and the exhaustive memoized solver for circular positions.
* :mod:`sproutgames.formulas`: closed-form move counts and winners.
* :mod:`sproutgames.bs2`: the two-cross game via its circular decomposition.
* :mod:`sproutgames.playout`: seeded random playouts of the unrestricted
  planar game on the sphere.

A CLI (:mod:`sproutgames.cli`) and an HTTP play service
(:mod:`sproutgames.api`) sit on top.
"""

from .bs2 import (
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
from .circular import (
    BestMove,
    CircularState,
    GameSum,
    GrundyTable,
    Move,
    apply_move,
    best_move,
    canonicalize,
    cyclic_distance,
    grundy,
    legal_moves,
    play_length_bounds,
)
from .formulas import (
    GameSpec,
    bs_p4_move_bounds,
    cs4_nimber_formula,
    first_player_wins_planar,
    forest_moves,
    girth_forces_tree,
    nonorientable_moves,
    orientable_moves,
)
from .nimber import Nimber, mex, nim_sum, sum_nimber
from .notation import NotationError, format_position, parse_position
from .playout import (
    PlayoutMove,
    apply_playout_move,
    euler_check,
    initial_sphere_state,
    legal_playout_moves,
    playout_record,
    random_playout,
)

__version__ = "0.1.0"

__all__ = [
    "BestMove",
    "Bs2Move",
    "Bs2Position",
    "CircularState",
    "GameSpec",
    "GameSum",
    "GrundyTable",
    "Move",
    "Nimber",
    "NoWinningMove",
    "NotationError",
    "PlayoutMove",
    "apply_move",
    "apply_playout_move",
    "best_move",
    "bs2_children_after_forced_move",
    "bs2_engine_move",
    "bs2_intermediate_nimber",
    "bs2_nimber",
    "bs2_play_length_bounds",
    "bs2_second_player_strategy",
    "bs_p4_move_bounds",
    "canonicalize",
    "cs4_nimber_formula",
    "cyclic_distance",
    "euler_check",
    "first_player_wins_planar",
    "forest_moves",
    "format_position",
    "girth_forces_tree",
    "grundy",
    "initial_sphere_state",
    "legal_moves",
    "legal_playout_moves",
    "mex",
    "nim_sum",
    "nonorientable_moves",
    "orientable_moves",
    "parse_position",
    "play_length_bounds",
    "playout_record",
    "random_playout",
    "sum_nimber",
]
