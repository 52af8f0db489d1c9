#!/usr/bin/env python3
# Move-count formulas across playing fields: forests, surfaces of either
# orientability, girth-limited planar boards, and the triangle-free range.

from sproutgames import (
    GameSpec,
    bs_p4_move_bounds,
    first_player_wins_planar,
    forest_moves,
    girth_forces_tree,
    nonorientable_moves,
    orientable_moves,
)

print("forests: the finished drawing is a tree, so n spots take n-1 moves")
for n in (1, 2, 5):
    print(f"  n={n}: {forest_moves(GameSpec((4,) * n))} moves")

print()
print("orientable surfaces: counts are (n-2) + 2j + sum(tips), j up to the genus;")
print("they differ by even amounts, so the winner ignores the genus entirely")
for genus in range(3):
    spec = GameSpec((4, 4), genus=genus)
    print(f"  genus {genus}: counts {set(orientable_moves(spec))},"
          f" first player wins: {first_player_wins_planar(spec)}")

print()
print("non-orientable surfaces: counts are (n-2) + j + sum(tips); consecutive")
print("j flip parity, so for genus >= 1 the winner depends on the play")
for genus in range(3):
    spec = GameSpec((4, 4), genus=genus)
    print(f"  genus {genus}: counts {set(nonorientable_moves(spec))}")

print()
print("high girth freezes the game into the forest count:")
for girth in (5, 6, 7, 9):
    spec = GameSpec((3, 3, 3), girth=girth)
    print(f"  n=3, girth >= {girth}: forced tree: {girth_forces_tree(spec)}")

print()
print("triangle-free planar boards leave a genuine range:")
for tips in [(3, 3), (4, 5), (3, 3, 3)]:
    lower, upper = bs_p4_move_bounds(GameSpec(tips))
    print(f"  tips {list(tips)}: between {lower} and {upper} moves")
print()
print("that range is what makes the two-cross game interesting: the move")
print("count is no longer constant, so somebody can actually out-play the")
print("other side (see two_cross_strategy.py for who).")
