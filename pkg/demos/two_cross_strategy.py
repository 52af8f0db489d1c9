#!/usr/bin/env python3
# The two-cross game: why the second player always wins, and a live game
# where the engine (as second player) punishes a random first player.

import random

from sproutgames import (
    Bs2Position,
    GrundyTable,
    bs2_children_after_forced_move,
    bs2_engine_move,
    bs2_intermediate_nimber,
    bs2_nimber,
    bs2_play_length_bounds,
)

table = GrundyTable()
p, q = 4, 5

print(f"two crosses with {p} and {q} tips")
print("the opening join is unique up to relabelling, so the root has one child;")
print("the reply then cuts the board into a sum of two 4-spot circles\n")

sums = bs2_children_after_forced_move(p, q)
print(f"distinct sums reachable by the reply: {len(sums)}")
for gs in sums[:6]:
    print(f"  {gs.notation()}  (value {gs.nimber(table)})")
print("  ...\n")

print(f"value after the forced opening: {bs2_intermediate_nimber(p, q, table)} (nonzero)")
print(f"value of the whole game: {bs2_nimber(p, q, table)} (second player wins)")
print(f"play length range: {bs2_play_length_bounds(p, q, table)} moves\n")

print("engine as second player vs a random first player:")
rng = random.Random(2024)
pos = Bs2Position.start(p, q)
mover = 1
ply = 0
while not pos.is_terminal():
    ply += 1
    if mover == 2:
        move = bs2_engine_move(pos, table)
        who = "engine"
    else:
        move = rng.choice(pos.legal_moves())
        who = "random"
    pos = pos.apply(move)
    if move.kind == "forced":
        detail = "the forced opening join"
    elif move.kind == "join":
        detail = f"reply joining tips ({move.xi}, {move.yj})"
    else:
        m = move.move
        detail = f"component {move.component}: spots {m.i}-{m.j}, split ({m.a},{m.b})"
    value = pos.components.nimber(table) if pos.phase == "decomposed" else "-"
    print(f"  move {ply:>2} ({who:>6}): {detail:<46} -> value {value}")
    last, mover = mover, 3 - mover

print(f"\nno moves remain; player {mover} cannot move, player {last} made the")
print(f"last move and wins after {ply} moves (the engine, as promised)")
