#!/usr/bin/env python3
# Walk one circular position through the whole engine: move generation,
# the split into a sum, canonical forms, values, play lengths, and the
# engine's move choice.

from sproutgames import (
    GameSum,
    GrundyTable,
    apply_move,
    best_move,
    canonicalize,
    grundy,
    legal_moves,
    play_length_bounds,
)

table = GrundyTable()
state = (2, 1, 3, 1)

print(f"position CS{list(state)}: spots on a circle, each count is the number")
print("of open tips pointing into the enclosed region\n")

moves = legal_moves(state)
print(f"{len(moves)} legal moves (spots must be at cyclic distance >= 2):")
for m in moves:
    s1, s2 = apply_move(state, m)
    print(f"  join spots {m.i} and {m.j}, split (a={m.a}, b={m.b})"
          f" -> {s1.notation()} + {s2.notation()}")

print()
print("every move splits the circle in two; the two daughters are then")
print("independent, so the position's value is the mex over the XOR of")
print("daughter values\n")

print(f"canonical form of CS{list(state)}: {canonicalize(state).notation()}")
print(f"value: {grundy(state, table)}")
print(f"play length range: {play_length_bounds(state, table)} moves")
print(f"positions memoised so far: {len(table)}\n")

gs = GameSum([state, (0, 1, 3, 1)])
print(f"now a sum: {gs.notation()}")
print(f"component values: {[table.grundy(c) for c in gs]},"
      f" total {gs.nimber(table)}")
bm = best_move(gs, table)
m = bm.move
print(f"engine move: component {bm.component}, join spots {m.i} and {m.j},"
      f" split (a={m.a}, b={m.b}) [{'winning' if bm.winning else 'losing'}]")
s1, s2 = apply_move(gs[bm.component], m)
after = GameSum((s1, s2) + tuple(gs[1:]))
print(f"after the move: {after.notation()}, total value {after.nimber(table)}")
