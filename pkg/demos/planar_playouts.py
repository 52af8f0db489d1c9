#!/usr/bin/env python3
# Without a girth restriction the planar game is not really a contest:
# every play lasts exactly (n - 2) + sum(tips) moves, whoever does what.
# This script plays thousands of random games to watch that constant, and
# closes the books with the Euler identity on each final drawing.

from collections import Counter

from sproutgames import playout_record, random_playout

for tips in [(4,), (4, 4), (3, 3, 3), (5, 3, 4)]:
    expected = len(tips) - 2 + sum(tips)
    counts = Counter()
    euler_ok = 0
    trials = 400
    for seed in range(trials):
        record = playout_record(tips, seed)
        counts[record["move_count"]] += 1
        euler_ok += record["euler_ok"]
    print(f"tips {list(tips)}: expected {expected} moves")
    print(f"  observed histogram: {dict(sorted(counts.items()))}")
    print(f"  euler identity held in {euler_ok}/{trials} games\n")

print("one playout in detail:")
count, final = random_playout((4, 4), seed=7)
print(f"  two 4-tip crosses, seed 7: {count} moves")
print(f"  final faces (each holds exactly one open tip): {len(final)}")
print(f"  face boundary sizes: {sorted(sum(region) for region in final)}")
print()
print("the reasoning, in one line: tips are conserved, the game ends when")
print("every face holds exactly one tip, and Euler's formula for the")
print("sphere then forces the move count.")
