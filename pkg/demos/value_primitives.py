#!/usr/bin/env python3
# A tour of the two value primitives everything else is built on: the
# minimum excludant and the nim-sum.

from sproutgames import mex, nim_sum, sum_nimber

print("mex picks the least non-negative integer missing from a set:")
for values in [set(), {0, 1, 2}, {1, 2}, {0, 2, 3, 5}]:
    print(f"  mex({sorted(values)}) = {mex(values)}")

print()
print("nim_sum is bitwise XOR; it is the value of two games side by side:")
for a, b in [(1, 1), (2, 3), (5, 5), (1, 12)]:
    print(f"  {a} (+) {b} = {nim_sum(a, b)}")

print()
print("sum_nimber folds nim_sum over any number of components:")
for comps in [[], [1, 1], [2, 0], [1, 2, 4], [3, 3, 3]]:
    print(f"  sum{comps} = {sum_nimber(comps)}")

print()
print("The self-inverse law nim_sum(a, a) = 0 is what makes mirrored")
print("positions worthless for the player to move: two identical")
print("components cancel exactly.")
