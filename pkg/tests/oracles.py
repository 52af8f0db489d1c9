"""Independent brute-force oracles used to freeze expected test values.

Everything here re-derives values from the move definition with a joint
search over whole positions (a position is the full multiset of circles).
No per-component decomposition, XOR aggregation, memo table, or canonical
form is borrowed from the package under test.
"""

from __future__ import annotations


def dihedral_min(t: tuple) -> tuple:
    best = t
    n = len(t)
    for seq in (t, t[::-1]):
        for r in range(n):
            cand = seq[r:] + seq[:r]
            if cand < best:
                best = cand
    return best


def definitional_moves(t: tuple) -> list[tuple]:
    """The move set straight from its definition, no generator cleverness."""
    n = len(t)
    out = []
    for i in range(n):
        for j in range(n):
            if i < j and min((j - i) % n, (i - j) % n) >= 2 and t[i] >= 1 and t[j] >= 1:
                for a in range(t[i]):
                    for b in range(t[j]):
                        out.append((i, j, a, b))
    return out


def child_pair(t: tuple, move: tuple) -> tuple[tuple, tuple]:
    i, j, a, b = move
    first = (a,) + t[i + 1:j] + (b, 1)
    second = (t[i] - 1 - a,) + t[j + 1:] + t[:i] + (t[j] - 1 - b, 1)
    return first, second


def _key(components) -> tuple:
    return tuple(sorted(dihedral_min(tuple(c)) for c in components))


def sum_children(components) -> list[list[tuple]]:
    comps = [tuple(c) for c in components]
    children = []
    for idx, comp in enumerate(comps):
        for move in definitional_moves(comp):
            s1, s2 = child_pair(comp, move)
            children.append(comps[:idx] + [s1, s2] + comps[idx + 1:])
    return children


def sum_game_grundy(components, memo=None) -> int:
    """Nimber of a whole multiset of circles by direct game-tree search."""
    memo = {} if memo is None else memo
    key = _key(components)
    if key in memo:
        return memo[key]
    values = {sum_game_grundy(child, memo) for child in sum_children(components)}
    g = 0
    while g in values:
        g += 1
    memo[key] = g
    return g


def sum_play_length_range(components, memo=None) -> tuple[int, int]:
    """Shortest and longest playout of a whole multiset of circles."""
    memo = {} if memo is None else memo
    key = _key(components)
    if key in memo:
        return memo[key]
    children = sum_children(components)
    if not children:
        result = (0, 0)
    else:
        ranges = [sum_play_length_range(child, memo) for child in children]
        result = (1 + min(lo for lo, _ in ranges), 1 + max(hi for _, hi in ranges))
    memo[key] = result
    return result
