"""Position analysis shared by the CLI and the HTTP service."""

from __future__ import annotations

from .bs2 import Bs2Position, bs2_nimber
from .circular import CircularState, GrundyTable, apply_move, legal_moves
from .nimber import sum_nimber
from .notation import format_position


def component_nimber(component, table: GrundyTable) -> int:
    if isinstance(component, Bs2Position):
        if component.phase == "decomposed":
            return component.components.nimber(table)
        return bs2_nimber(component.p, component.q, table)
    return table.grundy(component)


def component_is_terminal(component) -> bool:
    if isinstance(component, Bs2Position):
        return component.is_terminal()
    return not legal_moves(component)


def analyze_position(components, table: GrundyTable | None = None) -> dict:
    """Value, winner, and a value-restoring move for a sum of components.

    Components may mix circular states with opening two-cross positions.
    A two-cross component always has value 0, so whenever the total is
    nonzero some circular component carries the restoring move.
    """
    table = table if table is not None else GrundyTable()
    values = [component_nimber(c, table) for c in components]
    total = sum_nimber(values)
    terminal = all(component_is_terminal(c) for c in components)
    best = None
    if total != 0:
        for idx, comp in enumerate(components):
            if not isinstance(comp, CircularState):
                continue
            for m in legal_moves(comp):
                s1, s2 = apply_move(comp, m)
                if total ^ values[idx] ^ table.grundy(s1) ^ table.grundy(s2) == 0:
                    after = list(components)
                    after[idx:idx + 1] = [s1, s2]
                    best = {
                        "component": idx,
                        "i": m.i,
                        "j": m.j,
                        "a": m.a,
                        "b": m.b,
                        "state_after": format_position(after),
                    }
                    break
            if best is not None:
                break
    return {
        "state": format_position(components),
        "components": [
            {"state": c.notation(), "nimber": v} for c, v in zip(components, values)
        ],
        "nimber": total,
        "winner": "first" if total != 0 else "second",
        "terminal": terminal,
        "best_move": best,
    }
