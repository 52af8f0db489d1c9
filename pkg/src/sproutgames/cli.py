"""Command-line front door: nimber queries, verification sweeps, playout
experiments, formula lookups, and the play-service launcher.

Output on stdout is byte-identical across repeated invocations with the
same arguments; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .analysis import analyze_position
from .circular import GrundyTable
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
from .notation import NotationError, parse_position
from .playout import playout_record


def _load_table(path: str | None) -> GrundyTable:
    if path and os.path.exists(path):
        return GrundyTable.load(path)
    return GrundyTable()


def _save_table(table: GrundyTable, path: str | None) -> None:
    if path:
        table.save(path)


def _parse_tips(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise SystemExit(f"error: tip list must be comma-separated integers, got {text!r}")


def cmd_nimber(args) -> int:
    table = _load_table(args.cache)
    components = parse_position(args.state)
    report = analyze_position(components, table)
    _save_table(table, args.cache)
    if args.json:
        print(json.dumps(report, sort_keys=True))
        return 0
    print(f"state: {report['state']}")
    for comp in report["components"]:
        print(f"  component {comp['state']}: nimber {comp['nimber']}")
    print(f"nimber: {report['nimber']}")
    if report["terminal"]:
        print("terminal position: no moves remain")
    print(f"winner under normal play: {report['winner']} player")
    best = report["best_move"]
    if best is not None:
        print(
            f"best move: component {best['component']}, join spots {best['i']} and {best['j']}"
            f" with split (a={best['a']}, b={best['b']}) -> {best['state_after']}"
        )
    elif not report["terminal"]:
        print("best move: none restores value 0 (every move loses)")
    return 0


def cmd_verify_formula(args) -> int:
    table = _load_table(args.cache)
    started = time.perf_counter()
    cells = []
    mismatches = 0
    for q in range(args.max_q + 1):
        for p in range(q + 1):
            search = table.grundy((p, 1, q, 1))
            formula = cs4_nimber_formula(p, q)
            match = search == formula
            mismatches += 0 if match else 1
            cells.append({"p": p, "q": q, "search": search, "formula": formula, "match": match})
    elapsed = time.perf_counter() - started
    _save_table(table, args.cache)
    ok = mismatches == 0
    if args.json:
        print(json.dumps({"max_q": args.max_q, "cells": cells, "pass": ok}, sort_keys=True))
    else:
        print(f"{'p':>3} {'q':>3} {'search':>7} {'formula':>8}  match")
        for cell in cells:
            flag = "yes" if cell["match"] else "MISMATCH"
            print(f"{cell['p']:>3} {cell['q']:>3} {cell['search']:>7} {cell['formula']:>8}  {flag}")
        print(f"cells: {len(cells)}  mismatches: {mismatches}")
        print("PASS" if ok else "FAIL")
    print(f"wall time: {elapsed:.2f}s ({len(table)} positions solved)", file=sys.stderr)
    return 0 if ok else 1


def cmd_playout(args) -> int:
    tips = _parse_tips(args.tips)
    counts: dict[int, int] = {}
    euler_ok = 0
    records = []
    for trial in range(args.trials):
        record = playout_record(tips, args.seed + trial)
        records.append(record)
        counts[record["move_count"]] = counts.get(record["move_count"], 0) + 1
        euler_ok += 1 if record["euler_ok"] else 0
    ok = len(counts) == 1 and euler_ok == args.trials
    if args.json:
        for record in records:
            print(json.dumps(record, sort_keys=True))
        summary = {
            "tips": list(tips),
            "trials": args.trials,
            "move_counts": {str(k): v for k, v in sorted(counts.items())},
            "euler_ok_rate": euler_ok / args.trials,
            "pass": ok,
        }
        print(json.dumps(summary, sort_keys=True))
    else:
        print(f"tips: {list(tips)}  trials: {args.trials}  base seed: {args.seed}")
        print("move counts: " + ", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))
        print(f"euler_ok: {euler_ok}/{args.trials}")
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_formulas(args) -> int:
    tips = _parse_tips(args.tips) if args.tips else ()
    if args.n is not None and tips and args.n != len(tips):
        raise SystemExit(f"error: -n {args.n} disagrees with {len(tips)} tip counts")
    if not tips and args.n is not None:
        raise SystemExit("error: provide the tip counts with -t")
    spec = GameSpec(tips, genus=args.k, girth=args.g)
    out: dict = {"n": spec.n, "tips": list(spec.tips), "genus": spec.genus, "girth": spec.girth}
    if args.orientable:
        out["orientable_moves"] = list(orientable_moves(spec))
    if args.nonorientable:
        out["nonorientable_moves"] = list(nonorientable_moves(spec))
    if args.bounds_p4:
        lower, upper = bs_p4_move_bounds(spec)
        out["bounds_p4"] = [lower, upper]
    if args.forest:
        out["forest_moves"] = forest_moves(spec)
    if args.girth_tree:
        out["girth_forces_tree"] = girth_forces_tree(spec)
    if args.winner:
        out["first_player_wins"] = first_player_wins_planar(spec)
    requested = [k for k in out if k not in ("n", "tips", "genus", "girth")]
    if not requested:
        raise SystemExit("error: pick at least one formula flag (see --help)")
    if args.json:
        print(json.dumps(out, sort_keys=True))
        return 0
    labels = {
        "orientable_moves": "possible move counts (orientable)",
        "nonorientable_moves": "possible move counts (non-orientable)",
        "bounds_p4": "move count range (triangle-free planar)",
        "forest_moves": "moves (forest game)",
        "girth_forces_tree": "girth forces a tree",
        "first_player_wins": "first player wins",
    }
    for key in requested:
        value = out[key]
        if key in ("orientable_moves", "nonorientable_moves"):
            text = "{" + ",".join(map(str, value)) + "}"
        elif key == "bounds_p4":
            text = f"({value[0]}, {value[1]})"
        else:
            text = str(value).lower() if isinstance(value, bool) else str(value)
        print(f"{labels[key]}: {text}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sproutgames",
        description="Nimbers, optimal moves, and move-count formulas for sprout-style games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_nimber = sub.add_parser("nimber", help="value, winner, and best move of a position")
    p_nimber.add_argument("state", help="position such as CS[3,1,4,1], BS2[3,3], or a '+'-joined sum")
    p_nimber.add_argument("--json", action="store_true")
    p_nimber.add_argument("--cache", help="path of an on-disk memo table to reuse")
    p_nimber.set_defaults(func=cmd_nimber)

    p_verify = sub.add_parser(
        "verify-formula",
        help="sweep p <= q <= MAX_Q comparing searched values of [p,1,q,1] with the closed form",
    )
    p_verify.add_argument("--max-q", type=int, default=14, dest="max_q")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--cache", help="path of an on-disk memo table to reuse")
    p_verify.set_defaults(func=cmd_verify_formula)

    p_playout = sub.add_parser("playout", help="seeded random playouts of the planar game")
    p_playout.add_argument("--tips", required=True, help="comma-separated tip counts, e.g. 4,4")
    p_playout.add_argument("--trials", type=int, default=100)
    p_playout.add_argument("--seed", type=int, default=0)
    p_playout.add_argument("--json", action="store_true", help="emit line-delimited records")
    p_playout.set_defaults(func=cmd_playout)

    p_formulas = sub.add_parser("formulas", help="closed-form move counts and winners")
    p_formulas.add_argument("--orientable", action="store_true")
    p_formulas.add_argument("--nonorientable", action="store_true")
    p_formulas.add_argument("--bounds-p4", action="store_true", dest="bounds_p4")
    p_formulas.add_argument("--forest", action="store_true")
    p_formulas.add_argument("--girth-tree", action="store_true", dest="girth_tree")
    p_formulas.add_argument("--winner", action="store_true")
    p_formulas.add_argument("-n", type=int, default=None, help="spot count (checked against -t)")
    p_formulas.add_argument("-t", "--tips", help="comma-separated tip counts")
    p_formulas.add_argument("-k", type=int, default=0, help="surface genus")
    p_formulas.add_argument("-g", type=int, default=3, help="girth bound")
    p_formulas.add_argument("--json", action="store_true")
    p_formulas.set_defaults(func=cmd_formulas)

    p_serve = sub.add_parser("serve", help="run the HTTP play service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
