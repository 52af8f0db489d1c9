// Small pure helpers shared by the board, the controller, and the tests.

import { WireMove } from "./types.js";

/** Stable identity for a wire move, used to match against the legal list. */
export function moveKey(move: WireMove): string {
    switch (move.kind) {
        case "forced":
            return "forced";
        case "join":
            return `join:${move.xi},${move.yj}`;
        case "split":
            return `split:${move.component}:${move.i},${move.j},${move.a},${move.b}`;
    }
}

export function sameMove(a: WireMove, b: WireMove): boolean {
    return moveKey(a) === moveKey(b);
}

export function describeMove(move: WireMove): string {
    switch (move.kind) {
        case "forced":
            return "the forced opening join";
        case "join":
            return `reply joining tips (${move.xi}, ${move.yj})`;
        case "split":
            return `component ${move.component}: join spots ${move.i} and ${move.j}, split ${move.a}|${move.b}`;
    }
}

/** Render a component tip vector the way the server writes positions. */
export function componentNotation(tips: number[]): string {
    return `CS[${tips.join(",")}]`;
}

export function describePlayer(player: number | null, humanPlayer: number): string {
    if (player === null) return "nobody";
    return player === humanPlayer ? `you (player ${player})` : `engine (player ${player})`;
}
