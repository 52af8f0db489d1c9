// Wire types mirroring the play service's JSON responses.

export interface SplitMove {
    kind: "split";
    component: number;
    i: number;
    j: number;
    a: number;
    b: number;
}

export interface ForcedMove {
    kind: "forced";
}

export interface JoinMove {
    kind: "join";
    xi: number;
    yj: number;
}

export type WireMove = SplitMove | ForcedMove | JoinMove;

export interface SessionState {
    id: string;
    kind: "cs4" | "circular" | "bs2";
    params: Record<string, unknown>;
    human_player: number;
    status: "ongoing" | "finished";
    winner: number | null;
    turn: number | null;
    state: string;
    components: number[][] | null;
    phase?: string;
    history: WireMove[];
    nimber?: number;
}

export interface AnnotatedMove {
    move: WireMove;
    state_after: string;
    nimber?: number;
    winning?: boolean;
}

export interface MoveListing {
    status: string;
    turn?: number;
    moves: AnnotatedMove[];
}

export interface EngineReply {
    move: WireMove;
    session: SessionState;
}

export interface ComponentAnalysis {
    state: string;
    nimber: number;
}

export interface BestMoveAnalysis {
    component: number;
    i: number;
    j: number;
    a: number;
    b: number;
    state_after: string;
}

export interface Analysis {
    state: string;
    components: ComponentAnalysis[];
    nimber: number;
    winner: "first" | "second";
    terminal: boolean;
    best_move: BestMoveAnalysis | null;
}

export type SessionKind = SessionState["kind"];
