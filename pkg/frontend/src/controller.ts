// Headless session state machine.  The board is pure display: every legal
// move shown (and every move submitted) comes from the move list most
// recently fetched from the server, never from client-side rule logic.

import { ApiClient } from "./api.js";
import { moveKey } from "./format.js";
import { AnnotatedMove, SessionKind, SessionState, WireMove } from "./types.js";

export interface LogEntry {
    by: "human" | "engine";
    move: WireMove;
    stateAfter: string;
}

export class SessionController {
    session: SessionState | null = null;
    legalMoves: AnnotatedMove[] = [];
    log: LogEntry[] = [];

    constructor(
        private api: ApiClient,
        public hints = false,
    ) {}

    get finished(): boolean {
        return this.session !== null && this.session.status === "finished";
    }

    get humanTurn(): boolean {
        return (
            this.session !== null &&
            this.session.status === "ongoing" &&
            this.session.turn === this.session.human_player
        );
    }

    async create(
        kind: SessionKind,
        params: Record<string, unknown>,
        humanPlayer: number,
    ): Promise<SessionState> {
        this.session = await this.api.createSession(kind, params, humanPlayer);
        this.log = [];
        await this.refreshMoves();
        return this.session;
    }

    /** Re-fetch the legal move list; empty once the session is finished. */
    async refreshMoves(): Promise<AnnotatedMove[]> {
        if (this.session === null || this.session.status === "finished") {
            this.legalMoves = [];
            return this.legalMoves;
        }
        const listing = await this.api.listMoves(this.session.id, this.hints);
        this.legalMoves = listing.moves;
        return this.legalMoves;
    }

    /** The annotated entry for a move, if the server listed it as legal. */
    findLegal(move: WireMove): AnnotatedMove | undefined {
        const key = moveKey(move);
        return this.legalMoves.find((entry) => moveKey(entry.move) === key);
    }

    /** Submit a human move; refuses anything outside the fetched legal list. */
    async submitHuman(move: WireMove): Promise<SessionState> {
        if (this.session === null) {
            throw new Error("no session");
        }
        const entry = this.findLegal(move);
        if (entry === undefined) {
            throw new Error(`move ${moveKey(move)} is not in the last-fetched legal move list`);
        }
        this.session = await this.api.submitMove(this.session.id, move, this.hints);
        this.log.push({ by: "human", move, stateAfter: this.session.state });
        await this.refreshMoves();
        return this.session;
    }

    /** Ask the engine to move for the side to play. */
    async engineReply(): Promise<{ move: WireMove; session: SessionState }> {
        if (this.session === null) {
            throw new Error("no session");
        }
        const reply = await this.api.engineMove(this.session.id, this.hints);
        this.session = reply.session;
        this.log.push({ by: "engine", move: reply.move, stateAfter: reply.session.state });
        await this.refreshMoves();
        return reply;
    }

    /** The server-side history must equal what was played through this client. */
    historyMatchesLog(): boolean {
        if (this.session === null) {
            return this.log.length === 0;
        }
        const server = this.session.history.map(moveKey);
        const local = this.log.map((entry) => moveKey(entry.move));
        return server.length === local.length && server.every((key, idx) => key === local[idx]);
    }
}
