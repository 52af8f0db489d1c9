// Thin fetch wrapper around the play service endpoints.

import { Analysis, EngineReply, MoveListing, SessionKind, SessionState, WireMove } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
    constructor(
        public status: number,
        public detail: unknown,
    ) {
        super(typeof detail === "string" ? detail : JSON.stringify(detail));
        this.name = "ApiError";
    }
}

export class ApiClient {
    private fetchImpl: FetchLike;

    constructor(
        private baseUrl: string,
        fetchImpl?: FetchLike,
    ) {
        this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
    }

    private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
        const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
        if (body !== undefined) {
            init.body = JSON.stringify(body);
        }
        const response = await this.fetchImpl(this.baseUrl + path, init);
        const payload = await response.json().catch(() => null);
        if (!response.ok) {
            const detail = payload && typeof payload === "object" && "detail" in payload
                ? (payload as { detail: unknown }).detail
                : payload;
            throw new ApiError(response.status, detail ?? response.statusText);
        }
        return payload as T;
    }

    createSession(
        kind: SessionKind,
        params: Record<string, unknown>,
        humanPlayer: number,
    ): Promise<SessionState> {
        return this.request("POST", "/sessions", {
            kind,
            params,
            human_player: humanPlayer,
        });
    }

    getSession(id: string, hints = false): Promise<SessionState> {
        return this.request("GET", `/sessions/${id}?hints=${hints}`);
    }

    listMoves(id: string, hints = false): Promise<MoveListing> {
        return this.request("GET", `/sessions/${id}/moves?hints=${hints}`);
    }

    submitMove(id: string, move: WireMove, hints = false): Promise<SessionState> {
        return this.request("POST", `/sessions/${id}/moves?hints=${hints}`, { move });
    }

    engineMove(id: string, hints = false): Promise<EngineReply> {
        return this.request("POST", `/sessions/${id}/engine-move?hints=${hints}`);
    }

    analyze(state: string): Promise<Analysis> {
        return this.request("GET", `/analyze?state=${encodeURIComponent(state)}`);
    }
}
