// Page bootstrap: session form, board, history panel, winner banner.

import { ApiClient, ApiError } from "./api.js";
import { BoardView } from "./board.js";
import { SessionController } from "./controller.js";
import { describeMove, describePlayer } from "./format.js";
import { SessionKind, WireMove } from "./types.js";

const apiBase = (document.querySelector("meta[name=api-base]") as HTMLMetaElement | null)
    ?.content ?? "http://127.0.0.1:8000";

const api = new ApiClient(apiBase);
let controller = new SessionController(api);

const form = document.getElementById("new-game") as HTMLFormElement;
const kindSelect = document.getElementById("kind") as HTMLSelectElement;
const pInput = document.getElementById("param-p") as HTMLInputElement;
const qInput = document.getElementById("param-q") as HTMLInputElement;
const tipsInput = document.getElementById("param-tips") as HTMLInputElement;
const seatSelect = document.getElementById("seat") as HTMLSelectElement;
const hintsBox = document.getElementById("hints") as HTMLInputElement;
const statusLine = document.getElementById("status") as HTMLElement;
const errorLine = document.getElementById("error") as HTMLElement;
const banner = document.getElementById("banner") as HTMLElement;
const historyList = document.getElementById("history") as HTMLOListElement;
const boardHost = document.getElementById("board") as HTMLElement;

const board = new BoardView(boardHost, {
    onSubmit: (move: WireMove) => {
        void submitHumanMove(move);
    },
});
board.onRenderRequested(render);

function showError(err: unknown): void {
    if (err instanceof ApiError) {
        const detail = err.detail as { message?: string } | string;
        errorLine.textContent =
            typeof detail === "object" && detail !== null && detail.message !== undefined
                ? detail.message
                : String(err.message);
    } else {
        errorLine.textContent = String(err);
    }
}

function render(): void {
    const session = controller.session;
    if (session === null) {
        statusLine.textContent = "no game yet";
        banner.textContent = "";
        boardHost.replaceChildren();
        historyList.replaceChildren();
        return;
    }
    const phase = session.phase !== undefined ? ` [${session.phase}]` : "";
    statusLine.textContent = `${session.state}${phase}` +
        (controller.hints && session.nimber !== undefined ? ` (value ${session.nimber})` : "");

    if (session.status === "finished") {
        banner.textContent = `game over: ${describePlayer(session.winner, session.human_player)} won`;
        banner.className = session.winner === session.human_player ? "banner win" : "banner lose";
    } else {
        banner.textContent = `${describePlayer(session.turn, session.human_player)} to move`;
        banner.className = "banner";
    }

    historyList.replaceChildren(
        ...controller.log.map((entry) => {
            const item = document.createElement("li");
            item.textContent = `${entry.by}: ${describeMove(entry.move)} -> ${entry.stateAfter}`;
            return item;
        }),
    );

    board.render(
        session.components,
        controller.legalMoves,
        controller.humanTurn,
        controller.hints,
    );
}

async function submitHumanMove(move: WireMove): Promise<void> {
    errorLine.textContent = "";
    try {
        await controller.submitHuman(move);
        render();
        await maybeEngineReply();
    } catch (err) {
        showError(err);
        render();
    }
}

async function maybeEngineReply(): Promise<void> {
    while (controller.session !== null && !controller.finished && !controller.humanTurn) {
        try {
            await controller.engineReply();
            render();
        } catch (err) {
            showError(err);
            return;
        }
    }
}

kindSelect.addEventListener("change", () => {
    const circular = kindSelect.value === "circular";
    (document.getElementById("pq-params") as HTMLElement).hidden = circular;
    (document.getElementById("tips-params") as HTMLElement).hidden = !circular;
});

form.addEventListener("submit", (event) => {
    event.preventDefault();
    errorLine.textContent = "";
    const kind = kindSelect.value as SessionKind;
    const params: Record<string, unknown> = kind === "circular"
        ? { tips: tipsInput.value.split(",").map((part) => Number(part.trim())) }
        : { p: Number(pInput.value), q: Number(qInput.value) };
    controller = new SessionController(api, hintsBox.checked);
    board.clearSelection();
    void (async () => {
        try {
            await controller.create(kind, params, Number(seatSelect.value));
            render();
            await maybeEngineReply();
        } catch (err) {
            showError(err);
            render();
        }
    })();
});

render();
