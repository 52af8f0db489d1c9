// Circle-board rendering and the two-tap-plus-divider move picker.
//
// Display only: spots are clickable exactly when the last-fetched legal
// move list mentions them, and the submit button stays disabled unless the
// assembled (component, i, j, a, b) tuple is present in that list.

import { describeMove } from "./format.js";
import { AnnotatedMove, SplitMove, WireMove } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const BOARD_SIZE = 220;
const RING_RADIUS = 86;

interface Selection {
    component: number;
    first: number;
    second: number | null;
    a: number;
    b: number;
}

export interface BoardCallbacks {
    onSubmit(move: WireMove): void;
}

export class BoardView {
    private selection: Selection | null = null;

    constructor(
        private container: HTMLElement,
        private callbacks: BoardCallbacks,
    ) {}

    clearSelection(): void {
        this.selection = null;
    }

    /** Full re-render from the latest session state and legal move list. */
    render(
        components: number[][] | null,
        legalMoves: AnnotatedMove[],
        interactive: boolean,
        hints: boolean,
    ): void {
        this.container.replaceChildren();
        if (components === null) {
            this.renderOpeningPhase(legalMoves, interactive);
            return;
        }
        const splits = legalMoves.filter((m): m is AnnotatedMove & { move: SplitMove } =>
            m.move.kind === "split");
        components.forEach((tips, index) => {
            this.container.appendChild(
                this.renderComponent(index, tips, splits, interactive),
            );
        });
        if (this.selection !== null && this.selection.second !== null) {
            this.container.appendChild(this.renderSplitChooser(components, splits, hints));
        }
    }

    /** Two-cross sessions before the board decomposes: plain move buttons. */
    private renderOpeningPhase(legalMoves: AnnotatedMove[], interactive: boolean): void {
        const panel = document.createElement("div");
        panel.className = "opening-panel";
        if (legalMoves.length === 0) {
            panel.textContent = "no moves to show";
        }
        for (const entry of legalMoves) {
            const button = document.createElement("button");
            button.textContent = describeMove(entry.move);
            button.disabled = !interactive;
            button.addEventListener("click", () => this.callbacks.onSubmit(entry.move));
            panel.appendChild(button);
        }
        this.container.appendChild(panel);
    }

    private movesFor(splits: (AnnotatedMove & { move: SplitMove })[], component: number) {
        return splits.filter((entry) => entry.move.component === component);
    }

    /** Spots named in any legal move of this component. */
    private joinableSpots(moves: (AnnotatedMove & { move: SplitMove })[]): Set<number> {
        const spots = new Set<number>();
        for (const entry of moves) {
            spots.add(entry.move.i);
            spots.add(entry.move.j);
        }
        return spots;
    }

    /** Partners of `spot` according to the legal move list. */
    private partnersOf(
        moves: (AnnotatedMove & { move: SplitMove })[],
        spot: number,
    ): Set<number> {
        const partners = new Set<number>();
        for (const entry of moves) {
            if (entry.move.i === spot) partners.add(entry.move.j);
            if (entry.move.j === spot) partners.add(entry.move.i);
        }
        return partners;
    }

    private renderComponent(
        index: number,
        tips: number[],
        splits: (AnnotatedMove & { move: SplitMove })[],
        interactive: boolean,
    ): HTMLElement {
        const wrapper = document.createElement("div");
        wrapper.className = "board-component";
        const title = document.createElement("div");
        title.className = "board-title";
        title.textContent = `component ${index}: CS[${tips.join(",")}]`;
        wrapper.appendChild(title);

        const svg = document.createElementNS(SVG_NS, "svg");
        svg.setAttribute("viewBox", `0 0 ${BOARD_SIZE} ${BOARD_SIZE}`);
        svg.setAttribute("width", String(BOARD_SIZE));
        svg.setAttribute("height", String(BOARD_SIZE));

        const centre = BOARD_SIZE / 2;
        const ring = document.createElementNS(SVG_NS, "circle");
        ring.setAttribute("cx", String(centre));
        ring.setAttribute("cy", String(centre));
        ring.setAttribute("r", String(RING_RADIUS));
        ring.setAttribute("class", "ring");
        svg.appendChild(ring);

        const moves = this.movesFor(splits, index);
        const joinable = this.joinableSpots(moves);
        const selected = this.selection !== null && this.selection.component === index
            ? this.selection
            : null;
        const partners = selected !== null ? this.partnersOf(moves, selected.first) : null;

        tips.forEach((count, spot) => {
            const angle = -Math.PI / 2 + (2 * Math.PI * spot) / tips.length;
            const x = centre + RING_RADIUS * Math.cos(angle);
            const y = centre + RING_RADIUS * Math.sin(angle);

            // tip ticks point into the enclosed region
            for (let t = 0; t < count; t++) {
                const spread = (t - (count - 1) / 2) * 0.22;
                const tx = x - 22 * Math.cos(angle + spread);
                const ty = y - 22 * Math.sin(angle + spread);
                const tick = document.createElementNS(SVG_NS, "line");
                tick.setAttribute("x1", String(x));
                tick.setAttribute("y1", String(y));
                tick.setAttribute("x2", String(tx));
                tick.setAttribute("y2", String(ty));
                tick.setAttribute("class", "tip");
                svg.appendChild(tick);
            }

            const node = document.createElementNS(SVG_NS, "circle");
            node.setAttribute("cx", String(x));
            node.setAttribute("cy", String(y));
            node.setAttribute("r", "11");
            const classes = ["spot"];
            if (selected !== null && selected.first === spot) classes.push("selected");
            else if (selected !== null && selected.second === spot) classes.push("selected");
            else if (partners !== null && partners.has(spot)) classes.push("partner");
            else if (partners === null && joinable.has(spot)) classes.push("joinable");
            else classes.push("inert");
            node.setAttribute("class", classes.join(" "));
            if (interactive) {
                node.addEventListener("click", () => this.handleSpotClick(index, spot, moves));
            }
            svg.appendChild(node);

            const label = document.createElementNS(SVG_NS, "text");
            label.setAttribute("x", String(x));
            label.setAttribute("y", String(y + 4));
            label.setAttribute("class", "spot-label");
            label.setAttribute("text-anchor", "middle");
            label.textContent = String(count);
            svg.appendChild(label);
        });

        wrapper.appendChild(svg);
        return wrapper;
    }

    private handleSpotClick(
        component: number,
        spot: number,
        moves: (AnnotatedMove & { move: SplitMove })[],
    ): void {
        const sel = this.selection;
        if (sel === null || sel.component !== component || sel.second !== null) {
            // starting a fresh selection: only spots with legal joins react
            if (this.joinableSpots(moves).has(spot)) {
                this.selection = { component, first: spot, second: null, a: 0, b: 0 };
                this.requestRender();
            }
            return;
        }
        if (spot === sel.first) {
            this.selection = null;
            this.requestRender();
            return;
        }
        if (this.partnersOf(moves, sel.first).has(spot)) {
            sel.second = spot;
            sel.a = 0;
            sel.b = 0;
            this.requestRender();
        }
    }

    /** After both tips are picked, choose how the leftover tips divide. */
    private renderSplitChooser(
        components: number[][],
        splits: (AnnotatedMove & { move: SplitMove })[],
        hints: boolean,
    ): HTMLElement {
        const sel = this.selection!;
        const i = Math.min(sel.first, sel.second!);
        const j = Math.max(sel.first, sel.second!);
        const candidates = this.movesFor(splits, sel.component).filter(
            (entry) => entry.move.i === i && entry.move.j === j,
        );
        const panel = document.createElement("div");
        panel.className = "split-chooser";

        const heading = document.createElement("div");
        heading.textContent =
            `joining spots ${i} and ${j} of component ${sel.component}: ` +
            "slide the dividers to place the leftover tips";
        panel.appendChild(heading);

        const maxA = Math.max(0, ...candidates.map((entry) => entry.move.a));
        const maxB = Math.max(0, ...candidates.map((entry) => entry.move.b));
        const sliderA = this.divider(panel, `spot ${i}: first side keeps`, maxA, sel.a, (v) => {
            sel.a = v;
            this.requestRender();
        });
        const sliderB = this.divider(panel, `spot ${j}: first side keeps`, maxB, sel.b, (v) => {
            sel.b = v;
            this.requestRender();
        });
        void sliderA;
        void sliderB;

        const chosen = candidates.find(
            (entry) => entry.move.a === sel.a && entry.move.b === sel.b,
        );
        const preview = document.createElement("div");
        preview.className = "split-preview";
        if (chosen !== undefined) {
            preview.textContent = `result: ${chosen.state_after}` +
                (hints && chosen.nimber !== undefined
                    ? ` (value ${chosen.nimber}${chosen.winning ? ", winning" : ""})`
                    : "");
        } else {
            preview.textContent = "that division is not offered by the server";
        }
        panel.appendChild(preview);

        const submit = document.createElement("button");
        submit.textContent = "play the join";
        submit.disabled = chosen === undefined;
        submit.addEventListener("click", () => {
            if (chosen !== undefined) {
                this.selection = null;
                this.callbacks.onSubmit(chosen.move);
            }
        });
        panel.appendChild(submit);

        const cancel = document.createElement("button");
        cancel.textContent = "cancel";
        cancel.addEventListener("click", () => {
            this.selection = null;
            this.requestRender();
        });
        panel.appendChild(cancel);
        return panel;
    }

    private divider(
        parent: HTMLElement,
        label: string,
        max: number,
        value: number,
        onChange: (value: number) => void,
    ): HTMLInputElement {
        const row = document.createElement("label");
        row.className = "divider-row";
        const caption = document.createElement("span");
        const slider = document.createElement("input");
        slider.type = "range";
        slider.min = "0";
        slider.max = String(max);
        slider.step = "1";
        slider.value = String(Math.min(value, max));
        caption.textContent = `${label} ${slider.value}`;
        slider.addEventListener("input", () => {
            caption.textContent = `${label} ${slider.value}`;
            onChange(Number(slider.value));
        });
        row.appendChild(caption);
        row.appendChild(slider);
        parent.appendChild(row);
        return slider;
    }

    private renderRequested: (() => void) | null = null;

    onRenderRequested(callback: () => void): void {
        this.renderRequested = callback;
    }

    private requestRender(): void {
        if (this.renderRequested !== null) {
            this.renderRequested();
        }
    }
}
