// DOM wiring for the assistant: a board of entered rows (tap a cell to
// cycle its observed color), settings selects, and the live suggestion
// table. All solver work happens server-side.
import { fetchMeta } from "./api.js";
import { Session } from "./controller.js";
import { cycleColor, freshRow, isCompleteRow, } from "./state.js";
const SERVICE_BASE = "";
const COLOR_CLASSES = ["gray", "yellow", "green"];
function el(tag, className, text) {
    const node = document.createElement(tag);
    if (className)
        node.className = className;
    if (text !== undefined)
        node.textContent = text;
    return node;
}
function must(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing #${id}`);
    return node;
}
async function boot() {
    const meta = await fetchMeta(SERVICE_BASE);
    const session = new Session(SERVICE_BASE, fetch.bind(window), meta.word_length);
    const board = must("board");
    const entryInput = must("entry");
    const entryCells = must("entry-cells");
    const addButton = must("add-row");
    const banner = must("banner");
    const remaining = must("remaining");
    const suggestions = must("suggestions");
    const candidates = must("candidates");
    const heuristicSelect = must("heuristic");
    const tiebreakSelect = must("tiebreak");
    const modeSelect = must("mode");
    must("lexicon-label").textContent =
        `${meta.solutions.label} (${meta.solutions.size} words)`;
    for (const name of meta.heuristics) {
        heuristicSelect.append(new Option(name, name));
        tiebreakSelect.append(new Option(name, name));
    }
    tiebreakSelect.append(new Option("none", ""));
    for (const mode of meta.modes)
        modeSelect.append(new Option(mode, mode));
    heuristicSelect.value = session.state.settings.heuristic;
    tiebreakSelect.value = session.state.settings.tiebreak ?? "";
    modeSelect.value = session.state.settings.mode;
    // the row being typed: colors cycle before submission too
    let pending = freshRow(meta.word_length);
    function renderPendingCells() {
        entryCells.replaceChildren();
        for (let i = 0; i < meta.word_length; i++) {
            const cell = el("button", `cell ${COLOR_CLASSES[pending.colors[i]]}`);
            cell.type = "button";
            cell.textContent = (pending.guess[i] ?? "").toUpperCase();
            cell.addEventListener("click", () => {
                pending.colors[i] = cycleColor(pending.colors[i]);
                renderPendingCells();
            });
            entryCells.append(cell);
        }
    }
    function renderRows(state) {
        board.replaceChildren();
        state.rows.forEach((row, index) => {
            const div = el("div", "row");
            if (state.highlightRow === index)
                div.classList.add("suspect");
            row.colors.forEach((color, i) => {
                const cell = el("button", `cell ${COLOR_CLASSES[color]}`);
                cell.type = "button";
                cell.textContent = row.guess[i].toUpperCase();
                cell.title = "tap to cycle the observed color";
                cell.addEventListener("click", () => {
                    const colors = row.colors.slice();
                    colors[i] = cycleColor(colors[i]);
                    void session.editRow(index, { guess: row.guess, colors });
                });
                div.append(cell);
            });
            const drop = el("button", "drop", "×");
            drop.type = "button";
            drop.title = "remove this row";
            drop.addEventListener("click", () => void session.removeRow(index));
            div.append(drop);
            board.append(div);
        });
    }
    function renderBanner(state) {
        banner.className = `banner ${state.status}`;
        switch (state.status) {
            case "loading":
                banner.textContent = "thinking…";
                break;
            case "solved":
                banner.textContent = "solved!";
                break;
            case "contradiction":
                banner.textContent =
                    "these colors rule out every word — check the highlighted row";
                break;
            case "network-error": {
                banner.textContent = `service unreachable (${state.detail}) `;
                const again = el("button", "retry", "retry");
                again.addEventListener("click", () => void session.retry());
                banner.append(again);
                break;
            }
            default:
                banner.textContent = "";
        }
    }
    function renderSuggestions(state) {
        suggestions.replaceChildren();
        remaining.textContent =
            state.response === null ? "" : `${state.response.remaining} candidates remain`;
        if (!state.response)
            return;
        for (const s of state.response.suggestions) {
            const tr = el("tr", s.consistent ? "possible" : "");
            tr.append(el("td", "word", s.word), el("td", "", String(s.bins)), el("td", "", String(s.max_bin_size)), el("td", "", s.expected_bin_size.toFixed(2)), el("td", "", s.entropy.toFixed(3)), el("td", "", s.consistent ? "yes" : "no"));
            tr.addEventListener("click", () => {
                pending = { ...pending, guess: s.word };
                entryInput.value = s.word;
                renderPendingCells();
            });
            suggestions.append(tr);
        }
        candidates.textContent = state.response.candidates_sample.join("  ");
    }
    session.onChange = (state) => {
        renderRows(state);
        renderBanner(state);
        renderSuggestions(state);
    };
    entryInput.addEventListener("input", () => {
        pending = {
            ...pending,
            guess: entryInput.value.trim().toLowerCase(),
        };
        renderPendingCells();
    });
    addButton.addEventListener("click", () => {
        if (!isCompleteRow(pending, meta.word_length)) {
            banner.className = "banner contradiction";
            banner.textContent = `enter a full ${meta.word_length}-letter word first`;
            return;
        }
        void session.submitRow(pending);
        pending = freshRow(meta.word_length);
        entryInput.value = "";
        renderPendingCells();
    });
    heuristicSelect.addEventListener("change", () => void session.updateSettings({ heuristic: heuristicSelect.value }));
    tiebreakSelect.addEventListener("change", () => void session.updateSettings({ tiebreak: tiebreakSelect.value || null }));
    modeSelect.addEventListener("change", () => void session.updateSettings({ mode: modeSelect.value }));
    renderPendingCells();
    await session.start();
}
boot().catch((error) => {
    const banner = document.getElementById("banner");
    if (banner) {
        banner.className = "banner network-error";
        banner.textContent = `could not reach the suggestion service: ${error}`;
    }
});
