// Session controller: owns the rows and settings, talks to the service,
// and reduces everything to a single renderable view state. At most one
// suggest request is relevant at a time; stale responses are dropped.
import { ApiError, fetchSuggestions } from "./api.js";
import { DEFAULT_SETTINGS, historyFromRows, isCompleteRow, isSolvedRow, } from "./state.js";
export class Session {
    constructor(base, fetchFn = fetch, wordLength = 5, topK = 10) {
        this.base = base;
        this.fetchFn = fetchFn;
        this.wordLength = wordLength;
        this.topK = topK;
        this.onChange = () => undefined;
        this.requestSerial = 0;
        this.state = {
            rows: [],
            settings: { ...DEFAULT_SETTINGS },
            response: null,
            status: "idle",
            detail: "",
            highlightRow: null,
        };
    }
    history() {
        return historyFromRows(this.state.rows);
    }
    emit(patch) {
        this.state = { ...this.state, ...patch };
        this.onChange(this.state);
    }
    async start() {
        await this.refresh(null);
    }
    async submitRow(row) {
        if (!isCompleteRow(row, this.wordLength)) {
            throw new Error(`incomplete row: ${JSON.stringify(row)}`);
        }
        this.emit({ rows: [...this.state.rows, row] });
        await this.refresh(this.state.rows.length - 1);
    }
    async editRow(index, row) {
        if (!isCompleteRow(row, this.wordLength)) {
            throw new Error(`incomplete row: ${JSON.stringify(row)}`);
        }
        const rows = this.state.rows.slice();
        rows[index] = row;
        this.emit({ rows });
        await this.refresh(index);
    }
    async removeRow(index) {
        const rows = this.state.rows.slice();
        rows.splice(index, 1);
        this.emit({ rows });
        await this.refresh(null);
    }
    async updateSettings(patch) {
        this.emit({ settings: { ...this.state.settings, ...patch } });
        await this.refresh(this.state.highlightRow);
    }
    async retry() {
        await this.refresh(this.state.highlightRow);
    }
    async refresh(editedRow) {
        const serial = ++this.requestSerial;
        this.emit({ status: "loading" });
        try {
            const response = await fetchSuggestions(this.base, this.history(), this.state.settings, this.topK, this.fetchFn);
            if (serial !== this.requestSerial)
                return; // a newer request won
            const lastRow = this.state.rows[this.state.rows.length - 1];
            const solved = lastRow !== undefined && isSolvedRow(lastRow);
            this.emit({
                response,
                status: solved ? "solved" : "ready",
                detail: "",
                highlightRow: null,
            });
        }
        catch (error) {
            if (serial !== this.requestSerial)
                return;
            if (error instanceof ApiError && error.status === 422) {
                // the entered colors rule out every candidate; point at the
                // most recently edited row
                this.emit({
                    status: "contradiction",
                    detail: error.message,
                    highlightRow: editedRow ?? this.state.rows.length - 1,
                });
            }
            else if (error instanceof ApiError) {
                this.emit({ status: "network-error", detail: error.message });
            }
            else {
                this.emit({ status: "network-error", detail: String(error) });
            }
        }
    }
}
