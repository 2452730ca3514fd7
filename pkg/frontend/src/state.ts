// Session state for the play-along assistant: completed rows of
// (guess, observed colors), plus the solver settings. Pure logic only so
// it can be tested without a DOM.

export type CellColor = 0 | 1 | 2; // gray, yellow, green

export const GRAY: CellColor = 0;
export const YELLOW: CellColor = 1;
export const GREEN: CellColor = 2;

const PATTERN_CHARS = "BYG";

export interface Row {
    guess: string;
    colors: CellColor[];
}

export interface Settings {
    heuristic: string;
    tiebreak: string | null;
    mode: string;
}

// the recommended combination: bin count first, expected bin size on ties
export const DEFAULT_SETTINGS: Settings = {
    heuristic: "negnumbins",
    tiebreak: "expbinsize",
    mode: "regular",
};

export function cycleColor(color: CellColor): CellColor {
    return ((color + 1) % 3) as CellColor;
}

export function patternText(colors: CellColor[]): string {
    return colors.map((c) => PATTERN_CHARS[c]).join("");
}

export function isCompleteRow(row: Row, wordLength: number): boolean {
    return (
        row.guess.length === wordLength &&
        /^[a-z]+$/.test(row.guess) &&
        row.colors.length === wordLength
    );
}

export function isSolvedRow(row: Row): boolean {
    return row.colors.length > 0 && row.colors.every((c) => c === GREEN);
}

export interface HistoryStep {
    guess: string;
    pattern: string;
}

export function historyFromRows(rows: Row[]): HistoryStep[] {
    return rows.map((row) => ({
        guess: row.guess,
        pattern: patternText(row.colors),
    }));
}

export function freshRow(wordLength: number): Row {
    return { guess: "", colors: Array(wordLength).fill(GRAY) };
}
