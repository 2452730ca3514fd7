// Session state for the play-along assistant: completed rows of
// (guess, observed colors), plus the solver settings. Pure logic only so
// it can be tested without a DOM.
export const GRAY = 0;
export const YELLOW = 1;
export const GREEN = 2;
const PATTERN_CHARS = "BYG";
// the recommended combination: bin count first, expected bin size on ties
export const DEFAULT_SETTINGS = {
    heuristic: "negnumbins",
    tiebreak: "expbinsize",
    mode: "regular",
};
export function cycleColor(color) {
    return ((color + 1) % 3);
}
export function patternText(colors) {
    return colors.map((c) => PATTERN_CHARS[c]).join("");
}
export function isCompleteRow(row, wordLength) {
    return (row.guess.length === wordLength &&
        /^[a-z]+$/.test(row.guess) &&
        row.colors.length === wordLength);
}
export function isSolvedRow(row) {
    return row.colors.length > 0 && row.colors.every((c) => c === GREEN);
}
export function historyFromRows(rows) {
    return rows.map((row) => ({
        guess: row.guess,
        pattern: patternText(row.colors),
    }));
}
export function freshRow(wordLength) {
    return { guess: "", colors: Array(wordLength).fill(GRAY) };
}
