import assert from "node:assert/strict";
import { test } from "node:test";

import {
    GRAY,
    GREEN,
    YELLOW,
    cycleColor,
    freshRow,
    historyFromRows,
    isCompleteRow,
    isSolvedRow,
    patternText,
} from "../src/state.js";

test("colors cycle gray -> yellow -> green -> gray", () => {
    assert.equal(cycleColor(GRAY), YELLOW);
    assert.equal(cycleColor(YELLOW), GREEN);
    assert.equal(cycleColor(GREEN), GRAY);
});

test("pattern text matches the service alphabet", () => {
    assert.equal(patternText([GRAY, YELLOW, GREEN, GRAY, GRAY]), "BYGBB");
    assert.equal(patternText([GREEN, GREEN, GREEN, GREEN, GREEN]), "GGGGG");
});

test("rows are complete only with a full lowercase word and all cells", () => {
    assert.ok(isCompleteRow({ guess: "trace", colors: [0, 0, 0, 0, 0] }, 5));
    assert.ok(!isCompleteRow({ guess: "trac", colors: [0, 0, 0, 0, 0] }, 5));
    assert.ok(!isCompleteRow({ guess: "TRACE", colors: [0, 0, 0, 0, 0] }, 5));
    assert.ok(!isCompleteRow({ guess: "trace", colors: [0, 0, 0] }, 5));
});

test("solved means every cell green", () => {
    assert.ok(isSolvedRow({ guess: "trace", colors: [2, 2, 2, 2, 2] }));
    assert.ok(!isSolvedRow({ guess: "trace", colors: [2, 2, 1, 2, 2] }));
    assert.ok(!isSolvedRow(freshRow(5)));
});

test("history serializes rows in order", () => {
    const rows = [
        { guess: "raise", colors: [0, 1, 0, 0, 2] as (0 | 1 | 2)[] },
        { guess: "close", colors: [2, 0, 0, 1, 0] as (0 | 1 | 2)[] },
    ];
    assert.deepEqual(historyFromRows(rows), [
        { guess: "raise", pattern: "BYBBG" },
        { guess: "close", pattern: "GBBYB" },
    ]);
});

test("fresh rows start gray and empty", () => {
    const row = freshRow(5);
    assert.equal(row.guess, "");
    assert.deepEqual(row.colors, [GRAY, GRAY, GRAY, GRAY, GRAY]);
});
