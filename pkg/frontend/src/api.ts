// Thin typed client for the local suggestion service.

import type { HistoryStep, Settings } from "./state.js";

export interface Suggestion {
    word: string;
    score: number | number[][];
    bins: number;
    max_bin_size: number;
    expected_bin_size: number;
    entropy: number;
    consistent: boolean;
}

export interface SuggestResponse {
    remaining: number;
    suggestions: Suggestion[];
    candidates_sample: string[];
}

export interface Meta {
    solutions: { label: string; size: number };
    guesses: { label: string; size: number };
    word_length: number;
    heuristics: string[];
    modes: string[];
}

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
    }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function post<T>(fetchFn: FetchLike, url: string, body: unknown): Promise<T> {
    const response = await fetchFn(url, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
    });
    if (!response.ok) {
        let detail = response.statusText;
        try {
            const parsed = await response.json();
            if (parsed && parsed.detail) detail = String(parsed.detail);
        } catch {
            // keep the status text
        }
        throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
}

export async function fetchMeta(base: string, fetchFn: FetchLike = fetch): Promise<Meta> {
    const response = await fetchFn(`${base}/api/meta`);
    if (!response.ok) throw new ApiError(response.status, response.statusText);
    return (await response.json()) as Meta;
}

export async function fetchSuggestions(
    base: string,
    history: HistoryStep[],
    settings: Settings,
    topK: number,
    fetchFn: FetchLike = fetch,
): Promise<SuggestResponse> {
    return post<SuggestResponse>(fetchFn, `${base}/api/suggest`, {
        history,
        heuristic: settings.heuristic,
        tiebreak: settings.tiebreak,
        mode: settings.mode,
        top_k: topK,
    });
}
