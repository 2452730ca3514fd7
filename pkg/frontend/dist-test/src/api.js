// Thin typed client for the local suggestion service.
export class ApiError extends Error {
    constructor(status, message) {
        super(message);
        this.status = status;
    }
}
async function post(fetchFn, url, body) {
    const response = await fetchFn(url, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
    });
    if (!response.ok) {
        let detail = response.statusText;
        try {
            const parsed = await response.json();
            if (parsed && parsed.detail)
                detail = String(parsed.detail);
        }
        catch {
            // keep the status text
        }
        throw new ApiError(response.status, detail);
    }
    return (await response.json());
}
export async function fetchMeta(base, fetchFn = fetch) {
    const response = await fetchFn(`${base}/api/meta`);
    if (!response.ok)
        throw new ApiError(response.status, response.statusText);
    return (await response.json());
}
export async function fetchSuggestions(base, history, settings, topK, fetchFn = fetch) {
    return post(fetchFn, `${base}/api/suggest`, {
        history,
        heuristic: settings.heuristic,
        tiebreak: settings.tiebreak,
        mode: settings.mode,
        top_k: topK,
    });
}
