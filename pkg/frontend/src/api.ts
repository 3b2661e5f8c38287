import type { HealthInfo, ReportDetail, SearchResponse } from "./types.js";

/** Error carrying the service's {error, message} body and HTTP status. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, init);
    } catch (err) {
      if (isAbort(err)) throw err;
      throw new ApiError(0, "NetworkError", `cannot reach ${this.baseUrl}: ${err}`);
    }
    const body = (await response.json().catch(() => ({}))) as Record<string, unknown>;
    if (!response.ok) {
      const code = typeof body.error === "string" ? body.error : "UnknownError";
      const message = typeof body.message === "string" ? body.message : response.statusText;
      throw new ApiError(response.status, code, message);
    }
    return body as T;
  }

  search(text: string, topK: number, signal?: AbortSignal): Promise<SearchResponse> {
    return this.request<SearchResponse>("/search", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text, top_k: topK }),
      signal,
    });
  }

  report(id: string): Promise<ReportDetail> {
    return this.request<ReportDetail>(`/reports/${encodeURIComponent(id)}`);
  }

  health(): Promise<HealthInfo> {
    return this.request<HealthInfo>("/health");
  }
}
