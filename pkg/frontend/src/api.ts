import type {
  ApiErrorBody,
  CandidatePage,
  CandidateStatus,
  DecisionAction,
  DecisionPayload,
  DecisionReply,
  OntologyJson,
  SessionInfo,
  UndoReply,
} from "./types.js";

/** A non-2xx response carrying the service's {code, message, details} body. */
export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly details: Record<string, unknown> = {},
  ) {
    super(message);
    this.name = "ApiRequestError";
  }
}

export interface OpenSessionOptions {
  from_seed?: boolean;
  min_frequency?: number;
  nmax?: number;
  keep_interior_stopwords?: boolean;
}

export interface CandidateQuery {
  status?: CandidateStatus;
  offset?: number;
  limit?: number;
}

/** Thin typed wrapper over the session API. Network failures propagate
 * as the fetch implementation's own errors (TypeError in browsers), so
 * callers can tell "server said no" from "server unreachable". */
export class ApiClient {
  private readonly fetchFn: typeof fetch;

  constructor(
    readonly baseUrl: string = "",
    fetchFn: typeof fetch = globalThis.fetch,
  ) {
    this.fetchFn = fetchFn.bind(globalThis);
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      throw await toApiError(response);
    }
    return (await response.json()) as T;
  }

  private async requestText(path: string): Promise<string> {
    const response = await this.fetchFn(this.baseUrl + path);
    if (!response.ok) {
      throw await toApiError(response);
    }
    return response.text();
  }

  healthz(): Promise<{ status: string; sessions: number }> {
    return this.request("/healthz");
  }

  openSession(options: OpenSessionOptions = {}): Promise<SessionInfo> {
    return this.request("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(options),
    });
  }

  candidates(sessionId: string, query: CandidateQuery = {}): Promise<CandidatePage> {
    const params = new URLSearchParams();
    if (query.status !== undefined) params.set("status", query.status);
    if (query.offset !== undefined) params.set("offset", String(query.offset));
    if (query.limit !== undefined) params.set("limit", String(query.limit));
    const suffix = params.size > 0 ? `?${params.toString()}` : "";
    return this.request(`/sessions/${sessionId}/candidates${suffix}`);
  }

  decide(
    sessionId: string,
    phrase: string,
    action: DecisionAction,
    payload: DecisionPayload = {},
  ): Promise<DecisionReply> {
    return this.request(`/sessions/${sessionId}/decisions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ phrase, action, payload }),
    });
  }

  undo(sessionId: string, phrase: string): Promise<UndoReply> {
    return this.request(`/sessions/${sessionId}/undo`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ phrase }),
    });
  }

  ontology(sessionId: string): Promise<OntologyJson> {
    return this.request(`/sessions/${sessionId}/ontology`);
  }

  exportOwl(sessionId: string, syntax: "turtle" | "xml" = "turtle"): Promise<string> {
    return this.requestText(`/sessions/${sessionId}/export.owl?syntax=${syntax}`);
  }

  seedOwl(): Promise<string> {
    return this.requestText("/seed.owl");
  }
}

async function toApiError(response: Response): Promise<ApiRequestError> {
  let body: ApiErrorBody;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    return new ApiRequestError(response.status, "bad-payload", response.statusText);
  }
  return new ApiRequestError(response.status, body.code, body.message, body.details);
}
