import type { ComplementsPayload, SeedForm, SessionPayload } from "./types.js";

async function fail(res: Response): Promise<never> {
  let detail = `${res.status}`;
  try {
    const body = await res.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    /* non-JSON error body: keep the status code */
  }
  throw new Error(detail);
}

export class ExplorerApi {
  constructor(readonly baseUrl: string = "") {}

  private async getJson<T>(path: string): Promise<T> {
    const res = await fetch(this.baseUrl + path);
    if (!res.ok) return fail(res);
    return res.json() as Promise<T>;
  }

  private async postJson<T>(path: string, body?: unknown): Promise<T> {
    const res = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
    if (!res.ok) return fail(res);
    return res.json() as Promise<T>;
  }

  createSession(form: SeedForm): Promise<SessionPayload> {
    return this.postJson("/sessions", form);
  }

  getSession(id: string): Promise<SessionPayload> {
    return this.getJson(`/sessions/${id}`);
  }

  mutate(id: string, vertex: number): Promise<SessionPayload> {
    return this.postJson(`/sessions/${id}/mutate`, { vertex });
  }

  undo(id: string): Promise<SessionPayload> {
    return this.postJson(`/sessions/${id}/undo`);
  }

  complements(id: string, vertex: number): Promise<ComplementsPayload> {
    return this.getJson(`/sessions/${id}/complements?vertex=${vertex}`);
  }

  /** The canonical quiver text, kept byte-for-byte as served. */
  async quiverText(id: string): Promise<string> {
    const res = await fetch(`${this.baseUrl}/sessions/${id}/quiver`);
    if (!res.ok) return fail(res);
    return res.text();
  }
}
