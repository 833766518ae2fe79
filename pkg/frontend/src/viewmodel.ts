import type { ExplorerApi } from "./api.js";
import type {
  ComplementsPayload,
  QuiverArrow,
  SeedForm,
  SessionPayload,
} from "./types.js";

export type ApiLike = Pick<
  ExplorerApi,
  "createSession" | "mutate" | "undo" | "complements" | "quiverText"
>;

export function arrowKey(a: QuiverArrow): string {
  return `${a.from}>${a.to}@${a.colour}x${a.mult}`;
}

/**
 * All client state in one place. The model never mutates a quiver itself:
 * every field is copied from the last service response, and `quiverText`
 * is the canonical text exactly as served (used verbatim by the raw-JSON
 * pane and the fidelity tests).
 *
 * One request at a time: while `busy` is true every action is a no-op that
 * resolves to false, which is what keeps a double-clicked vertex from
 * racing itself.
 */
export class ExplorerViewModel {
  session: SessionPayload | null = null;
  quiverText: string | null = null;
  overlay: ComplementsPayload | null = null;
  changedArrows: Set<string> = new Set();
  lastError: string | null = null;
  private pending = false;
  private listeners: Array<() => void> = [];

  constructor(private api: ApiLike) {}

  get busy(): boolean {
    return this.pending;
  }

  onChange(fn: () => void): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  private async run(action: () => Promise<void>): Promise<boolean> {
    if (this.pending) return false;
    this.pending = true;
    this.lastError = null;
    this.emit();
    try {
      await action();
      return true;
    } catch (err) {
      this.lastError = err instanceof Error ? err.message : String(err);
      return false;
    } finally {
      this.pending = false;
      this.emit();
    }
  }

  async start(form: SeedForm): Promise<boolean> {
    if (!Number.isInteger(form.rank) || form.rank < 1) {
      this.lastError = "rank must be a positive integer";
      this.emit();
      return false;
    }
    if (!Number.isInteger(form.m) || form.m < 1) {
      this.lastError = "m must be a positive integer";
      this.emit();
      return false;
    }
    return this.run(async () => {
      const session = await this.api.createSession(form);
      await this.adopt(session, false);
    });
  }

  async clickMutate(vertex: number): Promise<boolean> {
    if (!this.session) return false;
    const id = this.session.id;
    return this.run(async () => {
      const session = await this.api.mutate(id, vertex);
      await this.adopt(session, true);
    });
  }

  async clickUndo(): Promise<boolean> {
    if (!this.session) return false;
    const id = this.session.id;
    return this.run(async () => {
      const session = await this.api.undo(id);
      await this.adopt(session, true);
    });
  }

  async previewComplements(vertex: number): Promise<boolean> {
    if (!this.session) return false;
    const id = this.session.id;
    return this.run(async () => {
      this.overlay = await this.api.complements(id, vertex);
    });
  }

  closeOverlay(): void {
    this.overlay = null;
    this.emit();
  }

  /** Install a fresh payload and refetch the canonical text. */
  private async adopt(session: SessionPayload, diff: boolean): Promise<void> {
    const old = diff && this.session ? this.session.quiver.arrows : null;
    this.session = session;
    this.overlay = null;
    this.changedArrows = new Set();
    if (old) {
      const seen = new Set(old.map(arrowKey));
      for (const a of session.quiver.arrows) {
        if (!seen.has(arrowKey(a))) this.changedArrows.add(arrowKey(a));
      }
    }
    this.quiverText = await this.api.quiverText(session.id);
  }
}
