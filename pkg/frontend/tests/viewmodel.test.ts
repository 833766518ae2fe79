import { describe, expect, it } from "vitest";

import type { QuiverJson, SessionPayload } from "../src/types.js";
import { arrowKey, ExplorerViewModel, type ApiLike } from "../src/viewmodel.js";

function payload(arrows: QuiverJson["arrows"], history: number[] = []): SessionPayload {
  return {
    id: "s1",
    kind: "algebra",
    m: 2,
    history,
    quiver: { m: 2, labels: ["0", "1", "2"], arrows },
    state: null,
    angulation: null,
    svg: null,
  };
}

const SEED = payload([
  { from: 0, to: 1, colour: 0, mult: 1 },
  { from: 1, to: 0, colour: 2, mult: 1 },
]);

const AFTER = payload(
  [
    { from: 0, to: 1, colour: 1, mult: 1 },
    { from: 1, to: 0, colour: 1, mult: 1 },
  ],
  [1],
);

function stubApi(overrides: Partial<ApiLike> = {}): ApiLike {
  return {
    createSession: async () => SEED,
    mutate: async () => AFTER,
    undo: async () => SEED,
    complements: async () => ({ vertex: 0, cycle: [], diagonals: null }),
    quiverText: async () => "{}\n",
    ...overrides,
  };
}

describe("ExplorerViewModel", () => {
  it("adopts the created session and its canonical text", async () => {
    const vm = new ExplorerViewModel(stubApi());
    const ok = await vm.start({ type: "A", rank: 3, m: 2 });
    expect(ok).toBe(true);
    expect(vm.session?.id).toBe("s1");
    expect(vm.quiverText).toBe("{}\n");
    expect(vm.lastError).toBeNull();
  });

  it("rejects junk seed forms before touching the network", async () => {
    let called = 0;
    const vm = new ExplorerViewModel(
      stubApi({
        createSession: async () => {
          called += 1;
          return SEED;
        },
      }),
    );
    expect(await vm.start({ type: "A", rank: 0, m: 2 })).toBe(false);
    expect(await vm.start({ type: "A", rank: 3, m: 1.5 })).toBe(false);
    expect(called).toBe(0);
    expect(vm.lastError).toMatch(/positive integer/);
  });

  it("allows only one request in flight", async () => {
    let release: () => void = () => {};
    const gate = new Promise<void>((resolve) => (release = resolve));
    const vm = new ExplorerViewModel(
      stubApi({
        mutate: async () => {
          await gate;
          return AFTER;
        },
      }),
    );
    await vm.start({ type: "A", rank: 3, m: 2 });
    const first = vm.clickMutate(1);
    expect(vm.busy).toBe(true);
    // the double click: refused outright, no second request
    expect(await vm.clickMutate(1)).toBe(false);
    release();
    expect(await first).toBe(true);
    expect(vm.busy).toBe(false);
    expect(vm.session?.history).toEqual([1]);
  });

  it("diffs arrows so the view can highlight what moved", async () => {
    const vm = new ExplorerViewModel(stubApi());
    await vm.start({ type: "A", rank: 3, m: 2 });
    expect(vm.changedArrows.size).toBe(0); // nothing to compare on start
    await vm.clickMutate(1);
    expect(vm.changedArrows).toEqual(new Set(AFTER.quiver.arrows.map(arrowKey)));
  });

  it("clears the overlay when the quiver changes under it", async () => {
    const vm = new ExplorerViewModel(stubApi());
    await vm.start({ type: "A", rank: 3, m: 2 });
    await vm.previewComplements(1);
    expect(vm.overlay).not.toBeNull();
    await vm.clickMutate(1);
    expect(vm.overlay).toBeNull();
  });

  it("surfaces server errors and recovers", async () => {
    const vm = new ExplorerViewModel(
      stubApi({
        mutate: async () => {
          throw new Error("vertex 5 out of range");
        },
      }),
    );
    await vm.start({ type: "A", rank: 3, m: 2 });
    expect(await vm.clickMutate(5)).toBe(false);
    expect(vm.lastError).toBe("vertex 5 out of range");
    expect(vm.busy).toBe(false);
    // still usable afterwards
    expect(await vm.previewComplements(0)).toBe(true);
    expect(vm.lastError).toBeNull();
  });

  it("ignores moves before a session exists", async () => {
    const vm = new ExplorerViewModel(stubApi());
    expect(await vm.clickMutate(0)).toBe(false);
    expect(await vm.clickUndo()).toBe(false);
  });

  it("notifies listeners around every request", async () => {
    const vm = new ExplorerViewModel(stubApi());
    let calls = 0;
    vm.onChange(() => (calls += 1));
    await vm.start({ type: "A", rank: 3, m: 2 });
    expect(calls).toBe(2); // busy on, busy off
    vm.closeOverlay();
    expect(calls).toBe(3);
  });
});
