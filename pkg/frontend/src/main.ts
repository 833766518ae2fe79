import { ExplorerApi } from "./api.js";
import {
  renderComplements,
  renderError,
  renderHistory,
  renderQuiver,
  renderSummands,
} from "./render.js";
import type { SeedForm } from "./types.js";
import { ExplorerViewModel } from "./viewmodel.js";

const PRESETS: Record<string, SeedForm> = {
  "a3-m2": { type: "A", rank: 3, m: 2 },
  "a2-m1": { type: "A", rank: 2, m: 1 },
  "a1-m3": { type: "A", rank: 1, m: 3 },
  "d4-m1": { type: "D", rank: 4, m: 1 },
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const api = new ExplorerApi("");
const vm = new ExplorerViewModel(api);

function draw(): void {
  el("toast").innerHTML = renderError(vm.lastError);
  const session = vm.session;
  el<HTMLButtonElement>("undo").disabled =
    vm.busy || !session || session.history.length === 0;
  for (const button of document.querySelectorAll<HTMLButtonElement>("form button")) {
    button.disabled = vm.busy;
  }
  if (!session) return;
  el("quiver-pane").innerHTML = renderQuiver(
    session.quiver,
    vm.changedArrows,
    vm.busy,
  );
  el("history-pane").innerHTML = renderHistory(
    session.history,
    session.quiver.labels,
  );
  el("polygon-pane").innerHTML = session.svg ?? "<p class='muted'>no polygon model</p>";
  el("summand-pane").innerHTML = session.state
    ? renderSummands(session.state.summands, session.quiver.labels)
    : "";
  el("raw-pane").textContent = vm.quiverText ?? "";
  el("overlay-pane").innerHTML = vm.overlay
    ? renderComplements(vm.overlay, session.quiver.labels)
    : "";

  // vertices: left click mutates, right click previews the exchange cycle
  for (const g of el("quiver-pane").querySelectorAll<SVGGElement>("g.vertex")) {
    const vertex = Number(g.dataset.vertex);
    g.addEventListener("click", () => void vm.clickMutate(vertex));
    g.addEventListener("contextmenu", (ev) => {
      ev.preventDefault();
      void vm.previewComplements(vertex);
    });
  }
}

function currentForm(): SeedForm {
  const preset = el<HTMLSelectElement>("preset").value;
  if (preset !== "custom") return PRESETS[preset]!;
  return {
    type: el<HTMLInputElement>("type").value.trim() || "A",
    rank: Number(el<HTMLInputElement>("rank").value),
    m: Number(el<HTMLInputElement>("m").value),
  };
}

export function boot(): void {
  vm.onChange(draw);
  el<HTMLFormElement>("seed-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    void vm.start(currentForm());
  });
  el<HTMLButtonElement>("undo").addEventListener("click", () => void vm.clickUndo());
  el("overlay-pane").addEventListener("click", () => vm.closeOverlay());
}

if (typeof document !== "undefined" && document.getElementById("seed-form")) {
  boot();
}
