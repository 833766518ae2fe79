import type { ComplementsPayload, QuiverJson, Summand } from "./types.js";
import { arrowKey } from "./viewmodel.js";

// Okabe-Ito qualitative palette: distinguishable under the common kinds of
// colour blindness. The numeric badge on every arrow carries the colour
// anyway, the paint is just a faster read.
export const PALETTE = [
  "#0072b2",
  "#e69f00",
  "#009e73",
  "#cc79a7",
  "#56b4e9",
  "#d55e00",
  "#f0e442",
  "#999999",
];

const SIZE = 420;
const R = 150;

export function vertexPositions(n: number): Array<{ x: number; y: number }> {
  const c = SIZE / 2;
  if (n === 1) return [{ x: c, y: c }];
  return Array.from({ length: n }, (_, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    return { x: c + R * Math.cos(angle), y: c + R * Math.sin(angle) };
  });
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function arrowPath(
  from: { x: number; y: number },
  to: { x: number; y: number },
): { d: string; mid: { x: number; y: number } } {
  // bow each direction to its own side so the mirror arrow stays visible
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  const nx = -dy / len;
  const ny = dx / len;
  const bend = 26;
  const mx = (from.x + to.x) / 2 + nx * bend;
  const my = (from.y + to.y) / 2 + ny * bend;
  // trim the ends so arrowheads sit outside the vertex circles
  const t = 20 / len;
  const sx = from.x + dx * t + nx * bend * 0.4;
  const sy = from.y + dy * t + ny * bend * 0.4;
  const ex = to.x - dx * t + nx * bend * 0.4;
  const ey = to.y - dy * t + ny * bend * 0.4;
  return { d: `M ${sx} ${sy} Q ${mx} ${my} ${ex} ${ey}`, mid: { x: mx, y: my } };
}

/** The interactive quiver picture: click a vertex to mutate at it. */
export function renderQuiver(
  quiver: QuiverJson,
  changed: Set<string>,
  busy = false,
): string {
  const n = quiver.labels.length;
  const pos = vertexPositions(n);
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${SIZE} ${SIZE}" class="quiver${busy ? " busy" : ""}">`,
    `<defs><marker id="head" viewBox="0 0 10 10" refX="8" refY="5" ` +
      `markerWidth="6" markerHeight="6" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z" fill="context-stroke"/></marker></defs>`,
  );
  for (const a of quiver.arrows) {
    const paint = PALETTE[a.colour % PALETTE.length];
    const { d, mid } = arrowPath(pos[a.from]!, pos[a.to]!);
    const hot = changed.has(arrowKey(a)) ? " changed" : "";
    parts.push(
      `<g class="arrow${hot}" data-arrow="${arrowKey(a)}">` +
        `<path d="${d}" fill="none" stroke="${paint}" stroke-width="2.2" marker-end="url(#head)"/>` +
        `<circle cx="${mid.x}" cy="${mid.y}" r="10" fill="${paint}"/>` +
        `<text x="${mid.x}" y="${mid.y}" class="badge">${a.colour}${a.mult > 1 ? "&#215;" + a.mult : ""}</text>` +
        `</g>`,
    );
  }
  quiver.labels.forEach((label, i) => {
    const p = pos[i]!;
    parts.push(
      `<g class="vertex" data-vertex="${i}">` +
        `<circle cx="${p.x}" cy="${p.y}" r="17"/>` +
        `<text x="${p.x}" y="${p.y}">${esc(label)}</text>` +
        `</g>`,
    );
  });
  parts.push("</svg>");
  return parts.join("\n");
}

function summandText(s: Summand): string {
  return `(${s.root.join(",")}) @ ${s.degree}`;
}

export function renderHistory(history: number[], labels: string[]): string {
  if (history.length === 0) return `<p class="muted">seed position</p>`;
  const items = history
    .map((j, idx) => `<li>${idx + 1}. mutate at ${esc(labels[j] ?? String(j))}</li>`)
    .join("");
  return `<ol class="history">${items}</ol>`;
}

export function renderComplements(
  overlay: ComplementsPayload,
  labels: string[],
): string {
  const header = `complements at ${esc(labels[overlay.vertex] ?? String(overlay.vertex))}`;
  const rows = overlay.cycle
    .map((s, i) => {
      const diag = overlay.diagonals?.[i];
      const tail = diag ? ` &mdash; diagonal ${diag[0]}&ndash;${diag[1]}` : "";
      const mark = i === 0 ? " (current)" : "";
      return `<li>${summandText(s)}${mark}${tail}</li>`;
    })
    .join("");
  return `<div class="overlay"><h3>${header}</h3><ol>${rows}</ol></div>`;
}

export function renderSummands(summands: Summand[], labels: string[]): string {
  const rows = summands
    .map((s, i) => `<li>${esc(labels[i] ?? String(i))}: ${summandText(s)}</li>`)
    .join("");
  return `<ul class="summands">${rows}</ul>`;
}

export function renderError(message: string | null): string {
  return message ? `<div class="toast">${esc(message)}</div>` : "";
}
