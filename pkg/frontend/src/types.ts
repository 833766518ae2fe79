// Wire types of the explorer service. The client never computes mutations
// itself; everything here is exactly what the server sends.

export interface QuiverArrow {
  from: number;
  to: number;
  colour: number;
  mult: number;
}

export interface QuiverJson {
  m: number;
  labels: string[];
  arrows: QuiverArrow[];
}

export interface Summand {
  root: number[];
  degree: number;
}

export interface AlgebraJson {
  type: string;
  rank: number;
  orientation: [number, number][];
}

export interface StateJson {
  algebra: AlgebraJson;
  m: number;
  quiver: QuiverJson;
  summands: Summand[];
}

export interface AngulationJson {
  n: number;
  m: number;
  diagonals: [number, number][];
}

export interface SessionPayload {
  id: string;
  kind: "algebra" | "quiver";
  m: number;
  history: number[];
  quiver: QuiverJson;
  state: StateJson | null;
  angulation: AngulationJson | null;
  svg: string | null;
}

export interface ComplementsPayload {
  vertex: number;
  cycle: Summand[];
  diagonals: [number, number][] | null;
}

export interface SeedForm {
  type: string;
  rank: number;
  m: number;
  orientation?: [number, number][];
}
