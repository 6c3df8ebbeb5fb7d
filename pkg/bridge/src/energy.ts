/**
 * Exact integer energy arithmetic on composite documents.
 *
 * All couplings, fields, and mirror strengths are integers in 1/28 units, so
 * plain number arithmetic is exact (magnitudes stay far below 2^53).
 */

import { CompositeDoc } from "./types.js";

export interface ProblemArrays {
  qubits: number[]; // sorted
  index: Map<number, number>;
  edges: [number, number, number][]; // index-a, index-b, value (couplers + mirror pairs)
  h: number[];
}

export function problemArrays(doc: CompositeDoc): ProblemArrays {
  const qubits = doc.fields.map(([q]) => q).sort((a, b) => a - b);
  const index = new Map(qubits.map((q, i) => [q, i]));
  const h = new Array<number>(qubits.length).fill(0);
  for (const [q, v] of doc.fields) h[index.get(q)!] = v;
  const edges: [number, number, number][] = [];
  for (const [a, b, v] of doc.couplings) edges.push([index.get(a)!, index.get(b)!, v]);
  for (const [a, b, v] of doc.mirror_pairs) edges.push([index.get(a)!, index.get(b)!, v]);
  return { qubits, index, edges, h };
}

/** Energy of one +/-1 configuration: -sum J*S*S - sum h*S. */
export function energyOf(arrays: ProblemArrays, spins: Int8Array): number {
  let total = 0;
  for (const [ia, ib, v] of arrays.edges) total -= v * spins[ia] * spins[ib];
  for (let i = 0; i < arrays.h.length; i++) total -= arrays.h[i] * spins[i];
  return total;
}

/** Canonical bitstring: '0' for +1, '1' for -1, in sorted qubit order. */
export function spinsToBits(spins: Int8Array): string {
  let out = "";
  for (const s of spins) out += s > 0 ? "0" : "1";
  return out;
}

/**
 * Coefficients in the fractional units external devices expect: integer
 * values divided by the scale denominator.  Binary doubles round-trip the
 * quotient exactly for every representable integer numerator.
 */
export function fractionalCoefficients(doc: CompositeDoc): {
  h: Record<string, number>;
  j: [number, number, number][];
} {
  const h: Record<string, number> = {};
  for (const [q, v] of doc.fields) h[String(q)] = v / doc.scale;
  const j: [number, number, number][] = [];
  for (const [a, b, v] of doc.couplings) j.push([a, b, v / doc.scale]);
  for (const [a, b, v] of doc.mirror_pairs) j.push([a, b, v / doc.scale]);
  return { h, j };
}
