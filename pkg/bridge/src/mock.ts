/**
 * Built-in mock sampler: a credential-free stand-in for real annealer SDKs.
 *
 * It consumes the same fractional-coefficient payload a hardware client
 * would, runs seeded random restarts with a few greedy descent passes, and
 * returns raw spin configurations in device variable order.  Deterministic
 * in the request seed.
 */

export interface MockJob {
  variables: number[]; // device variable ids, sorted
  h: Record<string, number>; // fractional fields keyed by device id
  j: [number, number, number][]; // fractional couplings on device ids
  reads: number;
  seed: number;
}

/** splitmix64 over BigInt, exposed as a double in [0, 1). */
export class SplitMix {
  private state: bigint;

  constructor(seed: number) {
    this.state = BigInt.asUintN(64, BigInt(seed));
  }

  nextUint(): bigint {
    this.state = BigInt.asUintN(64, this.state + 0x9e3779b97f4a7c15n);
    let z = this.state;
    z = BigInt.asUintN(64, (z ^ (z >> 30n)) * 0xbf58476d1ce4e5b9n);
    z = BigInt.asUintN(64, (z ^ (z >> 27n)) * 0x94d049bb133111ebn);
    return BigInt.asUintN(64, z ^ (z >> 31n));
  }

  next(): number {
    return Number(this.nextUint() >> 11n) / 2 ** 53;
  }
}

const GREEDY_PASSES = 3;

export function runMockSampler(job: MockJob): Int8Array[] {
  const index = new Map(job.variables.map((v, i) => [v, i]));
  const n = job.variables.length;
  const h = new Array<number>(n).fill(0);
  for (const [key, value] of Object.entries(job.h)) h[index.get(Number(key))!] = value;
  const adjacency: [number, number][][] = Array.from({ length: n }, () => []);
  const edges: [number, number, number][] = [];
  for (const [a, b, v] of job.j) {
    const ia = index.get(a)!;
    const ib = index.get(b)!;
    edges.push([ia, ib, v]);
    adjacency[ia].push([ib, v]);
    adjacency[ib].push([ia, v]);
  }

  const rng = new SplitMix(job.seed);
  const out: Int8Array[] = [];
  for (let r = 0; r < job.reads; r++) {
    const spins = new Int8Array(n);
    for (let i = 0; i < n; i++) spins[i] = rng.next() < 0.5 ? 1 : -1;
    for (let pass = 0; pass < GREEDY_PASSES; pass++) {
      for (let i = 0; i < n; i++) {
        let field = h[i];
        for (const [j, v] of adjacency[i]) field += v * spins[j];
        if (spins[i] * field < 0) spins[i] = -spins[i]; // flipping lowers the energy
      }
    }
    out.push(spins);
  }
  return out;
}
