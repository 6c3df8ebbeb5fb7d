import { describe, expect, it } from "vitest";

import { parseDeviceMap, serveRequest, SamplerError } from "../src/bridge.js";
import { energyOf, problemArrays, spinsToBits } from "../src/energy.js";
import { CompositeDoc, RequestError, validateRequest } from "../src/types.js";

function problemDoc(overrides: Partial<CompositeDoc> = {}): CompositeDoc {
  return {
    schema: "mirrorbench/composite/1",
    region: { rows: 1, cols: 1 },
    couplings: [[0, 4, 13]],
    fields: [
      [0, 0],
      [4, 0],
      [8, 0],
      [12, 0],
    ],
    mirror_pairs: [
      [0, 8, 28],
      [4, 12, 28],
    ],
    mirror_sign: 1,
    seed: 1,
    scale: 28,
    ...overrides,
  };
}

function request(overrides: Record<string, unknown> = {}) {
  return {
    schema: "mirrorbench/bridge-request/1",
    sampler: "mock",
    problem: problemDoc(),
    reads: 20,
    seed: 7,
    ...overrides,
  };
}

describe("energy arithmetic", () => {
  it("computes the hand value for the all-up configuration", () => {
    const arrays = problemArrays(problemDoc());
    const spins = new Int8Array([1, 1, 1, 1]);
    expect(energyOf(arrays, spins)).toBe(-13 - 28 - 28);
    expect(spinsToBits(spins)).toBe("0000");
  });

  it("flips sign with a single spin", () => {
    const arrays = problemArrays(problemDoc());
    const spins = new Int8Array([1, 1, -1, 1]); // qubit 8 down breaks its pair
    expect(energyOf(arrays, spins)).toBe(-13 + 28 - 28);
  });
});

describe("request validation", () => {
  it("accepts a well-formed request", () => {
    const req = validateRequest(request({ params: { annealing_time_us: 2000, offsets: { "4": -0.0866969 } } }));
    expect(req.params?.annealing_time_us).toBe(2000);
    expect(req.params?.offsets).toEqual({ "4": -0.0866969 });
  });

  it("names the failing field", () => {
    expect(() => validateRequest(request({ reads: 0 }))).toThrowError(/reads/);
    expect(() => validateRequest(request({ schema: "nope" }))).toThrowError(/schema/);
    expect(() => validateRequest(request({ params: { annealing_time_us: 10 } }))).toThrowError(
      /params\.annealing_time_us/,
    );
    expect(() => validateRequest(request({ params: { annealing_time_us: 3000 } }))).toThrowError(
      /params\.annealing_time_us/,
    );
    expect(() => validateRequest(request({ params: { offsets: { "5": 0.1 } } }))).toThrowError(
      /params\.offsets\.5/,
    );
    expect(() => validateRequest(request({ params: { offsets: { "4": 1.5 } } }))).toThrowError(
      /params\.offsets\.4/,
    );
    const badScale = request();
    (badScale.problem as CompositeDoc).scale = 1;
    expect(() => validateRequest(badScale)).toThrowError(/problem\.scale/);
    const badEdge = request();
    (badEdge.problem as CompositeDoc).couplings = [[0, 99, 13]];
    expect(() => validateRequest(badEdge)).toThrowError(/problem\.couplings\[0\]/);
  });
});

describe("serveRequest", () => {
  it("returns a canonical, internally consistent sample set", () => {
    const response = serveRequest(request({ reads: 50 }));
    const doc = response.sample_set;
    expect(doc.schema).toBe("mirrorbench/samples/1");
    expect(doc.qubits).toEqual([0, 4, 8, 12]);
    expect(doc.entries.reduce((acc, [, , occ]) => acc + occ, 0)).toBe(50);
    const keys = doc.entries.map(([bits, e]) => [e, bits] as const);
    const sorted = [...keys].sort((a, b) => a[0] - b[0] || (a[1] < b[1] ? -1 : 1));
    expect(keys).toEqual(sorted);
    const arrays = problemArrays(problemDoc());
    for (const [bits, energy] of doc.entries) {
      const spins = new Int8Array([...bits].map((c) => (c === "0" ? 1 : -1)));
      expect(energyOf(arrays, spins)).toBe(energy);
    }
  });

  it("is deterministic in the seed", () => {
    const a = serveRequest(request({ seed: 11 }));
    const b = serveRequest(request({ seed: 11 }));
    const c = serveRequest(request({ seed: 12 }));
    expect(JSON.stringify(a)).toBe(JSON.stringify(b));
    expect(JSON.stringify(a)).not.toBe(JSON.stringify(c));
  });

  it("echoes annealing parameters verbatim in the device metadata", () => {
    const params = { annealing_time_us: 2000, offsets: { "0": -0.0866969, "4": 0.25 } };
    const response = serveRequest(request({ params }));
    expect(response.device.annealing_time_us).toBe(2000);
    expect(response.device.offsets).toEqual(params.offsets);
    expect(response.device.name).toBe("mock-annealer");
    expect(response.device.qubit_count).toBe(4);
  });

  it("rejects unreachable samplers", () => {
    expect(() => serveRequest(request({ sampler: "hw-annealer" }))).toThrowError(SamplerError);
  });
});

describe("device variable mapping", () => {
  const strongFields = problemDoc({
    couplings: [],
    mirror_pairs: [],
    fields: [
      [0, -28],
      [4, 28],
      [8, -28],
      [12, 28],
    ],
  });

  it("map and unmap compose to the identity", () => {
    const map = parseDeviceMap({ "0": 112, "4": 108, "8": 104, "12": 100 }, [0, 4, 8, 12]);
    for (const [logical, device] of map.toDevice) {
      expect(map.toLogical.get(device)).toBe(logical);
    }
  });

  it("spins come back on the right logical qubits under a shuffled map", () => {
    // the greedy mock aligns every spin against its field: expect bits 1010
    const identity = serveRequest(request({ problem: strongFields, reads: 10 }));
    const shuffled = serveRequest(
      request({ problem: strongFields, reads: 10 }),
      { "0": 112, "4": 108, "8": 104, "12": 100 },
    );
    for (const response of [identity, shuffled]) {
      expect(response.sample_set.entries).toHaveLength(1);
      expect(response.sample_set.entries[0][0]).toBe("1010");
      expect(response.sample_set.entries[0][2]).toBe(10);
    }
  });

  it("rejects incomplete or duplicated maps", () => {
    expect(() => parseDeviceMap({ "0": 1 }, [0, 4])).toThrowError(/no device id for qubit 4/);
    expect(() => parseDeviceMap({ "0": 1, "4": 1 }, [0, 4])).toThrowError(/used twice/);
    expect(() => serveRequest(request(), { "0": 100 })).toThrowError(RequestError);
  });
});
