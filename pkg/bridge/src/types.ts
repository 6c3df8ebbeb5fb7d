/**
 * Document shapes shared with the primary pipeline, plus request validation.
 *
 * Validation errors carry the offending field path so callers can emit a
 * schema error naming the field.
 */

export const REQUEST_SCHEMA = "mirrorbench/bridge-request/1";
export const RESPONSE_SCHEMA = "mirrorbench/bridge-response/1";
export const ERROR_SCHEMA = "mirrorbench/bridge-error/1";
export const COMPOSITE_SCHEMA = "mirrorbench/composite/1";
export const SAMPLES_SCHEMA = "mirrorbench/samples/1";
export const SCALE = 28;

export interface CompositeDoc {
  schema: string;
  region: unknown;
  couplings: [number, number, number][];
  fields: [number, number][];
  mirror_pairs: [number, number, number][];
  mirror_sign: number;
  seed: number;
  scale: number;
}

export interface BridgeParams {
  annealing_time_us?: number;
  offsets?: Record<string, number>;
}

export interface BridgeRequest {
  schema: string;
  sampler: string;
  problem: CompositeDoc;
  reads: number;
  seed: number;
  params?: BridgeParams;
}

export interface SampleSetDoc {
  schema: string;
  backend: string;
  params_digest: string;
  reads: number;
  seed: number;
  qubits: number[];
  entries: [string, number, number][];
}

export interface DeviceMetadata {
  name: string;
  qubit_count: number;
  calibration_id: string;
  annealing_time_us?: number;
  offsets?: Record<string, number>;
}

export interface BridgeResponse {
  schema: string;
  sample_set: SampleSetDoc;
  device: DeviceMetadata;
}

export class RequestError extends Error {
  constructor(public readonly field: string, message: string) {
    super(`${field}: ${message}`);
    this.name = "RequestError";
  }
}

function isInt(x: unknown): x is number {
  return typeof x === "number" && Number.isInteger(x);
}

function asTripleList(value: unknown, field: string): [number, number, number][] {
  if (!Array.isArray(value)) throw new RequestError(field, "expected an array");
  return value.map((item, i) => {
    if (!Array.isArray(item) || item.length !== 3 || !item.every(isInt)) {
      throw new RequestError(`${field}[${i}]`, "expected [int, int, int]");
    }
    return [item[0], item[1], item[2]];
  });
}

export function validateRequest(doc: unknown): BridgeRequest {
  if (typeof doc !== "object" || doc === null) throw new RequestError("$", "request is not an object");
  const req = doc as Record<string, unknown>;
  if (req.schema !== REQUEST_SCHEMA) {
    throw new RequestError("schema", `expected ${REQUEST_SCHEMA}`);
  }
  if (typeof req.sampler !== "string" || !req.sampler) {
    throw new RequestError("sampler", "expected a sampler name");
  }
  if (!isInt(req.reads) || (req.reads as number) < 1) throw new RequestError("reads", "expected an integer >= 1");
  if (!isInt(req.seed)) throw new RequestError("seed", "expected an integer");

  const problem = req.problem as Record<string, unknown> | undefined;
  if (typeof problem !== "object" || problem === null) throw new RequestError("problem", "missing composite document");
  if (problem.schema !== COMPOSITE_SCHEMA) {
    throw new RequestError("problem.schema", `expected ${COMPOSITE_SCHEMA}`);
  }
  if (problem.scale !== SCALE) throw new RequestError("problem.scale", `scale denominator must be ${SCALE}`);
  if (!isInt(problem.mirror_sign) || ![1, -1].includes(problem.mirror_sign as number)) {
    throw new RequestError("problem.mirror_sign", "expected +1 or -1");
  }
  const couplings = asTripleList(problem.couplings, "problem.couplings");
  const pairs = asTripleList(problem.mirror_pairs, "problem.mirror_pairs");
  if (!Array.isArray(problem.fields)) throw new RequestError("problem.fields", "expected an array");
  const fields = (problem.fields as unknown[]).map((item, i) => {
    if (!Array.isArray(item) || item.length !== 2 || !item.every(isInt)) {
      throw new RequestError(`problem.fields[${i}]`, "expected [qubit, value]");
    }
    return [item[0], item[1]] as [number, number];
  });
  if (fields.length === 0) throw new RequestError("problem.fields", "no functional qubits");
  const qubits = new Set(fields.map(([q]) => q));
  for (const [i, [a, b]] of couplings.entries()) {
    if (!qubits.has(a) || !qubits.has(b)) {
      throw new RequestError(`problem.couplings[${i}]`, "endpoint is not a listed qubit");
    }
  }
  for (const [i, [a, b]] of pairs.entries()) {
    if (!qubits.has(a) || !qubits.has(b)) {
      throw new RequestError(`problem.mirror_pairs[${i}]`, "endpoint is not a listed qubit");
    }
  }

  let params: BridgeParams | undefined;
  if (req.params !== undefined) {
    if (typeof req.params !== "object" || req.params === null) {
      throw new RequestError("params", "expected an object");
    }
    const raw = req.params as Record<string, unknown>;
    params = {};
    if (raw.annealing_time_us !== undefined) {
      const t = raw.annealing_time_us;
      if (typeof t !== "number" || t < 20 || t > 2000) {
        throw new RequestError("params.annealing_time_us", "expected a number in [20, 2000]");
      }
      params.annealing_time_us = t;
    }
    if (raw.offsets !== undefined) {
      if (typeof raw.offsets !== "object" || raw.offsets === null) {
        throw new RequestError("params.offsets", "expected an object of qubit -> offset");
      }
      const offsets: Record<string, number> = {};
      for (const [key, value] of Object.entries(raw.offsets as Record<string, unknown>)) {
        const q = Number(key);
        if (!Number.isInteger(q) || !qubits.has(q)) {
          throw new RequestError(`params.offsets.${key}`, "not a qubit of the problem");
        }
        if (typeof value !== "number" || value < -1 || value > 1) {
          throw new RequestError(`params.offsets.${key}`, "offset outside [-1, 1]");
        }
        offsets[key] = value;
      }
      params.offsets = offsets;
    }
  }

  return {
    schema: REQUEST_SCHEMA,
    sampler: req.sampler as string,
    problem: {
      schema: COMPOSITE_SCHEMA,
      region: problem.region,
      couplings,
      fields,
      mirror_pairs: pairs,
      mirror_sign: problem.mirror_sign as number,
      seed: isInt(problem.seed) ? (problem.seed as number) : 0,
      scale: SCALE,
    },
    reads: req.reads as number,
    seed: req.seed as number,
    params,
  };
}
