/**
 * Request handling: validate, map variable ids to the device space, run the
 * configured sampler, and assemble a sample-set document the primary
 * pipeline ingests (energies are computed here in exact integer units and
 * revalidated on the other side).
 */

import { createHash } from "crypto";

import { energyOf, fractionalCoefficients, problemArrays, spinsToBits } from "./energy.js";
import { runMockSampler } from "./mock.js";
import {
  BridgeRequest,
  BridgeResponse,
  DeviceMetadata,
  RESPONSE_SCHEMA,
  RequestError,
  SAMPLES_SCHEMA,
  SampleSetDoc,
  validateRequest,
} from "./types.js";

export class SamplerError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SamplerError";
  }
}

export interface DeviceMap {
  toDevice: Map<number, number>;
  toLogical: Map<number, number>;
}

export function parseDeviceMap(doc: unknown, qubits: number[]): DeviceMap {
  if (typeof doc !== "object" || doc === null) {
    throw new RequestError("device_map", "expected an object of logical -> device ids");
  }
  const toDevice = new Map<number, number>();
  const toLogical = new Map<number, number>();
  for (const [key, value] of Object.entries(doc as Record<string, unknown>)) {
    const logical = Number(key);
    if (!Number.isInteger(logical) || typeof value !== "number" || !Number.isInteger(value)) {
      throw new RequestError(`device_map.${key}`, "expected integer ids");
    }
    if (toLogical.has(value)) throw new RequestError(`device_map.${key}`, "device id used twice");
    toDevice.set(logical, value);
    toLogical.set(value, logical);
  }
  for (const q of qubits) {
    if (!toDevice.has(q)) throw new RequestError("device_map", `no device id for qubit ${q}`);
  }
  return { toDevice, toLogical };
}

function identityMap(qubits: number[]): DeviceMap {
  const pairs = new Map(qubits.map((q) => [q, q]));
  return { toDevice: pairs, toLogical: new Map(pairs) };
}

function paramsDigest(doc: Record<string, unknown>): string {
  const text = JSON.stringify(doc, Object.keys(doc).sort());
  return createHash("sha256").update(text).digest("hex").slice(0, 12);
}

export function serveRequest(rawRequest: unknown, deviceMapDoc?: unknown): BridgeResponse {
  const request: BridgeRequest = validateRequest(rawRequest);
  const arrays = problemArrays(request.problem);
  const map = deviceMapDoc === undefined ? identityMap(arrays.qubits) : parseDeviceMap(deviceMapDoc, arrays.qubits);

  if (request.sampler !== "mock") {
    throw new SamplerError(`sampler ${request.sampler} is not reachable from this bridge (only "mock" is built in)`);
  }

  // the device sees fractional coefficients on its own variable ids
  const fractional = fractionalCoefficients(request.problem);
  const deviceVars = arrays.qubits.map((q) => map.toDevice.get(q)!).sort((a, b) => a - b);
  const h: Record<string, number> = {};
  for (const [key, value] of Object.entries(fractional.h)) h[String(map.toDevice.get(Number(key))!)] = value;
  const j: [number, number, number][] = fractional.j.map(([a, b, v]) => [
    map.toDevice.get(a)!,
    map.toDevice.get(b)!,
    v,
  ]);
  const raw = runMockSampler({ variables: deviceVars, h, j, reads: request.reads, seed: request.seed });

  // map device order back to logical order and aggregate
  const devicePos = new Map(deviceVars.map((v, i) => [v, i]));
  const logicalPos = arrays.qubits.map((q) => devicePos.get(map.toDevice.get(q)!)!);
  const groups = new Map<string, { spins: Int8Array; energy: number; occurrences: number }>();
  for (const deviceSpins of raw) {
    const spins = new Int8Array(arrays.qubits.length);
    for (let i = 0; i < logicalPos.length; i++) spins[i] = deviceSpins[logicalPos[i]];
    const bits = spinsToBits(spins);
    const found = groups.get(bits);
    if (found) {
      found.occurrences += 1;
    } else {
      groups.set(bits, { spins, energy: energyOf(arrays, spins), occurrences: 1 });
    }
  }
  const entries: [string, number, number][] = [...groups.entries()]
    .map(([bits, g]) => [bits, g.energy, g.occurrences] as [string, number, number])
    .sort((a, b) => a[1] - b[1] || (a[0] < b[0] ? -1 : a[0] > b[0] ? 1 : 0));

  const sampleSet: SampleSetDoc = {
    schema: SAMPLES_SCHEMA,
    backend: "bridge-mock",
    params_digest: paramsDigest({
      sampler: request.sampler,
      annealing_time_us: request.params?.annealing_time_us ?? null,
      offsets: request.params?.offsets ?? null,
    }),
    reads: request.reads,
    seed: request.seed,
    qubits: arrays.qubits,
    entries,
  };
  const device: DeviceMetadata = {
    name: "mock-annealer",
    qubit_count: arrays.qubits.length,
    calibration_id: "mock-cal-0",
  };
  if (request.params?.annealing_time_us !== undefined) device.annealing_time_us = request.params.annealing_time_us;
  if (request.params?.offsets !== undefined) device.offsets = request.params.offsets;
  return { schema: RESPONSE_SCHEMA, sample_set: sampleSet, device };
}
