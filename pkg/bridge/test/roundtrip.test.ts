/**
 * End-to-end round trip against the primary pipeline, driven purely through
 * its external interfaces: the primary CLI generates and composes a problem,
 * the bridge CLI samples it with the mock sampler, and the primary CLI
 * ingests the result (revalidating every energy exactly).
 */

import { spawnSync } from "child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";

import { beforeAll, describe, expect, it } from "vitest";

const PYTHON = process.env.MIRRORBENCH_PYTHON ?? "python3";
const BRIDGE = join(__dirname, "..", "dist", "main.js");

function runPrimary(args: string[], cwd: string) {
  return spawnSync(PYTHON, ["-m", "mirrorbench.cli", ...args], { cwd, encoding: "utf8" });
}

function runBridge(input: string, args: string[] = []) {
  return spawnSync("node", [BRIDGE, ...args], { input, encoding: "utf8" });
}

let work: string;
let compositePath: string;

beforeAll(() => {
  work = mkdtempSync(join(tmpdir(), "bridge-rt-"));
  const config = {
    schema: "mirrorbench/config/1",
    topology: { rows: 1, cols: 2, dead_qubits: [], dead_couplers: [], dead_fraction: 0, dead_seed: 0 },
    sizes: [[1, 1]],
    instances: 2,
    with_fields: true,
    mirror_sign: 1,
    mirror_strengths: [28],
    backend: "exact",
    schedules: [{ sweeps: 1 }],
    reads: 1,
    base_seed: 7,
    workers: 1,
  };
  writeFileSync(join(work, "config.json"), JSON.stringify(config));
  for (const command of ["gen", "compose"]) {
    const result = runPrimary(["--config", join(work, "config.json"), "--out-dir", join(work, "out"), command], work);
    expect(result.status, result.stderr).toBe(0);
  }
  compositePath = join(work, "out", "composites", "1x1", "M+28", "comp_0000.json");
});

describe("mock round trip through the primary pipeline", () => {
  it("bridge samples ingest cleanly and parameters pass through verbatim", () => {
    const problem = JSON.parse(readFileSync(compositePath, "utf8"));
    const params = { annealing_time_us: 2000, offsets: { "4": -0.0866969, "5": -0.0866969 } };
    const request = {
      schema: "mirrorbench/bridge-request/1",
      sampler: "mock",
      problem,
      reads: 25,
      seed: 99,
      params,
    };
    const bridged = runBridge(JSON.stringify(request) + "\n");
    expect(bridged.status, bridged.stderr).toBe(0);
    const response = JSON.parse(bridged.stdout);
    expect(response.schema).toBe("mirrorbench/bridge-response/1");
    expect(response.device.annealing_time_us).toBe(2000);
    expect(response.device.offsets).toEqual(params.offsets);
    expect(response.sample_set.reads).toBe(25);

    const samplesPath = join(work, "samples.json");
    writeFileSync(samplesPath, JSON.stringify(response.sample_set));
    const check = runPrimary(["check", compositePath, samplesPath], work);
    // 0 = some symmetric, 3 = none symmetric; both mean ingest revalidated all energies
    expect([0, 3], check.stderr).toContain(check.status);
    expect(check.stdout).toMatch(/distinct configurations symmetric/);
  });

  it("the primary rejects a corrupted bridge energy", () => {
    const problem = JSON.parse(readFileSync(compositePath, "utf8"));
    const request = {
      schema: "mirrorbench/bridge-request/1",
      sampler: "mock",
      problem,
      reads: 5,
      seed: 3,
    };
    const bridged = runBridge(JSON.stringify(request) + "\n");
    expect(bridged.status).toBe(0);
    const sampleSet = JSON.parse(bridged.stdout).sample_set;
    sampleSet.entries[0][1] += 1;
    const corruptPath = join(work, "corrupt.json");
    writeFileSync(corruptPath, JSON.stringify(sampleSet));
    const check = runPrimary(["check", compositePath, corruptPath], work);
    expect(check.status).toBe(2);
    expect(check.stderr).toMatch(/recomputes/);
  });
});

describe("bridge CLI exit codes", () => {
  it("bad JSON and schema errors exit 2 with a structured error document", () => {
    const garbage = runBridge("not json\n");
    expect(garbage.status).toBe(2);
    expect(JSON.parse(garbage.stdout).error).toBe("bad-request");

    const problem = JSON.parse(readFileSync(compositePath, "utf8"));
    const badField = runBridge(
      JSON.stringify({
        schema: "mirrorbench/bridge-request/1",
        sampler: "mock",
        problem,
        reads: 5,
        seed: 1,
        params: { annealing_time_us: 5 },
      }) + "\n",
    );
    expect(badField.status).toBe(2);
    const doc = JSON.parse(badField.stdout);
    expect(doc.error).toBe("bad-request");
    expect(doc.field).toBe("params.annealing_time_us");
  });

  it("an unreachable sampler exits 4", () => {
    const problem = JSON.parse(readFileSync(compositePath, "utf8"));
    const result = runBridge(
      JSON.stringify({
        schema: "mirrorbench/bridge-request/1",
        sampler: "real-hardware",
        problem,
        reads: 5,
        seed: 1,
      }) + "\n",
    );
    expect(result.status).toBe(4);
    expect(JSON.parse(result.stdout).error).toBe("sampler-failure");
  });
});
