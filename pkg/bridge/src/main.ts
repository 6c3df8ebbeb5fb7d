/**
 * CLI entry: one JSON request on stdin, one JSON response on stdout,
 * human-readable log on stderr.  Exit codes: 0 ok, 2 bad request,
 * 4 sampler failure.
 */

import { readFileSync } from "fs";

import { SamplerError, serveRequest } from "./bridge.js";
import { ERROR_SCHEMA, RequestError } from "./types.js";

const EXIT_OK = 0;
const EXIT_BAD_REQUEST = 2;
const EXIT_SAMPLER_FAILURE = 4;

function readStdin(): Promise<string> {
  return new Promise((resolve, reject) => {
    let data = "";
    process.stdin.setEncoding("utf8");
    process.stdin.on("data", (chunk) => (data += chunk));
    process.stdin.on("end", () => resolve(data));
    process.stdin.on("error", reject);
  });
}

function emitError(kind: string, message: string, field?: string): void {
  const doc: Record<string, unknown> = { schema: ERROR_SCHEMA, error: kind, message };
  if (field !== undefined) doc.field = field;
  process.stdout.write(JSON.stringify(doc) + "\n");
  process.stderr.write(`bridge error (${kind}): ${message}\n`);
}

async function main(): Promise<number> {
  let deviceMapDoc: unknown;
  const args = process.argv.slice(2);
  for (let i = 0; i < args.length; i++) {
    if (args[i] === "--device-map") {
      const path = args[++i];
      if (!path) {
        emitError("bad-request", "--device-map needs a file path");
        return EXIT_BAD_REQUEST;
      }
      try {
        deviceMapDoc = JSON.parse(readFileSync(path, "utf8"));
      } catch (err) {
        emitError("bad-request", `cannot read device map ${path}: ${(err as Error).message}`);
        return EXIT_BAD_REQUEST;
      }
    } else {
      emitError("bad-request", `unknown argument ${args[i]}`);
      return EXIT_BAD_REQUEST;
    }
  }

  const text = await readStdin();
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    emitError("bad-request", `stdin is not valid JSON: ${(err as Error).message}`);
    return EXIT_BAD_REQUEST;
  }

  try {
    const response = serveRequest(raw, deviceMapDoc);
    process.stdout.write(JSON.stringify(response) + "\n");
    process.stderr.write(
      `bridge ok: ${response.sample_set.reads} reads over ${response.device.qubit_count} qubits\n`,
    );
    return EXIT_OK;
  } catch (err) {
    if (err instanceof RequestError) {
      emitError("bad-request", err.message, err.field);
      return EXIT_BAD_REQUEST;
    }
    if (err instanceof SamplerError) {
      emitError("sampler-failure", err.message);
      return EXIT_SAMPLER_FAILURE;
    }
    emitError("sampler-failure", `unexpected failure: ${(err as Error).message}`);
    return EXIT_SAMPLER_FAILURE;
  }
}

main().then((code) => process.exit(code));
