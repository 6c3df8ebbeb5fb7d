"""Sampler backends returning validated sample sets.

Three backends share one contract: ``exact`` enumerates every configuration
(Gray-code walk, guard-limited), ``sa`` is restart Metropolis annealing over
a geometric beta ladder, and ``sqa`` is a Trotter-slice path-integral
emulation of transverse-field annealing with optional per-qubit schedule
offsets.  Betas are interpreted per integer energy unit (1/28 of the usual
normalized coupling scale).  Every returned energy is revalidated against
the exact composite energy on ingest, so a corrupted backend cannot produce
a silently wrong sample set.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import _kernels, seeds
from .embedding import CompositeProblem, energies_of

EXACT_GUARD_QUBITS = 28

SAMPLES_SCHEMA = "mirrorbench/samples/1"


@dataclass(frozen=True)
class ScheduleConfig:
    """Anneal schedule; ``sweeps`` is the classical analog of annealing time.

    ``offsets`` maps qubit id to a normalized ramp shift in [-1, +1] and is
    honored only by the ``sqa`` backend (negative delays the ramp).  The
    transverse-field fields apply to ``sqa`` only.
    """

    sweeps: int
    beta_start: float = 0.1
    beta_end: float = 5.0
    offsets: Mapping[int, float] | None = None
    trotter_slices: int = 16
    transverse_field_start: float = 28.0
    transverse_field_end: float = 0.0

    def __post_init__(self) -> None:
        if self.sweeps < 1:
            raise ValueError(f"sweeps must be >= 1, got {self.sweeps}")
        if not (0 < self.beta_start <= self.beta_end):
            raise ValueError(f"need beta_end >= beta_start > 0, got {self.beta_start}..{self.beta_end}")
        if self.trotter_slices < 2:
            raise ValueError(f"trotter_slices must be >= 2, got {self.trotter_slices}")
        if not (self.transverse_field_start >= self.transverse_field_end >= 0):
            raise ValueError("transverse field must ramp downward and stay nonnegative")
        if self.offsets is not None:
            for q, o in self.offsets.items():
                if not -1.0 <= o <= 1.0:
                    raise ValueError(f"offset {o} for qubit {q} outside [-1, 1]")

    def betas(self) -> np.ndarray:
        """Geometric ladder from beta_start to beta_end, one rung per sweep."""
        if self.sweeps == 1:
            return np.array([self.beta_end])
        ratio = self.beta_end / self.beta_start
        return self.beta_start * ratio ** (np.arange(self.sweeps) / (self.sweeps - 1))


@dataclass(frozen=True)
class SampleEntry:
    spins: np.ndarray  # +/-1 int8, aligned to SampleSet.qubits
    energy: int
    occurrences: int

    def bitstring(self) -> str:
        return spins_to_bits(self.spins)


@dataclass(frozen=True)
class SampleSet:
    """Aggregated sampler output: distinct configurations with exact integer
    energies, sorted by (energy, canonical spin order)."""

    backend: str
    params_digest: str
    reads: int
    seed: int
    qubits: tuple[int, ...]
    entries: tuple[SampleEntry, ...]

    def min_energy(self) -> int:
        if not self.entries:
            raise ValueError("sample set is empty")
        return self.entries[0].energy

    def config(self, entry: SampleEntry) -> dict[int, int]:
        return {q: int(s) for q, s in zip(self.qubits, entry.spins)}


def spins_to_bits(spins: np.ndarray) -> str:
    """Canonical bitstring: '0' for spin +1, '1' for spin -1, qubit-id order."""
    return "".join("0" if s > 0 else "1" for s in spins)


def bits_to_spins(bits: str) -> np.ndarray:
    spins = np.ones(len(bits), dtype=np.int8)
    for i, ch in enumerate(bits):
        if ch == "1":
            spins[i] = -1
        elif ch != "0":
            raise ValueError(f"bitstring contains {ch!r}; expected 0 or 1")
    return spins


def params_digest(backend: str, params: dict) -> str:
    text = json.dumps({"backend": backend, **params}, sort_keys=True)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _csr(problem: CompositeProblem) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    n = problem.num_qubits
    idx = problem.qubit_index
    items = problem.coupling_items()
    counts = np.zeros(n + 1, dtype=np.int64)
    for a, b, _ in items:
        counts[idx[a] + 1] += 1
        counts[idx[b] + 1] += 1
    indptr = np.cumsum(counts)
    nbr_idx = np.empty(indptr[-1], dtype=np.int64)
    nbr_j = np.empty(indptr[-1], dtype=np.int64)
    cursor = indptr[:-1].copy()
    for a, b, v in items:
        ia, ib = idx[a], idx[b]
        nbr_idx[cursor[ia]] = ib
        nbr_j[cursor[ia]] = v
        cursor[ia] += 1
        nbr_idx[cursor[ib]] = ia
        nbr_j[cursor[ib]] = v
        cursor[ib] += 1
    hvec = np.zeros(n, dtype=np.int64)
    for q, h in problem.fields.items():
        hvec[idx[q]] = h
    return indptr, nbr_idx, nbr_j, hvec


def _aggregate(
    problem: CompositeProblem,
    configs: np.ndarray,
    claimed: np.ndarray,
    *,
    backend: str,
    digest: str,
    reads: int,
    seed: int,
) -> SampleSet:
    """Group identical configurations, revalidate energies, sort canonically."""
    exact = energies_of(problem, configs)
    if not np.array_equal(exact, claimed):
        raise ValueError(f"backend {backend} reported energies inconsistent with the exact recomputation")
    groups: dict[bytes, list] = {}
    for row, e in zip(configs, exact):
        key = row.tobytes()
        if key in groups:
            groups[key][2] += 1
        else:
            groups[key] = [row, int(e), 1]
    entries = [SampleEntry(row.copy(), e, occ) for row, e, occ in groups.values()]
    entries.sort(key=lambda entry: (entry.energy, entry.bitstring()))
    return SampleSet(backend, digest, reads, seed, tuple(problem.qubits), tuple(entries))


def solve_exact(problem: CompositeProblem) -> SampleSet:
    """Every global-minimum configuration, each with occurrence count 1."""
    n = problem.num_qubits
    if n > EXACT_GUARD_QUBITS:
        raise ValueError(
            f"{n} qubits exceeds the {EXACT_GUARD_QUBITS}-qubit enumeration guard; use a sampling backend"
        )
    indptr, nbr_idx, nbr_j, hvec = _csr(problem)
    emin, masks = _kernels.gray_minima(indptr, nbr_idx, nbr_j, hvec)
    configs = np.ones((len(masks), n), dtype=np.int8)
    for r, mask in enumerate(masks):
        m = int(mask)
        for p in range(n):
            if (m >> p) & 1:
                configs[r, p] = -1
    claimed = np.full(len(masks), int(emin), dtype=np.int64)
    return _aggregate(
        problem,
        configs,
        claimed,
        backend="exact",
        digest=params_digest("exact", {}),
        reads=len(masks),
        seed=0,
    )


def exact_instance_minimum(instance) -> int:
    """Exact ground energy of a bare instance (no mirror copy), same guard."""
    from .instances import IsingInstance  # narrow import; avoids cycle

    assert isinstance(instance, IsingInstance)
    qubits = instance.region.qubits
    if len(qubits) > EXACT_GUARD_QUBITS:
        raise ValueError(f"{len(qubits)} qubits exceeds the enumeration guard")
    idx = {q: i for i, q in enumerate(qubits)}
    n = len(qubits)
    counts = np.zeros(n + 1, dtype=np.int64)
    for a, b in instance.couplings:
        counts[idx[a] + 1] += 1
        counts[idx[b] + 1] += 1
    indptr = np.cumsum(counts)
    nbr_idx = np.empty(indptr[-1], dtype=np.int64)
    nbr_j = np.empty(indptr[-1], dtype=np.int64)
    cursor = indptr[:-1].copy()
    for (a, b), v in instance.couplings.items():
        ia, ib = idx[a], idx[b]
        nbr_idx[cursor[ia]], nbr_j[cursor[ia]] = ib, v
        cursor[ia] += 1
        nbr_idx[cursor[ib]], nbr_j[cursor[ib]] = ia, v
        cursor[ib] += 1
    hvec = np.zeros(n, dtype=np.int64)
    for q, h in instance.fields.items():
        hvec[idx[q]] = h
    emin, _ = _kernels.gray_minima(indptr, nbr_idx, nbr_j, hvec)
    return int(emin)


def _read_seeds(seed: int, reads: int) -> np.ndarray:
    return np.array([seeds.derive_seed(seed, r) & 0xFFFFFFFF for r in range(reads)], dtype=np.uint32)


def solve_sa(problem: CompositeProblem, schedule: ScheduleConfig, reads: int, seed: int) -> SampleSet:
    """Simulated annealing: ``reads`` independent restarts, each running
    ``schedule.sweeps`` full Metropolis sweeps over the beta ladder."""
    if reads < 1:
        raise ValueError(f"reads must be >= 1, got {reads}")
    if schedule.offsets is not None:
        raise ValueError("per-qubit annealing offsets are undefined for the sa backend; use sqa")
    indptr, nbr_idx, nbr_j, hvec = _csr(problem)
    configs, claimed = _kernels.sa_batch(indptr, nbr_idx, nbr_j, hvec, schedule.betas(), _read_seeds(seed, reads))
    digest = params_digest(
        "sa",
        {"sweeps": schedule.sweeps, "beta_start": schedule.beta_start, "beta_end": schedule.beta_end},
    )
    return _aggregate(problem, configs, claimed, backend="sa", digest=digest, reads=reads, seed=seed)


def solve_sqa(problem: CompositeProblem, schedule: ScheduleConfig, reads: int, seed: int) -> SampleSet:
    """Simulated quantum annealing: the transverse field ramps down at fixed
    beta = beta_end, with per-qubit ramp offsets; slice 0 is measured."""
    if reads < 1:
        raise ValueError(f"reads must be >= 1, got {reads}")
    offsets = dict(schedule.offsets or {})
    for q in offsets:
        if q not in problem.qubit_index:
            raise ValueError(f"offset for unknown qubit {q}")
    vec = np.zeros(problem.num_qubits, dtype=np.float64)
    for q, o in offsets.items():
        vec[problem.qubit_index[q]] = o
    indptr, nbr_idx, nbr_j, hvec = _csr(problem)
    configs, claimed = _kernels.sqa_batch(
        indptr,
        nbr_idx,
        nbr_j,
        hvec,
        _read_seeds(seed, reads),
        schedule.sweeps,
        schedule.beta_end,
        schedule.transverse_field_start,
        schedule.transverse_field_end,
        vec,
        schedule.trotter_slices,
    )
    digest = params_digest(
        "sqa",
        {
            "sweeps": schedule.sweeps,
            "beta": schedule.beta_end,
            "trotter_slices": schedule.trotter_slices,
            "transverse_field_start": schedule.transverse_field_start,
            "transverse_field_end": schedule.transverse_field_end,
            "offsets": sorted(offsets.items()),
        },
    )
    return _aggregate(problem, configs, claimed, backend="sqa", digest=digest, reads=reads, seed=seed)


BACKENDS = {"exact", "sa", "sqa"}


def solve(problem: CompositeProblem, backend: str, schedule: ScheduleConfig, reads: int, seed: int) -> SampleSet:
    if backend == "exact":
        return solve_exact(problem)
    if backend == "sa":
        return solve_sa(problem, schedule, reads, seed)
    if backend == "sqa":
        return solve_sqa(problem, schedule, reads, seed)
    raise ValueError(f"unknown backend {backend!r}; expected one of {sorted(BACKENDS)}")


def lowest_energy_entries(sample_set: SampleSet) -> list[SampleEntry]:
    """All distinct entries attaining the set's minimum energy."""
    if not sample_set.entries:
        raise ValueError("sample set is empty")
    lowest = sample_set.entries[0].energy
    return [e for e in sample_set.entries if e.energy == lowest]


# -- document form ---------------------------------------------------------

def sample_set_to_doc(sample_set: SampleSet) -> dict:
    return {
        "schema": SAMPLES_SCHEMA,
        "backend": sample_set.backend,
        "params_digest": sample_set.params_digest,
        "reads": sample_set.reads,
        "seed": sample_set.seed,
        "qubits": list(sample_set.qubits),
        "entries": [[e.bitstring(), e.energy, e.occurrences] for e in sample_set.entries],
    }


def sample_set_from_doc(doc: dict, problem: CompositeProblem) -> SampleSet:
    """Ingest a sample-set document, revalidating every energy exactly."""
    if doc.get("schema") != SAMPLES_SCHEMA:
        raise ValueError(f"unsupported sample-set schema {doc.get('schema')!r}")
    qubits = tuple(int(q) for q in doc["qubits"])
    if qubits != tuple(problem.qubits):
        raise ValueError("sample set qubit order does not match the problem")
    entries = []
    total = 0
    for bits, e, occ in doc["entries"]:
        spins = bits_to_spins(bits)
        if spins.shape[0] != len(qubits):
            raise ValueError(f"entry bitstring length {spins.shape[0]} != {len(qubits)} qubits")
        exact = int(energies_of(problem, spins)[0])
        if exact != int(e):
            raise ValueError(f"entry {bits} claims energy {e} but recomputes to {exact}")
        if occ < 1:
            raise ValueError(f"entry {bits} has nonpositive occurrences {occ}")
        entries.append(SampleEntry(spins, exact, int(occ)))
        total += int(occ)
    reads = int(doc["reads"])
    if total != reads:
        raise ValueError(f"occurrences sum to {total} but reads = {reads}")
    ordered = sorted(entries, key=lambda entry: (entry.energy, entry.bitstring()))
    if [e.bitstring() for e in ordered] != [e.bitstring() for e in entries]:
        raise ValueError("sample-set entries are not in canonical order")
    return SampleSet(
        str(doc["backend"]),
        str(doc.get("params_digest", "")),
        reads,
        int(doc.get("seed", 0)),
        qubits,
        tuple(entries),
    )
