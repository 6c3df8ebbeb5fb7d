"""Experiment orchestration: size sweeps, mirror-strength sweeps, schedule
sweeps, file-based answer checking, and run manifests.

Every run is reproducible from its config alone.  Seeds form a fixed tree:
``derive_seed(base_seed, size_index)`` roots each problem size, stream 0 of
that root seeds instance generation, and stream ``1 + k`` seeds the sampler
for instance ``k``.  Sampler seeds are therefore shared across mirror
strengths and schedules, which pairs those comparisons.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import seeds
from ._json import canonical_dumps, digest, read_doc, write_doc
from .analysis import (
    HammingProfile,
    PsymEstimate,
    SymmetryVerdict,
    check_symmetry,
    estimate_psym,
    hamming_profile,
    symmetry_filter,
    write_hamming_csv,
    write_psym_csv,
)
from .embedding import CompositeProblem, build_composite, composite_from_doc, composite_to_doc
from .instances import SCALE, InstanceBatch, ProblemRegion, generate_batch, instance_to_doc
from .solvers import (
    BACKENDS,
    SampleSet,
    ScheduleConfig,
    sample_set_from_doc,
    sample_set_to_doc,
    solve,
)
from .topology import ChimeraTopology, MirrorPlane, build_topology, mirror_plane_for, symmetrize_dead_sets

CONFIG_SCHEMA = "mirrorbench/config/1"
MANIFEST_SCHEMA = "mirrorbench/manifest/1"
REPORT_SCHEMA = "mirrorbench/check-report/1"

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a sweep needs; see config_to_doc for the file schema.

    ``mirror_strengths`` entries are signed pair strengths: a negative entry
    flips the composite mode (field copying follows the effective sign
    ``mirror_sign * sign(entry)``), so one config can sweep the whole
    antiferromagnetic-to-ferromagnetic range.
    """

    topology_rows: int
    topology_cols: int
    sizes: tuple[tuple[int, int], ...]  # (cell rows, cell columns) per problem size
    instances: int
    reads: int
    base_seed: int
    backend: str = "sa"
    schedules: tuple[ScheduleConfig, ...] = (ScheduleConfig(sweeps=100),)
    with_fields: bool = False
    mirror_sign: int = 1
    mirror_strengths: tuple[int, ...] = (SCALE,)
    dead_qubits: tuple[int, ...] = ()
    dead_couplers: tuple[tuple[int, int], ...] = ()
    dead_fraction: float = 0.0
    dead_seed: int = 0
    workers: int = 1

    def __post_init__(self) -> None:
        if self.topology_cols % 2:
            raise ValueError(f"topology width {self.topology_cols} must be even to host a mirror plane")
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}")
        if not self.sizes:
            raise ValueError("config lists no problem sizes")
        for m, n in self.sizes:
            if m < 1 or m > self.topology_rows or n < 1 or n > self.topology_cols // 2:
                raise ValueError(f"size {m}x{n} does not fit the {self.topology_rows}x{self.topology_cols} grid")
        if self.instances < 1 or self.reads < 1:
            raise ValueError("instances and reads must be >= 1")
        if self.mirror_sign not in (1, -1):
            raise ValueError(f"mirror_sign must be +1 or -1, got {self.mirror_sign}")
        if not self.mirror_strengths:
            raise ValueError("config lists no mirror strengths")
        for s in self.mirror_strengths:
            if abs(s) > SCALE:
                raise ValueError(f"|mirror strength| must be <= {SCALE}, got {s}")
        if not self.schedules:
            raise ValueError("config lists no schedules")
        if not 0.0 <= self.dead_fraction < 1.0:
            raise ValueError(f"dead_fraction must be in [0, 1), got {self.dead_fraction}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.backend == "sa":
            for sched in self.schedules:
                if sched.offsets is not None:
                    raise ValueError("per-qubit annealing offsets are undefined for the sa backend; use sqa")


def schedule_to_doc(schedule: ScheduleConfig) -> dict:
    doc = {
        "sweeps": schedule.sweeps,
        "beta_start": schedule.beta_start,
        "beta_end": schedule.beta_end,
        "trotter_slices": schedule.trotter_slices,
        "transverse_field_start": schedule.transverse_field_start,
        "transverse_field_end": schedule.transverse_field_end,
    }
    if schedule.offsets is not None:
        doc["offsets"] = {str(q): o for q, o in sorted(schedule.offsets.items())}
    return doc


def schedule_from_doc(doc: dict) -> ScheduleConfig:
    offsets = doc.get("offsets")
    return ScheduleConfig(
        sweeps=int(doc["sweeps"]),
        beta_start=float(doc.get("beta_start", 0.1)),
        beta_end=float(doc.get("beta_end", 5.0)),
        offsets=None if offsets is None else {int(q): float(o) for q, o in offsets.items()},
        trotter_slices=int(doc.get("trotter_slices", 16)),
        transverse_field_start=float(doc.get("transverse_field_start", 28.0)),
        transverse_field_end=float(doc.get("transverse_field_end", 0.0)),
    )


def config_to_doc(config: ExperimentConfig) -> dict:
    return {
        "schema": CONFIG_SCHEMA,
        "topology": {
            "rows": config.topology_rows,
            "cols": config.topology_cols,
            "dead_qubits": sorted(config.dead_qubits),
            "dead_couplers": sorted(list(c) for c in config.dead_couplers),
            "dead_fraction": config.dead_fraction,
            "dead_seed": config.dead_seed,
        },
        "sizes": [list(s) for s in config.sizes],
        "instances": config.instances,
        "with_fields": config.with_fields,
        "mirror_sign": config.mirror_sign,
        "mirror_strengths": list(config.mirror_strengths),
        "backend": config.backend,
        "schedules": [schedule_to_doc(s) for s in config.schedules],
        "reads": config.reads,
        "base_seed": config.base_seed,
        "workers": config.workers,
    }


def config_from_doc(doc: dict) -> ExperimentConfig:
    if doc.get("schema") != CONFIG_SCHEMA:
        raise ValueError(f"unsupported config schema {doc.get('schema')!r}")
    topo = doc["topology"]
    return ExperimentConfig(
        topology_rows=int(topo["rows"]),
        topology_cols=int(topo["cols"]),
        sizes=tuple((int(m), int(n)) for m, n in doc["sizes"]),
        instances=int(doc["instances"]),
        reads=int(doc["reads"]),
        base_seed=int(doc["base_seed"]),
        backend=str(doc.get("backend", "sa")),
        schedules=tuple(schedule_from_doc(s) for s in doc["schedules"]),
        with_fields=bool(doc.get("with_fields", False)),
        mirror_sign=int(doc.get("mirror_sign", 1)),
        mirror_strengths=tuple(int(s) for s in doc.get("mirror_strengths", [SCALE])),
        dead_qubits=tuple(int(q) for q in topo.get("dead_qubits", ())),
        dead_couplers=tuple((int(a), int(b)) for a, b in topo.get("dead_couplers", ())),
        dead_fraction=float(topo.get("dead_fraction", 0.0)),
        dead_seed=int(topo.get("dead_seed", 0)),
        workers=int(doc.get("workers", 1)),
    )


def config_digest(config: ExperimentConfig) -> str:
    return digest(canonical_dumps(config_to_doc(config)))


def load_config(path: str | Path) -> ExperimentConfig:
    return config_from_doc(read_doc(path))


# -- topology and pipeline stages -------------------------------------------

def experiment_topology(config: ExperimentConfig) -> tuple[ChimeraTopology, MirrorPlane]:
    """Build, optionally damage, and symmetrize the host graph."""
    dead = set(config.dead_qubits)
    if config.dead_fraction > 0:
        rng = seeds.stream(config.dead_seed)
        draws = rng.random(8 * config.topology_rows * config.topology_cols)
        dead.update(int(q) for q in (draws < config.dead_fraction).nonzero()[0])
    topology = build_topology(config.topology_rows, config.topology_cols, dead, config.dead_couplers)
    plane = mirror_plane_for(topology)
    return symmetrize_dead_sets(topology, plane), plane


def size_seed(config: ExperimentConfig, size_index: int) -> int:
    return seeds.derive_seed(config.base_seed, size_index)


def _solve_task(args) -> SampleSet:
    problem, backend, schedule, reads, sampler_seed, instance_seed = args
    try:
        return solve(problem, backend, schedule, reads, sampler_seed)
    except ValueError as err:
        raise ValueError(f"instance seed {instance_seed}: {err}") from err


def sample_batch(
    problems: Sequence[CompositeProblem],
    config: ExperimentConfig,
    schedule: ScheduleConfig,
    root_seed: int,
) -> list[SampleSet]:
    """Sample every composite; instance k always gets sampler stream 1 + k."""
    tasks = [
        (p, config.backend, schedule, config.reads, seeds.derive_seed(root_seed, 1 + k), p.seed)
        for k, p in enumerate(problems)
    ]
    if config.workers == 1:
        return [_solve_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(_solve_task, tasks))


def effective_sign(strength: int, mirror_sign: int) -> int:
    """Signed strengths flip the composite mode relative to the config sign."""
    return mirror_sign * (-1 if strength < 0 else 1)


def build_composites(batch: InstanceBatch, strength: int, sign: int) -> list[CompositeProblem]:
    out = []
    for inst in batch.instances:
        try:
            out.append(build_composite(inst, strength, sign))
        except ValueError as err:
            raise ValueError(f"instance seed {inst.seed}: {err}") from err
    return out


def size_batch(
    config: ExperimentConfig,
    topology: ChimeraTopology,
    plane: MirrorPlane,
    size: tuple[int, int],
    root_seed: int,
) -> InstanceBatch:
    region = ProblemRegion(topology, plane, size[0], size[1])
    return generate_batch(region, config.instances, config.with_fields, seeds.derive_seed(root_seed, 0))


# -- manifests ---------------------------------------------------------------

@dataclass
class RunManifest:
    config_digest: str
    stages: list[dict] = field(default_factory=list)

    def record(self, name: str, path: Path, seconds: float) -> None:
        self.stages.append(
            {
                "name": name,
                "path": path.name,
                "sha256": digest(path.read_bytes()),
                "seconds": round(seconds, 3),
            }
        )

    def write(self, out_dir: Path) -> Path:
        doc = {
            "schema": MANIFEST_SCHEMA,
            "config_digest": self.config_digest,
            "tool_version": TOOL_VERSION,
            "stages": self.stages,
        }
        path = out_dir / "manifest.json"
        write_doc(path, doc)
        return path


def verify_manifest(manifest_path: str | Path) -> None:
    """Re-hash every recorded file; raises on any mismatch or missing file."""
    manifest_path = Path(manifest_path)
    doc = read_doc(manifest_path)
    if doc.get("schema") != MANIFEST_SCHEMA:
        raise ValueError(f"unsupported manifest schema {doc.get('schema')!r}")
    for stage in doc["stages"]:
        path = manifest_path.parent / stage["path"]
        if not path.exists():
            raise ValueError(f"manifest stage {stage['name']}: file {stage['path']} is missing")
        actual = digest(path.read_bytes())
        if actual != stage["sha256"]:
            raise ValueError(f"manifest stage {stage['name']}: digest mismatch for {stage['path']}")


# -- sweeps -------------------------------------------------------------------

@dataclass
class PsymSweepResult:
    rows: list[tuple[int, PsymEstimate]]
    csv_path: Path
    plot_path: Path
    manifest_path: Path


def run_psym_sweep(config: ExperimentConfig, out_dir: str | Path) -> PsymSweepResult:
    """One symmetry-success estimate per problem size, using the first mirror
    strength and the first schedule."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    topology, plane = experiment_topology(config)
    manifest = RunManifest(config_digest(config))
    rows: list[tuple[int, PsymEstimate]] = []
    t_all = time.perf_counter()
    for s_idx, size in enumerate(config.sizes):
        root = size_seed(config, s_idx)
        batch = size_batch(config, topology, plane, size, root)
        strength = config.mirror_strengths[0]
        problems = build_composites(batch, strength, effective_sign(strength, config.mirror_sign))
        samples = sample_batch(problems, config, config.schedules[0], root)
        rows.append((size[1], estimate_psym(problems, samples)))
    csv_path = out_dir / "psym.csv"
    write_psym_csv(csv_path, rows)
    plot_path = out_dir / "psym.gp"
    plot_path.write_text(_PSYM_PLOT)
    manifest.record("psym.csv", csv_path, time.perf_counter() - t_all)
    manifest.record("psym.gp", plot_path, 0.0)
    manifest_path = manifest.write(out_dir)
    return PsymSweepResult(rows, csv_path, plot_path, manifest_path)


_PSYM_PLOT = """\
set datafile separator ','
set key autotitle columnhead
set logscale y
set xlabel 'problem width (unit-cell columns)'
set ylabel 'symmetry success probability'
plot 'psym.csv' using 1:4:5:6 with yerrorlines title 'p_hat'
"""


@dataclass
class HammingSweepResult:
    profiles: dict[int, HammingProfile]  # keyed by mirror strength
    skipped: list[int]  # strengths with no retained instance
    csv_path: Path
    manifest_path: Path


def run_hamming_sweep(config: ExperimentConfig, out_dir: str | Path) -> HammingSweepResult:
    """Asymmetric-only Hamming profiles for each mirror strength, on the
    first problem size, with one shared instance batch and paired sampler
    seeds across strengths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    topology, plane = experiment_topology(config)
    manifest = RunManifest(config_digest(config))
    root = size_seed(config, 0)
    batch = size_batch(config, topology, plane, config.sizes[0], root)
    schedule = config.schedules[0]
    profiles: dict[int, HammingProfile] = {}
    skipped: list[int] = []
    rows = []
    warnings = []
    t_all = time.perf_counter()
    for strength in config.mirror_strengths:
        problems = build_composites(batch, strength, effective_sign(strength, config.mirror_sign))
        samples = sample_batch(problems, config, schedule, root)
        group = f"M{strength:+d}"
        try:
            profile = hamming_profile(problems, samples, asymmetric_only=True)
        except ValueError as err:
            if "no instance retained" not in str(err):
                raise
            skipped.append(strength)
            warnings.append(f"group {group} retained zero instances (asymmetric-only filter)")
            continue
        profiles[strength] = profile
        rows.append((group, profile, f"{samples[0].backend}-{samples[0].params_digest}", strength, schedule.sweeps))
    csv_path = out_dir / "hamming.csv"
    write_hamming_csv(csv_path, rows, warnings)
    manifest.record("hamming.csv", csv_path, time.perf_counter() - t_all)
    manifest_path = manifest.write(out_dir)
    return HammingSweepResult(profiles, skipped, csv_path, manifest_path)


@dataclass
class ScheduleSweepResult:
    profiles: list[HammingProfile | None]  # one per schedule; None if nothing retained
    estimates: list[PsymEstimate]
    csv_path: Path
    manifest_path: Path


def run_schedule_sweep(config: ExperimentConfig, out_dir: str | Path) -> ScheduleSweepResult:
    """Hamming profiles (and symmetry-success estimates) per schedule, on the
    first size and first mirror strength, with identical sampler seeds across
    schedules so budgets compare pairwise."""
    if len(config.schedules) < 2:
        raise ValueError("schedule sweep needs at least 2 schedules")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    topology, plane = experiment_topology(config)
    manifest = RunManifest(config_digest(config))
    root = size_seed(config, 0)
    batch = size_batch(config, topology, plane, config.sizes[0], root)
    strength0 = config.mirror_strengths[0]
    problems = build_composites(batch, strength0, effective_sign(strength0, config.mirror_sign))
    profiles: list[HammingProfile | None] = []
    estimates: list[PsymEstimate] = []
    rows = []
    warnings = []
    t_all = time.perf_counter()
    for i, schedule in enumerate(config.schedules):
        samples = sample_batch(problems, config, schedule, root)
        estimates.append(estimate_psym(problems, samples))
        group = f"sched{i}"
        try:
            profile = hamming_profile(problems, samples, asymmetric_only=True)
        except ValueError as err:
            if "no instance retained" not in str(err):
                raise
            profiles.append(None)
            warnings.append(f"group {group} retained zero instances (asymmetric-only filter)")
            continue
        profiles.append(profile)
        rows.append(
            (group, profile, f"{samples[0].backend}-{samples[0].params_digest}", config.mirror_strengths[0], schedule.sweeps)
        )
    csv_path = out_dir / "hamming.csv"
    write_hamming_csv(csv_path, rows, warnings)
    manifest.record("hamming.csv", csv_path, time.perf_counter() - t_all)
    manifest_path = manifest.write(out_dir)
    return ScheduleSweepResult(profiles, estimates, csv_path, manifest_path)


# -- answer checking ----------------------------------------------------------

@dataclass
class AnswerCheckReport:
    some_symmetric: bool
    verdicts: list[tuple[str, int, int, SymmetryVerdict]]  # (bitstring, energy, occurrences, verdict)
    filtered: SampleSet


def answer_check(problem_path: str | Path, samples_path: str | Path, out_dir: str | Path | None = None) -> AnswerCheckReport:
    """Check every sampled configuration against the problem's symmetry.

    Ingest recomputes all energies exactly and fails hard on any mismatch.
    When ``out_dir`` is given, a verdict report and the symmetric-only sample
    set are written there.
    """
    problem = composite_from_doc(read_doc(problem_path))
    samples = sample_set_from_doc(read_doc(samples_path), problem)
    verdicts = []
    some = False
    for entry in samples.entries:
        verdict = check_symmetry(problem, samples.config(entry))
        some = some or verdict.symmetric
        verdicts.append((entry.bitstring(), entry.energy, entry.occurrences, verdict))
    filtered = symmetry_filter(problem, samples)
    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        write_doc(
            out_dir / "check_report.json",
            {
                "schema": REPORT_SCHEMA,
                "some_symmetric": some,
                "entries": [
                    {
                        "bits": bits,
                        "energy": energy,
                        "occurrences": occ,
                        "symmetric": v.symmetric,
                        "violating_qubits": list(v.violating_qubits),
                    }
                    for bits, energy, occ, v in verdicts
                ],
            },
        )
        write_doc(out_dir / "symmetric_samples.json", sample_set_to_doc(filtered))
    return AnswerCheckReport(some, verdicts, filtered)


# -- file-based single stages (CLI decomposition) -----------------------------

def write_instances(config: ExperimentConfig, out_dir: str | Path) -> list[Path]:
    """Generate every size's batch and write one instance document per file,
    plus the symmetrized host topology."""
    from .topology import topology_to_doc

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    topology, plane = experiment_topology(config)
    write_doc(out_dir / "topology.json", topology_to_doc(topology))
    paths = []
    for s_idx, size in enumerate(config.sizes):
        root = size_seed(config, s_idx)
        batch = size_batch(config, topology, plane, size, root)
        size_dir = out_dir / "instances" / f"{size[0]}x{size[1]}"
        size_dir.mkdir(parents=True, exist_ok=True)
        for k, inst in enumerate(batch.instances):
            path = size_dir / f"inst_{k:04d}.json"
            write_doc(path, instance_to_doc(inst))
            paths.append(path)
    return paths


def write_composites(config: ExperimentConfig, out_dir: str | Path) -> list[Path]:
    """Compose every generated instance at every configured mirror strength."""
    from .instances import instance_from_doc

    out_dir = Path(out_dir)
    paths = []
    for s_idx, size in enumerate(config.sizes):
        size_dir = out_dir / "instances" / f"{size[0]}x{size[1]}"
        files = sorted(size_dir.glob("inst_*.json"))
        if not files:
            raise ValueError(f"no instance files under {size_dir}; run gen first")
        for strength in config.mirror_strengths:
            comp_dir = out_dir / "composites" / f"{size[0]}x{size[1]}" / f"M{strength:+d}"
            comp_dir.mkdir(parents=True, exist_ok=True)
            for f in files:
                inst = instance_from_doc(read_doc(f))
                problem = build_composite(inst, strength, effective_sign(strength, config.mirror_sign))
                path = comp_dir / f"comp_{f.stem.split('_')[1]}.json"
                write_doc(path, composite_to_doc(problem))
                paths.append(path)
    return paths


def write_samples(config: ExperimentConfig, out_dir: str | Path) -> list[Path]:
    """Sample every composed problem with the first schedule."""
    out_dir = Path(out_dir)
    schedule = config.schedules[0]
    paths = []
    for s_idx, size in enumerate(config.sizes):
        root = size_seed(config, s_idx)
        for strength in config.mirror_strengths:
            comp_dir = out_dir / "composites" / f"{size[0]}x{size[1]}" / f"M{strength:+d}"
            files = sorted(comp_dir.glob("comp_*.json"))
            if not files:
                raise ValueError(f"no composite files under {comp_dir}; run compose first")
            problems = [composite_from_doc(read_doc(f)) for f in files]
            samples = sample_batch(problems, config, schedule, root)
            samp_dir = out_dir / "samples" / f"{size[0]}x{size[1]}" / f"M{strength:+d}"
            samp_dir.mkdir(parents=True, exist_ok=True)
            for f, ss in zip(files, samples):
                path = samp_dir / f"samp_{f.stem.split('_')[1]}.json"
                write_doc(path, sample_set_to_doc(ss))
                paths.append(path)
    return paths


def _load_pairs(out_dir: Path, size: tuple[int, int], strength: int) -> tuple[list[CompositeProblem], list[SampleSet]]:
    comp_dir = out_dir / "composites" / f"{size[0]}x{size[1]}" / f"M{strength:+d}"
    samp_dir = out_dir / "samples" / f"{size[0]}x{size[1]}" / f"M{strength:+d}"
    problems, samples = [], []
    for comp_path in sorted(comp_dir.glob("comp_*.json")):
        samp_path = samp_dir / f"samp_{comp_path.stem.split('_')[1]}.json"
        if not samp_path.exists():
            raise ValueError(f"missing sample file {samp_path}")
        problem = composite_from_doc(read_doc(comp_path))
        problems.append(problem)
        samples.append(sample_set_from_doc(read_doc(samp_path), problem))
    if not problems:
        raise ValueError(f"no composite/sample pairs under {comp_dir}")
    return problems, samples


def psym_from_files(config: ExperimentConfig, out_dir: str | Path) -> PsymSweepResult:
    """Estimate symmetry success from previously written composite/sample files."""
    out_dir = Path(out_dir)
    rows = []
    for size in config.sizes:
        problems, samples = _load_pairs(out_dir, size, config.mirror_strengths[0])
        rows.append((size[1], estimate_psym(problems, samples)))
    csv_path = out_dir / "psym.csv"
    write_psym_csv(csv_path, rows)
    plot_path = out_dir / "psym.gp"
    plot_path.write_text(_PSYM_PLOT)
    manifest = RunManifest(config_digest(config))
    manifest.record("psym.csv", csv_path, 0.0)
    manifest.record("psym.gp", plot_path, 0.0)
    return PsymSweepResult(rows, csv_path, plot_path, manifest.write(out_dir))


def hamming_from_files(
    config: ExperimentConfig, out_dir: str | Path, asymmetric_only: bool = True
) -> HammingSweepResult:
    """Hamming profiles per mirror strength from previously written files."""
    out_dir = Path(out_dir)
    schedule = config.schedules[0]
    profiles: dict[int, HammingProfile] = {}
    skipped: list[int] = []
    rows, warnings = [], []
    for strength in config.mirror_strengths:
        problems, samples = _load_pairs(out_dir, config.sizes[0], strength)
        group = f"M{strength:+d}"
        try:
            profile = hamming_profile(problems, samples, asymmetric_only=asymmetric_only)
        except ValueError as err:
            if "no instance retained" not in str(err):
                raise
            skipped.append(strength)
            warnings.append(f"group {group} retained zero instances (asymmetric-only filter)")
            continue
        profiles[strength] = profile
        rows.append((group, profile, f"{samples[0].backend}-{samples[0].params_digest}", strength, schedule.sweeps))
    csv_path = out_dir / "hamming.csv"
    write_hamming_csv(csv_path, rows, warnings)
    manifest = RunManifest(config_digest(config))
    manifest.record("hamming.csv", csv_path, 0.0)
    return HammingSweepResult(profiles, skipped, csv_path, manifest.write(out_dir))
