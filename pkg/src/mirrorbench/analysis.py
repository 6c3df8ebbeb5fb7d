"""Symmetry verdicts, symmetry-success estimation, and column-wise
Hamming-distance profiles.

A candidate configuration is symmetric when every functional left-half spin
matches its mirror partner (equal for ferromagnetic pairs, opposite for
antiferromagnetic ones).  The normalized column distance is the fraction of
functional qubits in a unit-cell column whose spins disagree with their
mirror images: 0 for identical columns, 0.5 for uncorrelated ones, 1 for a
spin-flipped pair of columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .embedding import FERRO, CompositeProblem
from .instances import Config, _validated_spins
from .solvers import SampleSet, lowest_energy_entries
from .topology import column_of, mirror_map

Z95 = 1.959963984540054

PSYM_CSV_SCHEMA = "mirrorbench/psym/1"
HAMMING_CSV_SCHEMA = "mirrorbench/hamming/1"


@dataclass(frozen=True)
class SymmetryVerdict:
    symmetric: bool
    mode: str  # "ferro" | "antiferro"
    violating_qubits: tuple[int, ...]  # left-half ids whose pair constraint fails


@dataclass(frozen=True)
class PsymEstimate:
    successes: int
    trials: int
    p_hat: float
    ci_low: float
    ci_high: float


@dataclass(frozen=True)
class ColumnStat:
    column: int
    mean: float
    stderr: float
    qubit_count: int


@dataclass(frozen=True)
class HammingProfile:
    per_column: tuple[ColumnStat, ...]
    instance_count: int
    solution_count: int  # occurrence-weighted number of solutions averaged

    def column(self, index: int) -> ColumnStat:
        for stat in self.per_column:
            if stat.column == index:
                return stat
        raise KeyError(index)


def _mode_name(mirror_sign: int) -> str:
    return "ferro" if mirror_sign == FERRO else "antiferro"


def check_symmetry(problem: CompositeProblem, config: Config) -> SymmetryVerdict:
    """Verdict for one complete configuration; violators are left-half ids."""
    s = _validated_spins(config, problem.qubits)
    bad = []
    for q in problem.left_qubits:
        partner = mirror_map(problem.topology, problem.plane, q)
        if s[partner] != problem.mirror_sign * s[q]:
            bad.append(q)
    return SymmetryVerdict(not bad, _mode_name(problem.mirror_sign), tuple(bad))


def _pair_indices(problem: CompositeProblem) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(left positions, mirror positions, 1-based column) per left qubit."""
    idx = problem.qubit_index
    left = np.array([idx[q] for q in problem.left_qubits], dtype=np.int64)
    right = np.array(
        [idx[mirror_map(problem.topology, problem.plane, q)] for q in problem.left_qubits], dtype=np.int64
    )
    cols = np.array([column_of(problem.topology, problem.plane, q) for q in problem.left_qubits], dtype=np.int64)
    return left, right, cols


def _entry_symmetric(problem: CompositeProblem, spins: np.ndarray, pair_idx) -> bool:
    left, right, _ = pair_idx
    return bool(np.all(spins[right] == problem.mirror_sign * spins[left]))


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= successes <= trials:
        raise ValueError(f"successes {successes} outside 0..{trials}")
    p = successes / trials
    denom = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = (z / denom) * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials))
    # the boundary cases are exactly 0/1 analytically; avoid float residue
    low = 0.0 if successes == 0 else max(0.0, center - half)
    high = 1.0 if successes == trials else min(1.0, center + half)
    return low, high


def estimate_psym(problems: Sequence[CompositeProblem], sample_sets: Sequence[SampleSet]) -> PsymEstimate:
    """Fraction of instances whose lowest-energy solutions include at least
    one symmetric configuration, with a 95% Wilson interval."""
    if len(problems) != len(sample_sets):
        raise ValueError(f"{len(problems)} problems but {len(sample_sets)} sample sets")
    if not problems:
        raise ValueError("empty batch")
    successes = 0
    for problem, samples in zip(problems, sample_sets):
        pair_idx = _pair_indices(problem)
        if any(_entry_symmetric(problem, e.spins, pair_idx) for e in lowest_energy_entries(samples)):
            successes += 1
    trials = len(problems)
    low, high = wilson_interval(successes, trials)
    return PsymEstimate(successes, trials, successes / trials, low, high)


def hamming_profile(
    problems: Sequence[CompositeProblem],
    sample_sets: Sequence[SampleSet],
    asymmetric_only: bool = True,
) -> HammingProfile:
    """Occurrence-weighted column distance statistics over a batch.

    With the filter on, only instances where no lowest-energy solution is
    symmetric are retained; every lowest-energy solution of every retained
    instance contributes, weighted by its occurrence count.
    """
    if len(problems) != len(sample_sets):
        raise ValueError(f"{len(problems)} problems but {len(sample_sets)} sample sets")
    if not problems:
        raise ValueError("empty batch")
    n_cols = problems[0].region_cols
    ref_left = problems[0].left_qubits
    for p in problems:
        if p.region_cols != n_cols or p.left_qubits != ref_left:
            raise ValueError("hamming profiles require a batch sharing one problem region")

    pair_idx = _pair_indices(problems[0])
    left, right, cols = pair_idx
    counts = np.array([(cols == c).sum() for c in range(1, n_cols + 1)], dtype=np.int64)
    if (counts == 0).any():
        raise ValueError("a region column has no functional qubits; cannot normalize distances")

    values: list[np.ndarray] = []
    weights: list[int] = []
    retained = 0
    for problem, samples in zip(problems, sample_sets):
        lowest = lowest_energy_entries(samples)
        if asymmetric_only and any(_entry_symmetric(problem, e.spins, pair_idx) for e in lowest):
            continue
        retained += 1
        for entry in lowest:
            disagree = entry.spins[left] != entry.spins[right]
            per_col = np.array(
                [disagree[cols == c].sum() for c in range(1, n_cols + 1)], dtype=np.float64
            ) / counts
            values.append(per_col)
            weights.append(entry.occurrences)
    if not retained:
        raise ValueError(
            "no instance retained: every sample set has a symmetric lowest-energy solution "
            "(asymmetric-only filter)"
        )

    mat = np.vstack(values)
    w = np.array(weights, dtype=np.float64)
    n = w.sum()
    mean = (w[:, None] * mat).sum(axis=0) / n
    if n > 1:
        var = (w[:, None] * (mat - mean) ** 2).sum(axis=0) / (n - 1)
        stderr = np.sqrt(var / n)
    else:
        stderr = np.zeros(n_cols)
    stats = tuple(
        ColumnStat(c + 1, float(mean[c]), float(stderr[c]), int(counts[c])) for c in range(n_cols)
    )
    return HammingProfile(stats, retained, int(n))


def symmetry_filter(problem: CompositeProblem, sample_set: SampleSet) -> SampleSet:
    """Drop every asymmetric entry, keeping occurrence counts; the result may
    be empty (no valid answer) and its reads shrink to the kept occurrences."""
    if not sample_set.entries:
        raise ValueError("sample set is empty")
    pair_idx = _pair_indices(problem)
    kept = tuple(e for e in sample_set.entries if _entry_symmetric(problem, e.spins, pair_idx))
    return SampleSet(
        sample_set.backend,
        sample_set.params_digest,
        sum(e.occurrences for e in kept),
        sample_set.seed,
        sample_set.qubits,
        kept,
    )


# -- CSV emission ----------------------------------------------------------

def write_psym_csv(path: str | Path, rows: Sequence[tuple[int, PsymEstimate]]) -> None:
    """Rows of (width, estimate); schema is versioned via the comment line."""
    lines = [f"# schema: {PSYM_CSV_SCHEMA}", "width,trials,successes,p_hat,ci_low,ci_high"]
    for width, est in rows:
        lines.append(
            f"{width},{est.trials},{est.successes},{est.p_hat:.6f},{est.ci_low:.6f},{est.ci_high:.6f}"
        )
    Path(path).write_text("\n".join(lines) + "\n")


def write_hamming_csv(
    path: str | Path,
    rows: Sequence[tuple[str, HammingProfile, str, int, int]],
    warnings: Sequence[str] = (),
) -> None:
    """Rows of (group label, profile, backend digest, mirror strength, sweeps);
    groups with no retained instances appear as warning comment lines."""
    lines = [
        f"# schema: {HAMMING_CSV_SCHEMA}",
        "group,column_index,mean,stderr,qubit_count,backend,mirror_strength,sweeps",
    ]
    for message in warnings:
        lines.append(f"# warning: {message}")
    for group, profile, backend, strength, sweeps in rows:
        for stat in profile.per_column:
            lines.append(
                f"{group},{stat.column},{stat.mean:.6f},{stat.stderr:.6f},{stat.qubit_count},"
                f"{backend},{strength},{sweeps}"
            )
    Path(path).write_text("\n".join(lines) + "\n")
