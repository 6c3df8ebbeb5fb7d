"""Composite problems: a problem graph, its mirrored copy, and the mirror
couplings that tie the two halves together.

The problem graph occupies the columns flush against the left side of the
plane; its reflection carries identical couplings, and fields copied with the
sign of the mirror coupling (ferromagnetic keeps them, antiferromagnetic
flips them, matching the spin-reversal relation between the halves).  The
crossing couplers adjacent to the problem's first column become mirror pairs,
all with the same signed strength.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .instances import SCALE, Config, IsingInstance, _validated_spins
from .topology import (
    HORIZONTAL_INDICES,
    ChimeraTopology,
    Coupler,
    MirrorPlane,
    mirror_coupler,
    mirror_map,
)

FERRO = 1
ANTIFERRO = -1

COMPOSITE_SCHEMA = "mirrorbench/composite/1"


@dataclass(frozen=True)
class CompositeProblem:
    """Both halves plus mirror pairs; immutable and shareable across workers.

    ``couplings`` holds the in-half couplers only; ``mirror_pairs`` holds the
    crossing ``(left, right, strength)`` triples.  All values are integers in
    1/28 units.
    """

    topology: ChimeraTopology
    plane: MirrorPlane
    region_rows: int
    region_cols: int
    couplings: dict[Coupler, int]
    fields: dict[int, int]
    mirror_pairs: tuple[tuple[int, int, int], ...]
    mirror_sign: int
    qubits: tuple[int, ...]
    left_qubits: tuple[int, ...]
    seed: int = 0

    @property
    def num_qubits(self) -> int:
        return len(self.qubits)

    @cached_property
    def qubit_index(self) -> dict[int, int]:
        return {q: i for i, q in enumerate(self.qubits)}

    def coupling_items(self) -> list[tuple[int, int, int]]:
        """Every quadratic term, in-half couplers and mirror pairs alike."""
        out = [(a, b, v) for (a, b), v in self.couplings.items()]
        out.extend(self.mirror_pairs)
        return out

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(edge a-index, edge b-index, edge value, field value) for vector math."""
        items = self.coupling_items()
        idx = self.qubit_index
        ai = np.array([idx[a] for a, _, _ in items], dtype=np.int64)
        bi = np.array([idx[b] for _, b, _ in items], dtype=np.int64)
        jv = np.array([v for _, _, v in items], dtype=np.int64)
        hv = np.zeros(len(self.qubits), dtype=np.int64)
        for q, h in self.fields.items():
            hv[idx[q]] = h
        return ai, bi, jv, hv


def build_composite(instance: IsingInstance, mirror_strength: int, mirror_sign: int) -> CompositeProblem:
    """Mirror an instance across its plane and install the crossing couplings.

    The effective pair strength is ``mirror_sign * abs(mirror_strength)``.
    Raises if the dead sets are not mirror-symmetric over the region, or if
    no functional crossing pair exists (no constraint would be possible).
    """
    if mirror_sign not in (FERRO, ANTIFERRO):
        raise ValueError(f"mirror_sign must be +1 or -1, got {mirror_sign}")
    if abs(mirror_strength) > SCALE:
        raise ValueError(f"|mirror_strength| must be <= {SCALE}, got {mirror_strength}")
    region = instance.region
    topo, plane = region.topology, region.plane

    couplings: dict[Coupler, int] = {}
    for c, j in instance.couplings.items():
        mc = mirror_coupler(topo, plane, c)
        if not topo.is_functional_coupler(mc):
            raise ValueError(
                f"mirror image {mc} of coupler {c} is dead; symmetrize the topology dead sets first"
            )
        couplings[c] = j
        couplings[mc] = j

    fields: dict[int, int] = {}
    for q, h in instance.fields.items():
        mq = mirror_map(topo, plane, q)
        if not topo.is_functional_qubit(mq):
            raise ValueError(
                f"mirror image {mq} of qubit {q} is dead; symmetrize the topology dead sets first"
            )
        fields[q] = h
        fields[mq] = mirror_sign * h

    strength = mirror_sign * abs(mirror_strength)
    pairs = []
    for r in range(region.rows):
        for k in HORIZONTAL_INDICES:
            a = topo.qubit_id(r, plane.split_col - 1, k)
            b = topo.qubit_id(r, plane.split_col, k)
            if topo.is_functional_qubit(a) and topo.is_functional_qubit(b) and topo.is_functional_coupler((a, b)):
                pairs.append((a, b, strength))
    if not pairs:
        raise ValueError("no functional crossing coupler adjacent to the region; cannot build a composite")

    left = region.qubits
    qubits = tuple(sorted(set(left) | {mirror_map(topo, plane, q) for q in left}))
    return CompositeProblem(
        topology=topo,
        plane=plane,
        region_rows=region.rows,
        region_cols=region.cols,
        couplings=couplings,
        fields=fields,
        mirror_pairs=tuple(pairs),
        mirror_sign=mirror_sign,
        qubits=qubits,
        left_qubits=left,
        seed=instance.seed,
    )


def composite_energy(problem: CompositeProblem, config: Config) -> int:
    """Exact integer energy of a complete configuration on both halves."""
    s = _validated_spins(config, problem.qubits)
    total = 0
    for a, b, v in problem.coupling_items():
        total -= v * s[a] * s[b]
    for q, h in problem.fields.items():
        total -= h * s[q]
    return total


def energies_of(problem: CompositeProblem, spins: np.ndarray) -> np.ndarray:
    """Exact int64 energies for a (n_configs, n_qubits) +/-1 matrix aligned to
    ``problem.qubits``."""
    ai, bi, jv, hv = problem._arrays
    s = spins.astype(np.int64, copy=False)
    if s.ndim == 1:
        s = s[None, :]
    return -(s[:, ai] * s[:, bi]) @ jv - s @ hv


def symmetric_extension(problem: CompositeProblem, sigma: Config) -> dict[int, int]:
    """Extend a left-half configuration across the plane.

    Ferromagnetic problems copy the spins; antiferromagnetic problems copy
    the negated spins, matching the flipped fields on the right half.
    """
    s = _validated_spins(sigma, problem.left_qubits)
    out: dict[int, int] = {}
    for q in problem.left_qubits:
        out[q] = s[q]
        out[mirror_map(problem.topology, problem.plane, q)] = problem.mirror_sign * s[q]
    return out


# -- document form ---------------------------------------------------------

def composite_to_doc(problem: CompositeProblem) -> dict:
    from .instances import region_to_doc  # local import to avoid cycle at module load

    region = _region_of(problem)
    return {
        "schema": COMPOSITE_SCHEMA,
        "region": region_to_doc(region),
        "couplings": [[a, b, v] for (a, b), v in sorted(problem.couplings.items())],
        "fields": [[q, v] for q, v in sorted(problem.fields.items())],
        "mirror_pairs": [list(p) for p in sorted(problem.mirror_pairs)],
        "mirror_sign": problem.mirror_sign,
        "seed": problem.seed,
        "scale": SCALE,
    }


def composite_from_doc(doc: dict) -> CompositeProblem:
    from .instances import region_from_doc

    if doc.get("schema") != COMPOSITE_SCHEMA:
        raise ValueError(f"unsupported composite schema {doc.get('schema')!r}")
    if doc.get("scale") != SCALE:
        raise ValueError(f"unsupported scale denominator {doc.get('scale')!r}")
    region = region_from_doc(doc["region"])
    topo, plane = region.topology, region.plane
    couplings = {(int(a), int(b)): int(v) for a, b, v in doc["couplings"]}
    fields = {int(q): int(v) for q, v in doc["fields"]}
    pairs = tuple((int(a), int(b), int(v)) for a, b, v in doc["mirror_pairs"])
    left = region.qubits
    qubits = tuple(sorted(set(left) | {mirror_map(topo, plane, q) for q in left}))
    if set(fields) != set(qubits):
        raise ValueError("composite fields do not cover the functional qubits of both halves")
    return CompositeProblem(
        topology=topo,
        plane=plane,
        region_rows=region.rows,
        region_cols=region.cols,
        couplings=couplings,
        fields=fields,
        mirror_pairs=pairs,
        mirror_sign=int(doc["mirror_sign"]),
        qubits=qubits,
        left_qubits=left,
        seed=int(doc.get("seed", 0)),
    )


def _region_of(problem: CompositeProblem):
    from .instances import ProblemRegion

    return ProblemRegion(problem.topology, problem.plane, problem.region_rows, problem.region_cols)


def restrict_to_left(problem: CompositeProblem) -> IsingInstance:
    """Recover the original instance from a composite (left half only)."""
    region = _region_of(problem)
    couplings = {c: problem.couplings[c] for c in region.couplers}
    fields = {q: problem.fields[q] for q in region.qubits}
    return IsingInstance(region, couplings, fields, problem.seed)
