"""Random Ising instances on a Chimera sub-region, in exact integer units.

Couplings (and optional local fields) are drawn uniformly from the signed
Sidon magnitudes {8, 13, 19, 28}; all values are stored as integers in units
of 1/28, so energies are exact integers and lowest-energy ties are decided
without floating point.  The Hamiltonian convention is

    E(S) = - sum_couplers J_ij S_i S_j - sum_qubits h_i S_i,   S_i in {-1, +1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from . import seeds
from .topology import (
    ChimeraTopology,
    Coupler,
    MirrorPlane,
    check_plane,
    topology_from_doc,
    topology_to_doc,
)

SCALE = 28
SIDON_MAGNITUDES = (8, 13, 19, 28)
SIDON_VALUES = (-28, -19, -13, -8, 8, 13, 19, 28)

Config = Mapping[int, int]


@dataclass(frozen=True)
class ProblemRegion:
    """The unit-cell block a problem lives on: ``rows`` cell rows starting at
    row 0, ``cols`` cell columns flush against the left side of the plane."""

    topology: ChimeraTopology
    plane: MirrorPlane
    rows: int
    cols: int

    def __post_init__(self) -> None:
        check_plane(self.topology, self.plane)
        if not 1 <= self.rows <= self.topology.rows:
            raise ValueError(f"region rows {self.rows} outside grid of {self.topology.rows} rows")
        if not 1 <= self.cols <= self.plane.split_col:
            raise ValueError(
                f"region of {self.cols} columns does not fit the half-grid of width {self.plane.split_col}"
            )

    @property
    def first_col(self) -> int:
        return self.plane.split_col - self.cols

    def contains(self, q: int) -> bool:
        r, c, _ = self.topology.qubit_coords(q)
        return r < self.rows and self.first_col <= c < self.plane.split_col

    @cached_property
    def qubits(self) -> tuple[int, ...]:
        """Functional qubits of the region, sorted."""
        return tuple(q for q in self.topology.functional_qubits if self.contains(q))

    @cached_property
    def couplers(self) -> tuple[Coupler, ...]:
        """Functional couplers with both endpoints in the region, sorted."""
        inside = set(self.qubits)
        return tuple(c for c in self.topology.functional_couplers if c[0] in inside and c[1] in inside)


@dataclass(frozen=True)
class IsingInstance:
    """Couplings and fields on a region, in integer 1/28 units."""

    region: ProblemRegion
    couplings: dict[Coupler, int]
    fields: dict[int, int]
    seed: int

    def __post_init__(self) -> None:
        if set(self.couplings) != set(self.region.couplers):
            raise ValueError("couplings must cover exactly the functional couplers of the region")
        if set(self.fields) != set(self.region.qubits):
            raise ValueError("fields must cover exactly the functional qubits of the region")
        for c, v in self.couplings.items():
            if v not in SIDON_VALUES:
                raise ValueError(f"coupling {c} value {v} outside the signed Sidon set")
        for q, v in self.fields.items():
            if v != 0 and v not in SIDON_VALUES:
                raise ValueError(f"field on qubit {q} value {v} outside the signed Sidon set")


@dataclass(frozen=True)
class InstanceBatch:
    instances: tuple[IsingInstance, ...]
    with_fields: bool
    base_seed: int


def generate_instance(region: ProblemRegion, with_fields: bool, seed: int) -> IsingInstance:
    """Draw one instance; deterministic in ``seed``.

    The random stream is consumed coupler-by-coupler in sorted coupler order,
    then (when fields are enabled) qubit-by-qubit in sorted id order.
    """
    if not region.qubits:
        raise ValueError("region has no functional qubits")
    rng = seeds.stream(seed)
    couplers = region.couplers
    values = rng.integers(0, len(SIDON_VALUES), size=len(couplers))
    couplings = {c: SIDON_VALUES[v] for c, v in zip(couplers, values)}
    if with_fields:
        draws = rng.integers(0, len(SIDON_VALUES), size=len(region.qubits))
        fields = {q: SIDON_VALUES[v] for q, v in zip(region.qubits, draws)}
    else:
        fields = {q: 0 for q in region.qubits}
    return IsingInstance(region, couplings, fields, seed)


def generate_batch(region: ProblemRegion, count: int, with_fields: bool, base_seed: int) -> InstanceBatch:
    """``count`` instances with per-element seeds ``derive_seed(base_seed, k)``."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    instances = tuple(
        generate_instance(region, with_fields, seeds.derive_seed(base_seed, k)) for k in range(count)
    )
    return InstanceBatch(instances, with_fields, base_seed)


def energy(instance: IsingInstance, config: Config) -> int:
    """Exact integer energy of a complete spin assignment on the region."""
    s = _validated_spins(config, instance.region.qubits)
    total = 0
    for (a, b), j in instance.couplings.items():
        total -= j * s[a] * s[b]
    for q, h in instance.fields.items():
        total -= h * s[q]
    return total


def _validated_spins(config: Config, qubits: tuple[int, ...]) -> Config:
    for q in qubits:
        if q not in config:
            raise ValueError(f"configuration is missing qubit {q}")
        if config[q] not in (-1, 1):
            raise ValueError(f"spin at qubit {q} must be -1 or +1, got {config[q]!r}")
    return config


# -- document form ---------------------------------------------------------

INSTANCE_SCHEMA = "mirrorbench/instance/1"


def region_to_doc(region: ProblemRegion) -> dict:
    return {
        "topology": topology_to_doc(region.topology),
        "split_col": region.plane.split_col,
        "rows": region.rows,
        "cols": region.cols,
    }


def region_from_doc(doc: dict) -> ProblemRegion:
    return ProblemRegion(
        topology_from_doc(doc["topology"]),
        MirrorPlane(int(doc["split_col"])),
        int(doc["rows"]),
        int(doc["cols"]),
    )


def instance_to_doc(instance: IsingInstance) -> dict:
    return {
        "schema": INSTANCE_SCHEMA,
        "region": region_to_doc(instance.region),
        "couplings": [[a, b, v] for (a, b), v in sorted(instance.couplings.items())],
        "fields": [[q, v] for q, v in sorted(instance.fields.items())],
        "seed": instance.seed,
        "scale": SCALE,
    }


def instance_from_doc(doc: dict) -> IsingInstance:
    if doc.get("schema") != INSTANCE_SCHEMA:
        raise ValueError(f"unsupported instance schema {doc.get('schema')!r}")
    if doc.get("scale") != SCALE:
        raise ValueError(f"unsupported scale denominator {doc.get('scale')!r}")
    region = region_from_doc(doc["region"])
    couplings = {(int(a), int(b)): int(v) for a, b, v in doc["couplings"]}
    fields = {int(q): int(v) for q, v in doc["fields"]}
    return IsingInstance(region, couplings, fields, int(doc["seed"]))
