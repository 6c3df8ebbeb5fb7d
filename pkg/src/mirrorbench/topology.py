"""Chimera host graph: unit-cell grid, qubit indexing, dead-set masks, and
mirror-plane geometry.

A ``rows x cols`` Chimera grid has 8 qubits per unit cell forming a complete
bipartite K_{4,4}.  Intra-cell indices 0..3 are the vertical partition
(coupled to the same index in the cell above/below); indices 4..7 are the
horizontal partition (coupled to the same index in the cell left/right).
Qubit ids are row-major over cells with the intra-cell index fastest:

    id = 8 * (cell_row * cols + cell_col) + intra_index

which makes cell/column extraction O(1) arithmetic.

The mirror plane sits between two unit-cell columns and splits the grid into
halves of equal width; the horizontal inter-cell couplers that span it are
the candidate mirror couplings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Coupler = tuple[int, int]

CELL_SIZE = 8
VERTICAL_INDICES = (0, 1, 2, 3)
HORIZONTAL_INDICES = (4, 5, 6, 7)


def _edge(a: int, b: int) -> Coupler:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class ChimeraTopology:
    """Immutable Chimera grid with accessibility masks.

    ``dead_couplers`` is closed over ``dead_qubits`` at construction: every
    coupler incident to a dead qubit is dead.  Instances are safe to share
    across workers.
    """

    rows: int
    cols: int
    dead_qubits: frozenset[int] = frozenset()
    dead_couplers: frozenset[Coupler] = frozenset()

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"grid must be at least 1x1, got {self.rows}x{self.cols}")
        dead_q = frozenset(int(q) for q in self.dead_qubits)
        for q in dead_q:
            if not 0 <= q < self.num_qubits:
                raise ValueError(f"dead qubit id {q} out of range for {self.rows}x{self.cols} grid")
        dead_c = set(_edge(int(a), int(b)) for a, b in self.dead_couplers)
        for c in dead_c:
            if not self.is_coupler(*c):
                raise ValueError(f"dead coupler {c} is not a coupler of the {self.rows}x{self.cols} grid")
        # closure: couplers touching a dead qubit are dead
        for q in dead_q:
            dead_c.update(self.couplers_of(q))
        object.__setattr__(self, "dead_qubits", dead_q)
        object.__setattr__(self, "dead_couplers", frozenset(dead_c))

    # -- indexing ----------------------------------------------------------

    @property
    def num_qubits(self) -> int:
        return CELL_SIZE * self.rows * self.cols

    def qubit_id(self, cell_row: int, cell_col: int, intra: int) -> int:
        if not (0 <= cell_row < self.rows and 0 <= cell_col < self.cols and 0 <= intra < CELL_SIZE):
            raise ValueError(f"no qubit at cell ({cell_row},{cell_col}) intra {intra}")
        return CELL_SIZE * (cell_row * self.cols + cell_col) + intra

    def qubit_coords(self, q: int) -> tuple[int, int, int]:
        """Decompose a qubit id into (cell_row, cell_col, intra_index)."""
        if not 0 <= q < self.num_qubits:
            raise ValueError(f"qubit id {q} out of range")
        cell, intra = divmod(q, CELL_SIZE)
        row, col = divmod(cell, self.cols)
        return row, col, intra

    def cell_col(self, q: int) -> int:
        return (q // CELL_SIZE) % self.cols

    # -- couplers ----------------------------------------------------------

    def couplers_of(self, q: int) -> tuple[Coupler, ...]:
        """All couplers of the ideal grid incident to qubit ``q``."""
        r, c, k = self.qubit_coords(q)
        out = []
        if k in VERTICAL_INDICES:
            out.extend(_edge(q, self.qubit_id(r, c, b)) for b in HORIZONTAL_INDICES)
            if r > 0:
                out.append(_edge(q, self.qubit_id(r - 1, c, k)))
            if r < self.rows - 1:
                out.append(_edge(q, self.qubit_id(r + 1, c, k)))
        else:
            out.extend(_edge(q, self.qubit_id(r, c, a)) for a in VERTICAL_INDICES)
            if c > 0:
                out.append(_edge(q, self.qubit_id(r, c - 1, k)))
            if c < self.cols - 1:
                out.append(_edge(q, self.qubit_id(r, c + 1, k)))
        return tuple(sorted(out))

    def is_coupler(self, a: int, b: int) -> bool:
        if a == b or not (0 <= a < self.num_qubits and 0 <= b < self.num_qubits):
            return False
        ra, ca, ka = self.qubit_coords(a)
        rb, cb, kb = self.qubit_coords(b)
        if (ra, ca) == (rb, cb):
            return (ka in VERTICAL_INDICES) != (kb in VERTICAL_INDICES)
        if ka != kb:
            return False
        if ka in VERTICAL_INDICES:
            return ca == cb and abs(ra - rb) == 1
        return ra == rb and abs(ca - cb) == 1

    @cached_property
    def couplers(self) -> tuple[Coupler, ...]:
        """Every coupler of the ideal grid, sorted."""
        out: list[Coupler] = []
        for r in range(self.rows):
            for c in range(self.cols):
                for a in VERTICAL_INDICES:
                    qa = self.qubit_id(r, c, a)
                    for b in HORIZONTAL_INDICES:
                        out.append(_edge(qa, self.qubit_id(r, c, b)))
                if r < self.rows - 1:
                    for k in VERTICAL_INDICES:
                        out.append(_edge(self.qubit_id(r, c, k), self.qubit_id(r + 1, c, k)))
                if c < self.cols - 1:
                    for k in HORIZONTAL_INDICES:
                        out.append(_edge(self.qubit_id(r, c, k), self.qubit_id(r, c + 1, k)))
        return tuple(sorted(out))

    # -- accessibility -----------------------------------------------------

    def is_functional_qubit(self, q: int) -> bool:
        return 0 <= q < self.num_qubits and q not in self.dead_qubits

    def is_functional_coupler(self, c: Coupler) -> bool:
        return c not in self.dead_couplers and self.is_coupler(*c)

    @cached_property
    def functional_qubits(self) -> tuple[int, ...]:
        return tuple(q for q in range(self.num_qubits) if q not in self.dead_qubits)

    @cached_property
    def functional_couplers(self) -> tuple[Coupler, ...]:
        return tuple(c for c in self.couplers if c not in self.dead_couplers)


@dataclass(frozen=True)
class MirrorPlane:
    """Vertical cut between unit-cell columns ``split_col - 1`` and ``split_col``.

    Cells with ``cell_col < split_col`` form the left region, the rest the
    right region; a plane is valid for a topology only when both regions have
    equal width.
    """

    split_col: int

    def __post_init__(self) -> None:
        if self.split_col < 1:
            raise ValueError(f"split_col must be >= 1, got {self.split_col}")


def mirror_plane_for(topology: ChimeraTopology) -> MirrorPlane:
    """The centered plane of an even-width grid."""
    if topology.cols % 2:
        raise ValueError(f"grid width {topology.cols} is odd; no centered mirror plane exists")
    return MirrorPlane(topology.cols // 2)


def check_plane(topology: ChimeraTopology, plane: MirrorPlane) -> None:
    if topology.cols != 2 * plane.split_col:
        raise ValueError(
            f"plane at column {plane.split_col} does not split the {topology.cols}-column grid "
            "into halves of equal width"
        )


def build_topology(
    rows: int,
    cols: int,
    dead_qubits: Iterable[int] = (),
    dead_couplers: Iterable[Coupler] = (),
) -> ChimeraTopology:
    """Construct a Chimera topology, applying dead-coupler closure."""
    return ChimeraTopology(rows, cols, frozenset(dead_qubits), frozenset(tuple(c) for c in dead_couplers))


def mirror_map(topology: ChimeraTopology, plane: MirrorPlane, q: int) -> int:
    """Reflect a qubit across the plane; an involution on qubit ids."""
    check_plane(topology, plane)
    r, c, k = topology.qubit_coords(q)
    return topology.qubit_id(r, 2 * plane.split_col - 1 - c, k)


def mirror_coupler(topology: ChimeraTopology, plane: MirrorPlane, coupler: Coupler) -> Coupler:
    """Reflect a coupler edge-wise across the plane."""
    a, b = coupler
    return _edge(mirror_map(topology, plane, a), mirror_map(topology, plane, b))


def symmetrize_dead_sets(topology: ChimeraTopology, plane: MirrorPlane) -> ChimeraTopology:
    """Union each dead set with its mirror image.

    Afterwards the functional subgraphs left and right of the plane are
    isomorphic under ``mirror_map``; a topology with already-symmetric dead
    sets is returned unchanged.
    """
    check_plane(topology, plane)
    dead_q = set(topology.dead_qubits)
    dead_q.update(mirror_map(topology, plane, q) for q in topology.dead_qubits)
    dead_c = set(topology.dead_couplers)
    dead_c.update(mirror_coupler(topology, plane, c) for c in topology.dead_couplers)
    out = ChimeraTopology(topology.rows, topology.cols, frozenset(dead_q), frozenset(dead_c))
    return topology if (out.dead_qubits == topology.dead_qubits and out.dead_couplers == topology.dead_couplers) else out


def column_of(topology: ChimeraTopology, plane: MirrorPlane, q: int) -> int:
    """1-based distance of a qubit's unit-cell column from the plane.

    Column 1 is adjacent to the plane on either side; the outermost column is
    ``split_col``.
    """
    check_plane(topology, plane)
    c = topology.cell_col(q)
    return plane.split_col - c if c < plane.split_col else c - plane.split_col + 1


def crossing_couplers(topology: ChimeraTopology, plane: MirrorPlane) -> tuple[Coupler, ...]:
    """Horizontal inter-cell couplers spanning the plane (ideal grid), sorted."""
    check_plane(topology, plane)
    out = []
    for r in range(topology.rows):
        for k in HORIZONTAL_INDICES:
            out.append(_edge(topology.qubit_id(r, plane.split_col - 1, k), topology.qubit_id(r, plane.split_col, k)))
    return tuple(sorted(out))


# -- document form ---------------------------------------------------------

TOPOLOGY_SCHEMA = "mirrorbench/topology/1"


def topology_to_doc(topology: ChimeraTopology) -> dict:
    return {
        "schema": TOPOLOGY_SCHEMA,
        "rows": topology.rows,
        "cols": topology.cols,
        "dead_qubits": sorted(topology.dead_qubits),
        "dead_couplers": sorted(list(c) for c in topology.dead_couplers),
    }


def topology_from_doc(doc: dict) -> ChimeraTopology:
    if doc.get("schema", TOPOLOGY_SCHEMA) != TOPOLOGY_SCHEMA:
        raise ValueError(f"unsupported topology schema {doc.get('schema')!r}")
    return build_topology(
        int(doc["rows"]),
        int(doc["cols"]),
        doc.get("dead_qubits", ()),
        [tuple(c) for c in doc.get("dead_couplers", ())],
    )
