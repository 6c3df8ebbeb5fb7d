"""Shared builders for small test problems."""

from __future__ import annotations

from mirrorbench import (
    CompositeProblem,
    ProblemRegion,
    build_composite,
    build_topology,
    generate_instance,
    mirror_plane_for,
)


def cell_region(rows: int = 1, cols: int = 1, grid_rows: int | None = None, dead_qubits=()):
    """A rows x cols problem region on a minimal symmetric host grid."""
    topo = build_topology(grid_rows or rows, 2 * cols, dead_qubits)
    plane = mirror_plane_for(topo)
    return ProblemRegion(topo, plane, rows, cols)


def small_composite(seed: int = 42, with_fields: bool = False, strength: int = 28, sign: int = 1,
                    rows: int = 1, cols: int = 1) -> CompositeProblem:
    region = cell_region(rows, cols)
    return build_composite(generate_instance(region, with_fields, seed), strength, sign)


def two_spin_problem(coupling: int = 28, h_left: int = 0, h_right: int = 0) -> CompositeProblem:
    """A single mirror pair: qubit 4 coupled across the plane to qubit 12.

    Built by hand (not via build_composite) so solvers can be probed on the
    smallest possible system.
    """
    alive = {4, 12}
    topo = build_topology(1, 2, dead_qubits=set(range(16)) - alive)
    plane = mirror_plane_for(topo)
    return CompositeProblem(
        topology=topo,
        plane=plane,
        region_rows=1,
        region_cols=1,
        couplings={},
        fields={4: h_left, 12: h_right},
        mirror_pairs=((4, 12, coupling),),
        mirror_sign=1 if coupling >= 0 else -1,
        qubits=(4, 12),
        left_qubits=(4,),
        seed=0,
    )


def random_small_composite(rng, with_fields=None, sign=None, strength=None) -> CompositeProblem:
    """A composite of at most 16 qubits with a random symmetric dead set."""
    while True:
        k = int(rng.integers(0, 4))
        dead = set(int(q) for q in rng.choice(8, size=k, replace=False))
        topo = build_topology(1, 2, dead_qubits={*dead, *(q + 8 for q in dead)})
        plane = mirror_plane_for(topo)
        region = ProblemRegion(topo, plane, 1, 1)
        if not region.qubits:
            continue
        wf = bool(rng.integers(0, 2)) if with_fields is None else with_fields
        sg = (1 if rng.integers(0, 2) else -1) if sign is None else sign
        stg = int(rng.choice([0, 8, 13, 19, 28])) if strength is None else strength
        inst = generate_instance(region, wf, int(rng.integers(0, 2**63)))
        try:
            return build_composite(inst, stg, sg)
        except ValueError:
            continue


def one_spin_problem(h: int = 28) -> CompositeProblem:
    """A single free spin with a field; exercises solvers on the degenerate edge."""
    alive = {4}
    topo = build_topology(1, 2, dead_qubits=set(range(16)) - alive)
    plane = mirror_plane_for(topo)
    return CompositeProblem(
        topology=topo,
        plane=plane,
        region_rows=1,
        region_cols=1,
        couplings={},
        fields={4: h},
        mirror_pairs=(),
        mirror_sign=1,
        qubits=(4,),
        left_qubits=(4,),
        seed=0,
    )
