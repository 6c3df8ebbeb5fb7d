import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorbench import build_topology, column_of, mirror_map, mirror_plane_for, symmetrize_dead_sets
from mirrorbench._json import canonical_dumps
from mirrorbench.topology import (
    MirrorPlane,
    check_plane,
    crossing_couplers,
    mirror_coupler,
    topology_from_doc,
    topology_to_doc,
)
from mirrorbench.seeds import stream


def test_c12_counts():
    topo = build_topology(1, 2)
    assert topo.num_qubits == 16
    assert len(topo.couplers) == 36  # 2*16 intra + 4 horizontal inter


def test_counts_match_closed_form():
    for m, n in [(1, 1), (2, 3), (3, 2), (4, 4)]:
        topo = build_topology(m, n)
        assert topo.num_qubits == 8 * m * n
        assert len(topo.couplers) == 16 * m * n + 4 * n * (m - 1) + 4 * m * (n - 1)


def test_12x12_grid_qubit_count():
    assert build_topology(12, 12).num_qubits == 1152


def test_dead_qubit_closure_single_cell():
    topo = build_topology(1, 1, dead_qubits={0})
    # qubit 0 has exactly its 4 intra-cell partners in a 1x1 grid
    assert topo.dead_couplers == frozenset({(0, 4), (0, 5), (0, 6), (0, 7)})


def test_dead_qubit_closure_interior_qubit():
    topo = build_topology(3, 3, dead_qubits={build_topology(3, 3).qubit_id(1, 1, 2)})
    q = build_topology(3, 3).qubit_id(1, 1, 2)
    assert topo.dead_couplers == frozenset(topo.couplers_of(q))
    assert len(topo.dead_couplers) == 6  # 4 intra + up + down


def test_out_of_range_dead_qubit_names_id():
    with pytest.raises(ValueError, match="99"):
        build_topology(1, 1, dead_qubits={99})


def test_non_coupler_dead_edge_rejected():
    with pytest.raises(ValueError, match="not a coupler"):
        build_topology(1, 2, dead_couplers=[(0, 1)])  # same partition, no edge


def test_qubit_coords_roundtrip():
    topo = build_topology(3, 4)
    for q in range(topo.num_qubits):
        r, c, k = topo.qubit_coords(q)
        assert topo.qubit_id(r, c, k) == q


def test_mirror_map_adjacent_columns():
    topo = build_topology(1, 2)
    plane = mirror_plane_for(topo)
    assert plane.split_col == 1
    q = topo.qubit_id(0, 0, 5)
    assert mirror_map(topo, plane, q) == topo.qubit_id(0, 1, 5)


def test_mirror_map_large_grid():
    topo = build_topology(12, 12)
    plane = mirror_plane_for(topo)
    assert mirror_map(topo, plane, topo.qubit_id(3, 2, 7)) == topo.qubit_id(3, 9, 7)


@given(st.integers(1, 4), st.integers(1, 3))
@settings(max_examples=20, deadline=None)
def test_mirror_map_involution_and_bijection(rows, half):
    topo = build_topology(rows, 2 * half)
    plane = mirror_plane_for(topo)
    images = {mirror_map(topo, plane, q) for q in range(topo.num_qubits)}
    assert images == set(range(topo.num_qubits))
    for q in range(topo.num_qubits):
        assert mirror_map(topo, plane, mirror_map(topo, plane, q)) == q


def test_mirror_maps_couplers_to_couplers():
    topo = build_topology(2, 4)
    plane = mirror_plane_for(topo)
    for c in topo.couplers:
        assert topo.is_coupler(*mirror_coupler(topo, plane, c))


def test_symmetrize_adds_mirror_images():
    topo = build_topology(1, 2, dead_qubits={3})
    plane = mirror_plane_for(topo)
    out = symmetrize_dead_sets(topo, plane)
    assert {3, mirror_map(topo, plane, 3)} <= out.dead_qubits


def test_symmetrize_fixed_point():
    topo = build_topology(1, 2, dead_qubits={3, 11})
    plane = mirror_plane_for(topo)
    assert symmetrize_dead_sets(topo, plane) is topo


def test_symmetrize_balances_halves():
    topo = build_topology(12, 12)
    rng = stream(2024)
    dead = set(int(q) for q in rng.choice(topo.num_qubits, size=48, replace=False))
    damaged = build_topology(12, 12, dead_qubits=dead)
    plane = mirror_plane_for(damaged)
    out = symmetrize_dead_sets(damaged, plane)
    left = sum(1 for q in out.functional_qubits if out.cell_col(q) < plane.split_col)
    right = sum(1 for q in out.functional_qubits if out.cell_col(q) >= plane.split_col)
    assert left == right
    # every functional qubit / coupler has a functional mirror image
    for q in out.functional_qubits:
        assert out.is_functional_qubit(mirror_map(out, plane, q))
    for c in out.functional_couplers:
        assert out.is_functional_coupler(mirror_coupler(out, plane, c))


def test_column_of():
    topo = build_topology(12, 12)
    plane = mirror_plane_for(topo)
    assert column_of(topo, plane, topo.qubit_id(0, 5, 0)) == 1
    assert column_of(topo, plane, topo.qubit_id(0, 6, 0)) == 1
    assert column_of(topo, plane, topo.qubit_id(0, 0, 0)) == 6
    assert column_of(topo, plane, topo.qubit_id(0, 11, 3)) == 6


def test_crossing_couplers_shape():
    topo = build_topology(4, 4)
    plane = mirror_plane_for(topo)
    crossing = crossing_couplers(topo, plane)
    assert len(crossing) == 16  # 4 rows x 4 horizontal indices
    for a, b in crossing:
        assert mirror_map(topo, plane, a) == b


def test_plane_validation():
    topo = build_topology(1, 3)
    with pytest.raises(ValueError, match="odd"):
        mirror_plane_for(topo)
    with pytest.raises(ValueError, match="equal width"):
        check_plane(build_topology(1, 4), MirrorPlane(1))
    with pytest.raises(ValueError):
        MirrorPlane(0)


def test_doc_roundtrip_is_canonical():
    topo = build_topology(2, 4, dead_qubits={5, 1}, dead_couplers=[(8, 12)])
    doc = topology_to_doc(topo)
    assert doc["dead_qubits"] == sorted(doc["dead_qubits"])
    again = topology_to_doc(topology_from_doc(json.loads(canonical_dumps(doc))))
    assert canonical_dumps(again) == canonical_dumps(doc)
    assert topology_from_doc(doc) == topo
