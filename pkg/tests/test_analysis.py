import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import binomtest

from mirrorbench import (
    ScheduleConfig,
    check_symmetry,
    estimate_psym,
    hamming_profile,
    solve_exact,
    solve_sa,
    symmetric_extension,
    symmetry_filter,
    wilson_interval,
)
from mirrorbench.analysis import write_hamming_csv, write_psym_csv
from mirrorbench.embedding import ANTIFERRO, FERRO
from mirrorbench.seeds import derive_seed, stream
from mirrorbench.solvers import SampleEntry, SampleSet
from mirrorbench.embedding import energies_of

from helpers import cell_region, small_composite, two_spin_problem
from mirrorbench import build_composite, generate_instance


@given(st.integers(0, 2**32), st.sampled_from([FERRO, ANTIFERRO]), st.booleans())
@settings(max_examples=25, deadline=None)
def test_symmetric_extension_always_passes(seed, sign, with_fields):
    prob = small_composite(seed=seed, with_fields=with_fields, sign=sign)
    sigma = {q: (1 if (seed >> (i % 32)) & 1 else -1) for i, q in enumerate(prob.left_qubits)}
    verdict = check_symmetry(prob, symmetric_extension(prob, sigma))
    assert verdict.symmetric and verdict.violating_qubits == ()
    assert verdict.mode == ("ferro" if sign == FERRO else "antiferro")


def test_single_flip_names_the_qubit():
    prob = small_composite(seed=7, sign=FERRO)
    config = symmetric_extension(prob, {q: 1 for q in prob.left_qubits})
    flipped = prob.left_qubits[0]  # intra-cell index 0: not on a crossing pair
    config[flipped] = -config[flipped]
    verdict = check_symmetry(prob, config)
    assert not verdict.symmetric
    assert verdict.violating_qubits == (flipped,)


def test_exact_ground_state_verdict_frozen():
    # both minima of this seeded problem are symmetric (enumerated once and frozen)
    prob = small_composite(seed=42, strength=28, sign=FERRO)
    exact = solve_exact(prob)
    verdicts = [check_symmetry(prob, exact.config(e)).symmetric for e in exact.entries]
    assert verdicts == [True, True]


def test_check_requires_complete_config():
    prob = small_composite(seed=1)
    with pytest.raises(ValueError, match="missing qubit"):
        check_symmetry(prob, {q: 1 for q in prob.left_qubits})


# -- symmetry success probability ---------------------------------------------

def test_wilson_interval_values():
    low, high = wilson_interval(0, 1000)
    assert low == 0.0
    assert high == pytest.approx(0.0038267584855551234, abs=1e-12)
    ci = binomtest(0, 1000).proportion_ci(method="wilson")
    assert high == pytest.approx(ci.high, abs=1e-12)
    low1, high1 = wilson_interval(1000, 1000)
    assert high1 == 1.0 and low1 == pytest.approx(float(binomtest(1000, 1000).proportion_ci(method="wilson").low), abs=1e-12)
    with pytest.raises(ValueError):
        wilson_interval(2, 1)


def test_estimate_psym_all_symmetric_minima():
    problems = [small_composite(seed=s, strength=28) for s in (42, 5, 9)]
    samples = [solve_exact(p) for p in problems]
    est = estimate_psym(problems, samples)
    if est.successes == est.trials:  # seeds picked so ground states are symmetric
        assert est.p_hat == 1.0
    assert 0 <= est.ci_low <= est.p_hat <= est.ci_high <= 1


def test_estimate_psym_permutation_invariant():
    problems = [small_composite(seed=s) for s in range(6)]
    samples = [solve_sa(p, ScheduleConfig(sweeps=30), reads=10, seed=s) for s, p in enumerate(problems)]
    a = estimate_psym(problems, samples)
    order = [3, 0, 5, 1, 4, 2]
    b = estimate_psym([problems[i] for i in order], [samples[i] for i in order])
    assert a == b


def test_estimate_psym_batch_mismatch():
    problems = [small_composite(seed=1)]
    with pytest.raises(ValueError, match="sample sets"):
        estimate_psym(problems, [])


# -- hamming profiles -----------------------------------------------------------

def _synthetic_set(problem, spin_rows, occurrences=None, energy=0):
    """SampleSet with given spins and equal energies (all entries 'lowest')."""
    occurrences = occurrences or [1] * len(spin_rows)
    entries = tuple(
        SampleEntry(np.asarray(row, dtype=np.int8), energy, occ)
        for row, occ in zip(spin_rows, occurrences)
    )
    return SampleSet("synthetic", "0", sum(occurrences), 0, tuple(problem.qubits), entries)


def test_symmetric_extension_distance_zero():
    prob = small_composite(seed=3, sign=FERRO, rows=1, cols=2)
    ext = symmetric_extension(prob, {q: (-1) ** i for i, q in enumerate(prob.left_qubits)})
    spins = np.array([ext[q] for q in prob.qubits], dtype=np.int8)
    profile = hamming_profile([prob], [_synthetic_set(prob, [spins])], asymmetric_only=False)
    assert [s.mean for s in profile.per_column] == [0.0, 0.0]
    assert [s.qubit_count for s in profile.per_column] == [8, 8]


def test_antisymmetric_extension_distance_one():
    from mirrorbench.topology import mirror_map

    prob = small_composite(seed=3, sign=FERRO, rows=1, cols=2)
    config = {}
    for i, q in enumerate(prob.left_qubits):
        config[q] = (-1) ** i
        config[mirror_map(prob.topology, prob.plane, q)] = -((-1) ** i)
    spins = np.array([config[q] for q in prob.qubits], dtype=np.int8)
    profile = hamming_profile([prob], [_synthetic_set(prob, [spins])], asymmetric_only=False)
    assert [s.mean for s in profile.per_column] == [1.0, 1.0]


def test_uncorrelated_ensemble_statistics():
    prob = small_composite(seed=1)
    rng = stream(2718)
    problems, samples = [], []
    per_set = 50
    for _ in range(20):
        rows = rng.choice(np.array([-1, 1], dtype=np.int8), size=(per_set, prob.num_qubits))
        problems.append(prob)
        samples.append(_synthetic_set(prob, list(rows)))
    profile = hamming_profile(problems, samples, asymmetric_only=False)
    n = profile.solution_count
    assert n == 20 * per_set
    stat = profile.per_column[0]
    expected_se = 1 / (np.sqrt(stat.qubit_count) * 2 * np.sqrt(n))
    assert abs(stat.mean - 0.5) < 4 * expected_se
    assert 0.7 < stat.stderr / expected_se < 1.4


def test_uncoupled_halves_give_half_distance():
    # mirror strength 0: solutions on the two halves are uncorrelated
    region = cell_region(1, 2)
    problems, samples = [], []
    for k in range(50):
        inst = generate_instance(region, False, derive_seed(606, k))
        prob = build_composite(inst, 0, FERRO)
        problems.append(prob)
        samples.append(solve_sa(prob, ScheduleConfig(sweeps=50), reads=20, seed=k))
    profile = hamming_profile(problems, samples, asymmetric_only=True)
    for stat in profile.per_column:
        assert abs(stat.mean - 0.5) <= 3 * stat.stderr + 1e-9, stat


def test_hamming_distance_invariant_under_global_flip():
    prob = small_composite(seed=12, rows=1, cols=2)
    rng = stream(55)
    rows = rng.choice(np.array([-1, 1], dtype=np.int8), size=(10, prob.num_qubits))
    a = hamming_profile([prob], [_synthetic_set(prob, list(rows))], asymmetric_only=False)
    b = hamming_profile([prob], [_synthetic_set(prob, list(-rows))], asymmetric_only=False)
    assert [(s.mean, s.stderr) for s in a.per_column] == [(s.mean, s.stderr) for s in b.per_column]


def test_filter_error_names_the_filter():
    prob = small_composite(seed=3, sign=FERRO)
    ext = symmetric_extension(prob, {q: 1 for q in prob.left_qubits})
    spins = np.array([ext[q] for q in prob.qubits], dtype=np.int8)
    with pytest.raises(ValueError, match="asymmetric-only filter"):
        hamming_profile([prob], [_synthetic_set(prob, [spins])], asymmetric_only=True)


def test_profile_requires_homogeneous_batch():
    a = small_composite(seed=1, rows=1, cols=1)
    b = small_composite(seed=1, rows=1, cols=2)
    with pytest.raises(ValueError, match="one problem region"):
        hamming_profile([a, b], [solve_exact(a), _synthetic_set(b, [np.ones(b.num_qubits, dtype=np.int8)])])


# -- symmetry filter -------------------------------------------------------------

def test_symmetry_filter_identity_and_empty():
    prob = small_composite(seed=42, strength=28)
    exact = solve_exact(prob)  # both minima symmetric for this seed
    kept = symmetry_filter(prob, exact)
    assert kept.entries == exact.entries
    assert kept.reads == exact.reads

    asym = two_spin_problem(28)
    rows = [np.array([1, -1], dtype=np.int8), np.array([-1, 1], dtype=np.int8)]
    claimed = [int(energies_of(asym, r)[0]) for r in rows]
    ss = SampleSet(
        "synthetic", "0", 2, 0, tuple(asym.qubits),
        tuple(SampleEntry(r, e, 1) for r, e in zip(rows, claimed)),
    )
    assert symmetry_filter(asym, ss).entries == ()


def test_symmetry_filter_mixed_degenerate_minima():
    prob = two_spin_problem(0)  # all four configurations tie at energy 0
    exact = solve_exact(prob)
    assert len(exact.entries) == 4
    kept = symmetry_filter(prob, exact)
    assert {e.bitstring() for e in kept.entries} == {"00", "11"}
    assert kept.reads == 2
    # matches per-configuration verdicts
    for e in exact.entries:
        expected = check_symmetry(prob, exact.config(e)).symmetric
        assert (e.bitstring() in {"00", "11"}) == expected


def test_symmetry_filter_preserves_occurrences():
    prob = small_composite(seed=42, strength=28)
    ss = solve_sa(prob, ScheduleConfig(sweeps=200), reads=100, seed=5)
    kept = symmetry_filter(prob, ss)
    for e in kept.entries:
        assert e.occurrences >= 1
    assert kept.reads == sum(e.occurrences for e in kept.entries)


# -- csv emission ----------------------------------------------------------------

def test_csv_writers(tmp_path):
    problems = [small_composite(seed=s, strength=28) for s in (42, 5)]
    samples = [solve_exact(p) for p in problems]
    est = estimate_psym(problems, samples)
    psym_path = tmp_path / "psym.csv"
    write_psym_csv(psym_path, [(1, est)])
    text = psym_path.read_text()
    assert text.startswith("# schema: mirrorbench/psym/1\n")
    assert "width,trials,successes,p_hat,ci_low,ci_high" in text

    rows = []
    prob = small_composite(seed=3, rows=1, cols=2)
    rng = stream(1)
    spins = rng.choice(np.array([-1, 1], dtype=np.int8), size=(5, prob.num_qubits))
    profile = hamming_profile([prob], [_synthetic_set(prob, list(spins))], asymmetric_only=False)
    rows.append(("M+28", profile, "sa-abc", 28, 100))
    ham_path = tmp_path / "hamming.csv"
    write_hamming_csv(ham_path, rows, warnings=["group M+14 retained zero instances"])
    text = ham_path.read_text()
    assert "# warning: group M+14" in text
    assert text.splitlines()[1] == "group,column_index,mean,stderr,qubit_count,backend,mirror_strength,sweeps"
    assert any(line.startswith("M+28,1,") for line in text.splitlines())
