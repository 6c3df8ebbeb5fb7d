"""Numba kernels for the sampler backends.

All problems arrive as CSR-style adjacency (indptr, neighbor index, neighbor
coupling) plus a field vector, with couplings and fields in integer 1/28
units; energies are tracked as exact int64 throughout.  Each read re-seeds
the generator with its own derived seed, so aggregated results are identical
however reads are scheduled.
"""

from __future__ import annotations

import numpy as np
from numba import njit

JPERP_CAP = 30.0


@njit(cache=True)
def _direct_energy(indptr, nbr_idx, nbr_j, hvec, spins):
    # each edge is stored in both directions, so the pair sum halves exactly
    n = hvec.shape[0]
    field = np.int64(0)
    pair = np.int64(0)
    for i in range(n):
        si = np.int64(spins[i])
        field += hvec[i] * si
        row = np.int64(0)
        for e in range(indptr[i], indptr[i + 1]):
            row += nbr_j[e] * np.int64(spins[nbr_idx[e]])
        pair += si * row
    return -field - pair // 2


@njit(cache=True)
def _local_field(indptr, nbr_idx, nbr_j, hvec, spins, i):
    acc = hvec[i]
    for e in range(indptr[i], indptr[i + 1]):
        acc += nbr_j[e] * np.int64(spins[nbr_idx[e]])
    return acc


@njit(cache=True)
def sa_batch(indptr, nbr_idx, nbr_j, hvec, betas, read_seeds):
    """Independent single-spin-flip Metropolis restarts over a beta ladder.

    Returns (configs, energies): one row of +/-1 int8 spins and the exact
    final energy per read.  Downhill moves flip without consuming a random
    draw; uphill acceptance uses a per-sweep table over the (bounded, even)
    integer energy deltas.
    """
    n = hvec.shape[0]
    reads = read_seeds.shape[0]
    sweeps = betas.shape[0]
    configs = np.empty((reads, n), dtype=np.int8)
    energies = np.empty(reads, dtype=np.int64)
    half_max = np.int64(0)
    for i in range(n):
        reach = np.int64(abs(hvec[i]))
        for e in range(indptr[i], indptr[i + 1]):
            reach += abs(nbr_j[e])
        if reach > half_max:
            half_max = reach
    accept = np.empty((sweeps, half_max + 1), dtype=np.float64)
    for t in range(sweeps):
        for d in range(half_max + 1):
            accept[t, d] = np.exp(-betas[t] * 2.0 * d)
    local = np.empty(n, dtype=np.int64)
    for r in range(reads):
        np.random.seed(read_seeds[r])
        spins = np.empty(n, dtype=np.int8)
        for i in range(n):
            spins[i] = 1 if np.random.randint(0, 2) == 1 else -1
        for i in range(n):
            local[i] = _local_field(indptr, nbr_idx, nbr_j, hvec, spins, i)
        for t in range(sweeps):
            for i in range(n):
                d_e = 2 * np.int64(spins[i]) * local[i]
                if d_e <= 0 or np.random.random() < accept[t, d_e >> 1]:
                    flipped = -spins[i]
                    spins[i] = flipped
                    for e in range(indptr[i], indptr[i + 1]):
                        local[nbr_idx[e]] += 2 * nbr_j[e] * np.int64(flipped)
        configs[r] = spins
        energies[r] = _direct_energy(indptr, nbr_idx, nbr_j, hvec, spins)
    return configs, energies


@njit(cache=True)
def sqa_batch(indptr, nbr_idx, nbr_j, hvec, read_seeds, sweeps, beta, gamma_start, gamma_end, offsets, slices):
    """Path-integral Monte Carlo of the transverse-field model.

    The transverse field of qubit ``i`` follows ramp progress
    ``clamp(t/(sweeps-1) + offsets[i], 0, 1)`` at fixed inverse temperature
    ``beta``; adjacent imaginary-time slices couple with the standard
    strength -0.5*ln(tanh(beta*Gamma/slices)), capped to stay finite as the
    field vanishes.  The returned configuration is slice 0.
    """
    n = hvec.shape[0]
    reads = read_seeds.shape[0]
    configs = np.empty((reads, n), dtype=np.int8)
    energies = np.empty(reads, dtype=np.int64)
    jperp = np.empty(n, dtype=np.float64)
    local = np.empty((slices, n), dtype=np.int64)
    for r in range(reads):
        np.random.seed(read_seeds[r])
        spins = np.empty((slices, n), dtype=np.int8)
        for p in range(slices):
            for i in range(n):
                spins[p, i] = 1 if np.random.randint(0, 2) == 1 else -1
        for p in range(slices):
            for i in range(n):
                local[p, i] = _local_field(indptr, nbr_idx, nbr_j, hvec, spins[p], i)
        for t in range(sweeps):
            base = t / (sweeps - 1.0) if sweeps > 1 else 1.0
            for i in range(n):
                s = base + offsets[i]
                if s < 0.0:
                    s = 0.0
                elif s > 1.0:
                    s = 1.0
                gamma = gamma_start + s * (gamma_end - gamma_start)
                arg = beta * gamma / slices
                if arg < 1e-12:
                    jperp[i] = JPERP_CAP
                else:
                    val = -0.5 * np.log(np.tanh(arg))
                    jperp[i] = val if val < JPERP_CAP else JPERP_CAP
            for p in range(slices):
                up = p + 1 if p + 1 < slices else 0
                dn = p - 1 if p > 0 else slices - 1
                for i in range(n):
                    d_s = 2.0 * spins[p, i] * (
                        (beta / slices) * local[p, i]
                        + jperp[i] * (np.float64(spins[up, i]) + np.float64(spins[dn, i]))
                    )
                    if d_s <= 0.0 or np.random.random() < np.exp(-d_s):
                        flipped = -spins[p, i]
                        spins[p, i] = flipped
                        for e in range(indptr[i], indptr[i + 1]):
                            local[p, nbr_idx[e]] += 2 * nbr_j[e] * np.int64(flipped)
        configs[r] = spins[0]
        energies[r] = _direct_energy(indptr, nbr_idx, nbr_j, hvec, spins[0])
    return configs, energies


@njit(cache=True)
def gray_minima(indptr, nbr_idx, nbr_j, hvec):
    """Enumerate all 2^n configurations by Gray code with incremental energy
    updates; returns (minimum energy, bitmasks of every minimizer).

    Bit b of a mask set means spin -1 at position b; the all +1 configuration
    is mask 0.
    """
    n = hvec.shape[0]
    spins = np.ones(n, dtype=np.int8)
    e = _direct_energy(indptr, nbr_idx, nbr_j, hvec, spins)
    best = e
    cap = 64
    buf = np.empty(cap, dtype=np.uint64)
    buf[0] = np.uint64(0)
    count = 1
    mask = np.uint64(0)
    total = np.int64(1) << n
    for t in range(1, total):
        # flip the bit at the lowest set position of t
        p = 0
        tt = t
        while tt & 1 == 0:
            tt >>= 1
            p += 1
        e += 2 * np.int64(spins[p]) * _local_field(indptr, nbr_idx, nbr_j, hvec, spins, p)
        spins[p] = -spins[p]
        mask ^= np.uint64(1) << np.uint64(p)
        if e < best:
            best = e
            buf[0] = mask
            count = 1
        elif e == best:
            if count == cap:
                cap *= 2
                grown = np.empty(cap, dtype=np.uint64)
                grown[:count] = buf[:count]
                buf = grown
            buf[count] = mask
            count += 1
    return best, buf[:count].copy()


def warm_up() -> None:
    """Force-compile the kernels on a 2-spin toy problem."""
    indptr = np.array([0, 1, 2], dtype=np.int64)
    nbr_idx = np.array([1, 0], dtype=np.int64)
    nbr_j = np.array([28, 28], dtype=np.int64)
    hvec = np.zeros(2, dtype=np.int64)
    seeds = np.array([1], dtype=np.uint32)
    betas = np.array([1.0], dtype=np.float64)
    sa_batch(indptr, nbr_idx, nbr_j, hvec, betas, seeds)
    sqa_batch(indptr, nbr_idx, nbr_j, hvec, seeds, 2, 5.0, 28.0, 0.0, np.zeros(2), 4)
    gray_minima(indptr, nbr_idx, nbr_j, hvec)
