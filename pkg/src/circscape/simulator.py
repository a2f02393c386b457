"""Dense statevector simulation with Z-basis readout.

Amplitude arrays may carry leading batch axes: ``amps[..., j]`` is the
amplitude of basis state ``j`` (qubit 0 = least significant bit). The gate
kernel works on a ``(2,)*n`` tensor view and contracts only the target axes,
so the full ``2^n x 2^n`` embedded unitary is never built; that construction
lives in :func:`embed_unitary` as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gatespace import GateSet, Placement, Program

NORM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class StateVector:
    num_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amps, dtype=complex)
        if a.shape != (2**self.num_qubits,):
            raise ValueError(f"expected {2**self.num_qubits} amplitudes, got shape {a.shape}")
        drift = abs(np.vdot(a, a).real - 1.0)
        if drift > NORM_TOL:
            raise ValueError(f"state norm deviates from 1 by {drift:.3g}")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "amps", a)


def basis_state(index: int, n: int) -> StateVector:
    if not 0 <= index < 2**n:
        raise ValueError(f"basis index {index} outside [0, {2**n})")
    a = np.zeros(2**n, dtype=complex)
    a[index] = 1.0
    return StateVector(n, a)


def apply_matrix(amps: np.ndarray, matrix: np.ndarray, qubits: Sequence[int], n: int) -> np.ndarray:
    """Apply ``matrix`` to ``qubits`` of every state in ``amps`` (last axis).

    ``qubits[0]`` is the most significant bit of the gate's local index.
    Returns a new array; the input is not modified.
    """
    k = len(qubits)
    if len(set(qubits)) != k:
        raise ValueError(f"repeated qubit in {tuple(qubits)}")
    for q in qubits:
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} outside [0, {n})")
    batch = amps.shape[:-1]
    lead = len(batch)
    t = amps.reshape(batch + (2,) * n)
    # qubit q lives on tensor axis n-1-q (C order puts the high bit first)
    src = [lead + n - 1 - q for q in qubits]
    dst = list(range(lead + n - k, lead + n))
    t = np.moveaxis(t, src, dst)
    moved = t.shape
    t = t.reshape(moved[: lead + n - k] + (2**k,)) @ matrix.T
    t = np.moveaxis(t.reshape(moved), dst, src)
    return t.reshape(amps.shape)


def apply_placement(state: StateVector, placement: Placement, gs: GateSet) -> StateVector:
    gate = gs[placement.gate_index]
    new = apply_matrix(state.amps, gate.matrix, placement.qubits, state.num_qubits)
    return StateVector(state.num_qubits, new)


def run_program(p: Program, initial: StateVector, gs: GateSet) -> StateVector:
    amps = initial.amps
    for pl in p.placements:
        amps = apply_matrix(amps, gs[pl.gate_index].matrix, pl.qubits, initial.num_qubits)
    return StateVector(initial.num_qubits, amps)


def measure_probs(state: StateVector) -> np.ndarray:
    p = np.abs(state.amps) ** 2
    return p


def embed_unitary(matrix: np.ndarray, qubits: Sequence[int], n: int) -> np.ndarray:
    """Full ``2^n x 2^n`` operator of ``matrix`` acting on ``qubits``.

    Built as ``matrix (x) I`` on the ordering (targets high, rest low) and
    then conjugated by the basis permutation onto the real qubit positions.
    """
    k = len(qubits)
    rest = [q for q in range(n) if q not in qubits]
    big = np.kron(matrix, np.eye(2 ** (n - k)))
    # local index bit layout, most significant first: qubits[0..k-1], rest[-1..0]
    layout = list(qubits) + rest[::-1]
    perm = np.empty(2**n, dtype=np.int64)
    for local in range(2**n):
        g = 0
        for pos, q in enumerate(layout):
            if (local >> (n - 1 - pos)) & 1:
                g |= 1 << q
        perm[local] = g
    full = np.zeros((2**n, 2**n), dtype=complex)
    full[np.ix_(perm, perm)] = big
    return full
