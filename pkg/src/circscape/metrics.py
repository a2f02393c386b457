"""Circuit probability, circuit complexity and summary statistics.

Circuit probability weights depth ``i`` by ``2^-i`` and normalizes each
reachability matrix by its program count, so rows sum to ``1 - 2^-L``.
Circuit complexity follows from the coding-theorem relation
``K = -log2 M``; logarithms are base 2 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .reach import ReachMatrix

TIE_TOL = 1e-12
ROW_SUM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MCircMatrix:
    entries: np.ndarray
    max_depth: int
    gate_set: str = ""
    topology: str = ""
    num_qubits: int = 0

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class KCircMatrix:
    """Complexities in bits; unreachable entries hold ``inf`` and serialize as null."""

    entries: np.ndarray
    max_depth: int
    gate_set: str = ""
    topology: str = ""
    num_qubits: int = 0

    @property
    def reachable(self) -> np.ndarray:
        return np.isfinite(self.entries)


def m_circ(
    reach_by_depth: Sequence[ReachMatrix],
    placements_count: int | float | None = None,
    *,
    include_depth_zero: bool = False,
    r0: ReachMatrix | None = None,
) -> MCircMatrix:
    """Depth-weighted circuit probability ``sum_i 2^-i R_i / B^i`` for the
    given matrices, which must be depths ``1, 2, ..., L`` in order.

    ``placements_count`` overrides the per-line normalizer ``B`` carried by
    the matrices. ``include_depth_zero`` adds the identity contribution of an
    empty program (``r0``, or the identity), which the default sum excludes.
    """
    if not reach_by_depth:
        raise ValueError("need reachability matrices for depths 1..L")
    dims = {r.dim for r in reach_by_depth}
    if len(dims) != 1:
        raise ValueError(f"dimension mismatch: {sorted(dims)}")
    dim = dims.pop()
    for k, r in enumerate(reach_by_depth, start=1):
        if r.depth != k:
            raise ValueError(f"matrix {k - 1} has depth {r.depth}, expected {k}")
    out = np.zeros((dim, dim))
    for r in reach_by_depth:
        if placements_count is None:
            probs = r.probabilities
        else:
            probs = np.asarray(r.entries, dtype=float) / float(placements_count) ** r.depth
        out += 2.0 ** -r.depth * probs
    if include_depth_zero:
        out += r0.probabilities if r0 is not None else np.eye(dim)
    first = reach_by_depth[0]
    return MCircMatrix(out, len(reach_by_depth), first.gate_set, first.topology, first.num_qubits)


def empty_m_circ(dim: int, gate_set: str = "", topology: str = "", num_qubits: int = 0) -> MCircMatrix:
    """The empty sum, i.e. circuit probability at ``L = 0``."""
    return MCircMatrix(np.zeros((dim, dim)), 0, gate_set, topology, num_qubits)


def k_circ(m: MCircMatrix) -> KCircMatrix:
    e = m.entries
    out = np.full(e.shape, np.inf)
    pos = e > 0
    out[pos] = -np.log2(e[pos])
    return KCircMatrix(out, m.max_depth, m.gate_set, m.topology, m.num_qubits)


def m_circ_fixed_depth(r: ReachMatrix, total_programs: int | None = None) -> np.ndarray:
    """Ratio estimator: programs reaching each state over all programs of that length."""
    if r.normalized:
        raise ValueError("expected an unnormalized reachability matrix")
    total = r.total if total_programs is None else total_programs
    if total == 0:
        raise ValueError("total_programs must be non-zero")
    if r.entries.dtype == object:
        return np.array([[float(v) / total for v in row] for row in r.entries])
    return r.entries / float(total)


def shannon_entropy(p: np.ndarray) -> float:
    """Entropy in bits with ``0 log 0 = 0``."""
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        raise ValueError("probabilities must be non-negative")
    if abs(p.sum() - 1.0) > ROW_SUM_TOL:
        raise ValueError(f"distribution sums to {p.sum()!r}, not 1")
    nz = p[p > 0]
    return float(-(nz * np.log2(nz)).sum())


def row_entropy(r: ReachMatrix | np.ndarray, row: int) -> float:
    """Entropy of the outcome distribution from basis state ``row``.

    A :class:`ReachMatrix` is normalized first; a bare array must already
    hold probability rows.
    """
    probs = r.probabilities if isinstance(r, ReachMatrix) else np.asarray(r, dtype=float)
    return shannon_entropy(probs[row])


@dataclass(frozen=True, eq=False)
class TopologyComparison:
    """``diff = a - b``; a higher circuit probability means lower complexity."""

    diff: np.ndarray
    a_higher: int
    b_higher: int
    ties: int
    topology_a: str = ""
    topology_b: str = ""

    @property
    def mixed(self) -> bool:
        return self.a_higher > 0 and self.b_higher > 0

    def summary(self) -> dict:
        return {
            "topology_a": self.topology_a,
            "topology_b": self.topology_b,
            "a_higher": self.a_higher,
            "b_higher": self.b_higher,
            "ties": self.ties,
        }


def compare_topologies(m_a: MCircMatrix, m_b: MCircMatrix, tie_tol: float = TIE_TOL) -> TopologyComparison:
    if m_a.dim != m_b.dim:
        raise ValueError(f"dimension mismatch: {m_a.dim} vs {m_b.dim}")
    if m_a.max_depth != m_b.max_depth:
        raise ValueError(f"depth mismatch: {m_a.max_depth} vs {m_b.max_depth}")
    if m_a.gate_set != m_b.gate_set:
        raise ValueError(f"gate set mismatch: {m_a.gate_set} vs {m_b.gate_set}")
    diff = m_a.entries - m_b.entries
    return TopologyComparison(
        diff,
        int((diff > tie_tol).sum()),
        int((diff < -tie_tol).sum()),
        int((np.abs(diff) <= tie_tol).sum()),
        m_a.topology,
        m_b.topology,
    )
