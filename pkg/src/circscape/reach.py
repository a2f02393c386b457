"""Reachability and expressibility over every program of bounded depth.

Three routes compute the same reachability matrix ``R_L``:

* :func:`reachability_bruteforce` runs every program on every basis state
  (prefixes are shared through a depth-first walk, leaves are still visited
  one program at a time);
* :func:`reachability_dp` keeps, per initial state, a multiset of distinct
  statevectors with exact program counts and advances it one line at a time;
* :func:`matrix_power_reach` raises ``R_1`` to a power, which equals the true
  reachability only for basis-permutation (classical) gate sets.

``R[i, j]`` is the summed Z-basis probability of outcome ``j`` over all
programs started from ``|i>``; for classical sets it is an exact integer
count. When gates carry non-unit weights each program contributes the product
of its placement weights instead of 1.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Mapping, Sequence

import numpy as np

from .gatespace import GateSet, Placement, Topology, enumerate_placements, placement_weights
from .simulator import apply_matrix

DEFAULT_BUDGET = 10**8
DEFAULT_MAX_STATES = 2_000_000
DEFAULT_EPS = 1e-9
CLASSICAL_TOL = 1e-12
HASH_GRID = 1e12
WORKERS_ENV = "CIRCSCAPE_WORKERS"

_INT_LIMIT = 2**62


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed its work or memory budget."""


@dataclass(frozen=True, eq=False)
class ReachMatrix:
    """Reachability at one depth.

    ``entries`` are unnormalized (path counts or summed probabilities) unless
    ``normalized`` is set. ``base`` is the per-line normalizer: the number of
    placements, or the summed placement weight under a non-uniform prior.
    """

    entries: np.ndarray
    depth: int
    base: int | float
    normalized: bool = False
    num_qubits: int = 0
    gate_set: str = ""
    topology: str = ""
    stats: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def total(self) -> int | float:
        return self.base**self.depth

    @property
    def is_integer(self) -> bool:
        return self.entries.dtype.kind in "iuO"

    @property
    def probabilities(self) -> np.ndarray:
        if self.normalized:
            return np.asarray(self.entries, dtype=float)
        if self.entries.dtype == object:
            total = self.total
            return np.array([[float(v) / total for v in row] for row in self.entries])
        return self.entries / float(self.total)

    def normalize(self) -> ReachMatrix:
        if self.normalized:
            return self
        return ReachMatrix(
            self.probabilities, self.depth, self.base, True,
            self.num_qubits, self.gate_set, self.topology, self.stats,
        )

    def metadata(self) -> dict:
        return {
            "gate_set": self.gate_set,
            "n": self.num_qubits,
            "L": self.depth,
            "topology": self.topology,
            "normalized": self.normalized,
        }


@dataclass(frozen=True, eq=False)
class ExprMatrix:
    """Binary reachable/unreachable indicator; ``cumulative`` marks a union
    over all depths up to ``depth``."""

    entries: np.ndarray
    depth: int
    cumulative: bool = False

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def _map(func, items, workers: int) -> list:
    if workers == 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(func, items, chunksize=max(1, len(items) // (4 * workers))))


def is_classical(gs: GateSet) -> bool:
    """True iff every gate sends each basis state to a single basis state
    (each column has one entry of modulus 1). Phases are allowed since
    Z-basis statistics ignore them."""
    for g in gs:
        mod = np.abs(g.matrix)
        ones = np.abs(mod - 1.0) <= CLASSICAL_TOL
        zeros = mod <= CLASSICAL_TOL
        if not np.all(ones | zeros) or not np.all(ones.sum(axis=0) == 1):
            return False
    return True


def _uniform(weights: np.ndarray) -> bool:
    return bool(np.all(weights == 1.0))


def _line_base(weights: np.ndarray) -> int | float:
    return len(weights) if _uniform(weights) else float(weights.sum())


def _basis_maps(gs: GateSet, placements: Sequence[Placement], n: int) -> np.ndarray:
    """``maps[b, s]`` is the basis state that placement ``b`` sends ``s`` to."""
    eye = np.eye(2**n, dtype=complex)
    maps = np.empty((len(placements), 2**n), dtype=np.int64)
    for b, p in enumerate(placements):
        out = apply_matrix(eye, gs[p.gate_index].matrix, p.qubits, n)
        maps[b] = np.argmax(np.abs(out), axis=1)
    return maps


def _identity(dim: int, integer: bool) -> np.ndarray:
    return np.eye(dim, dtype=np.int64 if integer else float)


class _Compensated:
    """Vectorised Neumaier summation."""

    def __init__(self, shape):
        self.s = np.zeros(shape)
        self.c = np.zeros(shape)

    def add(self, x: np.ndarray):
        t = self.s + x
        big = np.abs(self.s) >= np.abs(x)
        self.c += np.where(big, (self.s - t) + x, (x - t) + self.s)
        self.s = t

    def value(self) -> np.ndarray:
        return self.s + self.c


def _bf_classical_item(first: int, maps: np.ndarray, weights: np.ndarray, depth: int) -> np.ndarray:
    dim = maps.shape[1]
    rows = np.arange(dim)
    integer = _uniform(weights)
    acc = np.zeros((dim, dim), dtype=np.int64 if integer else float)
    w = weights.astype(np.int64) if integer else weights
    all_rows = np.broadcast_to(rows, maps.shape)

    def walk(state, level, prefix):
        if level == depth - 1:
            nxt = maps[:, state]
            np.add.at(acc, (all_rows, nxt), np.broadcast_to((w * prefix)[:, None], maps.shape))
            return
        for b in range(len(maps)):
            walk(maps[b][state], level + 1, prefix * w[b])

    state = maps[first][rows]
    if depth == 1:
        acc[rows, state] += w[first]
    else:
        walk(state, 1, w[first])
    return acc


def _bf_quantum_item(
    first: int, mats: list, qubits: list, weights: np.ndarray, n: int, depth: int
) -> np.ndarray:
    dim = 2**n
    acc = _Compensated((dim, dim))

    def walk(psi, level, prefix):
        if level == depth:
            acc.add(prefix * (psi.real**2 + psi.imag**2))
            return
        for b in range(len(mats)):
            walk(apply_matrix(psi, mats[b], qubits[b], n), level + 1, prefix * weights[b])

    psi0 = np.eye(dim, dtype=complex)
    walk(apply_matrix(psi0, mats[first], qubits[first], n), 1, weights[first])
    return acc.value()


def bruteforce_work(num_placements: int, depth: int, num_qubits: int) -> int:
    """Placement applications performed by the brute-force walk."""
    return 2**num_qubits * sum(num_placements**k for k in range(1, depth + 1))


def reachability_bruteforce(
    gs: GateSet,
    topo: Topology,
    depth: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
    exact_classical: bool = True,
) -> ReachMatrix:
    """Enumerate every program of ``depth`` lines from every basis state.

    Classical gate sets are tracked as basis-index maps and accumulate exact
    integer counts unless ``exact_classical`` is False, in which case they go
    through the statevector kernel like any other set.
    """
    n = topo.num_qubits
    placements = enumerate_placements(gs, topo)
    B = len(placements)
    weights = placement_weights(gs, placements)
    base = _line_base(weights)
    dim = 2**n
    work = bruteforce_work(B, depth, n)
    if work > budget:
        raise BudgetExceeded(
            f"brute force needs {work} placement applications (budget {budget}); "
            "use reachability_dp instead"
        )
    classical = exact_classical and is_classical(gs)
    meta = dict(num_qubits=n, gate_set=gs.name, topology=topo.name)
    if depth == 0:
        return ReachMatrix(_identity(dim, classical or _uniform(weights)), 0, base, **meta)
    items = list(range(B))
    if classical:
        maps = _basis_maps(gs, placements, n)
        func = partial(_bf_classical_item, maps=maps, weights=weights, depth=depth)
        parts = _map(func, items, _resolve_workers(workers))
        out = parts[0].copy()
        for part in parts[1:]:
            out += part
        if out.dtype.kind == "i" and base**depth >= _INT_LIMIT:
            raise OverflowError("exact counts exceed int64")
    else:
        mats = [gs[p.gate_index].matrix for p in placements]
        qubits = [p.qubits for p in placements]
        func = partial(_bf_quantum_item, mats=mats, qubits=qubits, weights=weights, n=n, depth=depth)
        parts = _map(func, items, _resolve_workers(workers))
        acc = _Compensated((dim, dim))
        for part in parts:
            acc.add(part)
        out = acc.value()
    return ReachMatrix(out, depth, base, **meta)


def _state_keys(states: np.ndarray) -> np.ndarray:
    flat = states.view(np.float64)
    return np.round(flat * HASH_GRID).astype(np.int64)


def _dp_rows(
    initial: int,
    mats: list,
    qubits: list,
    weights: np.ndarray,
    n: int,
    depth: int,
    classical: bool,
    integer_counts: bool,
    max_states: int,
) -> tuple[list[np.ndarray], list[int]]:
    """Rows ``R_0[initial] .. R_depth[initial]`` and distinct-state counts per layer."""
    dim = 2**n
    states = np.zeros((1, dim), dtype=complex)
    states[0, initial] = 1.0
    counts = np.ones(1, dtype=np.int64 if integer_counts else float)
    w = weights.astype(np.int64) if integer_counts else weights
    rows, sizes = [], []

    def emit():
        if classical:
            row = np.zeros(dim, dtype=counts.dtype)
            np.add.at(row, np.argmax(np.abs(states), axis=1), counts)
        else:
            probs = states.real**2 + states.imag**2
            c = counts.astype(float)
            row = np.array([math.fsum(col) for col in (c[:, None] * probs).T])
        rows.append(row)
        sizes.append(len(states))

    emit()
    for _ in range(depth):
        new = np.stack([apply_matrix(states, m, q, n) for m, q in zip(mats, qubits)])
        new = new.reshape(-1, dim)
        new_counts = (w[:, None] * counts[None, :]).reshape(-1)
        _, first, inverse = np.unique(_state_keys(new), axis=0, return_index=True, return_inverse=True)
        inverse = inverse.reshape(-1)
        merged = np.zeros(len(first), dtype=new_counts.dtype)
        np.add.at(merged, inverse, new_counts)
        if len(first) > max_states:
            raise BudgetExceeded(
                f"dp holds {len(first)} distinct states for initial state {initial} "
                f"(limit {max_states})"
            )
        states, counts = new[first], merged
        emit()
    return rows, sizes


def reachability_dp_series(
    gs: GateSet,
    topo: Topology,
    max_depth: int,
    *,
    workers: int | None = None,
    max_states: int = DEFAULT_MAX_STATES,
) -> list[ReachMatrix]:
    """``[R_0, ..., R_max_depth]`` from one pass of the state-multiset DP.

    States merge only when equal amplitude by amplitude on a 1e-12 grid
    (no global-phase quotient), so the DP is an exact regrouping of the
    brute-force sum.
    """
    n = topo.num_qubits
    placements = enumerate_placements(gs, topo)
    weights = placement_weights(gs, placements)
    base = _line_base(weights)
    classical = is_classical(gs)
    integer_counts = _uniform(weights) and base**max_depth < _INT_LIMIT
    mats = [gs[p.gate_index].matrix for p in placements]
    qubits = [p.qubits for p in placements]
    func = partial(
        _dp_rows, mats=mats, qubits=qubits, weights=weights, n=n, depth=max_depth,
        classical=classical, integer_counts=integer_counts, max_states=max_states,
    )
    results = _map(func, list(range(2**n)), _resolve_workers(workers))
    series = []
    for d in range(max_depth + 1):
        entries = np.stack([rows[d] for rows, _ in results])
        stats = {"distinct_states": [sizes[d] for _, sizes in results]}
        series.append(
            ReachMatrix(entries, d, base, num_qubits=n, gate_set=gs.name, topology=topo.name, stats=stats)
        )
    return series


def reachability_dp(
    gs: GateSet,
    topo: Topology,
    depth: int,
    *,
    workers: int | None = None,
    max_states: int = DEFAULT_MAX_STATES,
) -> ReachMatrix:
    return reachability_dp_series(gs, topo, depth, workers=workers, max_states=max_states)[-1]


def transition_matrix(gs: GateSet, topo: Topology) -> ReachMatrix:
    """Depth-1 reachability, the generator for :func:`matrix_power_reach`."""
    return reachability_bruteforce(gs, topo, 1)


def _matpow(m: np.ndarray, l: int) -> np.ndarray:
    result = np.eye(m.shape[0], dtype=m.dtype)
    if m.dtype == object:
        result = result.astype(object)
    sq = m
    while l:
        if l & 1:
            result = result @ sq
        l >>= 1
        if l:
            sq = sq @ sq
    return result


def matrix_power_reach(r1: ReachMatrix, l: int) -> ReachMatrix:
    """``R_1^l`` by repeated squaring.

    Integer inputs stay exact: int64 while counts fit, Python integers
    beyond that.
    """
    if r1.depth != 1 or r1.normalized:
        raise ValueError("matrix_power_reach expects an unnormalized depth-1 matrix")
    if l < 0:
        raise ValueError("power must be non-negative")
    m = r1.entries
    if m.dtype.kind in "iu" and r1.base**l >= _INT_LIMIT:
        m = m.astype(object)
    entries = _matpow(m, l)
    return ReachMatrix(
        entries, l, r1.base, num_qubits=r1.num_qubits, gate_set=r1.gate_set, topology=r1.topology
    )


def reachability(
    gs: GateSet, topo: Topology, depth: int, engine: str = "auto", **kwargs
) -> ReachMatrix:
    return reachability_series(gs, topo, depth, engine, **kwargs)[-1]


def reachability_series(
    gs: GateSet, topo: Topology, max_depth: int, engine: str = "auto", **kwargs
) -> list[ReachMatrix]:
    """``[R_0, ..., R_max_depth]`` with the chosen engine.

    ``auto`` picks matrix powers for classical sets and the DP otherwise.
    """
    if engine == "auto":
        engine = "matrix-power" if is_classical(gs) else "dp"
    if engine == "matrix-power":
        if not is_classical(gs):
            raise ValueError(f"matrix-power engine requires a classical gate set, {gs.name} is not")
        r1 = transition_matrix(gs, topo)
        return [matrix_power_reach(r1, l) for l in range(max_depth + 1)]
    if engine == "dp":
        return reachability_dp_series(gs, topo, max_depth, **kwargs)
    if engine == "bruteforce":
        return [reachability_bruteforce(gs, topo, d, **kwargs) for d in range(max_depth + 1)]
    raise ValueError(f"unknown engine {engine!r}")


def expressibility(r: ReachMatrix, eps: float = DEFAULT_EPS) -> ExprMatrix:
    """Entry is 1 iff the normalized reachability exceeds ``eps``."""
    if not eps > 0:
        raise ValueError("eps must be positive")
    return ExprMatrix((r.probabilities > eps).astype(np.int8), r.depth)


def cumulative_expressibility(exprs: Sequence[ExprMatrix]) -> ExprMatrix:
    """Union of expressibility matrices: reachable within any listed depth."""
    if not exprs:
        raise ValueError("need at least one matrix")
    out = np.zeros_like(exprs[0].entries)
    for e in exprs:
        out |= e.entries
    return ExprMatrix(out, max(e.depth for e in exprs), True)


def expressibility_table(
    gs: GateSet,
    qubit_counts: Sequence[int],
    max_depth: int,
    *,
    cumulative: bool = True,
    eps: float = DEFAULT_EPS,
    engine: str = "auto",
) -> dict[tuple[int, int], ExprMatrix]:
    """``{(n, i): E_i^n}`` under full connectivity.

    Gates wider than ``n`` are dropped for that width, so a 3-qubit gate set
    still has a 2-qubit sub-system table. With ``cumulative`` each entry is
    the union over depths ``0..i``.
    """
    table = {}
    for n in qubit_counts:
        sub = gs.restricted_to(n)
        series = reachability_series(sub, Topology.full(n), max_depth, engine)
        exprs = [expressibility(r, eps) for r in series]
        for i in range(max_depth + 1):
            table[(n, i)] = cumulative_expressibility(exprs[: i + 1]) if cumulative else exprs[i]
    return table


@dataclass(frozen=True)
class BlockResult:
    num_qubits: int
    depth: int
    block: str
    matches: bool


@dataclass
class FractalReport:
    blocks: list[BlockResult]

    @property
    def mismatches(self) -> list[BlockResult]:
        return [b for b in self.blocks if not b.matches]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        bad = self.mismatches
        lines = [f"{len(self.blocks)} blocks checked, {len(bad)} mismatching"]
        lines += [f"  n={b.num_qubits} i={b.depth} block {b.block}" for b in bad]
        return "\n".join(lines)


def fractal_check(
    table: Mapping[tuple[int, int], ExprMatrix | np.ndarray],
    cases: Sequence[tuple[int, int]] | None = None,
) -> FractalReport:
    """Check the block recursion ``E_i^n = [[A, B], [B, A]]`` with
    ``A = E_i^{n-1}`` and ``B = E_{i-1}^{n-1}``.

    Rows and columns split on the highest qubit. ``cases`` lists ``(n, i)``
    pairs; by default every pair whose ``(n-1, i)`` and ``(n-1, i-1)``
    entries are present is checked.
    """
    def get(key):
        v = table[key]
        return v.entries if isinstance(v, ExprMatrix) else np.asarray(v)

    if cases is None:
        cases = sorted(
            (n, i) for (n, i) in table
            if i >= 1 and (n - 1, i) in table and (n - 1, i - 1) in table
        )
    else:
        for n, i in cases:
            missing = [k for k in ((n, i), (n - 1, i), (n - 1, i - 1)) if k not in table]
            if missing:
                raise KeyError(f"fractal check of (n={n}, i={i}) needs table entries {missing}")
    blocks = []
    for n, i in cases:
        e = get((n, i))
        a, b = get((n - 1, i)), get((n - 1, i - 1))
        h = 2 ** (n - 1)
        parts = {
            "top-left": (e[:h, :h], a),
            "top-right": (e[:h, h:], b),
            "bottom-left": (e[h:, :h], b),
            "bottom-right": (e[h:, h:], a),
        }
        for name, (got, want) in parts.items():
            blocks.append(BlockResult(n, i, name, bool(np.array_equal(got, want))))
    return FractalReport(blocks)
