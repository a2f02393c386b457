"""Self-checks run by ``circscape check``.

Each check returns ``(name, passed, detail)``. They cover the kernel oracle,
engine agreement, exact classical composition, conservation, QASM round
trips and a handful of reference anchors on the 4-qubit full-connectivity
matrices.
"""

from __future__ import annotations

from typing import Callable, Iterator

import numpy as np

from .gatespace import (
    BUILTIN_GATE_SETS,
    Topology,
    builtin_gate_set,
    count_programs,
    enumerate_placements,
    iter_programs,
)
from .qasm import emit_qasm, parse_qasm
from .reach import (
    is_classical,
    matrix_power_reach,
    reachability_bruteforce,
    reachability_dp,
    transition_matrix,
)
from .simulator import apply_matrix, embed_unitary

Check = tuple[str, bool, str]

# (gate set, depth, row, col, value) on 4 qubits, full connectivity
ANCHORS = (
    ("xccx", 1, 0, 0, 24),
    ("xccx", 2, 0, 0, 580),
    ("xccx", 3, 0, 0, 14112),
    ("xccx", 3, 15, 15, 2352),
    ("htcx", 1, 0, 0, 18.0),
    ("htcx", 1, 3, 7, 2.5),
    ("htcx", 2, 0, 0, 327.0),
    ("htcx", 2, 15, 15, 87.0),
)


def check_kernel(n: int = 3) -> Check:
    worst = 0.0
    rng = np.random.default_rng(7)
    psi = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    psi /= np.linalg.norm(psi)
    for name in BUILTIN_GATE_SETS:
        gs = builtin_gate_set(name)
        for p in enumerate_placements(gs, Topology.full(n)):
            m = gs[p.gate_index].matrix
            got = apply_matrix(psi, m, p.qubits, n)
            want = embed_unitary(m, p.qubits, n) @ psi
            worst = max(worst, float(np.abs(got - want).max()))
    return "kernel_matches_embedded_unitary", worst <= 1e-12, f"max deviation {worst:.2e}"


def check_engines(n: int = 3, depth: int = 2) -> Check:
    worst = 0.0
    for name in BUILTIN_GATE_SETS:
        gs = builtin_gate_set(name)
        topo = Topology.full(n)
        for d in range(depth + 1):
            bf = reachability_bruteforce(gs, topo, d)
            dp = reachability_dp(gs, topo, d)
            worst = max(worst, float(np.abs(np.asarray(bf.entries, float) - dp.entries).max()))
    return "dp_matches_bruteforce", worst <= 1e-9, f"max deviation {worst:.2e}"


def check_classical_powers() -> Check:
    gs, topo = builtin_gate_set("xccx"), Topology.full(4)
    r1 = transition_matrix(gs, topo)
    bad = [
        l for l in (2, 3)
        if not np.array_equal(matrix_power_reach(r1, l).entries, reachability_bruteforce(gs, topo, l).entries)
    ]
    return "classical_matrix_power_identity", not bad and is_classical(gs), f"mismatch at {bad}" if bad else "exact"


def check_conservation() -> Check:
    bad = []
    for name in BUILTIN_GATE_SETS:
        gs, topo = builtin_gate_set(name), Topology.full(3)
        for d in range(3):
            r = reachability_dp(gs, topo, d)
            sums = r.entries.sum(axis=1).astype(float)
            if np.abs(sums - r.total).max() > 1e-6 * r.total:
                bad.append((name, d))
    return "row_sum_conservation", not bad, f"failing {bad}" if bad else "all rows"


def check_counts() -> Check:
    c = count_programs(builtin_gate_set("xccx"), Topology.full(4), 3)
    return "program_count_xccx_n4_L3", c == 21952, str(c)


def check_qasm(n: int = 3, depth: int = 2) -> Check:
    total = 0
    for name in BUILTIN_GATE_SETS:
        gs = builtin_gate_set(name)
        pl = enumerate_placements(gs, Topology.full(n))
        for prog in iter_programs(pl, depth):
            back = parse_qasm(emit_qasm(prog, gs, n), gs)
            if back.indices != prog.indices:
                return "qasm_round_trip", False, f"{name} id {prog.id}"
            total += 1
    return "qasm_round_trip", True, f"{total} programs"


def check_anchors() -> Check:
    cache = {}
    bad = []
    for name, depth, i, j, want in ANCHORS:
        key = (name, depth)
        if key not in cache:
            cache[key] = reachability_bruteforce(builtin_gate_set(name), Topology.full(4), depth)
        got = cache[key].entries[i, j]
        if abs(float(got) - want) > 1e-9:
            bad.append(f"{name} R{depth}[{i}][{j}]={got}")
    return "reference_anchors", not bad, ", ".join(bad) or f"{len(ANCHORS)} anchors"


ALL_CHECKS: tuple[Callable[[], Check], ...] = (
    check_counts,
    check_kernel,
    check_engines,
    check_classical_powers,
    check_conservation,
    check_qasm,
    check_anchors,
)


def run_checks() -> Iterator[Check]:
    for fn in ALL_CHECKS:
        try:
            yield fn()
        except Exception as exc:  # a crashing check is a failing check
            yield fn.__name__, False, f"{type(exc).__name__}: {exc}"
