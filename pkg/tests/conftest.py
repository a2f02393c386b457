import itertools
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from circscape.gatespace import Topology, builtin_gate_set, enumerate_placements  # noqa: E402

STUDY_SETS = ("xccx", "hscx", "htcx", "ibm-native")

_ACCEPTANCE: list[tuple[int, str, bool, str]] = []


def record(number: int, name: str, passed: bool, detail: str = ""):
    _ACCEPTANCE.append((number, name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {name}" + (f" ({detail})" if detail else ""))


def naive_operator(matrix: np.ndarray, qubits, n: int) -> np.ndarray:
    """Full operator built entry by entry from the bit-level definition."""
    dim = 2**n
    k = len(qubits)
    full = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        local_in = 0
        for q in qubits:
            local_in = (local_in << 1) | ((col >> q) & 1)
        for local_out in range(2**k):
            row = col
            for pos, q in enumerate(qubits):
                bit = (local_out >> (k - 1 - pos)) & 1
                row = (row & ~(1 << q)) | (bit << q)
            full[row, col] = matrix[local_out, local_in]
    return full


def naive_reach(gs, topo, depth: int) -> np.ndarray:
    """Reachability by multiplying full operators for every program."""
    n = topo.num_qubits
    ops = [naive_operator(gs[p.gate_index].matrix, p.qubits, n) for p in enumerate_placements(gs, topo)]
    dim = 2**n
    out = np.zeros((dim, dim))
    for prog in itertools.product(range(len(ops)), repeat=depth):
        u = np.eye(dim, dtype=complex)
        for b in prog:
            u = ops[b] @ u
        out += np.abs(u.T) ** 2
    return out


@pytest.fixture
def full4():
    return Topology.full(4)


@pytest.fixture(params=STUDY_SETS)
def study_set(request):
    return builtin_gate_set(request.param)
