"""Gates, gate sets, coupling topologies and the combinatorics of program space.

A *placement* is one gate bound to an ordered tuple of qubits, i.e. one line of
QASM. A *program* is a fixed-length sequence of placements, identified by its
description number: the big-endian base-``B`` digit string of placement
indices, where ``B`` is the number of placements available per line.

Bit convention used across the package: qubit ``k`` is bit ``k`` of a basis
index (qubit 0 is the least significant bit). Inside a gate matrix the first
qubit of the placement tuple is the most significant local bit, so ``CX`` on
``(c, t)`` uses the textbook 4x4 matrix with ``c`` as control.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

UNITARY_TOL = 1e-12

_S2 = 1.0 / math.sqrt(2.0)

_FIXED = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "H": np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "T": np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex),
    "CX": np.eye(4, dtype=complex)[[0, 1, 3, 2]],
    "CCX": np.eye(8, dtype=complex)[[0, 1, 2, 3, 4, 5, 7, 6]],
}


def _phase(theta: float) -> np.ndarray:
    return np.array([[1, 0], [0, np.exp(1j * theta)]], dtype=complex)


def _rx(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


_PARAMETRIC = {"P": _phase, "RX": _rx}

BUILTIN_GATES = tuple(_FIXED) + tuple(_PARAMETRIC)


@dataclass(frozen=True, eq=False)
class Gate:
    """A named unitary acting on ``arity`` qubits.

    ``op`` is the lowercase OpenQASM 2.0 mnemonic (``None`` for custom gates
    that have no QASM spelling) and ``params`` holds its angle arguments.
    """

    name: str
    arity: int
    matrix: np.ndarray
    weight: float = 1.0
    op: str | None = None
    params: tuple[float, ...] = ()

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if self.arity < 1:
            raise ValueError(f"gate {self.name!r}: arity must be >= 1")
        dim = 2**self.arity
        if m.shape != (dim, dim):
            raise ValueError(
                f"gate {self.name!r}: matrix shape {m.shape} does not match arity {self.arity}"
            )
        err = np.abs(m @ m.conj().T - np.eye(dim)).max()
        if err > UNITARY_TOL:
            raise ValueError(f"gate {self.name!r} is not unitary (max deviation {err:.3g})")
        if not self.weight > 0:
            raise ValueError(f"gate {self.name!r}: weight must be positive")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))

    def with_weight(self, weight: float) -> Gate:
        return Gate(self.name, self.arity, self.matrix, weight, self.op, self.params)

    def __repr__(self):
        return f"Gate({self.name!r}, arity={self.arity})"


def format_angle(theta: float) -> str:
    """Render an angle as an exact fraction of pi where possible (``pi/4``,
    ``-3*pi/2``), otherwise as a 17-significant-digit decimal."""
    if theta == 0:
        return "0"
    ratio = theta / math.pi
    for den in (1, 2, 3, 4, 6, 8, 12, 16, 32, 64):
        num = round(ratio * den)
        if num != 0 and abs(num * math.pi / den - theta) <= 4e-16 * max(1.0, abs(theta)):
            sign = "-" if num < 0 else ""
            num = abs(num)
            head = "pi" if num == 1 else f"{num}*pi"
            return f"{sign}{head}" if den == 1 else f"{sign}{head}/{den}"
    return f"{theta:.17g}"


def builtin_gate(name: str, params: Sequence[float] | None = None, weight: float = 1.0) -> Gate:
    """Return one of the standard gates ``X, H, S, T, CX, CCX, P, RX``.

    ``P`` and ``RX`` take exactly one angle in radians; their gate name embeds
    the angle, e.g. ``builtin_gate("P", [pi/4]).name == "P(pi/4)"``.
    """
    key = name.upper()
    params = list(params or [])
    if key in _FIXED:
        if params:
            raise ValueError(f"gate {key} takes no parameters, got {len(params)}")
        m = _FIXED[key]
        return Gate(key, int(math.log2(m.shape[0])), m, weight, key.lower())
    if key in _PARAMETRIC:
        if len(params) != 1:
            raise ValueError(f"gate {key} takes exactly one angle, got {len(params)}")
        theta = float(params[0])
        return Gate(
            f"{key}({format_angle(theta)})", 1, _PARAMETRIC[key](theta), weight, key.lower(), (theta,)
        )
    raise ValueError(f"unknown gate {name!r}; expected one of {', '.join(BUILTIN_GATES)}")


@dataclass(frozen=True)
class GateSet:
    gates: tuple[Gate, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if not self.gates:
            raise ValueError("gate set is empty")
        names = [g.name for g in self.gates]
        dup = {n for n in names if names.count(n) > 1}
        if dup:
            raise ValueError(f"duplicate gate names in set: {sorted(dup)}")
        if not self.name:
            object.__setattr__(self, "name", "{" + ",".join(names) + "}")

    def __len__(self):
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __getitem__(self, i: int) -> Gate:
        return self.gates[i]

    @property
    def arities(self) -> list[int]:
        return [g.arity for g in self.gates]

    @property
    def max_arity(self) -> int:
        return max(self.arities)

    def index(self, name: str) -> int:
        for i, g in enumerate(self.gates):
            if g.name == name:
                return i
        raise KeyError(name)

    def with_weights(self, weights: dict[str, float]) -> GateSet:
        unknown = set(weights) - {g.name for g in self.gates}
        if unknown:
            raise KeyError(f"weights given for unknown gates: {sorted(unknown)}")
        return GateSet(
            tuple(g.with_weight(weights[g.name]) if g.name in weights else g for g in self.gates),
            self.name,
        )

    def restricted_to(self, num_qubits: int) -> GateSet:
        """Drop gates wider than ``num_qubits`` (used for sub-system tables)."""
        kept = tuple(g for g in self.gates if g.arity <= num_qubits)
        if not kept:
            raise ValueError(f"no gate of {self.name} fits on {num_qubits} qubits")
        return GateSet(kept, self.name)


def _pi(k: int) -> float:
    return math.pi / k


BUILTIN_GATE_SETS = {
    "xccx": lambda: GateSet((builtin_gate("X"), builtin_gate("CCX")), "xccx"),
    "hscx": lambda: GateSet((builtin_gate("H"), builtin_gate("S"), builtin_gate("CX")), "hscx"),
    "htcx": lambda: GateSet((builtin_gate("H"), builtin_gate("T"), builtin_gate("CX")), "htcx"),
    "ibm-native": lambda: GateSet(
        (builtin_gate("P", [_pi(4)]), builtin_gate("RX", [_pi(2)]), builtin_gate("CX")), "ibm-native"
    ),
}


def builtin_gate_set(name: str) -> GateSet:
    try:
        return BUILTIN_GATE_SETS[name]()
    except KeyError:
        raise ValueError(
            f"unknown gate set {name!r}; expected one of {', '.join(BUILTIN_GATE_SETS)}"
        ) from None


@dataclass(frozen=True)
class Topology:
    """Undirected coupling graph on ``num_qubits`` qubits."""

    num_qubits: int
    edges: frozenset[tuple[int, int]]
    name: str = "custom"

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("topology needs at least one qubit")
        norm = set()
        for e in self.edges:
            a, b = (int(x) for x in e)
            if a == b:
                raise ValueError(f"self-loop on qubit {a}")
            for q in (a, b):
                if not 0 <= q < self.num_qubits:
                    raise ValueError(f"edge endpoint {q} outside [0, {self.num_qubits})")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def full(cls, n: int) -> Topology:
        return cls(n, frozenset(itertools.combinations(range(n), 2)), "full")

    @classmethod
    def line(cls, n: int, name: str = "line") -> Topology:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)), name)

    @property
    def is_full(self) -> bool:
        return len(self.edges) == math.comb(self.num_qubits, 2)

    def connected(self, qubits: Iterable[int]) -> bool:
        """True iff the induced subgraph on ``qubits`` is connected."""
        nodes = set(qubits)
        if len(nodes) <= 1:
            return True
        start = next(iter(nodes))
        seen, todo = {start}, [start]
        while todo:
            a = todo.pop()
            for b in nodes - seen:
                if (min(a, b), max(a, b)) in self.edges:
                    seen.add(b)
                    todo.append(b)
        return seen == nodes

    def to_dict(self) -> dict:
        return {"name": self.name, "num_qubits": self.num_qubits, "edges": sorted(map(list, self.edges))}


IBM_T_EDGES = ((0, 1), (1, 2), (1, 3), (3, 4))
IBM_L_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4))


def builtin_topology(name: str, num_qubits: int) -> Topology:
    """``full`` for any width; ``ibm-t`` and ``ibm-l`` are 5-qubit devices."""
    if name == "full":
        return Topology.full(num_qubits)
    edges = {"ibm-t": IBM_T_EDGES, "ibm-l": IBM_L_EDGES}.get(name)
    if edges is None:
        raise ValueError(f"unknown topology {name!r}; expected full, ibm-t or ibm-l")
    if num_qubits != 5:
        raise ValueError(f"topology {name} is defined on 5 qubits, not {num_qubits}")
    return Topology(5, frozenset(edges), name)


class Placement(NamedTuple):
    gate_index: int
    qubits: tuple[int, ...]


def enumerate_placements(gs: GateSet, topo: Topology) -> list[Placement]:
    """All placements in canonical order: gate-set order, then lexicographic
    ordered qubit tuples. Multi-qubit tuples must induce a connected subgraph
    of the topology (for arity 2: the pair is an edge, in either direction)."""
    n = topo.num_qubits
    out = []
    for gi, g in enumerate(gs):
        if g.arity > n:
            raise ValueError(f"gate {g.name} needs {g.arity} qubits, topology has {n}")
        for qs in itertools.permutations(range(n), g.arity):
            if g.arity == 1 or topo.is_full or topo.connected(qs):
                out.append(Placement(gi, qs))
    return out


def placement_weights(gs: GateSet, placements: Sequence[Placement]) -> np.ndarray:
    return np.array([gs[p.gate_index].weight for p in placements], dtype=float)


def gate_uniform_weights(gs: GateSet, topo: Topology) -> dict[str, float]:
    """Per-gate weights under which every *gate* is drawn with probability
    1/|G| per line, spread evenly over that gate's placements."""
    counts: dict[int, int] = {}
    for p in enumerate_placements(gs, topo):
        counts[p.gate_index] = counts.get(p.gate_index, 0) + 1
    return {gs[i].name: 1.0 / c for i, c in counts.items()}


def count_programs(gs: GateSet, topo: Topology, depth: int) -> int:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    return len(enumerate_placements(gs, topo)) ** depth


class GrowthRow(NamedTuple):
    num_qubits: int
    depth: int
    count: int


def growth_table(
    arity_profile: Sequence[int], max_qubits: int, max_depth: int, min_qubits: int = 1
) -> list[GrowthRow]:
    """Number of programs for every ``(n, L)`` under full connectivity.

    Only the gate arities matter. Gates wider than ``n`` contribute no
    placements on that row.
    """
    if not arity_profile or min(arity_profile) < 1:
        raise ValueError("arity profile must be non-empty positive integers")
    if max(arity_profile) > max_qubits:
        raise ValueError("widest gate exceeds max_qubits")
    rows = []
    for n in range(min_qubits, max_qubits + 1):
        per_line = sum(math.perm(n, k) for k in arity_profile)
        for depth in range(max_depth + 1):
            rows.append(GrowthRow(n, depth, per_line**depth))
    return rows


@dataclass(frozen=True)
class Program:
    """A placement sequence together with its digit string in base ``base``."""

    placements: tuple[Placement, ...]
    indices: tuple[int, ...]
    base: int = field(repr=False)

    @property
    def depth(self) -> int:
        return len(self.indices)

    @property
    def id(self) -> int:
        return id_from_program(self)


def program_from_id(pid: int, depth: int, placements: Sequence[Placement]) -> Program:
    base = len(placements)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if not 0 <= pid < base**depth:
        raise ValueError(f"program id {pid} outside [0, {base}^{depth})")
    digits = [0] * depth
    for k in range(depth - 1, -1, -1):
        pid, digits[k] = divmod(pid, base)
    return Program(tuple(placements[d] for d in digits), tuple(digits), base)


def id_from_program(p: Program) -> int:
    pid = 0
    for d in p.indices:
        if not 0 <= d < p.base:
            raise ValueError(f"placement index {d} outside [0, {p.base})")
        pid = pid * p.base + d
    return pid


def program_from_indices(indices: Sequence[int], placements: Sequence[Placement]) -> Program:
    base = len(placements)
    for d in indices:
        if not 0 <= d < base:
            raise ValueError(f"placement index {d} outside [0, {base})")
    return Program(tuple(placements[d] for d in indices), tuple(indices), base)


def iter_programs(placements: Sequence[Placement], depth: int) -> Iterator[Program]:
    """Every program of the given depth, in description-number order."""
    base = len(placements)
    for digits in itertools.product(range(base), repeat=depth):
        yield Program(tuple(placements[d] for d in digits), digits, base)
