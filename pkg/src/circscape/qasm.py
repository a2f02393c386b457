"""OpenQASM 2.0 text for enumerated programs, and the inverse decoder.

The dialect is the subset this package emits::

    OPENQASM 2.0;
    include "qelib1.inc";        // optional when parsing
    qreg q[<n>];
    <gate>[(<angle>, ...)] q[<i>], q[<j>], ...;

Exactly one quantum register, no classical registers and no measurement
(readout is an implicit Z-basis measurement at the end). Angles are
arithmetic over decimal literals and ``pi`` with ``+ - * /`` and
parentheses. ``//`` comments and all whitespace are ignored. The parser only
accepts gates present in the active gate set.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .gatespace import (
    GateSet,
    Placement,
    Program,
    Topology,
    enumerate_placements,
    format_angle,
    program_from_indices,
)

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'
ANGLE_TOL = 1e-12


class QasmSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class QasmDoc:
    text: str
    num_qubits: int
    line_count: int


def _statement(gs: GateSet, p: Placement) -> str:
    g = gs[p.gate_index]
    if g.op is None:
        raise ValueError(f"gate {g.name} has no OpenQASM 2.0 spelling")
    head = g.op
    if g.params:
        head += "(" + ",".join(format_angle(t) for t in g.params) + ")"
    return head + " " + ",".join(f"q[{q}]" for q in p.qubits) + ";"


def emit_qasm(p: Program, gs: GateSet, n: int) -> QasmDoc:
    lines = [HEADER + f"qreg q[{n}];"]
    for pl in p.placements:
        if any(not 0 <= q < n for q in pl.qubits):
            raise ValueError(f"placement {pl} does not fit on {n} qubits")
        lines.append(_statement(gs, pl))
    return QasmDoc("\n".join(lines) + "\n", n, len(p.placements))


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*)
  | (?P<string>"[^"\n]*")
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>->|==|[;,()\[\]+\-*/{}<>=])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    value: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise QasmSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind, value = m.lastgroup, m.group()
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, value, line, pos - line_start + 1))
        for k, ch in enumerate(value):
            if ch == "\n":
                line += 1
                line_start = pos + k + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.cur
        raise QasmSyntaxError(msg, tok.line, tok.col)

    def take(self, value: str | None = None, kind: str | None = None) -> _Tok:
        tok = self.cur
        if (value is not None and tok.value != value) or (kind is not None and tok.kind != kind):
            want = repr(value) if value is not None else kind
            self.fail(f"expected {want}, found {tok.value or 'end of input'!r}")
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        if self.cur.value == value and self.cur.kind in ("op", "ident"):
            self.i += 1
            return True
        return False

    # angle := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
    def angle(self) -> float:
        v = self.term()
        while self.cur.value in ("+", "-") and self.cur.kind == "op":
            v = v + self.term() if self.take().value == "+" else v - self.term()
        return v

    def term(self) -> float:
        v = self.unary()
        while self.cur.value in ("*", "/") and self.cur.kind == "op":
            op = self.take()
            rhs = self.unary()
            if op.value == "*":
                v *= rhs
            elif rhs == 0:
                self.fail("division by zero in angle", op)
            else:
                v /= rhs
        return v

    def unary(self) -> float:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        tok = self.cur
        if tok.kind == "number":
            self.i += 1
            return float(tok.value)
        if tok.kind == "ident" and tok.value == "pi":
            self.i += 1
            return math.pi
        if self.accept("("):
            v = self.angle()
            self.take(")")
            return v
        self.fail(f"bad angle expression at {tok.value or 'end of input'!r}")

    def integer(self) -> int:
        tok = self.take(kind="number")
        if not tok.value.isdigit():
            self.fail(f"expected an integer, found {tok.value!r}", tok)
        return int(tok.value)


def parse_angle(text: str) -> float:
    """Evaluate an angle expression such as ``pi/4`` or ``-3*pi/2``."""
    p = _Parser(text)
    v = p.angle()
    p.take(kind="eof")
    return v


def parse_qasm(doc: QasmDoc | str, gs: GateSet, topo: Topology | None = None) -> Program:
    """Decode QASM text back into a :class:`Program` over the placements of
    ``gs`` on ``topo`` (full connectivity on the declared register by
    default)."""
    text = doc.text if isinstance(doc, QasmDoc) else doc
    p = _Parser(text)
    p.take("OPENQASM")
    version = p.take(kind="number")
    if version.value != "2.0":
        p.fail(f"unsupported OpenQASM version {version.value}", version)
    p.take(";")
    if p.cur.value == "include":
        p.take()
        p.take(kind="string")
        p.take(";")

    reg, n = None, None
    lookup: dict[Placement, int] = {}
    indices: list[int] = []
    while p.cur.kind != "eof":
        head = p.take(kind="ident")
        if head.value == "qreg":
            tok = p.cur
            name = p.take(kind="ident").value
            p.take("[")
            size = p.integer()
            p.take("]")
            p.take(";")
            if reg is not None:
                p.fail(f"register redeclared (already have {reg}[{n}])", tok)
            if size < 1:
                p.fail("register must hold at least one qubit", tok)
            reg, n = name, size
            if topo is None:
                topo = Topology.full(n)
            elif topo.num_qubits != n:
                p.fail(f"register has {n} qubits, topology {topo.name} has {topo.num_qubits}", tok)
            placements = enumerate_placements(gs, topo)
            lookup = {pl: k for k, pl in enumerate(placements)}
            continue
        if head.value in ("creg", "measure", "gate", "opaque", "if", "barrier", "reset"):
            p.fail(f"{head.value!r} is outside the supported subset", head)
        if reg is None:
            p.fail("gate applied before qreg declaration", head)

        params = []
        if p.accept("("):
            params.append(p.angle())
            while p.accept(","):
                params.append(p.angle())
            p.take(")")
        qubits = []
        while True:
            tok = p.cur
            name = p.take(kind="ident").value
            if name != reg:
                p.fail(f"unknown register {name!r}", tok)
            p.take("[")
            itok = p.cur
            q = p.integer()
            p.take("]")
            if q >= n:
                p.fail(f"qubit index {q} out of range for {reg}[{n}]", itok)
            qubits.append(q)
            if not p.accept(","):
                break
        p.take(";")

        gi = _match_gate(gs, head.value, params)
        if gi is None:
            shown = head.value + (f"({', '.join(map(repr, params))})" if params else "")
            p.fail(f"gate {shown} is not in gate set {gs.name}", head)
        if len(qubits) != gs[gi].arity:
            p.fail(f"gate {gs[gi].name} takes {gs[gi].arity} qubits, got {len(qubits)}", head)
        if len(set(qubits)) != len(qubits):
            p.fail(f"repeated qubit operand in {head.value}", head)
        key = Placement(gi, tuple(qubits))
        if key not in lookup:
            p.fail(f"placement {gs[gi].name} on {tuple(qubits)} violates topology {topo.name}", head)
        indices.append(lookup[key])
    if reg is None:
        p.fail("missing qreg declaration")
    return program_from_indices(indices, placements)


def _match_gate(gs: GateSet, op: str, params: list[float]) -> int | None:
    for gi, g in enumerate(gs):
        if g.op != op or len(g.params) != len(params):
            continue
        if all(abs(a - b) <= ANGLE_TOL for a, b in zip(g.params, params)):
            return gi
    return None
