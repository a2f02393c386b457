"""End-to-end runs: configuration, enumeration, derived products, files.

A run computes ``R_0..R_L`` with one engine, derives expressibility,
circuit probability and complexity, checks conservation and symmetry
invariants, and writes whatever products were requested. Configuration is a
JSON document validated against ``schema/run_config.schema.json``.
"""

from __future__ import annotations

import hashlib
import json
import re
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from .gatespace import (
    Gate,
    GateSet,
    Topology,
    builtin_gate,
    builtin_gate_set,
    builtin_topology,
    count_programs,
    enumerate_placements,
    gate_uniform_weights,
)
from .heatmap import render_heatmap
from .io import atomic_write, write_matrix
from .metrics import KCircMatrix, MCircMatrix, empty_m_circ, k_circ, m_circ
from .qasm import parse_angle
from .reach import (
    DEFAULT_BUDGET,
    DEFAULT_EPS,
    DEFAULT_MAX_STATES,
    BudgetExceeded,
    ExprMatrix,
    ReachMatrix,
    bruteforce_work,
    cumulative_expressibility,
    expressibility,
    is_classical,
    reachability_bruteforce,
    reachability_series,
)

ENGINES = ("auto", "bruteforce", "dp", "matrix-power")
PRODUCTS = ("reach", "reach_normalized", "expr", "expr_cumulative", "mcirc", "kcirc")
CHECK_TOL = 1e-9


def load_schema() -> dict:
    text = resources.files("circscape").joinpath("schema/run_config.schema.json").read_text()
    return json.loads(text)


_GATE_SPEC = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\((.*)\))?\s*$")


def parse_gate_spec(spec: str) -> Gate:
    """``"H"``, ``"P(pi/4)"`` or ``"RX(1.5707963267948966)"`` to a built-in gate."""
    m = _GATE_SPEC.match(spec)
    if not m:
        raise ValueError(f"bad gate spec {spec!r}")
    name, args = m.groups()
    params = [parse_angle(a) for a in args.split(",")] if args else []
    return builtin_gate(name, params)


def _split_specs(text: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    out.append(cur)
    return [s for s in (x.strip() for x in out) if s]


def _gate_from_dict(d: dict) -> Gate:
    if "matrix" in d:
        m = np.array([[complex(re_, im) for re_, im in row] for row in d["matrix"]])
        arity = d.get("arity", int(np.log2(m.shape[0])))
        return Gate(d["name"], arity, m, d.get("weight", 1.0), d.get("qasm"))
    params = [parse_angle(p) if isinstance(p, str) else float(p) for p in d.get("params", [])]
    return builtin_gate(d["name"], params, d.get("weight", 1.0))


def resolve_gate_set(spec) -> GateSet:
    if isinstance(spec, GateSet):
        return spec
    if isinstance(spec, str):
        if "," not in spec and "(" not in spec and spec.lower() == spec:
            return builtin_gate_set(spec)
        return GateSet(tuple(parse_gate_spec(s) for s in _split_specs(spec)))
    gates = tuple(parse_gate_spec(g) if isinstance(g, str) else _gate_from_dict(g) for g in spec["gates"])
    return GateSet(gates, spec.get("name", ""))


def resolve_topology(spec, num_qubits: int) -> Topology:
    if isinstance(spec, Topology):
        return spec
    if spec is None or isinstance(spec, str):
        return builtin_topology(spec or "full", num_qubits)
    n = spec.get("num_qubits", num_qubits)
    if n != num_qubits:
        raise ValueError(f"topology declares {n} qubits, run uses {num_qubits}")
    return Topology(n, frozenset(tuple(e) for e in spec["edges"]), spec.get("name", "custom"))


@dataclass(frozen=True)
class OutputSpec:
    product: str
    format: str
    path: str
    depth: int | None = None


@dataclass
class RunConfig:
    gate_set: GateSet
    num_qubits: int
    max_depth: int
    topology: Topology
    engine: str = "auto"
    outputs: list[OutputSpec] = field(default_factory=list)
    out_dir: str | None = None
    eps: float = DEFAULT_EPS
    tie_tol: float = 1e-12
    budget: int = DEFAULT_BUDGET
    workers: int | None = None
    verify: bool = False
    max_states: int = DEFAULT_MAX_STATES

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise ValueError(f"unknown engine {self.engine!r}")
        if self.topology.num_qubits != self.num_qubits:
            raise ValueError("topology width differs from num_qubits")
        if self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")
        if self.engine == "matrix-power" and not is_classical(self.gate_set):
            raise ValueError(f"engine matrix-power requires a classical gate set; {self.gate_set.name} is not")
        for o in self.outputs:
            if o.product not in PRODUCTS:
                raise ValueError(f"unknown product {o.product!r}")

    @classmethod
    def from_dict(cls, d: dict, overrides: dict | None = None) -> RunConfig:
        """Build from a config document; non-None ``overrides`` win over file values."""
        d = dict(d)
        d.update({k: v for k, v in (overrides or {}).items() if v is not None})
        jsonschema.validate(d, load_schema())
        n = d["num_qubits"]
        gs = resolve_gate_set(d["gate_set"])
        topo = resolve_topology(d.get("topology"), n)
        prior = d.get("prior", "placement-uniform")
        if prior == "gate-uniform":
            gs = gs.with_weights(gate_uniform_weights(gs, topo))
        elif isinstance(prior, dict):
            gs = gs.with_weights(prior)
        outputs = [OutputSpec(o["product"], o["format"], o["path"], o.get("depth")) for o in d.get("outputs", [])]
        return cls(
            gate_set=gs,
            num_qubits=n,
            max_depth=d["max_depth"],
            topology=topo,
            engine=d.get("engine", "auto"),
            outputs=outputs,
            out_dir=d.get("out_dir"),
            eps=d.get("eps", DEFAULT_EPS),
            tie_tol=d.get("tie_tol", 1e-12),
            budget=d.get("budget", DEFAULT_BUDGET),
            workers=d.get("workers"),
            verify=d.get("verify", False),
        )

    @classmethod
    def from_file(cls, path, overrides: dict | None = None) -> RunConfig:
        return cls.from_dict(json.loads(Path(path).read_text()), overrides)

    @property
    def resolved_engine(self) -> str:
        if self.engine != "auto":
            return self.engine
        return "matrix-power" if is_classical(self.gate_set) else "dp"

    def estimated_work(self) -> int:
        """Upper bound on placement applications for the chosen engine."""
        B = len(enumerate_placements(self.gate_set, self.topology))
        n, L = self.num_qubits, self.max_depth
        dim = 2**n
        engine = self.resolved_engine
        if engine == "bruteforce":
            return bruteforce_work(B, L, n)
        if engine == "matrix-power":
            return B * dim + L * dim**3
        cap = dim if is_classical(self.gate_set) else self.max_states
        return dim * sum(B * min(B ** (k - 1), cap) for k in range(1, L + 1))


@dataclass
class RunResult:
    reach: list[ReachMatrix]
    expr: list[ExprMatrix]
    expr_cumulative: list[ExprMatrix]
    mcirc: MCircMatrix
    kcirc: KCircMatrix


@dataclass
class RunReport:
    engine: str
    program_counts: dict[int, int]
    timings: dict[str, float]
    checks: dict[str, bool]
    paths: list[str] = field(default_factory=list)
    checksums: dict[str, str] = field(default_factory=dict)
    result: RunResult | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "engine": self.engine,
            "program_counts": {str(k): v for k, v in self.program_counts.items()},
            "timings": self.timings,
            "checks": self.checks,
            "paths": self.paths,
            "checksums": self.checksums,
            "ok": self.ok,
        }


def _symmetric_gates(gs: GateSet) -> bool:
    return all(np.allclose(g.matrix, g.matrix.T, atol=1e-14) for g in gs)


def _invariant_checks(cfg: RunConfig, reach: list[ReachMatrix], mc: MCircMatrix) -> dict[str, bool]:
    checks = {}
    for r in reach:
        sums = r.entries.sum(axis=1)
        if r.is_integer:
            ok = all(int(s) == r.total for s in sums)
        else:
            ok = bool(np.all(np.abs(sums.astype(float) - r.total) <= 1e-6 * r.total))
        checks[f"conservation_R{r.depth}"] = ok
    if _symmetric_gates(cfg.gate_set):
        for r in reach:
            p = r.probabilities
            checks[f"symmetry_R{r.depth}"] = bool(np.abs(p - p.T).max() <= CHECK_TOL)
    target = 1 - 2.0**-cfg.max_depth
    checks["mcirc_row_sums"] = bool(np.all(np.abs(mc.entries.sum(axis=1) - target) <= CHECK_TOL))
    return checks


def _metadata(cfg: RunConfig, product: str, depth: int | None, normalized: bool) -> dict:
    return {
        "product": product,
        "gate_set": cfg.gate_set.name,
        "gates": [g.name for g in cfg.gate_set],
        "n": cfg.num_qubits,
        "L": cfg.max_depth if depth is None else depth,
        "topology": cfg.topology.name,
        "edges": sorted(map(list, cfg.topology.edges)),
        "normalized": normalized,
        "engine": cfg.resolved_engine,
    }


def default_outputs(cfg: RunConfig) -> list[OutputSpec]:
    out = []
    for d in range(cfg.max_depth + 1):
        out += [
            OutputSpec("reach", "json", f"reach_{d}.json", d),
            OutputSpec("reach_normalized", "svg", f"reach_{d}.svg", d),
            OutputSpec("expr", "json", f"expr_{d}.json", d),
            OutputSpec("expr", "svg", f"expr_{d}.svg", d),
        ]
    out += [
        OutputSpec("mcirc", "json", "mcirc.json"),
        OutputSpec("mcirc", "svg", "mcirc.svg"),
        OutputSpec("kcirc", "json", "kcirc.json"),
    ]
    return out


def _product(res: RunResult, o: OutputSpec, cfg: RunConfig) -> tuple[np.ndarray, dict, str, str]:
    """Matrix, metadata, palette and default scale for one output."""
    if o.product in ("reach", "reach_normalized", "expr", "expr_cumulative"):
        d = cfg.max_depth if o.depth is None else o.depth
        if d > cfg.max_depth:
            raise ValueError(f"output {o.path}: depth {d} exceeds max_depth {cfg.max_depth}")
        if o.product == "reach":
            r = res.reach[d]
            return r.entries, _metadata(cfg, "reach", d, False), "ramp", "log"
        if o.product == "reach_normalized":
            return res.reach[d].probabilities, _metadata(cfg, "reach", d, True), "ramp", "log"
        e = (res.expr if o.product == "expr" else res.expr_cumulative)[d]
        return e.entries, _metadata(cfg, o.product, d, False), "binary", "linear"
    if o.product == "mcirc":
        return res.mcirc.entries, _metadata(cfg, "mcirc", None, True), "ramp", "log"
    return res.kcirc.entries, _metadata(cfg, "kcirc", None, False), "ramp", "linear"


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def compute(cfg: RunConfig) -> tuple[RunResult, dict[str, float]]:
    timings = {}
    t0 = time.perf_counter()
    kwargs = {}
    engine = cfg.resolved_engine
    if engine == "dp":
        kwargs = {"workers": cfg.workers, "max_states": cfg.max_states}
    elif engine == "bruteforce":
        kwargs = {"workers": cfg.workers, "budget": cfg.budget}
    reach = reachability_series(cfg.gate_set, cfg.topology, cfg.max_depth, engine, **kwargs)
    timings["reach"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    expr = [expressibility(r, cfg.eps) for r in reach]
    cum = [cumulative_expressibility(expr[: k + 1]) for k in range(len(expr))]
    if cfg.max_depth == 0:
        mc = empty_m_circ(2**cfg.num_qubits, cfg.gate_set.name, cfg.topology.name, cfg.num_qubits)
    else:
        mc = m_circ(reach[1:])
    kc = k_circ(mc)
    timings["metrics"] = time.perf_counter() - t0
    return RunResult(reach, expr, cum, mc, kc), timings


def run(cfg: RunConfig) -> RunReport:
    """Compute every product for ``cfg``, check invariants, write outputs."""
    work = cfg.estimated_work()
    if work > cfg.budget:
        raise BudgetExceeded(
            f"estimated {work} placement applications with engine {cfg.resolved_engine} "
            f"exceeds budget {cfg.budget}"
        )
    counts = {d: count_programs(cfg.gate_set, cfg.topology, d) for d in range(cfg.max_depth + 1)}
    res, timings = compute(cfg)
    checks = _invariant_checks(cfg, res.reach, res.mcirc)

    if cfg.verify and cfg.resolved_engine != "bruteforce":
        t0 = time.perf_counter()
        B = len(enumerate_placements(cfg.gate_set, cfg.topology))
        for r in res.reach:
            if bruteforce_work(B, r.depth, cfg.num_qubits) > cfg.budget:
                break
            bf = reachability_bruteforce(cfg.gate_set, cfg.topology, r.depth, workers=cfg.workers)
            diff = np.abs(np.asarray(bf.entries, float) - np.asarray(r.entries, float)).max()
            checks[f"engine_matches_bruteforce_R{r.depth}"] = bool(diff <= CHECK_TOL)
        timings["verify"] = time.perf_counter() - t0

    report = RunReport(cfg.resolved_engine, counts, timings, checks, result=res)
    outputs = cfg.outputs or (default_outputs(cfg) if cfg.out_dir else [])
    t0 = time.perf_counter()
    for o in outputs:
        path = Path(o.path)
        if cfg.out_dir and not path.is_absolute():
            path = Path(cfg.out_dir) / path
        m, meta, palette, scale = _product(res, o, cfg)
        if o.format == "svg":
            title = f"{meta['product']} {cfg.gate_set.name} n={cfg.num_qubits} L={meta['L']} {cfg.topology.name}"
            render_heatmap(m, path, palette=palette, scale=scale, title=title)
        else:
            write_matrix(m, o.format, path, meta)
        report.paths.append(str(path))
        report.checksums[str(path)] = _sha256(path)
    timings["write"] = time.perf_counter() - t0
    if cfg.out_dir:
        summary = Path(cfg.out_dir) / "report.json"
        atomic_write(summary, json.dumps(report.to_dict(), indent=2) + "\n")
        report.paths.append(str(summary))
    return report
