"""Command line entry point.

Subcommands: ``enumerate`` (full pipeline), ``count`` (growth table),
``qasm`` (emit a program by id), ``diff`` (topology comparison) and
``check`` (invariant suite). The worker count defaults to the
``CIRCSCAPE_WORKERS`` environment variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import jsonschema
import numpy as np

from .checks import run_checks
from .gatespace import enumerate_placements, growth_table, program_from_id
from .heatmap import render_heatmap
from .io import atomic_write, write_matrix
from .metrics import compare_topologies
from .pipeline import RunConfig, compute, resolve_gate_set, resolve_topology, run
from .qasm import emit_qasm
from .reach import BudgetExceeded


def _config(args) -> RunConfig:
    overrides = {
        "gate_set": args.gates,
        "num_qubits": args.qubits,
        "max_depth": args.depth,
        "topology": args.topology,
        "engine": args.engine,
        "out_dir": args.out_dir,
        "workers": args.workers,
    }
    if args.config:
        return RunConfig.from_file(args.config, overrides)
    return RunConfig.from_dict({}, overrides)


def _add_run_flags(p: argparse.ArgumentParser, topology: bool = True):
    p.add_argument("--config", help="JSON run configuration")
    p.add_argument("--gates", help="built-in set name or comma list such as 'P(pi/4),RX(pi/2),CX'")
    p.add_argument("--qubits", type=int)
    p.add_argument("--depth", type=int)
    if topology:
        p.add_argument("--topology", help="full, ibm-t or ibm-l")
    p.add_argument("--engine", choices=["auto", "bruteforce", "dp", "matrix-power"])
    p.add_argument("--out-dir")
    p.add_argument("--workers", type=int)


def cmd_enumerate(args) -> int:
    cfg = _config(args)
    if args.verify:
        cfg.verify = True
    report = run(cfg)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.ok else 1


def cmd_count(args) -> int:
    if args.arities:
        arities = [int(a) for a in args.arities.split(",")]
    else:
        arities = resolve_gate_set(args.gates or "xccx").arities
    rows = growth_table(arities, args.max_qubits, args.max_depth, args.min_qubits)
    if args.format == "json":
        text = json.dumps({"arities": arities, "rows": [r._asdict() for r in rows]}, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["num_qubits", "depth", "count"])
        w.writerows(rows)
        text = buf.getvalue()
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_qasm(args) -> int:
    gs = resolve_gate_set(args.gates)
    topo = resolve_topology(args.topology, args.qubits)
    placements = enumerate_placements(gs, topo)
    doc = emit_qasm(program_from_id(args.id, args.depth, placements), gs, args.qubits)
    if args.out:
        atomic_write(args.out, doc.text)
    else:
        sys.stdout.write(doc.text)
    return 0


def cmd_diff(args) -> int:
    base = {
        "gate_set": args.gates or "ibm-native",
        "num_qubits": args.qubits or 5,
        "max_depth": args.depth if args.depth is not None else 3,
        "engine": args.engine or "auto",
    }
    if args.workers:
        base["workers"] = args.workers
    mats = []
    for topo in (args.topology_a, args.topology_b):
        cfg = RunConfig.from_dict({**base, "topology": topo})
        res, _ = compute(cfg)
        mats.append(res.mcirc)
    cmp = compare_topologies(*mats)
    summary = {**cmp.summary(), "gate_set": mats[0].gate_set, "n": base["num_qubits"], "L": base["max_depth"]}
    if args.out_dir:
        out = Path(args.out_dir)
        meta = {"product": "mcirc_diff", **summary, "convention": "qubit0=LSB"}
        write_matrix(cmp.diff, "json", out / "mcirc_diff.json", meta)
        for m, tag in zip(mats, ("a", "b")):
            write_matrix(m.entries, "json", out / f"mcirc_{tag}.json", {"product": "mcirc", "topology": m.topology})
        render_heatmap(
            np.sign(cmp.diff) * (np.abs(cmp.diff) > 1e-12), out / "mcirc_diff_sign.svg",
            title=f"sign of M_circ({args.topology_a}) - M_circ({args.topology_b})",
        )
        atomic_write(out / "diff_summary.json", json.dumps(summary, indent=2) + "\n")
    print(json.dumps(summary, indent=2))
    return 0


def cmd_check(args) -> int:
    ok = True
    for name, passed, detail in run_checks():
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circscape", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="compute R, E, M_circ and K_circ and write them")
    _add_run_flags(p)
    p.add_argument("--verify", action="store_true", help="cross-check the engine against brute force")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="program counts over qubit count and depth")
    p.add_argument("--arities", help="comma list of gate arities, e.g. 1,3")
    p.add_argument("--gates", help="gate set whose arities to use")
    p.add_argument("--min-qubits", type=int, default=1)
    p.add_argument("--max-qubits", type=int, default=8)
    p.add_argument("--max-depth", type=int, default=6)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("qasm", help="emit the program with a given description number")
    p.add_argument("--gates", required=True)
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--topology", default="full")
    p.add_argument("--out")
    p.set_defaults(func=cmd_qasm)

    p = sub.add_parser("diff", help="compare M_circ between two topologies")
    _add_run_flags(p, topology=False)
    p.add_argument("--topology-a", default="ibm-l")
    p.add_argument("--topology-b", default="ibm-t")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("check", help="run the built-in invariant suite")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except jsonschema.ValidationError as exc:
        print(f"circscape: invalid configuration: {exc.message}", file=sys.stderr)
        return 2
    except (BudgetExceeded, ValueError, KeyError, OSError) as exc:
        print(f"circscape: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
