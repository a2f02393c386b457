"""Deterministic SVG heatmaps of square matrices.

Row 0 is drawn at the top and both axes are labelled with basis-state
indices. Non-finite entries (and zeros on a log scale) get a separate
"void" colour. Output depends only on the matrix and options, so two
renders of the same data are byte-identical.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .io import atomic_write

# perceptually ordered ramp, dark to light
PALETTE = (
    "#000004", "#1d1147", "#51127c", "#822681", "#b73779",
    "#e75263", "#fc8961", "#fec287", "#fcfdbf",
)
BINARY = ("#1d1147", "#fcfdbf")
VOID = "#d9d9d9"

CELL = 18
MARGIN = 44
LEGEND_W = 16


def _lerp_hex(a: str, b: str, t: float) -> str:
    ca = [int(a[i : i + 2], 16) for i in (1, 3, 5)]
    cb = [int(b[i : i + 2], 16) for i in (1, 3, 5)]
    return "#" + "".join(f"{round(x + (y - x) * t):02x}" for x, y in zip(ca, cb))


def ramp(t: float) -> str:
    t = min(1.0, max(0.0, t))
    pos = t * (len(PALETTE) - 1)
    k = min(int(pos), len(PALETTE) - 2)
    return _lerp_hex(PALETTE[k], PALETTE[k + 1], pos - k)


def _fmt(v: float) -> str:
    return f"{v:.4g}"


def render_heatmap(
    m: np.ndarray,
    path,
    palette: str = "ramp",
    scale: str = "linear",
    title: str = "",
) -> str:
    """Write ``m`` as an SVG grid and return the SVG text.

    ``palette`` is ``"ramp"`` (9-stop continuous colour scale) or
    ``"binary"`` (two colours, for expressibility). ``scale`` is
    ``"linear"`` or ``"log"``.
    """
    if palette not in ("ramp", "binary"):
        raise ValueError(f"unknown palette {palette!r}")
    if scale not in ("linear", "log"):
        raise ValueError(f"unknown scale {scale!r}")
    m = np.asarray(m, dtype=float)
    rows, cols = m.shape
    finite = np.isfinite(m)
    valid = finite & (m > 0) if scale == "log" else finite
    vals = m[valid]
    if scale == "log" and vals.size:
        vals = np.log10(vals)
    lo, hi = (float(vals.min()), float(vals.max())) if vals.size else (0.0, 1.0)

    def colour(v: float) -> str:
        if palette == "binary":
            return BINARY[1] if v > 0 else BINARY[0]
        x = math.log10(v) if scale == "log" else v
        return ramp(0.5 if hi == lo else (x - lo) / (hi - lo))

    top = MARGIN + (14 if title else 0)
    grid_w, grid_h = cols * CELL, rows * CELL
    width = MARGIN + grid_w + 24 + LEGEND_W + 64
    height = top + grid_h + 34
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace" font-size="9">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{MARGIN}" y="14" font-size="12">{escape(title)}</text>')
    for i in range(rows):
        for j in range(cols):
            fill = colour(m[i, j]) if valid[i, j] or (palette == "binary" and finite[i, j]) else VOID
            out.append(
                f'<rect x="{MARGIN + j * CELL}" y="{top + i * CELL}" width="{CELL}" '
                f'height="{CELL}" fill="{fill}"/>'
            )
    for k in range(rows):
        out.append(
            f'<text x="{MARGIN - 4}" y="{top + k * CELL + CELL / 2 + 3:g}" text-anchor="end">{k}</text>'
        )
    for k in range(cols):
        out.append(
            f'<text x="{MARGIN + k * CELL + CELL / 2:g}" y="{top - 4}" text-anchor="middle">{k}</text>'
        )
    out.append(f'<text x="{MARGIN}" y="{top - 18}">final state</text>')
    out.append(
        f'<text x="10" y="{top + grid_h}" transform="rotate(-90 10 {top + grid_h})">initial state</text>'
    )

    lx = MARGIN + grid_w + 24
    if palette == "binary":
        for k, (label, fill) in enumerate((("1", BINARY[1]), ("0", BINARY[0]))):
            y = top + k * (CELL + 4)
            out.append(f'<rect x="{lx}" y="{y}" width="{LEGEND_W}" height="{CELL}" fill="{fill}"/>')
            out.append(f'<text x="{lx + LEGEND_W + 4}" y="{y + CELL / 2 + 3:g}">{label}</text>')
    else:
        steps = 32
        h = grid_h / steps
        for k in range(steps):
            t = 1 - (k + 0.5) / steps
            out.append(
                f'<rect x="{lx}" y="{top + k * h:.3f}" width="{LEGEND_W}" height="{h + 0.01:.3f}" '
                f'fill="{ramp(t)}"/>'
            )
        hi_label = _fmt(10**hi) if scale == "log" else _fmt(hi)
        lo_label = _fmt(10**lo) if scale == "log" else _fmt(lo)
        out.append(f'<text x="{lx + LEGEND_W + 4}" y="{top + 8}">{hi_label}</text>')
        out.append(f'<text x="{lx + LEGEND_W + 4}" y="{top + grid_h}">{lo_label}</text>')
        out.append(f'<text x="{lx}" y="{top + grid_h + 14}">{scale}</text>')
    if not valid.all() and palette != "binary":
        out.append(f'<rect x="{lx}" y="{top + grid_h + 16}" width="8" height="8" fill="{VOID}"/>')
        out.append(f'<text x="{lx + 10}" y="{top + grid_h + 23}">void</text>')
    out.append("</svg>")
    svg = "\n".join(out) + "\n"
    atomic_write(path, svg)
    return svg
