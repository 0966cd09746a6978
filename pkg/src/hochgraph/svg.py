"""Self-contained SVG line plots of characteristic curves."""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

from .persistence import PersistenceCurve

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    return [lo + (hi - lo) * k / (count - 1) for k in range(count)]


def curves_svg(curves: Sequence[PersistenceCurve], width: int = 640, height: int = 400, title: str = "") -> str:
    """chi against t, one polyline per curve. The empty stage (t = -inf) is not drawn."""
    pts = [[(r.t, r.chi) for r in c.rows if math.isfinite(r.t)] for c in curves]
    xs = [x for p in pts for x, _ in p] or [0.0, 1.0]
    ys = [y for p in pts for _, y in p] or [0, 1]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1
    ml, mr, mt, mb = 60, 20, 30, 40
    pw, ph = width - ml - mr, height - mt - mb

    def sx(x):
        return ml + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return mt + ph - (y - y0) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{ml}" y1="{mt + ph}" x2="{ml + pw}" y2="{mt + ph}" stroke="black"/>',
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{mt + ph}" stroke="black"/>',
    ]
    for x in _ticks(x0, x1):
        out.append(f'<line x1="{sx(x):.2f}" y1="{mt + ph}" x2="{sx(x):.2f}" y2="{mt + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{sx(x):.2f}" y="{mt + ph + 18}" font-size="11" text-anchor="middle">{x:.3g}</text>')
    for y in _ticks(y0, y1):
        out.append(f'<line x1="{ml - 5}" y1="{sy(y):.2f}" x2="{ml}" y2="{sy(y):.2f}" stroke="black"/>')
        out.append(f'<text x="{ml - 8}" y="{sy(y) + 4:.2f}" font-size="11" text-anchor="end">{y:.4g}</text>')
    if y0 < 0 < y1:
        out.append(f'<line x1="{ml}" y1="{sy(0):.2f}" x2="{ml + pw}" y2="{sy(0):.2f}" stroke="#bbb" stroke-dasharray="4 3"/>')
    for k, (c, p) in enumerate(zip(curves, pts)):
        color = _COLORS[k % len(_COLORS)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in p)
        out.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        out.append(
            f'<text x="{ml + pw - 4}" y="{mt + 14 + 14 * k}" font-size="11" text-anchor="end" fill="{color}">'
            f"{escape(c.label or f'curve {k}')}</text>"
        )
    if title:
        out.append(f'<text x="{ml + pw / 2:.1f}" y="18" font-size="13" text-anchor="middle">{escape(title)}</text>')
    out.append(f'<text x="{ml + pw / 2:.1f}" y="{height - 6}" font-size="11" text-anchor="middle">t</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
