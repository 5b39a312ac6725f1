"""SVG span-depth plots and text/CSV tables. Output is byte-deterministic."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape, quoteattr

TICK_MM = 10.0
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")


@dataclass(frozen=True)
class RenderSpec:
    series: tuple[tuple[str, tuple[tuple[float, float], ...]], ...]
    x_label: str = "Span (mm)"
    y_label: str = "Depth (mm)"
    width_px: int = 800
    height_px: int = 600
    title: str = ""

    def __post_init__(self):
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("plot dimensions must be positive")
        if not self.series:
            raise ValueError("need at least one series")


def _f(v: float) -> str:
    return f"{v:.2f}"


def _axis_max(values) -> float:
    top = max([TICK_MM] + [v for v in values])
    return math.ceil(top / TICK_MM) * TICK_MM


def render_svg(spec: RenderSpec) -> str:
    left, right, top, bottom = 70.0, 150.0, 40.0, 60.0
    pw = spec.width_px - left - right
    ph = spec.height_px - top - bottom
    xs = [p[0] for _, pts in spec.series for p in pts]
    ys = [p[1] for _, pts in spec.series for p in pts]
    x_max, y_max = _axis_max(xs), _axis_max(ys)

    def px(x):
        return left + x / x_max * pw

    def py(y):
        return top + ph - y / y_max * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width_px}" '
        f'height="{spec.height_px}" viewBox="0 0 {spec.width_px} {spec.height_px}">',
        f'<rect x="0" y="0" width="{spec.width_px}" height="{spec.height_px}" fill="white"/>',
    ]
    if spec.title:
        out.append(
            f'<text x="{_f(spec.width_px / 2)}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="16">{escape(spec.title)}</text>'
        )
    out.append(
        f'<g class="axes" stroke="black" stroke-width="1">'
        f'<line x1="{_f(px(0))}" y1="{_f(py(0))}" x2="{_f(px(x_max))}" y2="{_f(py(0))}"/>'
        f'<line x1="{_f(px(0))}" y1="{_f(py(0))}" x2="{_f(px(0))}" y2="{_f(py(y_max))}"/></g>'
    )
    # label every tick unless they would crowd
    n_x, n_y = int(x_max / TICK_MM), int(y_max / TICK_MM)
    x_every = 1 if n_x <= 20 else 5
    y_every = 1 if n_y <= 20 else 5
    ticks = ['<g class="ticks" stroke="black" stroke-width="1">']
    labels = ['<g class="tick-labels" font-family="sans-serif" font-size="10">']
    for i in range(n_x + 1):
        x = px(i * TICK_MM)
        ticks.append(f'<line class="xtick" x1="{_f(x)}" y1="{_f(py(0))}" x2="{_f(x)}" y2="{_f(py(0) + 5)}"/>')
        if i % x_every == 0:
            labels.append(f'<text x="{_f(x)}" y="{_f(py(0) + 18)}" text-anchor="middle">{i * int(TICK_MM)}</text>')
    for i in range(n_y + 1):
        y = py(i * TICK_MM)
        ticks.append(f'<line class="ytick" x1="{_f(px(0) - 5)}" y1="{_f(y)}" x2="{_f(px(0))}" y2="{_f(y)}"/>')
        if i % y_every == 0:
            labels.append(f'<text x="{_f(px(0) - 8)}" y="{_f(y + 3)}" text-anchor="end">{i * int(TICK_MM)}</text>')
    out += ticks + ["</g>"] + labels + ["</g>"]
    out.append(
        f'<text x="{_f(left + pw / 2)}" y="{_f(spec.height_px - 15)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{escape(spec.x_label)}</text>'
    )
    out.append(
        f'<text x="18" y="{_f(top + ph / 2)}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12" transform="rotate(-90 18 {_f(top + ph / 2)})">{escape(spec.y_label)}</text>'
    )
    for i, (label, pts) in enumerate(spec.series):
        color = PALETTE[i % len(PALETTE)]
        coords = " ".join(f"{_f(px(x))},{_f(py(y))}" for x, y in pts)
        out.append(
            f'<polyline data-label={quoteattr(label)} points="{coords}" fill="none" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        ly = top + 14 + 18 * i
        lx = left + pw + 15
        out.append(
            f'<line x1="{_f(lx)}" y1="{_f(ly - 4)}" x2="{_f(lx + 20)}" y2="{_f(ly - 4)}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{_f(lx + 26)}" y="{_f(ly)}" font-family="sans-serif" font-size="11">{escape(label)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def format_table(header: Sequence[str], rows: Sequence[Sequence[str]], colors: dict | None = None) -> str:
    """Left-aligned plain text table; ``colors`` maps cell text to an ANSI code."""
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def line(cells):
        parts = []
        for cell, w in zip(cells, widths):
            padded = cell.ljust(w)
            if colors and cell in colors:
                padded = f"\x1b[{colors[cell]}m{cell}\x1b[0m" + " " * (w - len(cell))
            parts.append(padded)
        return "  ".join(parts).rstrip()

    out = [line(header), "  ".join("-" * w for w in widths)]
    out += [line(r) for r in rows]
    return "\n".join(out) + "\n"


def format_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
