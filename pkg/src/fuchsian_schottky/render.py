"""Deterministic SVG pictures of a circle configuration.

The picture shows the real line, every pairing circle as an upper
semicircle, every generator axis dashed, and one dot per limit-set circle
of word length exactly ``depth``.  The viewport is fitted to the hull of
the circles with a 10% margin.  A point x on the real line is drawn at
pixel ``(x - x0) * scale`` on the baseline; the three numbers are stored
as data attributes on the root element.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._tol import resolve
from .errors import EmptySystem
from .geometry import axis
from .system import SchottkySystem, limit_arrays, verify_classical, violating_circles

PALETTE = ("#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2", "#bcbd22")
VIOLATION = "#d62728"
MARGIN = 0.1


def _f(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


@dataclass(frozen=True)
class Viewport:
    x0: float
    scale: float
    baseline: float
    width: int
    height: int

    def px(self, x: float) -> float:
        return (x - self.x0) * self.scale

    def py(self, y: float) -> float:
        return self.baseline - y * self.scale

    def real(self, px: float) -> float:
        return px / self.scale + self.x0


def viewport(sys: SchottkySystem, width_px: int) -> Viewport:
    circles = sys.circles
    lo = min(C.left for C in circles)
    hi = max(C.right for C in circles)
    span = hi - lo
    pad = MARGIN * span
    scale = width_px / (span + 2 * pad)
    top = max(C.radius for C in circles)
    height = int(np.ceil((top + 2 * pad) * scale))
    return Viewport(lo - pad, scale, height - pad * scale, int(width_px), height)


def _semicircle(vp: Viewport, u: float, v: float) -> str:
    r = abs(v - u) / 2 * vp.scale
    a, b = sorted((u, v))
    return (f"M {_f(vp.px(a))} {_f(vp.baseline)} "
            f"A {_f(r)} {_f(r)} 0 0 1 {_f(vp.px(b))} {_f(vp.baseline)}")


def _axis_path(vp: Viewport, p, q) -> str:
    if p.is_infinite or q.is_infinite:
        x = (q if p.is_infinite else p).to_real()
        return f"M {_f(vp.px(x))} {_f(vp.baseline)} L {_f(vp.px(x))} 0.000"
    return _semicircle(vp, p.to_real(), q.to_real())


def render_svg(sys: SchottkySystem, depth: int = 0, width_px: int = 800, tol=None) -> bytes:
    """SVG document as bytes; identical input gives identical bytes.

    Dots are drawn only when the system certifies, since otherwise the
    nested circles need not be nested.
    """
    tol = resolve(tol)
    if sys.rank == 0:
        raise EmptySystem("nothing to draw")
    if width_px < 1 or depth < 0:
        raise ValueError("need width_px >= 1 and depth >= 0")
    vp = viewport(sys, width_px)
    bad = violating_circles(sys, tol)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{vp.width}" height="{vp.height}" '
        f'viewBox="0 0 {vp.width} {vp.height}" data-x0="{vp.x0!r}" data-scale="{vp.scale!r}" '
        f'data-baseline="{vp.baseline!r}">',
        f'<rect width="{vp.width}" height="{vp.height}" fill="white"/>',
        f'<line class="real-axis" x1="0.000" y1="{_f(vp.baseline)}" x2="{vp.width}.000" '
        f'y2="{_f(vp.baseline)}" stroke="black" stroke-width="1"/>',
    ]
    for j, C in enumerate(sys.circles):
        colour = VIOLATION if j in bad else PALETTE[(j // 2) % len(PALETTE)]
        lines.append(f'<path class="circle" data-index="{j}" data-left="{C.left!r}" '
                     f'data-right="{C.right!r}" d="{_semicircle(vp, C.left, C.right)}" '
                     f'fill="none" stroke="{colour}" stroke-width="1.5"/>')
    for i, A in enumerate(sys.generators):
        try:
            g = axis(A, tol)
        except Exception:  # non-hyperbolic generators have no axis to draw
            continue
        colour = PALETTE[i % len(PALETTE)]
        lines.append(f'<path class="axis" data-index="{i}" d="{_axis_path(vp, g.p, g.q)}" '
                     f'fill="none" stroke="{colour}" stroke-width="1" stroke-dasharray="4 3"/>')
    if depth >= 1 and verify_classical(sys, tol).passed:
        words, lo, hi = limit_arrays(sys, depth)
        full = np.count_nonzero(words, axis=1) == depth
        for u, v in zip(lo[full].tolist(), hi[full].tolist()):
            lines.append(f'<circle class="dot" cx="{_f(vp.px(0.5 * (u + v)))}" '
                         f'cy="{_f(vp.baseline)}" r="1.5" fill="black"/>')
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
