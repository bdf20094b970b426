"""ASCII and SVG rendering of pattern windows with broadcast outlines."""

from __future__ import annotations

from dataclasses import dataclass, field

from gridcast.core import BroadcastSpec, PeriodicPattern, canonicalize, contains
from gridcast.halfsquares import depth_map, reduce_halfsquare, rot_of_edge
from gridcast.signal import total_signal

DEFAULT_SHOW = frozenset({"towers", "signal"})
VALID_SHOW = frozenset({"towers", "signal", "outlines", "halfsquares"})


@dataclass(frozen=True)
class RenderSpec:
    window: tuple[int, int, int, int]  # x0, y0, x1, y1 inclusive
    format: str = "ascii"
    show: frozenset[str] = field(default_factory=lambda: DEFAULT_SHOW)

    def __post_init__(self) -> None:
        x0, y0, x1, y1 = self.window
        if x0 > x1 or y0 > y1:
            raise ValueError(f"degenerate window {self.window}")
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"unknown format {self.format!r}")
        bad = self.show - VALID_SHOW
        if bad:
            raise ValueError(f"unknown show flags: {sorted(bad)}")


def render(p: PeriodicPattern, spec: BroadcastSpec, rs: RenderSpec) -> str:
    canon = canonicalize(p)
    if rs.format == "ascii":
        return render_ascii(canon, spec, rs)
    return render_svg(canon, spec, rs)


def render_ascii(p: PeriodicPattern, spec: BroadcastSpec, rs: RenderSpec) -> str:
    """'T' marks towers; digits give total signal, capped at 9 ('+' beyond)."""
    x0, y0, x1, y1 = rs.window
    lines = []
    for y in range(y1, y0 - 1, -1):  # top row first
        chars = []
        for x in range(x0, x1 + 1):
            v = (x, y)
            if "towers" in rs.show and contains(p, v):
                chars.append("T")
            elif "signal" in rs.show:
                s = total_signal(v, p, spec)
                chars.append(str(s) if s <= 9 else "+")
            else:
                chars.append(".")
        lines.append(" ".join(chars))
    return "\n".join(lines) + "\n"


_CELL = 20  # px per grid unit


def _px(x: float, y: float, rs: RenderSpec) -> tuple[float, float]:
    x0, y0, x1, y1 = rs.window
    return ((x - x0) * _CELL, (y1 - y) * _CELL)  # y axis points up


def render_svg(p: PeriodicPattern, spec: BroadcastSpec, rs: RenderSpec) -> str:
    """Grid in gray, towers and diamond outlines in red, optional shading.

    The diamond outline of a tower passes through its signal-1 vertices,
    i.e. the L1 circle of radius t-1.
    """
    x0, y0, x1, y1 = rs.window
    w = (x1 - x0) * _CELL
    h = (y1 - y0) * _CELL
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{-_CELL} {-_CELL} '
        f'{w + 2 * _CELL} {h + 2 * _CELL}">'
    ]

    if "halfsquares" in rs.show:
        parts.append(_svg_halfsquares(p, spec, rs))

    grid = []
    for x in range(x0, x1 + 1):
        ax, ay = _px(x, y0, rs)
        bx, by = _px(x, y1, rs)
        grid.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    for y in range(y0, y1 + 1):
        ax, ay = _px(x0, y, rs)
        bx, by = _px(x1, y, rs)
        grid.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    parts.append('<g stroke="#cccccc" stroke-width="1">' + "".join(grid) + "</g>")

    # towers whose outline can intersect the window
    margin = spec.t
    towers = [
        (x, y)
        for y in range(y0 - margin, y1 + margin + 1)
        for x in range(x0 - margin, x1 + margin + 1)
        if contains(p, (x, y))
    ]

    if "outlines" in rs.show and spec.t >= 2:
        rad = spec.t - 1
        shapes = []
        for tx, ty in towers:
            pts = [
                _px(tx + rad, ty, rs),
                _px(tx, ty + rad, rs),
                _px(tx - rad, ty, rs),
                _px(tx, ty - rad, rs),
            ]
            coords = " ".join(f"{a},{b}" for a, b in pts)
            shapes.append(f'<polygon points="{coords}"/>')
        parts.append(
            '<g fill="none" stroke="#cc0000" stroke-width="1.5">' + "".join(shapes) + "</g>"
        )

    if "signal" in rs.show:
        texts = []
        for y in range(y0, y1 + 1):
            for x in range(x0, x1 + 1):
                s = total_signal((x, y), p, spec)
                ax, ay = _px(x, y, rs)
                texts.append(f'<text x="{ax + 3}" y="{ay - 3}">{s}</text>')
        parts.append('<g font-size="8" fill="#333333">' + "".join(texts) + "</g>")

    if "towers" in rs.show:
        dots = []
        for tx, ty in towers:
            if x0 <= tx <= x1 and y0 <= ty <= y1:
                ax, ay = _px(tx, ty, rs)
                dots.append(f'<circle cx="{ax}" cy="{ay}" r="4"/>')
        parts.append('<g fill="#cc0000">' + "".join(dots) + "</g>")

    parts.append("</svg>")
    return "".join(parts)


def _svg_halfsquares(p: PeriodicPattern, spec: BroadcastSpec, rs: RenderSpec) -> str:
    """Shade depth-0 half-squares gray; overlap-covered ones light blue."""
    dm = depth_map(p, spec)
    x0, y0, x1, y1 = rs.window
    cells = []
    for y in range(y0, y1 + 1):
        for x in range(x0, x1 + 1):
            for orient, center in (("h", (x + 0.5, y)), ("v", (x, y + 0.5))):
                key = reduce_halfsquare(dm.pattern, rot_of_edge(orient, x, y))
                if dm.depth[key] == 0:
                    fill = "#bbbbbb"
                elif dm.cover_count[key] >= 2:
                    fill = "#99ccff"
                else:
                    continue
                cx, cy = center
                pts = [
                    _px(cx + 0.5, cy, rs),
                    _px(cx, cy + 0.5, rs),
                    _px(cx - 0.5, cy, rs),
                    _px(cx, cy - 0.5, rs),
                ]
                coords = " ".join(f"{a},{b}" for a, b in pts)
                cells.append(f'<polygon points="{coords}"/>')
    return "<g>" + "".join(cells) + "</g>"
