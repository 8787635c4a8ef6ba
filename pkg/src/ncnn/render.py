"""Bump diagrams as plain-text or SVG documents.

Linear diagrams put the greatest ground elements on the left. Noncrossing
diagrams of types B, C and D are bent round a circle; each block is drawn as
the boundary of its convex hull.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import PredicateViolation, UnsupportedCombination
from .partitions import NN, ClassicalPartition, bump_graph, ground_order, satisfies_mode
from .roots import GroupFamily

LINEAR = "linear"
CIRCULAR = "circular"
RADIUS = 100.0
SPACING = 40.0


@dataclass(frozen=True)
class DiagramSpec:
    layout: str
    labels: tuple[int, ...]            # drawing order (left to right, or clockwise)
    arcs: tuple[tuple[int, int], ...]  # sorted label pairs
    columns: tuple[tuple[int, ...], ...] = ()  # linear only: labels sharing an x position
    center_pair: tuple[int, int] | None = None  # circular D: labels drawn at the centre
    title: str = ""


def _hull_edges(block, cycle_index: dict[int, int], m: int, center: set[int]):
    on_circle = sorted((x for x in block if x in cycle_index), key=cycle_index.__getitem__)
    at_center = sorted(x for x in block if x in center)
    edges = []
    if not at_center:
        if len(on_circle) == 2:
            edges.append((on_circle[0], on_circle[1]))
        elif len(on_circle) > 2:
            edges += list(zip(on_circle, on_circle[1:])) + [(on_circle[-1], on_circle[0])]
        return edges
    if len(at_center) == 2:
        # a zero block holding ±1: its hull is the polygon on the circle
        return _hull_edges(frozenset(on_circle), cycle_index, m, set())
    hub = at_center[0]
    if len(on_circle) == 1:
        return [(hub, on_circle[0])]
    if not on_circle:
        return []
    # open the polygon at the widest angular gap and close it through the centre
    idx = [cycle_index[x] for x in on_circle]
    gaps = [((idx[(k + 1) % len(idx)] - idx[k]) % m, k) for k in range(len(idx))]
    _, cut = max(gaps, key=lambda t: (t[0], -t[1]))
    chain = on_circle[cut + 1:] + on_circle[:cut + 1]
    return [(hub, chain[0])] + list(zip(chain, chain[1:])) + [(chain[-1], hub)]


def layout_diagram(g: GroupFamily, mode: str, p: ClassicalPartition) -> DiagramSpec:
    if not satisfies_mode(g, mode, p):
        raise PredicateViolation(f"{p!r} is not a {mode} partition of {g}")
    title = f"{g} {mode}"
    if mode == NN or g.family == "A":
        order = ground_order(g, mode)
        columns = tuple(tuple(sorted(level)) for level in reversed(order.levels))
        labels = tuple(x for col in columns for x in col)
        arcs = tuple(sorted(bump_graph(p, order)))
        return DiagramSpec(LINEAR, labels, arcs, columns, None, title)
    n = g.n
    if g.family in "BC":
        cycle = [-i for i in range(1, n + 1)] + list(range(1, n + 1))
        center: set[int] = set()
    else:
        cycle = [-i for i in range(2, n + 1)] + list(range(2, n + 1))
        center = {1, -1}
    index = {x: k for k, x in enumerate(cycle)}
    arcs = set()
    for b in p.all_blocks():
        for s, t in _hull_edges(b, index, len(cycle), center):
            arcs.add((s, t) if (s, t) <= (t, s) else (t, s))
    return DiagramSpec(CIRCULAR, tuple(cycle), tuple(sorted(arcs)), (),
                       (1, -1) if center else None, title)


# ---------------------------------------------------------------- geometry


def positions(spec: DiagramSpec) -> dict[int, tuple[float, float]]:
    """Drawing coordinates of every label (SVG convention: y grows downwards)."""
    pos = {}
    if spec.layout == LINEAR:
        for k, col in enumerate(spec.columns):
            for depth, x in enumerate(sorted(col, reverse=True)):
                pos[x] = (SPACING * (k + 1), 24.0 * depth)
        return pos
    m = len(spec.labels)
    for k, x in enumerate(spec.labels):
        theta = math.pi / 2 - 2 * math.pi * k / m
        pos[x] = (round(RADIUS * math.cos(theta), 3), round(-RADIUS * math.sin(theta), 3))
    if spec.center_pair:
        for x in spec.center_pair:
            pos[x] = (0.0, 0.0)
    return pos


def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def segments_cross(p1, p2, q1, q2, eps: float = 1e-6) -> bool:
    """True when two segments meet anywhere except at a shared endpoint."""
    shared = {p1, p2} & {q1, q2}
    d1, d2 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    d3, d4 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    if abs(d1) < eps and abs(d2) < eps:
        # collinear: overlap of positive length counts as a crossing
        axis = 0 if abs(p1[0] - p2[0]) > abs(p1[1] - p2[1]) else 1
        lo1, hi1 = sorted((p1[axis], p2[axis]))
        lo2, hi2 = sorted((q1[axis], q2[axis]))
        return min(hi1, hi2) - max(lo1, lo2) > eps
    if shared:
        return False
    return (d1 * d2 < -eps) and (d3 * d4 < -eps)


def crossing_pairs(segments) -> list[tuple[int, int]]:
    """Indices of crossing pairs among ``[(point, point), ...]``."""
    out = []
    for i in range(len(segments)):
        for j in range(i + 1, len(segments)):
            if segments_cross(*segments[i], *segments[j]):
                out.append((i, j))
    return out


def arcs_cross_linear(x1: float, x2: float, y1: float, y2: float) -> bool:
    """Upper semicircular arcs over ``[x1, x2]`` and ``[y1, y2]`` cross iff the ends interleave."""
    a, b = sorted((x1, x2))
    c, d = sorted((y1, y2))
    return a < c < b < d or c < a < d < b


# ---------------------------------------------------------------- emission

_GLYPHS = {
    0b0011: "│", 0b1100: "─", 0b1010: "┌", 0b0110: "┐", 0b1001: "└", 0b0101: "┘",
    0b1011: "├", 0b0111: "┤", 0b1110: "┬", 0b1101: "┴", 0b1111: "┼",
    0b0001: "│", 0b0010: "│", 0b0100: "─", 0b1000: "─",
}
_UP, _DOWN, _LEFT, _RIGHT = 1, 2, 4, 8
CELL = 4


def _arc_levels(spec: DiagramSpec) -> list[tuple[int, int, int]]:
    col_of = {x: k for k, col in enumerate(spec.columns) for x in col}
    spans = sorted({tuple(sorted((col_of[s], col_of[t]))) for s, t in spec.arcs},
                   key=lambda ab: (ab[1] - ab[0], ab))
    placed: list[tuple[int, int, int]] = []
    for lo, hi in spans:
        level = 1
        while any(h == level and not (hi < a or b < lo) for a, b, h in placed):
            level += 1
        placed.append((lo, hi, level))
    return placed


def _emit_ascii(spec: DiagramSpec) -> str:
    if spec.layout != LINEAR:
        raise UnsupportedCombination("text output supports linear diagrams only")
    width = CELL * len(spec.columns)
    placed = _arc_levels(spec)
    height = max((h for _, _, h in placed), default=0)
    grid = [[0] * width for _ in range(height)]
    centre = lambda k: CELL * k + CELL // 2  # noqa: E731
    for lo, hi, level in placed:
        row = height - level
        x1, x2 = centre(lo), centre(hi)
        grid[row][x1] |= _DOWN | _RIGHT
        grid[row][x2] |= _DOWN | _LEFT
        for x in range(x1 + 1, x2):
            grid[row][x] |= _LEFT | _RIGHT
        for r in range(row + 1, height):
            grid[r][x1] |= _UP | _DOWN
            grid[r][x2] |= _UP | _DOWN
    lines = ["".join(_GLYPHS.get(c, " ") for c in row).rstrip() for row in grid]
    lines.append("".join("●".rjust(CELL // 2 + 1).ljust(CELL) for _ in spec.columns).rstrip())
    depth = max(len(col) for col in spec.columns)
    for d in range(depth):
        cells = []
        for col in spec.columns:
            stack = sorted(col, reverse=True)
            text = str(stack[d]) if d < len(stack) else ""
            cells.append(text.rjust(CELL // 2 + 1).ljust(CELL))
        lines.append("".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _emit_svg(spec: DiagramSpec) -> str:
    pos = positions(spec)
    out = []
    if spec.layout == LINEAR:
        width = SPACING * (len(spec.columns) + 1)
        reach = max((abs(pos[s][0] - pos[t][0]) / 2 for s, t in spec.arcs), default=0)
        top = -(reach + 20)
        bottom = 24.0 * max(len(c) for c in spec.columns) + 20
        view = (0, top, width, bottom - top)
    else:
        view = (-130, -130, 260, 260)
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
               f'viewBox="{" ".join(_fmt(v) for v in view)}">')
    if spec.title:
        out.append(f"  <title>{escape(spec.title)}</title>")
    if spec.layout == CIRCULAR:
        out.append(f'  <circle cx="0" cy="0" r="{_fmt(RADIUS)}" fill="none" stroke="#ccc"/>')
    for s, t in spec.arcs:
        (x1, y1), (x2, y2) = pos[s], pos[t]
        ends = f'data-a="{s}" data-b="{t}"'
        if spec.layout == CIRCULAR:
            out.append(f'  <line class="arc" {ends} x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                       f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="black"/>')
        else:
            if x1 > x2:
                (x1, y1), (x2, y2) = (x2, y2), (x1, y1)
            r = (x2 - x1) / 2
            out.append(f'  <path class="arc" {ends} d="M {_fmt(x1)} {_fmt(y1)} '
                       f'A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(x2)} {_fmt(y2)}" '
                       'fill="none" stroke="black"/>')
    for x in spec.labels + (spec.center_pair or ()):
        cx, cy = pos[x]
        out.append(f'  <circle class="dot" data-label="{x}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3"/>')
        if spec.layout == LINEAR:
            lx, ly = cx, cy + 16
        elif spec.center_pair and x in spec.center_pair:
            lx, ly = (-10.0, -6.0) if x > 0 else (10.0, 14.0)
        else:
            lx, ly = cx * 1.15, cy * 1.15 + 4
        out.append(f'  <text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="10" '
                   f'text-anchor="middle">{x}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit(spec: DiagramSpec, fmt: str) -> str:
    if fmt == "ascii":
        return _emit_ascii(spec)
    if fmt == "svg":
        return _emit_svg(spec)
    raise UnsupportedCombination(f"unknown format {fmt!r}")


def render(g: GroupFamily, mode: str, p: ClassicalPartition, fmt: str = "ascii") -> str:
    return emit(layout_diagram(g, mode, p), fmt)
