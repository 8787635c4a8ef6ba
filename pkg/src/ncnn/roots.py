"""Positive root systems of the classical types in standard coordinates.

Roots are plain integer tuples of length ``n`` (the ambient dimension).
Index ``k`` of the tuple is the coordinate of ``e_{k+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import NonRootArgument, NotAntichain, RankError

Root = tuple[int, ...]
Antichain = frozenset  # frozenset[Root]

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True, order=True)
class GroupFamily:
    """A classical reflection group ``A_r``, ``B_r``, ``C_r`` or ``D_r``."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RankError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise RankError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "D" and self.rank < 2:
            raise RankError("D_n needs rank >= 2")

    @property
    def n(self) -> int:
        """Ambient dimension of the standard coordinatisation."""
        return self.rank + 1 if self.family == "A" else self.rank

    ambient_dim = n

    def __str__(self):
        return f"{self.family}{self.rank}"


def unit(n: int, i: int, scale: int = 1) -> Root:
    """``scale * e_i`` in ``R^n``; ``i`` is 1-based, ``e_{-k} = -e_k``, ``e_0 = 0``."""
    v = [0] * n
    if i:
        v[abs(i) - 1] = scale if i > 0 else -scale
    return tuple(v)


def root_from_endpoints(n: int, i: int, j: int) -> Root:
    """The vector ``e_j - e_i`` under the signed labelling convention."""
    return tuple(a - b for a, b in zip(unit(n, j), unit(n, i)))


def simple_roots(g: GroupFamily) -> tuple[Root, ...]:
    n = g.n
    chain = tuple(root_from_endpoints(n, i, i + 1) for i in range(1, n))
    if g.family == "A":
        return chain
    first = {
        "B": unit(n, 1),
        "C": unit(n, 1, 2),
        "D": root_from_endpoints(n, -1, 2) if n >= 2 else None,
    }[g.family]
    return (first,) + chain


@lru_cache(maxsize=None)
def _ordered_positive_roots(g: GroupFamily) -> tuple[Root, ...]:
    n = g.n
    roots = []
    for j in range(1, n + 1):
        for i in range(1, j):
            roots.append(root_from_endpoints(n, i, j))
            if g.family != "A":
                roots.append(root_from_endpoints(n, -i, j))
        if g.family == "B":
            roots.append(unit(n, j))
        elif g.family == "C":
            roots.append(unit(n, j, 2))
    # height order is a linear extension of the root poset
    return tuple(sorted(roots, key=lambda r: (height(g, r), r)))


def positive_roots(g: GroupFamily) -> frozenset[Root]:
    return frozenset(_ordered_positive_roots(g))


def ordered_positive_roots(g: GroupFamily) -> tuple[Root, ...]:
    """Positive roots in a fixed linear extension of the root poset."""
    return _ordered_positive_roots(g)


def _solve_exact(columns: tuple[Root, ...], target: Root) -> tuple[Fraction, ...] | None:
    """Solve ``sum c_k columns[k] = target`` exactly; None if inconsistent."""
    rows = len(target)
    cols = len(columns)
    m = [[Fraction(columns[c][r]) for c in range(cols)] + [Fraction(target[r])]
         for r in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((k for k in range(r, rows) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for k in range(rows):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    if any(all(x == 0 for x in m[k][:cols]) and m[k][cols] != 0 for k in range(rows)):
        return None
    sol = [Fraction(0)] * cols
    for k, c in enumerate(pivots):
        sol[c] = m[k][cols]
    return tuple(sol)


@lru_cache(maxsize=None)
def simple_coordinates(g: GroupFamily, v: Root) -> tuple[Fraction, ...]:
    """Coefficients of ``v`` in the basis of simple roots."""
    sol = _solve_exact(simple_roots(g), tuple(v))
    if sol is None:
        raise NonRootArgument(f"{v} is not in the span of the simple roots of {g}")
    return sol


def height(g: GroupFamily, v: Root) -> Fraction:
    return sum(simple_coordinates(g, v))


def _check_positive(g: GroupFamily, *roots: Root) -> None:
    pos = positive_roots(g)
    for r in roots:
        if tuple(r) not in pos:
            raise NonRootArgument(f"{r} is not a positive root of {g}")


def root_leq(g: GroupFamily, alpha: Root, beta: Root) -> bool:
    """Root poset order: ``beta - alpha`` is a nonnegative combination of simple roots."""
    _check_positive(g, alpha, beta)
    ca = simple_coordinates(g, tuple(alpha))
    cb = simple_coordinates(g, tuple(beta))
    return all(b - a >= 0 for a, b in zip(ca, cb))


def root_endpoints(g: GroupFamily, alpha: Root) -> tuple[int, int]:
    """Labels ``(i, j)`` with ``alpha = e_j - e_i`` (``e_{-k} = -e_k``, ``e_0 = 0``)."""
    _check_positive(g, alpha)
    support = [(k + 1, x) for k, x in enumerate(alpha) if x]
    if len(support) == 1:
        p, x = support[0]
        return (-p, p) if x == 2 else (0, p)
    (p, xp), (q, _) = support
    return (p, q) if xp < 0 else (-p, q)


@lru_cache(maxsize=None)
def _comparability_masks(g: GroupFamily) -> tuple[int, ...]:
    roots = _ordered_positive_roots(g)
    coords = [simple_coordinates(g, r) for r in roots]
    masks = []
    for a in range(len(roots)):
        mask = 0
        for b in range(len(roots)):
            d = [y - x for x, y in zip(coords[a], coords[b])]
            if all(t >= 0 for t in d) or all(t <= 0 for t in d):
                mask |= 1 << b
        masks.append(mask)
    return tuple(masks)


def is_antichain(g: GroupFamily, roots) -> bool:
    roots = list(roots)
    _check_positive(g, *roots)
    return all(not root_leq(g, a, b) for a in roots for b in roots if a != b)


def check_antichain(g: GroupFamily, roots) -> Antichain:
    ac = frozenset(tuple(r) for r in roots)
    if not is_antichain(g, ac):
        raise NotAntichain(f"roots {sorted(ac)} are not pairwise incomparable in {g}")
    return ac


def enumerate_antichains(g: GroupFamily) -> Iterator[Antichain]:
    """Every antichain of the root poset exactly once, the empty one first."""
    roots = _ordered_positive_roots(g)
    masks = _comparability_masks(g)
    count = len(roots)

    def extend(start: int, blocked: int, chosen: list[Root]):
        yield frozenset(chosen)
        for k in range(start, count):
            if not blocked >> k & 1:
                chosen.append(roots[k])
                yield from extend(k + 1, blocked | masks[k], chosen)
                chosen.pop()

    yield from extend(0, 0, [])


# Degrees and Coxeter numbers are standard background data; every count they
# predict is cross-checked by enumeration in the test suite.
def coxeter_number(g: GroupFamily) -> int:
    n = g.n
    return {"A": n, "B": 2 * n, "C": 2 * n, "D": 2 * n - 2}[g.family]


def degrees(g: GroupFamily) -> tuple[int, ...]:
    n = g.n
    if g.family == "A":
        return tuple(range(2, n + 1))
    if g.family in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))


def catalan_number(g: GroupFamily) -> int:
    """The W-Catalan number ``prod (h + d_i) / d_i``."""
    h = coxeter_number(g)
    value = Fraction(1)
    for d in degrees(g):
        value *= Fraction(h + d, d)
    assert value.denominator == 1
    return int(value)
