"""Type-preserving bijections between nonnesting and noncrossing classical partitions."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import permutations

from .errors import InternalContradiction, InvalidStatistics, PredicateViolation
from .partitions import NC, NN, ClassicalPartition, satisfies_mode
from .roots import GroupFamily
from .statistics import (
    MINUS,
    PLUS,
    PM,
    StatisticBundle,
    TaggedBPartition,
    central_unmerge,
    extract_statistics,
    lex_down_count,
    omega_of,
    sigma_B,
    sigma_B_inverse,
    sigma_D,
    sigma_D_inverse,
    standard_basis,
    validate_statistics,
)

log = logging.getLogger(__name__)

NN_TO_NC = "nn->nc"
NC_TO_NN = "nc->nn"
DIRECTIONS = {NN_TO_NC: (NN, NC), NC_TO_NN: (NC, NN)}


@dataclass
class OpenBlock:
    """A partially built block and the number of elements it still needs.

    ``fictive`` is the index of the switching block it was opened for, if any.
    """

    content: list[int] = field(default_factory=list)
    remaining: int = 0
    fictive: int | None = None

    def key(self, mode: str) -> tuple[int, int]:
        # fictive markers sit below every real element
        if self.content:
            return (1, self.content[-1])
        return (0, -self.fictive if mode == NC else self.fictive)


def _sweep(n: int, mode: str, a, mu, nu) -> tuple[list[list[int]], list[list[int]]]:
    """Place ``1..n`` one at a time; returns (nonswitching blocks, switching halves)."""
    halves = [OpenBlock([], v, i) for i, v in enumerate(nu, start=1)]
    open_blocks = [b for b in halves if b.remaining]
    closed: list[list[int]] = []
    starts = dict(zip(a, mu))
    for j in range(1, n + 1):
        if j in starts:
            block = OpenBlock([j], starts[j] - 1)
            closed.append(block.content)
            if block.remaining:
                open_blocks.append(block)
            continue
        if not open_blocks:
            raise InternalContradiction(f"no open block for element {j}")
        keys = [b.key(mode) for b in open_blocks]
        target = max(keys) if mode == NC else min(keys)
        if keys.count(target) != 1:
            raise InternalContradiction("tie among open blocks")
        block = open_blocks[keys.index(target)]
        block.content.append(j)
        block.remaining -= 1
        if not block.remaining:
            open_blocks.remove(block)
    if open_blocks:
        raise InternalContradiction("blocks left unfilled after the sweep")
    return closed, [h.content for h in halves]


def _pair_halves(n: int, closed, halves, zero_last: bool) -> ClassicalPartition:
    k = len(halves)
    reps = [frozenset(b) for b in closed]
    zero: frozenset = frozenset()
    if zero_last:
        zero = frozenset(halves[-1])
        pairs = [(i, k - 2 - i) for i in range(k - 1)]
    else:
        pairs = [(i, k - 1 - i) for i in range(k)]
    for i, j in pairs:
        if i == j:
            zero = frozenset(halves[i])
        elif i < j:
            reps.append(frozenset(halves[i]) | {-x for x in halves[j]})
    return ClassicalPartition.from_blocks(n, reps, zero)


def _rebuild_abc(family: str, mode: str, n: int, a, mu, nu) -> ClassicalPartition:
    closed, halves = _sweep(n, mode, a, mu, nu)
    zero_last = family == "B" and mode == NN and len(nu) % 2 == 1
    return _pair_halves(n, closed, halves, zero_last)


def _shift_up(p: ClassicalPartition, extra_zero=False) -> ClassicalPartition:
    up = lambda x: x + 1 if x > 0 else x - 1  # noqa: E731
    blocks = {frozenset(map(up, b)) for b in p.blocks}
    zero = frozenset(map(up, p.zero))
    if extra_zero:
        zero |= {1, -1}
    else:
        blocks |= {frozenset({1}), frozenset({-1})}
    return ClassicalPartition(p.n + 1, frozenset(blocks), zero)


def _rebuild_d_nn(n: int, s: StatisticBundle) -> ClassicalPartition:
    a_low = tuple(x - 1 for x in s.a)
    nu = s.nu
    if not s.c:
        return _shift_up(_rebuild_abc("C", NN, n - 1, a_low, s.mu, nu))
    if s.c == (PM,):
        return _shift_up(_rebuild_abc("B", NN, n - 1, a_low, s.mu, nu), extra_zero=True)
    flip = s.c in ((MINUS,), (PLUS, MINUS))
    if len(s.c) == 1:
        p = _rebuild_abc("C", NN, n, (1,) + s.a, (nu[-1] + 1,) + s.mu, nu[:-1])
    else:
        p = _rebuild_abc("C", NN, n, s.a, s.mu, (nu[-1] + 1,) + nu[:-1])
    return p.swap_sign(1) if flip else p


def _rebuild_d_nc(n: int, s: StatisticBundle) -> ClassicalPartition:
    base = _rebuild_abc("B", NC, n - 1, tuple(x - 1 for x in s.a), s.mu, s.nu)
    return central_unmerge(TaggedBPartition(base, s.c, s.xi))


def rebuild(g: GroupFamily, mode: str, s: StatisticBundle) -> ClassicalPartition:
    """The unique partition of the given mode carrying the statistics ``s``."""
    v = validate_statistics(g, s, mode)
    if not v:
        raise InvalidStatistics(f"{s} fails {list(v.violations)} for {g} ({mode})")
    n = g.n
    if g.family == "D":
        p = _rebuild_d_nn(n, s) if mode == NN else _rebuild_d_nc(n, s)
    else:
        p = _rebuild_abc(g.family, mode, n, s.a, s.mu, s.nu)
    if not satisfies_mode(g, mode, p) or extract_statistics(g, mode, p) != s:
        raise InternalContradiction(f"rebuilt {p!r} does not carry {s}")
    return p


def transport(g: GroupFamily, direction: str, s: StatisticBundle) -> StatisticBundle:
    """Carry a statistic bundle across to the other mode."""
    if g.family == "A" or g.family == "C":
        return s
    if g.family == "B":
        nu = sigma_B_inverse(s.nu) if direction == NN_TO_NC else sigma_B(s.nu)
        return StatisticBundle(s.a, s.mu, nu)
    if direction == NN_TO_NC:
        nu_hat, xi, c = sigma_D(s.nu, s.c)
        return StatisticBundle(s.a, s.mu, nu_hat, c, xi)
    nu, c = sigma_D_inverse(s.nu, s.xi, s.c)
    return StatisticBundle(s.a, s.mu, nu, c, nu[len(nu) - len(c):] if c else ())


def convert(g: GroupFamily, direction: str, p: ClassicalPartition) -> ClassicalPartition:
    source, target = DIRECTIONS[direction]
    if not satisfies_mode(g, source, p):
        raise PredicateViolation(f"{p!r} is not a {source} partition of {g}")
    return rebuild(g, target, transport(g, direction, extract_statistics(g, source, p)))


# ---------------------------------------------------------------- central theorem check


def _count(u, value) -> int:
    return sum(1 for t in u if t == value)


def _first_two_product(u) -> int:
    nz = [t for t in u if t]
    return nz[0] * nz[1] if len(nz) > 1 else 0


def row_values(u, omega) -> tuple[int, int, int, int]:
    """``(#(u,1), #(u,-1), |down(u) ∩ E|, |down(u) ∩ omega|)``."""
    n = len(u)
    return (_count(u, 1), _count(u, -1), lex_down_count(u, standard_basis(n)),
            lex_down_count(u, omega))


def _pair_ok(u, v, omega_x, omega_y) -> bool:
    if row_values(u, omega_x) != row_values(v, omega_y):
        return False
    if _count(u, -1) > 1 and _count(u, 1) > 0:
        return _first_two_product(u) != _first_two_product(v)
    return True


def central_pairing(g: GroupFamily, x, y):
    """The index-by-index pairing of the two bases, or None when it fails the check.

    ``x`` and ``y`` may be partitions, group elements or antichains.
    """
    bx, by = omega_of(g, x), omega_of(g, y)
    if bx.gamma != by.gamma or len(bx.omega) != len(by.omega):
        return None
    pairs = list(zip(bx.omega, by.omega))
    if all(_pair_ok(u, v, bx.omega, by.omega) for u, v in pairs):
        return pairs
    return None


def verify_central_theorem(g: GroupFamily, x, y) -> bool:
    if central_pairing(g, x, y) is not None:
        return True
    bx, by = omega_of(g, x), omega_of(g, y)
    if bx.gamma != by.gamma or len(bx.omega) != len(by.omega):
        return False
    for perm in permutations(by.omega):
        if all(_pair_ok(u, v, bx.omega, by.omega) for u, v in zip(bx.omega, perm)):
            log.warning("index pairing failed but another bijection works for %r, %r", x, y)
            return True
    return False
