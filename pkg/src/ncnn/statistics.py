"""Partition statistics, their reorderings, central merging and fixed-space bases."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from .errors import BadArity, InvalidTags, NotNoncrossing, PredicateViolation
from .groups import SignedPermutation
from .partitions import (
    NC,
    NN,
    ClassicalPartition,
    canonical_vectors,
    is_classical_noncrossing,
    satisfies_mode,
)
from .roots import GroupFamily

PLUS, MINUS, PM = "+", "-", "pm"
C_SYMBOLS = {PLUS: frozenset({1}), MINUS: frozenset({-1}), PM: frozenset({1, -1})}


@dataclass(frozen=True)
class StatisticBundle:
    a: tuple[int, ...] = ()
    mu: tuple[int, ...] = ()
    nu: tuple[int, ...] = ()
    c: tuple[str, ...] = ()
    xi: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("a", "mu", "nu", "c", "xi"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def to_dict(self) -> dict:
        return {"a": list(self.a), "mu": list(self.mu), "nu": list(self.nu),
                "c": list(self.c), "xi": list(self.xi)}

    @classmethod
    def from_dict(cls, d: dict) -> "StatisticBundle":
        return cls(*(tuple(d.get(k, ())) for k in ("a", "mu", "nu", "c", "xi")))


@dataclass(frozen=True)
class StarredStatistics:
    a_star: tuple[int, ...]
    mu_star: tuple[int, ...]
    theta_star: tuple[tuple[int, int], ...]
    eta_star: int


@dataclass(frozen=True)
class TaggedBPartition:
    """A noncrossing ``B_{n-1}`` partition with tags.

    ``base`` uses the labels ``1..n-1``; label ``k`` stands for ``k + 1`` of the
    ``D_n`` partition it came from.
    """

    base: ClassicalPartition
    c: tuple[str, ...]
    xi: tuple[int, ...]


@dataclass(frozen=True)
class FixedSpaceBasis:
    omega: tuple  # ascending lex order
    gamma: int
    sequence: tuple = field(default=(), compare=True)  # insertion order (by leading index)


@dataclass(frozen=True)
class BlockInfo:
    block: frozenset
    positive: bool
    negative: bool
    switching: bool
    least_positive: int | None
    lp_rank: int | None = None


# ---------------------------------------------------------------- block classification


def _sign(g: GroupFamily, x: int, starred: bool = False) -> int:
    # in type D (unstarred) ±1 behave like the element 0
    if g.family == "D" and not starred and abs(x) == 1:
        return 0
    return (x > 0) - (x < 0)


def classify_blocks(g: GroupFamily, p: ClassicalPartition, starred: bool = False) -> list[BlockInfo]:
    """Label each block and rank the positive ones by least positive element."""
    infos = []
    for b in p.all_blocks():
        signs = [_sign(g, x, starred) for x in b]
        pos = any(s > 0 for s in signs)
        infos.append(BlockInfo(
            block=b,
            positive=pos,
            negative=any(s < 0 for s in signs),
            switching=pos and any(s <= 0 for s in signs),
            least_positive=min((x for x, s in zip(b, signs) if s > 0), default=None),
        ))
    ranked = sorted((i for i in infos if i.positive), key=lambda i: i.least_positive)
    order = {id(info): k for k, info in enumerate(ranked, start=1)}
    return [BlockInfo(i.block, i.positive, i.negative, i.switching, i.least_positive,
                      order.get(id(i))) for i in infos]


def _positive_count(g, block, starred=False) -> int:
    return sum(1 for x in block if _sign(g, x, starred) > 0)


def _a_mu_nu(g: GroupFamily, p: ClassicalPartition):
    infos = sorted((i for i in classify_blocks(g, p) if i.positive), key=lambda i: i.lp_rank)
    a, mu, nu, switching = [], [], [], []
    for info in infos:
        if info.switching:
            nu.append(_positive_count(g, info.block))
            switching.append(info)
        else:
            a.append(info.least_positive)
            mu.append(len(info.block))
    return tuple(a), tuple(mu), tuple(nu), switching


def _c_symbol(block) -> str:
    meet = frozenset(block) & {1, -1}
    return next(k for k, v in C_SYMBOLS.items() if v == meet)


# ---------------------------------------------------------------- central merging


def central_merge(p: ClassicalPartition) -> TaggedBPartition:
    """Merge the blocks holding ``±1``, drop ``±1`` and shift labels down by one."""
    g = GroupFamily("D", p.n)
    if not is_classical_noncrossing(g, p):
        raise NotNoncrossing(f"{p!r} is not noncrossing for {g}")
    shift = lambda x: x - 1 if x > 0 else x + 1  # noqa: E731
    if 1 in p.zero:
        zero = p.zero - {1, -1}
        blocks = p.blocks
        c, xi = (PM,), (sum(1 for x in zero if x > 0),)
    else:
        b1 = p.block_of(1)
        bm1 = p.block_of(-1)
        if len(b1) == 1:
            blocks, zero, c, xi = p.blocks - {b1, bm1}, frozenset(), (), ()
        else:
            zero = (b1 | bm1) - {1, -1}
            blocks = p.blocks - {b1, bm1}
            tagged = sorted(
                (b for b in (b1, bm1) if any(x > 1 for x in b)),
                key=lambda b: min(x for x in b if x > 1),
            )
            c = tuple(_c_symbol(b) for b in tagged)
            xi = tuple(sum(1 for x in b if x > 1) for b in tagged)
    base = ClassicalPartition(p.n - 1, frozenset(frozenset(map(shift, b)) for b in blocks),
                              frozenset(map(shift, zero)))
    return TaggedBPartition(base, c, xi)


def _c_problems(c) -> list[str]:
    if any(s not in C_SYMBOLS for s in c):
        return ["c_symbols"]
    if len(c) > 2 or any(C_SYMBOLS[s] & C_SYMBOLS[r] for k, s in enumerate(c) for r in c[k + 1:]):
        return ["c_disjoint"]
    return []


def _tag_problems(c, xi, zero_positives: int) -> list[str]:
    problems = _c_problems(c)
    if len(c) != len(xi):
        problems.append("tags_len")
    if any(not isinstance(x, int) or x < 1 for x in xi):
        problems.append("xi_positive")
    if sum(xi) != zero_positives:
        problems.append("tags_sum")
    return problems


def check_tags(t: TaggedBPartition) -> list[str]:
    return _tag_problems(t.c, t.xi, sum(1 for x in t.base.zero if x > 0))


def central_unmerge(t: TaggedBPartition) -> ClassicalPartition:
    """Inverse of :func:`central_merge`."""
    problems = check_tags(t)
    if problems:
        raise InvalidTags(f"tagged partition violates {problems}")
    if not is_classical_noncrossing(GroupFamily("B", t.base.n), t.base):
        raise NotNoncrossing("base partition is not noncrossing for B")
    n = t.base.n + 1
    unshift = lambda x: x + 1 if x > 0 else x - 1  # noqa: E731
    blocks = {frozenset(map(unshift, b)) for b in t.base.blocks}
    zero = frozenset(map(unshift, t.base.zero))
    tops = sorted(x for x in zero if x > 0)
    if not t.c:
        blocks |= {frozenset({1}), frozenset({-1})}
    elif t.c == (PM,):
        zero = zero | {1, -1}
    else:
        s = 1 if t.c[0] == PLUS else -1
        i = t.xi[0]
        r1 = frozenset(tops[:i]) | {-x for x in tops[i:]} | {s}
        blocks |= {r1, frozenset(-x for x in r1)}
        zero = frozenset()
    return ClassicalPartition(n, frozenset(blocks), zero)


# ---------------------------------------------------------------- extraction


def extract_statistics(g: GroupFamily, mode: str, p: ClassicalPartition) -> StatisticBundle:
    if not satisfies_mode(g, mode, p):
        raise PredicateViolation(f"{p!r} is not {'noncrossing' if mode == NC else 'nonnesting'} for {g}")
    if g.family == "D" and mode == NC:
        t = central_merge(p)
        a, mu, nu, _ = _a_mu_nu(GroupFamily("B", g.n - 1), t.base)
        return StatisticBundle(tuple(x + 1 for x in a), mu, nu, t.c, t.xi)
    a, mu, nu, switching = _a_mu_nu(g, p)
    if g.family == "A":
        return StatisticBundle(a, mu)
    if g.family in "BC":
        return StatisticBundle(a, mu, nu)
    tagged = [i for i in switching if i.block & {1, -1}]
    c = tuple(_c_symbol(i.block) for i in tagged)
    xi = nu[len(nu) - len(c):] if c else ()
    return StatisticBundle(a, mu, nu, c, xi)


def starred_statistics(g: GroupFamily, p: ClassicalPartition) -> StarredStatistics:
    """Statistics with integer signs taken literally (``±1`` included)."""
    infos = classify_blocks(g, p, starred=True)
    nonswitching = sorted((i for i in infos if i.positive and not i.switching),
                          key=lambda i: i.least_positive)
    joint = []
    for i in infos:
        if i.switching and i.block != p.zero:
            neg = frozenset(-x for x in i.block)
            if i.least_positive < min(x for x in neg if x > 0):
                joint.append(i.block)
    joint.sort(key=lambda b: min(x for x in b if x > 0))
    return StarredStatistics(
        a_star=tuple(i.least_positive for i in nonswitching),
        mu_star=tuple(len(i.block) for i in nonswitching),
        theta_star=tuple((sum(1 for x in b if x > 0), sum(1 for x in b if x < 0)) for b in joint),
        eta_star=sum(1 for x in p.zero if x > 0),
    )


# ---------------------------------------------------------------- reorderings


def sigma_B(nu: Sequence[int]) -> tuple[int, ...]:
    """Move the middle entry of an odd-length tuple to the end."""
    nu = tuple(nu)
    k = len(nu)
    if k % 2 == 0:
        return nu
    mid = (k - 1) // 2
    return nu[:mid] + nu[mid + 1:] + (nu[mid],)


def sigma_B_inverse(nu: Sequence[int]) -> tuple[int, ...]:
    nu = tuple(nu)
    k = len(nu)
    if k % 2 == 0:
        return nu
    mid = (k - 1) // 2
    return nu[:mid] + (nu[-1],) + nu[mid:-1]


def sigma_D(nu: Sequence[int], c: Sequence[str]):
    """``(nu, c) -> (nu_hat, xi_inv, c_inv)``; ``xi`` is the last ``len(c)`` entries of ``nu``."""
    nu, c = tuple(nu), tuple(c)
    k, l = len(nu), len(c)
    if l > 2 or l > k:
        raise BadArity(f"c has length {l} but nu has length {k}")
    xi = nu[k - l:] if l else ()
    if l == 2:
        if k % 2:
            raise BadArity("l = 2 needs an even-length nu")
        h = k // 2
        nu_hat = nu[:h - 1] + (nu[-2] + nu[-1],) + nu[h - 1:k - 2]
        return nu_hat, (xi[1], xi[0]), (c[1], c[0])
    if l == 1:
        return sigma_B_inverse(nu), xi, c
    return nu, (), ()


def sigma_D_inverse(nu_hat: Sequence[int], xi: Sequence[int], c: Sequence[str]):
    """``(nu_hat, xi_inv, c_inv) -> (nu, c)``."""
    nu_hat, xi, c = tuple(nu_hat), tuple(xi), tuple(c)
    l = len(c)
    if len(xi) != l or l > 2:
        raise BadArity("xi and c must have equal length at most 2")
    if l == 2:
        k = len(nu_hat) + 1
        h = k // 2
        if k % 2 or nu_hat[h - 1] != xi[0] + xi[1]:
            raise BadArity("merged entry of nu_hat does not match xi")
        nu = nu_hat[:h - 1] + nu_hat[h:] + (xi[1], xi[0])
        return nu, (c[1], c[0])
    if l == 1:
        nu = sigma_B(nu_hat)
        if nu[-1] != xi[0]:
            raise BadArity("moved entry of nu_hat does not match xi")
        return nu, c
    return nu_hat, c


# ---------------------------------------------------------------- validation


@dataclass(frozen=True)
class Validation:
    ok: bool
    violations: tuple[str, ...]

    def __bool__(self):
        return self.ok


def _bounds_ok(a, mu, total_nu, a0, mu0) -> bool:
    prev = a0
    acc = mu0
    for ai, mi in zip(a, mu):
        if not (prev < ai <= acc + total_nu):
            return False
        prev = ai
        acc += mi
    return True


def validate_statistics(g: GroupFamily, s: StatisticBundle, mode: str = NN) -> Validation:
    """Check a bundle against the characterisation for ``(g, mode)``."""
    n = g.n
    bad = []
    ints = list(s.a) + list(s.mu) + list(s.nu) + list(s.xi)
    if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in ints):
        return Validation(False, ("positive",))
    if len(s.a) != len(s.mu):
        bad.append("lengths")
    if g.family == "A":
        if s.nu or s.c or s.xi:
            bad.append("extra")
        if n != sum(s.mu):
            bad.append("sum")
        if not _bounds_ok(s.a, s.mu, 0, 0, 1):
            bad.append("bounds")
    elif g.family in "BC":
        if s.c or s.xi:
            bad.append("extra")
        if n != sum(s.mu) + sum(s.nu):
            bad.append("sum")
        if not _bounds_ok(s.a, s.mu, sum(s.nu), 0, 1):
            bad.append("bounds")
    else:
        if n - 1 != sum(s.mu) + sum(s.nu):
            bad.append("sum")
        if not _bounds_ok(s.a, s.mu, sum(s.nu), 1, 2):
            bad.append("bounds")
        k, l = len(s.nu), len(s.c)
        if mode == NN:
            bad += _c_problems(s.c)
            if (k - l) % 2:
                bad.append("parity")
            if l > k:
                bad.append("c_len")
            elif s.xi != (s.nu[k - l:] if l else ()):
                bad.append("xi_tail")
        else:
            zero_pos = s.nu[(k - 1) // 2] if k % 2 else 0
            bad += _tag_problems(s.c, s.xi, zero_pos)
    return Validation(not bad, tuple(bad))


# ---------------------------------------------------------------- fixed-space bases


def _leading_index(v) -> int:
    return next(k for k, x in enumerate(v) if x)


def canonical_basis(p: ClassicalPartition) -> FixedSpaceBasis:
    omega = canonical_vectors(p)
    return FixedSpaceBasis(omega, sum(1 for x in p.zero if x > 0),
                           tuple(sorted(omega, key=_leading_index)))


def _fix_membership(g: GroupFamily | None, x):
    if isinstance(x, ClassicalPartition):
        n = x.n
        constraints = []
        for b in x.blocks:
            b = sorted(b)
            constraints += [(b[0], y) for y in b[1:]]

        def member(v):
            val = lambda e: v[abs(e) - 1] * (1 if e > 0 else -1)  # noqa: E731
            return (all(v[abs(z) - 1] == 0 for z in x.zero)
                    and all(val(s) == val(t) for s, t in constraints))
        return n, member
    if isinstance(x, SignedPermutation):
        return x.n, lambda v: x.act(v) == tuple(v)
    roots = [tuple(r) for r in x]
    n = g.n
    return n, lambda v: all(sum(a * b for a, b in zip(v, r)) == 0 for r in roots)


def omega_of(g: GroupFamily | None, x) -> FixedSpaceBasis:
    """Run the stepwise lex-minimal construction on ``Fix(x)`` by brute force over ``{-1,0,1}^n``.

    ``x`` may be a classical partition, a group element or an antichain
    (``g`` is only needed for antichains).
    """
    n, member = _fix_membership(g, x)
    candidates = [v for v in product((-1, 0, 1), repeat=n) if member(v)]
    gamma = sum(1 for k in range(n) if all(v[k] == 0 for v in candidates))
    chosen: list[tuple[int, ...]] = []
    for i in range(n):
        def distance(u, i=i):
            return tuple(abs((1 if k == i else 0) - u[k]) for k in range(n))
        best = min(distance(u) for u in candidates)
        winners = [u for u in candidates if distance(u) == best]
        assert len(winners) == 1, "lex-minimal vector is not unique"
        u = winners[0]
        if not any(u):
            continue
        if np.linalg.matrix_rank(np.array(chosen + [u])) == len(chosen) + 1:
            chosen.append(tuple(-t for t in u) if -1 in u else u)
    return FixedSpaceBasis(tuple(sorted(chosen)), gamma, tuple(chosen))


def lex_down_count(u, vectors) -> int:
    """``|{v in vectors : v <=_lex u}|``."""
    u = tuple(u)
    return sum(1 for v in vectors if tuple(v) <= u)


def standard_basis(n: int) -> list[tuple[int, ...]]:
    return [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]


def fixed_space_equations(basis: FixedSpaceBasis, n: int | None = None) -> str:
    """Describe the span of ``basis`` by coordinate equations, e.g. ``v1=v5=-v2 and v3=0``.

    ``n`` is needed only when the basis is empty.
    """
    vectors = basis.sequence or basis.omega
    if n is None:
        n = len(vectors[0])
    parts = []
    for u in vectors:
        support = [k for k in range(n) if u[k]]
        if len(support) < 2:
            continue
        lead = u[support[0]]
        same = [f"v{k + 1}" for k in support if u[k] == lead]
        other = [f"-v{k + 1}" for k in support if u[k] != lead]
        parts.append("=".join(same + other))
    for k in range(n):
        if all(u[k] == 0 for u in vectors):
            parts.append(f"v{k + 1}=0")
    return " and ".join(parts)
