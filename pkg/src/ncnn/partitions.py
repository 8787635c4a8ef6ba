"""Classical partitions of ``{±1, ..., ±n}``, ground orders and bump graphs.

A :class:`ClassicalPartition` stores every nonzero block together with its
negative, plus the (possibly empty) zero block.  The element 0 is never stored;
it is injected only where a ground order contains it (type B nonnesting).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from . import kernels
from .errors import BadCut, InvariantViolation, OrderMismatch
from .roots import GroupFamily

NN = "nn"
NC = "nc"
MODES = (NN, NC)

Block = frozenset  # frozenset[int]


def _neg(block) -> frozenset:
    return frozenset(-x for x in block)


@dataclass(frozen=True)
class ClassicalPartition:
    n: int
    blocks: frozenset  # frozenset[Block]; nonzero blocks, closed under negation
    zero: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "blocks", frozenset(frozenset(b) for b in self.blocks))
        object.__setattr__(self, "zero", frozenset(self.zero))
        seen: set[int] = set()
        for b in list(self.blocks) + ([self.zero] if self.zero else []):
            if not b:
                raise InvariantViolation("empty block")
            if seen & b:
                raise InvariantViolation(f"block {sorted(b)} overlaps another block")
            seen |= b
        if seen != set(ground_set(self.n)):
            raise InvariantViolation(f"blocks do not cover ±[{self.n}]")
        for b in self.blocks:
            nb = _neg(b)
            if nb == b or b & nb:
                raise InvariantViolation(f"nonzero block {sorted(b)} meets its negative")
            if nb not in self.blocks:
                raise InvariantViolation(f"negative of {sorted(b)} is not a block")
        if _neg(self.zero) != self.zero:
            raise InvariantViolation("zero block is not closed under negation")

    @classmethod
    def from_blocks(cls, n: int, reps: Iterable[Iterable[int]], zero: Iterable[int] = ()):
        """Build from one representative per ``±`` pair of nonzero blocks."""
        reps = [frozenset(b) for b in reps]
        blocks = set(reps) | {_neg(b) for b in reps}
        if len(blocks) != 2 * len(reps):
            raise InvariantViolation("duplicate or self-negative representative blocks")
        zero = frozenset(zero)
        return cls(n, frozenset(blocks), zero | _neg(zero))

    @classmethod
    def from_set_partition(cls, n: int, blocks: Iterable[Iterable[int]]):
        """Type A convenience: a partition of ``[n]``."""
        return cls.from_blocks(n, blocks)

    @classmethod
    def singletons(cls, n: int):
        return cls.from_blocks(n, [[i] for i in range(1, n + 1)])

    def all_blocks(self) -> list[frozenset]:
        return list(self.blocks) + ([self.zero] if self.zero else [])

    def block_of(self, x: int) -> frozenset:
        if x in self.zero:
            return self.zero
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def representatives(self) -> list[frozenset]:
        """One block per ``±`` pair: the one holding the positive element of least absolute value."""
        reps = []
        for b in self.blocks:
            m = min(b, key=abs)
            if m > 0:
                reps.append(b)
        return sorted(reps, key=lambda b: min(abs(x) for x in b))

    def positive_blocks(self) -> list[frozenset]:
        """Blocks lying entirely in ``[n]``, as for a type A partition."""
        return sorted((b for b in self.blocks if min(b) > 0), key=min)

    def relabel(self, mapping, n: int | None = None) -> "ClassicalPartition":
        """Apply an odd map on labels (``mapping(-x) == -mapping(x)`` is assumed)."""
        return ClassicalPartition(
            self.n if n is None else n,
            frozenset(frozenset(mapping(x) for x in b) for b in self.blocks),
            frozenset(mapping(x) for x in self.zero),
        )

    def swap_sign(self, k: int) -> "ClassicalPartition":
        """Exchange the labels ``k`` and ``-k``."""
        return self.relabel(lambda x: -x if abs(x) == k else x)

    @cached_property
    def key(self) -> tuple:
        return (tuple(sorted(tuple(sorted(b)) for b in self.blocks)), tuple(sorted(self.zero)))

    def __lt__(self, other):
        return (self.n, self.key) < (other.n, other.key)

    def __repr__(self):
        reps = [sorted(b, key=lambda x: (abs(x), x)) for b in self.representatives()]
        return f"ClassicalPartition(n={self.n}, reps={reps}, zero={sorted(self.zero)})"


def ground_set(n: int) -> list[int]:
    return [i for i in range(-n, n + 1) if i]


def refines(p: ClassicalPartition, q: ClassicalPartition) -> bool:
    """Every block of ``p`` lies inside a block of ``q``."""
    return all(any(b <= c for c in q.all_blocks()) for b in p.all_blocks())


def check_partition(g: GroupFamily, p: ClassicalPartition) -> None:
    """Raise :class:`InvariantViolation` unless ``p`` is a classical partition for ``g``."""
    if p.n != g.n:
        raise InvariantViolation(f"partition of ±[{p.n}] used for {g} (n={g.n})")
    if g.family == "A":
        if p.zero or any(min(b) < 0 < max(b) for b in p.blocks):
            raise InvariantViolation("type A partitions have no zero block and no mixed signs")
    if g.family == "D" and len(p.zero) == 2:
        raise InvariantViolation("a D_n zero block cannot have exactly two elements")


# ---------------------------------------------------------------- ground orders


@dataclass(frozen=True, eq=False)
class GroundOrder:
    """A strict weak order given by a rank per element; equal ranks are incomparable."""

    n: int
    levels: tuple  # tuple[tuple[int, ...], ...]; ascending, each level one rank
    type_a: bool = False

    @cached_property
    def rank(self) -> dict[int, int]:
        return {x: r for r, level in enumerate(self.levels) for x in level}

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(x for level in self.levels for x in level)

    def less(self, a: int, b: int) -> bool:
        return self.rank[a] < self.rank[b]

    def is_total(self) -> bool:
        return all(len(level) == 1 for level in self.levels)

    def __eq__(self, other):
        return isinstance(other, GroundOrder) and (self.n, self.levels) == (other.n, other.levels)

    def __hash__(self):
        return hash((self.n, self.levels))

    def __repr__(self):
        parts = ["{" + ",".join(map(str, lv)) + "}" if len(lv) > 1 else str(lv[0])
                 for lv in self.levels]
        return "GroundOrder(" + " < ".join(parts) + ")"


def _total(n, seq, type_a=False) -> GroundOrder:
    return GroundOrder(n, tuple((x,) for x in seq), type_a)


def ground_order(g: GroupFamily, mode: str, d_cut: int | None = None,
                 variant: int = 0) -> GroundOrder:
    """The ground order for ``(g, mode)``.

    For ``D`` in noncrossing mode ``d_cut`` in ``2..n`` picks the insertion point of
    ``±1`` and ``variant`` (0 or 1) picks which of the two printed orders is returned:
    variant 0 puts ``-1`` among the negatives, variant 1 puts ``1`` there.
    """
    n = g.n
    needs_cut = g.family == "D" and mode == NC
    if needs_cut != (d_cut is not None):
        raise BadCut("d_cut is required exactly for D_n in noncrossing mode")
    if needs_cut and not (isinstance(d_cut, int) and 2 <= d_cut <= n):
        raise BadCut(f"d_cut must lie in 2..{n}, got {d_cut!r}")
    if variant not in (0, 1):
        raise BadCut("variant must be 0 or 1")
    neg_up = list(range(-n, 0))            # -n < ... < -1
    pos = list(range(1, n + 1))
    if g.family == "A":
        return _total(n, pos, type_a=True)
    if mode == NN:
        if g.family == "B":
            return _total(n, neg_up + [0] + pos)
        if g.family == "C":
            return _total(n, neg_up + pos)
        levels = tuple((x,) for x in range(-n, -1)) + ((-1, 1),) + tuple((x,) for x in range(2, n + 1))
        return GroundOrder(n, levels)
    if g.family in "BC":
        return _total(n, [-i for i in pos] + pos)
    s = -1 if variant == 0 else 1
    seq = ([-i for i in range(2, d_cut + 1)] + [s] + [-i for i in range(d_cut + 1, n + 1)]
           + list(range(2, d_cut + 1)) + [-s] + list(range(d_cut + 1, n + 1)))
    return _total(n, seq)


def _check_domain(p: ClassicalPartition, o: GroundOrder) -> None:
    if p.n != o.n:
        raise OrderMismatch(f"partition on ±[{p.n}] but order on ±[{o.n}]")
    dom = set(o.domain) - {0}
    expected = set(range(1, p.n + 1)) if o.type_a else set(ground_set(p.n))
    if dom != expected:
        raise OrderMismatch("ground order domain does not match the partition")


def bump_graph(p: ClassicalPartition, o: GroundOrder) -> frozenset[tuple[int, int]]:
    """Edges joining each element to its covers inside its block (lower end first)."""
    _check_domain(p, o)
    rank = o.rank
    edges = set()
    blocks = [b for b in p.blocks]
    zero = set(p.zero)
    if 0 in rank and zero:
        zero.add(0)
    if zero:
        blocks.append(frozenset(zero))
    for b in blocks:
        members = sorted((x for x in b if x in rank), key=rank.__getitem__)
        groups: list[list[int]] = []
        for x in members:
            if groups and rank[groups[-1][0]] == rank[x]:
                groups[-1].append(x)
            else:
                groups.append([x])
        for lower, upper in zip(groups, groups[1:]):
            for s in lower:
                for t in upper:
                    edges.add((s, t))
    return frozenset(edges)


def _rank_edges(p, o):
    rank = o.rank
    return [(rank[s], rank[t]) for s, t in sorted(bump_graph(p, o))]


def is_noncrossing_wrt(p: ClassicalPartition, o: GroundOrder) -> bool:
    return not kernels.has_crossing(_rank_edges(p, o))


def is_nonnesting_wrt(p: ClassicalPartition, o: GroundOrder) -> bool:
    return not kernels.has_nesting(_rank_edges(p, o))


def _d_zero_block_ok(p: ClassicalPartition) -> bool:
    # the central dots ±1 play the role of 0: a zero block must absorb them
    return not p.zero or 1 in p.zero


def is_classical_noncrossing(g: GroupFamily, p: ClassicalPartition) -> bool:
    check_partition(g, p)
    if g.family != "D":
        return is_noncrossing_wrt(p, ground_order(g, NC))
    return _d_zero_block_ok(p) and any(
        all(is_noncrossing_wrt(p, ground_order(g, NC, c, v)) for v in (0, 1))
        for c in range(2, g.n + 1)
    )


def is_classical_nonnesting(g: GroupFamily, p: ClassicalPartition) -> bool:
    check_partition(g, p)
    if g.family == "D" and not _d_zero_block_ok(p):
        return False
    return is_nonnesting_wrt(p, ground_order(g, NN))


def satisfies_mode(g: GroupFamily, mode: str, p: ClassicalPartition) -> bool:
    if mode == NN:
        return is_classical_nonnesting(g, p)
    if mode == NC:
        return is_classical_noncrossing(g, p)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------- types


@dataclass(frozen=True, order=True)
class PartitionType:
    zero_size: int
    pair_sizes: tuple[int, ...]  # weakly decreasing


def partition_type(p: ClassicalPartition) -> PartitionType:
    sizes = sorted((len(b) for b in p.representatives()), reverse=True)
    return PartitionType(len(p.zero), tuple(sizes))


# ---------------------------------------------------------------- enumeration


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def _signings(blocks: list[list[int]]) -> Iterator[list[list[int]]]:
    if not blocks:
        yield []
        return
    head, tail = blocks[0], blocks[1:]
    lead, others = head[0], head[1:]
    for signs in range(1 << len(others)):
        signed = [lead] + [-x if signs >> k & 1 else x for k, x in enumerate(others)]
        for rest in _signings(tail):
            yield [signed] + rest


def all_classical_partitions(g: GroupFamily) -> Iterator[ClassicalPartition]:
    """Every classical partition shape for ``g`` (no noncrossing/nonnesting filter)."""
    n = g.n
    universe = list(range(1, n + 1))
    zero_sizes = [0] if g.family == "A" else [k for k in range(n + 1) if not (g.family == "D" and k == 1)]
    for k in zero_sizes:
        for zero in combinations(universe, k):
            rest = [x for x in universe if x not in zero]
            for blocks in _set_partitions(rest):
                blocks = [sorted(b) for b in blocks]
                signed_iter = [blocks] if g.family == "A" else _signings(blocks)
                for signed in signed_iter:
                    yield ClassicalPartition.from_blocks(n, signed, zero)


def enumerate_classical(g: GroupFamily, mode: str) -> Iterator[ClassicalPartition]:
    """Noncrossing or nonnesting classical partitions, in deterministic order."""
    found = [p for p in all_classical_partitions(g) if satisfies_mode(g, mode, p)]
    yield from sorted(found)


# ---------------------------------------------------------------- fixed-space vectors


def block_vector(block, n: int) -> tuple[int, ...]:
    """``sum_b sign(b) e_|b|`` for a nonzero block, before sign normalisation."""
    v = [0] * n
    for b in block:
        v[abs(b) - 1] += 1 if b > 0 else -1
    return tuple(v)


def is_switching_integer(block) -> bool:
    """Switching with integer signs: holds both a positive and a negative element."""
    return min(block) < 0 < max(block)


def canonical_vector(block, n: int) -> tuple[int, ...]:
    """``f(B)``: ``>=_lex 0`` for nonswitching blocks, ``<=_lex 0`` for switching ones."""
    v = block_vector(block, n)
    lead = next(x for x in v if x)
    want = -1 if is_switching_integer(block) else 1
    return v if lead == want else tuple(-x for x in v)


def canonical_vectors(p: ClassicalPartition) -> tuple[tuple[int, ...], ...]:
    """The canonical basis of the fixed space, ascending in lex order."""
    return tuple(sorted({canonical_vector(b, p.n) for b in p.blocks}))
