"""Signed-permutation models of the classical groups and the absolute order."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator

from . import kernels
from .errors import MembershipError
from .partitions import ClassicalPartition, canonical_vectors
from .roots import (
    GroupFamily,
    Root,
    check_antichain,
    ordered_positive_roots,
    root_endpoints,
)


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """A bijection of ``{±1..±n}`` commuting with negation, stored as ``w(1..n)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(abs(x) for x in self.images) != list(range(1, len(self.images) + 1)):
            raise MembershipError(f"{self.images} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        y = self.images[abs(i) - 1]
        return y if i > 0 else -y

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition ``(self * other)(i) = self(other(i))``."""
        return SignedPermutation(tuple(self(x) for x in other.images))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            inv[abs(y) - 1] = i if y > 0 else -i
        return SignedPermutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    def sign_changes(self) -> int:
        return sum(1 for x in self.images if x < 0)

    def act(self, v) -> tuple:
        """Action on ``R^n``: ``e_i -> sign(w(i)) e_|w(i)|``."""
        out = [0] * self.n
        for i, y in enumerate(self.images):
            out[abs(y) - 1] = v[i] if y > 0 else -v[i]
        return tuple(out)

    def orbits(self) -> list[frozenset]:
        seen: set[int] = set()
        orbits = []
        for start in list(range(1, self.n + 1)) + list(range(-1, -self.n - 1, -1)):
            if start in seen:
                continue
            orbit = []
            x = start
            while x not in seen:
                seen.add(x)
                orbit.append(x)
                x = self(x)
            orbits.append(frozenset(orbit))
        return orbits


@dataclass(frozen=True)
class FixedSpaceDescription:
    basis: tuple  # canonical basis, ascending lex order
    zeroed_coords: frozenset

    @property
    def dim(self) -> int:
        return len(self.basis)


def check_member(g: GroupFamily, w: SignedPermutation) -> None:
    if w.n != g.n:
        raise MembershipError(f"{w.images} acts on {w.n} coordinates, {g} needs {g.n}")
    if g.family == "A" and w.sign_changes():
        raise MembershipError(f"{w.images} changes signs; not in {g}")
    if g.family == "D" and w.sign_changes() % 2:
        raise MembershipError(f"{w.images} has an odd number of sign changes; not in {g}")


def elements(g: GroupFamily) -> Iterator[SignedPermutation]:
    n = g.n
    for perm in permutations(range(1, n + 1)):
        if g.family == "A":
            yield SignedPermutation(perm)
            continue
        for signs in product((1, -1), repeat=n):
            if g.family == "D" and signs.count(-1) % 2:
                continue
            yield SignedPermutation(tuple(s * x for s, x in zip(signs, perm)))


def reflection(g: GroupFamily, alpha: Root) -> SignedPermutation:
    """The reflection ``v -> v - 2<v,a>/<a,a> a`` as a signed permutation."""
    n = g.n
    norm = sum(x * x for x in alpha)
    images = []
    for i in range(n):
        coeff = 2 * alpha[i]
        v = [0] * n
        v[i] = 1
        if coeff:
            v = [x * norm - coeff * a for x, a in zip(v, alpha)]
            v = [x // norm for x in v]
        (k, s), = [(k, x) for k, x in enumerate(v) if x]
        images.append(s * (k + 1))
    return SignedPermutation(tuple(images))


def reflections(g: GroupFamily) -> dict[Root, SignedPermutation]:
    """One reflection per positive root, keyed by the root."""
    return {a: reflection(g, a) for a in ordered_positive_roots(g)}


def standard_coxeter_element(g: GroupFamily) -> SignedPermutation:
    n = g.n
    if g.family == "A":
        return SignedPermutation(tuple(range(2, n + 1)) + (1,))
    if g.family in "BC":
        return SignedPermutation(tuple(range(2, n + 1)) + (-1,))
    return SignedPermutation((-1,) + tuple(range(3, n + 1)) + (-2,))


def partition_of_element(g: GroupFamily, w: SignedPermutation) -> ClassicalPartition:
    """Orbits of ``w``; orbits meeting their own negative form the zero block."""
    check_member(g, w)
    blocks, zero = [], set()
    for orbit in w.orbits():
        if any(-x in orbit for x in orbit):
            zero |= orbit
        else:
            blocks.append(orbit)
    return ClassicalPartition(g.n, frozenset(blocks), frozenset(zero))


def fixed_space(g: GroupFamily, w: SignedPermutation) -> FixedSpaceDescription:
    p = partition_of_element(g, w)
    return FixedSpaceDescription(canonical_vectors(p), frozenset(x for x in p.zero if x > 0))


def absolute_length(g: GroupFamily, w: SignedPermutation) -> int:
    """Reflection length, as the codimension of the fixed space in the root span."""
    check_member(g, w)
    return kernels.reflection_length(w.images)


def absolute_leq(g: GroupFamily, w: SignedPermutation, x: SignedPermutation) -> bool:
    lw = absolute_length(g, w)
    lx = absolute_length(g, x)
    return lx == lw + absolute_length(g, w.inverse() * x)


def uniform_noncrossing(g: GroupFamily) -> frozenset[SignedPermutation]:
    """The interval ``[1, c]`` of the absolute order for the standard Coxeter element."""
    c = standard_coxeter_element(g)
    lc = kernels.reflection_length(c.images)
    length = kernels.reflection_length
    out = []
    for w in elements(g):
        if length(w.images) + length((w.inverse() * c).images) == lc:
            out.append(w)
    return frozenset(out)


def _union_find_blocks(n: int, edges: Iterable[tuple[int, int]]):
    parent = {x: x for x in range(-n, n + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comps: dict[int, set[int]] = {}
    for x in parent:
        comps.setdefault(find(x), set()).add(x)
    return list(comps.values())


def partition_of_antichain(g: GroupFamily, antichain) -> ClassicalPartition:
    """Blocks are the components of the graph with one edge pair per root."""
    ac = check_antichain(g, antichain)
    edges = []
    for alpha in ac:
        i, j = root_endpoints(g, alpha)
        edges += [(i, j), (-i, -j)]
    blocks, zero = [], set()
    for comp in _union_find_blocks(g.n, edges):
        if 0 in comp or any(-x in comp for x in comp):
            zero |= comp
        else:
            blocks.append(frozenset(comp))
    zero.discard(0)
    return ClassicalPartition(g.n, frozenset(blocks), frozenset(zero))


def product_of_reflections(g: GroupFamily, roots) -> SignedPermutation:
    w = SignedPermutation.identity(g.n)
    for alpha in roots:
        w = w * reflection(g, tuple(alpha))
    return w


def fix_of_antichain(g: GroupFamily, antichain, order=None, rng: random.Random | None = None
                     ) -> FixedSpaceDescription:
    """Fixed space of the product of the antichain's reflections.

    ``order`` gives the factor order explicitly; otherwise a sorted order is used,
    or a shuffled one when ``rng`` is supplied.
    """
    ac = check_antichain(g, antichain)
    factors = list(order) if order is not None else sorted(ac)
    if order is not None and sorted(map(tuple, factors)) != sorted(ac):
        raise ValueError("order must list each root of the antichain once")
    if rng is not None and order is None:
        rng.shuffle(factors)
    return fixed_space(g, product_of_reflections(g, factors))


def cayley_distances(g: GroupFamily) -> dict[SignedPermutation, int]:
    """Breadth-first distances from the identity in the Cayley graph generated by all reflections."""
    gens = list(reflections(g).values())
    start = SignedPermutation.identity(g.n)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for t in gens:
                v = w * t
                if v not in dist:
                    dist[v] = dist[w] + 1
                    nxt.append(v)
        frontier = nxt
    return dist
