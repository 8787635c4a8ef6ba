from itertools import combinations

import pytest

from conftest import root_closure
from ncnn.errors import NonRootArgument, NotAntichain, RankError
from ncnn.roots import (
    GroupFamily,
    catalan_number,
    check_antichain,
    enumerate_antichains,
    height,
    is_antichain,
    positive_roots,
    root_endpoints,
    root_from_endpoints,
    root_leq,
    simple_roots,
    unit,
)

FAMILY_RANKS = [("A", r) for r in range(1, 6)] + [("B", r) for r in range(1, 5)] + \
    [("C", r) for r in range(1, 5)] + [("D", r) for r in range(2, 6)]


def e(n, i, scale=1):
    return unit(n, i, scale)


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class TestGroupFamily:
    def test_ambient_dimension(self):
        assert GroupFamily("A", 3).n == 4
        assert GroupFamily("B", 3).n == 3
        assert GroupFamily("D", 4).ambient_dim == 4

    @pytest.mark.parametrize("family,rank", [("D", 1), ("A", 0), ("E", 6), ("B", -2)])
    def test_invalid(self, family, rank):
        with pytest.raises(RankError):
            GroupFamily(family, rank)


class TestSimpleRoots:
    def test_a2(self):
        assert simple_roots(GroupFamily("A", 2)) == (vec_sub(e(3, 2), e(3, 1)), vec_sub(e(3, 3), e(3, 2)))

    def test_c3(self):
        assert simple_roots(GroupFamily("C", 3)) == (
            e(3, 1, 2), vec_sub(e(3, 2), e(3, 1)), vec_sub(e(3, 3), e(3, 2)))

    def test_d2(self):
        assert simple_roots(GroupFamily("D", 2)) == (vec_add(e(2, 1), e(2, 2)), vec_sub(e(2, 2), e(2, 1)))


class TestPositiveRoots:
    @pytest.mark.parametrize("family,rank,size", [("A", 4, 10), ("B", 4, 16), ("C", 4, 16), ("D", 4, 12)])
    def test_sizes(self, family, rank, size):
        assert len(positive_roots(GroupFamily(family, rank))) == size

    def test_a1(self):
        assert positive_roots(GroupFamily("A", 1)) == {(-1, 1)}

    @pytest.mark.parametrize("rank", range(1, 9))
    def test_counts_match_orbit_closure(self, rank):
        for family, count in [("A", rank * (rank + 1) // 2), ("B", rank ** 2), ("C", rank ** 2),
                              ("D", rank * (rank - 1))]:
            if family == "D" and rank < 2:
                continue
            g = GroupFamily(family, rank)
            assert positive_roots(g) == root_closure(g)
            assert len(positive_roots(g)) == count

    def test_last_nonzero_coordinate_positive(self):
        for f, r in FAMILY_RANKS:
            for alpha in positive_roots(GroupFamily(f, r)):
                assert [x for x in alpha if x][-1] > 0


class TestRootOrder:
    def test_examples(self):
        a3 = GroupFamily("A", 3)
        n = 4
        assert root_leq(a3, root_from_endpoints(n, 1, 2), root_from_endpoints(n, 1, 4))
        a, b = root_from_endpoints(n, 1, 2), root_from_endpoints(n, 2, 3)
        assert not root_leq(a3, a, b) and not root_leq(a3, b, a)
        c2 = GroupFamily("C", 2)
        assert root_leq(c2, (-1, 1), (0, 2))

    def test_non_root_rejected(self):
        with pytest.raises(NonRootArgument):
            root_leq(GroupFamily("A", 2), (1, 1, 0), (-1, 1, 0))

    @pytest.mark.parametrize("family,rank", [f for f in FAMILY_RANKS if f[1] <= 4])
    def test_partial_order(self, family, rank):
        g = GroupFamily(family, rank)
        roots = sorted(positive_roots(g))
        leq = {(a, b): root_leq(g, a, b) for a in roots for b in roots}
        for a in roots:
            assert leq[a, a]
        for a in roots:
            for b in roots:
                if a != b:
                    assert not (leq[a, b] and leq[b, a])
                for c in roots:
                    if leq[a, b] and leq[b, c]:
                        assert leq[a, c]

    @pytest.mark.parametrize("family,rank", FAMILY_RANKS)
    def test_simple_roots_minimal_and_unique_maximum(self, family, rank):
        g = GroupFamily(family, rank)
        roots = positive_roots(g)
        for s in simple_roots(g):
            assert not any(root_leq(g, b, s) for b in roots if b != s)
        maxima = [a for a in roots if not any(root_leq(g, a, b) for b in roots if b != a)]
        if family != "D" or rank > 2:
            assert len(maxima) == 1

    @pytest.mark.parametrize("family,rank", FAMILY_RANKS)
    def test_covers_differ_by_simple_root(self, family, rank):
        g = GroupFamily(family, rank)
        roots = positive_roots(g)
        simple = set(simple_roots(g))
        for a in roots:
            for b in roots:
                if height(g, b) == height(g, a) + 1 and root_leq(g, a, b):
                    assert vec_sub(b, a) in simple


class TestEndpoints:
    def test_examples(self):
        assert root_endpoints(GroupFamily("B", 3), e(3, 3)) == (0, 3)
        assert root_endpoints(GroupFamily("D", 2), (1, 1)) == (-1, 2)
        assert root_endpoints(GroupFamily("C", 2), (0, 2)) == (-2, 2)

    @pytest.mark.parametrize("family,rank", FAMILY_RANKS)
    def test_injective_and_inverse(self, family, rank):
        g = GroupFamily(family, rank)
        seen = {}
        for alpha in positive_roots(g):
            i, j = root_endpoints(g, alpha)
            assert (i, j) not in seen
            seen[i, j] = alpha
            if (i, j) != (-j, j):
                assert root_from_endpoints(g.n, i, j) == alpha


class TestAntichains:
    def test_a2_brute_force(self):
        g = GroupFamily("A", 2)
        roots = sorted(positive_roots(g))
        brute = [s for k in range(len(roots) + 1) for s in combinations(roots, k) if is_antichain(g, s)]
        assert len(brute) == 5 == sum(1 for _ in enumerate_antichains(g))

    @pytest.mark.parametrize("family,rank,count", [("B", 3, 20), ("C", 3, 20), ("D", 4, 50)])
    def test_counts(self, family, rank, count):
        assert sum(1 for _ in enumerate_antichains(GroupFamily(family, rank))) == count

    @pytest.mark.parametrize("family,rank", FAMILY_RANKS + [("A", 6), ("A", 7)])
    def test_catalan(self, family, rank):
        g = GroupFamily(family, rank)
        acs = list(enumerate_antichains(g))
        assert acs[0] == frozenset()
        assert len(set(acs)) == len(acs) == catalan_number(g)

    def test_check_antichain(self):
        g = GroupFamily("A", 3)
        with pytest.raises(NotAntichain):
            check_antichain(g, [root_from_endpoints(4, 1, 2), root_from_endpoints(4, 1, 3)])

    def test_known_catalan_values(self):
        assert catalan_number(GroupFamily("A", 3)) == 14
        assert catalan_number(GroupFamily("B", 3)) == 20
        assert catalan_number(GroupFamily("D", 4)) == 50
