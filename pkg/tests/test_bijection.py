import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncnn.bijection import (
    NC_TO_NN,
    NN_TO_NC,
    central_pairing,
    convert,
    rebuild,
    row_values,
    transport,
    verify_central_theorem,
)
from ncnn.errors import InvalidStatistics, PredicateViolation
from ncnn.groups import partition_of_antichain
from ncnn.partitions import (
    NC,
    NN,
    ClassicalPartition,
    enumerate_classical,
    is_classical_noncrossing,
    is_classical_nonnesting,
    partition_type,
)
from ncnn.roots import GroupFamily, catalan_number
from ncnn.statistics import StatisticBundle, extract_statistics, starred_statistics

FAMILIES = [("A", r) for r in range(1, 8)] + [(f, r) for f in "BC" for r in range(1, 6)] + \
    [("D", r) for r in range(2, 6)]
SMALL = [("A", r) for r in range(1, 5)] + [(f, r) for f in "BC" for r in range(1, 5)] + \
    [("D", r) for r in range(2, 5)]

B8_NN = ClassicalPartition.from_blocks(8, [[1, -2, -6], [3, 7, 8], [5]], [4])
B8_NC = ClassicalPartition.from_blocks(8, [[1, -7, -8], [3, 4, 6], [5]], [2])
D10_NN = ClassicalPartition.from_blocks(10, [[1, 5, -6, 8, -9, -10], [2, -4], [3, 7]])
D10_NC = ClassicalPartition.from_blocks(10, [[1, -5, -6, -7, 8, 9], [2, -10], [3, 4]])
C8_NN = ClassicalPartition.from_blocks(8, [[1, -2, 5, -6, -8], [3, 7], [4]])
C8_NC = ClassicalPartition.from_blocks(8, [[1, 2, -6, -7, -8], [3, 5], [4]])


class TestRebuild:
    def test_type_a_nonnesting(self):
        g = GroupFamily("A", 7)
        p = rebuild(g, NN, StatisticBundle((1, 2, 4), (2, 3, 3)))
        assert p == ClassicalPartition.from_blocks(8, [[1, 3], [2, 5, 7], [4, 6, 8]])

    def test_type_a_noncrossing(self):
        g = GroupFamily("A", 7)
        p = rebuild(g, NC, StatisticBundle((1, 2, 4), (2, 3, 3)))
        assert p == ClassicalPartition.from_blocks(8, [[1, 8], [2, 3, 7], [4, 5, 6]])

    def test_c8(self):
        g = GroupFamily("C", 8)
        s = StatisticBundle((3, 4), (2, 1), (2, 3))
        assert rebuild(g, NN, s) == C8_NN
        assert rebuild(g, NC, s) == C8_NC

    def test_single_block(self):
        g = GroupFamily("A", 3)
        assert rebuild(g, NN, StatisticBundle((1,), (4,))) == ClassicalPartition.from_blocks(4, [[1, 2, 3, 4]])
        g = GroupFamily("B", 3)
        assert rebuild(g, NN, StatisticBundle((), (), (3,))) == ClassicalPartition.from_blocks(3, [], [1, 2, 3])

    def test_invalid(self):
        with pytest.raises(InvalidStatistics):
            rebuild(GroupFamily("A", 4), NN, StatisticBundle((2,), (5,)))
        with pytest.raises(InvalidStatistics):
            rebuild(GroupFamily("D", 4), NN, StatisticBundle((), (), (1, 1, 1), ("+", "-"), (1, 1)))

    @pytest.mark.parametrize("family,rank", FAMILIES)
    def test_inverse_of_extraction(self, family, rank):
        g = GroupFamily(family, rank)
        for mode in (NN, NC):
            for p in enumerate_classical(g, mode):
                assert rebuild(g, mode, extract_statistics(g, mode, p)) == p


class TestConvert:
    def test_b8(self):
        g = GroupFamily("B", 8)
        assert convert(g, NN_TO_NC, B8_NN) == B8_NC
        assert convert(g, NC_TO_NN, B8_NC) == B8_NN

    def test_d10(self):
        g = GroupFamily("D", 10)
        assert convert(g, NN_TO_NC, D10_NN) == D10_NC
        assert convert(g, NC_TO_NN, D10_NC) == D10_NN

    def test_c8(self):
        g = GroupFamily("C", 8)
        assert convert(g, NN_TO_NC, C8_NN) == C8_NC

    def test_wrong_mode(self):
        g = GroupFamily("A", 3)
        with pytest.raises(PredicateViolation):
            convert(g, NN_TO_NC, ClassicalPartition.from_blocks(4, [[1, 4], [2, 3]]))
        with pytest.raises(PredicateViolation):
            convert(g, NC_TO_NN, ClassicalPartition.from_blocks(4, [[1, 3], [2, 4]]))

    def test_transport_round_trip_d(self):
        g = GroupFamily("D", 10)
        s = extract_statistics(g, NN, D10_NN)
        assert transport(g, NC_TO_NN, transport(g, NN_TO_NC, s)) == s

    @pytest.mark.parametrize("family,rank", FAMILIES)
    def test_bijective_and_type_preserving(self, family, rank):
        g = GroupFamily(family, rank)
        nn = list(enumerate_classical(g, NN))
        images = []
        for p in nn:
            q = convert(g, NN_TO_NC, p)
            assert is_classical_noncrossing(g, q)
            assert partition_type(q) == partition_type(p)
            assert convert(g, NC_TO_NN, q) == p
            images.append(q)
        assert len(set(images)) == len(nn) == catalan_number(g)
        for q in enumerate_classical(g, NC):
            p = convert(g, NC_TO_NN, q)
            assert is_classical_nonnesting(g, p)
            assert convert(g, NN_TO_NC, p) == q

    @pytest.mark.parametrize("family,rank", [(f, r) for f, r in FAMILIES if f != "D"])
    def test_statistics_preserved(self, family, rank):
        g = GroupFamily(family, rank)
        for p in enumerate_classical(g, NN):
            q = convert(g, NN_TO_NC, p)
            sp, sq = extract_statistics(g, NN, p), extract_statistics(g, NC, q)
            assert (sp.a, sp.mu) == (sq.a, sq.mu)
            if family != "B":
                assert sp == sq
            else:
                assert sorted(sp.nu) == sorted(sq.nu)

    @pytest.mark.parametrize("family,rank", SMALL)
    def test_starred_statistics_preserved(self, family, rank):
        g = GroupFamily(family, rank)
        for p in enumerate_classical(g, NN):
            a = starred_statistics(g, p)
            b = starred_statistics(g, convert(g, NN_TO_NC, p))
            assert (a.a_star, a.mu_star, a.eta_star) == (b.a_star, b.mu_star, b.eta_star)
            assert sorted(map(sorted, a.theta_star)) == sorted(map(sorted, b.theta_star))

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_random_round_trip(self, data):
        g = GroupFamily(data.draw(st.sampled_from("ABCD")), data.draw(st.integers(2, 6)))
        parts = list(enumerate_classical(g, NC))
        q = data.draw(st.sampled_from(parts))
        assert convert(g, NN_TO_NC, convert(g, NC_TO_NN, q)) == q


class TestCentralTheorem:
    def test_worked_example(self, c8_example):
        g = c8_example["g"]
        pairs = central_pairing(g, c8_example["x"], c8_example["y"])
        assert pairs is not None
        bx = [u for u, _ in pairs]
        by = [v for _, v in pairs]
        rows = {tuple(u): row_values(u, bx) for u in bx}
        for u, row in zip(c8_example["omega_x"], c8_example["table"]):
            assert rows[u] == row
        for u, v in pairs:
            assert row_values(u, bx) == row_values(v, by)

    @pytest.mark.parametrize("family,rank", SMALL)
    def test_holds(self, family, rank):
        g = GroupFamily(family, rank)
        for p in enumerate_classical(g, NN):
            q = convert(g, NN_TO_NC, p)
            assert central_pairing(g, p, q) is not None
            assert verify_central_theorem(g, p, q)

    @pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 3)])
    def test_image_is_the_only_partner(self, family, rank):
        """Among all noncrossing partitions only the image passes the check."""
        g = GroupFamily(family, rank)
        nc = list(enumerate_classical(g, NC))
        for p in enumerate_classical(g, NN):
            partners = [q for q in nc if central_pairing(g, p, q) is not None]
            assert partners == [convert(g, NN_TO_NC, p)]

    def test_antichain_input(self, c8_example):
        g = c8_example["g"]
        assert partition_of_antichain(g, c8_example["x"]) == C8_NN
        assert verify_central_theorem(g, c8_example["x"], C8_NC)
