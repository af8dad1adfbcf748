"""Normalization, membership, and the Minkowski operations on piece unions."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neutroprob.nonstandard import Bound, EndpointRole, MonadTag, bound
from neutroprob.nsset import (
    EmptySetError,
    NSSet,
    Piece,
    binad,
    empty,
    interval,
    point,
    points,
)
from neutroprob.oracle import random_nsset

L = EndpointRole.LOWER
U = EndpointRole.UPPER


def iv(lo, hi):
    return interval(lo, hi)


class TestNormalization:
    def test_touching_pieces_merge(self):
        assert NSSet([*iv("0.2", "0.25"), *iv("0.25", "0.3")]) == iv("0.2", "0.3")

    def test_disjoint_pieces_sort(self):
        s = NSSet([*iv("0.3", "0.35"), *iv("0.2", "0.25")])
        assert s.pieces == (*iv("0.2", "0.25"), *iv("0.3", "0.35"))

    def test_overlap_merges(self):
        assert NSSet([*iv("0.2", "0.3"), *iv("0.25", "0.4")]) == iv("0.2", "0.4")

    def test_idempotent(self):
        s = NSSet([*iv(0, 1), *iv(2, 3), *point("0.5")])
        assert NSSet(s.pieces) == s

    def test_inverted_piece_rejected(self):
        with pytest.raises(ValueError):
            Piece(bound("0.3"), bound("0.2"))

    def test_tagged_neighbours_stay_apart(self):
        # A piece ending at c and one starting at c+ do not touch: the
        # plain point c lies between them.
        s = NSSet([*iv("0.1", "0.25"), *interval(bound("0.25", "+"), bound("0.5"))])
        assert len(s) == 2

    def test_order_insensitive(self):
        rng = random.Random(3)
        for _ in range(200):
            s = random_nsset(rng, tagged=True)
            shuffled = list(s.pieces)
            rng.shuffle(shuffled)
            assert NSSet(shuffled) == s


class TestInfSup:
    def test_two_piece_union(self):
        s = iv("0.2", "0.3") | iv("0.5", "0.51")
        assert s.inf == bound("0.2")
        assert s.sup == bound("0.51")

    def test_nonstandard_unit_interval(self):
        s = interval(bound(0, "-"), bound(1, "+"))
        assert s.inf == bound(0, "-")
        assert s.sup == bound(1, "+")

    def test_singleton(self):
        s = point("0.4")
        assert s.inf == s.sup == bound("0.4")

    def test_empty_has_neither(self):
        with pytest.raises(EmptySetError):
            empty().inf
        with pytest.raises(EmptySetError):
            empty().sup


class TestSetAlgebra:
    def test_union_keeps_separated_pieces(self):
        s = iv(20, 25) | iv(30, 35)
        assert len(s) == 2

    def test_intersection(self):
        assert (iv("0.2", "0.3") & iv("0.25", "0.4")) == iv("0.25", "0.3")

    def test_intersection_can_be_empty(self):
        assert (iv(0, 1) & iv(2, 3)).is_empty

    def test_left_monad_of_endpoint_excluded(self):
        s = iv("0.2", "0.3")
        assert bound("0.2", "-") not in s
        assert bound("0.2") in s
        assert bound("0.25", "-") in s

    def test_membership_across_pieces(self):
        s = iv(0, 1) | point(2)
        assert bound(2) in s
        assert bound("3/2") not in s


class TestMinkowskiAdd:
    def test_interval_endpoints_add(self):
        assert iv("0.4", "0.6") + iv("0.1", "0.2") == iv("0.5", "0.8")

    def test_point_translation(self):
        assert points("0.1", "0.3") + point("0.2") == points("0.3", "0.5")

    def test_pairwise_sums_merge(self):
        s = iv("0.2", "0.3") + (iv("0.4", "0.45") | iv("0.5", "0.51"))
        assert s == iv("0.6", "0.81")

    def test_empty_operand_rejected(self):
        with pytest.raises(EmptySetError):
            iv(0, 1) + empty()
        with pytest.raises(EmptySetError):
            empty() + iv(0, 1)


class TestMinkowskiSub:
    def test_one_minus_interval(self):
        assert point(1) - iv("0.2", "0.25") == iv("0.75", "0.8")

    def test_self_subtraction_widens(self):
        # Occurrences are independent: s - s is not {0}.
        s = iv("0.5", "0.6")
        assert s - s == iv("-0.1", "0.1")

    def test_one_minus_points(self):
        assert point(1) - points("0.1", "0.3") == points("0.7", "0.9")


class TestMinkowskiMul:
    def test_scalar_scaling(self):
        assert iv("0.4", "0.6") * point("0.5") == iv("0.2", "0.3")

    def test_pairwise_products_merge(self):
        s = iv("0.4", "0.6") * (iv("0.2", "0.25") | iv("0.3", "0.35"))
        assert s == iv("0.08", "0.21")

    def test_sign_straddling_operands(self):
        assert iv("-0.1", "0.1") * iv(-1, 1) == iv("-0.1", "0.1")


class TestScalarDivision:
    def test_interval(self):
        assert iv("0.4", "0.6") / 2 == iv("0.2", "0.3")

    def test_points(self):
        assert points("0.3", "0.9") / 3 == points("0.1", "0.3")

    def test_tags_preserved(self):
        s = interval(bound(0, "-"), bound(1, "+"))
        assert s / 2 == interval(bound(0, "-"), bound("0.5", "+"))

    def test_nonpositive_divisor_rejected(self):
        with pytest.raises(ValueError):
            iv(0, 1) / 0


class TestBinad:
    def test_two_tagged_points(self):
        b = binad("0.5")
        assert b == points(bound("0.5", "-"), bound("0.5", "+"))
        assert len(b) == 2

    def test_centre_excluded(self):
        assert bound("0.5") not in binad("0.5")

    def test_inf_sup_are_the_monads(self):
        b = binad("0.5")
        assert b.inf == bound("0.5", "-")
        assert b.sup == bound("0.5", "+")


class TestProperties:
    def test_add_commutative_associative(self):
        rng = random.Random(11)
        for _ in range(1000):
            a = random_nsset(rng, tagged=True)
            b = random_nsset(rng, tagged=True)
            c = random_nsset(rng, tagged=True)
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)

    def test_inf_sup_laws_for_addition(self):
        rng = random.Random(12)
        for _ in range(500):
            a = random_nsset(rng, tagged=True)
            b = random_nsset(rng, tagged=True)
            s = a + b
            assert s.inf == a.inf.add(b.inf, L)
            assert s.sup == a.sup.add(b.sup, U)

    def test_inf_sup_laws_for_sub_and_mul_nonnegative(self):
        rng = random.Random(13)
        for _ in range(500):
            a = random_nsset(rng, tagged=True, nonneg=True)
            b = random_nsset(rng, tagged=True, nonneg=True)
            d = a - b
            assert d.inf == a.inf.sub(b.sup, L)
            assert d.sup == a.sup.sub(b.inf, U)
            m = a * b
            assert m.inf == a.inf.mul(b.inf, L)
            assert m.sup == a.sup.mul(b.sup, U)

    def test_one_minus_involution(self):
        rng = random.Random(14)
        one = point(1)
        for _ in range(500):
            s = random_nsset(rng, tagged=True)
            assert one - (one - s) == s

    @given(st.integers(-8, 8), st.integers(1, 8))
    def test_point_set_contains_its_value(self, num, den):
        q = Fraction(num, den)
        assert Bound(q) in point(q)


class TestFormatting:
    def test_point_runs_group(self):
        s = points("0.1", "0.3") | iv("0.5", "0.6")
        assert str(s) == "{1/10, 3/10} U [1/2..3/5]"

    def test_empty(self):
        assert str(empty()) == "{}"

    def test_tagged_interval(self):
        assert str(interval(bound(0, "-"), bound(1, "+"))) == "[0-..1+]"
