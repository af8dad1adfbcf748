"""Tagged-bound arithmetic: ordering, the tag algebra, and its epsilon oracle."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neutroprob.nonstandard import (
    BINAD,
    Bound,
    EndpointRole,
    MonadTag,
    as_fraction,
    bound,
    combine_tags,
    resolve_tag,
)
from neutroprob.oracle import epsilon_check

L = EndpointRole.LOWER
U = EndpointRole.UPPER

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=32)
tags = st.sampled_from(list(MonadTag))
bounds = st.builds(Bound, rationals, tags)


class TestOrdering:
    def test_left_monad_below_value(self):
        assert bound(1, "-") < bound(1)

    def test_reflexive_equality(self):
        assert bound("0.5") == bound("0.5")

    def test_value_comparison_dominates_tags(self):
        assert bound("0.3", "+") < bound("0.4", "-")

    def test_tag_order_on_equal_values(self):
        assert bound(2, "-") < bound(2) < bound(2, "+")

    def test_trichotomy_on_random_pairs(self):
        rng = random.Random(1)
        tag_list = list(MonadTag)
        for _ in range(1000):
            a = Bound(Fraction(rng.randint(-40, 40), rng.randint(1, 16)), rng.choice(tag_list))
            b = Bound(Fraction(rng.randint(-40, 40), rng.randint(1, 16)), rng.choice(tag_list))
            assert (a < b) + (a == b) + (b < a) == 1

    @given(bounds, bounds, bounds)
    def test_transitivity(self, a, b, c):
        if a <= b and b <= c:
            assert a <= c

    @given(bounds, bounds)
    def test_antisymmetry(self, a, b):
        if a <= b and b <= a:
            assert a == b

    def test_incomparable_types(self):
        assert bound(1) != "1"
        with pytest.raises(TypeError):
            bound(1) < 1  # noqa: B015


class TestTagCombination:
    def test_binad_only_from_opposite_monads(self):
        assert combine_tags(MonadTag.MINUS, MonadTag.PLUS) is BINAD
        assert combine_tags(MonadTag.PLUS, MonadTag.MINUS) is BINAD
        assert combine_tags(MonadTag.MINUS, MonadTag.MINUS) is MonadTag.MINUS
        assert combine_tags(MonadTag.NONE, MonadTag.PLUS) is MonadTag.PLUS

    def test_binad_resolution_by_role(self):
        assert resolve_tag(BINAD, L) is MonadTag.MINUS
        assert resolve_tag(BINAD, U) is MonadTag.PLUS
        assert resolve_tag(MonadTag.MINUS, U) is MonadTag.MINUS


class TestAddition:
    def test_left_monads_absorb(self):
        for role in (L, U):
            assert bound("0.2", "-").add(bound("0.3", "-"), role) == bound("0.5", "-")

    def test_standard_addition(self):
        for role in (L, U):
            assert bound("0.2").add(bound("0.3"), role) == bound("0.5")

    def test_opposite_monads_resolve_by_role(self):
        a, b = bound("0.2", "-"), bound("0.3", "+")
        assert a.add(b, U) == bound("0.5", "+")
        assert a.add(b, L) == bound("0.5", "-")

    @given(rationals, rationals, st.sampled_from([MonadTag.MINUS, MonadTag.PLUS]))
    def test_same_tag_absorption(self, va, vb, tag):
        for role in (L, U):
            assert Bound(va, tag).add(Bound(vb, tag), role) == Bound(va + vb, tag)


class TestSubtraction:
    def test_subtrahend_tag_reflects(self):
        assert bound(1).sub(bound("0.3", "+"), L) == bound("0.7", "-")

    def test_standard_subtraction(self):
        for role in (L, U):
            assert bound(1).sub(bound("0.3"), role) == bound("0.7")

    def test_monads_widen_difference(self):
        assert bound(1, "+").sub(bound(0, "-"), U) == bound(1, "+")


class TestMultiplication:
    def test_monad_scales_through_positive(self):
        assert bound("0.5", "-").mul(bound("0.4"), L) == bound("0.2", "-")

    def test_exact_zero_annihilates(self):
        for role in (L, U):
            assert bound(0).mul(bound(1, "+"), role) == bound(0)

    def test_negative_factor_reflects_tag(self):
        assert bound(-1).mul(bound("0.3", "+"), L) == bound("-0.3", "-")


class TestScalarDivision:
    def test_tag_preserved(self):
        assert bound("0.6", "+").div_scalar(2) == bound("0.3", "+")

    def test_plain_value(self):
        assert bound("0.6").div_scalar(3) == bound("0.2")

    def test_tag_preserved_at_zero(self):
        assert bound(0, "-").div_scalar(5) == bound(0, "-")

    @pytest.mark.parametrize("k", [0, -1, Fraction(-1, 2)])
    def test_nonpositive_divisor_rejected(self, k):
        with pytest.raises(ValueError):
            bound(1).div_scalar(k)

    @given(bounds, st.fractions(min_value="1/16", max_value=8, max_denominator=16))
    def test_division_inverts_scalar_multiplication(self, a, k):
        for role in (L, U):
            assert a.mul(Bound(k), role).div_scalar(k) == a


class TestEpsilonConsistency:
    def test_random_suite(self):
        # Every bound operation agrees in deviation sign with an exact
        # rational replay where the tags become +/- 1e-9.
        rng = random.Random(7)
        tag_list = list(MonadTag)
        roles = (L, U)
        ops = ("add", "sub", "mul", "div")
        for _ in range(1000):
            op = rng.choice(ops)
            a = Bound(Fraction(rng.randint(-160, 160), rng.randint(1, 16)), rng.choice(tag_list))
            if op == "div":
                b = Bound(Fraction(rng.randint(1, 160), rng.randint(1, 16)))
            else:
                b = Bound(Fraction(rng.randint(-160, 160), rng.randint(1, 16)), rng.choice(tag_list))
            assert epsilon_check(op, a, b, rng.choice(roles))


class TestConstruction:
    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Bound(0.5)  # type: ignore[arg-type]
        with pytest.raises(TypeError):
            as_fraction(0.5)  # type: ignore[arg-type]

    def test_string_fractions_accepted(self):
        assert bound("3/10") == Bound(Fraction(3, 10))
        assert bound("0.3") == Bound(Fraction(3, 10))

    def test_tag_strings(self):
        assert bound(1, "-").tag is MonadTag.MINUS
        assert bound(1, "+").tag is MonadTag.PLUS
        assert bound(1, "0").tag is MonadTag.NONE
        with pytest.raises(ValueError):
            bound(1, "?")

    def test_str_form(self):
        assert str(bound("3/10", "-")) == "3/10-"
        assert str(bound(1, "+")) == "1+"
        assert str(bound("0.5")) == "1/2"
