"""Tests for collections, choice functions, transversals and uniformization."""

from collections.abc import Callable

import pytest

from pcard.choice import (
    audit_pairwise_disjoint,
    check_honestly_nonempty,
    check_refinement,
    choice_bruteforce,
    refine_uniformize,
    slice_members,
    transversal_member,
)
from pcard.exceptions import (
    HorizonError,
    PreconditionError,
    SliceEmptyError,
    WindowUnspecifiedError,
)
from pcard.languages import empty, finite, prefix, sigma_star, suffix_graph, times
from pcard.maps import identity
from pcard.models import (
    Alphabet,
    Collection,
    Language,
    MultiMap,
    Polynomial,
    Str,
    TimeBound,
)
from pcard.strings import pair, strings_upto, unpair

NEXT = Polynomial([1, 1])


def s(digits: str) -> Str:
    return Str.of(2, digits)


def suffixes() -> Collection:
    """L_x = {x0, x1}, with both bounds n + 1."""
    return Collection(carrier=suffix_graph(2), p_low=NEXT, q_high=NEXT)


def doubled() -> Collection:
    """L_x = {xx} for |x| >= 1, windowed at exactly 2n."""

    def evaluate(z: Str) -> tuple[bool, int]:
        u, v = unpair(z)
        return len(u) >= 1 and v == u + u, len(z) + 1

    carrier = Language(name="doubled(2)", alphabet=Alphabet(2), evaluator=evaluate)
    double = Polynomial([0, 2])
    return Collection(carrier=carrier, p_low=double, q_high=double)


def reversed_flagged() -> Collection:
    """L_x = {reverse(x)·1}."""

    def evaluate(z: Str) -> tuple[bool, int]:
        u, v = unpair(z)
        return v.symbols == u.symbols[::-1] + (1,), len(z) + 1

    carrier = Language(
        name="reversed_flagged(2)", alphabet=Alphabet(2), evaluator=evaluate
    )
    return Collection(carrier=carrier, p_low=NEXT, q_high=NEXT)


class TestCollection:
    def test_name_and_window(self) -> None:
        """Test the expression name and the honesty window."""
        c = suffixes()
        assert c.name == "collection(suffix_graph(2), p=[1, 1], q=[1, 1])"
        assert c.window(s("01")) == (3, 3)

    def test_bounds_need_positive_degree(self) -> None:
        """Test that constant honesty bounds are refused."""
        with pytest.raises(PreconditionError):
            Collection(carrier=suffix_graph(2), p_low=Polynomial([3]), q_high=NEXT)

    def test_slice_members(self) -> None:
        """Test the windowed slice at one index."""
        assert slice_members(suffixes(), s("1")) == [s("10"), s("11")]


class TestHonestNonEmptiness:
    def test_suffix_collection(self) -> None:
        """Test that every slice of the suffix collection has a windowed member."""
        report = check_honestly_nonempty(suffixes(), 4)
        assert report.passes
        rows = {row.x: row.witness for row in report.rows}
        assert rows[Str.empty(2)] == s("0")
        assert rows[s("1")] == s("10")

    def test_empty_carrier(self) -> None:
        """Test that an empty carrier fails everywhere."""
        c = Collection(carrier=empty(2), p_low=NEXT, q_high=NEXT)
        report = check_honestly_nonempty(c, 3)
        assert not report.passes
        assert len(report.failures) == 15


class TestChoice:
    def test_least_member(self) -> None:
        """Test that the choice is the least windowed member."""
        assert choice_bruteforce(suffixes(), Str.empty(2)) == s("0")
        assert choice_bruteforce(suffixes(), s("1")) == s("10")

    def test_lands_in_window(self) -> None:
        """Test that every choice lies in its slice and window."""
        for c in (suffixes(), reversed_flagged()):
            for x in strings_upto(2, 4):
                y = choice_bruteforce(c, x)
                low, high = c.window(x)
                assert low <= len(y) <= high
                assert pair(x, y) in c.carrier

    def test_empty_slice(self) -> None:
        """Test that an empty slice is an error."""
        c = Collection(carrier=empty(2), p_low=NEXT, q_high=NEXT)
        with pytest.raises(SliceEmptyError, match="slice empty"):
            choice_bruteforce(c, s("1"))


class TestTransversal:
    def test_suffix_examples(self) -> None:
        """Test membership of the least sibling only."""
        c = suffixes()
        assert transversal_member(c, s("010"), 6)
        assert not transversal_member(c, s("011"), 6)
        assert not transversal_member(c, Str.empty(2), 6)

    def test_horizon_too_small(self) -> None:
        """Test that the index window must fit under the horizon."""
        with pytest.raises(HorizonError):
            transversal_member(suffixes(), s("010"), 1)

    @pytest.mark.parametrize("make", [suffixes, doubled, reversed_flagged])
    def test_meets_each_slice_once(self, make: Callable[[], Collection]) -> None:
        """Test that the transversal meets every nonempty slice exactly once."""
        c = make()
        assert audit_pairwise_disjoint(c, 3).disjoint
        for x in strings_upto(2, 3):
            members = slice_members(c, x)
            chosen = [y for y in members if transversal_member(c, y, 8)]
            assert len(chosen) == (1 if members else 0)


class TestDisjointness:
    def test_suffix_collection_disjoint(self) -> None:
        """Test that slices carrying their index as a prefix are disjoint."""
        report = audit_pairwise_disjoint(suffixes(), 4)
        assert report.disjoint
        assert report.offending is None

    def test_shared_member(self) -> None:
        """Test that a string in two slices is reported."""
        c = Collection(
            carrier=times(sigma_star(2), finite(["2:0"])), p_low=NEXT, q_high=NEXT
        )
        report = audit_pairwise_disjoint(c, 2)
        assert not report.disjoint
        assert report.offending == s("0")
        assert report.indices == (Str.empty(2), s("0"))

    def test_empty_carrier_disjoint(self) -> None:
        """Test that an empty collection is disjoint."""
        c = Collection(carrier=empty(2), p_low=NEXT, q_high=NEXT)
        assert audit_pairwise_disjoint(c, 3).disjoint


class TestUniformize:
    def test_least_suffix(self) -> None:
        """Test that the refinement picks x0."""
        r = MultiMap(graph=suffix_graph(2), low=NEXT, high=NEXT)
        f = refine_uniformize(r, 4)
        assert f(s("1")) == s("10")
        assert f.name == (
            "uniformize(multimap(suffix_graph(2), low=[1, 1], high=[1, 1]))"
        )
        assert check_refinement(r, f, 4).holds

    def test_undefined_on_empty_slice(self) -> None:
        """Test that the refinement keeps the domain of the relation."""
        r = MultiMap(graph=times(prefix(s("0")), sigma_star(2)), low=NEXT, high=NEXT)
        f = refine_uniformize(r, 4)
        assert f(s("1")) is None
        assert f(s("01")) == s("000")
        assert check_refinement(r, f, 3).holds

    def test_bad_refinement(self) -> None:
        """Test that values outside the relation are reported."""
        r = MultiMap(graph=suffix_graph(2), low=NEXT, high=NEXT)
        report = check_refinement(r, identity(2), 2)
        assert not report.holds
        assert not report.domain_mismatches
        assert len(report.escaped_values) == 7

    def test_window_required(self) -> None:
        """Test that a relation without a window cannot be uniformized."""
        with pytest.raises(WindowUnspecifiedError):
            refine_uniformize(MultiMap(graph=suffix_graph(2)), 3)

    def test_clock_covers_search_up_to_nmax(self) -> None:
        """Test the clock derived from the window and the tested length."""
        r = MultiMap(graph=suffix_graph(2), low=NEXT, high=NEXT)
        f = refine_uniformize(r, 2)
        assert f.bound == TimeBound(5, 1)
        assert check_refinement(r, f, 2).holds
        assert f(s("00000")) == s("000000")
        late = f.run(s("11111"))
        assert late.clocked_out
        assert late.value is None
