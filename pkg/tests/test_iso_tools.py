"""Tests for isomorphisms, enumeration by iteration, reductions and cylinders."""

import logging

import pytest

from pcard.exceptions import (
    InfiniteWitnessRequiredError,
    PreconditionError,
    UnverifiedWitnessError,
)
from pcard.iso_tools import (
    compress_extend,
    cylinder_witness,
    decider_from_reduction,
    enum_by_iteration,
    ghk_iso,
    iso_from_complements,
    reduction_from_witness,
)
from pcard.languages import complement, empty, enumerate_upto, prefix, sigma_star
from pcard.maps import LINEAR, empty_map, flip_head, rehead
from pcard.models import Alphabet, Equipollence, PartialMap, Str
from pcard.models.polynomial import TimeBound
from pcard.ranking import rank_witness
from pcard.strings import strings_upto, unpair
from pcard.witnesses import verify_equipollence, witness

ZERO = Str.of(2, "0")
ONE = Str.of(2, "1")
A = prefix(ZERO)
B = prefix(ONE)


def s(digits: str) -> Str:
    return Str.of(2, digits)


def zero_to_one() -> Equipollence:
    """0Σ* ≈ 1Σ* by replacing the leading bit; the backward map is partial."""
    return witness(rehead(ZERO, ONE), rehead(ONE, ZERO), A, B)


def complements_by_flip() -> Equipollence:
    """Ā ≈ B̄ by flipping the head; off B̄ the backward map leaves 1-strings alone."""
    flip = flip_head(2)

    def flip_or_keep(x: Str) -> Str | None:
        return x if x.head == 1 else flip(x)

    backward = PartialMap.from_function("flip_or_keep(2)", 2, 2, flip_or_keep, LINEAR)
    return witness(flip, backward, complement(A), complement(B))


class TestIsoFromComplements:
    def test_leading_bit_swap(self) -> None:
        """Test that φ swaps leading bits and carries 0Σ* onto 1Σ*."""
        iso = iso_from_complements(zero_to_one(), complements_by_flip(), A)
        assert iso.forward(s("01")) == s("11")
        assert iso.forward(s("10")) == s("00")
        assert iso.forward(Str.empty(2)) == Str.empty(2)
        for x in strings_upto(2, 6):
            y = iso.forward(x)
            assert y is not None
            assert (x in A) == (y in B)

    def test_disambiguation(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test that of two answers at "11" only the one φ sends back is kept."""
        e, ec = zero_to_one(), complements_by_flip()
        assert e.backward(s("11")) == s("01")
        assert ec.backward(s("11")) == s("11")
        iso = iso_from_complements(e, ec, A)
        with caplog.at_level(logging.DEBUG, logger="pcard.iso_tools"):
            assert iso.backward(s("11")) == s("01")
        assert "both inverses answered" in caplog.text

    def test_total_bijection(self) -> None:
        """Test that the result verifies as a total map on Σ*."""
        iso = iso_from_complements(zero_to_one(), complements_by_flip(), A)
        report = verify_equipollence(iso, 6)
        assert report.clean
        assert iso.name.startswith("iso(")


class TestGhkIso:
    def test_same_language(self) -> None:
        """Test that h fixes membership when A = B = 0Σ*."""
        f_a, f_ac = rank_witness(A), rank_witness(complement(A))
        h = ghk_iso(f_a, f_ac, f_a, f_ac, A, A)
        for x in strings_upto(2, 6):
            y = h.forward(x)
            assert y is not None
            assert (x in A) == (y in A)
        assert verify_equipollence(h, 5).clean

    def test_tags_route_b_into_a(self) -> None:
        """Test that h carries 1Σ* into 0Σ*."""
        h = ghk_iso(
            rank_witness(A),
            rank_witness(complement(A)),
            rank_witness(B),
            rank_witness(complement(B)),
            A,
            B,
        )
        assert h.forward(s("10")) in A
        assert h.backward(s("00")) in B
        for x in strings_upto(2, 5):
            y = h.forward(x)
            assert y is not None
            assert (x in B) == (y in A)

    def test_complement_must_be_infinite(self) -> None:
        """Test that A = Σ* is refused since its complement is empty."""
        sigma = sigma_star(2)
        nothing = witness(empty_map(2), empty_map(2), empty(2), sigma)
        with pytest.raises(InfiniteWitnessRequiredError):
            ghk_iso(
                rank_witness(sigma),
                nothing,
                rank_witness(A),
                rank_witness(complement(A)),
                sigma,
                A,
            )

    def test_witnesses_must_verify(self) -> None:
        """Test that an unverified witness is refused."""
        broken = witness(rehead(ZERO, ONE), rehead(ZERO, ONE), A, sigma_star(2))
        with pytest.raises(UnverifiedWitnessError):
            ghk_iso(
                broken,
                rank_witness(complement(A)),
                rank_witness(A),
                rank_witness(complement(A)),
                A,
                A,
            )


class TestCompressExtend:
    def test_identity_off_language(self) -> None:
        """Test f̂ on and off 0Σ*."""
        f = compress_extend(rank_witness(A), A)
        assert f(s("1")) == s("1")
        assert f(s("00")) == s("0")
        assert f.name == 'compress(rank_witness(prefix("2:0")), prefix("2:0"))'

    def test_bijective_on_language(self) -> None:
        """Test that f̂ restricted to 0Σ* is a bijection onto Σ*."""
        f = compress_extend(rank_witness(A), A)
        images = [f(x) for x in enumerate_upto(A, 7)]
        assert len(set(images)) == len(images)
        assert set(images) == set(strings_upto(2, 6))


class TestEnumByIteration:
    def test_iterates_match_enumeration(self) -> None:
        """Test that iterating from x0 lists 0Σ* in order."""
        enumeration = enum_by_iteration(rank_witness(A))
        assert enumeration.x0 == ZERO
        assert enumeration.step(ZERO) == s("00")
        assert enumeration.take(7) == enumerate_upto(A, 3)

    def test_step_inverse(self) -> None:
        """Test stepping back, and that the first member has no predecessor."""
        enumeration = enum_by_iteration(rank_witness(A))
        assert enumeration.step_inverse(s("00")) == ZERO
        assert enumeration.step_inverse(ZERO) is None
        for x in enumeration.take(15)[1:]:
            y = enumeration.step_inverse(x)
            assert y is not None
            assert enumeration.step(y) == x

    def test_needs_least_member(self) -> None:
        """Test that the backward map must be defined at ε."""
        partial = witness(rehead(ZERO, ONE), rehead(ONE, ZERO), A, B)
        with pytest.raises(PreconditionError):
            enum_by_iteration(partial)


class TestReduction:
    def test_reduction_values(self) -> None:
        """Test the reduction from 1Σ* to 0Σ* with a0 = ε."""
        r = reduction_from_witness(zero_to_one(), Str.empty(2))
        assert r(s("10")) == s("00")
        assert r(s("01")) == Str.empty(2)
        assert r(Str.empty(2)) == Str.empty(2)

    def test_reduction_law(self) -> None:
        """Test x ∈ B iff r(x) ∈ A up to length 7."""
        r = reduction_from_witness(zero_to_one(), Str.empty(2))
        for x in strings_upto(2, 7):
            y = r(x)
            assert y is not None
            assert (x in B) == (y in A)

    def test_roundtrip_mismatch_falls_back(self) -> None:
        """Test that a backward answer φ does not send back goes to a0."""
        e = witness(rehead(ZERO, ONE), flip_head(2), A, B)
        r = reduction_from_witness(e, ONE)
        assert e.backward(s("01")) == s("11")
        assert r(s("01")) == ONE
        assert r(s("10")) == s("00")

    def test_timeout_falls_back(self) -> None:
        """Test that a backward run past its clock goes to a0."""

        def slow_off_b(x: Str) -> tuple[Str | None, int]:
            if x.head == 1:
                return ZERO + x.drop(1), len(x) + 1
            return ZERO + x, 10**6

        slow = PartialMap(
            name="slow_off_b(2)",
            source=Alphabet(2),
            target=Alphabet(2),
            evaluator=slow_off_b,
            bound=TimeBound(2, 1),
        )
        e = witness(rehead(ZERO, ONE), slow, A, B)
        assert slow.run(s("01")).clocked_out
        r = reduction_from_witness(e, Str.empty(2))
        assert r(s("01")) == Str.empty(2)
        assert r(s("11")) == s("01")

    def test_a0_must_be_outside(self) -> None:
        """Test that a0 has to be a non-member of A."""
        with pytest.raises(PreconditionError):
            reduction_from_witness(zero_to_one(), ZERO)

    def test_decider_from_reduction(self) -> None:
        """Test that the reduction decides B through A."""
        r = reduction_from_witness(zero_to_one(), Str.empty(2))
        lang = decider_from_reduction(r, A)
        assert lang.name.startswith("decide_via(reduce(")
        for x in strings_upto(2, 5):
            assert (x in lang) == (x in B)


class TestCylinder:
    def test_carries_language_onto_product(self) -> None:
        """Test that members go to pairs whose first coordinate is a member."""
        h = cylinder_witness(rank_witness(A), rank_witness(complement(A)), A)
        for x in strings_upto(2, 5):
            y = h.forward(x)
            assert y is not None
            assert (x in A) == (unpair(y)[0] in A)

    def test_verifies(self) -> None:
        """Test that the cylinder map is a total bijection."""
        h = cylinder_witness(rank_witness(A), rank_witness(complement(A)), A)
        assert verify_equipollence(h, 4).clean

    def test_complement_must_be_infinite(self) -> None:
        """Test that an empty complement is refused."""
        sigma = sigma_star(2)
        nothing = witness(empty_map(2), empty_map(2), empty(2), sigma)
        with pytest.raises(InfiniteWitnessRequiredError):
            cylinder_witness(rank_witness(sigma), nothing, sigma)
