"""Tests for equipollence verification, map audits and witness combinators."""

import logging
from collections.abc import Callable

import pytest

from pcard.exceptions import AlphabetMismatchError, EndpointMismatchError
from pcard.languages import dedekind, finite, oplus, prefix, sigma_star, times
from pcard.maps import constant, identity, prepend, strip
from pcard.models import Equipollence, PartialMap, Polynomial, Str
from pcard.models.equipollence import Side, ViolationKind
from pcard.models.polynomial import TimeBound
from pcard.witnesses import (
    alphabet_witness,
    audit_map,
    compose_witness,
    distributor,
    identity_witness,
    inverse,
    non_poset_pair,
    oplus_associator,
    oplus_commutator,
    oplus_empty_unit,
    oplus_witness,
    prepend_witness,
    shift_witness,
    sigma_self_product,
    sigma_self_sum,
    times_associator,
    times_commutator,
    times_unit,
    times_witness,
    verify_equipollence,
    witness,
)

ZERO = Str.of(2, "0")
ONE = Str.of(2, "1")


class TestVerifyEquipollence:
    def test_sigma_self_sum_clean(self) -> None:
        """Test that Σ* ≈ Σ*⊕Σ* passes up to length 8."""
        report = verify_equipollence(sigma_self_sum(2), 8)
        assert report.clean
        assert report.checked_up_to == 8
        assert report.summary() == "sigma_self_sum(2): verified up to length 8"
        assert set(report.max_steps) == set(range(9))

    def test_roundtrip_failure(self) -> None:
        """Test that a backward map that is not an inverse is caught."""
        broken = witness(prepend(ZERO), identity(2), sigma_star(2), prefix(ZERO))
        report = verify_equipollence(broken, 3)
        assert not report.clean
        failures = report.of_kind(ViolationKind.ROUNDTRIP_FAILURE)
        assert failures
        assert {v.side for v in failures} == {Side.A, Side.B}

    def test_escapes_codomain(self) -> None:
        """Test that forward images outside B are reported."""
        broken = witness(identity(2), identity(2), sigma_star(2), prefix(ZERO))
        report = verify_equipollence(broken, 2)
        escapes = report.of_kind(ViolationKind.ESCAPES_CODOMAIN)
        assert [v.input.digits for v in escapes] == ["", "1", "10", "11"]
        assert escapes[0].to_dict()["kind"] == "escapes_codomain"

    def test_undefined_forward(self) -> None:
        """Test that an undefined forward image is reported."""
        broken = witness(strip(ZERO), prepend(ZERO), sigma_star(2), sigma_star(2))
        report = verify_equipollence(broken, 1)
        undefined = report.of_kind(ViolationKind.UNDEFINED)
        assert [v.input for v in undefined] == [Str.empty(2), ONE]

    def test_clock_breach(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test that runs past the declared clock are breaches, not outputs."""
        slow = PartialMap.from_function("slow(2)", 2, 2, lambda x: x, TimeBound(1, 0))
        claim = witness(slow, identity(2), sigma_star(2), sigma_star(2))
        with caplog.at_level(logging.WARNING):
            report = verify_equipollence(claim, 2)
        breaches = report.of_kind(ViolationKind.CLOCK_BREACH)
        assert breaches
        assert all(len(v.input) >= 1 for v in breaches)
        assert "clock breach" in caplog.text

    def test_inverse_swaps_sides(self) -> None:
        """Test the inverse of a witness."""
        e = inverse(sigma_self_sum(2))
        assert e.name == "inverse(sigma_self_sum(2))"
        assert e.a == oplus(sigma_star(2), sigma_star(2))
        assert verify_equipollence(e, 5).clean


class TestCanonicalWitnesses:
    @pytest.mark.parametrize(
        "e",
        [
            identity_witness(finite(["2:0", "2:101"])),
            prepend_witness(ZERO),
            prepend_witness(ONE, prefix(ZERO)),
            sigma_self_sum(3),
            sigma_self_product(2),
            shift_witness(2, 5),
            shift_witness(3, 0),
            alphabet_witness(2, 3),
            alphabet_witness(5, 2),
        ],
        ids=lambda e: e.name,
    )
    def test_clean(self, e: Equipollence) -> None:
        """Test that each canonical witness verifies."""
        assert verify_equipollence(e, 5).clean

    @pytest.mark.slow
    def test_sigma_self_sum_long(self) -> None:
        """Test Σ* ≈ Σ* ⊕ Σ* on every string up to length 14."""
        assert verify_equipollence(sigma_self_sum(2), 14).clean

    def test_sigma_self_product_is_identity(self) -> None:
        """Test that Σ* ≈ Σ*×Σ* leaves pair-encoded strings as they are."""
        e = sigma_self_product(3)
        assert e.forward.name == e.backward.name == "identity(3)"
        assert e.b == times(sigma_star(3), sigma_star(3))
        x = Str.of(3, "2101")
        assert e.forward(x) == x

    def test_names_are_expressions(self) -> None:
        """Test witness names."""
        assert prepend_witness(ZERO).name == 'prepend_w("2:0")'
        assert shift_witness(2, 3).name == "shift(2, 3)"
        assert identity_witness(sigma_star(2)).name == "identity_w(sigma_star(2))"

    def test_alphabet_mismatch(self) -> None:
        """Test that maps must agree with the languages' alphabets."""
        with pytest.raises(AlphabetMismatchError):
            witness(identity(2), identity(2), sigma_star(2), sigma_star(3))


class TestCombinators:
    def test_compose(self) -> None:
        """Test composing Σ* ≈ 0Σ* with 0Σ* ≈ 10Σ*."""
        e = compose_witness(prepend_witness(ZERO), prepend_witness(ONE, prefix(ZERO)))
        assert e.forward(Str.of(2, "11")) == Str.of(2, "1011")
        assert e.backward(Str.of(2, "1011")) == Str.of(2, "11")
        assert verify_equipollence(e, 5).clean

    def test_compose_endpoint_mismatch(self) -> None:
        """Test that B of the first witness must be A of the second."""
        with pytest.raises(EndpointMismatchError):
            compose_witness(sigma_self_sum(2), sigma_self_sum(2))

    def test_oplus_witness(self) -> None:
        """Test the tag-wise sum of two witnesses."""
        e = oplus_witness(sigma_self_sum(2), identity_witness(sigma_star(2)))
        assert verify_equipollence(e, 5).clean

    def test_times_witness(self) -> None:
        """Test the coordinate-wise product of two witnesses."""
        e = times_witness(identity_witness(sigma_star(2)), shift_witness(2, 1))
        assert verify_equipollence(e, 4).clean

    @pytest.mark.parametrize("combine", [oplus_witness, times_witness])
    def test_inner_clock_breach_is_kept(
        self, combine: Callable[[Equipollence, Equipollence], Equipollence]
    ) -> None:
        """Test that a component running past its clock is a breach of the whole."""
        slow = PartialMap.from_function("slow(2)", 2, 2, lambda x: x, TimeBound(1, 0))
        slow_e = witness(slow, identity(2), sigma_star(2), sigma_star(2))
        e = combine(slow_e, identity_witness(sigma_star(2)))
        report = verify_equipollence(e, 3)
        assert report.of_kind(ViolationKind.CLOCK_BREACH)
        assert not report.of_kind(ViolationKind.UNDEFINED)
        assert not report.of_kind(ViolationKind.ROUNDTRIP_FAILURE)

    def test_oplus_witness_alphabet_mismatch(self) -> None:
        """Test that sums need one alphabet."""
        with pytest.raises(AlphabetMismatchError):
            oplus_witness(sigma_self_sum(2), sigma_self_sum(3))


class TestSemiringLaws:
    @pytest.mark.parametrize(
        "e",
        [
            oplus_commutator(prefix(ZERO), finite(["2:1"])),
            oplus_associator(sigma_star(2), finite(["2:"]), prefix(ONE)),
            oplus_empty_unit(prefix(ONE)),
            times_commutator(finite(["2:0", "2:11"]), sigma_star(2)),
            times_unit(prefix(ZERO)),
            times_associator(sigma_star(2), sigma_star(2), sigma_star(2)),
            distributor(sigma_star(2), finite(["2:0"]), prefix(ONE)),
        ],
        ids=lambda e: e.name,
    )
    def test_law_verifies(self, e: Equipollence) -> None:
        """Test each semiring law up to length 4."""
        assert verify_equipollence(e, 4).clean


class TestAuditMap:
    def test_prepend_audit(self) -> None:
        """Test that prepending is injective, honest and length-increasing."""
        audit = audit_map(prepend(ZERO), 3)
        assert audit.injective
        assert audit.length_increasing
        assert audit.honest_with == 1
        assert audit.honesty_polynomial == Polynomial([1, 1])

    def test_constant_audit(self) -> None:
        """Test that a constant map collides and shrinks."""
        audit = audit_map(constant(ZERO), 3)
        assert not audit.injective
        assert audit.collision == (Str.empty(2), ZERO)
        assert not audit.length_increasing
        assert audit.shrinking_input == ZERO
        assert audit.honest_with == 2

    def test_audit_respects_domain(self) -> None:
        """Test that only the declared domain is audited."""
        audit = audit_map(identity(2, domain=finite(["2:01"])), 4)
        assert audit.injective
        assert audit.shrinking_input == Str.of(2, "01")


class TestNonPosetPair:
    def test_both_embeddings_verify(self) -> None:
        """Test that each language embeds in the other."""
        embeddings = non_poset_pair(2)
        assert verify_equipollence(embeddings.a_into_b, 6).clean
        assert verify_equipollence(embeddings.b_into_a, 6).clean

    def test_embedding_images(self) -> None:
        """Test that 1x goes to 10x and B sits inside A."""
        embeddings = non_poset_pair(2)
        assert embeddings.a_into_b.forward(Str.of(2, "11")) == Str.of(2, "101")
        tally = Str.of(2, "1" + "1" + "1111")
        assert tally in embeddings.b
        assert tally in embeddings.a
        assert Str.of(2, "1111") in dedekind(2)
