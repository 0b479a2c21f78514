"""Tests for the constructive Cantor–Bernstein witness."""

import pytest

from pcard.cantor_bernstein import cb_witness, chain_decomposition, classify, phi_table
from pcard.exceptions import AuditFailure
from pcard.languages import prefix, sigma_star
from pcard.maps import (
    append,
    constant,
    identity,
    injection,
    prepend,
    strip,
    strip_suffix,
)
from pcard.models import Injection, Origin, Side, Str
from pcard.witnesses import verify_equipollence

ZERO = Str.of(2, "0")


def append_zero() -> Injection:
    return injection(append(ZERO), strip_suffix(ZERO))


def s(digits: str) -> Str:
    return Str.of(2, digits)


class TestClassify:
    def test_source_in_a(self) -> None:
        """Test a string with no preimage on the A side."""
        p = q = append_zero()
        verdict = classify(s("1"), Side.A, p, q, sigma_star(2), sigma_star(2))
        assert verdict.origin == Origin.SOURCE_IN_A
        assert verdict.walk == [s("1")]
        assert verdict.source == s("1")

    def test_source_in_b(self) -> None:
        """Test a walk that stops on the B side."""
        p = q = append_zero()
        verdict = classify(s("10"), Side.A, p, q, sigma_star(2), sigma_star(2))
        assert verdict.origin == Origin.SOURCE_IN_B
        assert verdict.walk == [s("10"), s("1")]

    def test_long_walk(self) -> None:
        """Test that each hop drops one symbol until the source is reached."""
        p = q = append_zero()
        verdict = classify(s("1000"), Side.B, p, q, sigma_star(2), sigma_star(2))
        assert verdict.walk == [s("1000"), s("100"), s("10"), s("1")]
        assert verdict.origin == Origin.SOURCE_IN_A
        assert verdict.steps_used > 0


class TestCbWitness:
    def test_append_zero_images(self) -> None:
        """Test the Σ* ≈ Σ* witness built from appending 0 on both sides."""
        p = q = append_zero()
        e = cb_witness(p, q, sigma_star(2), sigma_star(2))
        assert e.forward(Str.empty(2)) == ZERO
        assert e.forward(ZERO) == Str.empty(2)
        assert e.forward(s("1")) == s("10")
        assert e.forward(s("10")) == s("1")

    def test_append_zero_verifies(self) -> None:
        """Test that the combined map is a verified equipollence."""
        p = q = append_zero()
        e = cb_witness(p, q, sigma_star(2), sigma_star(2))
        assert verify_equipollence(e, 6).clean

    def test_between_different_languages(self) -> None:
        """Test Σ* ≈ 0Σ* from prepending 0 and from appending 0."""
        p = injection(prepend(ZERO), strip(ZERO))
        q = append_zero()
        e = cb_witness(p, q, sigma_star(2), prefix(ZERO))
        assert e.name.startswith("cb(injection(prepend")
        assert verify_equipollence(e, 6).clean

    def test_audit_rejects_collisions(self) -> None:
        """Test that a non-injective map is refused with the offending input."""
        bad = injection(constant(ZERO), identity(2))
        with pytest.raises(AuditFailure) as excinfo:
            cb_witness(bad, append_zero(), sigma_star(2), sigma_star(2))
        assert excinfo.value.offending == ZERO

    def test_audit_rejects_shrinking(self) -> None:
        """Test that a map that is not length-increasing is refused."""
        same = injection(identity(2), identity(2))
        with pytest.raises(AuditFailure) as excinfo:
            cb_witness(append_zero(), same, sigma_star(2), sigma_star(2))
        assert excinfo.value.offending == Str.empty(2)


class TestChains:
    def test_chain_decomposition(self) -> None:
        """Test that chains partition both sides and start at their source."""
        p = q = append_zero()
        chains = chain_decomposition(p, q, sigma_star(2), sigma_star(2), 3)
        members = [m for chain in chains for m in chain.members]
        assert len(members) == len(set(members)) == 2 * 15
        for chain in chains:
            assert chain.source.symbols[-1:] != (0,)
            assert chain.members[0][1] == chain.source

    def test_phi_table(self) -> None:
        """Test the forward table of a witness."""
        p = q = append_zero()
        e = cb_witness(p, q, sigma_star(2), sigma_star(2))
        table = dict(phi_table(e, 2))
        assert table[s("1")] == s("10")
        assert table[s("11")] == s("110")
        assert len(table) == 7
