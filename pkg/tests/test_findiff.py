"""Tests for finite differences, rank transfer and the offset criterion."""

import pytest

from pcard.exceptions import (
    AlphabetMismatchError,
    InvariantBreachError,
    OffsetMismatchError,
    PreconditionError,
)
from pcard.findiff import (
    findiff_injection,
    findiff_witness,
    immediate_predecessor,
    shift_function,
    transfer_countability,
)
from pcard.languages import census, prefix, sigma_star
from pcard.models import FiniteDiff, ShiftFn, Str
from pcard.ranking import rank_witness, strong_rank
from pcard.strings import strings_upto
from pcard.witnesses import shift_witness, verify_equipollence

ZERO = Str.of(2, "0")


def s(digits: str) -> Str:
    return Str.of(2, digits)


def zero_prefixed(added: list[str], removed: list[str]) -> FiniteDiff:
    return FiniteDiff(
        base=prefix(ZERO),
        added=[f"2:{d}" for d in added],
        removed=[f"2:{d}" for d in removed],
    )


class TestFiniteDiff:
    def test_derived_membership(self) -> None:
        """Test B = (A ∪ P) \\ N."""
        d = zero_prefixed(["1"], ["00"])
        b = d.derived()
        assert s("1") in b
        assert s("00") not in b
        assert s("01") in b
        assert s("11") not in b
        assert b.name == 'diff(prefix("2:0"), ["2:1"], ["2:00"])'

    def test_offset_and_lengths(self) -> None:
        """Test the offset and the longest changed string."""
        d = zero_prefixed(["1", "11"], ["010"])
        assert d.offset == 1
        assert d.max_length == 3
        assert [x.digits for x in d.touched] == ["1", "11", "010"]
        assert FiniteDiff(base=prefix(ZERO)).max_length == -1

    def test_derived_closed_forms(self) -> None:
        """Test that census and rank carry over from the base."""
        b = zero_prefixed(["1"], ["00"]).derived()
        assert b.census_closed_form is not None
        assert census(b, 3) == 7 + 1 - 1
        count = 0
        for x in strings_upto(2, 4):
            count += x in b
            assert strong_rank(b, x) == count

    def test_added_must_be_new(self) -> None:
        """Test that added strings must lie outside the base."""
        with pytest.raises(InvariantBreachError):
            zero_prefixed(["01"], [])

    def test_removed_must_be_members(self) -> None:
        """Test that removed strings must lie in the base."""
        with pytest.raises(InvariantBreachError):
            zero_prefixed([], ["1"])

    def test_alphabet_checked(self) -> None:
        """Test that changed strings share the base alphabet."""
        with pytest.raises(AlphabetMismatchError):
            FiniteDiff(base=sigma_star(3), removed=["2:0"])


class TestShiftFunction:
    def test_rank_shift(self) -> None:
        """Test rk_B(x) = rk_A(x) + σ(x)."""
        d = zero_prefixed(["1", "11"], ["00"])
        sigma = shift_function(d)
        assert sigma.values == [0, 1, 0, 1]
        base, derived = d.base, d.derived()
        for x in strings_upto(2, 4):
            assert strong_rank(derived, x) == strong_rank(base, x) + sigma(x)

    def test_shape_checked(self) -> None:
        """Test that a step function needs one more value than breakpoints."""
        with pytest.raises(InvariantBreachError):
            ShiftFn(breakpoints=[ZERO], values=[0])


class TestTransferCountability:
    def test_transfer_over_diff(self) -> None:
        """Test Σ* ≈ B from a ranking of 0Σ*."""
        d = zero_prefixed(["1"], ["00"])
        e = transfer_countability(rank_witness(prefix(ZERO)), d)
        assert e.b == d.derived()
        assert [e.forward(Str.of(2, x)) for x in ["", "0", "1"]] == [
            s("1"),
            s("0"),
            s("01"),
        ]
        assert verify_equipollence(e, 4).clean

    def test_transfer_from_sigma_star(self) -> None:
        """Test a transfer whose witness starts at Σ*."""
        d = FiniteDiff(base=sigma_star(2), removed=["2:", "2:10"])
        e = transfer_countability(shift_witness(2, 0), d)
        assert e.forward(Str.empty(2)) == ZERO
        assert verify_equipollence(e, 4).clean

    def test_empty_diff_returns_witness(self) -> None:
        """Test that an empty difference changes nothing."""
        e = rank_witness(prefix(ZERO))
        assert transfer_countability(e, FiniteDiff(base=prefix(ZERO))).name == (
            f"inverse({e.name})"
        )

    def test_unrelated_witness(self) -> None:
        """Test that the witness must enumerate the base."""
        with pytest.raises(PreconditionError):
            transfer_countability(shift_witness(2, 1), zero_prefixed(["1"], []))


class TestFindiffWitness:
    def test_equal_offsets(self) -> None:
        """Test B₁ ≈ B₂ when the offsets agree."""
        d1 = zero_prefixed(["1"], ["00"])
        d2 = zero_prefixed(["11"], ["01"])
        e = findiff_witness(d1, d2)
        assert e.forward(s("1")) == s("00")
        assert e.forward(s("01")) == s("11")
        assert e.forward(s("0110")) == s("0110")
        assert verify_equipollence(e, 5).clean

    def test_offset_mismatch(self) -> None:
        """Test that different offsets rule the construction out."""
        with pytest.raises(OffsetMismatchError):
            findiff_witness(zero_prefixed([], ["00"]), zero_prefixed([], []))

    def test_different_bases(self) -> None:
        """Test that both differences must share a base."""
        with pytest.raises(PreconditionError):
            findiff_witness(FiniteDiff(base=sigma_star(2)), zero_prefixed([], []))

    def test_injection_direction(self) -> None:
        """Test that an injection exists only towards the larger offset."""
        smaller, larger = zero_prefixed([], ["0"]), zero_prefixed(["1"], [])
        f = findiff_injection(smaller, larger)
        assert f(s("00")) == s("00")
        with pytest.raises(OffsetMismatchError):
            findiff_injection(larger, smaller)


class TestImmediatePredecessor:
    def test_witness_rejected(self) -> None:
        """Test that A \\ {x} embeds into A but has no witness."""
        report = immediate_predecessor(prefix(ZERO), ZERO)
        assert report.witness_rejected
        assert "offsets differ" in report.reason
        assert report.injection(s("01")) == s("01")
        assert report.injection(ZERO) is None
