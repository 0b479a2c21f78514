"""Tests for strings, alphabets and the string/number correspondence."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcard.exceptions import (
    AlphabetMismatchError,
    InvalidAlphabetError,
    InvalidStringError,
    UnderflowError,
)
from pcard.models import Alphabet, Str
from pcard.strings import (
    cantor_pair,
    cantor_unpair,
    convert_alphabet,
    pair,
    rank,
    str_add,
    strings_between,
    strings_of_length,
    strings_upto,
    total_upto,
    unpair,
    unrank,
    value_of,
)

TERNARY_TABLE = [
    "",
    "0",
    "1",
    "2",
    "00",
    "01",
    "02",
    "10",
    "11",
    "12",
    "20",
    "21",
    "22",
    "000",
    "001",
    "002",
    "010",
    "011",
]

sizes = st.integers(min_value=2, max_value=5)
indices = st.integers(min_value=0, max_value=10**6)


@st.composite
def strs(draw: st.DrawFn, size: int | None = None) -> Str:
    k = size if size is not None else draw(sizes)
    symbols = draw(st.lists(st.integers(0, k - 1), max_size=12))
    return Str(k, symbols)


class TestAlphabet:
    def test_valid_sizes(self) -> None:
        """Test alphabets of size 2 through 36."""
        assert Alphabet(2).digits == "01"
        assert Alphabet(36).digits.endswith("z")

    def test_invalid_sizes(self) -> None:
        """Test that sizes outside 2..36 are rejected."""
        for size in (0, 1, 37, -3):
            with pytest.raises(InvalidAlphabetError):
                Alphabet(size)

    def test_non_integer_size(self) -> None:
        """Test that a non-integer size is rejected."""
        with pytest.raises(InvalidAlphabetError):
            Alphabet("2")  # type: ignore[arg-type]

    def test_equality_and_hash(self) -> None:
        """Test alphabets compare by size."""
        assert Alphabet(3) == Alphabet(3)
        assert Alphabet(3) != Alphabet(2)
        assert hash(Alphabet(3)) == hash(Alphabet(3))


class TestStr:
    def test_parse_and_format(self) -> None:
        """Test the <size>:<digits> form."""
        x = Str.parse("2:0110")
        assert x.symbols == (0, 1, 1, 0)
        assert str(x) == "2:0110"
        assert repr(x) == "Str('2:0110')"

    def test_parse_empty(self) -> None:
        """Test that `2:` is the empty binary string."""
        x = Str.parse("2:")
        assert len(x) == 0
        assert x == Str.empty(2)

    def test_invalid_literals(self) -> None:
        """Test malformed and out-of-alphabet literals."""
        for text in ("0110", "2:012", "x:01", "2-01", ""):
            with pytest.raises((InvalidStringError, InvalidAlphabetError)):
                Str.parse(text)

    def test_length_lex_order(self) -> None:
        """Test that shorter strings come first, then lexicographic order."""
        assert Str.of(2, "1") < Str.of(2, "00")
        assert Str.of(2, "01") < Str.of(2, "10")
        assert Str.empty(2) < Str.of(2, "0")
        assert not Str.of(2, "10") < Str.of(2, "10")

    def test_concatenation(self) -> None:
        """Test concatenation over one alphabet."""
        assert Str.of(2, "01") + Str.of(2, "1") == Str.of(2, "011")

    def test_concatenation_alphabet_mismatch(self) -> None:
        """Test that strings over different alphabets cannot be joined."""
        with pytest.raises(AlphabetMismatchError):
            _ = Str.of(2, "0") + Str.of(3, "0")

    def test_slicing_helpers(self) -> None:
        """Test head, take, drop and affix checks."""
        x = Str.of(3, "2101")
        assert x.head == 2
        assert x.take(2) == Str.of(3, "21")
        assert x.drop(1) == Str.of(3, "101")
        assert x.drop_last(1) == Str.of(3, "210")
        assert x.startswith(Str.of(3, "21"))
        assert x.endswith(Str.of(3, "01"))
        assert Str.empty(3).head is None

    def test_equality_distinguishes_alphabets(self) -> None:
        """Test that equal digits over different alphabets differ."""
        assert Str.of(2, "01") != Str.of(3, "01")


class TestRankUnrank:
    def test_ternary_table(self) -> None:
        """Test indices 0-17 over a ternary alphabet."""
        assert [unrank(i, 3).digits for i in range(18)] == TERNARY_TABLE
        assert [rank(Str.of(3, d)) for d in TERNARY_TABLE] == list(range(18))

    def test_binary_start(self) -> None:
        """Test the first binary strings."""
        assert [unrank(i, 2).digits for i in range(7)] == [
            "",
            "0",
            "1",
            "00",
            "01",
            "10",
            "11",
        ]

    def test_long_ternary_string(self) -> None:
        """Test ranks of strings far longer than any decimal conversion limit."""
        x = Str.of(3, "1" * 5000)
        # (3^5000 - 1) / 2 shorter strings, and 11...1 reads as (3^5000 - 1) / 2.
        assert rank(x) == 3**5000 - 1
        assert unrank(rank(x), 3) == x
        assert value_of(Str.of(3, "12")) == 5
        assert value_of(Str.empty(3)) == 0

    def test_negative_index(self) -> None:
        """Test that no string has a negative index."""
        with pytest.raises(UnderflowError):
            unrank(-1, 2)

    def test_total_upto(self) -> None:
        """Test counts of strings up to a length."""
        assert total_upto(2, 3) == 15
        assert total_upto(3, 2) == 13
        assert total_upto(2, -1) == 0

    @given(indices, sizes)
    def test_rank_inverts_unrank(self, n: int, size: int) -> None:
        """Test rank(unrank(n)) = n."""
        assert rank(unrank(n, size)) == n

    @given(strs())
    def test_unrank_inverts_rank(self, x: Str) -> None:
        """Test unrank(rank(x)) = x."""
        assert unrank(rank(x), x.alphabet) == x

    @given(strs(size=2), strs(size=2))
    def test_rank_is_monotone(self, x: Str, y: Str) -> None:
        """Test that the order on strings matches the order on indices."""
        assert (x < y) == (rank(x) < rank(y))


class TestPairing:
    def test_cantor_values(self) -> None:
        """Test the first values of the Cantor pairing."""
        assert [cantor_pair(a, b) for a, b in [(0, 0), (1, 0), (0, 1), (2, 0)]] == [
            0,
            1,
            2,
            3,
        ]

    @given(st.integers(0, 10**5), st.integers(0, 10**5))
    def test_cantor_round_trip(self, a: int, b: int) -> None:
        """Test unpairing a paired value."""
        assert cantor_unpair(cantor_pair(a, b)) == (a, b)

    @given(st.integers(0, 10**6))
    def test_cantor_onto(self, z: int) -> None:
        """Test pairing an unpaired value."""
        assert cantor_pair(*cantor_unpair(z)) == z

    @given(strs(size=3), strs(size=3))
    def test_string_pair_round_trip(self, x: Str, y: Str) -> None:
        """Test unpair(pair(x, y)) = (x, y)."""
        assert unpair(pair(x, y)) == (x, y)

    def test_pair_alphabet_mismatch(self) -> None:
        """Test that pairing needs one alphabet."""
        with pytest.raises(AlphabetMismatchError):
            pair(Str.of(2, "0"), Str.of(3, "0"))


class TestConversions:
    @given(strs(), sizes)
    def test_convert_alphabet_keeps_rank(self, x: Str, target: int) -> None:
        """Test that alphabet conversion preserves the index."""
        y = convert_alphabet(x, target)
        assert y.alphabet.size == target
        assert convert_alphabet(y, x.alphabet) == x

    @given(strs(), st.integers(0, 1000))
    def test_str_add_round_trip(self, x: Str, n: int) -> None:
        """Test that adding then subtracting n returns x."""
        assert str_add(str_add(x, n), -n) == x

    def test_str_add_underflow(self) -> None:
        """Test that stepping below ε fails."""
        with pytest.raises(UnderflowError):
            str_add(Str.of(2, "0"), -2)


class TestEnumeration:
    def test_strings_of_length(self) -> None:
        """Test strings of one length in order."""
        assert [x.digits for x in strings_of_length(2, 2)] == ["00", "01", "10", "11"]

    def test_strings_upto_matches_unrank(self) -> None:
        """Test that enumeration order is index order."""
        assert list(strings_upto(3, 3)) == [unrank(i, 3) for i in range(40)]

    def test_strings_between(self) -> None:
        """Test enumeration of a length band."""
        band = list(strings_between(2, 2, 3))
        assert len(band) == 12
        assert band[0] == Str.of(2, "00")
        assert band[-1] == Str.of(2, "111")
