from fractions import Fraction

from hypothesis import given, strategies as st

from utils.helper_functions import format_number, fresh_id, is_half_integer, parse_number


def test_format_number():
    assert format_number(Fraction(4, 2)) == "2"
    assert format_number(Fraction(5, 2)) == "5/2"
    assert format_number(-3) == "-3"
    assert format_number(None) == "none"


@given(st.integers(-1000, 1000))
def test_half_integers_print_and_parse(n):
    value = Fraction(n, 2)
    assert is_half_integer(value)
    assert parse_number(format_number(value)) == value


def test_fresh_id_appends_primes():
    taken = {"P", "P'"}
    assert fresh_id("P", taken) == "P''"
    assert "P''" in taken
    assert fresh_id("Q", taken) == "Q"
