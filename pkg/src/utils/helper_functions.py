import os
from fractions import Fraction
from typing import Optional, Set, Union


def format_path(path: str) -> str:
    if os.name == 'nt':
        return path.replace('/', '\\')
    elif os.name == 'posix':
        return path.replace('\\', '/')
    return path


def half(value: Union[int, Fraction]) -> Fraction:
    return Fraction(value, 2)


def is_half_integer(value: Fraction) -> bool:
    return (2 * value).denominator == 1


def format_number(value: Optional[Union[int, Fraction]]) -> str:
    """
    Render an exact number for line-oriented output.

    Integers print bare, other rationals as ``p/q``, and None as ``none``.
    """
    if value is None:
        return "none"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_number(text: str) -> Fraction:
    return Fraction(text.strip())


def fresh_id(base: str, taken: Set[str]) -> str:
    """Return ``base`` with primes appended until it is not in ``taken``, and reserve it."""
    identifier = base
    while identifier in taken:
        identifier += "'"
    taken.add(identifier)
    return identifier
