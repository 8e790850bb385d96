"""Exact coefficient fields: the rationals and the two-element field.

Coefficients are plain Python values (``fractions.Fraction`` over Q, ints 0/1
over Z2); the field objects bundle the arithmetic so ring code can stay
field-agnostic.  Rationals are canonical by construction (lowest terms,
positive denominator), so element equality is structural.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """Arbitrary-precision rationals."""

    name = "Q"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x) -> Fraction:
        return Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def __repr__(self):
        return "QQ"


class BinaryField:
    """The field with two elements, coefficients stored as ints 0/1."""

    name = "Z2"
    characteristic = 2

    zero = 0
    one = 1

    @staticmethod
    def coerce(x) -> int:
        if isinstance(x, Fraction):
            if x.denominator % 2 == 0:
                raise ZeroDivisionError("even denominator has no image in Z2")
            return (x.numerator % 2) * pow(x.denominator % 2, -1, 2)
        return int(x) % 2

    @staticmethod
    def add(a, b):
        return (a + b) % 2

    @staticmethod
    def sub(a, b):
        return (a + b) % 2

    @staticmethod
    def mul(a, b):
        return a & b

    @staticmethod
    def neg(a):
        return a

    @staticmethod
    def inv(a):
        if a % 2 == 0:
            raise ZeroDivisionError("0 is not invertible")
        return 1

    @staticmethod
    def is_zero(a) -> bool:
        return a % 2 == 0

    def __repr__(self):
        return "GF2"


QQ = RationalField()
GF2 = BinaryField()

FIELDS = {"Q": QQ, "Z2": GF2}


def field_by_name(name: str):
    try:
        return FIELDS[name]
    except KeyError:
        raise ValueError(f"unknown coefficient field {name!r}; expected 'Q' or 'Z2'") from None
