"""Exact rationals extended with a single infinite value.

Finite values are plain :class:`fractions.Fraction` objects. ``INF`` sits
above every finite value and equals only itself. All threshold tests in the
package go through integer cross-multiplication; nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class _Infinity:
    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("toughore.INF")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __reduce__(self):
        return (_infinity, ())


def _infinity() -> "_Infinity":
    return INF


INF = _Infinity()

Rational = Union[Fraction, _Infinity]


def is_inf(x) -> bool:
    return x is INF


def as_rational(x) -> Rational:
    """Coerce ints, Fractions, ``"p/q"`` strings and ``"inf"`` to a Rational."""
    if x is INF:
        return INF
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(x)


def parse_rational(text: str) -> Rational:
    text = text.strip()
    if text.lower() in ("inf", "infinity"):
        return INF
    value = Fraction(text)
    return value


def format_rational(x: Rational) -> str:
    """Serialise as ``"p/q"`` (always with a denominator) or ``"inf"``."""
    if x is INF:
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
