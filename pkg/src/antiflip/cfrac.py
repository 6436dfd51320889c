"""Hirzebruch-Jung continued fractions.

A cyclic quotient singularity 1/n(1,a) is recorded as a reduced
:class:`Fraction` ``(n, a)`` with ``n > a >= 1``.  Its minimal resolution is
the chain given by the HJ expansion

    n/a = e_1 - 1/(e_2 - 1/(... - 1/e_s)),   e_i >= 2,

written ``[e_1, ..., e_s]`` and stored as a plain tuple of ints.  All
arithmetic is on Python ints, so nothing overflows.
"""
from __future__ import annotations

from math import gcd
from typing import NamedTuple, Sequence

from .errors import DomainError

__all__ = ["Fraction", "check_cfrac", "hj_expand", "hj_evaluate", "hj_dual"]


class Fraction(NamedTuple):
    """Reduced type ``(num, den)`` of 1/num(1,den); not a rational number class."""

    num: int
    den: int

    @classmethod
    def of(cls, num: int, den: int) -> "Fraction":
        """Validated constructor; raises :class:`DomainError`."""
        if not (isinstance(num, int) and isinstance(den, int)):
            raise DomainError(f"fraction entries must be integers, got ({num!r}, {den!r})")
        if not num > den >= 1:
            raise DomainError(f"need n > a >= 1, got ({num}, {den})")
        if gcd(num, den) != 1:
            raise DomainError(f"({num}, {den}) is not reduced")
        return cls(num, den)

    def dual(self) -> "Fraction":
        return Fraction(self.num, self.num - self.den)

    def __str__(self) -> str:
        return f"({self.num},{self.den})"


def check_cfrac(entries: Sequence[int]) -> tuple[int, ...]:
    entries = tuple(entries)
    if not entries:
        raise DomainError("an HJ continued fraction needs at least one entry")
    bad = [e for e in entries if not isinstance(e, int) or e < 2]
    if bad:
        raise DomainError(f"HJ entries must be integers >= 2, got {list(entries)}")
    return entries


def hj_expand(n: int, a: int) -> tuple[int, ...]:
    """HJ expansion of n/a.

    >>> hj_expand(11, 3)
    (4, 3)
    >>> hj_expand(25, 9)
    (3, 5, 2)
    """
    n, a = Fraction.of(n, a)
    out = []
    while a > 1:
        e = -(-n // a)
        out.append(e)
        n, a = a, e * a - n
    out.append(n)
    return tuple(out)


def hj_evaluate(entries: Sequence[int]) -> Fraction:
    """Evaluate ``[e_1, ..., e_s]`` right to left.

    >>> hj_evaluate([3, 5, 2])
    Fraction(num=25, den=9)
    """
    entries = check_cfrac(entries)
    num, den = entries[-1], 1
    for e in reversed(entries[:-1]):
        num, den = e * num - den, num
    # numerator and denominator of successive convergents stay coprime
    return Fraction(num, den)


def hj_dual(n: int, a: int) -> tuple[Fraction, tuple[int, ...]]:
    """Return the dual type ``(n, n-a)`` with its expansion."""
    f = Fraction.of(n, a).dual()
    return f, hj_expand(*f)
