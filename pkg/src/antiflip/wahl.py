"""Wahl singularities 1/m^2(1, ma-1) and their resolution chains.

A :class:`WahlPair` ``(m, a)`` lists its chain starting from the end that
meets the flipping curve.  ``(m, a)`` and ``(m, m-a)`` describe the same
singularity read from opposite ends, so
``reverse(wahl_chain(m, a)) == wahl_chain(m, m - a)``.  The pair ``(1, 1)``
stands for a smooth point.
"""
from __future__ import annotations

from math import gcd, isqrt
from typing import NamedTuple, Sequence

from .cfrac import check_cfrac, hj_evaluate, hj_expand
from .errors import DomainError, InvariantError

__all__ = [
    "WahlPair",
    "SMOOTH",
    "wahl_chain",
    "wahl_chain_glued",
    "recognize_wahl",
    "conjugate",
    "canonical",
]


class WahlPair(NamedTuple):
    m: int
    a: int

    @classmethod
    def of(cls, m: int, a: int) -> "WahlPair":
        if not (isinstance(m, int) and isinstance(a, int)):
            raise DomainError(f"Wahl pair entries must be integers, got ({m!r}, {a!r})")
        if (m, a) == (1, 1):
            return SMOOTH
        if not m > a >= 1:
            raise DomainError(f"Wahl pair needs m > a >= 1 (or the smooth (1,1)), got ({m}, {a})")
        if gcd(m, a) != 1:
            raise DomainError(f"Wahl pair ({m}, {a}) is not coprime")
        return cls(m, a)

    @property
    def smooth(self) -> bool:
        return self.m == 1

    def __str__(self) -> str:
        return f"({self.m},{self.a})"


SMOOTH = WahlPair(1, 1)


def wahl_chain_glued(m: int, a: int) -> tuple[int, ...]:
    """Chain of (m, a) glued from the expansions of m/a and m/(m-a)."""
    left = hj_expand(m, a)
    right = hj_expand(m, m - a)
    return (*left[:-1], left[-1] + right[-1], *reversed(right[:-1]))


def wahl_chain(w: tuple[int, int]) -> tuple[int, ...]:
    """Resolution chain of the Wahl singularity ``w``.

    Computed as the expansion of m^2/(ma-1) and checked against the glued
    construction.

    >>> wahl_chain((5, 2))
    (3, 5, 2)
    >>> wahl_chain((14, 9))
    (2, 3, 2, 2, 7, 3)
    """
    w = WahlPair.of(*w)
    if w.smooth:
        raise DomainError("the smooth point (1,1) has no resolution chain")
    m, a = w
    direct = hj_expand(m * m, m * a - 1)
    glued = wahl_chain_glued(m, a)
    if direct != glued:
        raise InvariantError(f"Wahl chain mismatch for {w}: {direct} vs {glued}")
    return direct


def recognize_wahl(entries: Sequence[int]) -> WahlPair | None:
    """The pair whose Wahl chain is ``entries``, or ``None``.

    >>> recognize_wahl([6, 2, 2])
    WahlPair(m=4, a=1)
    >>> recognize_wahl([2, 2]) is None
    True
    """
    entries = check_cfrac(entries)
    big_n, big_a = hj_evaluate(entries)
    m = isqrt(big_n)
    if m * m != big_n or (big_a + 1) % m:
        return None
    a = (big_a + 1) // m
    if not (1 <= a < m and gcd(m, a) == 1):
        return None
    w = WahlPair(m, a)
    return w if wahl_chain(w) == entries else None


def conjugate(w: tuple[int, int]) -> WahlPair:
    """Same singularity read from the other end: ``(m, m - a)``."""
    w = WahlPair.of(*w)
    return w if w.smooth else WahlPair(w.m, w.m - w.a)


def canonical(w: tuple[int, int]) -> WahlPair:
    """Representative with the smaller second entry, used for B_{p,q} labels."""
    w = WahlPair.of(*w)
    return min(w, conjugate(w), key=lambda p: p.a)
