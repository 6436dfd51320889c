"""Extremal neighborhoods, Mori sequences, flips and divisorial contractions.

An mk2A is a curve through two Wahl points ``w1`` and ``w2``; an mk1A is the
same thing with ``w1 = (1,1)``.  Each pair reads its chain from the end that
meets the curve, and an mk2A prints as

    reverse(wahl_chain(w2)) − wahl_chain(w1)

so ``((5,2), (14,9))`` prints ``[3,7,2,2,3,2]−[3,5,2]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction as Rational
from itertools import islice
from math import gcd
from typing import Iterator

from .cfrac import Fraction, hj_evaluate
from .chains import reduce
from .errors import DomainError, InvariantError
from .wahl import SMOOTH, WahlPair, conjugate, recognize_wahl, wahl_chain

__all__ = [
    "Kind",
    "ExtremalNbhd",
    "PResolution",
    "MoriStep",
    "delta",
    "classify",
    "iter_mori",
    "mori_sequence",
    "family_initial",
    "flip",
    "initial_neighborhoods",
    "divisorial_target",
    "usual_flip_step",
    "presolution_target",
    "format_chain",
    "sequence_display",
]

MINUS = "−"
EMPTY = "∅"


class Kind(str, Enum):
    FLIPPING = "flipping"
    DIVISORIAL = "divisorial"
    NON_INITIAL = "non-initial"


def delta(w1: tuple[int, int], w2: tuple[int, int]) -> int:
    (m1, a1), (m2, a2) = w1, w2
    return m2 * a1 + m1 * a2 - m1 * m2


def format_chain(w: WahlPair, reverse: bool = False) -> str:
    if w.smooth:
        return EMPTY
    chain = wahl_chain(w)
    if reverse:
        chain = chain[::-1]
    return "[" + ",".join(map(str, chain)) + "]"


def _pair(m: int, a: int) -> WahlPair:
    try:
        return WahlPair.of(m, a)
    except DomainError as exc:
        raise InvariantError(f"recursion produced an invalid Wahl pair: {exc}") from None


@dataclass(frozen=True)
class ExtremalNbhd:
    """An mk1A/mk2A.

    ``member=True`` builds a non-initial member of a Mori sequence, which
    skips the ``m2 > m1`` ordering check (the last member of a delta = 1
    sequence breaks it).
    """

    w1: WahlPair
    w2: WahlPair
    member: bool = field(default=False, compare=False, repr=False)
    _delta: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        w1, w2 = WahlPair.of(*self.w1), WahlPair.of(*self.w2)
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", w2)
        object.__setattr__(self, "_delta", delta(w1, w2))
        if w1.smooth and w2.smooth:
            raise DomainError("an extremal neighborhood needs at least one Wahl point")
        if not self.member:
            if w2.smooth:
                raise DomainError("w2 must be a Wahl point; put the smooth point in w1")
            if not w1.smooth and w2.m <= w1.m:
                raise DomainError(f"need m2 > m1, got m1={w1.m}, m2={w2.m}")
        if self.delta < 1:
            raise DomainError(f"K.C must be negative, but delta = {self.delta} for {w1}, {w2}")

    @property
    def delta(self) -> int:
        return self._delta

    @property
    def canonical_degree(self) -> Rational:
        """The intersection number K.C = -delta/(m1 m2)."""
        return Rational(-self.delta, self.w1.m * self.w2.m)

    @property
    def kind(self) -> Kind:
        return classify(self)

    @property
    def pairs(self) -> tuple[WahlPair, WahlPair]:
        return self.w1, self.w2

    def display(self) -> str:
        return f"{format_chain(self.w2, reverse=True)}{MINUS}{format_chain(self.w1)}"

    def to_dict(self) -> dict:
        return {
            "pairs": [list(self.w1), list(self.w2)],
            "delta": self.delta,
            "kind": self.kind.value,
            "display": self.display(),
        }


@dataclass(frozen=True, eq=False)
class PResolution:
    """Extremal P-resolution ``[w2 chain reversed] − c − [w1 chain]``.

    Equality and hashing ignore orientation: swapping the two sides gives the
    same P-resolution seen from the other end.
    """

    w1p: WahlPair
    w2p: WahlPair
    c: int

    def __post_init__(self):
        object.__setattr__(self, "w1p", WahlPair.of(*self.w1p))
        object.__setattr__(self, "w2p", WahlPair.of(*self.w2p))
        # c = 1 is fine between two Wahl points; delta >= 1 is the real constraint
        if not isinstance(self.c, int) or self.c < 1:
            raise DomainError(f"central curve number must be a positive integer, got {self.c!r}")
        if self.delta < 1:
            raise DomainError(
                f"not an extremal P-resolution: delta = {self.delta} "
                f"(K is not positive on the central curve)"
            )

    @classmethod
    def one_sided(cls, w: tuple[int, int], c: int) -> "PResolution":
        """``[chain of w reversed] − c`` with a smooth point on the other side."""
        return cls(SMOOTH, WahlPair.of(*w), c)

    @property
    def delta(self) -> int:
        (m1, a1), (m2, a2) = self.w1p, self.w2p
        return self.c * m1 * m2 - m1 * a2 - m2 * a1

    def oriented(self) -> "PResolution":
        """Orientation used for printing: the larger pair on the left."""
        if self.w2p >= self.w1p:
            return self
        return PResolution(self.w2p, self.w1p, self.c)

    def _key(self):
        return (self.c, tuple(sorted((self.w1p, self.w2p))))

    def __eq__(self, other):
        if not isinstance(other, PResolution):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"PResolution(w1p={tuple(self.w1p)}, w2p={tuple(self.w2p)}, c={self.c})"

    @property
    def singular_sides(self) -> list[WahlPair]:
        return [w for w in (self.w2p, self.w1p) if not w.smooth]

    def chain(self) -> tuple[int, ...]:
        p = self.oriented()
        left = wahl_chain(p.w2p)[::-1] if not p.w2p.smooth else ()
        right = wahl_chain(p.w1p) if not p.w1p.smooth else ()
        return (*left, p.c, *right)

    def display(self) -> str:
        p = self.oriented()
        return MINUS.join([format_chain(p.w2p, reverse=True), str(p.c), format_chain(p.w1p)])

    def short(self) -> str:
        """Display with smooth sides dropped, e.g. ``[4]−3``."""
        p = self.oriented()
        parts = [] if p.w2p.smooth else [format_chain(p.w2p, reverse=True)]
        parts.append(str(p.c))
        if not p.w1p.smooth:
            parts.append(format_chain(p.w1p))
        return MINUS.join(parts)

    def to_dict(self) -> dict:
        p = self.oriented()
        return {
            "pairs": [list(p.w2p), list(p.w1p)],
            "c": p.c,
            "delta": p.delta,
            "display": p.display(),
            "target": list(presolution_target(p)),
        }


@dataclass(frozen=True)
class MoriStep:
    """Member ``index`` of a Mori sequence with its recursion state.

    ``d, c`` are d(i), c(i) and ``d_next, c_next`` are d(i+1), c(i+1).
    """

    index: int
    nbhd: ExtremalNbhd
    d: int
    c: int
    d_next: int
    c_next: int

    @property
    def pairs(self) -> tuple[WahlPair, WahlPair]:
        return self.nbhd.pairs


def classify(e: ExtremalNbhd) -> Kind:
    """Sign of ``delta*m1 - m2``: negative flips, zero is divisorial."""
    d = e.delta
    (m1, a1), (m2, a2) = e.w1, e.w2
    s = d * m1 - m2
    if s < 0:
        return Kind.FLIPPING
    if s > 0:
        return Kind.NON_INITIAL
    if not (m1 == d and m2 == d * d and a2 == d * d - (d * a1 - 1)):
        raise InvariantError(f"divisorial neighborhood {e.w1}, {e.w2} has the wrong shape")
    return Kind.DIVISORIAL


def iter_mori(e: ExtremalNbhd) -> Iterator[MoriStep]:
    """Generate the Mori sequence of an initial neighborhood.

    Infinite for delta >= 2; exactly two members for delta = 1.
    """
    if classify(e) is Kind.NON_INITIAL:
        raise DomainError(f"{e.display()} is not an initial neighborhood")
    dl = e.delta
    (m1, a1), (m2, a2) = e.w1, e.w2
    d_prev, d = m1, m2
    c_prev, c = a1, m2 - a2
    i = 1
    while True:
        w1 = _pair(d_prev, c_prev)
        w2 = _pair(d, d - c)
        nb = e if i == 1 else ExtremalNbhd(w1, w2, member=True)
        yield MoriStep(i, nb, d_prev, c_prev, d, c)
        d_prev, d = d, dl * d - d_prev
        c_prev, c = c, dl * c - c_prev
        if d <= 0:
            return
        i += 1


def mori_sequence(e: ExtremalNbhd, k: int) -> list[MoriStep]:
    """First ``k`` members (fewer only when the sequence is finite)."""
    if k < 0:
        raise DomainError("count must be non-negative")
    return list(islice(iter_mori(e), k))


def _walk_back(w1: WahlPair, w2: WahlPair, dl: int) -> tuple[ExtremalNbhd, int] | None:
    d, c = w1
    d_next, c_next = w2.m, w2.m - w2.a
    index = 1
    if dl == 2 and d_next > d:
        # the recursion is arithmetic: jump straight to the first member
        gd, gc = d_next - d, c_next - c
        j = max(0, -(-(d - gd) // gd))
        d, c = d - j * gd, c - j * gc
        d_next, c_next = d + gd, c + gc
        if not (d == c == 1 or (0 < c < d and gcd(d, c) == 1)):
            return None
        index += j
    while dl * d - d_next > 0:
        d_prev = dl * d - d_next
        c_prev = dl * c - c_next
        if d_prev >= d:
            return None
        if not (d_prev == c_prev == 1 or (0 < c_prev < d_prev and gcd(d_prev, c_prev) == 1)):
            return None
        d, d_next = d_prev, d
        c, c_next = c_prev, c
        index += 1
    try:
        start = ExtremalNbhd(WahlPair(d, c), WahlPair(d_next, d_next - c_next))
    except DomainError:
        return None
    return start, index


def family_initial(e: ExtremalNbhd) -> tuple[ExtremalNbhd, int]:
    """The initial neighborhood whose Mori sequence contains ``e``, and e's index.

    Runs the Mori recursion backwards; if that fails in the given
    orientation the swapped orientation is tried.
    """
    for w1, w2 in ((e.w1, e.w2), (e.w2, e.w1)):
        found = _walk_back(w1, w2, e.delta)
        if found is not None:
            return found
    raise DomainError(f"{e.display()} is not a member of any Mori sequence")


def flip(e: ExtremalNbhd) -> PResolution:
    """Extremal P-resolution of a flipping neighborhood.

    Any member of a flipping Mori sequence is accepted; the formulas are
    applied to the initial member of its family.
    """
    start, _ = family_initial(e)
    if classify(start) is not Kind.FLIPPING:
        raise DomainError(f"{e.display()} belongs to a divisorial family; it has no flip")
    dl = start.delta
    (m1, a1), (m2, a2) = start.w1, start.w2
    w2p = SMOOTH if (m1, a1) == (1, 1) else WahlPair(m1, m1 - a1)
    m1p = m2 - dl * m1
    if m1p == 1:
        w1p = SMOOTH
    else:
        a1p = (m2 - a2 - dl * a1) % m1p
        if a1p == 0 or gcd(m1p, a1p) != 1:
            raise InvariantError(f"flip of {start.display()} has no valid residue mod {m1p}")
        w1p = WahlPair(m1p, a1p)
    num = dl + w1p.m * w2p.a + w2p.m * w1p.a
    den = w1p.m * w2p.m
    if num % den:
        raise InvariantError(f"non-integral central curve {num}/{den} for {start.display()}")
    p = PResolution(w1p, w2p, num // den)
    if p.delta != dl:
        raise InvariantError("flip changed delta")
    return p


def initial_neighborhoods(p: PResolution) -> list[ExtremalNbhd]:
    """Initial flipping neighborhoods whose flip is ``p`` (one per side)."""
    dl = p.delta
    out = []
    for side, other in ((p.w1p, p.w2p), (p.w2p, p.w1p)):
        m1 = side.m
        a1 = 1 if side.smooth else side.m - side.a
        m2 = other.m + dl * m1
        num = dl + m1 * m2 - m2 * a1
        if num % m1:
            raise InvariantError(f"non-integral a2 = {num}/{m1} for {p.display()}")
        try:
            e = ExtremalNbhd(WahlPair(m1, a1), WahlPair.of(m2, num // m1))
        except DomainError as exc:
            raise InvariantError(f"inverse flip of {p.display()} is invalid: {exc}") from None
        if e not in out:
            out.append(e)
    return out


def divisorial_target(e: ExtremalNbhd) -> WahlPair:
    """The Wahl point (Q in Y) that a divisorial family contracts onto.

    On general fibers the contraction is the blow-down of one (-1)-curve.
    """
    start, _ = family_initial(e)
    if classify(start) is not Kind.DIVISORIAL:
        raise DomainError(f"{e.display()} belongs to a flipping family")
    return start.w1


def usual_flip_step(w: tuple[int, int]) -> tuple[int, WahlPair]:
    """Flip of the usual mk1A whose stored pair is ``w``.

    ``w`` is stored as ``(n, n-a)``; the chain ``[e_1..e_s]`` of ``(n, a)`` is
    marked at its last curve.  Returns ``(c, pair)`` for the P-resolution
    ``c − [e_2, .., e_{i0} - 1]`` where ``e_{i0}`` is the last entry >= 3, or
    ``(e_1 - 1, SMOOTH)`` when ``i0 = 1``.  ``pair`` reads its chain from the
    curve, so the next usual mk1A is stored as ``conjugate(pair)``.
    """
    w = WahlPair.of(*w)
    if w.smooth:
        raise DomainError("a smooth point has no usual flip")
    chain = wahl_chain(conjugate(w))
    i0 = max(i for i, e in enumerate(chain) if e >= 3)
    if i0 == 0:
        c, nxt = chain[0] - 1, SMOOTH
    else:
        rest = (*chain[1:i0], chain[i0] - 1)
        nxt = recognize_wahl(rest)
        if nxt is None:
            raise InvariantError(f"truncated chain {list(rest)} of {w} is not a Wahl chain")
        c = chain[0]
    if PResolution(SMOOTH, nxt, c).delta != w.a:
        raise InvariantError(f"usual flip of {w} does not preserve delta")
    return c, nxt


def presolution_target(p: PResolution) -> Fraction:
    """Cyclic quotient type (N, A) of the singularity that ``p`` resolves."""
    chain = reduce(p.oriented().chain())
    try:
        return hj_evaluate(chain)
    except DomainError:
        raise InvariantError(f"{p.display()} does not contract to a cyclic quotient") from None


def sequence_display(steps: list[MoriStep]) -> str:
    """Whole sequence in one line, newest member leftmost: ``…−[…]−[…]−∅``."""
    if not steps:
        return ""
    parts = [format_chain(steps[0].nbhd.w1)]
    for s in steps:
        parts.append(format_chain(s.nbhd.w2, reverse=True))
    return MINUS.join(reversed(parts))
