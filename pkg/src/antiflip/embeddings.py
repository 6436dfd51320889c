"""Pairs of disjoint rational homology balls B_{p,q} produced by Mori sequences.

Three ambient spaces are covered:

* a regular neighborhood V of a negative linear chain Gamma, via the usual
  initial flipping mk1A of Gamma (:func:`embed_linear`);
* a blown-up ball B_{n,a} # CP^2-bar, via the initial divisorial mk2A with
  pairs (n, a) and (n^2, n^2 - (na - 1)) (:func:`embed_blowup`);
* the Milnor fiber of a cyclic quotient singularity attached to an extremal
  P-resolution with one Wahl point (:func:`embed_milnor`).

Each member of the Mori sequence gives a pair of disjoint balls, labelled by
the canonical form of its two Wahl pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .cfrac import Fraction, hj_evaluate
from .chains import check_chain
from .errors import DomainError
from .mori import (
    ExtremalNbhd,
    Kind,
    MoriStep,
    PResolution,
    classify,
    initial_neighborhoods,
    mori_sequence,
    presolution_target,
    usual_flip_step,
)
from .wahl import SMOOTH, WahlPair, canonical, conjugate, wahl_chain

__all__ = [
    "ChainNbhd",
    "BlownUpBall",
    "MilnorFiber",
    "EmbeddingReport",
    "usual_initial",
    "usual_initial_chain",
    "usual_flip_sequence",
    "embed_linear",
    "embed_blowup",
    "embed_milnor",
]

SIMPLE = "simple"
SIMPLE_AFTER_FIRST = "simple-for-i>1"
NON_SIMPLE = "non-simple"
NO_LABEL = "none"

ALL_TWOS_NOTE = (
    "no plainly simple embedded rational homology ball: every curve is a (-2)-curve, "
    "and a (-2)-curve is not an extremal P-resolution (K is trivial on it)"
)
LAST_TWO_NOTE = "the last curve is a (-2)-curve, so there is no usual initial flipping mk1A"


def _check_gamma(gamma: Sequence[int]) -> tuple[int, ...]:
    gamma = check_chain(gamma)
    if not gamma:
        raise DomainError("the chain must have at least one curve")
    if min(gamma) < 2:
        raise DomainError(f"chain entries must be >= 2, got {list(gamma)}")
    return gamma


@dataclass(frozen=True)
class ChainNbhd:
    gamma: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": "chain", "chain": list(self.gamma)}

    def __str__(self) -> str:
        return "V[" + ",".join(map(str, self.gamma)) + "]"


@dataclass(frozen=True)
class BlownUpBall:
    w: WahlPair

    def to_dict(self) -> dict:
        return {"kind": "blowup", "wahl": list(self.w)}

    def __str__(self) -> str:
        return f"B_{{{self.w.m},{self.w.a}}} # CP2-bar"


@dataclass(frozen=True)
class MilnorFiber:
    p: PResolution
    q_type: Fraction

    def to_dict(self) -> dict:
        return {
            "kind": "milnor",
            "presolution": self.p.to_dict(),
            "q_type": list(self.q_type),
        }

    def __str__(self) -> str:
        n, a = self.q_type
        return f"Milnor fiber of 1/{n}(1,{a}) for {self.p.short()}"


Target = Union[ChainNbhd, BlownUpBall, MilnorFiber]


def _target_from_dict(d: dict) -> Target:
    kind = d["kind"]
    if kind == "chain":
        return ChainNbhd(tuple(d["chain"]))
    if kind == "blowup":
        return BlownUpBall(WahlPair.of(*d["wahl"]))
    if kind == "milnor":
        (w2, w1), c = d["presolution"]["pairs"], d["presolution"]["c"]
        return MilnorFiber(PResolution(WahlPair.of(*w1), WahlPair.of(*w2), c), Fraction(*d["q_type"]))
    raise DomainError(f"unknown target kind {kind!r}")


@dataclass(frozen=True)
class EmbeddingReport:
    """Ball pairs read off one Mori sequence.

    ``steps`` holds raw pairs; :attr:`pairs` gives the canonical B_{p,q}
    labels.  ``infinite`` means the sequence never ends and only the first
    ``k`` members were computed.
    """

    target: Target
    steps: tuple[MoriStep, ...] = ()
    delta: int | None = None
    infinite: bool = False
    simplicity: str = NO_LABEL
    note: str = ""

    @property
    def pairs(self) -> list[tuple[WahlPair, WahlPair]]:
        return [(canonical(s.nbhd.w1), canonical(s.nbhd.w2)) for s in self.steps]

    @property
    def finite(self) -> bool:
        return not self.infinite

    @property
    def empty(self) -> bool:
        return not self.steps

    def balls(self) -> list[WahlPair]:
        """Distinct non-trivial balls in order of appearance."""
        seen = []
        for pair in self.pairs:
            for w in pair:
                if not w.smooth and w not in seen:
                    seen.append(w)
        return seen

    def to_dict(self) -> dict:
        return {
            "target": self.target.to_dict(),
            "delta": self.delta,
            "infinite": self.infinite,
            "simplicity": self.simplicity,
            "note": self.note,
            "steps": [
                {
                    "i": s.index,
                    "pair1": list(s.nbhd.w1),
                    "pair2": list(s.nbhd.w2),
                    "canonical1": list(canonical(s.nbhd.w1)),
                    "canonical2": list(canonical(s.nbhd.w2)),
                    "display": s.nbhd.display(),
                }
                for s in self.steps
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EmbeddingReport":
        steps = []
        for s in d["steps"]:
            w1, w2 = WahlPair.of(*s["pair1"]), WahlPair.of(*s["pair2"])
            nb = ExtremalNbhd(w1, w2, member=s["i"] > 1)
            steps.append(MoriStep(s["i"], nb, w1.m, w1.a, w2.m, w2.m - w2.a))
        return cls(
            target=_target_from_dict(d["target"]),
            steps=tuple(steps),
            delta=d["delta"],
            infinite=d["infinite"],
            simplicity=d["simplicity"],
            note=d.get("note", ""),
        )


def usual_initial(gamma: Sequence[int]) -> ExtremalNbhd:
    """Usual initial flipping mk1A of Gamma = [e_1..e_t], e_t >= 3.

    With n/a = [e_1, .., e_t - 1] the Wahl point is stored as (n, n-a), so
    delta = n - a.

    >>> usual_initial([3, 3]).pairs
    (WahlPair(m=1, a=1), WahlPair(m=5, a=3))
    """
    gamma = _check_gamma(gamma)
    if gamma[-1] < 3:
        raise DomainError(f"last entry of {list(gamma)} is 2: " + LAST_TWO_NOTE)
    n, a = hj_evaluate((*gamma[:-1], gamma[-1] - 1))
    return ExtremalNbhd(SMOOTH, WahlPair(n, n - a))


def usual_initial_chain(gamma: Sequence[int]) -> tuple[tuple[int, ...], tuple[bool, ...]]:
    """Blown-up chain ``[b_1..b_s] − 1 − e_1 − .. − e_{t-1}`` and its Wahl mask."""
    e = usual_initial(gamma)
    wchain = wahl_chain(conjugate(e.w2))
    rest = tuple(gamma[:-1])
    chain = (*wchain, 1, *rest)
    return chain, (True,) * len(wchain) + (False,) * (1 + len(rest))


def usual_flip_sequence(gamma: Sequence[int]) -> list[tuple[int, WahlPair]]:
    """Flip the usual mk1A of Gamma repeatedly until every fiber is smooth.

    The emitted central-curve numbers spell out Gamma again.

    >>> [c for c, _ in usual_flip_sequence([3, 4])]
    [3, 4]
    """
    w = usual_initial(gamma).w2
    out = []
    while True:
        c, nxt = usual_flip_step(w)
        out.append((c, nxt))
        if nxt.smooth:
            return out
        w = conjugate(nxt)


def embed_linear(gamma: Sequence[int], k: int) -> EmbeddingReport:
    """Disjoint ball pairs in the neighborhood V of the chain Gamma.

    Empty (with a note) when the last entry is 2.  Finite exactly for
    Gamma = [2, .., 2, 3], where delta = 1.
    """
    gamma = _check_gamma(gamma)
    target = ChainNbhd(gamma)
    if gamma[-1] == 2:
        note = ALL_TWOS_NOTE if set(gamma) == {2} else LAST_TWO_NOTE
        return EmbeddingReport(target, note=note)
    e = usual_initial(gamma)
    return EmbeddingReport(
        target,
        steps=tuple(mori_sequence(e, k)),
        delta=e.delta,
        infinite=e.delta > 1,
        simplicity=SIMPLE,
    )


def embed_blowup(w: tuple[int, int], k: int) -> EmbeddingReport:
    """Disjoint ball pairs in B_{n,a} # CP^2-bar from a divisorial family.

    The first embedding B_{n,a} is not known to be simple; the rest are.
    """
    w = WahlPair.of(*w)
    if w.smooth:
        raise DomainError("the blown-up ball needs a Wahl pair, not (1,1)")
    n, a = w
    e = ExtremalNbhd(w, WahlPair(n * n, n * n - (n * a - 1)))
    assert classify(e) is Kind.DIVISORIAL and e.delta == n
    return EmbeddingReport(
        BlownUpBall(w),
        steps=tuple(mori_sequence(e, k)),
        delta=e.delta,
        infinite=True,
        simplicity=SIMPLE_AFTER_FIRST,
    )


def embed_milnor(p: PResolution, k: int) -> list[EmbeddingReport]:
    """Disjoint ball pairs in the Milnor fiber attached to ``p``.

    One report per initial flipping neighborhood over ``p``; all of these
    embeddings are non-simple.
    """
    if len(p.singular_sides) != 1:
        raise DomainError(
            f"{p.display()} must have exactly one Wahl point, has {len(p.singular_sides)}"
        )
    target = MilnorFiber(p, presolution_target(p))
    return [
        EmbeddingReport(
            target,
            steps=tuple(mori_sequence(e, k)),
            delta=e.delta,
            infinite=e.delta > 1,
            simplicity=NON_SIMPLE,
        )
        for e in initial_neighborhoods(p)
    ]
