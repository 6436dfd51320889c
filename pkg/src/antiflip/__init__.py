"""Exact combinatorics of Wahl chains, Mori sequences and antiflips.

Computes the pairs of disjoint rational homology balls B_{p,q} that Mori
sequences of extremal neighborhoods embed in chain neighborhoods, in blown-up
balls and in Milnor fibers.
"""
from .cfrac import Fraction, hj_dual, hj_evaluate, hj_expand
from .chains import (
    blow_down_at,
    blow_up_at_end,
    blow_up_between,
    blown_up_vertex_chain,
    reduce,
    reverse,
)
from .embeddings import (
    EmbeddingReport,
    embed_blowup,
    embed_linear,
    embed_milnor,
    usual_flip_sequence,
    usual_initial,
)
from .errors import DomainError, InvariantError
from .mori import (
    ExtremalNbhd,
    Kind,
    MoriStep,
    PResolution,
    classify,
    divisorial_target,
    family_initial,
    flip,
    initial_neighborhoods,
    iter_mori,
    mori_sequence,
    presolution_target,
    usual_flip_step,
)
from .wahl import SMOOTH, WahlPair, canonical, conjugate, recognize_wahl, wahl_chain

__all__ = [
    "blow_down_at",
    "blow_up_at_end",
    "blow_up_between",
    "blown_up_vertex_chain",
    "reduce",
    "reverse",
    "EmbeddingReport",
    "embed_blowup",
    "embed_linear",
    "embed_milnor",
    "usual_flip_sequence",
    "usual_initial",
    "ExtremalNbhd",
    "Kind",
    "MoriStep",
    "PResolution",
    "classify",
    "divisorial_target",
    "family_initial",
    "flip",
    "initial_neighborhoods",
    "iter_mori",
    "mori_sequence",
    "presolution_target",
    "usual_flip_step",
    "Fraction",
    "hj_dual",
    "hj_evaluate",
    "hj_expand",
    "DomainError",
    "InvariantError",
    "SMOOTH",
    "WahlPair",
    "canonical",
    "conjugate",
    "recognize_wahl",
    "wahl_chain",
]

__version__ = "0.1.0"
