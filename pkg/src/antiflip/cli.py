"""Command-line front end.

Exit status: 0 on success, 2 on bad input, 3 when an internal invariant
fails (a bug).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import embeddings as emb
from .cfrac import hj_dual, hj_evaluate, hj_expand
from .chains import to_dot
from .errors import DomainError, InvariantError
from .mori import (
    ExtremalNbhd,
    PResolution,
    flip,
    initial_neighborhoods,
    mori_sequence,
    presolution_target,
    sequence_display,
)
from .wahl import SMOOTH, WahlPair, recognize_wahl, wahl_chain

FORMATS = ("text", "json", "dot")


class DotUnsupported(DomainError):
    pass


def _entries(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _bracket(xs: Sequence[int]) -> str:
    return "[" + ",".join(map(str, xs)) + "]"


def _pair(w) -> str:
    return f"({w[0]},{w[1]})"


def _ball(w: WahlPair) -> str:
    return "∅" if w.smooth else f"B_{{{w.m},{w.a}}}"


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _step_dot(step, tail: Sequence[int] = (), name: str = "E") -> str:
    w1, w2 = step.nbhd.w1, step.nbhd.w2
    left = wahl_chain(w2)[::-1] if not w2.smooth else ()
    right = wahl_chain(w1) if not w1.smooth else ()
    chain = (*left, 1, *right, *tail)
    mask = (True,) * len(left) + (False,) + (True,) * len(right) + (False,) * len(tail)
    return to_dot(chain, mask, name=f"{name}_{step.index}")


# hj -------------------------------------------------------------------------

def cmd_hj(args) -> str:
    fmt = args.format
    if args.hj_cmd == "expand":
        chain = hj_expand(args.n, args.a)
        if fmt == "json":
            return _dump({"fraction": [args.n, args.a], "cfrac": list(chain)})
        if fmt == "dot":
            return to_dot(chain)
        return _bracket(chain)
    if args.hj_cmd == "eval":
        f = hj_evaluate(args.entries)
        if fmt == "json":
            return _dump({"cfrac": args.entries, "fraction": list(f)})
        if fmt == "dot":
            raise DotUnsupported("dot output is only available for chains; 'hj eval' returns a fraction")
        return _pair(f)
    f, chain = hj_dual(args.n, args.a)
    if fmt == "json":
        return _dump({"fraction": [args.n, args.a], "dual": list(f), "cfrac": list(chain)})
    if fmt == "dot":
        return to_dot(chain)
    return f"{_pair(f)} {_bracket(chain)}"


# wahl -----------------------------------------------------------------------

def cmd_wahl(args) -> str:
    fmt = args.format
    if args.wahl_cmd == "chain":
        chain = wahl_chain((args.m, args.a))
        if fmt == "json":
            return _dump({"pair": [args.m, args.a], "chain": list(chain)})
        if fmt == "dot":
            return to_dot(chain, [True] * len(chain))
        return _bracket(chain)
    w = recognize_wahl(args.entries)
    if fmt == "json":
        return _dump({"chain": args.entries, "pair": None if w is None else list(w)})
    if fmt == "dot":
        raise DotUnsupported("dot output is not available for 'wahl recognize'")
    return "none" if w is None else _pair(w)


# mori -----------------------------------------------------------------------

def _presolution(args) -> PResolution:
    w = SMOOTH if args.wahl is None else WahlPair.of(*args.wahl)
    return PResolution.one_sided(w, args.curve)


def cmd_mori(args) -> str:
    fmt = args.format
    if args.mori_cmd in ("seq", "flip"):
        e = ExtremalNbhd(WahlPair.of(args.m1, args.a1), WahlPair.of(args.m2, args.a2))
    if args.mori_cmd == "seq":
        steps = mori_sequence(e, args.count)
        if fmt == "json":
            return _dump({
                "delta": e.delta,
                "kind": e.kind.value,
                "infinite": e.delta > 1,
                "steps": [{"i": s.index, **s.nbhd.to_dict()} for s in steps],
            })
        if fmt == "dot":
            return "".join(_step_dot(s) for s in steps)
        lines = [f"delta={e.delta} kind={e.kind.value}"]
        for s in steps:
            w1, w2 = s.pairs
            lines.append(f"E_{s.index}: {_pair(w1)}, {_pair(w2)}  {s.nbhd.display()}")
        lines.append(("…−" if e.delta > 1 else "") + sequence_display(steps))
        return "\n".join(lines)
    if args.mori_cmd == "flip":
        p = flip(e)
        if fmt == "json":
            return _dump(p.to_dict())
        if fmt == "dot":
            chain = p.oriented().chain()
            return to_dot(chain, [i != _center(p) for i in range(len(chain))])
        return f"{p.display()}  delta={p.delta} target={_pair(presolution_target(p))}"
    p = _presolution(args)
    found = initial_neighborhoods(p)
    if fmt == "json":
        return _dump({"presolution": p.to_dict(), "initials": [e.to_dict() for e in found]})
    if fmt == "dot":
        raise DotUnsupported("dot output is not available for 'mori initials'")
    lines = [f"{p.display()}  delta={p.delta} target={_pair(presolution_target(p))}"]
    for e in found:
        lines.append(f"{_pair(e.w1)}, {_pair(e.w2)}  {e.display()}")
    return "\n".join(lines)


def _center(p: PResolution) -> int:
    q = p.oriented()
    return 0 if q.w2p.smooth else len(wahl_chain(q.w2p))


# embed ----------------------------------------------------------------------

def _report_text(r: emb.EmbeddingReport) -> list[str]:
    lines = [f"target: {r.target}"]
    if r.empty:
        lines.append(f"no embeddings: {r.note}")
        return lines
    lines.append(
        f"delta: {r.delta}, infinite: {str(r.infinite).lower()}, simplicity: {r.simplicity}"
    )
    for s, (b1, b2) in zip(r.steps, r.pairs):
        lines.append(f"E_{s.index}: {_ball(b1)} ⊔ {_ball(b2)}  {s.nbhd.display()}")
    return lines


def _report_dot(r: emb.EmbeddingReport) -> str:
    if r.empty:
        raise DotUnsupported("nothing to draw: the report is empty")
    tail = r.target.gamma[:-1] if isinstance(r.target, emb.ChainNbhd) else ()
    return "".join(_step_dot(s, tail) for s in r.steps)


def cmd_embed(args) -> str:
    fmt = args.format
    if args.embed_cmd == "milnor":
        reports = emb.embed_milnor(_presolution(args), args.count)
        if fmt == "json":
            return _dump([r.to_dict() for r in reports])
        if fmt == "dot":
            return "".join(_report_dot(r) for r in reports)
        lines = []
        for i, r in enumerate(reports, 1):
            lines.append(f"family {i}:")
            lines.extend(_report_text(r))
        return "\n".join(lines)
    if args.embed_cmd == "linear":
        r = emb.embed_linear(args.entries, args.count)
    else:
        r = emb.embed_blowup((args.n, args.a), args.count)
    if fmt == "json":
        return _dump(r.to_dict())
    if fmt == "dot":
        return _report_dot(r)
    return "\n".join(_report_text(r))


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="antiflip", parents=[common],
        description="Wahl chains, Mori sequences, flips and embedded rational homology balls.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    hj = sub.add_parser("hj", help="Hirzebruch-Jung continued fractions")
    hj_sub = hj.add_subparsers(dest="hj_cmd", required=True)
    for name in ("expand", "dual"):
        p = hj_sub.add_parser(name, parents=[common])
        p.add_argument("n", type=int)
        p.add_argument("a", type=int)
    p = hj_sub.add_parser("eval", parents=[common])
    p.add_argument("entries", type=_entries)

    wahl = sub.add_parser("wahl", help="Wahl chains")
    wahl_sub = wahl.add_subparsers(dest="wahl_cmd", required=True)
    p = wahl_sub.add_parser("chain", parents=[common])
    p.add_argument("m", type=int)
    p.add_argument("a", type=int)
    p = wahl_sub.add_parser("recognize", parents=[common])
    p.add_argument("entries", type=_entries)

    mori = sub.add_parser("mori", help="Mori sequences and flips")
    mori_sub = mori.add_subparsers(dest="mori_cmd", required=True)
    for name in ("seq", "flip"):
        p = mori_sub.add_parser(name, parents=[common])
        for field in ("m1", "a1", "m2", "a2"):
            p.add_argument(field, type=int)
        if name == "seq":
            p.add_argument("--count", type=int, default=3)
    p = mori_sub.add_parser("initials", parents=[common])
    p.add_argument("--wahl", type=int, nargs=2, metavar=("M", "A"))
    p.add_argument("--curve", type=int, required=True)

    embed = sub.add_parser("embed", help="embedded rational homology balls")
    embed_sub = embed.add_subparsers(dest="embed_cmd", required=True)
    p = embed_sub.add_parser("linear", parents=[common])
    p.add_argument("entries", type=_entries)
    p.add_argument("--count", type=int, default=3)
    p = embed_sub.add_parser("blowup", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("--count", type=int, default=3)
    p = embed_sub.add_parser("milnor", parents=[common])
    p.add_argument("--wahl", type=int, nargs=2, metavar=("M", "A"))
    p.add_argument("--curve", type=int, required=True)
    p.add_argument("--count", type=int, default=3)
    return parser


COMMANDS = {"hj": cmd_hj, "wahl": cmd_wahl, "mori": cmd_mori, "embed": cmd_embed}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        out = COMMANDS[args.cmd](args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
