"""Linear chains of rational curves as rewritable integer sequences.

Entry ``k`` stands for a curve of self-intersection ``-k``.  Chains may carry
(-1)-curves (entry 1) and end in the terminal form ``(0,)``; the empty chain
means "no curves".  Chains are plain tuples.
"""
from __future__ import annotations

from typing import Literal, Sequence

from .cfrac import Fraction, hj_expand
from .errors import DomainError

__all__ = [
    "check_chain",
    "blow_down_at",
    "blow_up_between",
    "blow_up_at_end",
    "reduce",
    "reduce_with_trace",
    "blown_up_vertex_chain",
    "reverse",
    "to_dot",
]


def check_chain(entries: Sequence[int]) -> tuple[int, ...]:
    entries = tuple(entries)
    for e in entries:
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"chain entries must be non-negative integers, got {list(entries)}")
    return entries


def blow_down_at(chain: Sequence[int], i: int) -> tuple[int, ...]:
    """Contract the (-1)-curve at position ``i``.

    >>> blow_down_at((3, 5, 1, 2), 2)
    (3, 4, 1)
    """
    c = list(check_chain(chain))
    if not 0 <= i < len(c):
        raise DomainError(f"index {i} out of range for chain of length {len(c)}")
    if c[i] != 1:
        raise DomainError(f"entry {i} is {c[i]}, not a (-1)-curve")
    for j in (i - 1, i + 1):
        if 0 <= j < len(c):
            if c[j] == 0:
                raise DomainError(f"blowing down entry {i} would make entry {j} positive")
            c[j] -= 1
    del c[i]
    return tuple(c)


def blow_up_between(chain: Sequence[int], i: int) -> tuple[int, ...]:
    """Blow up the intersection point of entries ``i`` and ``i + 1``."""
    c = list(check_chain(chain))
    if not 0 <= i < len(c) - 1:
        raise DomainError(f"no intersection point between entries {i} and {i + 1}")
    c[i] += 1
    c[i + 1] += 1
    c.insert(i + 1, 1)
    return tuple(c)


def blow_up_at_end(chain: Sequence[int], end: Literal["left", "right"]) -> tuple[int, ...]:
    """Blow up a general point of the end curve, attaching a new (-1)-curve."""
    c = list(check_chain(chain))
    if end not in ("left", "right"):
        raise DomainError(f"end must be 'left' or 'right', got {end!r}")
    if not c:
        return (1,)
    if end == "left":
        c[0] += 1
        return (1, *c)
    c[-1] += 1
    return (*c, 1)


def reduce_with_trace(chain: Sequence[int]) -> tuple[tuple[int, ...], list[int]]:
    """Like :func:`reduce`, also returning the contracted positions in order."""
    c = check_chain(chain)
    trace = []
    while 1 in c:
        i = c.index(1)
        c = blow_down_at(c, i)
        trace.append(i)
    return c, trace


def reduce(chain: Sequence[int]) -> tuple[int, ...]:
    """Contract (-1)-curves, leftmost first, until none is left.

    >>> reduce((3, 2, 1, 3, 2))
    (0,)
    >>> reduce((3, 5, 2, 1, 3))
    (3, 3)
    """
    return reduce_with_trace(chain)[0]


def blown_up_vertex_chain(n: int, a: int) -> tuple[int, ...]:
    """Blow-up of the chain of n/a whose prefix is the Wahl chain of (n, a).

    Output is ``[a_1..a_{p-1}, a_p+b_q, b_{q-1}..b_1, 1, a_1..a_p]`` where
    ``n/a = [a_1..a_p]`` and ``n/(n-a) = [b_1..b_q]``.

    >>> blown_up_vertex_chain(5, 2)
    (3, 5, 2, 1, 3, 2)
    """
    a_ = hj_expand(n, a)
    b_ = hj_expand(*Fraction(n, a).dual())
    glued = (*a_[:-1], a_[-1] + b_[-1], *reversed(b_[:-1]))
    return (*glued, 1, *a_)


def reverse(chain: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(check_chain(chain)))


def to_dot(chain: Sequence[int], boxed: Sequence[bool] | None = None, name: str = "chain") -> str:
    """Graphviz path graph; ``boxed[i]`` marks curves contracted to a Wahl point."""
    chain = check_chain(chain)
    boxed = list(boxed) if boxed is not None else [False] * len(chain)
    if len(boxed) != len(chain):
        raise DomainError("boxed mask must match the chain length")
    lines = [f"graph {name} {{", "  rankdir=LR;"]
    for i, (e, box) in enumerate(zip(chain, boxed)):
        shape = "box" if box else "circle"
        lines.append(f'  v{i} [label="−{e}", shape={shape}];')
    for i in range(len(chain) - 1):
        lines.append(f"  v{i} -- v{i + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
