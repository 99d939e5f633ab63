"""Local expansion and reduction on the class of 1-32-4 avoiders.

``reduce`` maps an avoider of length n to one of length n-1 and ``expand``
produces, for an avoider with tree label k, its (k+1)(k+2)/2 + 1 children
of length n+1.  Every length-(n+1) avoider arises from exactly one parent,
and reduce inverts expand, so iterating expand from the single letter 1
builds the whole class as a tree.

All children renumber the parent entries upward by one; the new smallest
entry is written as 0 before renumbering.  Children produced by ``MoveAll``
and ``Partial`` place the new minimum after the old one (the entry 2 of the
child precedes its 1), ``Insert`` children do the opposite.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .blocks import Block, decompose
from .perms import Perm, check_permutation, standard_reduction


@dataclasses.dataclass(frozen=True)
class MoveAll:
    """New minimum goes right after the old one, keeping every run of the
    last block behind it."""


@dataclasses.dataclass(frozen=True)
class Partial:
    """Run j of the last i+1 runs jumps in front of the new minimum; the
    other i of them stay behind it."""

    i: int
    j: int


@dataclasses.dataclass(frozen=True)
class Insert:
    """New minimum becomes the head of the last block, placed just before
    its p-th run (after all runs when p is the old label plus one)."""

    p: int


ChildSpec = MoveAll | Partial | Insert


def child_label(spec: ChildSpec, k: int) -> int:
    """Tree label of the child ``spec`` produces from a parent labelled k.

    >>> child_label(Partial(2, 1), 4)
    2
    >>> child_label(Insert(5), 4)
    5
    """
    if k < 0:
        raise ValueError(f"parent label must be nonnegative: {k}")
    match spec:
        case Partial(i=i, j=j):
            if not (0 <= i <= k - 1 and 1 <= j <= i + 1):
                raise ValueError(f"{spec} is not a child move for label {k}")
            return i
        case MoveAll():
            return k
        case Insert(p=p):
            if not 1 <= p <= k + 1:
                raise ValueError(f"{spec} is not a child move for label {k}")
            return k if p <= k else k + 1
    raise ValueError(f"unknown child spec: {spec!r}")


def _flatten(blocks: Sequence[Block]) -> list[int]:
    flat: list[int] = []
    for block in blocks:
        flat.append(block.minimum)
        for run in block.runs:
            flat.extend(run)
    return flat


def reduce(word: Sequence[int]) -> Perm:
    """Parent of an avoider in the generating tree.

    When 2 precedes 1 the two last blocks merge, their runs interleaved by
    decreasing maxima, and 1 disappears.  Otherwise 2 leaves its run and
    takes over as the head of the last block.  Either way the result is
    renumbered down to a permutation.

    >>> reduce((8, 4, 6, 1, 7, 5, 2, 3))
    (7, 3, 5, 1, 6, 4, 2)
    >>> reduce((5, 8, 3, 6, 7, 2, 9, 4, 1))
    (4, 7, 2, 5, 6, 1, 8, 3)
    """
    w = check_permutation(word)
    if len(w) < 2:
        raise ValueError(f"nothing to reduce: {w}")
    d = decompose(w)
    blocks = d.blocks
    if len(blocks) >= 2 and blocks[-2].minimum == 2:
        merged = sorted(blocks[-2].runs + blocks[-1].runs, key=lambda run: run[-1], reverse=True)
        new_blocks = blocks[:-2] + (Block(2, tuple(merged)),)
    else:
        kept: list[tuple[int, ...]] = []
        for run in blocks[-1].runs:
            if run[0] == 2:
                if len(run) > 1:
                    kept.append(run[1:])
            else:
                kept.append(run)
        new_blocks = blocks[:-1] + (Block(2, tuple(kept)),)
    return standard_reduction(_flatten(new_blocks))


def expand(word: Sequence[int]) -> list[tuple[ChildSpec, Perm]]:
    """All tree children of an avoider, in canonical order.

    Canonical order is Partial moves by increasing (i, j), then MoveAll,
    then Insert moves by increasing p.  Under it the child labels of a
    node labelled k read 0 1 1 2 2 2 ... (k appearing k+1 times) k+1.

    >>> for spec, child in expand((1, 2)):
    ...     print(spec, child)
    Partial(i=0, j=1) (2, 3, 1)
    MoveAll() (2, 1, 3)
    Insert(p=1) (1, 2, 3)
    Insert(p=2) (1, 3, 2)
    """
    w = check_permutation(word)
    d = decompose(w)
    prefix = tuple(_flatten(d.blocks[:-1]))
    runs = d.blocks[-1].runs
    k = len(runs)

    def cat(group: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
        return tuple(v for run in group for v in run)

    def build(entries: tuple[int, ...]) -> Perm:
        # entries hold 0..n exactly once, with 0 marking the new minimum
        return tuple(v + 1 for v in entries)

    children: list[tuple[ChildSpec, Perm]] = []
    for i in range(k):
        tail = runs[k - i - 1 :]
        for j in range(1, i + 2):
            moved = tail[j - 1]
            rest = tail[: j - 1] + tail[j:]
            children.append(
                (
                    Partial(i, j),
                    build(prefix + (1,) + cat(runs[: k - i - 1]) + moved + (0,) + cat(rest)),
                )
            )
    children.append((MoveAll(), build(prefix + (1, 0) + cat(runs))))
    for p in range(1, k + 2):
        children.append(
            (Insert(p), build(prefix + (0,) + cat(runs[: p - 1]) + (1,) + cat(runs[p - 1 :])))
        )
    return children
