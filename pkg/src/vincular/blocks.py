"""Block structure of permutations avoiding 1-32-4.

Such a permutation splits at its left-to-right minima m_1 > ... > m_h = 1.
The segment following each minimum decomposes into maximal increasing runs,
so the permutation reads

    m_1 r_11 ... r_1k_1  m_2 r_21 ... r_2k_2  ...  m_h r_h1 ... r_hk_h

with every run entry larger than its block minimum.  Avoidance is a cap on
how large entries after a run may be (``check_avoidance_by_blocks``), and
the run count of the last block is the tree label of ``label``.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import Sequence

from .perms import Perm, avoids, check_permutation, parse_dashed_pattern

PATTERN = parse_dashed_pattern("1-32-4")


@dataclasses.dataclass(frozen=True)
class Block:
    """One left-to-right minimum and the increasing runs that follow it."""

    minimum: int
    runs: tuple[tuple[int, ...], ...]


@dataclasses.dataclass(frozen=True)
class Decomposition:
    blocks: tuple[Block, ...]

    @property
    def label(self) -> int:
        """Run count of the last block; equals ``perms.label`` of the
        recomposed permutation."""
        if not self.blocks:
            raise ValueError("empty decomposition has no label")
        return len(self.blocks[-1].runs)


class AvoiderType(enum.Enum):
    """Relative order of the entries 2 and 1."""

    TYPE_21 = "(2,1)"
    TYPE_12 = "(1,2)"


def decompose(word: Sequence[int], check: bool = True) -> Decomposition:
    """Split an avoider into blocks headed by its left-to-right minima.

    With ``check`` set, raises ValueError when ``word`` contains 1-32-4.

    >>> d = decompose((8, 4, 6, 1, 7, 5, 2, 3))
    >>> [(b.minimum, b.runs) for b in d.blocks]
    [(8, ()), (4, ((6,),)), (1, ((7,), (5,), (2, 3)))]
    >>> d.label
    3
    """
    w = check_permutation(word)
    if len(w) == 0:
        raise ValueError("cannot decompose the empty permutation")
    if check and not avoids(PATTERN, w):
        raise ValueError(f"permutation contains {PATTERN}: {w}")
    blocks: list[Block] = []
    minimum = w[0]
    runs: list[tuple[int, ...]] = []
    run: list[int] = []
    for v in w[1:]:
        if v < minimum:
            if run:
                runs.append(tuple(run))
            blocks.append(Block(minimum, tuple(runs)))
            minimum, runs, run = v, [], []
        elif run and v > run[-1]:
            run.append(v)
        else:
            if run:
                runs.append(tuple(run))
            run = [v]
    if run:
        runs.append(tuple(run))
    blocks.append(Block(minimum, tuple(runs)))
    return Decomposition(tuple(blocks))


def recompose(d: Decomposition) -> Perm:
    """Inverse of ``decompose``.  Raises ValueError when ``d`` is not a
    well-formed decomposition of some permutation.

    >>> recompose(decompose((2, 3, 1, 5, 4, 6)))
    Traceback (most recent call last):
        ...
    ValueError: permutation contains 1-32-4: (2, 3, 1, 5, 4, 6)
    >>> recompose(decompose((3, 5, 1, 2, 4)))
    (3, 5, 1, 2, 4)
    """
    if not d.blocks:
        raise ValueError("empty decomposition")
    if d.blocks[-1].minimum != 1:
        raise ValueError("last block minimum must be 1")
    flat: list[int] = []
    for bi, block in enumerate(d.blocks):
        if bi > 0 and block.minimum >= d.blocks[bi - 1].minimum:
            raise ValueError("block minima must strictly decrease")
        flat.append(block.minimum)
        for ri, run in enumerate(block.runs):
            if not run:
                raise ValueError("empty run")
            if list(run) != sorted(run):
                raise ValueError(f"run is not increasing: {run}")
            if run[0] <= block.minimum:
                raise ValueError(f"run entry {run[0]} below block minimum {block.minimum}")
            if ri > 0 and run[0] >= block.runs[ri - 1][-1]:
                raise ValueError(f"runs {block.runs[ri - 1]} and {run} should be one run")
            flat.extend(run)
    return check_permutation(flat)


def check_avoidance_by_blocks(d: Decomposition) -> bool:
    """Decide avoidance of 1-32-4 from the block shape alone.

    An occurrence needs a descent inside some block, at the boundary of
    runs r_j, r_{j+1}, plus a later entry exceeding max(r_j); the block
    minimum always supplies the smallest letter.  So the permutation is an
    avoider exactly when, for every run that is not last in its block, all
    run entries anywhere to its right stay below its maximum.

    >>> check_avoidance_by_blocks(decompose((8, 4, 6, 1, 7, 5, 2, 3)))
    True
    >>> bad = Decomposition((Block(3, ((5,), (4,))), Block(2, ()), Block(1, ((6,),))))
    >>> recompose(bad)
    (3, 5, 4, 2, 1, 6)
    >>> check_avoidance_by_blocks(bad)
    False
    """
    recompose(d)
    suffix_max = 0
    for block in reversed(d.blocks):
        for ri in range(len(block.runs) - 1, -1, -1):
            run = block.runs[ri]
            if ri < len(block.runs) - 1 and suffix_max > max(run):
                return False
            suffix_max = max(suffix_max, max(run))
    return True


def classify_type(word: Sequence[int]) -> AvoiderType:
    """TYPE_21 when 2 precedes 1, TYPE_12 otherwise.

    Equivalently: TYPE_21 exactly when the next-to-last block minimum is 2.

    >>> classify_type((2, 1)).value
    '(2,1)'
    >>> classify_type((8, 4, 6, 1, 7, 5, 2, 3)).value
    '(1,2)'
    """
    w = check_permutation(word)
    if len(w) < 2:
        raise ValueError(f"type needs both 1 and 2 present: {w}")
    return AvoiderType.TYPE_21 if w.index(2) < w.index(1) else AvoiderType.TYPE_12
