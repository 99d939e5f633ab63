"""Permutations as tuples, dashed patterns, and occurrence search.

A permutation of length n is a tuple containing each of 1..n exactly once.
The empty tuple is the empty permutation.  Functions that only compare
entries (occurrence search, reduction, maxima scans) accept any sequence of
distinct integers and are documented as such.

A dashed pattern is a permutation together with adjacency constraints: two
neighbouring letters written without a dash between them must occupy
adjacent positions in any occurrence, while a dash allows an arbitrary gap.
So an occurrence of 1-32-4 in t is a classical occurrence of 1324 whose
middle two letters sit side by side in t.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def check_permutation(word: Sequence[int]) -> Perm:
    """Return ``word`` as a tuple, raising ValueError unless it is a
    permutation of 1..n.

    >>> check_permutation([2, 1, 3])
    (2, 1, 3)
    """
    w = tuple(word)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w}")
    return w


def parse_permutation(text: str) -> Perm:
    """Parse a comma or whitespace separated permutation.

    >>> parse_permutation("8,4,6,1,7,5,2,3")
    (8, 4, 6, 1, 7, 5, 2, 3)
    >>> parse_permutation("2 1")
    (2, 1)
    >>> parse_permutation("")
    ()
    """
    tokens = text.replace(",", " ").split()
    try:
        values = [int(tok) for tok in tokens]
    except ValueError:
        raise ValueError(f"not an integer sequence: {text!r}") from None
    return check_permutation(values)


@dataclasses.dataclass(frozen=True)
class DashedPattern:
    """A dashed (vincular) pattern.

    ``underlying`` is the classical pattern and ``adjacency[i]`` is True
    when letters i and i+1 (0-based) are written without a dash, i.e. must
    be matched to adjacent positions.
    """

    underlying: Perm
    adjacency: tuple[bool, ...]

    def __post_init__(self) -> None:
        check_permutation(self.underlying)
        if len(self.underlying) == 0:
            raise ValueError("empty pattern")
        if len(self.adjacency) != len(self.underlying) - 1:
            raise ValueError(
                f"need {len(self.underlying) - 1} adjacency flags, got {len(self.adjacency)}"
            )

    def __len__(self) -> int:
        return len(self.underlying)

    def __str__(self) -> str:
        if any(v > 9 for v in self.underlying):
            parts = [str(self.underlying[0])]
            for i, adj in enumerate(self.adjacency):
                parts.append("," if adj else "-")
                parts.append(str(self.underlying[i + 1]))
        else:
            parts = [str(self.underlying[0])]
            for i, adj in enumerate(self.adjacency):
                if not adj:
                    parts.append("-")
                parts.append(str(self.underlying[i + 1]))
        return "".join(parts)


def parse_dashed_pattern(text: str) -> DashedPattern:
    """Parse dashed pattern notation.

    Single-digit values may be juxtaposed inside a dash-free block;
    multi-digit values must be comma separated.

    >>> p = parse_dashed_pattern("1-32-4")
    >>> p.underlying, p.adjacency
    ((1, 3, 2, 4), (False, True, False))
    >>> str(p)
    '1-32-4'
    >>> parse_dashed_pattern("31-4-2").adjacency
    (True, False, False)
    """
    blocks = text.split("-")
    if any(block == "" for block in blocks):
        raise ValueError(f"empty block in pattern: {text!r}")
    values: list[int] = []
    adjacency: list[bool] = []
    for bi, block in enumerate(blocks):
        if bi > 0:
            adjacency.append(False)
        if "," in block:
            tokens = block.split(",")
        else:
            tokens = list(block)
        for ti, tok in enumerate(tokens):
            if ti > 0:
                adjacency.append(True)
            if not tok.isdigit() or int(tok) == 0:
                raise ValueError(f"bad value {tok!r} in pattern: {text!r}")
            values.append(int(tok))
    return DashedPattern(check_permutation(values), tuple(adjacency))


def order_isomorphic(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when two sequences of distinct entries have the same relative
    order.

    >>> order_isomorphic((3, 1, 4), (5, 2, 7))
    True
    >>> order_isomorphic((1, 2), (2, 1))
    False
    """
    if len(a) != len(b):
        return False
    ra = sorted(range(len(a)), key=a.__getitem__)
    rb = sorted(range(len(b)), key=b.__getitem__)
    return ra == rb


def _search(pattern: DashedPattern, word: Sequence[int], chosen: list[int]) -> Iterator[tuple[int, ...]]:
    # Depth-first extension of a partial occurrence.  Candidates are tried
    # in increasing position order, so complete occurrences come out in
    # lexicographic order of their index tuples.
    j = len(chosen)
    pat = pattern.underlying
    if j == len(pat):
        yield tuple(chosen)
        return
    if j > 0 and pattern.adjacency[j - 1]:
        candidates = range(chosen[-1] + 1, min(chosen[-1] + 2, len(word)))
    else:
        start = chosen[-1] + 1 if j > 0 else 0
        candidates = range(start, len(word))
    for pos in candidates:
        ok = True
        for jj, q in enumerate(chosen):
            if (word[pos] > word[q]) != (pat[j] > pat[jj]):
                ok = False
                break
        if ok:
            chosen.append(pos)
            yield from _search(pattern, word, chosen)
            chosen.pop()


def occurrences(pattern: DashedPattern, word: Sequence[int]) -> list[tuple[int, ...]]:
    """All occurrences of ``pattern`` in ``word`` as 0-based position
    tuples, in lexicographic order.

    ``word`` must have distinct entries; this is not checked.

    >>> occurrences(parse_dashed_pattern("1-32-4"), (1, 3, 2, 4))
    [(0, 1, 2, 3)]
    >>> occurrences(parse_dashed_pattern("1-32-4"), (1, 3, 5, 2, 4))
    []
    """
    return list(_search(pattern, word, []))


def avoids(pattern: DashedPattern, word: Sequence[int]) -> bool:
    """True when ``word`` contains no occurrence of ``pattern``.

    >>> avoids(parse_dashed_pattern("1-32-4"), (2, 3, 1, 5, 4, 6))
    False
    >>> avoids(parse_dashed_pattern("1-32-4"), (8, 4, 6, 1, 7, 5, 2, 3))
    True
    """
    return next(_search(pattern, word, []), None) is None


def standard_reduction(word: Sequence[int]) -> Perm:
    """Replace the i-th smallest entry by i, giving a permutation.

    >>> standard_reduction((5, 9, 0, 7))
    (2, 4, 1, 3)
    >>> standard_reduction((3, 3))
    Traceback (most recent call last):
        ...
    ValueError: entries are not distinct: (3, 3)
    """
    w = tuple(word)
    if len(set(w)) != len(w):
        raise ValueError(f"entries are not distinct: {w}")
    rank = {v: i + 1 for i, v in enumerate(sorted(w))}
    return tuple(rank[v] for v in w)


def rtl_maxima(word: Sequence[int]) -> list[int]:
    """1-based positions of the right-to-left maxima.

    >>> rtl_maxima((8, 4, 6, 1, 7, 5, 2, 3))
    [1, 5, 6, 8]
    >>> rtl_maxima(())
    []
    """
    positions: list[int] = []
    best = 0
    for i in range(len(word) - 1, -1, -1):
        if word[i] > best:
            positions.append(i + 1)
            best = word[i]
    positions.reverse()
    return positions


def ltr_minima(word: Sequence[int]) -> list[int]:
    """1-based positions of the left-to-right minima.

    >>> ltr_minima((8, 4, 6, 1, 7, 5, 2, 3))
    [1, 2, 4]
    """
    positions: list[int] = []
    best = len(word) + 1
    for i, v in enumerate(word):
        if v < best:
            positions.append(i + 1)
            best = v
    return positions


def label(word: Sequence[int]) -> int:
    """Number of right-to-left maxima lying strictly to the right of the
    entry 1.

    >>> label((8, 4, 6, 1, 7, 5, 2, 3))
    3
    >>> label((1,))
    0
    >>> label((1, 2))
    1
    """
    if len(word) == 0:
        raise ValueError("label of the empty permutation is undefined")
    pos1 = word.index(1)
    count = 0
    best = 0
    for i in range(len(word) - 1, pos1, -1):
        if word[i] > best:
            count += 1
            best = word[i]
    return count
