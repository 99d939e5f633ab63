"""Brute-force oracle: filter full symmetric groups by pattern search.

Everything here deliberately ignores the block structure of the class, so
its output can arbitrate the fast paths.  Enumeration is capped at length
10 (3.6 million words) to keep accidental calls cheap; pass ``force`` to
go past the cap.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations, repeat
from typing import Iterator

from .blocks import PATTERN
from .gentree import generate_level
from .perms import DashedPattern, Perm, avoids, label

ENUMERATION_CAP = 10

STATISTICS = {"label": label}


def all_permutations(n: int, force: bool = False) -> Iterator[Perm]:
    """Permutations of 1..n in lexicographic order.

    >>> list(all_permutations(2))
    [(1, 2), (2, 1)]
    """
    if n < 0:
        raise ValueError(f"length must be nonnegative: {n}")
    if n > ENUMERATION_CAP and not force:
        raise ValueError(f"enumerating length {n} needs force=True (cap {ENUMERATION_CAP})")
    return permutations(range(1, n + 1))


def _avoider_chunk(pattern: DashedPattern, n: int, first: int) -> list[Perm]:
    rest = [v for v in range(1, n + 1) if v != first]
    out = []
    for tail in permutations(rest):
        word = (first,) + tail
        if avoids(pattern, word):
            out.append(word)
    return out


def brute_avoiders(
    pattern: DashedPattern, n: int, workers: int = 1, force: bool = False
) -> list[Perm]:
    """All avoiders of ``pattern`` of length n, in lexicographic order.

    The order and content do not depend on ``workers``.

    >>> len(brute_avoiders(PATTERN, 4))
    23
    """
    if n < 0:
        raise ValueError(f"length must be nonnegative: {n}")
    if n > ENUMERATION_CAP and not force:
        raise ValueError(f"enumerating length {n} needs force=True (cap {ENUMERATION_CAP})")
    if n == 0:
        return [()]
    if workers <= 1 or n <= 6:
        return [w for w in permutations(range(1, n + 1)) if avoids(pattern, w)]
    out: list[Perm] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_avoider_chunk, repeat(pattern), repeat(n), range(1, n + 1)):
            out.extend(chunk)
    return out


def brute_census(
    pattern: DashedPattern, n: int, statistic: str = "label", force: bool = False
) -> dict[int, int]:
    """Histogram of a statistic over the avoiders of length n.

    >>> brute_census(PATTERN, 4)
    {0: 6, 1: 10, 2: 6, 3: 1}
    """
    try:
        stat = STATISTICS[statistic]
    except KeyError:
        raise ValueError(f"unknown statistic {statistic!r}, have {sorted(STATISTICS)}") from None
    if n < 1:
        raise ValueError(f"census needs length at least 1: {n}")
    counts: dict[int, int] = {}
    for word in brute_avoiders(pattern, n, force=force):
        value = stat(word)
        counts[value] = counts.get(value, 0) + 1
    return dict(sorted(counts.items()))


@dataclasses.dataclass(frozen=True)
class DiffReport:
    ok: bool
    levels: tuple[tuple[int, int, int], ...]
    missing: tuple[Perm, ...]
    extra: tuple[Perm, ...]
    duplicates: tuple[Perm, ...]

    def __str__(self) -> str:
        if self.ok:
            top = self.levels[-1][0] if self.levels else 0
            return f"tree agrees with brute force through length {top}"
        return (
            f"tree disagrees with brute force: {len(self.missing)} missing, "
            f"{len(self.extra)} extra, {len(self.duplicates)} duplicated"
        )


def oracle_diff(n_max: int, workers: int = 1, force: bool = False) -> DiffReport:
    """Compare the generating tree against brute enumeration, level by
    level up to length n_max (capped at 9 without ``force``).

    ``missing`` holds avoiders the tree never produced, ``extra`` holds
    tree output the brute filter rejects, ``duplicates`` holds tree output
    produced more than once; a sample of at most ten each is kept.
    """
    if n_max < 1:
        raise ValueError(f"need at least length 1: {n_max}")
    if n_max > 9 and not force:
        raise ValueError(f"oracle_diff past length 9 needs force=True, got {n_max}")
    levels: list[tuple[int, int, int]] = []
    missing: list[Perm] = []
    extra: list[Perm] = []
    duplicates: list[Perm] = []
    for n in range(1, n_max + 1):
        tree = generate_level(n, workers=workers)
        brute = brute_avoiders(PATTERN, n, workers=workers, force=force)
        levels.append((n, len(tree), len(brute)))
        tree_set = set(tree)
        brute_set = set(brute)
        if len(tree_set) < len(tree):
            seen: set[Perm] = set()
            for w in tree:
                if w in seen and len(duplicates) < 10:
                    duplicates.append(w)
                seen.add(w)
        missing.extend(sorted(brute_set - tree_set)[: max(0, 10 - len(missing))])
        extra.extend(sorted(tree_set - brute_set)[: max(0, 10 - len(extra))])
    ok = not missing and not extra and not duplicates
    return DiffReport(ok, tuple(levels), tuple(missing), tuple(extra), tuple(duplicates))
