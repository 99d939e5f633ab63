"""Recurrences and series identities for the avoider counts.

Two triangles refine the counting sequence 1, 1, 2, 6, 23, 105, 549, ...
of 1-32-4 avoiders.  With u(0,0) = 1 and u(n,0) = 0 for n >= 1,

    u(n,k) = u(n-1,k-1) + k * sum_{j>=k} u(n-1,j)      (1 <= k <= n)

counts by how many children a length-n node has in the shifted tree sense,
while v(n,k) = u(n,k+1) counts avoiders of length n with tree label k.
Row sums of either triangle give the counting sequence.

The module also carries a separate recursion for 31-4-2 avoiders counted
by first letter, a continued fraction whose series disagrees with the
counting sequence (``compare_cfrac_with_counts`` reports where), a label
transform for succession rules, and residual checks for the functional
equation and the boundary differential equation of the label series.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .gentree import SuccessionRule, generate_level, omega_rule
from .perms import label, parse_dashed_pattern

PATTERN_3142 = parse_dashed_pattern("31-4-2")


@dataclasses.dataclass(frozen=True)
class Triangle:
    """Sparse integer triangle with entries sorted by (n, k)."""

    entries: tuple[tuple[int, int, int], ...]
    n_max: int

    def value(self, n: int, k: int) -> int:
        for en, ek, ev in self.entries:
            if (en, ek) == (n, k):
                return ev
        return 0

    def row(self, n: int) -> dict[int, int]:
        return {k: v for en, k, v in self.entries if en == n}

    def row_sum(self, n: int) -> int:
        return sum(v for en, _, v in self.entries if en == n)

    def to_csv(self) -> str:
        lines = ["n,k,value"]
        lines.extend(f"{n},{k},{v}" for n, k, v in self.entries)
        return "\n".join(lines) + "\n"


def u_triangle(n_max: int) -> Triangle:
    """Rows 0..n_max of the triangle u.

    >>> u_triangle(4).row(4)
    {1: 6, 2: 10, 3: 6, 4: 1}
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative: {n_max}")
    rows: list[dict[int, int]] = [{0: 1}]
    for n in range(1, n_max + 1):
        prev = rows[n - 1]
        # suffix[k] = sum of u(n-1, j) for j >= k
        suffix = [0] * (n + 2)
        for k in range(n - 1, -1, -1):
            suffix[k] = suffix[k + 1] + prev.get(k, 0)
        row = {k: prev.get(k - 1, 0) + k * suffix[min(k, n)] for k in range(1, n + 1)}
        rows.append(row)
    entries = [(n, k, v) for n, row in enumerate(rows) for k, v in sorted(row.items())]
    return Triangle(tuple(entries), n_max)


def v_triangle(n_max: int) -> Triangle:
    """Label census triangle: v(n,k) avoiders of length n carry label k.

    Computed by its own recurrence, not by shifting u: with v(0,-1) = 1
    and v(n,-1) = 0 for n >= 1,

        v(n,k) = v(n-1,k-1) + (k+1) * sum_{k<=j<=n-2} v(n-1,j)

    >>> v_triangle(4).row(4)
    {0: 6, 1: 10, 2: 6, 3: 1}
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative: {n_max}")
    rows: list[dict[int, int]] = [{-1: 1}]
    for n in range(1, n_max + 1):
        prev = rows[n - 1]
        suffix = [0] * (n + 2)
        for k in range(n - 2, -1, -1):
            suffix[k] = suffix[k + 1] + prev.get(k, 0)
        row = {k: prev.get(k - 1, 0) + (k + 1) * (suffix[k] if k <= n - 2 else 0) for k in range(n)}
        rows.append(row)
    entries = [(n, k, v) for n, row in enumerate(rows) for k, v in sorted(row.items())]
    return Triangle(tuple(entries), n_max)


def count_avoiders(n: int) -> int:
    """Number of 1-32-4 avoiders of length n.

    >>> [count_avoiders(n) for n in range(8)]
    [1, 1, 2, 6, 23, 105, 549, 3207]
    """
    if n < 0:
        raise ValueError(f"length must be nonnegative: {n}")
    return u_triangle(n).row_sum(n)


def avoider_counts(n_max: int) -> list[int]:
    """Counting sequence for lengths 0..n_max, from one triangle pass."""
    tri = u_triangle(n_max)
    return [tri.row_sum(n) for n in range(n_max + 1)]


def callan_3142_triangle(n_max: int) -> Triangle:
    """Avoiders of 31-4-2 of length n counted by first letter k.

    Rows follow the recursion a(n,n) = a(n-1) and, for 1 <= k <= n-1,

        a(n,k) = sum_{i<k} a(i) * sum_{j=k-i}^{n-1-i} a(n-1-i, j)

    where a(m) is the m-th row sum and a(0) = 1.

    >>> callan_3142_triangle(4).row(4)
    {1: 6, 2: 6, 3: 5, 4: 6}
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative: {n_max}")
    table: dict[tuple[int, int], int] = {}
    sums = [1]
    for n in range(1, n_max + 1):
        table[(n, n)] = sums[n - 1]
        for k in range(1, n):
            total = 0
            for i in range(k):
                total += sums[i] * sum(table.get((n - 1 - i, j), 0) for j in range(k - i, n - i))
            table[(n, k)] = total
        sums.append(sum(table[(n, k)] for k in range(1, n + 1)))
    entries = [(n, k, table[(n, k)]) for n in range(1, n_max + 1) for k in range(1, n + 1)]
    return Triangle(tuple(entries), n_max)


def callan_3142(n_max: int) -> list[int]:
    """Counting sequence of 31-4-2 avoiders for lengths 0..n_max.

    >>> callan_3142(8)
    [1, 1, 2, 6, 23, 104, 531, 2982, 18109]
    """
    tri = callan_3142_triangle(n_max)
    return [1] + [tri.row_sum(n) for n in range(1, n_max + 1)]


# ---------------------------------------------------------------------------
# univariate series and the continued fraction


@dataclasses.dataclass(frozen=True)
class UnivariateSeries:
    """Truncated power series; coefficients[i] is the z^i coefficient."""

    coefficients: tuple[int | Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def to_csv(self) -> str:
        lines = ["order,coefficient"]
        lines.extend(f"{i},{c}" for i, c in enumerate(self.coefficients))
        return "\n".join(lines) + "\n"


def _ser_mul(a: list[Fraction], b: list[Fraction], n_max: int) -> list[Fraction]:
    out = [Fraction(0)] * (n_max + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(min(len(b), n_max + 1 - i)):
            out[i + j] += ai * b[j]
    return out


def _ser_inv(a: list[Fraction], n_max: int) -> list[Fraction]:
    assert a[0] != 0
    out = [Fraction(0)] * (n_max + 1)
    out[0] = Fraction(1) / a[0]
    for i in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(1, min(i, len(a) - 1) + 1):
            acc += a[j] * out[i - j]
        out[i] = -acc / a[0]
    return out


def _cfrac_coefficients(n_max: int, depth: int) -> list[Fraction]:
    # U(depth) is cut off at 1; U(m) = 1 - z^m - z / U(m+1) going down.
    level = [Fraction(0)] * (n_max + 1)
    level[0] = Fraction(1)
    for m in range(depth - 1, -1, -1):
        nxt = [Fraction(0)] * (n_max + 1)
        nxt[0] = Fraction(1)
        if m <= n_max:
            nxt[m] -= 1
        inv = _ser_inv(level, n_max)
        for i in range(n_max):
            nxt[i + 1] -= inv[i]
        level = nxt
    # u(z) = 1 - z * (U(0) - z)
    out = [Fraction(0)] * (n_max + 1)
    out[0] = Fraction(1)
    for i in range(n_max):
        out[i + 1] -= level[i]
    if n_max >= 2:
        out[2] += 1
    return out


def continued_fraction_series(n_max: int, depth: int | None = None) -> UnivariateSeries:
    """Series of u(z) = 1 - z(U(0) - z) with U(m) = 1 - z^m - z/U(m+1).

    The fraction is cut at ``depth`` levels (default n_max + 2) and the
    result is checked against depth + 1; a ValueError means the cut was
    too shallow for the requested order.

    >>> continued_fraction_series(6).coefficients
    (1, 0, 2, 2, 5, 15, 48)
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative: {n_max}")
    if depth is None:
        depth = n_max + 2
    if depth < 1:
        raise ValueError(f"depth must be positive: {depth}")
    got = _cfrac_coefficients(n_max, depth)
    again = _cfrac_coefficients(n_max, depth + 1)
    if got != again:
        raise ValueError(f"depth {depth} is too small to stabilize order {n_max}")
    coeffs = tuple(int(c) if c.denominator == 1 else c for c in got)
    return UnivariateSeries(coeffs)


@dataclasses.dataclass(frozen=True)
class CfracComparison:
    series: tuple[int | Fraction, ...]
    counts: tuple[int, ...]
    first_mismatch: int | None

    def __str__(self) -> str:
        if self.first_mismatch is None:
            return f"continued fraction matches counts through order {len(self.counts) - 1}"
        i = self.first_mismatch
        return (
            f"continued fraction disagrees with counts from order {i}: "
            f"series {self.series[i]} vs count {self.counts[i]}"
        )


def compare_cfrac_with_counts(n_max: int, depth: int | None = None) -> CfracComparison:
    """Continued fraction coefficients next to the avoider counts.

    The two disagree from order 1 on; the comparison records that rather
    than hiding it.

    >>> compare_cfrac_with_counts(4).first_mismatch
    1
    """
    series = continued_fraction_series(n_max, depth).coefficients
    counts = tuple(avoider_counts(n_max))
    first = next((i for i in range(n_max + 1) if series[i] != counts[i]), None)
    return CfracComparison(series, counts, first)


# ---------------------------------------------------------------------------
# label series, functional equation, boundary differential equation


@dataclasses.dataclass(frozen=True)
class BivariateSeries:
    """Polynomial truncation of sum c(n,k) z^n u^k plus an explicit term
    for the empty object, which carries no label."""

    coeffs: tuple[tuple[tuple[int, int], int], ...]
    empty_term: int = 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)


def _freeze(coeffs: dict[tuple[int, int], int], empty_term: int = 0) -> BivariateSeries:
    items = tuple(sorted((nk, c) for nk, c in coeffs.items() if c != 0))
    return BivariateSeries(items, empty_term)


def label_series(n_max: int) -> BivariateSeries:
    """Census series: empty term 1 plus z^n u^(label of t) over avoiders t
    of each length n up to n_max."""
    coeffs: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        for word in generate_level(n):
            key = (n, label(word))
            coeffs[key] = coeffs.get(key, 0) + 1
    return _freeze(coeffs, empty_term=1)


def lomega_apply(s: BivariateSeries, rule: SuccessionRule) -> BivariateSeries:
    """Label transform of a succession rule: u^k becomes the sum of u^e
    over the productions e of k, and the empty-object term becomes
    u^axiom.  The z exponent is untouched.

    >>> s = _freeze({(1, 0): 1}, empty_term=1)
    >>> lomega_apply(s, omega_rule()).coeffs
    (((0, 0), 1), ((1, 0), 1), ((1, 1), 1))
    """
    out: dict[tuple[int, int], int] = {}
    if s.empty_term:
        key = (0, rule.axiom)
        out[key] = out.get(key, 0) + s.empty_term
    for (n, k), c in s.coeffs:
        for e in rule.productions(k):
            key = (n, e)
            out[key] = out.get(key, 0) + c
    return _freeze(out)


@dataclasses.dataclass(frozen=True)
class ResidualReport:
    ok: bool
    order: int
    first_bad: tuple[tuple[int, int], int] | None

    def __str__(self) -> str:
        if self.ok:
            return f"residual vanishes through order {self.order}"
        (n, k), c = self.first_bad  # type: ignore[misc]
        return f"residual has {c} * z^{n} u^{k}"


def check_functional_equation(n_max: int) -> ResidualReport:
    """Verify A(z,u) = A(0,u) + z * L(A(z,u)) on the census series
    through order n_max, with L the label transform of the tree rule.
    """
    series = label_series(n_max)
    mapped = lomega_apply(series, omega_rule())
    residual = dict(series.coeffs)
    # subtract A(0,u): the u-free empty term cancels; census has no other
    # z^0 coefficients
    for (n, k), c in mapped.coeffs:
        if n + 1 > n_max:
            continue
        key = (n + 1, k)
        residual[key] = residual.get(key, 0) - c
    bad = sorted((nk, c) for nk, c in residual.items() if c != 0)
    if bad:
        return ResidualReport(False, n_max, bad[0])
    return ResidualReport(True, n_max, None)


PDE_CONVENTIONS = (
    "label-plus-one",
    "label",
    "label-plus-one-with-empty",
    "label-with-empty",
)


def _pde_residual(n_max: int, convention: str) -> dict[tuple[int, int], int]:
    census = v_triangle(n_max)
    shift = 1 if convention.startswith("label-plus-one") else 0
    f: dict[tuple[int, int], int] = {}
    for n, k, value in census.entries:
        if n >= 1:
            f[(n, k + shift)] = value
    if convention.endswith("with-empty"):
        f[(0, 0)] = 1

    def mul(poly: dict[tuple[int, int], int], g: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (dz, dt), c in poly.items():
            for (n, m), v in g.items():
                if n + dz > n_max:
                    continue
                key = (n + dz, m + dt)
                out[key] = out.get(key, 0) + c * v
        return out

    df = {(n, m - 1): m * v for (n, m), v in f.items() if m > 0}
    f_at_1: dict[tuple[int, int], int] = {}
    for (n, _), v in f.items():
        f_at_1[(n, 0)] = f_at_1.get((n, 0), 0) + v

    residual: dict[tuple[int, int], int] = {}

    def acc(term: dict[tuple[int, int], int], sign: int) -> None:
        for key, v in term.items():
            if key[0] > n_max:
                continue
            residual[key] = residual.get(key, 0) + sign * v

    acc(mul({(1, 2): 1, (1, 3): -1}, df), 1)
    acc(mul({(0, 0): 1, (0, 1): -2, (0, 2): 1, (1, 2): 2, (1, 3): -1}, f), 1)
    acc({(1, 1): 1, (1, 2): -2, (1, 3): 1}, -1)
    acc(mul({(1, 1): 1}, f_at_1), -1)
    return {key: v for key, v in residual.items() if v != 0}


@dataclasses.dataclass(frozen=True)
class PdeReport:
    ok: bool
    convention: str | None
    order: int
    tried: tuple[tuple[str, tuple[tuple[int, int], int] | None], ...]

    def __str__(self) -> str:
        if self.ok:
            return f"differential equation holds through z^{self.order} with t^({self.convention})"
        return f"differential equation fails through z^{self.order} for all conventions tried"


def check_pde(n_max: int) -> PdeReport:
    """Residual check of

        (1-t) z t^2 dF/dt + ((1-t)^2 (1-zt) + zt) F = zt(1-t)^2 + zt F(z,1)

    for the census series F under each t-exponent convention in
    ``PDE_CONVENTIONS``.  The first convention that makes the residual
    vanish through z^n_max is reported; with the label census one of them
    does, namely t^(label+1) and no empty term.
    """
    tried: list[tuple[str, tuple[tuple[int, int], int] | None]] = []
    winner: str | None = None
    for convention in PDE_CONVENTIONS:
        residual = _pde_residual(n_max, convention)
        first_bad = min(residual.items()) if residual else None
        tried.append((convention, first_bad))
        if first_bad is None and winner is None:
            winner = convention
    return PdeReport(winner is not None, winner, n_max, tuple(tried))
