"""Abelian p-group combinatorics: partitions, Gaussian binomials, subgroup-type
counts, canonical tuples for characteristic subgroups, and the nc/np table.

Partitions are stored with nondecreasing parts.  All arithmetic is exact
(Python integers and fractions); decimal ratios are rendered by truncation
toward zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Partition",
    "CanonicalTuple",
    "partitions",
    "conjugate",
    "gaussian_binomial",
    "alpha",
    "canonical_tuples",
    "canonical_tuple_counts",
    "has_multiple_char_order",
    "nc_np_table",
    "format_ratio",
    "MAX_PARTITION_N",
]

MAX_PARTITION_N = 60


@dataclass(frozen=True)
class Partition:
    """A partition with nondecreasing parts; the type of an abelian p-group."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError("partition parts must be positive")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("partition parts must be nondecreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({','.join(map(str, self.parts))})"


@dataclass(frozen=True)
class CanonicalTuple:
    """A tuple indexing one characteristic subgroup of the group of type ``shape``.

    Entries satisfy 0 <= a_i <= shape_i, are nondecreasing, and successive
    differences are bounded by the shape's differences.
    """

    entries: tuple[int, ...]
    shape: Partition

    def __post_init__(self):
        a, lam = self.entries, self.shape.parts
        if len(a) != len(lam):
            raise ValueError("tuple length must match partition length")
        if any(not 0 <= ai <= li for ai, li in zip(a, lam)):
            raise ValueError("entries must satisfy 0 <= a_i <= shape_i")
        if any(x > y for x, y in zip(a, a[1:])):
            raise ValueError("entries must be nondecreasing")
        if any((a[i + 1] - a[i]) > (lam[i + 1] - lam[i]) for i in range(len(a) - 1)):
            raise ValueError("entry differences exceed shape differences")

    @property
    def r(self) -> int:
        return sum(self.entries)


def partitions(n: int) -> list[Partition]:
    """All partitions of n in (nondecreasing-parts, lexicographic) order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_PARTITION_N:
        raise ValueError(f"n exceeds supported bound {MAX_PARTITION_N}")
    out: list[Partition] = []

    def rec(remaining: int, min_part: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        for p in range(min_part, remaining + 1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    if n == 0:
        return [Partition(())]
    rec(n, 1, [])
    return out


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram, returned with nondecreasing parts."""
    if not lam.parts:
        return lam
    width = lam.parts[-1]
    cols = [sum(1 for p in lam.parts if p >= i) for i in range(1, width + 1)]
    return Partition(tuple(sorted(cols)))


def _conjugate_desc(parts) -> list[int]:
    """Conjugate as a nonincreasing sequence (a_1 >= a_2 >= ...)."""
    parts = [p for p in parts if p > 0]
    if not parts:
        return []
    width = max(parts)
    return [sum(1 for p in parts if p >= i) for i in range(1, width + 1)]


def gaussian_binomial(a: int, b: int, p: int) -> int:
    """Gaussian binomial coefficient (a choose b)_p, by exact integer arithmetic.

    Equals prod_{i=1..a}(p^i - 1) / (prod_{i=1..b}(p^i - 1) * prod_{i=1..a-b}(p^i - 1)),
    with empty products equal to 1.  The division is performed last and must
    be exact.
    """
    if b < 0 or b > a:
        raise ValueError(f"require 0 <= b <= a, got a={a}, b={b}")

    def prod(m: int) -> int:
        out = 1
        for i in range(1, m + 1):
            out *= p**i - 1
        return out

    num = prod(a)
    den = prod(b) * prod(a - b)
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError("gaussian binomial division is not exact")
    return q


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _contains(lam: Partition, mu: Partition) -> bool:
    """Diagram containment mu ⊆ lam: componentwise after right-aligned padding."""
    la, mu_ = lam.parts, mu.parts
    if len(mu_) > len(la):
        return False
    pad = (0,) * (len(la) - len(mu_)) + mu_
    return all(m <= l for m, l in zip(pad, la))


def alpha(lam: Partition, mu: Partition, p: int) -> int:
    """Number of subgroups of type mu inside the abelian p-group of type lam.

    Computed from the conjugate partitions via Gaussian binomials; returns 0
    when mu does not embed componentwise in lam.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not _contains(lam, mu):
        return 0
    a = _conjugate_desc(lam.parts)
    b = _conjugate_desc(mu.parts)
    length = max(len(a), len(b))
    a += [0] * (length - len(a))
    b += [0] * (length - len(b))
    a.append(0)
    b.append(0)
    result = 1
    for i in range(length):
        ai, bi, bi1 = a[i], b[i], b[i + 1]
        result *= p ** ((ai - bi) * bi1) * gaussian_binomial(ai - bi1, bi - bi1, p)
    return result


def canonical_tuples(lam: Partition, r: int) -> list[CanonicalTuple]:
    """All canonical tuples of sum r for the shape lam, lexicographically.

    Their count is the number of characteristic subgroups of order p^r in the
    abelian p-group of type lam (validated against brute force in tests).
    """
    if not 0 <= r <= lam.n:
        raise ValueError(f"require 0 <= r <= {lam.n}")
    parts = lam.parts
    t = len(parts)
    out: list[CanonicalTuple] = []

    def rec(i: int, prev: int, remaining: int, acc: list[int]) -> None:
        if i == t:
            if remaining == 0:
                out.append(CanonicalTuple(tuple(acc), lam))
            return
        # Remaining entries are each at most their part, so prune on totals.
        lo = prev if i else 0
        hi = min(parts[i], remaining)
        if i:
            hi = min(hi, prev + parts[i] - parts[i - 1])
        for v in range(lo, hi + 1):
            acc.append(v)
            rec(i + 1, v, remaining - v, acc)
            acc.pop()

    rec(0, 0, r, [])
    return out


def canonical_tuple_counts(lam: Partition) -> dict[int, int]:
    """Count of canonical tuples for each r in 0..n."""
    counts = {r: 0 for r in range(lam.n + 1)}
    parts = lam.parts
    t = len(parts)

    def rec(i: int, prev: int, total: int) -> None:
        if i == t:
            counts[total] += 1
            return
        lo = prev if i else 0
        hi = parts[i] if not i else min(parts[i], prev + parts[i] - parts[i - 1])
        for v in range(lo, hi + 1):
            rec(i + 1, v, total + v)

    rec(0, 0, 0)
    return counts


def has_multiple_char_order(lam: Partition) -> int | None:
    """Smallest r with at least two canonical tuples, or None.

    Presence forces R(C_{p^n}, [group of type lam]) to be empty, because the
    cyclic group has exactly one subgroup of each order.
    """
    counts = canonical_tuple_counts(lam)
    for r in sorted(counts):
        if counts[r] >= 2:
            return r
    return None


def nc_np_table(max_n: int) -> list[tuple[int, int, int, Fraction]]:
    """Rows (n, nc, np, nc/np) for n = 1..max_n.

    nc counts partitions of n admitting more than one canonical tuple for
    some r; np is the partition count.
    """
    if max_n > MAX_PARTITION_N:
        raise ValueError(f"max_n exceeds supported bound {MAX_PARTITION_N}")
    rows = []
    for n in range(1, max_n + 1):
        parts = partitions(n)
        nc = sum(1 for lam in parts if has_multiple_char_order(lam) is not None)
        np_ = len(parts)
        rows.append((n, nc, np_, Fraction(nc, np_)))
    return rows


def format_ratio(q: Fraction) -> str:
    """Exact rational rendered to at most 3 decimals, truncated toward zero."""
    if q == 0:
        return "0"
    scaled = (q.numerator * 1000) // q.denominator  # truncation toward zero for q >= 0
    text = f"{scaled // 1000}.{scaled % 1000:03d}".rstrip("0").rstrip(".")
    return text or "0"
