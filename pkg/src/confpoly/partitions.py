"""Integer partitions and the conjugacy-class combinatorics of S_n.

The canonical ordering used everywhere in this package is descending
lexicographic on the part tuples, e.g. for n = 4:

    (4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1)

This is a linear extension of the dominance order, which is what makes the
fixed-space matrix of the character machinery lower unitriangular.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache, total_ordering
from math import factorial, prod
from typing import Iterable, Iterator


class PartitionParseError(ValueError):
    """Malformed partition text such as '3,x' or a non-decreasing sequence."""


@total_ordering
class Partition:
    """A weakly decreasing tuple of positive integers; () is the partition of 0."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        pt = tuple(parts)
        for x in pt:
            if not isinstance(x, int) or isinstance(x, bool) or x <= 0:
                raise ValueError(f"parts must be positive integers, got {x!r}")
        if any(pt[i] < pt[i + 1] for i in range(len(pt) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {pt}")
        self._parts = pt

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated text form, e.g. '3,1,1'."""
        body = text.strip()
        if not body:
            raise PartitionParseError("empty partition text")
        try:
            parts = tuple(int(piece.strip()) for piece in body.split(","))
        except ValueError:
            raise PartitionParseError(f"invalid partition text {text!r}") from None
        try:
            return cls(parts)
        except ValueError as exc:
            raise PartitionParseError(str(exc)) from None


@lru_cache(maxsize=None)
def _partition_tuples(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(t) for t in _partition_tuples(n, n)]


@lru_cache(maxsize=None)
def p_length(n: int, l: int) -> int:
    """Number of partitions of n with exactly l parts.

    Recursion p(n,l) = p(n-1,l-1) + p(n-l,l) with p(n,n) = 1, and the
    degenerate cases p(0,0) = 1, p(n,0) = 0 for n > 0, p(n,l) = 0 for l > n.
    """
    if n == 0 and l == 0:
        return 1
    if n <= 0 or l <= 0 or l > n:
        return 0
    if l == n:
        return 1
    return p_length(n - 1, l - 1) + p_length(n - l, l)


def set_partition_count(shape: Partition) -> int:
    """Number of set partitions of {1..n} whose block sizes form ``shape``.

    Exact multinomial n! / prod_i (size_i!)^(mult_i) * (mult_i!) over the
    distinct part sizes.
    """
    if len(shape) == 0:
        raise ValueError("shape must be a nonempty partition")
    num = factorial(shape.n)
    den = 1
    for size, mult in Counter(shape.parts).items():
        den *= factorial(size) ** mult * factorial(mult)
    quot, rem = divmod(num, den)
    assert rem == 0
    return quot


def class_size(mu: Partition) -> int:
    """Number of permutations of S_n with cycle type mu (n = mu.n >= 1)."""
    if mu.n < 1:
        raise ValueError("cycle type must be a partition of n >= 1")
    z = 1
    for size, mult in Counter(mu.parts).items():
        z *= size**mult * factorial(mult)
    quot, rem = divmod(factorial(mu.n), z)
    assert rem == 0
    return quot


@lru_cache(maxsize=None)
def _can_group(parts: tuple[int, ...], room: tuple[int, ...]) -> bool:
    # parts and room are sorted descending; place the largest part into each
    # distinct remainder that can hold it.
    if not parts:
        return all(r == 0 for r in room)
    head, rest = parts[0], parts[1:]
    tried = set()
    for i, r in enumerate(room):
        if r >= head and r not in tried:
            tried.add(r)
            reduced = tuple(sorted(room[:i] + (r - head,) + room[i + 1:], reverse=True))
            if _can_group(rest, reduced):
                return True
    return False


def refines(fine: Partition, coarse: Partition) -> bool:
    """True when the parts of ``fine`` can be grouped to sum to the parts of ``coarse``.

    This is the cycle-type criterion for membership (up to conjugacy) in the
    Young subgroup indexed by ``coarse``: an element whose cycle lengths are
    ``fine`` fits inside S_coarse exactly when such a grouping exists.  The
    search is an exhaustive multiset grouping, exponential in the worst case
    but instant at the scales used here.
    """
    if fine.n != coarse.n:
        raise ValueError(f"partition sizes differ: {fine.n} != {coarse.n}")
    return _can_group(fine.parts, coarse.parts)


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: partial sums of lam are >= those of mu (same n)."""
    if lam.n != mu.n:
        raise ValueError(f"partition sizes differ: {lam.n} != {mu.n}")
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam.parts[i] if i < len(lam) else 0
        acc_m += mu.parts[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True
