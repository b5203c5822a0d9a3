"""Irreducible characters of S_n, fixed-space dimensions, and Kronecker coefficients.

Character values are computed by recursive border-strip removal.  A shape is
handled through its beta-set (first-column hook lengths): removing a strip of
size k means lowering one beta entry by k so that the result is again a set
of distinct nonnegative integers, and the sign is (-1)^h where h counts the
beta entries jumped over, i.e. the number of rows the strip spans minus one.

Tables are built once per n and cached; construction takes a lock so that
concurrent first calls are safe, and the finished tables are immutable.
"""

from __future__ import annotations

import itertools
import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Mapping

from .partitions import Partition, class_size, partitions_of

DEFAULT_MAX_N = 12

_TABLE_LOCK = threading.Lock()
_TABLES: dict[int, "CharacterTable"] = {}
_KOSTKA: dict[int, "FixedDimMatrix"] = {}
_KRONECKER: dict[tuple[tuple[int, ...], ...], int] = {}


def _check_bound(n: int, max_n: int | None) -> None:
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > bound:
        raise ValueError(f"n={n} exceeds the configured bound {bound}")


@lru_cache(maxsize=None)
def _strip_char(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not shape else 0
    k, rest = cycles[0], cycles[1:]
    l = len(shape)
    beta = tuple(shape[i] + (l - 1 - i) for i in range(l))
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_shape = tuple(new_beta[j] - (l - 1 - j) for j in range(l))
        while new_shape and new_shape[-1] == 0:
            new_shape = new_shape[:-1]
        sub = _strip_char(new_shape, rest)
        if sub:
            total += -sub if height % 2 else sub
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Value of the irreducible character of shape lam on the class of cycle type mu."""
    if lam.n != mu.n:
        raise ValueError(f"partition sizes differ: {lam.n} != {mu.n}")
    return _strip_char(lam.parts, tuple(sorted(mu.parts, reverse=True)))


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_n in the canonical partition order."""

    n: int
    order: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]  # values[i][j] = chi_{order[i]}(class order[j])
    class_sizes: tuple[int, ...]
    index: Mapping[Partition, int]

    def chi(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.index[lam]][self.index[mu]]

    def dim(self, lam: Partition) -> int:
        """Dimension of the irreducible of shape lam (value on the identity class)."""
        return self.values[self.index[lam]][len(self.order) - 1]


def character_table(n: int, max_n: int | None = None) -> CharacterTable:
    """The cached character table of S_n (1 <= n <= bound, default 12)."""
    _check_bound(n, max_n)
    with _TABLE_LOCK:
        table = _TABLES.get(n)
        if table is None:
            order = tuple(partitions_of(n))
            values = tuple(
                tuple(mn_character(lam, mu) for mu in order) for lam in order
            )
            sizes = tuple(class_size(mu) for mu in order)
            index = {p: i for i, p in enumerate(order)}
            table = CharacterTable(n, order, values, sizes, index)
            _TABLES[n] = table
    return table


@dataclass(frozen=True)
class FixedDimMatrix:
    """dims[i][j] = dimension of the S_mu-fixed subspace of the irrep lambda.

    Rows are indexed by mu = order[i], columns by lambda = order[j], both in
    the canonical order, which makes the matrix lower unitriangular.
    """

    n: int
    order: tuple[Partition, ...]
    dims: tuple[tuple[int, ...], ...]
    index: Mapping[Partition, int]

    def dim(self, mu: Partition, lam: Partition) -> int:
        return self.dims[self.index[mu]][self.index[lam]]


def _young_class_weights(mu: Partition) -> Counter:
    """Aggregate cycle types of S_mu: merged type -> number of group elements."""
    weights: Counter = Counter()
    factor_types = [partitions_of(k) for k in mu.parts]
    for combo in itertools.product(*factor_types):
        merged = Partition(sorted((p for nu in combo for p in nu.parts), reverse=True))
        weight = 1
        for nu in combo:
            weight *= class_size(nu)
        weights[merged] += weight
    return weights


def fixed_dims(n: int, max_n: int | None = None) -> FixedDimMatrix:
    """Fixed-space dimensions for every Young subgroup, averaged over cycle types.

    Each entry is (1/|S_mu|) * sum over elements of S_mu of the character,
    organised as a polynomial-size sum over tuples of cycle types of the
    factors rather than a factorial-size sum over group elements.  Divisions
    must come out exact; anything else raises.
    """
    _check_bound(n, max_n)
    with _TABLE_LOCK:
        cached = _KOSTKA.get(n)
    if cached is not None:
        return cached
    table = character_table(n, max_n)
    order = table.order
    rows = []
    for mu in order:
        weights = _young_class_weights(mu)
        group_order = 1
        for k in mu.parts:
            group_order *= factorial(k)
        row = []
        for lam in order:
            total = sum(w * table.chi(lam, typ) for typ, w in weights.items())
            quot, rem = divmod(total, group_order)
            if rem:
                raise ArithmeticError(
                    f"non-exact fixed-space average for mu={mu}, lambda={lam}"
                )
            row.append(quot)
        rows.append(tuple(row))
    matrix = FixedDimMatrix(n, order, tuple(rows), dict(table.index))
    with _TABLE_LOCK:
        _KOSTKA.setdefault(n, matrix)
    return matrix


def kronecker(lam: Partition, mu: Partition, nu: Partition, max_n: int | None = None) -> int:
    """Multiplicity of the irrep nu inside the tensor product of lam and mu."""
    if not (lam.n == mu.n == nu.n):
        raise ValueError("all three partitions must have the same size")
    key = tuple(sorted((lam.parts, mu.parts, nu.parts)))
    cached = _KRONECKER.get(key)
    if cached is not None:
        return cached
    table = character_table(lam.n, max_n)
    i, j, k = table.index[lam], table.index[mu], table.index[nu]
    total = sum(
        size * table.values[i][c] * table.values[j][c] * table.values[k][c]
        for c, size in enumerate(table.class_sizes)
    )
    quot, rem = divmod(total, factorial(lam.n))
    if rem:
        raise ArithmeticError(f"non-exact Kronecker sum for {lam}, {mu}, {nu}")
    _KRONECKER[key] = quot
    return quot
