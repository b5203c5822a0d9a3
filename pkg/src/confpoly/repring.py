"""Virtual-representation-valued polynomials for S_n and the quotient solver.

An equivariant value assigns a BivarPoly coefficient to each irreducible of
S_n (absent = zero).  The tensor product multiplies the associated class
functions pointwise and decomposes the result back into irreducibles, which
is the same thing as the Kronecker-coefficient double sum but does only one
polynomial multiplication per conjugacy class.
"""

from __future__ import annotations

from math import factorial
from types import MappingProxyType
from typing import Mapping

from .characters import character_table, fixed_dims
from .partitions import Partition, partitions_of
from .poly import BivarPoly, div_exact


class EquivariantEPoly:
    """Map from partitions of n to BivarPoly, in canonical zero-free form."""

    __slots__ = ("_n", "_coeffs")

    def __init__(self, n: int, coeffs: Mapping[Partition, BivarPoly]):
        if n < 1:
            raise ValueError("n must be positive")
        clean: dict[Partition, BivarPoly] = {}
        for lam, poly in coeffs.items():
            if not isinstance(lam, Partition) or lam.n != n:
                raise ValueError(f"key {lam!r} is not a partition of {n}")
            if not isinstance(poly, BivarPoly):
                raise TypeError(f"coefficient of {lam} is not a BivarPoly")
            if poly:
                clean[lam] = poly
        self._n = n
        self._coeffs = clean

    @property
    def n(self) -> int:
        return self._n

    @property
    def coeffs(self) -> Mapping[Partition, BivarPoly]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, lam: Partition) -> BivarPoly:
        return self._coeffs.get(lam, BivarPoly.zero())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EquivariantEPoly):
            return self._n == other._n and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{lam}: {poly}" for lam, poly in self.items())
        return f"EquivariantEPoly(n={self._n}, {{{body}}})"

    def items(self) -> list[tuple[Partition, BivarPoly]]:
        """Coefficients in canonical partition order (zero entries omitted)."""
        return [
            (lam, self._coeffs[lam])
            for lam in partitions_of(self._n)
            if lam in self._coeffs
        ]

    def to_json_dict(self) -> dict:
        """JSON form: partition strings mapped to polynomial strings, plus n."""
        out: dict = {"n": self._n}
        for lam, poly in self.items():
            out[str(lam)] = str(poly)
        return out

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "EquivariantEPoly":
        n = data["n"]
        coeffs = {
            Partition.parse(key): BivarPoly.parse(value)
            for key, value in data.items()
            if key != "n"
        }
        return cls(n, coeffs)


def tensor(a: EquivariantEPoly, b: EquivariantEPoly, max_n: int | None = None) -> EquivariantEPoly:
    """Internal tensor product; coefficients combine through Kronecker multiplicities."""
    if a.n != b.n:
        raise ValueError(f"ranks differ: {a.n} != {b.n}")
    table = character_table(a.n, max_n)
    classes = range(len(table.order))

    def class_function(x: EquivariantEPoly) -> list[BivarPoly]:
        vals = []
        for j in classes:
            acc = BivarPoly.zero()
            for lam, poly in x.coeffs.items():
                chi = table.values[table.index[lam]][j]
                if chi:
                    acc = acc + poly * chi
            vals.append(acc)
        return vals

    fa = class_function(a)
    fb = class_function(b)
    product = [fa[j] * fb[j] for j in classes]
    n_fact = factorial(a.n)
    coeffs = {}
    for i, nu in enumerate(table.order):
        acc = BivarPoly.zero()
        for j in classes:
            w = table.class_sizes[j] * table.values[i][j]
            if w and product[j]:
                acc = acc + product[j] * w
        coeffs[nu] = div_exact(acc, n_fact)
    return EquivariantEPoly(a.n, coeffs)


def dim_pairing(a: EquivariantEPoly, max_n: int | None = None) -> BivarPoly:
    """Pair each coefficient with the dimension of its irrep; recovers the plain value."""
    table = character_table(a.n, max_n)
    acc = BivarPoly.zero()
    for lam, poly in a.coeffs.items():
        acc = acc + poly * table.dim(lam)
    return acc


def trivial_coefficient(a: EquivariantEPoly) -> BivarPoly:
    """Coefficient of the trivial irrep (n); the value of the full quotient."""
    return a[Partition((a.n,))]


def subgroup_quotient(a: EquivariantEPoly, mu: Partition, max_n: int | None = None) -> BivarPoly:
    """Value of the quotient by the Young subgroup S_mu: sum of a[lam] * fixed dims."""
    if mu.n != a.n:
        raise ValueError(f"mu must be a partition of {a.n}")
    kostka = fixed_dims(a.n, max_n)
    acc = BivarPoly.zero()
    for lam, poly in a.coeffs.items():
        d = kostka.dim(mu, lam)
        if d:
            acc = acc + poly * d
    return acc


def solve_plus_minus(
    n: int, rhs: Mapping[Partition, BivarPoly], max_n: int | None = None
) -> EquivariantEPoly:
    """Recover the equivariant value whose Young-subgroup quotients are ``rhs``.

    ``rhs`` must contain one entry per partition of n.  The fixed-space matrix
    is lower unitriangular in the canonical order, so plain forward
    substitution solves the system exactly over the integers; no fractions
    ever appear.
    """
    kostka = fixed_dims(n, max_n)
    order = kostka.order
    missing = [str(mu) for mu in order if mu not in rhs]
    if missing:
        raise ValueError(f"missing right-hand sides for: {', '.join(missing)}")
    solved: list[BivarPoly] = []
    for i, mu in enumerate(order):
        acc = rhs[mu]
        for j in range(i):
            k = kostka.dims[i][j]
            if k and solved[j]:
                acc = acc - solved[j] * k
        solved.append(acc)  # diagonal entry is 1
    return EquivariantEPoly(n, dict(zip(order, solved)))
