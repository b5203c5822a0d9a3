"""Configuration-space values: ordered and unordered spaces, symmetric powers,
Young-subgroup quotients, and the equivariant computation for orbit
configurations.

The input is never a variety, only its value: the caller supplies the
polynomial standing in for the space (and for the group in the orbit case)
and is responsible for the geometric hypotheses behind the formulas (a free
action of a connected reductive group, semistable locus equal to the whole
space).  Removing m points from a space subtracts m from its value, by
additivity.

The recursions re-enter the same subproblems heavily, so they are memoised on
(polynomial, n); polynomial values are immutable and hashable, and the caches
tolerate concurrent insertion of identical values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, p_length, partitions_of, set_partition_count
from .poly import BivarPoly, parse_poly, pexp_sym
from .repring import EquivariantEPoly, solve_plus_minus, tensor, trivial_coefficient


@dataclass(frozen=True)
class VarietyClass:
    """A space known only through its polynomial value, plus a display label."""

    epoly: BivarPoly
    label: str = ""

    @classmethod
    def from_string(cls, text: str, label: str = "") -> "VarietyClass":
        return cls(parse_poly(text), label or text)

    def shifted(self, m: int) -> "VarietyClass":
        """The same space with m points removed (value drops by m)."""
        return VarietyClass(self.epoly - m, self.label)


@dataclass(frozen=True)
class OrbitSetup:
    """Inputs for an orbit configuration: the quotient's value and the group's value."""

    quotient: VarietyClass
    group: VarietyClass


def ordered_config(x: VarietyClass, n: int) -> BivarPoly:
    """Value of the space of n ordered pairwise-distinct points: the falling
    factorial prod_{i=0}^{n-1} (e - i)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = BivarPoly.one()
    for i in range(n):
        acc = acc * (x.epoly - i)
    return acc


@lru_cache(maxsize=None)
def _ordered_rec(p: BivarPoly, n: int) -> BivarPoly:
    if n == 0:
        return BivarPoly.one()
    acc = p**n
    for lam in partitions_of(n):
        if len(lam) == n:  # the all-ones pattern is the configuration space itself
            continue
        acc = acc - set_partition_count(lam) * _ordered_rec(p, len(lam))
    return acc


def ordered_config_recursive(x: VarietyClass, n: int) -> BivarPoly:
    """Same value as ordered_config, through the diagonal-removal recursion:
    e^n minus one term per coincidence pattern, each counted by its number of
    set partitions."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _ordered_rec(x.epoly, n)


@lru_cache(maxsize=None)
def _sym(p: BivarPoly, n: int) -> BivarPoly:
    return pexp_sym(p, n)[n]


def sym_product(x: VarietyClass, n: int) -> BivarPoly:
    """Value of the n-th symmetric power, read off the plethystic exponential."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _sym(x.epoly, n)


@lru_cache(maxsize=None)
def _unordered(p: BivarPoly, n: int) -> BivarPoly:
    if n <= 1:
        return _sym(p, n)
    acc = _sym(p, n)
    for l in range(1, n):
        count = p_length(n, l)
        if count:
            acc = acc - count * _unordered(p, l)
    return acc


def unordered_config(x: VarietyClass, n: int) -> BivarPoly:
    """Value of the unordered configuration space: the symmetric power minus
    p(n,l) copies of each smaller unordered value, by partition length."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _unordered(x.epoly, n)


def power_quotient(x: VarietyClass, lam: Partition) -> BivarPoly:
    """Value of the cartesian power quotiented by the Young subgroup of lam:
    the product of the symmetric powers of the parts."""
    acc = BivarPoly.one()
    for part in lam:
        acc = acc * _sym(x.epoly, part)
    return acc


def config_quotient(x: VarietyClass, lam: Partition) -> BivarPoly:
    """Value of the ordered configuration space quotiented by the Young
    subgroup of lam.

    Part i contributes the unordered value for a space with sum(lam[:i])
    points removed; the parts are consumed in the given weakly decreasing
    order, and that order matters for the offsets.
    """
    acc = BivarPoly.one()
    removed = 0
    for part in lam:
        acc = acc * _unordered(x.epoly - removed, part)
        removed += part
    return acc


def equivariant_config(x: VarietyClass, n: int, max_n: int | None = None) -> EquivariantEPoly:
    """Full equivariant value of the ordered configuration space, solved from
    its Young-subgroup quotients."""
    if n < 1:
        raise ValueError("n must be positive")
    rhs = {mu: config_quotient(x, mu) for mu in partitions_of(n)}
    return solve_plus_minus(n, rhs, max_n)


def equivariant_power(g: VarietyClass, n: int, max_n: int | None = None) -> EquivariantEPoly:
    """Full equivariant value of the n-th cartesian power, solved from the
    symmetric-power products."""
    if n < 1:
        raise ValueError("n must be positive")
    rhs = {mu: power_quotient(g, mu) for mu in partitions_of(n)}
    return solve_plus_minus(n, rhs, max_n)


def orbit_equivariant(setup: OrbitSetup, n: int, max_n: int | None = None) -> EquivariantEPoly:
    """Equivariant value of the configuration space of orbits: the tensor
    product of the quotient's configuration value with the group's power value."""
    return tensor(
        equivariant_config(setup.quotient, n, max_n),
        equivariant_power(setup.group, n, max_n),
        max_n,
    )


def orbit_lambda_quotient(setup: OrbitSetup, lam: Partition, max_n: int | None = None) -> BivarPoly:
    """Value of the orbit configuration space quotiented by the Young subgroup
    of lam.

    Factor i is the full-quotient (trivial-isotypic) value of the orbit
    computation for part lam[i], on the quotient space with sum(lam[:i])
    points removed; removing a point of the quotient removes a whole orbit
    upstairs, so the group factor is untouched.
    """
    acc = BivarPoly.one()
    removed = 0
    for part in lam:
        local = OrbitSetup(setup.quotient.shifted(removed), setup.group)
        acc = acc * trivial_coefficient(orbit_equivariant(local, part, max_n))
        removed += part
    return acc
