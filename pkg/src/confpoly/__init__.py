"""Exact computation of E-polynomial-style values for configuration spaces.

The package works with integer polynomials in two variables (balanced ones
are written in q = uv), integer partitions, and the character theory of S_n,
and combines them into:

  * ordered / unordered configuration-space values and symmetric powers,
  * quotients by Young subgroups and full equivariant values,
  * the equivariant value of configuration spaces of orbits,
  * an independent finite-field point-counting oracle.

All arithmetic is exact; nothing is ever rounded.
"""

from .poly import (
    BivarPoly,
    PolyParseError,
    TruncatedSeries,
    div_exact,
    format_poly,
    parse_poly,
    pexp_series,
    pexp_sym,
)
from .partitions import (
    Partition,
    PartitionParseError,
    class_size,
    dominates,
    p_length,
    partitions_of,
    refines,
    set_partition_count,
)
from .characters import (
    DEFAULT_MAX_N,
    CharacterTable,
    FixedDimMatrix,
    character_table,
    fixed_dims,
    kronecker,
    mn_character,
)
from .repring import (
    EquivariantEPoly,
    dim_pairing,
    solve_plus_minus,
    subgroup_quotient,
    tensor,
    trivial_coefficient,
)
from .confspace import (
    OrbitSetup,
    VarietyClass,
    config_quotient,
    equivariant_config,
    equivariant_power,
    orbit_equivariant,
    orbit_lambda_quotient,
    ordered_config,
    ordered_config_recursive,
    power_quotient,
    sym_product,
    unordered_config,
)
from .oracle import (
    ClosedPointCounts,
    PointCountProfile,
    closed_points,
    count_ordered_config,
    count_sym,
    count_unordered_config,
    enumerate_pgl2,
    profile_from_epoly,
)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "PolyParseError",
    "TruncatedSeries",
    "div_exact",
    "format_poly",
    "parse_poly",
    "pexp_series",
    "pexp_sym",
    "Partition",
    "PartitionParseError",
    "class_size",
    "dominates",
    "p_length",
    "partitions_of",
    "refines",
    "set_partition_count",
    "DEFAULT_MAX_N",
    "CharacterTable",
    "FixedDimMatrix",
    "character_table",
    "fixed_dims",
    "kronecker",
    "mn_character",
    "EquivariantEPoly",
    "dim_pairing",
    "solve_plus_minus",
    "subgroup_quotient",
    "tensor",
    "trivial_coefficient",
    "OrbitSetup",
    "VarietyClass",
    "config_quotient",
    "equivariant_config",
    "equivariant_power",
    "orbit_equivariant",
    "orbit_lambda_quotient",
    "ordered_config",
    "ordered_config_recursive",
    "power_quotient",
    "sym_product",
    "unordered_config",
    "ClosedPointCounts",
    "PointCountProfile",
    "closed_points",
    "count_ordered_config",
    "count_sym",
    "count_unordered_config",
    "enumerate_pgl2",
    "profile_from_epoly",
    "__version__",
]
