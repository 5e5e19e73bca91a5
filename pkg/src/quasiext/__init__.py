"""Exact character theory of character triples: quasi-extensions, cohomology
obstructions and defect zero bijections for small permutation groups."""

from .chartab import ClassFunction, CharacterTable, character_table, induce, inflate, inner_product, restrict
from .cocycle import (
    CentralExtensionGroup,
    Cocycle,
    central_extension,
    class_order,
    factor_set,
    finite_order_representative,
    intertwiner,
    locate_tau,
    pi_project,
    quasi_ext_cocycle,
)
from .cyclotomic import Cyclotomic, E, is_algebraic_integer
from .groups import builtin, parse_group
from .perm import FiniteGroup, Permutation, PrimeSet, center, normal_subgroups, quotient, sylow_subgroup
from .repbuild import MatrixRep, irreducible_rep
from .triples import (
    CharacterTriple,
    QuasiExtension,
    bijection_dz,
    canonical_extension,
    compare_quasi_exts,
    count_check,
    dz_set,
    extendibility_prime_set,
    extensions,
    make_triple,
    psi_map,
    quasi_ext_canonical,
    quasi_ext_search,
    rdz_set,
    verify_quasi_ext,
)

__all__ = [
    "CentralExtensionGroup",
    "CharacterTable",
    "CharacterTriple",
    "ClassFunction",
    "Cocycle",
    "Cyclotomic",
    "E",
    "FiniteGroup",
    "MatrixRep",
    "Permutation",
    "PrimeSet",
    "QuasiExtension",
    "bijection_dz",
    "builtin",
    "canonical_extension",
    "center",
    "central_extension",
    "character_table",
    "class_order",
    "compare_quasi_exts",
    "count_check",
    "dz_set",
    "extendibility_prime_set",
    "extensions",
    "factor_set",
    "finite_order_representative",
    "induce",
    "inflate",
    "inner_product",
    "intertwiner",
    "irreducible_rep",
    "is_algebraic_integer",
    "locate_tau",
    "make_triple",
    "normal_subgroups",
    "parse_group",
    "pi_project",
    "psi_map",
    "quasi_ext_canonical",
    "quasi_ext_cocycle",
    "quasi_ext_search",
    "quotient",
    "rdz_set",
    "restrict",
    "sylow_subgroup",
    "verify_quasi_ext",
]

__version__ = "0.1.0"
