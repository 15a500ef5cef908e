"""Equivariant zero-set stratification toolkit.

Finite group actions, isotropy lattices with fixed-space indices, homogeneous
equivariant polynomial bases, a three-case decision pipeline for the structure
of equivariant zero sets, and a numeric zero-branch probe.
"""

from .analysis import AnalysisReport, AnalyzeOptions, analyze
from .equivariants import (EquivariantBasis, PolyMap, equivariant_basis,
                           equivariant_dimension, invariant_basis,
                           lowest_degree, module_generator_dimension,
                           restrict_to_fix)
from .group import GroupTable, Subgroup, enumerate_subgroups, generate_group
from .isotropy import IsotropyLattice, build_lattice, isotropy_subgroups
from .probe import ProbeOptions, find_zero_branches, verify_predictions
from .problems import builtin_names, load_builtin
from .representation import (Representation, character, char_inner,
                             fix_basis, fix_dimension, isotypic_decompose)
from .specfile import Problem, load_spec, parse_spec

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "AnalyzeOptions", "analyze",
    "EquivariantBasis", "PolyMap", "equivariant_basis",
    "equivariant_dimension", "invariant_basis", "lowest_degree",
    "module_generator_dimension", "restrict_to_fix",
    "GroupTable", "Subgroup", "enumerate_subgroups", "generate_group",
    "IsotropyLattice", "build_lattice", "isotropy_subgroups",
    "ProbeOptions", "find_zero_branches", "verify_predictions",
    "builtin_names", "load_builtin",
    "Representation", "character", "char_inner", "fix_basis",
    "fix_dimension", "isotypic_decompose",
    "Problem", "load_spec", "parse_spec",
    "__version__",
]
