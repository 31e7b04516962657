"""Exact tree-clique width toolkit for small graphs.

tcl(G) is the minimum, over tree decompositions of G, of the largest
number of cliques needed to cover a bag.  The package provides clique
cover subset tables, two exponential-time exact solvers, linear-time
solvers for cographs and permutation graphs, inclusion-exclusion
counting with constructive coloring, a decomposition verifier and
sanitizer, and a brute-force oracle for cross-validation.
"""

from .cover import (
    CapacityError,
    CoverTable,
    fast_table,
    ie_chromatic_with_construction,
    ie_count_covers,
    ie_count_partitions,
    lawler_table,
    vcc,
)
from .decomposition import (
    AugmentedTreeDecomposition,
    sanitize,
    validate,
    width,
)
from .graph import (
    Graph,
    SeparatorInfo,
    enumerate_maximal_independent_sets,
    enumerate_minimal_separators,
    is_pmc,
)
from .oracle import BudgetExceededError, OracleBudget, brute_chromatic, brute_pmcs, tcl_oracle
from .solver_pmc import PmcCatalog, build_catalog, tcl_via_pmc

__all__ = [
    "AugmentedTreeDecomposition",
    "BudgetExceededError",
    "CapacityError",
    "CoverTable",
    "Graph",
    "OracleBudget",
    "PmcCatalog",
    "SeparatorInfo",
    "brute_chromatic",
    "brute_pmcs",
    "build_catalog",
    "enumerate_maximal_independent_sets",
    "enumerate_minimal_separators",
    "fast_table",
    "ie_chromatic_with_construction",
    "ie_count_covers",
    "ie_count_partitions",
    "is_pmc",
    "lawler_table",
    "sanitize",
    "tcl_oracle",
    "tcl_via_pmc",
    "validate",
    "vcc",
    "width",
]

__version__ = "0.1.0"
