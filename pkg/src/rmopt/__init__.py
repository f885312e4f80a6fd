"""Check-set design and redundancy formulas for Reed-Muller evaluation codes.

The package builds the four check-monomial set families (standard prefix,
Feng-Rao improved, and their generic-error counterparts), evaluates the
closed-form redundancy of each, cross-verifies every formula against
exhaustive enumeration, and materializes the resulting codes as
parity-check matrices over GF(p^e).
"""

from .check_sets import (
    VARIANTS,
    CheckSet,
    check_set,
    exponents,
    feng_rao_set,
    generic_improved_set,
    generic_standard_set,
    has_product_split,
    max_feng_rao_index,
    max_nonproduct_index,
    standard_set,
)
from .codes import (
    CodeSummary,
    EvaluationMatrix,
    check_matrix,
    code_summary,
    evaluate_monomial,
    min_distance_bruteforce,
    null_space,
    rank_gf,
    rm_index_bound,
)
from .formulas import (
    ProductCounts,
    RedundancyReport,
    even_product_count,
    is_even_degree_product,
    is_odd_degree_product,
    odd_product_count,
    product_counts,
    r_feng_rao,
    r_generic_improved,
    r_generic_standard,
    r_standard,
    redundancy_report,
)
from .gf import GF, enumerate_points, max_cells
from .monomials import (
    binom,
    compare,
    degree_start,
    divisor_count,
    divisor_count_enumerated,
    index_to_monomial,
    iter_monomials,
    monomial_to_index,
)
from .verify import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CheckSet",
    "CodeSummary",
    "EvaluationMatrix",
    "GF",
    "ProductCounts",
    "RedundancyReport",
    "VARIANTS",
    "binom",
    "check_matrix",
    "check_set",
    "code_summary",
    "compare",
    "degree_start",
    "divisor_count",
    "divisor_count_enumerated",
    "enumerate_points",
    "evaluate_monomial",
    "even_product_count",
    "exponents",
    "feng_rao_set",
    "generic_improved_set",
    "generic_standard_set",
    "has_product_split",
    "index_to_monomial",
    "is_even_degree_product",
    "is_odd_degree_product",
    "iter_monomials",
    "max_cells",
    "max_feng_rao_index",
    "max_nonproduct_index",
    "min_distance_bruteforce",
    "monomial_to_index",
    "null_space",
    "odd_product_count",
    "product_counts",
    "r_feng_rao",
    "r_generic_improved",
    "r_generic_standard",
    "r_standard",
    "rank_gf",
    "redundancy_report",
    "rm_index_bound",
    "run_checks",
    "standard_set",
]
