"""Search engine and verification suite for partitions of Z_N \\ {0}
into m symmetric, sum-free cyclic bases whose pairwise sumsets cover
everything: the arithmetic skeleton of an m-color triangle-free
complete graph, equivalently a cyclic Ramsey algebra on N points.
"""

from .catalog import (
    CatalogRow,
    EdgeColoring,
    RowVerification,
    export_coloring,
    load_catalog,
    verify_row,
    verify_rows,
)
from .checker import (
    check_candidate,
    check_cyclic_basis,
    check_sum_free_fast,
    check_symmetric,
    check_triangle_fast,
    full_fast_check,
)
from .classcount import class_index_table, counting_report, pair_sum_class_matrix
from .numbertheory import (
    DEFAULT_SIEVE_BOUND,
    FactorSet,
    PrimeSieve,
    is_generator,
    mod_pow,
    prime_factors,
    sieve_primes,
    smallest_generator,
)
from .oracle import (
    LabeledPartition,
    Relation,
    ScanRecord,
    atom_decomposition,
    exhaustive_small_scan,
    naive_check,
    partition_atoms,
    relation_algebra_check,
)
from .partition import CyclotomicPartition, build_class_zero, build_partition
from .report import CheckReport, Witness
from .residues import ResidueSet, scale_set, sumset
from .search import (
    CandidateFailure,
    RamseyBoundTable,
    SearchRecord,
    SweepResult,
    candidate_primes,
    ramsey_recursive_bound,
    search_all,
    search_min_modulus,
    sweep_nonexistence,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateFailure",
    "CatalogRow",
    "CheckReport",
    "CyclotomicPartition",
    "DEFAULT_SIEVE_BOUND",
    "EdgeColoring",
    "FactorSet",
    "LabeledPartition",
    "PrimeSieve",
    "RamseyBoundTable",
    "Relation",
    "ResidueSet",
    "RowVerification",
    "ScanRecord",
    "SearchRecord",
    "SweepResult",
    "Witness",
    "atom_decomposition",
    "candidate_primes",
    "check_candidate",
    "check_cyclic_basis",
    "check_sum_free_fast",
    "check_symmetric",
    "check_triangle_fast",
    "class_index_table",
    "counting_report",
    "exhaustive_small_scan",
    "export_coloring",
    "full_fast_check",
    "is_generator",
    "load_catalog",
    "mod_pow",
    "naive_check",
    "pair_sum_class_matrix",
    "partition_atoms",
    "prime_factors",
    "ramsey_recursive_bound",
    "relation_algebra_check",
    "scale_set",
    "search_all",
    "search_min_modulus",
    "sieve_primes",
    "smallest_generator",
    "sumset",
    "sweep_nonexistence",
    "verify_row",
    "verify_rows",
]
