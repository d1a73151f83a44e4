"""Runs, maximal gapped repeats and subrepetitions in words.

The main entry points are `find_runs`, `find_maximal_gapped_repeats`,
`find_subrepetitions` and `factorize`; each has a brute-force oracle
(`oracle_*`) that computes the same answer from the definitions, plus
per-object validators in `core`.  The `cli` module exposes the same
searches as the `wordreps` command.
"""

from .cli import CensusReport, census, random_word, run_cli
from .core import (
    Factor,
    GappedRepeat,
    LogicFaultError,
    RepeatClass,
    Run,
    Subrepetition,
    as_bytes,
    exact_ratio,
    is_alpha_gapped,
    parse_ratio,
    validate_factorization,
    validate_gapped_repeat,
    validate_run,
    validate_subrepetition,
)
from .extensions import (
    lcp_across,
    lcp_with_suffixes,
    lcs_across,
    lcs_with_prefixes,
    z_array,
)
from .factorization import factorize
from .gapped import (
    StartLists,
    anchor_ladder,
    classify_repeat,
    find_maximal_gapped_repeats,
)
from .oracle import (
    minimal_period_naive,
    oracle_factorize,
    oracle_gapped,
    oracle_runs,
    oracle_subreps,
)
from .runs import find_runs, sum_exponents
from .subreps import (
    ElementKind,
    MonotoneQueue,
    ScanElement,
    build_scan_order,
    filter_stretchable,
    find_subrepetitions,
    period_is_span_minimal,
)

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "ElementKind",
    "Factor",
    "GappedRepeat",
    "LogicFaultError",
    "MonotoneQueue",
    "RepeatClass",
    "Run",
    "ScanElement",
    "StartLists",
    "Subrepetition",
    "anchor_ladder",
    "as_bytes",
    "build_scan_order",
    "census",
    "classify_repeat",
    "exact_ratio",
    "factorize",
    "filter_stretchable",
    "find_maximal_gapped_repeats",
    "find_runs",
    "find_subrepetitions",
    "is_alpha_gapped",
    "lcp_across",
    "lcp_with_suffixes",
    "lcs_across",
    "lcs_with_prefixes",
    "minimal_period_naive",
    "oracle_factorize",
    "oracle_gapped",
    "oracle_runs",
    "oracle_subreps",
    "parse_ratio",
    "period_is_span_minimal",
    "random_word",
    "run_cli",
    "sum_exponents",
    "validate_factorization",
    "validate_gapped_repeat",
    "validate_run",
    "validate_subrepetition",
    "z_array",
]
