"""Matrix-based computation of extensions for finite argumentation frameworks.

The library represents an argumentation framework as a Boolean attack
matrix, enumerates its conflict-free sets level by level from per-argument
compatibility sets, and decides the standard semantics (stable,
admissible, complete, preferred, grounded, ideal, semi-stable, eager)
through sub-block and norm-form criteria on that matrix. A deliberately
naive brute-force reference implementation is included for differential
verification, plus TGF/APX file support, a reproducible random generator
and a command-line front end (``afmat solve | gen | verify``).
"""

from .conflictfree import (
    CfFamily,
    basic_sets,
    enumerate_conflict_free,
    is_conflict_free,
    iter_conflict_free,
)
from .core import (
    ArgSet,
    Attack,
    AttackMatrix,
    Framework,
    Grid,
    InternalInvariantError,
    MalformedPermutationError,
    NormForm,
    PreconditionError,
    SubBlocks,
    argset,
    build_matrix,
    check_permutation,
    dual_interchange,
    extract_subblocks,
    natural_matrix,
    relabel,
    to_norm_form,
)
from .formats import NameMap, ParseError, format_apx, format_tgf, parse_apx, parse_tgf
from .generator import GeneratorConfig, generate
from .oracle import (
    ORACLE_BOUND,
    OracleBoundError,
    oracle_defends,
    oracle_family,
    oracle_grounded_fixpoint,
)
from .semantics import (
    CORE_SEMANTICS,
    DERIVED_SEMANTICS,
    SINGLETON_SEMANTICS,
    ExtensionFamily,
    Semantics,
    admissible_on_norm_form,
    attacked_by_all,
    attacked_by_some,
    complete_on_norm_form,
    compute_derived,
    compute_family,
    credulously_accepted,
    extensions,
    extensions_attacking,
    extensions_containing,
    is_admissible,
    is_complete,
    is_stable,
    query,
    range_of,
    skeptically_accepted,
    some_extension,
    stable_on_norm_form,
)

__version__ = "0.1.0"

__all__ = [
    "ArgSet",
    "Attack",
    "AttackMatrix",
    "CfFamily",
    "CORE_SEMANTICS",
    "DERIVED_SEMANTICS",
    "ExtensionFamily",
    "Framework",
    "GeneratorConfig",
    "Grid",
    "InternalInvariantError",
    "MalformedPermutationError",
    "NameMap",
    "NormForm",
    "ORACLE_BOUND",
    "OracleBoundError",
    "ParseError",
    "PreconditionError",
    "Semantics",
    "SINGLETON_SEMANTICS",
    "SubBlocks",
    "admissible_on_norm_form",
    "argset",
    "attacked_by_all",
    "attacked_by_some",
    "basic_sets",
    "build_matrix",
    "check_permutation",
    "complete_on_norm_form",
    "compute_derived",
    "compute_family",
    "credulously_accepted",
    "dual_interchange",
    "enumerate_conflict_free",
    "extensions",
    "extensions_attacking",
    "extensions_containing",
    "extract_subblocks",
    "format_apx",
    "format_tgf",
    "generate",
    "is_admissible",
    "is_complete",
    "is_conflict_free",
    "is_stable",
    "iter_conflict_free",
    "natural_matrix",
    "oracle_defends",
    "oracle_family",
    "oracle_grounded_fixpoint",
    "parse_apx",
    "parse_tgf",
    "query",
    "range_of",
    "relabel",
    "skeptically_accepted",
    "some_extension",
    "stable_on_norm_form",
    "to_norm_form",
]
