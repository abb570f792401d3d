"""Executable binary-relation combinators, lexicographic and graded monomial
orders, multi-index enumeration, weighted matrix orders, and sparse
polynomial term ordering."""

from .relations import (
    Carrier,
    Relation,
    DIVIDES,
    GE,
    GT,
    LE,
    LT,
    carrier_range,
    complementary,
    converse,
    intersection,
    is_antisymmetric,
    is_asymmetric,
    is_connected,
    is_irreflexive,
    is_negatively_transitive,
    is_reflexive,
    is_strict_total_order,
    is_strict_weak_order,
    is_strongly_connected,
    is_total_order,
    is_transitive,
    is_trichotomous,
    or_eq,
    union,
)
from .families import (
    EmptyFamilyError,
    LengthMismatchError,
    VectorRelation,
    colex,
    converse_rel,
    head,
    init,
    last,
    lex,
    or_eq_rel,
    reverse_family,
    reverse_rel,
    revlex,
    symlex,
    tail,
)
from .graded import (
    Monoid,
    NAT_ADD,
    family_add,
    family_sum,
    graded,
    grcolex,
    grcolex_rec,
    grevlex,
    grevlex_rec,
    grlex,
    grlex_rec,
    grsymlex,
    grsymlex_full_rec,
    grsymlex_rec,
    is_monomial_nonstrict_order,
    is_monomial_order,
    is_plus_compat_r,
    is_plus_reg_r,
    zero_least_on_nonzero,
)
from .multi_index import (
    MultiIndexList,
    degree_slice,
    iter_multi_index_set,
    iter_slice,
    multi_index_set,
)
from .weighted import (
    WeightMatrix,
    find_incomparable,
    format_matrix,
    load_matrix,
    matrix_for,
    parse_matrix,
    prepend_ones_column,
    weighted_lt,
    weighted_relation,
)
from .poly import (
    PolyParseError,
    SparsePoly,
    Term,
    format_poly,
    format_term,
    leading_term,
    monomial_mul,
    parse_poly,
    sort_terms,
)

__all__ = [name for name in dir() if not name.startswith("_")]
