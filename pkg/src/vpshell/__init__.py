"""Vector partition posets: construction, EL-labeling, shelling, sphere counts.

The central object is the poset of partitions of {1..n} carrying s extra
labelings, ordered by simultaneous refinement.  This package builds the
poset, labels its cover relations, verifies that the labeling orders every
interval the way a lexicographic shelling requires, and counts the spheres
in the resulting wedge by four independent methods that must agree.
"""
from .complexes import (
    ShellingReport,
    SimplicialComplex,
    betti,
    order_complex,
    reduced_betti_numbers,
    reduced_euler_characteristic,
    simplicial_complex,
    verify_shelling,
)
from .errors import (
    BottomHasNoAtom,
    CycleDetected,
    DimensionMismatch,
    EqualWords,
    IncompatibleData,
    InvalidIndex,
    InvalidPartition,
    MalformedWord,
    NotACover,
    NotBounded,
    NotComparable,
    NotDecreasing,
    NotGraded,
    NotSaturated,
    OracleMismatch,
    ResourceLimit,
    SizeMismatch,
    VpshellError,
)
from .labeling import (
    ELReport,
    SABOTAGES,
    chain_audit_csv,
    chain_label,
    cover_label,
    edge_label_map,
    first_word_difference,
    is_increasing,
    is_weakly_decreasing,
    lex_shelling_order,
    merge_max_label,
    sabotaged_label_map,
    sabotaged_shelling_order,
    sorted_labeled_chains,
    verify_el,
    verify_label_structure,
)
from .poset import (
    Poset,
    build_poset,
    maximal_chains,
    mobius,
    poset_from_json,
    poset_to_dot,
    poset_to_json,
)
from .spherecount import (
    CountTable,
    Decomposition,
    count_by_recursion,
    count_table,
    count_total,
    decompose_chain,
    decreasing_chains,
    nonambiguous_tree_count,
    recompose,
    sphere_count_certificate,
    top_label_index_counts,
)
from .vecpart import (
    VectorPartition,
    atom_lex_rank,
    atom_word,
    bottom_element,
    canonicalize,
    check_atom_word,
    element_count,
    element_from_json,
    element_to_json,
    enumerate_elements,
    format_element,
    is_cover,
    is_leq,
    maximal_chain_count,
    merge_blocks,
    parse_element,
    perm_lex_rank,
    set_partition_lattice,
    set_partitions,
    top_element,
    upper_covers,
    vector_partition_poset,
    word_to_atom,
)

__version__ = "0.1.0"

__all__ = [
    "BottomHasNoAtom",
    "CountTable",
    "CycleDetected",
    "Decomposition",
    "DimensionMismatch",
    "ELReport",
    "EqualWords",
    "IncompatibleData",
    "InvalidIndex",
    "InvalidPartition",
    "MalformedWord",
    "NotACover",
    "NotBounded",
    "NotComparable",
    "NotDecreasing",
    "NotGraded",
    "NotSaturated",
    "OracleMismatch",
    "Poset",
    "ResourceLimit",
    "SABOTAGES",
    "ShellingReport",
    "SimplicialComplex",
    "SizeMismatch",
    "VectorPartition",
    "VpshellError",
    "atom_lex_rank",
    "atom_word",
    "betti",
    "bottom_element",
    "build_poset",
    "canonicalize",
    "chain_audit_csv",
    "chain_label",
    "check_atom_word",
    "count_by_recursion",
    "count_table",
    "count_total",
    "cover_label",
    "decompose_chain",
    "decreasing_chains",
    "edge_label_map",
    "element_count",
    "element_from_json",
    "element_to_json",
    "enumerate_elements",
    "first_word_difference",
    "format_element",
    "is_cover",
    "is_increasing",
    "is_leq",
    "is_weakly_decreasing",
    "lex_shelling_order",
    "maximal_chain_count",
    "maximal_chains",
    "merge_blocks",
    "merge_max_label",
    "mobius",
    "nonambiguous_tree_count",
    "order_complex",
    "parse_element",
    "perm_lex_rank",
    "poset_from_json",
    "poset_to_dot",
    "poset_to_json",
    "recompose",
    "reduced_betti_numbers",
    "reduced_euler_characteristic",
    "sabotaged_label_map",
    "sabotaged_shelling_order",
    "set_partition_lattice",
    "set_partitions",
    "simplicial_complex",
    "sorted_labeled_chains",
    "sphere_count_certificate",
    "top_element",
    "top_label_index_counts",
    "upper_covers",
    "vector_partition_poset",
    "verify_el",
    "verify_label_structure",
    "verify_shelling",
    "word_to_atom",
]
