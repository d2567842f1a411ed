"""Exact counting of Hopf-Galois structures on small Galois extensions.

The library enumerates regular subgroups of holomorphs to count the
structures of each type on a G-extension, independently certifies pairings
empty through the characteristic-subgroup-lattice obstruction, and carries
the index-2 and abelian p-group combinatorics needed to reproduce the
associated count tables.
"""

from .groups import (
    FiniteGroup,
    GroupMap,
    GroupError,
    ClosureBoundError,
    make_cyclic,
    make_dihedral,
    make_dicyclic,
    from_permutation_generators,
    direct_product,
    semidirect_product,
    symmetric_group,
    alternating_group,
    closure,
    is_isomorphic,
    automorphism_group,
    automorphism_generators,
    group_to_text,
    group_from_text,
)
from .subgroups import (
    Subgroup,
    LatticeSummary,
    all_subgroups,
    normal_subgroups,
    characteristic_subgroups,
    squares_subgroup,
    index_two_count,
    z2_u2,
    lattice_summary,
)
from .holomorph import (
    PermGroup,
    RegularSubgroupRecord,
    ConsistencyError,
    left_regular,
    holomorph,
    regular_subgroups_iso_to,
    count_R,
    hol_regular_census,
    direct_R,
    psi,
)
from .obstruction import (
    ObstructionReport,
    CensusTable,
    char_obstruction,
    empty_pairs_for_order,
    census,
)
from .partitions import (
    Partition,
    CanonicalTuple,
    partitions,
    conjugate,
    gaussian_binomial,
    alpha,
    canonical_tuples,
    canonical_tuple_counts,
    has_multiple_char_order,
    nc_np_table,
    format_ratio,
)
from . import catalog

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
