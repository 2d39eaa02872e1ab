"""Neighborhood-preserving and approximate translations on graphs."""

from .graph import (
    Graph,
    INF,
    coord_to_index,
    index_to_coord,
    make_complete,
    make_grid,
    make_random_geometric,
    make_ring,
    make_torus,
)
from .mapping import (
    BOTTOM,
    Mapping,
    PropertyReport,
    apply_to_signal,
    bottom_map,
    check_ec,
    check_isometry,
    check_snp,
    check_wnp,
    compose,
    decompose,
    deformation,
    full_mapping,
    identity_map,
    inverse,
    is_translation,
    precedes,
    property_report,
)
from .enumeration import (
    EnumerationFilter,
    count_minimal_upper_bound,
    count_upper_bound,
    enumerate_translations,
    exists_translation_between,
    has_hamiltonian_cycle,
    has_perfect_matching,
    min_loss,
    minimal_translations,
    pseudo_minimal_translations,
)
from .euclid import (
    contaminate_torus,
    dirac,
    dirac_shift_loss,
    euclidean_on_grid,
    euclidean_on_torus,
    grid_slice,
    satisfies_large_grid_assumption,
)
from .relax import (
    ScoreBreakdown,
    ScoreParams,
    composition_score,
    evaluation_pair,
    pareto_front,
    score,
    snp_violations,
)
from .search import (
    SearchStats,
    TranslationTrace,
    best_composition,
    expand_support,
    localized_sets,
    minimize_s,
    parameter_sweep,
)

__version__ = "0.1.0"
