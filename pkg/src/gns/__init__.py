"""Generalized numerical semigroups in N^d.

Submonoids of N^d with finite complement: gap-set invariants
(pseudo-Frobenius elements, maximal gaps, type), symmetry classification,
parametric families with verified witness formulas, and genus-indexed
enumeration via the semigroup tree.
"""

from . import errors
from .core import (
    Gns,
    embedding_dimension,
    from_gaps,
    from_generators,
    membership,
    minimal_generators,
    permute_gns,
    trivial_gns,
    validate_gapset,
)
from .enumeration import (
    Budget,
    CountRow,
    EnumerationQuery,
    canonical_form,
    children,
    conjecture_scan,
    count_table,
    edim_bound_audit,
    enumerate_by_genus,
)
from .families import (
    AxisPairExtraFamily,
    AxisPairFamily,
    AxisTripleFamily,
    CrossFamily,
    WitnessSet,
    build_family,
    check_symmetric_iff_unique_max_gap,
    classify_axis_pair_extra,
    classify_axis_triple,
    predicted_gaps_axis_pair_extra,
    predicted_gaps_axis_triple,
    verify_axis_pair_family,
    witnesses_axis_pair_extra,
    witnesses_axis_triple,
    witnesses_cross,
)
from .invariants import (
    InvariantReport,
    frobenius_allowable,
    is_almost_symmetric,
    is_pseudo_symmetric,
    is_symmetric_by_criterion,
    is_symmetric_by_type,
    pseudo_frobenius,
    report,
    semigroup_type,
)
from .lattice import graded_cmp, graded_key, leq, permute_point
from .numsgp import (
    NumericalSg,
    gns_to_ns,
    ns_from_generators,
    ns_to_gns,
    pair_genus_check,
    three_gen_symmetry,
    three_gen_type_bound,
)

__version__ = "0.1.0"
