"""Schröder trees, well-weighted binary trees and the bijections between them.

The package counts, enumerates, maps and samples the tree families behind
the three-term recurrence for the little Schröder numbers::

    3(2n-1) s(n) = (n+1) s(n+1) + (n-2) s(n-1),   s(1) = s(2) = 1

and the Catalan recurrence ``2(2n-1) c(n) = (n+1) c(n+1)``.
"""

from .bijections import (
    FatherCase,
    ImageKind,
    Label,
    SigmaImage,
    check_phi_bijection,
    check_sigma_bijection,
    classify_father_case,
    phi,
    phi_inverse,
    sigma,
    sigma_inverse,
    sigma_prime,
)
from .counting import (
    CountTable,
    Recurrence,
    RecurrenceReport,
    catalan_closed_form,
    catalan_rec,
    pointed_counts,
    schroeder_numbers_dp,
    schroeder_numbers_rec,
    verify_recurrence,
)
from .enumeration import (
    TreeStream,
    enumerate_binary,
    enumerate_pointed,
    enumerate_schroeder,
    enumerate_well_weighted,
)
from .errors import *  # noqa: F401,F403
from .sampling import (
    SampleKind,
    SamplerConfig,
    UniformityReport,
    chi_square_uniformity,
    remy_step,
    sample_binary_uniform,
    sample_schroeder_uniform,
    sample_well_weighted_uniform,
    sigma_walk_step,
)
from .text import TreeKind, parse_tree, serialize_tree
from .trees import (
    LEAF,
    AddressFilter,
    BinaryNode,
    Leaf,
    PointedTree,
    SchroederNode,
    WeightedNode,
    canonical_compare,
    is_well_weighted,
    leaf_count,
    list_addresses,
    replace_subtree,
    subtree_at,
)

__version__ = "0.1.0"
