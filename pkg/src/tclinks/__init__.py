"""Invariants of torus-covering T^2-links and their degree-2 braid covers."""

from .braidword import (
    BraidWord,
    StrandPermutation,
    closure_components,
    compose,
    crossing_matrix,
    inverse,
    linking_closed,
    parse_braid,
    permutation,
    power,
)
from .cover import (
    CableLayout,
    CoverDecoration,
    bundle_half_twist,
    cable_crossing,
    decorate,
    intersection_numbers,
    tilde,
)
from .family import (
    case_equation_solvable,
    decorated_cover,
    homology_distinguishable,
    lemma_closed_form,
    make_full_twist,
    make_S,
    make_X,
    theorem1_distinguishable,
    theorem1_report,
)
from .garside import braids_equal, commutes, half_twist, normal_form
from .tclink import (
    TorusCoveringLink,
    all_triple_linkings,
    build_link,
    lk_table,
    triple_linking,
)

__all__ = [name for name in dir() if not name.startswith("_")]
