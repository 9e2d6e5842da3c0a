"""Homology of finite metric simplicial complexes in three theories.

The package computes simplicial homology over the integers, realizes
classes by piecewise-affine chains and by polyhedral integral currents,
and cross-verifies the theories with exact certificates: the bracket map
sends chains to currents, and the cover zig-zag matches cycle currents by
cycle chains up to explicit fillings.
"""

from .errors import GeometryError, InputError, LocalityError, MhomError
from .rational import RadicalSum, dist2, sqrt_lower, sqrt_upper
from .chaincomplex import (ChainComplexZ, HomologyGroup, RelativePair,
                           all_homology, connecting_homomorphism,
                           homology, homology_data)
from .complexes import (BallCover, LipschitzHomotopy, MetricComplex, PLMap,
                        mcshane_extension, refine_cover)
from .chains import LipschitzChain, chain_from_vector, chain_to_vector
from .currents import (PolyhedralCurrent, equicontinuity_gap,
                       integral_of_product)
from .bracket import (bracket, bracket_inverse_points,
                      brackets_of_generators, pairing_matrix,
                      pairing_nonsingular)
from .cech import (FillResult, Nerve, Staircase, augment, augment_nerve,
                   cech_boundary, conforming, cone_fill_chain,
                   cone_fill_current, cosheaf_split, degree_zero_cancel,
                   degree_zero_fill, fill_zero_chain, nerve_boundary,
                   reindex_components, solve_phi_pairs, solve_phi_single,
                   split_current_by_cover, zigzag_cancel, zigzag_descend,
                   zigzag_fill)
from .spaces import (builtin_covers, builtin_spaces, load_cover, load_space,
                     pairing_forms, save_cover, save_space)

__version__ = "0.1.0"

__all__ = [
    "BallCover", "ChainComplexZ", "FillResult", "GeometryError",
    "HomologyGroup", "InputError", "LipschitzChain", "LipschitzHomotopy",
    "LocalityError", "MetricComplex", "MhomError", "Nerve", "PLMap",
    "PolyhedralCurrent", "RadicalSum", "RelativePair", "Staircase",
    "all_homology", "augment", "augment_nerve", "bracket",
    "bracket_inverse_points", "brackets_of_generators", "builtin_covers",
    "builtin_spaces", "cech_boundary", "chain_from_vector",
    "chain_to_vector", "cone_fill_chain", "cone_fill_current", "conforming",
    "connecting_homomorphism", "cosheaf_split", "degree_zero_cancel",
    "degree_zero_fill", "dist2", "equicontinuity_gap", "fill_zero_chain",
    "homology", "homology_data", "integral_of_product", "load_cover",
    "load_space", "mcshane_extension", "nerve_boundary", "pairing_forms",
    "pairing_matrix", "pairing_nonsingular", "refine_cover",
    "reindex_components", "save_cover", "save_space", "solve_phi_pairs",
    "solve_phi_single", "split_current_by_cover", "sqrt_lower",
    "sqrt_upper", "zigzag_cancel", "zigzag_descend", "zigzag_fill",
]
