"""Exact Laplacian coefficients, subdivision matchings and incidence energy of trees."""

from .laplacian import CoeffVector, coefficients_via_charpoly, coefficients_via_subdivision, phi_eval, poset_compare
from .matchgen import (
    FourWaySplit,
    MatchingTriple,
    four_way_split,
    hosoya,
    matching_poly,
    matching_triple,
    merge_at_root,
    subdivision_triple,
    tau_at,
)
from .poly import IntPoly
from .trees import (
    Decomposition,
    RootedTree,
    Tree,
    canonical_code,
    compose,
    decompose,
    enumerate_trees,
    make_broom,
    make_complete_d_ary,
    make_greedy,
    make_path,
    make_star,
    subdivide,
)

__version__ = "0.1.0"
