"""Skew cyclic rank-metric codes over finite field towers."""

__version__ = "0.1.0"

from . import errors
from .bounds import min_rank_distance, rank_bch_bound, rank_ht_bound, rank_weight, shift_bound
from .fieldtower import Tower, TowerParams, build_tower, tower
from .gabidulin import gabidulin_code, rank_bch_code
from .lattice import complement, enumerate_codes, idempotent_generator, join, meet
from .linpoly import LinPoly, ResidueClass, parse_linpoly, residue_reduce
from .rootspace import Subspace, cyclotomic_space, span, zero_space
from .skewcode import SkewCyclicCode, code_from_generator, dual, rho, rho_inverse

__all__ = [
    "LinPoly", "ResidueClass", "SkewCyclicCode", "Subspace", "Tower", "TowerParams",
    "build_tower", "code_from_generator", "complement", "cyclotomic_space", "dual",
    "enumerate_codes", "errors", "gabidulin_code", "idempotent_generator", "join", "meet",
    "min_rank_distance", "parse_linpoly", "rank_bch_bound", "rank_bch_code", "rank_ht_bound",
    "rank_weight", "residue_reduce", "rho", "rho_inverse", "shift_bound", "span", "tower",
    "zero_space",
]
