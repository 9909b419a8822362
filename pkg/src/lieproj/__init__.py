"""Exact split simple Lie algebras, the Casimir projector, and highest-weight orbit equations."""

from functools import lru_cache

from .errors import (
    DimensionCapError, InvalidTypeError, InvariantError, LieProjError,
    NonDominantWeightError, ParseError,
)
from .exactlin import RMatrix, format_rational, parse_rational
from .hwmodule import DEFAULT_MAX_DIM, RepModule, build_module
from .liealgebra import MatrixLieAlgebra, bracket_closure
from .rootdata import RootSystemData, build_root_system, parse_type, parse_weight

__all__ = [
    "DimensionCapError", "InvalidTypeError", "InvariantError", "LieProjError",
    "NonDominantWeightError", "ParseError", "RMatrix", "format_rational",
    "parse_rational", "DEFAULT_MAX_DIM", "RepModule", "build_module",
    "MatrixLieAlgebra", "bracket_closure", "RootSystemData", "build_root_system",
    "parse_type", "parse_weight", "build_algebra",
]


@lru_cache(maxsize=32)
def build_algebra(type_string: str, weight, max_dim: int = DEFAULT_MAX_DIM) -> MatrixLieAlgebra:
    """rho(g) for the module V(weight) of the given type, e.g. ``build_algebra("A3", (0, 1, 0))``."""
    rs = parse_type(type_string)
    if isinstance(weight, str):
        weight = parse_weight(rs, weight)
    return bracket_closure(build_module(rs, tuple(weight), max_dim=max_dim))
