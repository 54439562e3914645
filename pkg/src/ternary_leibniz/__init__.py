"""Exact-arithmetic workbench for ternary Leibniz algebras given by structure constants."""

from .catalog import builtin, parse, serialize
from .core import (
    BracketTable,
    DimMismatch,
    TernaryAlgebra,
    abelian,
    bracket,
    is_abelian,
    is_commutative,
    is_leibniz,
    leibniz_defects,
)
from .spaces import (
    LinearMap,
    MatrixSubspace,
    central_derivations,
    centroid,
    closure_report,
    commutator,
    compose,
    contains,
    derivations,
    intersect,
    nullspace,
    quasi_centroid,
    subspace_equal,
)

__version__ = "0.1.0"
