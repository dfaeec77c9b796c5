"""Exact real log canonical thresholds of real hyperplane arrangements.

The package computes the threshold pair (lambda, m) of a product of linear
forms with integer multiplicities, exactly, from the intersection lattice
of the arrangement, and can validate the answer statistically through the
small-epsilon asymptotics of the volume function V(eps).

Quick start:

    >>> from rlct import parse_factored_product, normalize, rlct_central
    >>> arr = normalize(parse_factored_product("x*y^2*z^2*(x+y+z)"))
    >>> result = rlct_central(arr)
    >>> str(result.pair)
    '(1/2, 3)'
"""

from .arrangement import (
    ArrangementSpec,
    NormalizedArrangement,
    arrangement_from_csv,
    arrangement_from_json,
    arrangement_to_json_dict,
    normalize,
)
from .errors import (
    CentralityError,
    DegenerateBoxError,
    DimensionError,
    EmptyArrangementError,
    InsufficientDataError,
    InvalidHyperplaneError,
    InvalidMultiplicityError,
    NonlinearFactorError,
    ParseError,
    RlctError,
    SizeLimitError,
    UnknownVariableError,
)
from .lattice import (
    Flat,
    InclusionDag,
    IntersectionLattice,
    build_lattice,
    inclusion_dag,
    lattice_to_json_dict,
)
from .oracle import lattice_bruteforce, longest_chain_bruteforce
from .parser import format_factored_product, parse_factored_product
from .ratlinalg import (
    Rational,
    RationalMatrix,
    as_rational,
    format_rational,
    kernel_basis,
    rank,
    row_space_canonical,
    rref,
    subspace_leq,
)
from .threshold import (
    Localization,
    LocalizationReport,
    RlctPair,
    RlctResult,
    maximal_central_localizations,
    pair_less,
    rlct_affine,
    rlct_central,
    rlct_line_arrangement_2d,
)
from .volume import (
    AsymptoticFit,
    VolumeSample,
    default_box,
    default_epsilon_grid,
    estimate_volume,
    fit_asymptotics,
    synthetic_samples,
)

__version__ = "0.1.0"

__all__ = [
    "ArrangementSpec",
    "AsymptoticFit",
    "CentralityError",
    "DegenerateBoxError",
    "DimensionError",
    "EmptyArrangementError",
    "Flat",
    "InclusionDag",
    "InsufficientDataError",
    "IntersectionLattice",
    "InvalidHyperplaneError",
    "InvalidMultiplicityError",
    "Localization",
    "LocalizationReport",
    "NonlinearFactorError",
    "NormalizedArrangement",
    "ParseError",
    "Rational",
    "RationalMatrix",
    "RlctError",
    "RlctPair",
    "RlctResult",
    "SizeLimitError",
    "UnknownVariableError",
    "VolumeSample",
    "arrangement_from_csv",
    "arrangement_from_json",
    "arrangement_to_json_dict",
    "as_rational",
    "build_lattice",
    "default_box",
    "default_epsilon_grid",
    "estimate_volume",
    "fit_asymptotics",
    "format_factored_product",
    "format_rational",
    "inclusion_dag",
    "kernel_basis",
    "lattice_bruteforce",
    "lattice_to_json_dict",
    "longest_chain_bruteforce",
    "maximal_central_localizations",
    "normalize",
    "pair_less",
    "parse_factored_product",
    "rank",
    "rlct_affine",
    "rlct_central",
    "rlct_line_arrangement_2d",
    "row_space_canonical",
    "rref",
    "subspace_leq",
    "synthetic_samples",
]
