"""Exact Jordan canonical forms of rational matrices.

All arithmetic is exact over the rationals. The package computes block
structure invariants and explicit chain generators for nilpotent operators,
full Jordan decompositions with transition matrices, similarity witnesses,
and closed-form matrix exponentials, and ships a command-line front end.
"""

from .jordan import (
    DimensionMismatch,
    ExpMatrix,
    IrrationalSpectrum,
    JordanDecomposition,
    NotInvariant,
    Spectrum,
    char_poly,
    eigenvalues,
    generalized_eigenspace,
    jordan_blocks,
    jordan_form,
    jordan_structure,
    matrix_exp,
    matrix_exp_via_jordan,
    restrict,
    similar,
    validate_decomposition,
)
from .matrices import (
    Mat,
    NoSolution,
    RankDeficient,
    Vector,
    block_diag,
    extend_independent,
    jordan_block,
    solve_right,
)
from .nilpotent import (
    CyclicDecomposition,
    DSequence,
    InvalidDecomposition,
    NotABasis,
    NotNilpotent,
    ZeroVector,
    block_generators,
    block_sizes,
    chains_to_basis,
    d_sequence,
    d_sequence_restricted,
    height,
    nilpotency_index,
    validate_generators,
)
from .polynomials import Poly, X, rational_roots
from .rationals import Rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "CyclicDecomposition",
    "DimensionMismatch",
    "DSequence",
    "ExpMatrix",
    "InvalidDecomposition",
    "IrrationalSpectrum",
    "JordanDecomposition",
    "Mat",
    "NoSolution",
    "NotABasis",
    "NotInvariant",
    "NotNilpotent",
    "Poly",
    "RankDeficient",
    "Rational",
    "Spectrum",
    "Vector",
    "X",
    "ZeroVector",
    "block_diag",
    "block_generators",
    "block_sizes",
    "chains_to_basis",
    "char_poly",
    "d_sequence",
    "d_sequence_restricted",
    "eigenvalues",
    "extend_independent",
    "generalized_eigenspace",
    "height",
    "jordan_block",
    "jordan_blocks",
    "jordan_form",
    "jordan_structure",
    "matrix_exp",
    "matrix_exp_via_jordan",
    "nilpotency_index",
    "parse_rational",
    "rational_roots",
    "restrict",
    "similar",
    "solve_right",
    "validate_decomposition",
    "validate_generators",
]
