"""Jordan canonical form for square matrices with rational spectrum.

The pipeline per eigenvalue: characteristic polynomial, generalized
eigenspace, restriction to that subspace, shift to a nilpotent operator,
chain generators, and assembly of the transition matrix. The canonical
form orders eigenvalues ascending and blocks within an eigenvalue by
descending size, with 1 on the superdiagonal.

Matrices whose characteristic polynomial does not split into rational
linear factors are out of scope and reported via IrrationalSpectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .matrices import Mat, NoSolution, Vector, block_diag, jordan_block, solve_right
from .nilpotent import block_generators, chains_to_basis
from .polynomials import Poly, rational_roots


class IrrationalSpectrum(Exception):
    """The characteristic polynomial has a nonconstant rational-root-free factor."""

    def __init__(self, residual: Poly):
        super().__init__(f"irreducible residual factor {residual}")
        self.residual = residual


class DimensionMismatch(Exception):
    """A computed subspace dimension disagrees with the expected one."""


class NotInvariant(Exception):
    """The given subspace is not invariant under the operator."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with algebraic multiplicities, ascending by eigenvalue."""

    pairs: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        normalized = tuple(sorted((Fraction(v), int(m)) for v, m in self.pairs))
        if len({v for v, _ in normalized}) != len(normalized):
            raise ValueError("eigenvalues must be distinct")
        object.__setattr__(self, "pairs", normalized)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.pairs)


@dataclass(frozen=True)
class JordanDecomposition:
    """Canonical block data plus J and an invertible P with A P = P J."""

    spectrum_blocks: tuple[tuple[Fraction, tuple[int, ...]], ...]
    j: Mat
    p: Mat


@dataclass(frozen=True)
class ExpMatrix:
    """exp(tA) as a sum of e^(lambda t) times polynomial matrices in t.

    ``terms`` holds one ``(eigenvalue, coefficient matrix)`` pair per
    eigenvalue, ascending; each coefficient matrix entry is a Poly in t of
    degree below the largest block size at that eigenvalue.
    """

    terms: tuple[tuple[Fraction, tuple[tuple[Poly, ...], ...]], ...]

    def at_zero(self) -> Mat:
        """Evaluate at t = 0; the sum over terms equals the identity."""
        n = len(self.terms[0][1])
        total = Mat.zeros(n, n)
        for _, coeff in self.terms:
            total = total + Mat([[entry(0) for entry in row] for row in coeff])
        return total


def char_poly(a: Mat) -> Poly:
    """Monic characteristic polynomial det(xI - A) by the trace recursion.

    Each step divides by an integer only, so the computation is exact
    over the rationals.
    """
    a._require_square()
    n = a.nrows
    if n == 0:
        raise ValueError("characteristic polynomial needs dimension >= 1")
    coeffs = [Fraction(0)] * n + [Fraction(1)]
    m = Mat.identity(n)
    for k in range(1, n + 1):
        am = a * m
        coeffs[n - k] = -am.trace() / k
        m = am + coeffs[n - k] * Mat.identity(n)
    assert m.is_zero  # Cayley-Hamilton closes the recursion
    return Poly(coeffs)


def eigenvalues(a: Mat) -> Spectrum:
    """Rational eigenvalues with algebraic multiplicities.

    Raises IrrationalSpectrum carrying the unfactorable monic residual when
    the spectrum is not fully rational.
    """
    roots, residual = rational_roots(char_poly(a))
    if residual.degree > 0:
        raise IrrationalSpectrum(residual)
    return Spectrum(pairs=tuple(roots.items()))


def generalized_eigenspace(a: Mat, eigenvalue, multiplicity: int) -> list[Vector]:
    """Canonical kernel basis of (A - lambda I)^multiplicity.

    The dimension must equal the algebraic multiplicity; anything else is
    reported as DimensionMismatch.
    """
    lam = Fraction(eigenvalue)
    shifted = a - lam * Mat.identity(a.nrows)
    basis = (shifted ** multiplicity).nullspace_basis()
    if len(basis) != multiplicity:
        raise DimensionMismatch(
            f"eigenspace for {lam} has dimension {len(basis)}, expected {multiplicity}"
        )
    return basis


def restrict(a: Mat, basis: list[Vector] | list) -> Mat:
    """Matrix of A on an invariant subspace, in the given basis.

    Returns M with A B = B M where B stacks the basis as columns.
    """
    stacked = Mat.from_columns(basis, nrows=a.nrows)
    image = Mat.from_columns([a.apply(v) for v in basis], nrows=a.nrows)
    try:
        return solve_right(stacked, image)
    except NoSolution:
        raise NotInvariant("subspace is not invariant under the operator") from None


def jordan_form(a: Mat) -> JordanDecomposition:
    """Canonical Jordan decomposition of a matrix with rational spectrum."""
    spectrum = eigenvalues(a)
    n = a.nrows
    columns: list[Vector] = []
    j_blocks: list[Mat] = []
    spectrum_blocks = []
    for lam, mult in spectrum.pairs:
        basis = generalized_eigenspace(a, lam, mult)
        stacked = Mat.from_columns(basis)
        restriction = restrict(a, basis)
        nil = restriction - lam * Mat.identity(mult)
        decomposition = block_generators(nil)
        p_local, j_local = chains_to_basis(nil, decomposition)
        columns.extend((stacked * p_local).columns())
        j_blocks.append(j_local + lam * Mat.identity(mult))
        spectrum_blocks.append((lam, decomposition.heights))
    p = Mat.from_columns(columns, nrows=n)
    j = block_diag(j_blocks)
    assert a * p == p * j
    return JordanDecomposition(spectrum_blocks=tuple(spectrum_blocks), j=j, p=p)


def jordan_blocks(j: Mat) -> list[tuple[Fraction, int]] | None:
    """Parse a matrix as a direct sum of Jordan blocks, in written order.

    Returns the ordered ``(eigenvalue, size)`` list, or None when the
    matrix is not block diagonal with Jordan blocks.
    """
    if not j.is_square or j.nrows == 0:
        return None
    blocks = []
    i = 0
    n = j.nrows
    while i < n:
        lam = j[i, i]
        size = 1
        while i + size < n and j[i + size - 1, i + size] == 1 and j[i + size, i + size] == lam:
            size += 1
        blocks.append((lam, size))
        i += size
    rebuilt = block_diag([jordan_block(lam, size) for lam, size in blocks])
    return blocks if rebuilt == j else None


def jordan_structure(j: Mat) -> tuple[tuple[Fraction, tuple[int, ...]], ...] | None:
    """Parse a canonical Jordan matrix into per-eigenvalue size multisets.

    Canonical means eigenvalues strictly ascending, each in one contiguous
    run, with sizes non-increasing inside a run. Returns None otherwise.
    """
    blocks = jordan_blocks(j)
    if blocks is None:
        return None
    grouped: list[tuple[Fraction, list[int]]] = []
    for lam, size in blocks:
        if grouped and grouped[-1][0] == lam:
            grouped[-1][1].append(size)
        else:
            grouped.append((lam, [size]))
    values = [lam for lam, _ in grouped]
    if values != sorted(set(values)):
        return None
    if any(sizes != sorted(sizes, reverse=True) for _, sizes in grouped):
        return None
    return tuple((lam, tuple(sizes)) for lam, sizes in grouped)


def validate_decomposition(a: Mat, dec: JordanDecomposition) -> bool:
    """True iff P is invertible, A P = P J exactly, and J is the canonical
    Jordan matrix described by ``dec.spectrum_blocks``."""
    a._require_square()
    n = a.nrows
    if dec.j.nrows != n or dec.j.ncols != n or dec.p.nrows != n or dec.p.ncols != n:
        raise ValueError("decomposition dimensions do not match the operator")
    structure = jordan_structure(dec.j)
    if structure is None or structure != tuple(dec.spectrum_blocks):
        return False
    if dec.p.rank() != n:
        return False
    return a * dec.p == dec.p * dec.j


def similar(a: Mat, b: Mat) -> Mat | None:
    """Similarity witness S with S^-1 A S = B, or None when not similar.

    Two matrices with rational spectra are similar exactly when their
    canonical decompositions carry identical block data; the witness is
    then P_A P_B^-1.
    """
    da = jordan_form(a)
    db = jordan_form(b)
    if da.spectrum_blocks != db.spectrum_blocks:
        return None
    return da.p * db.p.inverse()


def matrix_exp(a: Mat) -> ExpMatrix:
    """Closed-form exp(tA) computed on the generalized eigenbasis.

    On each generalized eigenspace the shifted operator is nilpotent, so
    exp(t(A - lambda I)) is the terminating series sum over k of
    t^k (A - lambda I)^k / k!; conjugating back by the eigenbasis gives the
    global coefficient matrix for e^(lambda t).
    """
    spectrum = eigenvalues(a)
    n = a.nrows
    bases = [generalized_eigenspace(a, lam, mult) for lam, mult in spectrum.pairs]
    full = Mat.from_columns([v for basis in bases for v in basis], nrows=n)
    full_inv = full.inverse()
    terms = []
    offset = 0
    for (lam, mult), basis in zip(spectrum.pairs, bases):
        stacked = Mat.from_columns(basis)
        rows_back = Mat([full_inv.row(i) for i in range(offset, offset + mult)])
        nil = restrict(a, basis) - lam * Mat.identity(mult)
        series = []
        power = Mat.identity(mult)
        factorial = 1
        k = 0
        while not power.is_zero:
            series.append(stacked * (power * Fraction(1, factorial)) * rows_back)
            k += 1
            factorial *= k
            power = power * nil
        terms.append((lam, _series_to_poly_matrix(series)))
        offset += mult
    return ExpMatrix(terms=tuple(terms))


def matrix_exp_via_jordan(a: Mat) -> ExpMatrix:
    """exp(tA) through P exp(tJ) P^-1; cross-check for ``matrix_exp``.

    Produces the same ExpMatrix value as the eigenbasis route, which the
    test suite asserts.
    """
    dec = jordan_form(a)
    p_inv = dec.p.inverse()
    n = a.nrows
    offsets = []
    position = 0
    for lam, sizes in dec.spectrum_blocks:
        starts = []
        for size in sizes:
            starts.append((position, size))
            position += size
        offsets.append((lam, starts))
    terms = []
    for lam, starts in offsets:
        largest = max(size for _, size in starts)
        series = []
        for k in range(largest):
            selector = [[Fraction(0)] * n for _ in range(n)]
            weight = Fraction(1, math.factorial(k))
            for start, size in starts:
                for r in range(size - k):
                    selector[start + r][start + r + k] = weight
            series.append(dec.p * Mat(selector, ncols=n) * p_inv)
        terms.append((lam, _series_to_poly_matrix(series)))
    return ExpMatrix(terms=tuple(terms))


def _series_to_poly_matrix(series: list[Mat]) -> tuple[tuple[Poly, ...], ...]:
    nrows, ncols = series[0].nrows, series[0].ncols
    return tuple(
        tuple(Poly([m[i, j] for m in series]) for j in range(ncols))
        for i in range(nrows)
    )


