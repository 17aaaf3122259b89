"""Block structure and chain generators of nilpotent operators.

For a nilpotent matrix the sizes of its canonical blocks are determined by
the rank sequence of its powers, and explicit block generators fall out of
a descending sweep over kernel quotients. Every choice made here (kernel
bases, candidate order, chain order) is canonical, so repeated runs produce
identical decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import Mat, Vector, as_vector, block_diag, extend_independent, solve_right


class NotNilpotent(Exception):
    """The operator has a nonzero power of maximal order."""


class ZeroVector(Exception):
    """A zero vector where a nonzero one is required."""


class NotABasis(Exception):
    """Chain vectors fail to form a basis of the whole space."""


class InvalidDecomposition(Exception):
    """A cyclic decomposition is inconsistent with the operator."""


@dataclass(frozen=True)
class DSequence:
    """Kernel dimensions of an operator restricted to ranges of its powers.

    ``values[i]`` is the nullity of the restriction of the operator to the
    column space of its i-th power, equal to ``rank(A^i) - rank(A^(i+1))``.
    The differences ``values[i-1] - values[i]`` count blocks of size i.
    """

    values: tuple[int, ...]
    index_of_nilpotency: int

    def __post_init__(self):
        if len(self.values) != self.index_of_nilpotency + 1:
            raise ValueError("values must cover indices 0..N")


@dataclass(frozen=True)
class CyclicDecomposition:
    """Chains ``(generator, height)`` sorted by descending height.

    The chain vectors ``A^j g`` for ``0 <= j < height`` over all chains are
    expected to form a basis of the whole space; ``chains_to_basis`` checks
    this and materializes the basis.
    """

    chains: tuple[tuple[Vector, int], ...]

    def __post_init__(self):
        normalized = tuple(
            sorted(
                ((as_vector(g), int(h)) for g, h in self.chains),
                key=lambda c: -c[1],
            )
        )
        object.__setattr__(self, "chains", normalized)

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(h for _, h in self.chains)


def _require_operator(a: Mat):
    if not a.is_square:
        raise ValueError(f"operator must be square, got {a.nrows}x{a.ncols}")
    if a.nrows == 0:
        raise ValueError("operator must act on a space of dimension >= 1")


def _powers_until_zero(a: Mat) -> list[Mat]:
    """[I, A, A^2, ..., A^N] with A^N = 0; raises NotNilpotent past dim."""
    _require_operator(a)
    powers = [Mat.identity(a.nrows)]
    while not powers[-1].is_zero:
        if len(powers) > a.nrows:
            raise NotNilpotent(f"A^{a.nrows} is nonzero")
        powers.append(powers[-1] * a)
    return powers


def nilpotency_index(a: Mat) -> int:
    """Smallest N >= 1 with A^N = 0 (N = 1 for the zero operator)."""
    return max(len(_powers_until_zero(a)) - 1, 1)


def height(a: Mat, v) -> int:
    """Smallest h >= 1 with A^h v = 0, for nilpotent A and v != 0."""
    _require_operator(a)
    w = as_vector(v)
    if all(x == 0 for x in w):
        raise ZeroVector("height of the zero vector is undefined")
    h = 0
    while any(x != 0 for x in w):
        if h == a.nrows:
            raise NotNilpotent(f"A^{a.nrows} v is nonzero")
        w = a.apply(w)
        h += 1
    return h


def d_sequence(a: Mat) -> DSequence:
    """Rank-difference path: d_i = rank(A^i) - rank(A^(i+1)), i = 0..N."""
    powers = _powers_until_zero(a)
    ranks = [p.rank() for p in powers] + [0]
    n = max(len(powers) - 1, 1)
    values = tuple(ranks[i] - ranks[i + 1] for i in range(n + 1))
    return DSequence(values=values, index_of_nilpotency=n)


def d_sequence_restricted(a: Mat) -> tuple[int, ...]:
    """Direct path: nullity of A restricted to a column basis of each A^i.

    Independent of the rank-difference computation in ``d_sequence``; the
    two must agree on every nilpotent input.
    """
    powers = _powers_until_zero(a)
    n = max(len(powers) - 1, 1)
    out = []
    for i in range(n + 1):
        power = powers[min(i, len(powers) - 1)]
        _, pivots = power.rref()
        if not pivots:
            out.append(0)
            continue
        basis = [power.col(c) for c in pivots]
        stacked = Mat.from_columns(basis)
        image = Mat.from_columns([a.apply(v) for v in basis], nrows=a.nrows)
        restriction = solve_right(stacked, image)
        out.append(len(restriction.nullspace_basis()))
    return tuple(out)


def block_sizes(a: Mat) -> tuple[int, ...]:
    """Multiset of block sizes, descending; size i occurs d_(i-1) - d_i times."""
    d = d_sequence(a).values
    sizes = []
    for i in range(len(d) - 1, 0, -1):
        sizes.extend([i] * (d[i - 1] - d[i]))
    return tuple(sizes)


def block_generators(a: Mat) -> CyclicDecomposition:
    """Canonical chain generators, one per block.

    Sweeps the distinct block sizes in descending order. At the largest
    size n the generators are coset representatives of a basis of
    N(A^n)/N(A^(n-1)); at each following size m the image of the chains
    collected so far inside N(A^m)/N(A^(m-1)) is extended to a full basis
    and the new representatives become the generators of height m.

    Representatives are chosen by ``extend_independent`` over the canonical
    kernel bases, which makes the output deterministic.
    """
    powers = _powers_until_zero(a)
    ranks = [p.rank() for p in powers] + [0]
    n = max(len(powers) - 1, 1)
    d = [ranks[i] - ranks[i + 1] for i in range(n + 1)]
    kernel_bases = [powers[min(i, len(powers) - 1)].nullspace_basis() for i in range(n + 1)]

    chains: list[tuple[Vector, int]] = []
    chain_vectors: list[list[Vector]] = []
    for size in range(n, 0, -1):
        count = d[size - 1] - d[size]
        if count == 0:
            continue
        existing = list(kernel_bases[size - 1])
        for vectors in chain_vectors:
            # Tail of each taller chain that already lies in N(A^size).
            existing.extend(vectors[len(vectors) - size:])
        new_generators = extend_independent(existing, kernel_bases[size])
        assert len(new_generators) == count
        for g in new_generators:
            vectors = [g]
            for _ in range(size - 1):
                vectors.append(a.apply(vectors[-1]))
            chains.append((g, size))
            chain_vectors.append(vectors)
    return CyclicDecomposition(chains=tuple(chains))


def chains_to_basis(a: Mat, dec: CyclicDecomposition) -> tuple[Mat, Mat]:
    """Materialize a chain basis P and the block matrix J with A P = P J.

    Per chain of height h the columns are ``A^(h-1) g, ..., A g, g``, so
    each block of J carries 1 on the superdiagonal and 0 on the diagonal.
    """
    _require_operator(a)
    columns: list[Vector] = []
    blocks: list[Mat] = []
    for g, h in dec.chains:
        vectors = [as_vector(g)]
        for _ in range(h - 1):
            vectors.append(a.apply(vectors[-1]))
        last = vectors[-1]
        if all(x == 0 for x in last):
            raise InvalidDecomposition(f"recorded height {h} is too large")
        if any(x != 0 for x in a.apply(last)):
            raise InvalidDecomposition(f"recorded height {h} is too small")
        columns.extend(reversed(vectors))
        blocks.append(_shift_block(h))
    if len(columns) != a.nrows:
        raise InvalidDecomposition(
            f"chain vectors span {len(columns)} dimensions, expected {a.nrows}"
        )
    p = Mat.from_columns(columns)
    if p.rank() != a.nrows:
        raise InvalidDecomposition("chain vectors are linearly dependent")
    j = block_diag(blocks)
    return p, j


def validate_generators(a: Mat, generators) -> tuple[int, ...]:
    """Check proposed generators and return their height multiset, descending.

    Computes each generator's height, builds all chain vectors and verifies
    that together they form a basis of the whole space.
    """
    _require_operator(a)
    heights = []
    all_vectors: list[Vector] = []
    for g in generators:
        h = height(a, g)
        heights.append(h)
        w = as_vector(g)
        all_vectors.append(w)
        for _ in range(h - 1):
            w = a.apply(w)
            all_vectors.append(w)
    if len(all_vectors) != a.nrows:
        raise NotABasis(
            f"chain vectors span {len(all_vectors)} dimensions, expected {a.nrows}"
        )
    if Mat.from_columns(all_vectors, nrows=a.nrows).rank() != a.nrows:
        raise NotABasis("chain vectors are linearly dependent")
    return tuple(sorted(heights, reverse=True))


def _shift_block(size: int) -> Mat:
    zero = Fraction(0)
    rows = [[zero] * size for _ in range(size)]
    for i in range(size - 1):
        rows[i][i + 1] = Fraction(1)
    return Mat(rows, ncols=size)
