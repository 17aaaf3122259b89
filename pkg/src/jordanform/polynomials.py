"""Univariate polynomials over exact rationals, with rational root extraction."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable


def _coerce(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class Poly:
    """Polynomial with Fraction coefficients, stored low degree first.

    ``coeffs[k]`` is the coefficient of ``x^k``. The zero polynomial has an
    empty coefficient tuple; otherwise the last coefficient is nonzero.
    Instances are immutable values.

    >>> p = Poly([1, 3, 1])          # x^2 + 3x + 1
    >>> p.derivative()
    Poly([3, 2])
    >>> str(p)
    'x^2 + 3*x + 1'
    >>> divmod(p * Poly([-2, 1]), Poly([-2, 1]))[0] == p
    True
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x) -> Fraction:
        x = _coerce(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        return self.format()

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly(c * _coerce(other) for c in self.coeffs)

    def __rmul__(self, other):
        return Poly(c * _coerce(other) for c in self.coeffs)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        out = Poly([1])
        for _ in range(exponent):
            out = out * self
        return out

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for k in range(len(quo) - 1, -1, -1):
            coeff = rem[k + other.degree] / lead
            if coeff == 0:
                continue
            quo[k] = coeff
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= coeff * b
        return Poly(quo), Poly(rem[: other.degree if other.degree > 0 else 0])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "Poly":
        """Exact formal derivative.

        >>> Poly([0, 0, 0, 0, 1]).derivative()   # x^4
        Poly([0, 0, 0, 4])
        """
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def format(self, var: str = "x") -> str:
        """Human-readable form, highest power first."""
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                term = f"{head}{var}" + (f"^{k}" if k > 1 else "")
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


#: The monomial x, convenient for building polynomials in tests and callers.
X = Poly((0, 1))


def _divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1, ascending."""
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p: Poly) -> tuple[dict[Fraction, int], Poly]:
    """All rational roots of a monic polynomial, with exact multiplicities.

    Returns ``(roots, residual)`` where ``roots`` maps each rational root to
    its multiplicity (keys ascending) and ``residual`` is the monic factor
    with no rational roots, so that ``prod((x - r)^m) * residual == p``.

    Candidates come from clearing denominators to an integer polynomial and
    testing ``a/b`` with ``a`` dividing the constant term and ``b`` dividing
    the leading coefficient; multiplicities by repeated exact division.
    """
    if p.degree < 1 or not p.is_monic:
        raise ValueError("rational_roots requires a monic polynomial of degree >= 1")

    roots: dict[Fraction, int] = {}
    work = p

    # Powers of x first: the divisor rule needs a nonzero constant term.
    zero_mult = 0
    while work.degree >= 1 and work.coeffs[0] == 0:
        work = Poly(work.coeffs[1:])
        zero_mult += 1
    if zero_mult:
        roots[Fraction(0)] = zero_mult

    if work.degree >= 1:
        den = math.lcm(*(c.denominator for c in work.coeffs))
        ints = [int(c * den) for c in work.coeffs]
        candidates = sorted(
            {
                sign * Fraction(a, b)
                for a in _divisors(abs(ints[0]))
                for b in _divisors(ints[-1])
                for sign in (1, -1)
            }
        )
        for r in candidates:
            mult = 0
            while work.degree >= 1 and work(r) == 0:
                work, rem = divmod(work, Poly([-r, 1]))
                assert rem.is_zero
                mult += 1
            if mult:
                roots[r] = mult
            if work.degree < 1:
                break

    return dict(sorted(roots.items())), work
