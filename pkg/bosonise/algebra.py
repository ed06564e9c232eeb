"""Exact sparse polynomial arithmetic over the Gaussian rationals.

Every wave function in the engine is a Polynomial in Bargmann-space variables
t_i, u_i, v_i (axis 0, 1, 2 of particle i). Coefficients are GaussianRational
values built on fractions.Fraction, so equality tests are exact everywhere and
irrational normalisations are carried as squared norms next to unnormalised
polynomials.

Terms iterate in the canonical monomial order: graded lexicographic, highest
degree first, ties broken by the exponent vector under the variable order
t1, t2, ..., u1, u2, ..., v1, ... (axis-major, then particle).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, NamedTuple, Union

from sympy.polys.domains import QQ, QQ_I, ZZ_I

from bosonise.errors import ZeroPolynomialError

Rational = Fraction


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Exact complex number re + im*i with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, value: Scalar) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value), Fraction(0))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __add__(self, other: Scalar) -> GaussianRational:
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> GaussianRational:
        o = GaussianRational.of(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> GaussianRational:
        return GaussianRational.of(other) - self

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: Scalar) -> GaussianRational:
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> GaussianRational:
        o = GaussianRational.of(other)
        n = o.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other: Scalar) -> GaussianRational:
        return GaussianRational.of(other) / self

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, always a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def to_domain(self) -> Any:
        """The same number as an element of sympy's QQ_I."""
        return QQ_I(QQ(self.re.numerator, self.re.denominator), QQ(self.im.numerator, self.im.denominator))

    @classmethod
    def from_domain(cls, element: Any) -> GaussianRational:
        x, y = element.x, element.y
        return cls(Fraction(int(x.numerator), int(x.denominator)), Fraction(int(y.numerator), int(y.denominator)))

    def __repr__(self) -> str:
        from bosonise.textfmt import format_gaussian

        return f"GaussianRational({format_gaussian(self)})"


Scalar = Union[int, Fraction, complex, GaussianRational]

ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))  # noqa: E741
UNITS = (ONE, I, -ONE, -I)


class VariableId(NamedTuple):
    """Bargmann variable: axis 0..d-1 (t, u, v, ...) of particle 1..N."""

    axis: int
    particle: int


# A monomial is the tuple of (variable, exponent) pairs sorted by variable,
# exponents >= 1. The empty tuple is the constant monomial.
Monomial = tuple[tuple[VariableId, int], ...]

UNIT_MONOMIAL: Monomial = ()


def monomial(exponents: Mapping[VariableId, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exponents.items() if e > 0))


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for v, e in b:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def monomial_order_key(m: Monomial) -> tuple[int, tuple[tuple[int, int, int], ...]]:
    """Sort key realising graded lex; larger key means earlier in canonical order."""
    return monomial_degree(m), tuple((-v.axis, -v.particle, e) for v, e in m)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return math.factorial(n)


def monomial_factorial(m: Monomial) -> int:
    """m! = product of factorials of the exponents, the Bargmann norm of m."""
    out = 1
    for _, e in m:
        out *= factorial(e)
    return out


class Polynomial:
    """Immutable sparse polynomial with Gaussian-rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, GaussianRational] | None = None):
        items = [(m, c) for m, c in (terms or {}).items() if c]
        items.sort(key=lambda mc: monomial_order_key(mc[0]), reverse=True)
        self._terms: dict[Monomial, GaussianRational] = dict(items)
        self._hash: int | None = None

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Scalar, Monomial]]) -> Polynomial:
        acc: dict[Monomial, GaussianRational] = {}
        for c, m in terms:
            acc[m] = acc.get(m, ZERO) + GaussianRational.of(c)
        return cls(acc)

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls({UNIT_MONOMIAL: GaussianRational.of(c)})

    @classmethod
    def variable(cls, v: VariableId, power: int = 1) -> Polynomial:
        return cls({monomial({v: power}): ONE})

    # -- inspection -----------------------------------------------------------

    def terms(self) -> Iterator[tuple[Monomial, GaussianRational]]:
        """Terms in canonical order, leading term first."""
        return iter(self._terms.items())

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coefficient(self, m: Monomial) -> GaussianRational:
        return self._terms.get(m, ZERO)

    def leading(self) -> tuple[Monomial, GaussianRational]:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((monomial_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({monomial_degree(m) for m in self._terms}) <= 1

    def homogeneous_components(self) -> dict[int, Polynomial]:
        parts: dict[int, dict[Monomial, GaussianRational]] = {}
        for m, c in self._terms.items():
            parts.setdefault(monomial_degree(m), {})[m] = c
        return {deg: Polynomial(t) for deg, t in sorted(parts.items())}

    def variables(self) -> set[VariableId]:
        return {v for m in self._terms for v, _ in m}

    def particles(self) -> int:
        """Largest particle index present (0 for constants)."""
        return max((v.particle for v in self.variables()), default=0)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, -other)

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> Polynomial:
        return self.scale(other)

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = poly_mul(out, base)
            base = poly_mul(base, base)
            n >>= 1
        return out

    def scale(self, c: Scalar) -> Polynomial:
        g = GaussianRational.of(c)
        if not g:
            return Polynomial()
        return Polynomial({m: g * x for m, x in self._terms.items()})

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from bosonise.textfmt import format_polynomial

        return f"Polynomial({format_polynomial(self)})"


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    acc = dict(p._terms)
    for m, c in q._terms.items():
        acc[m] = acc.get(m, ZERO) + c
    return Polynomial(acc)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    acc: dict[Monomial, GaussianRational] = {}
    for ma, ca in p._terms.items():
        for mb, cb in q._terms.items():
            m = monomial_mul(ma, mb)
            acc[m] = acc.get(m, ZERO) + ca * cb
    return Polynomial(acc)


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    acc: dict[Monomial, GaussianRational] = {}
    for p in polys:
        for m, c in p._terms.items():
            acc[m] = acc.get(m, ZERO) + c
    return Polynomial(acc)


def linear_combination(coefficients: Sequence[Scalar], polys: Sequence[Polynomial]) -> Polynomial:
    return poly_sum(p.scale(c) for c, p in zip(coefficients, polys, strict=True))


def inner_product(p: Polynomial, q: Polynomial) -> GaussianRational:
    """Bargmann scalar product, antilinear in the first argument.

    Distinct monomials are orthogonal and <m, m> = m!, so only shared
    monomials contribute.
    """
    small, large, flip = (p, q, False) if len(p) <= len(q) else (q, p, True)
    re = Fraction(0)
    im = Fraction(0)
    for m, a in small._terms.items():
        b = large._terms.get(m)
        if b is None:
            continue
        left, right = (b, a) if flip else (a, b)
        w = monomial_factorial(m)
        prod = left.conjugate() * right
        re += prod.re * w
        im += prod.im * w
    return GaussianRational(re, im)


def norm_sq(p: Polynomial) -> Fraction:
    return sum((c.abs2() * monomial_factorial(m) for m, c in p.terms()), Fraction(0))


def substitute(p: Polynomial, images: Mapping[VariableId, Polynomial]) -> Polynomial:
    """Replace variables by polynomials; unmapped variables stay as they are."""
    powers: dict[tuple[VariableId, int], Polynomial] = {}

    def power(v: VariableId, e: int) -> Polynomial:
        key = (v, e)
        if key not in powers:
            base = images.get(v)
            powers[key] = base**e if base is not None else Polynomial.variable(v, e)
        return powers[key]

    out: list[Polynomial] = []
    for m, c in p.terms():
        term = Polynomial.constant(c)
        for v, e in m:
            term = poly_mul(term, power(v, e))
        out.append(term)
    return poly_sum(out)


# -- canonical forms -----------------------------------------------------------

GaussInt = tuple[int, int]


def gaussian_gcd(a: GaussInt, b: GaussInt) -> GaussInt:
    """Greatest common divisor in Z[i], normalised into the first quadrant."""
    g = ZZ_I.gcd(ZZ_I(*a), ZZ_I(*b))
    return int(g.x), int(g.y)


def _in_first_quadrant(c: GaussianRational) -> bool:
    return c.re > 0 and c.im >= 0


def primitive_multiplier(coefficients: Sequence[GaussianRational]) -> GaussianRational:
    """Factor f making f*c Gaussian integers of content 1, f*c[0] in the first quadrant.

    The leading entry must be nonzero. The first quadrant is taken half-open
    (re > 0, im >= 0) so exactly one unit rotation qualifies.
    """
    if not coefficients or not coefficients[0]:
        raise ZeroPolynomialError("cannot normalise a zero leading coefficient")
    lcm = 1
    for c in coefficients:
        lcm = math.lcm(lcm, c.re.denominator, c.im.denominator)
    g: GaussInt = (0, 0)
    for c in coefficients:
        g = gaussian_gcd(g, (int(c.re * lcm), int(c.im * lcm)))
    f = GaussianRational(Fraction(lcm)) / GaussianRational(Fraction(g[0]), Fraction(g[1]))
    lead = f * coefficients[0]
    for u in UNITS:
        if _in_first_quadrant(u * lead):
            return u * f
    raise AssertionError("no unit rotation reaches the first quadrant")  # pragma: no cover


def canonical_form(p: Polynomial) -> Polynomial:
    """Unique primitive Gaussian-integer multiple of p with leading coefficient in quadrant I."""
    if p.is_zero():
        raise ZeroPolynomialError(
            "canonical_form of the zero polynomial",
            hint="filter out vanishing states before normalising",
        )
    return p.scale(primitive_multiplier([c for _, c in p.terms()]))


def proportionality(p: Polynomial, q: Polynomial) -> GaussianRational | None:
    """The scalar c with p == c*q, or None when p is not a multiple of q."""
    if q.is_zero():
        return ZERO if p.is_zero() else None
    if p.is_zero():
        return ZERO
    m, cq = q.leading()
    c = p.coefficient(m) / cq
    if not c or q.scale(c) != p:
        return None
    return c


def equal_up_to_unit(p: Polynomial, q: Polynomial) -> bool:
    c = proportionality(p, q)
    return c is not None and c in UNITS
