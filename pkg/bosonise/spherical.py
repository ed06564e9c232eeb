"""The spherical alphabet of the two-particle problem in three dimensions.

Six linear forms replace t1, t2, u1, u2, v1, v2:

    e11  = -e1(t) - i e1(u)      P11  = -Psi1 - i Psi2
    e10  =  e1(v)                P10  =  Psi3
    e1m1 =  e1(t) - i e1(u)      P1m1 =  Psi1 - i Psi2

with Psi_a = a1 - a2. The e1m1 form mirrors the P1m1 pattern by convention.
The forms are mutually orthogonal, so their monomials are an orthogonal basis
of the polynomial ring with ||prod g^a||^2 = prod a! n_g^a (n_g = 4 for the
m = +-1 forms, 2 for m = 0). Lz is diagonal, the ladder operators act by the
product rule, and an antisymmetric state is one of odd P-degree.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from bosonise.algebra import (
    ONE,
    ZERO,
    GaussianRational,
    Polynomial,
    Scalar,
    poly_mul,
    poly_sum,
    primitive_multiplier,
)
from bosonise.errors import ParseError, ZeroPolynomialError
from bosonise.fock import spherical_boson, spherical_ground
from bosonise.textfmt import format_terms, parse_terms


class Letter(IntEnum):
    E11 = 0
    E10 = 1
    E1M1 = 2
    P11 = 3
    P10 = 4
    P1M1 = 5


NAMES = ("e11", "e10", "e1m1", "P11", "P10", "P1m1")
WEIGHTS = (1, 0, -1, 1, 0, -1)
NORMS = (4, 2, 4, 4, 2, 4)

_BY_NAME = {name: Letter(i) for i, name in enumerate(NAMES)}

# (factor, image) of each letter under the ladder operators; None means it is annihilated.
LOWER_IMAGE: dict[Letter, tuple[int, Letter] | None] = {
    Letter.E11: (2, Letter.E10),
    Letter.E10: (1, Letter.E1M1),
    Letter.E1M1: None,
    Letter.P11: (2, Letter.P10),
    Letter.P10: (1, Letter.P1M1),
    Letter.P1M1: None,
}
RAISE_IMAGE: dict[Letter, tuple[int, Letter] | None] = {
    Letter.E11: None,
    Letter.E10: (1, Letter.E11),
    Letter.E1M1: (2, Letter.E10),
    Letter.P11: None,
    Letter.P10: (1, Letter.P11),
    Letter.P1M1: (2, Letter.P10),
}

SphericalMonomial = tuple[int, int, int, int, int, int]


def spherical_monomial(powers: Mapping[Letter, int]) -> SphericalMonomial:
    exps = [0] * 6
    for letter, e in powers.items():
        exps[letter] += e
    return tuple(exps)  # type: ignore[return-value]


def degree(m: SphericalMonomial) -> int:
    return sum(m)


def psi_degree(m: SphericalMonomial) -> int:
    return m[3] + m[4] + m[5]


def weight(m: SphericalMonomial) -> int:
    return sum(w * e for w, e in zip(WEIGHTS, m, strict=True))


def monomial_norm_sq(m: SphericalMonomial) -> int:
    out = 1
    for n, e in zip(NORMS, m, strict=True):
        out *= factorial(e) * n**e
    return out


def order_key(m: SphericalMonomial) -> tuple:
    """Display and leading-term order: degree, then P11-heavy first, then fewest e11."""
    return (-degree(m), tuple(-e for e in m[3:]), m[:3])


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def sector_monomials(total_degree: int, m: int, *, antisymmetric: bool = True) -> list[SphericalMonomial]:
    """Monomials of the given degree and Lz weight, in display order."""
    out = [
        mono
        for mono in _compositions(total_degree, 6)
        if weight(mono) == m and (not antisymmetric or psi_degree(mono) % 2 == 1)  # type: ignore[arg-type]
    ]
    return sorted(out, key=order_key)  # type: ignore[arg-type]


@lru_cache(maxsize=16)
def letter_polynomial(letter: Letter) -> Polynomial:
    m = WEIGHTS[letter]
    return spherical_boson(m, 2) if letter < Letter.P11 else spherical_ground(m)


@lru_cache(maxsize=4096)
def expand_monomial(m: SphericalMonomial) -> Polynomial:
    out = Polynomial.constant(1)
    for letter, e in zip(Letter, m, strict=True):
        if e:
            out = poly_mul(out, letter_polynomial(letter) ** e)
    return out


class SphericalVector:
    """Gaussian-rational combination of spherical monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[SphericalMonomial, GaussianRational] | None = None):
        items = [(m, c) for m, c in (terms or {}).items() if c]
        items.sort(key=lambda mc: order_key(mc[0]))
        self._terms: dict[SphericalMonomial, GaussianRational] = dict(items)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Scalar, SphericalMonomial]]) -> SphericalVector:
        acc: dict[SphericalMonomial, GaussianRational] = {}
        for c, m in terms:
            acc[m] = acc.get(m, ZERO) + GaussianRational.of(c)
        return cls(acc)

    @classmethod
    def monomial(cls, m: SphericalMonomial) -> SphericalVector:
        return cls({m: ONE})

    def terms(self) -> Iterator[tuple[SphericalMonomial, GaussianRational]]:
        return iter(self._terms.items())

    def coefficient(self, m: SphericalMonomial) -> GaussianRational:
        return self._terms.get(m, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: SphericalVector) -> SphericalVector:
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, ZERO) + c
        return SphericalVector(acc)

    def __sub__(self, other: SphericalVector) -> SphericalVector:
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> SphericalVector:
        g = GaussianRational.of(c)
        return SphericalVector({m: g * x for m, x in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SphericalVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"SphericalVector({format_spherical(self)})"

    def weights(self) -> set[int]:
        return {weight(m) for m in self._terms}

    def expand(self) -> Polynomial:
        return poly_sum(expand_monomial(m).scale(c) for m, c in self._terms.items())

    def canonical(self) -> SphericalVector:
        """Primitive Gaussian-integer coordinates, leading coordinate in the first quadrant."""
        if not self._terms:
            raise ZeroPolynomialError("cannot normalise the zero spherical vector")
        return self.scale(primitive_multiplier([c for _, c in self.terms()]))

    def lower(self) -> SphericalVector:
        return _ladder(self, LOWER_IMAGE)

    def raise_(self) -> SphericalVector:
        return _ladder(self, RAISE_IMAGE)


def inner(a: SphericalVector, b: SphericalVector) -> GaussianRational:
    """Bargmann product in spherical coordinates; antilinear in ``a``."""
    re = Fraction(0)
    im = Fraction(0)
    for m, x in a.terms():
        y = b.coefficient(m)
        if y:
            p = x.conjugate() * y
            n = monomial_norm_sq(m)
            re += p.re * n
            im += p.im * n
    return GaussianRational(re, im)


def norm_sq(v: SphericalVector) -> Fraction:
    return sum((c.abs2() * monomial_norm_sq(m) for m, c in v.terms()), Fraction(0))


def _ladder(v: SphericalVector, images: Mapping[Letter, tuple[int, Letter] | None]) -> SphericalVector:
    acc: dict[SphericalMonomial, GaussianRational] = {}
    for m, c in v.terms():
        for letter in Letter:
            e = m[letter]
            image = images[letter]
            if not e or image is None:
                continue
            factor, target = image
            exps = list(m)
            exps[letter] -= 1
            exps[target] += 1
            key: SphericalMonomial = tuple(exps)  # type: ignore[assignment]
            acc[key] = acc.get(key, ZERO) + c * (e * factor)
    return SphericalVector(acc)


def combine(v: SphericalVector, corrections: Iterable[tuple[GaussianRational, SphericalVector]]) -> SphericalVector:
    acc = dict(v.terms())
    for c, w in corrections:
        for m, x in w.terms():
            acc[m] = acc.get(m, ZERO) + c * x
    return SphericalVector(acc)


# -- text form -----------------------------------------------------------------


def format_spherical(v: SphericalVector) -> str:
    return format_terms(
        (c, [(NAMES[i], e) for i, e in enumerate(m) if e]) for m, c in v.terms()
    )


def _resolve_letter(name: str, position: int) -> Letter:
    letter = _BY_NAME.get(name)
    if letter is None:
        raise ParseError(
            f"unknown spherical letter '{name}'",
            position=position,
            hint=f"use one of {', '.join(NAMES)}",
        )
    return letter


def parse_spherical(text: str) -> SphericalVector:
    return SphericalVector.from_terms(
        (c, spherical_monomial(powers)) for c, powers in parse_terms(text, _resolve_letter)
    )
