"""Holomorphic shapes of three particles in the plane.

With w_j = t_j + i u_j a polynomial is holomorphic (a polynomial in the w_j
alone) iff every dbar_j = (d/dt_j + i d/du_j)/2 annihilates it. Among the six
shapes of N=3, d=2 the degree-3 ones span a space whose holomorphic part is
one-dimensional and spanned by the Vandermonde product (w1-w2)(w1-w3)(w2-w3).
The mirror convention w = t - i u swaps holomorphic and antiholomorphic and
changes nothing below up to conjugation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from bosonise.algebra import (
    GaussianRational,
    I,
    Polynomial,
    VariableId,
    canonical_form,
    linear_combination,
    poly_mul,
)
from bosonise.errors import DimensionError, HolomorphyError
from bosonise.fock import polynomial_determinant
from bosonise.linalg import coefficient_matrix, nullspace
from bosonise.operators import differentiate, is_antisymmetric
from bosonise.shapes import ShapeBasis, complete_shape_basis
from bosonise.textfmt import format_polynomial

logger = logging.getLogger(__name__)

HALF = GaussianRational.of(1) / 2


def _require_plane(p: Polynomial, dims: int) -> None:
    if dims != 2 or any(v.axis > 1 for v in p.variables()):
        raise DimensionError(f"dbar needs d=2, got d={dims}", hint="holomorphy is a planar notion")


def dbar(p: Polynomial, j: int, *, dims: int = 2) -> Polynomial:
    _require_plane(p, dims)
    dt = differentiate(p, VariableId(0, j))
    du = differentiate(p, VariableId(1, j))
    return (dt + du.scale(I)).scale(HALF)


@dataclass(frozen=True)
class HolomorphicFrame:
    particles: int

    def w(self, j: int) -> Polynomial:
        return Polynomial.variable(VariableId(0, j)) + Polynomial.variable(VariableId(1, j)).scale(I)

    def w_bar(self, j: int) -> Polynomial:
        return Polynomial.variable(VariableId(0, j)) - Polynomial.variable(VariableId(1, j)).scale(I)

    def t(self, j: int) -> Polynomial:
        """t_j = (w_j + w_bar_j)/2, as a check of invertibility."""
        return (self.w(j) + self.w_bar(j)).scale(HALF)

    def u(self, j: int) -> Polynomial:
        """u_j = (w_j - w_bar_j)/(2i)."""
        return (self.w(j) - self.w_bar(j)).scale(GaussianRational.of(1) / (I * 2))


def holomorphic_frame(particles: int) -> HolomorphicFrame:
    return HolomorphicFrame(particles)


def is_holomorphic(p: Polynomial, particles: int) -> bool:
    if particles < 1 or p.particles() > particles:
        raise DimensionError(
            f"polynomial in {p.particles()} particle(s) checked as a {particles}-particle state",
            hint="pass the particle count of the configuration",
        )
    return all(not dbar(p, j) for j in range(1, particles + 1))


def vandermonde(particles: int = 3) -> Polynomial:
    """prod_{i<j} (w_i - w_j)."""
    frame = holomorphic_frame(particles)
    out = Polynomial.constant(1)
    for i, j in combinations(range(1, particles + 1), 2):
        out = poly_mul(out, frame.w(i) - frame.w(j))
    return out


def vandermonde_determinant(particles: int = 3) -> Polynomial:
    """det[w_j^(N-1-k)] with rows k = 0..N-1, columns j = 1..N."""
    frame = holomorphic_frame(particles)
    matrix = [[frame.w(j) ** (particles - 1 - k) for j in range(1, particles + 1)] for k in range(particles)]
    return polynomial_determinant(matrix)


def holomorphic_combinations(shapes: list[Polynomial], particles: int) -> list[Polynomial]:
    """Basis of the holomorphic polynomials in span(shapes)."""
    images = [[dbar(s, j) for s in shapes] for j in range(1, particles + 1)]
    rows = [row for per_particle in images for row in coefficient_matrix(per_particle)]
    kernel = nullspace(rows, len(shapes))
    return [canonical_form(linear_combination(x, shapes)) for x in kernel]


def holomorphic_shape(basis: ShapeBasis | None = None) -> Polynomial:
    """The unique holomorphic combination of the degree-3 shapes of N=3, d=2."""
    basis = basis or complete_shape_basis(3, 2)
    basis.require_complete()
    cubic = [s.polynomial for s in basis if s.degree == 3]
    found = holomorphic_combinations(cubic, basis.particles)
    if len(found) != 1:
        raise HolomorphyError(
            f"holomorphic part of the degree-3 shape span has dimension {len(found)}",
            dimension=len(found),
        )
    return found[0]


@dataclass(frozen=True)
class LaughlinSummary:
    shape_count: int
    complete: bool
    shape_degrees: tuple[int, ...]
    shape_holomorphic: tuple[bool, ...]
    holomorphic_dimension: int
    holomorphic_combination: str
    vandermonde: str
    vandermonde_match: bool
    determinant_match: bool
    antisymmetric: bool


def laughlin_report(basis: ShapeBasis | None = None) -> LaughlinSummary:
    basis = basis or complete_shape_basis(3, 2)
    cubic = [s.polynomial for s in basis if s.degree == 3]
    found = holomorphic_combinations(cubic, basis.particles)
    target = canonical_form(vandermonde(3))
    generator = found[0] if len(found) == 1 else None
    logger.debug("holomorphic dimension %d among %d cubic shapes", len(found), len(cubic))
    return LaughlinSummary(
        shape_count=len(basis),
        complete=basis.complete,
        shape_degrees=tuple(s.degree for s in basis),
        shape_holomorphic=tuple(is_holomorphic(s.polynomial, basis.particles) for s in basis),
        holomorphic_dimension=len(found),
        holomorphic_combination=format_polynomial(generator) if generator is not None else "0",
        vandermonde=format_polynomial(target),
        vandermonde_match=generator == target,
        determinant_match=canonical_form(vandermonde_determinant(3)) == target,
        antisymmetric=generator is not None and is_antisymmetric(generator, basis.particles),
    )
