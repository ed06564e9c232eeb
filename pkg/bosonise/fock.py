"""Fermionic shell bases and the symmetric-function alphabet.

A single particle in d dimensions has binom(n+d-1, d-1) oscillator states at
level n, one per monomial of degree n in its Bargmann variables. An N-fermion
shell at excitation s is the span of Slater determinants of N distinct
single-particle monomials with total degree E_min + s. The Euler bosons are
the elementary symmetric polynomials e_k taken separately on each axis.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from bosonise.algebra import (
    ONE,
    I,
    Polynomial,
    VariableId,
    monomial,
    poly_mul,
    poly_sum,
)
from bosonise.errors import DimensionError
from bosonise.operators import Permutation

logger = logging.getLogger(__name__)

Orbital = tuple[int, ...]


def level_multiplicity(n: int, dims: int) -> int:
    return comb(n + dims - 1, dims - 1)


def minimal_degree(particles: int, dims: int) -> int:
    """Smallest total degree of a nonzero antisymmetric polynomial (greedy level filling)."""
    remaining = particles
    total = 0
    n = 0
    while remaining > 0:
        take = min(remaining, level_multiplicity(n, dims))
        total += n * take
        remaining -= take
        n += 1
    return total


@dataclass(frozen=True)
class ShellSpec:
    particles: int
    dims: int
    shell: int

    def __post_init__(self) -> None:
        if self.particles < 1 or self.dims < 1 or self.shell < 0:
            raise DimensionError(
                f"invalid shell N={self.particles}, d={self.dims}, s={self.shell}",
                hint="need N >= 1, d >= 1 and s >= 0",
            )

    @property
    def total_degree(self) -> int:
        return minimal_degree(self.particles, self.dims) + self.shell

    def with_shell(self, shell: int) -> ShellSpec:
        return ShellSpec(self.particles, self.dims, shell)


def shell_dimension(spec: ShellSpec) -> int:
    """Independent count of the shell: occupations k_n of each level, weighted by binom(mult(n), k_n)."""
    target = spec.total_degree

    @lru_cache(maxsize=None)
    def count(level: int, particles_left: int, degree_left: int) -> int:
        if particles_left == 0:
            return 1 if degree_left == 0 else 0
        if level > degree_left:
            return 0
        mult = level_multiplicity(level, spec.dims)
        total = 0
        for k in range(min(mult, particles_left) + 1):
            if k * level > degree_left:
                break
            total += comb(mult, k) * count(level + 1, particles_left - k, degree_left - k * level)
        return total

    return count(0, spec.particles, target)


def single_particle_orbitals(dims: int, degree: int) -> list[Orbital]:
    """Exponent vectors of the given degree, highest in lex order first."""

    def rec(axis: int, left: int) -> Iterator[Orbital]:
        if axis == dims - 1:
            yield (left,)
            return
        for e in range(left, -1, -1):
            for rest in rec(axis + 1, left - e):
                yield (e, *rest)

    return list(rec(0, degree))


def orbital_polynomial(orbital: Orbital, particle: int) -> Polynomial:
    return Polynomial({monomial({VariableId(a, particle): e for a, e in enumerate(orbital)}): ONE})


def polynomial_determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Leibniz expansion; entries are polynomials."""
    n = len(matrix)
    terms = []
    for images in permutations(range(n)):
        sign = Permutation(tuple(k + 1 for k in images)).sign
        term = Polynomial.constant(sign)
        for row, col in enumerate(images):
            term = poly_mul(term, matrix[row][col])
            if not term:
                break
        terms.append(term)
    return poly_sum(terms)


@dataclass(frozen=True)
class SlaterState:
    occupied: tuple[Orbital, ...]
    polynomial: Polynomial = field(compare=False)

    @property
    def degree(self) -> int:
        return sum(sum(o) for o in self.occupied)


def slater_state(occupied: Sequence[Orbital]) -> SlaterState:
    n = len(occupied)
    matrix = [[orbital_polynomial(o, j) for j in range(1, n + 1)] for o in occupied]
    return SlaterState(tuple(occupied), polynomial_determinant(matrix))


def _occupations(dims: int, particles: int, total: int) -> Iterator[tuple[Orbital, ...]]:
    orbitals = [o for n in range(total + 1) for o in single_particle_orbitals(dims, n)]

    def rec(start: int, left: int, budget: int) -> Iterator[tuple[Orbital, ...]]:
        if left == 0:
            if budget == 0:
                yield ()
            return
        for i in range(start, len(orbitals)):
            deg = sum(orbitals[i])
            if deg > budget:
                break
            for rest in rec(i + 1, left - 1, budget - deg):
                yield (orbitals[i], *rest)

    yield from rec(0, particles, total)


@lru_cache(maxsize=64)
def slater_basis(spec: ShellSpec) -> tuple[SlaterState, ...]:
    """All Slater determinants of the shell; orbitals ordered by degree, then lex descending."""
    states = tuple(slater_state(occ) for occ in _occupations(spec.dims, spec.particles, spec.total_degree))
    logger.debug("slater basis N=%d d=%d s=%d: %d states", spec.particles, spec.dims, spec.shell, len(states))
    return states


# -- symmetric functions -------------------------------------------------------


@lru_cache(maxsize=256)
def elementary_symmetric(axis: int, k: int, particles: int) -> Polynomial:
    if not 1 <= k <= particles:
        raise DimensionError(f"e_{k} needs 1 <= k <= N={particles}")
    return poly_sum(
        Polynomial({monomial({VariableId(axis, j): 1 for j in group}): ONE})
        for group in combinations(range(1, particles + 1), k)
    )


def spherical_boson(m: int, particles: int, dims: int = 3) -> Polynomial:
    """e11 = -e1(t) - i e1(u), e10 = e1(v), e1m1 = e1(t) - i e1(u)."""
    if dims != 3:
        raise DimensionError(f"spherical components need d=3, got d={dims}")
    et = elementary_symmetric(0, 1, particles)
    eu = elementary_symmetric(1, 1, particles)
    if m == 1:
        return -et - eu.scale(I)
    if m == 0:
        return elementary_symmetric(2, 1, particles)
    if m == -1:
        return et - eu.scale(I)
    raise DimensionError(f"spherical index m={m} not in (-1, 0, 1)")


Generator = tuple[int, int]  # (axis, k)


@dataclass(frozen=True)
class EulerBosonMonomial:
    powers: tuple[tuple[Generator, int], ...]
    polynomial: Polynomial = field(compare=False)

    @property
    def degree(self) -> int:
        return sum(k * e for (_, k), e in self.powers)

    def name(self) -> str:
        if not self.powers:
            return "1"
        parts = []
        for (axis, k), e in self.powers:
            base = f"e{k}({'tuv'[axis] if axis < 3 else f'x{axis}'})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "*".join(parts)


@lru_cache(maxsize=128)
def euler_monomials(particles: int, dims: int, degree: int) -> tuple[EulerBosonMonomial, ...]:
    """Every product of e_k(axis) with total weight ``degree``; degree 0 gives the constant 1."""
    if degree < 0:
        raise DimensionError(f"negative degree {degree}")
    generators: list[Generator] = [(axis, k) for k in range(1, particles + 1) for axis in range(dims)]

    def rec(i: int, left: int) -> Iterator[tuple[tuple[Generator, int], ...]]:
        if left == 0:
            yield ()
            return
        if i == len(generators):
            return
        _, k = generators[i]
        for e in range(left // k, -1, -1):
            for rest in rec(i + 1, left - e * k):
                yield (((generators[i], e),) if e else ()) + rest

    out = []
    for powers in rec(0, degree):
        poly = Polynomial.constant(1)
        for (axis, k), e in powers:
            poly = poly_mul(poly, elementary_symmetric(axis, k, particles) ** e)
        out.append(EulerBosonMonomial(powers, poly))
    return tuple(out)


def discriminant(axis: int, particles: int) -> Polynomial:
    """(a1 - a2)^2 on one axis; the relative-motion boson of two particles."""
    if particles != 2:
        raise DimensionError(f"discriminants are implemented for N=2 only, got N={particles}")
    diff = Polynomial.variable(VariableId(axis, 1)) - Polynomial.variable(VariableId(axis, 2))
    return diff**2


def coordinate_difference(axis: int, i: int = 1, j: int = 2) -> Polynomial:
    """a_i - a_j; for N=2 the ground-state shapes Psi_1, Psi_2, Psi_3."""
    return Polynomial.variable(VariableId(axis, i)) - Polynomial.variable(VariableId(axis, j))


def spherical_ground(m: int) -> Polynomial:
    """Psi_11 = -Psi_1 - i Psi_2, Psi_10 = Psi_3, Psi_1m1 = Psi_1 - i Psi_2 (two particles)."""
    p1, p2 = coordinate_difference(0), coordinate_difference(1)
    if m == 1:
        return -p1 - p2.scale(I)
    if m == 0:
        return coordinate_difference(2)
    if m == -1:
        return p1 - p2.scale(I)
    raise DimensionError(f"spherical index m={m} not in (-1, 0, 1)")

