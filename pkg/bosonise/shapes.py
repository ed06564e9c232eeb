"""Shapes and the free-module decomposition over Euler bosons.

The shapes of a shell are the antisymmetric states orthogonal to every state
that contains an Euler boson, i.e. to every product (nonconstant Euler-boson
monomial) x (antisymmetric state of lower degree). Across all shells there are
N!^(d-1) of them, and every antisymmetric polynomial is uniquely
sum(Phi_i * Psi_i) with symmetric Phi_i.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from bosonise.algebra import (
    GaussianRational,
    Polynomial,
    canonical_form,
    inner_product,
    linear_combination,
    monomial_order_key,
    norm_sq,
    poly_mul,
    poly_sum,
)
from bosonise.errors import DecompositionError, IncompleteBasisError
from bosonise.fock import EulerBosonMonomial, ShellSpec, euler_monomials, slater_basis
from bosonise.linalg import EchelonBasis, gram_schmidt, nullspace, polynomial_vector
from bosonise.operators import is_antisymmetric

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Shape:
    polynomial: Polynomial
    shell: int
    norm_sq: Fraction

    @property
    def degree(self) -> int:
        return self.polynomial.degree()


ModuleColumns = tuple[EchelonBasis, tuple[tuple[int, EulerBosonMonomial], ...]]


@dataclass(frozen=True)
class ShapeBasis:
    particles: int
    dims: int
    shapes: tuple[Shape, ...]
    # decomposition systems per degree, filled on first use
    _columns: dict[int, ModuleColumns] = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def expected(self) -> int:
        return factorial(self.particles) ** (self.dims - 1)

    @property
    def complete(self) -> bool:
        return len(self.shapes) == self.expected

    def require_complete(self) -> None:
        if not self.complete:
            raise IncompleteBasisError(
                f"found {len(self.shapes)} of {self.expected} shapes for N={self.particles}, d={self.dims}",
                found=len(self.shapes),
                expected=self.expected,
                hint="raise --max-shell",
            )

    def __len__(self) -> int:
        return len(self.shapes)

    def __iter__(self) -> Iterator[Shape]:
        return iter(self.shapes)

    def __getitem__(self, i: int) -> Shape:
        return self.shapes[i]

    def polynomials(self) -> list[Polynomial]:
        return [s.polynomial for s in self.shapes]


@dataclass(frozen=True)
class ModuleDecomposition:
    """Symmetric coefficients Phi_i aligned with the shape basis order."""

    coefficients: tuple[Polynomial, ...]

    def reconstruct(self, basis: ShapeBasis) -> Polynomial:
        return poly_sum(poly_mul(phi, s.polynomial) for phi, s in zip(self.coefficients, basis, strict=True))

    def support(self) -> list[int]:
        """1-based indices of the nonzero Phi_i."""
        return [i for i, phi in enumerate(self.coefficients, start=1) if phi]


def euler_excited_subspace(spec: ShellSpec) -> list[Polynomial]:
    """Spanning set of the shell states that contain at least one Euler boson (may be dependent)."""
    out: list[Polynomial] = []
    for k in range(1, spec.shell + 1):
        lower = slater_basis(spec.with_shell(spec.shell - k))
        for boson in euler_monomials(spec.particles, spec.dims, k):
            out.extend(poly_mul(boson.polynomial, s.polynomial) for s in lower)
    return out


def _combine(v: Polynomial, corrections: list[tuple[GaussianRational, Polynomial]]) -> Polynomial:
    return poly_sum([v, *(w.scale(c) for c, w in corrections)])


def _leading_key(p: Polynomial):
    return monomial_order_key(p.leading()[0])


def shape_subspace(spec: ShellSpec) -> list[tuple[Polynomial, Fraction]]:
    """Orthogonal basis (with squared norms) of the shell's complement to the Euler-excited states."""
    states = [s.polynomial for s in slater_basis(spec)]
    excited = euler_excited_subspace(spec)
    matrix = [[inner_product(e, s) for s in states] for e in excited]
    kernel = nullspace(matrix, len(states))
    candidates = [linear_combination(x, states) for x in kernel]
    orthogonal = gram_schmidt(candidates, inner_product, _combine, Polynomial.is_zero)
    shapes = [canonical_form(p) for p, _ in orthogonal]
    shapes.sort(key=_leading_key, reverse=True)
    logger.debug(
        "shell N=%d d=%d s=%d: %d states, %d excited generators, %d shapes",
        spec.particles,
        spec.dims,
        spec.shell,
        len(states),
        len(excited),
        len(shapes),
    )
    return [(p, norm_sq(p)) for p in shapes]


def _default_workers() -> int:
    return min(8, os.cpu_count() or 4)


def full_shape_basis(particles: int, dims: int, max_shell: int, *, workers: int | None = None) -> ShapeBasis:
    """Shapes of shells 0..max_shell, computed in parallel and merged by shell index.

    The result may be incomplete; check ``complete`` or call ``require_complete``.
    """
    per_shell: dict[int, list[tuple[Polynomial, Fraction]]] = {}
    with ThreadPoolExecutor(max_workers=workers or _default_workers()) as pool:
        futures = {
            pool.submit(shape_subspace, ShellSpec(particles, dims, s)): s for s in range(max_shell + 1)
        }
        for future in as_completed(futures):
            per_shell[futures[future]] = future.result()

    shapes = tuple(
        Shape(p, s, n) for s in sorted(per_shell) for p, n in per_shell[s]
    )
    basis = ShapeBasis(particles, dims, shapes)
    if not basis.complete:
        logger.warning("only %d of %d shapes up to shell %d", len(shapes), basis.expected, max_shell)
    return basis


def complete_shape_basis(
    particles: int,
    dims: int,
    *,
    ceiling: int = 8,
    guard: Callable[[ShellSpec], object] | None = None,
) -> ShapeBasis:
    """Scan shells upward until all N!^(d-1) shapes are found.

    ``guard`` sees each shell before its basis is built and may raise to refuse it.
    """
    shapes: list[Shape] = []
    expected = factorial(particles) ** (dims - 1)
    for s in range(ceiling + 1):
        if guard is not None:
            guard(ShellSpec(particles, dims, s))
        shapes.extend(Shape(p, s, n) for p, n in shape_subspace(ShellSpec(particles, dims, s)))
        if len(shapes) >= expected:
            return ShapeBasis(particles, dims, tuple(shapes))
    raise IncompleteBasisError(
        f"found {len(shapes)} of {expected} shapes below shell {ceiling + 1}",
        found=len(shapes),
        expected=expected,
        hint="raise the shell ceiling",
    )


# -- decomposition -------------------------------------------------------------


def _module_columns(basis: ShapeBasis, degree: int) -> ModuleColumns:
    cached = basis._columns.get(degree)
    if cached is not None:
        return cached
    echelon: EchelonBasis = EchelonBasis()
    columns: list[tuple[int, EulerBosonMonomial]] = []
    for i, shape in enumerate(basis):
        k = degree - shape.degree
        if k < 0:
            continue
        for boson in euler_monomials(basis.particles, basis.dims, k):
            if not echelon.add(polynomial_vector(poly_mul(boson.polynomial, shape.polynomial))):
                raise DecompositionError(
                    f"module columns at degree {degree} are linearly dependent",
                    hint="the shape basis is not free; this is a library bug",
                )
            columns.append((i, boson))
    logger.debug("decomposition system at degree %d: %d columns", degree, len(columns))
    basis._columns[degree] = (echelon, tuple(columns))
    return basis._columns[degree]


def decompose(p: Polynomial, basis: ShapeBasis) -> ModuleDecomposition:
    """Unique symmetric Phi_i with p == sum(Phi_i * Psi_i)."""
    basis.require_complete()
    if not is_antisymmetric(p, basis.particles):
        raise DecompositionError(
            "decompose needs an antisymmetric polynomial",
            hint="only fermionic states have a shape decomposition",
        )
    phis: list[list[Polynomial]] = [[] for _ in basis]
    for degree, part in p.homogeneous_components().items():
        echelon, columns = _module_columns(basis, degree)
        coords = echelon.coordinates(polynomial_vector(part))
        if coords is None:
            raise DecompositionError(
                f"degree-{degree} part is outside the span of the shape module",
                hint="the shape basis is incomplete or the input is not antisymmetric",
            )
        for j, c in coords.items():
            i, boson = columns[j]
            phis[i].append(boson.polynomial.scale(c))
    return ModuleDecomposition(tuple(poly_sum(parts) for parts in phis))
