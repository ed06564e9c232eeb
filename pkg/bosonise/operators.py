"""Linear operators on Bargmann-space polynomials.

Operators are kept as formal sums of generator words (multiply by a variable,
differentiate by a variable) rather than matrices; a word applies right to
left. The angular momentum components are the Bargmann images of the
real-space ones, e.g. the z component becomes -i(t d/du - u d/dt), with the
other two obtained cyclically. The ladder operators carry no normalisation.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import NamedTuple

from bosonise.algebra import (
    ONE,
    ZERO,
    GaussianRational,
    I,
    Monomial,
    Polynomial,
    Scalar,
    VariableId,
)
from bosonise.errors import DimensionError

T_AXIS, U_AXIS, V_AXIS = 0, 1, 2


class GeneratorKind(str, Enum):
    MULTIPLY = "multiply"
    DIFFERENTIATE = "differentiate"


class Generator(NamedTuple):
    kind: GeneratorKind
    variable: VariableId


Word = tuple[Generator, ...]


def differentiate(p: Polynomial, v: VariableId) -> Polynomial:
    out: dict[Monomial, GaussianRational] = {}
    for m, c in p.terms():
        exps = dict(m)
        e = exps.get(v, 0)
        if not e:
            continue
        if e == 1:
            del exps[v]
        else:
            exps[v] = e - 1
        key = tuple(sorted(exps.items()))
        out[key] = out.get(key, ZERO) + c * e
    return Polynomial(out)


def multiply_by(p: Polynomial, v: VariableId) -> Polynomial:
    out: dict[Monomial, GaussianRational] = {}
    for m, c in p.terms():
        exps = dict(m)
        exps[v] = exps.get(v, 0) + 1
        out[tuple(sorted(exps.items()))] = c
    return Polynomial(out)


def _apply_word(word: Word, p: Polynomial) -> Polynomial:
    for g in reversed(word):
        if not p:
            break
        p = multiply_by(p, g.variable) if g.kind is GeneratorKind.MULTIPLY else differentiate(p, g.variable)
    return p


class LinearOperator:
    """Immutable formal sum of coefficient * word."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, GaussianRational] | None = None):
        self._terms: dict[Word, GaussianRational] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def identity(cls) -> LinearOperator:
        return cls({(): ONE})

    @classmethod
    def multiply(cls, v: VariableId) -> LinearOperator:
        return cls({(Generator(GeneratorKind.MULTIPLY, v),): ONE})

    @classmethod
    def derivative(cls, v: VariableId) -> LinearOperator:
        return cls({(Generator(GeneratorKind.DIFFERENTIATE, v),): ONE})

    def words(self) -> Iterable[tuple[Word, GaussianRational]]:
        return self._terms.items()

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply(self, p)

    def __add__(self, other: LinearOperator) -> LinearOperator:
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, ZERO) + c
        return LinearOperator(acc)

    def __sub__(self, other: LinearOperator) -> LinearOperator:
        return self + other.scale(-1)

    def __neg__(self) -> LinearOperator:
        return self.scale(-1)

    def scale(self, c: Scalar) -> LinearOperator:
        g = GaussianRational.of(c)
        return LinearOperator({w: g * x for w, x in self._terms.items()})

    def __mul__(self, c: Scalar) -> LinearOperator:
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: LinearOperator) -> LinearOperator:
        """Composition: (self @ other)(p) == self(other(p))."""
        acc: dict[Word, GaussianRational] = {}
        for wa, ca in self._terms.items():
            for wb, cb in other._terms.items():
                w = wa + wb
                acc[w] = acc.get(w, ZERO) + ca * cb
        return LinearOperator(acc)

    def __len__(self) -> int:
        return len(self._terms)


def apply(op: LinearOperator, p: Polynomial) -> Polynomial:
    out: dict[Monomial, GaussianRational] = {}
    for word, c in op.words():
        for m, x in _apply_word(word, p).terms():
            out[m] = out.get(m, ZERO) + c * x
    return Polynomial(out)


def commutator(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return a @ b - b @ a


# -- angular momentum ----------------------------------------------------------


def _require_3d(dims: int) -> None:
    if dims != 3:
        raise DimensionError(
            f"angular momentum needs d=3, got d={dims}",
            hint="the cyclic t, u, v structure only exists in three dimensions",
        )


def _one_particle_component(axis: int, particle: int) -> LinearOperator:
    # (a, b) such that the component is -i(a d/db - b d/da): v -> (t, u), cyclic.
    a, b = {V_AXIS: (T_AXIS, U_AXIS), T_AXIS: (U_AXIS, V_AXIS), U_AXIS: (V_AXIS, T_AXIS)}[axis]
    va, vb = VariableId(a, particle), VariableId(b, particle)
    body = LinearOperator.multiply(va) @ LinearOperator.derivative(vb) - (
        LinearOperator.multiply(vb) @ LinearOperator.derivative(va)
    )
    return body.scale(-I)


def angular_momentum(axis: int, *, particles: int, dims: int = 3, particle: int | None = None) -> LinearOperator:
    """Component ``axis`` (0=t, 1=u, 2=v) for one particle, or summed over all when particle is None."""
    _require_3d(dims)
    if axis not in (T_AXIS, U_AXIS, V_AXIS):
        raise DimensionError(f"axis {axis} out of range for d=3")
    if particle is not None:
        if not 1 <= particle <= particles:
            raise DimensionError(f"particle {particle} outside 1..{particles}")
        return _one_particle_component(axis, particle)
    total = LinearOperator()
    for j in range(1, particles + 1):
        total = total + _one_particle_component(axis, j)
    return total


def lz(particles: int, dims: int = 3) -> LinearOperator:
    return angular_momentum(V_AXIS, particles=particles, dims=dims)


class Direction(str, Enum):
    RAISE = "raise"
    LOWER = "lower"


def ladder(direction: Direction, *, particles: int, dims: int = 3) -> LinearOperator:
    """L+ = Lt + i*Lu, L- = Lt - i*Lu, totals over particles."""
    lt = angular_momentum(T_AXIS, particles=particles, dims=dims)
    lu = angular_momentum(U_AXIS, particles=particles, dims=dims)
    sign = ONE if direction is Direction.RAISE else -ONE
    return lt + lu.scale(sign * I)


def casimir(particles: int, dims: int = 3) -> LinearOperator:
    """L^2 realised as L- L+ + Lz^2 + Lz."""
    lower = ladder(Direction.LOWER, particles=particles, dims=dims)
    raise_ = ladder(Direction.RAISE, particles=particles, dims=dims)
    z = lz(particles, dims)
    return lower @ raise_ + z @ z + z


# -- permutations --------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """Bijection on particle labels 1..n; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise DimensionError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __call__(self, k: int) -> int:
        return self.images[k - 1] if k <= len(self.images) else k

    @property
    def sign(self) -> int:
        seen = [False] * len(self.images)
        s = 1
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.images[k] - 1
                length += 1
            if length % 2 == 0:
                s = -s
        return s


def transposition(i: int, j: int, n: int) -> Permutation:
    return Permutation.transposition(i, j, n)


def apply_permutation(p: Polynomial, sigma: Permutation) -> Polynomial:
    out: dict[Monomial, GaussianRational] = {}
    for m, c in p.terms():
        key = tuple(sorted((VariableId(v.axis, sigma(v.particle)), e) for v, e in m))
        out[key] = c
    return Polynomial(out)


def _transpositions(particles: int) -> Iterable[Permutation]:
    for i, j in combinations(range(1, particles + 1), 2):
        yield Permutation.transposition(i, j, particles)


def _require_particles(p: Polynomial, particles: int) -> None:
    if particles < 1 or p.particles() > particles:
        raise DimensionError(
            f"polynomial in {p.particles()} particle(s) checked as a {particles}-particle state",
            hint="pass the particle count of the configuration the state belongs to",
        )


def is_antisymmetric(p: Polynomial, particles: int) -> bool:
    """Odd under every transposition of particles 1..N; nonzero constants fail for N >= 2."""
    _require_particles(p, particles)
    neg = -p
    return all(apply_permutation(p, s) == neg for s in _transpositions(particles))


def is_symmetric(p: Polynomial, particles: int) -> bool:
    _require_particles(p, particles)
    return all(apply_permutation(p, s) == p for s in _transpositions(particles))
