"""Centre-of-mass / relative-motion separation for two particles.

Per axis a, C_a = a1 + a2 and R_a = a1 - a2, so a1 = (C_a + R_a)/2 and
a2 = (C_a - R_a)/2. CM/RM polynomials reuse VariableId with particle 1 standing
for C and particle 2 for R; ``format_cm_rm`` prints them as C_t, R_t, ...

A pure relative-motion state of two fermions is odd under R -> -R and can be
written P t + Q u + R v + S tuv with P, Q, R, S functions of the squares
t^2, u^2, v^2 only (t = R_t etc.).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from bosonise.algebra import (
    GaussianRational,
    Monomial,
    Polynomial,
    VariableId,
    substitute,
)
from bosonise.errors import ClassificationError, DimensionError
from bosonise.multiplets import Multiplet
from bosonise.shapes import ModuleDecomposition, ShapeBasis, decompose
from bosonise.textfmt import AXIS_LETTERS, format_terms

logger = logging.getLogger(__name__)

CM, RM = 1, 2
HALF = GaussianRational(Fraction(1, 2))


def cm_variable(axis: int) -> VariableId:
    return VariableId(axis, CM)


def rm_variable(axis: int) -> VariableId:
    return VariableId(axis, RM)


def _require_two(p: Polynomial) -> None:
    if p.particles() > 2:
        raise DimensionError(
            f"CM/RM separation needs N=2, polynomial mentions particle {p.particles()}",
            hint="Jacobi coordinates for N >= 3 are not supported",
        )


def cm_rm_substitute(p: Polynomial) -> Polynomial:
    """Rewrite p(a1, a2) in the C/R variables."""
    _require_two(p)
    images = {}
    for axis in {v.axis for v in p.variables()}:
        c = Polynomial.variable(cm_variable(axis))
        r = Polynomial.variable(rm_variable(axis))
        images[VariableId(axis, 1)] = (c + r).scale(HALF)
        images[VariableId(axis, 2)] = (c - r).scale(HALF)
    return substitute(p, images)


def cm_rm_restore(q: Polynomial) -> Polynomial:
    """Inverse of cm_rm_substitute: C -> a1 + a2, R -> a1 - a2."""
    images = {}
    for axis in {v.axis for v in q.variables()}:
        a1 = Polynomial.variable(VariableId(axis, 1))
        a2 = Polynomial.variable(VariableId(axis, 2))
        images[cm_variable(axis)] = a1 + a2
        images[rm_variable(axis)] = a1 - a2
    return substitute(q, images)


def format_cm_rm(q: Polynomial) -> str:
    def name(v: VariableId) -> str:
        letter = AXIS_LETTERS[v.axis] if v.axis < len(AXIS_LETTERS) else f"x{v.axis}"
        return f"{'C' if v.particle == CM else 'R'}_{letter}"

    return format_terms((c, [(name(v), e) for v, e in m]) for m, c in q.terms())


def is_pure_rm(p: Polynomial) -> bool:
    return all(v.particle == RM for v in cm_rm_substitute(p).variables())


@dataclass(frozen=True)
class RmForm:
    """P t + Q u + R v + S tuv in the relative variables; each slot even in every variable."""

    p: Polynomial
    q: Polynomial
    r: Polynomial
    s: Polynomial

    def slots(self) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
        return self.p, self.q, self.r, self.s

    def reconstruct(self) -> Polynomial:
        t, u, v = (Polynomial.variable(rm_variable(a)) for a in range(3))
        return self.p * t + self.q * u + self.r * v + self.s * t * u * v


def _divide(m: Monomial, axes: tuple[int, ...]) -> Monomial:
    exps = dict(m)
    for a in axes:
        key = rm_variable(a)
        exps[key] -= 1
        if not exps[key]:
            del exps[key]
    return tuple(sorted(exps.items()))


def rm_form(p: Polynomial) -> RmForm:
    """Split an odd pure-RM polynomial into its (P, Q, R, S) slots.

    A term odd in exactly one variable goes to that variable's slot; a term odd
    in all three goes to S.
    """
    q = cm_rm_substitute(p)
    if any(v.particle != RM for v in q.variables()):
        raise ClassificationError("rm_form needs a pure relative-motion polynomial")
    if any(v.axis > 2 for v in q.variables()):
        raise DimensionError("rm_form is defined for d <= 3")
    slots: list[dict[Monomial, GaussianRational]] = [{}, {}, {}, {}]
    for m, c in q.terms():
        exps = {v.axis: e for v, e in m}
        odd = tuple(a for a in range(3) if exps.get(a, 0) % 2)
        if len(odd) == 1:
            slots[odd[0]][_divide(m, odd)] = c
        elif len(odd) == 3:
            slots[3][_divide(m, odd)] = c
        else:
            raise ClassificationError(
                "rm_form needs a polynomial odd under R -> -R",
                hint="antisymmetric two-particle states always are",
            )
    return RmForm(*(Polynomial(s) for s in slots))


@dataclass(frozen=True)
class RmQuanta:
    total_quanta: int
    l: int  # noqa: E741
    n_r: int


def rm_quanta(multiplet: Multiplet, pure_rm: bool) -> RmQuanta:
    """Radial quanta n_r = (n - l)/2 of a pure relative-motion ladder."""
    if not pure_rm:
        raise ClassificationError(f"multiplet {multiplet.label} is not pure relative motion")
    n = multiplet.polynomial(multiplet.l).degree()
    if (n - multiplet.l) % 2:
        raise ClassificationError(
            f"multiplet {multiplet.label}: n={n}, l={multiplet.l} have different parity",
            hint="each radial quantum carries two oscillator quanta",
        )
    return RmQuanta(total_quanta=n, l=multiplet.l, n_r=(n - multiplet.l) // 2)


class Band(str, Enum):
    ROTATIONAL = "rotational"
    VIBRATIONAL = "vibrational"


@dataclass(frozen=True)
class BandAssignment:
    band: Band
    phi_support: tuple[int, ...]


def classify_band(decomposition: ModuleDecomposition, basis: ShapeBasis) -> BandAssignment:
    """Rotational iff some nonzero coefficient sits on a shape above the ground shell."""
    support = decomposition.support()
    excited = any(basis[i - 1].shell > 0 for i in support)
    return BandAssignment(Band.ROTATIONAL if excited else Band.VIBRATIONAL, tuple(support))


def band_assign(p: Polynomial, basis: ShapeBasis) -> BandAssignment:
    return classify_band(decompose(p, basis), basis)


def multiplet_band(multiplet: Multiplet, basis: ShapeBasis) -> BandAssignment:
    """Band of a whole ladder: rotational if any of its states is."""
    support: set[int] = set()
    band = Band.VIBRATIONAL
    for m in multiplet.ms():
        assignment = band_assign(multiplet.polynomial(m), basis)
        support.update(assignment.phi_support)
        if assignment.band is Band.ROTATIONAL:
            band = Band.ROTATIONAL
    return BandAssignment(band, tuple(sorted(support)))
