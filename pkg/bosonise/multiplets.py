"""Angular-momentum multiplets of the two-particle shells.

A shell is resolved from the top weight down. At each m the states already
known at m+1 are lowered; whatever the m-sector holds beyond them is the
orthogonal complement of the lowered states, which is exactly the kernel of
L+ there, and each vector found seeds a new multiplet with l = m. Degenerate
families are orthogonalised in a fixed candidate order: seed hints at the top
weight, then sector monomials with the most relative-motion letters first and
first appearance breaking ties. The ladders keep the relative-motion degree,
so that order splits off the pure relative-motion family before the mixed
ones. Every state is kept in primitive Gaussian-integer spherical coordinates,
so its squared norm is the table prefactor.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from bosonise.algebra import (
    UNITS,
    GaussianRational,
    I,
    Polynomial,
    canonical_form,
    inner_product,
    linear_combination,
    poly_mul,
    proportionality,
)
from bosonise.errors import BosonisationError, DimensionError
from bosonise.fock import ShellSpec, coordinate_difference, shell_dimension, slater_basis
from bosonise.linalg import coefficient_matrix, independent_subset, nullspace, polynomial_rank
from bosonise.operators import Direction, apply, ladder, lz
from bosonise.spherical import (
    SphericalVector,
    combine,
    format_spherical,
    inner,
    norm_sq,
    parse_spherical,
    psi_degree,
    sector_monomials,
)
from bosonise.textfmt import format_polynomial

logger = logging.getLogger(__name__)

ROMAN = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X")

# Candidate vectors tried before the sector monomials, per (shell, m).
SEED_HINTS: dict[tuple[int, int], tuple[str, ...]] = {
    (1, 2): ("1*e11*P11",),
    (2, 3): ("1*e11^2*P11", "1*P11^3"),
}

# Second-shell states with m >= 1 as printed in the reference table, with their squared norms.
TABLE1_REFERENCE: dict[str, tuple[str, int]] = {
    "233-I": ("1*e11^2*P11", 128),
    "232-I": ("2*e11*e10*P11+1*e11^2*P10", 192),
    "231-I": ("4*e10^2*P11+2*e11*e1m1*P11+8*e11*e10*P10+1*e11^2*P1m1", 1920),
    "233-II": ("1*P11^3", 384),
    "232-II": ("1*P11^2*P10", 64),
    "231-II": ("4*P10^2*P11+1*P11^2*P1m1", 640),
    "222": ("1*e11*e10*P11+-1*e11^2*P10", 96),
    "221": ("2*e10^2*P11+1*e11*e1m1*P11+-2*e11*e10*P10+-1*e11^2*P1m1", 384),
    "211-I": ("1*P10^2*P11+-1*P11^2*P1m1", 160),
    "211-II": ("-2*e10^2*P11+1*e11*e1m1*P11+2*e11*e10*P10+-1*e11^2*P1m1", 384),
    "211-III": ("1*e10^2*P11+-2*e11*e1m1*P11+2*e11*e10*P10+-1*e11^2*P1m1", 480),
}

_LABEL = re.compile(r"(\d)(\d)(m?\d)(?:-([IVX]+))?")


def format_m(m: int) -> str:
    return str(m) if m >= 0 else f"m{-m}"


@dataclass(frozen=True)
class Multiplet:
    """A 2l+1 ladder; ``states[k]`` has Lz eigenvalue l - k."""

    shell: int
    l: int  # noqa: E741
    family: int
    family_count: int
    states: tuple[SphericalVector, ...]
    norms_sq: tuple[Fraction, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "norms_sq", tuple(norm_sq(s) for s in self.states))

    @property
    def suffix(self) -> str:
        return f"-{ROMAN[self.family - 1]}" if self.family_count > 1 else ""

    @property
    def label(self) -> str:
        return self.state_label(self.l)

    def state_label(self, m: int) -> str:
        return f"{self.shell}{self.l}{format_m(m)}{self.suffix}"

    def state(self, m: int) -> SphericalVector:
        if not -self.l <= m <= self.l:
            raise KeyError(m)
        return self.states[self.l - m]

    def norm_sq(self, m: int) -> Fraction:
        return self.norms_sq[self.l - m]

    def polynomial(self, m: int) -> Polynomial:
        return self.state(m).expand()

    def ms(self) -> range:
        return range(self.l, -self.l - 1, -1)


@dataclass(frozen=True)
class ShellResolution:
    spec: ShellSpec
    multiplets: tuple[Multiplet, ...]

    @property
    def l_content(self) -> list[int]:
        return sorted((mp.l for mp in self.multiplets), reverse=True)

    @property
    def dimension(self) -> int:
        return sum(2 * mp.l + 1 for mp in self.multiplets)

    def states(self) -> list[tuple[str, SphericalVector]]:
        return [(mp.state_label(m), mp.state(m)) for mp in self.multiplets for m in mp.ms()]

    def multiplicity(self, l: int) -> int:  # noqa: E741
        return sum(1 for mp in self.multiplets if mp.l == l)


# -- generic polynomial sectors ------------------------------------------------


def lz_sector(states: list[Polynomial], m: int, *, particles: int = 2) -> list[Polynomial]:
    """Basis of the Lz = m eigenspace within the span of ``states`` (canonical forms)."""
    op = lz(particles)
    top = max((p.degree() for p in states), default=0)
    projected = []
    for p in states:
        q = p
        for k in range(-top, top + 1):
            if k == m:
                continue
            q = (apply(op, q) - q.scale(k)).scale(GaussianRational.of(Fraction(1, m - k)))
            if not q:
                break
        if q:
            projected.append(q)
    return [canonical_form(q) for q in independent_subset(projected)]


def highest_weight_vectors(states: list[Polynomial], m: int, *, particles: int = 2) -> list[Polynomial]:
    """Kernel of L+ on the m-sector of span(states)."""
    sector = lz_sector(states, m, particles=particles)
    raised = [apply(ladder(Direction.RAISE, particles=particles), p) for p in sector]
    kernel = nullspace(coefficient_matrix(raised), len(sector))
    return [canonical_form(linear_combination(x, sector)) for x in kernel]


def highest_weight_counts(spec: ShellSpec) -> dict[int, int]:
    """Number of highest-weight vectors at each m >= 0, from the Slater basis and L+ alone."""
    states = [s.polynomial for s in slater_basis(spec)]
    return {
        m: len(highest_weight_vectors(states, m, particles=spec.particles))
        for m in range(spec.total_degree, -1, -1)
    }


# -- shell resolution ----------------------------------------------------------


@dataclass
class _Ladder:
    l: int  # noqa: E741
    states: list[SphericalVector]


def _candidate_monomials(lowered: list[SphericalVector], sector: list) -> list[SphericalVector]:
    seen: dict = {}
    for v in lowered:
        for mono, _ in v.terms():
            seen.setdefault(mono, None)
    for mono in sector:
        seen.setdefault(mono, None)
    ordered = sorted(seen, key=lambda mono: -psi_degree(mono))
    return [SphericalVector.monomial(mono) for mono in ordered]


def _new_highest_weights(
    shell: int, m: int, total_degree: int, lowered: list[SphericalVector]
) -> list[SphericalVector]:
    sector = sector_monomials(total_degree, m)
    needed = len(sector) - len(lowered)
    if needed <= 0:
        return []
    candidates = [parse_spherical(h) for h in SEED_HINTS.get((shell, m), ())]
    candidates += _candidate_monomials(lowered, sector)
    ortho: list[tuple[SphericalVector, Fraction]] = [(v, norm_sq(v)) for v in lowered]
    found: list[SphericalVector] = []
    for c in candidates:
        r = combine(c, [(-(inner(w, c) / n), w) for w, n in ortho])
        if not r:
            continue
        r = r.canonical()
        ortho.append((r, norm_sq(r)))
        found.append(r)
        if len(found) == needed:
            break
    if len(found) != needed:
        raise BosonisationError(f"sector m={m} of shell {shell}: found {len(found)} of {needed} new states")
    return found


@lru_cache(maxsize=16)
def resolve_shell(spec: ShellSpec) -> ShellResolution:
    """Complete multiplet list of a two-particle shell in three dimensions."""
    if spec.particles != 2 or spec.dims != 3:
        raise DimensionError(
            f"multiplet resolution is implemented for N=2, d=3, got N={spec.particles}, d={spec.dims}",
        )
    e = spec.total_degree
    ladders: list[_Ladder] = []
    for m in range(e, -e - 1, -1):
        lowered = []
        for lad in ladders:
            if lad.l > m >= -lad.l:
                nxt = lad.states[-1].lower().canonical()
                lad.states.append(nxt)
                lowered.append(nxt)
        if m < 0:
            continue
        for v in _new_highest_weights(spec.shell, m, e, lowered):
            ladders.append(_Ladder(m, [v]))
            logger.debug("shell %d: new multiplet l=%d", spec.shell, m)

    counts: dict[int, int] = {}
    for lad in ladders:
        counts[lad.l] = counts.get(lad.l, 0) + 1
    seen: dict[int, int] = {}
    multiplets = []
    for lad in ladders:
        seen[lad.l] = seen.get(lad.l, 0) + 1
        multiplets.append(Multiplet(spec.shell, lad.l, seen[lad.l], counts[lad.l], tuple(lad.states)))
    resolution = ShellResolution(spec, tuple(multiplets))
    expected = shell_dimension(spec)
    if resolution.dimension != expected:
        raise BosonisationError(
            f"shell {spec.shell} resolved into {resolution.dimension} states, expected {expected}"
        )
    return resolution


def find_multiplet(resolution: ShellResolution, label: str) -> tuple[Multiplet, int]:
    """Look up a state label like '233-II' or '23m2-II'; returns the multiplet and m."""
    match = _LABEL.fullmatch(label)
    if match:
        shell, l, m_text, family = match.groups()
        m = -int(m_text[1:]) if m_text.startswith("m") else int(m_text)
        suffix = f"-{family}" if family else ""
        for mp in resolution.multiplets:
            if (mp.shell, mp.l, mp.suffix) == (int(shell), int(l), suffix) and -mp.l <= m <= mp.l:
                return mp, m
    raise KeyError(label)


def state_by_label(label: str, *, particles: int = 2, dims: int = 3) -> tuple[Multiplet, int]:
    match = _LABEL.fullmatch(label)
    if not match:
        raise KeyError(label)
    return find_multiplet(resolve_shell(ShellSpec(particles, dims, int(match.group(1)))), label)


# -- second-shell checks -------------------------------------------------------


@dataclass(frozen=True)
class Table1Row:
    label: str
    spherical: str
    polynomial: str
    norm_sq: Fraction
    matches_paper: bool
    in_reference_span: bool

    @property
    def key(self) -> str:
        return "psi_" + self.label.replace("-", "_")


def _matches_reference(label: str, state: SphericalVector, norm: Fraction) -> bool:
    ref = TABLE1_REFERENCE.get(label)
    if ref is None:
        return False
    text, ref_norm = ref
    c = proportionality(state.expand(), parse_spherical(text).expand())
    return c in UNITS and norm == ref_norm


def _family_group(label: str) -> str:
    return label.split("-")[0]


def _spans_agree(computed: list[Polynomial], reference: list[Polynomial]) -> bool:
    """True when both lists span the same space."""
    joint = polynomial_rank(computed + reference)
    return joint == polynomial_rank(computed) == polynomial_rank(reference)


def table1_report(resolution: ShellResolution | None = None) -> list[Table1Row]:
    """Second-shell states with m >= 1, checked against the reference table.

    ``matches_paper`` asks for the printed state itself (up to a unit, with the
    printed norm). Families sharing l and m are only fixed up to a choice of
    orthogonal basis, so ``in_reference_span`` compares the span of each such
    group with the span of the printed group instead.
    """
    res = resolution or resolve_shell(ShellSpec(2, 3, 2))
    computed: dict[str, list[Polynomial]] = {}
    for label, state in res.states():
        computed.setdefault(_family_group(label), []).append(state.expand())
    reference: dict[str, list[Polynomial]] = {}
    for label, (text, _) in TABLE1_REFERENCE.items():
        reference.setdefault(_family_group(label), []).append(parse_spherical(text).expand())
    rows = []
    for mp in res.multiplets:
        for m in range(mp.l, 0, -1):
            label = mp.state_label(m)
            state = mp.state(m)
            rows.append(
                Table1Row(
                    label=label,
                    spherical=format_spherical(state),
                    polynomial=format_polynomial(state.expand()),
                    norm_sq=mp.norm_sq(m),
                    matches_paper=_matches_reference(label, state, mp.norm_sq(m)),
                    in_reference_span=_spans_agree(
                        computed[_family_group(label)], reference.get(_family_group(label), [])
                    ),
                )
            )
    return rows


def psi4() -> Polynomial:
    return poly_mul(poly_mul(coordinate_difference(0), coordinate_difference(1)), coordinate_difference(2))


@dataclass(frozen=True)
class Psi4Check:
    identity_holds: bool
    residual: str
    overlapping: tuple[str, ...]
    orthogonal_elsewhere: bool

    def __bool__(self) -> bool:
        return self.identity_holds and self.orthogonal_elsewhere


def psi4_identity_check(resolution: ShellResolution | None = None) -> Psi4Check:
    """(1/4)(P11^2 P10 - P1m1^2 P10) == i Psi4, and Psi4 only overlaps the 23,+-2 states of family II."""
    lhs = parse_spherical("1/4*P11^2*P10+-1/4*P1m1^2*P10").expand()
    target = psi4().scale(I)
    residual = lhs - target
    res = resolution or resolve_shell(ShellSpec(2, 3, 2))
    p4 = psi4()
    overlapping = tuple(label for label, state in res.states() if inner_product(p4, state.expand()))
    septiplet = next(mp for mp in res.multiplets if mp.l == 3 and mp.family == 2)
    allowed = {septiplet.state_label(2), septiplet.state_label(-2)}
    return Psi4Check(
        identity_holds=not residual,
        residual=format_polynomial(residual),
        overlapping=overlapping,
        orthogonal_elsewhere=set(overlapping) <= allowed,
    )
