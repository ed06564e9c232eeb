"""Exact linear algebra over the Gaussian rationals.

Dense kernels (rref, nullspace) hand lists of rows to sympy's DomainMatrix
over QQ_I and read the result back as GaussianRational. The
incremental EchelonBasis works on sparse vectors keyed by anything hashable,
most often the monomials of a Polynomial, and remembers how each reduced row
was combined from the inputs so coordinates can be read back.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Sequence
from fractions import Fraction
from typing import Generic, TypeVar

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from bosonise.algebra import ONE, ZERO, GaussianRational, Polynomial

K = TypeVar("K", bound=Hashable)
T = TypeVar("T")

Matrix = list[list[GaussianRational]]


def _axpy(dst: dict, c: GaussianRational, src: dict) -> None:
    """dst += c * src, dropping entries that cancel."""
    for k, x in src.items():
        y = dst.get(k, ZERO) + c * x
        if y:
            dst[k] = y
        else:
            dst.pop(k, None)


# -- dense kernels -------------------------------------------------------------


def _domain_matrix(matrix: Sequence[Sequence[GaussianRational]], ncols: int) -> DomainMatrix:
    rows = [[x.to_domain() for x in row] for row in matrix]
    return DomainMatrix(rows, (len(rows), ncols), QQ_I)


def _from_rows(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[GaussianRational.from_domain(x) for x in row] for row in rows]


def rref(matrix: Sequence[Sequence[GaussianRational]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and the pivot column of each row."""
    if not matrix:
        return [], []
    reduced, pivots = _domain_matrix(matrix, len(matrix[0])).rref()
    return _from_rows(reduced.to_list()[: len(pivots)]), list(pivots)


def _free_column(vector: list[GaussianRational]) -> int:
    return max(j for j, x in enumerate(vector) if x)


def nullspace(matrix: Sequence[Sequence[GaussianRational]], ncols: int) -> Matrix:
    """Basis of {x : matrix @ x = 0}, one vector per free column, in column order.

    Each vector is 1 at its free column and 0 at the other free columns.
    ``ncols`` is explicit so an empty matrix yields the whole space.
    """
    if not matrix:
        return [[ONE if i == j else ZERO for j in range(ncols)] for i in range(ncols)]
    if not ncols:
        return []
    basis: Matrix = []
    for row in _from_rows(_domain_matrix(matrix, ncols).nullspace().to_list()):
        # sympy may scale the vectors; the free column is the last nonzero entry
        inv = ONE / next(x for x in reversed(row) if x)
        basis.append([inv * x for x in row])
    return sorted(basis, key=_free_column)


# -- incremental sparse elimination ------------------------------------------


class EchelonBasis(Generic[K]):
    """Fully reduced echelon form of the sparse vectors offered so far.

    Every offered vector gets an input index (dependent ones included), and
    each stored row keeps its combination in terms of those indices.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[K, dict[K, GaussianRational], dict[int, GaussianRational]]] = []
        self._offered = 0

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def offered(self) -> int:
        return self._offered

    def reduce(
        self, vector: dict[K, GaussianRational]
    ) -> tuple[dict[K, GaussianRational], dict[int, GaussianRational]]:
        """Split vector into a residual and input coordinates: vector = residual + sum(c_j * input_j)."""
        residual = dict(vector)
        coords: dict[int, GaussianRational] = {}
        for pivot, row, combo in self._rows:
            c = residual.get(pivot)
            if c:
                _axpy(residual, -c, row)
                _axpy(coords, c, combo)
        return residual, coords

    def add(self, vector: dict[K, GaussianRational]) -> bool:
        """Offer a vector; True if it enlarged the span."""
        index = self._offered
        self._offered += 1
        residual, coords = self.reduce(vector)
        if not residual:
            return False
        combo = {j: -c for j, c in coords.items()}
        combo[index] = ONE
        pivot = next(iter(residual))
        inv = ONE / residual[pivot]
        row = {k: inv * x for k, x in residual.items()}
        combo = {j: inv * x for j, x in combo.items()}
        for _, other, other_combo in self._rows:
            c = other.get(pivot)
            if c:
                _axpy(other, -c, row)
                _axpy(other_combo, -c, combo)
        self._rows.append((pivot, row, combo))
        return True

    def coordinates(self, vector: dict[K, GaussianRational]) -> dict[int, GaussianRational] | None:
        """Input coordinates of vector, or None when it lies outside the span."""
        residual, coords = self.reduce(vector)
        return None if residual else coords

    def contains(self, vector: dict[K, GaussianRational]) -> bool:
        return not self.reduce(vector)[0]


def polynomial_vector(p: Polynomial) -> dict:
    return dict(p.terms())


def polynomial_rank(polys: Sequence[Polynomial]) -> int:
    basis: EchelonBasis = EchelonBasis()
    for p in polys:
        basis.add(polynomial_vector(p))
    return len(basis)


def independent_subset(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """The polynomials that enlarge the span, in input order."""
    basis: EchelonBasis = EchelonBasis()
    return [p for p in polys if basis.add(polynomial_vector(p))]


def coefficient_matrix(polys: Sequence[Polynomial]) -> Matrix:
    """Rows indexed by monomials (first-appearance order), columns by polys."""
    index: dict = {}
    for p in polys:
        for m, _ in p.terms():
            index.setdefault(m, len(index))
    rows = [[ZERO] * len(polys) for _ in index]
    for j, p in enumerate(polys):
        for m, c in p.terms():
            rows[index[m]][j] = c
    return rows


def gram_schmidt(
    vectors: Sequence[T],
    inner: Callable[[T, T], GaussianRational],
    combine: Callable[[T, Sequence[tuple[GaussianRational, T]]], T],
    is_zero: Callable[[T], bool],
) -> list[tuple[T, Fraction]]:
    """Orthogonal (not normalised) basis of the span with squared norms.

    ``combine(v, [(c, w), ...])`` must return v + sum(c * w). Vectors that
    become zero are dropped.
    """
    out: list[tuple[T, Fraction]] = []
    for v in vectors:
        corrections = [(-(inner(w, v) / n), w) for w, n in out]
        r = combine(v, [(c, w) for c, w in corrections if c])
        if is_zero(r):
            continue
        out.append((r, inner(r, r).re))
    return out
