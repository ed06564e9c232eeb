"""Tests for shape bases and the free-module decomposition."""

import random
from fractions import Fraction

import pytest

import bosonise.shapes as shapes_module
from bosonise.algebra import GaussianRational, Polynomial, canonical_form, inner_product, linear_combination
from bosonise.errors import DecompositionError, IncompleteBasisError, ResourceCapError
from bosonise.fock import (
    ShellSpec,
    coordinate_difference,
    discriminant,
    euler_monomials,
    shell_dimension,
    slater_basis,
    spherical_ground,
)
from bosonise.linalg import EchelonBasis, polynomial_rank, polynomial_vector
from bosonise.multiplets import psi4
from bosonise.operators import is_symmetric
from bosonise.shapes import (
    ModuleDecomposition,
    ShapeBasis,
    complete_shape_basis,
    decompose,
    euler_excited_subspace,
    full_shape_basis,
    shape_subspace,
)


class TestPairBasis:
    def test_contents(self, pair_basis):
        assert pair_basis.complete
        assert pair_basis.expected == 4
        assert pair_basis.polynomials() == [
            coordinate_difference(0),
            coordinate_difference(1),
            coordinate_difference(2),
            canonical_form(psi4()),
        ]

    def test_norms_and_shells(self, pair_basis):
        assert [s.norm_sq for s in pair_basis] == [2, 2, 2, 8]
        assert [s.shell for s in pair_basis] == [0, 0, 0, 2]
        assert [s.degree for s in pair_basis] == [1, 1, 1, 3]

    def test_first_shell_has_no_shapes(self):
        assert shape_subspace(ShellSpec(2, 3, 1)) == []

    def test_full_basis_matches_incremental_scan(self, pair_basis):
        full = full_shape_basis(2, 3, 2, workers=2)
        assert full.polynomials() == pair_basis.polynomials()

    def test_incomplete_below_second_shell(self):
        basis = full_shape_basis(2, 3, 1)
        assert not basis.complete
        assert len(basis) == 3
        with pytest.raises(IncompleteBasisError) as exc:
            basis.require_complete()
        assert (exc.value.found, exc.value.expected) == (3, 4)


class TestOtherConfigurations:
    def test_planar_triple_degrees(self, planar_triple_basis):
        assert planar_triple_basis.expected == 6
        assert [s.degree for s in planar_triple_basis] == [2, 3, 3, 3, 3, 4]

    def test_one_dimension_single_shape(self):
        basis = complete_shape_basis(2, 1)
        assert len(basis) == 1
        assert basis[0].polynomial == coordinate_difference(0)

    def test_ceiling_too_low(self):
        with pytest.raises(IncompleteBasisError) as exc:
            complete_shape_basis(2, 3, ceiling=1)
        assert exc.value.found == 3
        assert exc.value.hint

    def test_guard_sees_each_shell(self):
        seen = []
        complete_shape_basis(2, 3, guard=seen.append)
        assert [spec.shell for spec in seen] == [0, 1, 2]

    def test_guard_can_refuse(self):
        def guard(spec):
            if spec.shell > 1:
                raise ResourceCapError("too big", size=28, cap=10)

        with pytest.raises(ResourceCapError):
            complete_shape_basis(2, 3, guard=guard)


class TestShapeSubspace:
    @pytest.mark.parametrize("spec", [ShellSpec(2, 3, s) for s in range(4)] + [ShellSpec(3, 2, s) for s in range(3)])
    def test_rank_plus_shapes_is_dimension(self, spec):
        shapes = shape_subspace(spec)
        assert polynomial_rank(euler_excited_subspace(spec)) + len(shapes) == shell_dimension(spec)

    def test_shapes_orthogonal_to_excited_states(self):
        spec = ShellSpec(2, 3, 2)
        [(shape, _)] = shape_subspace(spec)
        for state in euler_excited_subspace(spec):
            assert not inner_product(shape, state)

    def test_product_of_shapes_is_not_an_euler_polynomial(self):
        echelon: EchelonBasis = EchelonBasis()
        for b in euler_monomials(2, 3, 2):
            echelon.add(polynomial_vector(b.polynomial))
        product = coordinate_difference(0) * coordinate_difference(1)
        assert is_symmetric(product, 2)
        assert not echelon.contains(polynomial_vector(product))


class TestDecompose:
    def test_fourth_shape(self, pair_basis):
        d = decompose(psi4(), pair_basis)
        assert d.support() == [4]
        assert d.coefficients[3] == Polynomial.constant(1)

    def test_ground_shape(self, pair_basis):
        d = decompose(coordinate_difference(1).scale(3), pair_basis)
        assert d.support() == [2]
        assert d.coefficients[1] == Polynomial.constant(3)

    def test_cube_of_top_ground_shape(self, pair_basis):
        d = decompose(spherical_ground(1) ** 3, pair_basis)
        assert set(d.support()) <= {1, 2, 3}
        assert d.reconstruct(pair_basis) == spherical_ground(1) ** 3

    def test_discriminant_times_fourth_shape(self, pair_basis):
        delta = discriminant(0, 2)
        d = decompose(delta * psi4(), pair_basis)
        assert d.support() == [4]
        assert d.coefficients[3] == delta

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_discriminant_powers_reconstruct(self, pair_basis, k):
        delta = discriminant(0, 2) ** k
        zero = Polynomial()
        d = ModuleDecomposition((zero, zero, zero, delta))
        assert d.support() == [4]
        assert d.reconstruct(pair_basis) == delta * psi4()

    def test_random_antisymmetric_reconstruct(self, pair_basis):
        rng = random.Random(20240611)
        for _ in range(50):
            shell = rng.randint(0, 4)
            states = [s.polynomial for s in slater_basis(ShellSpec(2, 3, shell))]
            coeffs = [GaussianRational(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-2, 2))) for _ in states]
            p = linear_combination(coeffs, states)
            d = decompose(p, pair_basis)
            assert d.reconstruct(pair_basis) == p
            for phi in d.coefficients:
                assert phi.is_zero() or is_symmetric(phi, 2)

    def test_mixed_degrees(self, pair_basis):
        p = coordinate_difference(0) + psi4()
        d = decompose(p, pair_basis)
        assert d.support() == [1, 4]

    def test_planar_triple(self, planar_triple_basis):
        p = planar_triple_basis[5].polynomial
        assert decompose(p, planar_triple_basis).support() == [6]

    def test_not_antisymmetric(self, pair_basis):
        with pytest.raises(DecompositionError) as exc:
            decompose(coordinate_difference(0) ** 2, pair_basis)
        assert exc.value.hint

    def test_incomplete_basis(self):
        with pytest.raises(IncompleteBasisError):
            decompose(psi4(), full_shape_basis(2, 3, 1))


class TestColumnCache:
    def test_columns_built_once_per_degree(self, pair_basis, mocker):
        basis = ShapeBasis(pair_basis.particles, pair_basis.dims, pair_basis.shapes)
        spy = mocker.spy(shapes_module, "euler_monomials")
        decompose(psi4(), basis)
        built = spy.call_count
        assert built > 0
        decompose(psi4().scale(2), basis)
        decompose(coordinate_difference(0) ** 3, basis)
        assert spy.call_count == built
        assert set(basis._columns) == {3}

    def test_cache_is_per_instance(self, pair_basis):
        first = ShapeBasis(pair_basis.particles, pair_basis.dims, pair_basis.shapes)
        second = ShapeBasis(pair_basis.particles, pair_basis.dims, pair_basis.shapes)
        decompose(psi4(), first)
        assert 3 in first._columns
        assert not second._columns

    def test_cache_ignored_by_equality(self, pair_basis):
        basis = ShapeBasis(pair_basis.particles, pair_basis.dims, pair_basis.shapes)
        decompose(psi4(), basis)
        fresh = ShapeBasis(pair_basis.particles, pair_basis.dims, pair_basis.shapes)
        assert basis == fresh
        assert hash(basis) == hash(fresh)
