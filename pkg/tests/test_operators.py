"""Tests for angular momentum operators and particle permutations."""

import pytest

from bosonise.algebra import Polynomial, VariableId
from bosonise.errors import DimensionError
from bosonise.fock import ShellSpec, elementary_symmetric, slater_basis, spherical_boson, spherical_ground
from bosonise.operators import (
    Direction,
    LinearOperator,
    Permutation,
    angular_momentum,
    apply_permutation,
    casimir,
    commutator,
    is_antisymmetric,
    is_symmetric,
    ladder,
    lz,
    transposition,
)

L_PLUS = ladder(Direction.RAISE, particles=2)
L_MINUS = ladder(Direction.LOWER, particles=2)
L_Z = lz(2)


def var(axis: int, particle: int, power: int = 1) -> Polynomial:
    return Polynomial.variable(VariableId(axis, particle), power)


def shell_states(shell: int) -> list[Polynomial]:
    return [s.polynomial for s in slater_basis(ShellSpec(2, 3, shell))]


class TestComposition:
    def test_matmul_applies_right_operand_first(self):
        t = VariableId(0, 1)
        mul_then_diff = LinearOperator.derivative(t) @ LinearOperator.multiply(t)
        diff_then_mul = LinearOperator.multiply(t) @ LinearOperator.derivative(t)
        assert mul_then_diff(var(0, 1, 2)) == var(0, 1, 2).scale(3)
        assert diff_then_mul(var(0, 1, 2)) == var(0, 1, 2).scale(2)

    def test_identity(self):
        assert LinearOperator.identity()(var(1, 2)) == var(1, 2)

    def test_zero_operator(self):
        assert LinearOperator()(var(0, 1)).is_zero()
        assert commutator(L_Z, L_Z)(var(0, 1)).is_zero()


class TestEigenvalues:
    @pytest.mark.parametrize("m", [1, 0, -1])
    def test_spherical_bosons(self, m):
        e = spherical_boson(m, 2)
        assert L_Z(e) == e.scale(m)
        assert casimir(2)(e) == e.scale(2)

    @pytest.mark.parametrize("m", [1, 0, -1])
    def test_ground_shapes(self, m):
        p = spherical_ground(m)
        assert L_Z(p) == p.scale(m)
        assert casimir(2)(p) == p.scale(2)

    def test_rotational_invariant(self):
        r2 = sum((var(a, 1, 2) for a in range(3)), Polynomial())
        for op in (L_Z, L_PLUS, L_MINUS):
            assert op(r2).is_zero()


class TestLadders:
    def test_raise(self):
        assert L_PLUS(spherical_boson(0, 2)) == spherical_boson(1, 2)
        assert L_PLUS(spherical_boson(-1, 2)) == spherical_boson(0, 2).scale(2)
        assert L_PLUS(spherical_boson(1, 2)).is_zero()

    def test_lower(self):
        assert L_MINUS(spherical_boson(1, 2)) == spherical_boson(0, 2).scale(2)
        assert L_MINUS(spherical_boson(0, 2)) == spherical_boson(-1, 2)
        assert L_MINUS(spherical_boson(-1, 2)).is_zero()

    def test_ground_shape_ladder(self):
        assert L_PLUS(spherical_ground(0)) == spherical_ground(1)
        assert L_MINUS(spherical_ground(1)) == spherical_ground(0).scale(2)


class TestCommutationRelations:
    @pytest.mark.parametrize("shell", [0, 1, 2])
    def test_raise_lower(self, shell):
        op = commutator(L_PLUS, L_MINUS)
        for p in shell_states(shell):
            assert op(p) == L_Z(p).scale(2)

    @pytest.mark.parametrize("shell", [0, 1, 2])
    def test_z_with_ladders(self, shell):
        up = commutator(L_Z, L_PLUS)
        down = commutator(L_Z, L_MINUS)
        for p in shell_states(shell):
            assert up(p) == L_PLUS(p)
            assert down(p) == -L_MINUS(p)

    def test_operators_preserve_antisymmetry(self):
        for p in shell_states(1):
            for op in (L_Z, L_PLUS, L_MINUS):
                q = op(p)
                assert q.is_zero() or is_antisymmetric(q, 2)


class TestDimensionChecks:
    def test_lz_needs_three_dimensions(self):
        with pytest.raises(DimensionError) as exc:
            lz(2, dims=2)
        assert exc.value.hint

    def test_ladder_needs_three_dimensions(self):
        with pytest.raises(DimensionError):
            ladder(Direction.RAISE, particles=3, dims=4)

    def test_axis_range(self):
        with pytest.raises(DimensionError):
            angular_momentum(3, particles=2)

    def test_particle_range(self):
        with pytest.raises(DimensionError):
            angular_momentum(0, particles=2, particle=3)

    def test_single_particle_component(self):
        op = angular_momentum(2, particles=2, particle=1)
        assert op(var(0, 2)).is_zero()
        assert not op(var(0, 1)).is_zero()


class TestPermutations:
    def test_identity(self):
        assert Permutation.identity(3).sign == 1

    def test_transposition_sign(self):
        assert transposition(1, 3, 3).sign == -1
        assert transposition(1, 3, 3).images == (3, 2, 1)

    def test_cycle_signs(self):
        assert Permutation((2, 3, 1)).sign == 1
        assert Permutation((2, 3, 4, 1)).sign == -1

    def test_invalid(self):
        with pytest.raises(DimensionError):
            Permutation((1, 1))

    def test_labels_beyond_range_fixed(self):
        assert Permutation((2, 1))(3) == 3

    def test_apply(self):
        sigma = transposition(1, 2, 2)
        assert apply_permutation(var(0, 1) * var(1, 2), sigma) == var(0, 2) * var(1, 1)


class TestSymmetryChecks:
    def test_difference_antisymmetric(self):
        assert is_antisymmetric(var(0, 1) - var(0, 2), 2)
        assert not is_symmetric(var(0, 1) - var(0, 2), 2)

    def test_sum_symmetric(self):
        assert is_symmetric(var(0, 1) + var(0, 2), 2)
        assert not is_antisymmetric(var(0, 1) + var(0, 2), 2)

    def test_particle_count_is_explicit(self):
        assert not is_antisymmetric(var(0, 1), 2)
        assert not is_antisymmetric(Polynomial.constant(1), 2)
        assert is_antisymmetric(Polynomial(), 2)
        assert is_symmetric(Polynomial.constant(1), 3)

    def test_particle_count_too_small(self):
        with pytest.raises(DimensionError) as exc:
            is_antisymmetric(var(0, 1) - var(0, 3), 2)
        assert exc.value.hint
        with pytest.raises(DimensionError):
            is_symmetric(var(0, 1), 0)

    def test_slater_states_antisymmetric(self):
        for p in shell_states(2):
            assert is_antisymmetric(p, 2)

    def test_three_particle_determinant(self):
        for s in slater_basis(ShellSpec(3, 2, 0)):
            assert is_antisymmetric(s.polynomial, 3)

    @pytest.mark.parametrize("shell", [0, 1])
    def test_symmetric_times_antisymmetric(self, shell):
        bosons = [
            elementary_symmetric(0, 1, 2),
            elementary_symmetric(1, 2, 2),
            spherical_boson(1, 2),
            elementary_symmetric(2, 1, 2) ** 2,
        ]
        for phi in bosons:
            assert is_symmetric(phi, 2)
            for p in shell_states(shell):
                assert is_antisymmetric(phi * p, 2)

    def test_symmetric_times_symmetric_is_not_antisymmetric(self):
        phi = elementary_symmetric(0, 1, 2)
        assert not is_antisymmetric(phi * phi, 2)
