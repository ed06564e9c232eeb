"""Tests for the spherical alphabet of the two-particle problem."""

import pytest

from bosonise.algebra import GaussianRational, inner_product
from bosonise.algebra import norm_sq as poly_norm_sq
from bosonise.errors import ParseError, ZeroPolynomialError
from bosonise.operators import Direction, ladder, lz
from bosonise.spherical import (
    NORMS,
    Letter,
    SphericalVector,
    combine,
    degree,
    expand_monomial,
    format_spherical,
    inner,
    letter_polynomial,
    monomial_norm_sq,
    norm_sq,
    parse_spherical,
    psi_degree,
    sector_monomials,
    spherical_monomial,
    weight,
)

L_PLUS = ladder(Direction.RAISE, particles=2)
L_MINUS = ladder(Direction.LOWER, particles=2)


class TestLetters:
    @pytest.mark.parametrize("letter", list(Letter))
    def test_norms_match_polynomial_norms(self, letter):
        assert poly_norm_sq(letter_polynomial(letter)) == NORMS[letter]

    def test_letters_mutually_orthogonal(self):
        for a in Letter:
            for b in Letter:
                if a != b:
                    assert not inner_product(letter_polynomial(a), letter_polynomial(b))

    @pytest.mark.parametrize("letter", list(Letter))
    def test_weights_are_lz_eigenvalues(self, letter):
        p = letter_polynomial(letter)
        m = weight(spherical_monomial({letter: 1}))
        assert lz(2)(p) == p.scale(m)


class TestMonomials:
    def test_degree_bookkeeping(self):
        m = spherical_monomial({Letter.E11: 2, Letter.P11: 1})
        assert degree(m) == 3
        assert psi_degree(m) == 1
        assert weight(m) == 3

    def test_norm_formula(self):
        m = spherical_monomial({Letter.E11: 2, Letter.P11: 1})
        assert monomial_norm_sq(m) == 128
        assert poly_norm_sq(expand_monomial(m)) == 128
        assert monomial_norm_sq(spherical_monomial({Letter.P11: 3})) == 384

    def test_sector_sizes(self):
        assert len(sector_monomials(3, 3)) == 2
        assert len(sector_monomials(3, 1)) == 6
        assert len(sector_monomials(3, 3, antisymmetric=False)) == 4

    def test_sector_members_have_odd_psi_degree(self):
        for m in sector_monomials(3, 0):
            assert weight(m) == 0
            assert psi_degree(m) % 2 == 1


class TestSphericalVector:
    def test_zero(self):
        assert SphericalVector().is_zero()
        assert not SphericalVector.from_terms([(1, (1, 0, 0, 0, 0, 0)), (-1, (1, 0, 0, 0, 0, 0))])

    def test_arithmetic(self):
        a = parse_spherical("1*P11^3")
        b = parse_spherical("1*e11^2*P11")
        assert (a + b) - b == a
        assert a.scale(2) == a + a
        assert len(a + b) == 2

    def test_weights(self):
        v = SphericalVector.from_terms((1, m) for m in sector_monomials(3, 1))
        assert v.weights() == {1}

    def test_inner_matches_polynomial_product(self):
        ms = sector_monomials(3, 1)
        a = SphericalVector.from_terms((GaussianRational.of(k + 1j), m) for k, m in enumerate(ms))
        b = SphericalVector.from_terms((GaussianRational.of(2 - k * 1j), m) for k, m in enumerate(ms))
        assert inner(a, b) == inner_product(a.expand(), b.expand())
        assert norm_sq(a) == poly_norm_sq(a.expand())

    @pytest.mark.parametrize("m", [3, 1, 0, -2])
    def test_lower_matches_operator(self, m):
        for mono in sector_monomials(3, m):
            v = SphericalVector.monomial(mono)
            assert v.lower().expand() == L_MINUS(v.expand())

    @pytest.mark.parametrize("m", [2, 0, -1, -3])
    def test_raise_matches_operator(self, m):
        for mono in sector_monomials(3, m):
            v = SphericalVector.monomial(mono)
            assert v.raise_().expand() == L_PLUS(v.expand())

    def test_top_states_annihilated_by_raise(self):
        for mono in sector_monomials(3, 3):
            assert SphericalVector.monomial(mono).raise_().is_zero()

    def test_canonical(self):
        v = parse_spherical("-2*P11^3")
        assert v.canonical() == parse_spherical("1*P11^3")
        assert v.canonical().canonical() == v.canonical()

    def test_canonical_of_zero(self):
        with pytest.raises(ZeroPolynomialError):
            SphericalVector().canonical()

    def test_combine(self):
        a = parse_spherical("1*P11^3")
        b = parse_spherical("1*e11^2*P11")
        assert combine(a, [(GaussianRational.of(3), b)]) == a + b.scale(3)


class TestTextForm:
    def test_single_term_round_trip(self):
        assert format_spherical(parse_spherical("1*e11^2*P11")) == "1*e11^2*P11"

    def test_multi_term_parse(self):
        v = parse_spherical("1*P10^2*P11+-1*P11^2*P1m1")
        p10_p11 = spherical_monomial({Letter.P10: 2, Letter.P11: 1})
        p11_p1m1 = spherical_monomial({Letter.P11: 2, Letter.P1M1: 1})
        assert v.coefficient(p10_p11) == GaussianRational.of(1)
        assert v.coefficient(p11_p1m1) == GaussianRational.of(-1)

    def test_round_trip_multi_term(self):
        v = parse_spherical("4*P10^2*P11+1*P11^2*P1m1+(1+2i)*e10*e11*P1m1")
        assert parse_spherical(format_spherical(v)) == v

    def test_unknown_letter(self):
        with pytest.raises(ParseError) as exc:
            parse_spherical("1*e12*P11")
        assert exc.value.position == 2
        assert "e11" in exc.value.hint

    def test_repr(self):
        assert "P11^3" in repr(parse_spherical("1*P11^3"))
