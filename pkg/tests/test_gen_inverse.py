from __future__ import annotations

import pytest
from hypothesis import given, settings

from ringinv import (
    InfiniteRingError,
    PreconditionError,
    VerificationError,
    Z,
    brute_force_drazin,
    brute_force_hirano,
    brute_force_strongly_drazin,
    char_poly,
    check_drazin,
    check_hirano,
    check_strongly_drazin,
    classify,
    drazin_finite,
    has_hirano,
    has_strongly_drazin,
    hirano,
    hirano_of_hirano,
    hirano_via_square,
    is_nilpotent,
    is_tripotent,
    matrix,
    modular,
    sd_difference_decomposition,
    semigroup_profile,
    strongly_drazin,
    tripotent_decomposition,
)

from conftest import all_elements, ring_elements

# A 3x3 integer matrix satisfying a == a**3 whose defect a - a**2 is not
# nilpotent: it separates the Hirano and strongly-Drazin classes over an
# infinite ring.
CUBE_FIXED = [[-2, 3, 2], [-2, 3, 2], [1, -1, -1]]


class TestHirano:
    def test_z9_two(self):
        z9 = modular(9)
        cert = hirano(z9.element(2))
        assert cert.b == z9.element(5)
        assert cert.defect == z9.element(2) - z9.element(2) ** 3
        assert cert.defect_witness.index == 2
        assert check_hirano(z9.element(2), cert.b)

    def test_integer_cube_fixed_matrix(self):
        m3 = matrix(Z, 3)
        a = m3.element(CUBE_FIXED)
        assert a == a**3
        cert = hirano(a)
        assert cert.b == a

    def test_identity(self):
        z7 = modular(7)
        cert = hirano(z7.element(1))
        assert cert.b == z7.element(1)

    def test_absent_raises(self):
        m2 = matrix(modular(2), 2)
        a = m2.element([[0, 1], [1, 1]])
        assert not has_hirano(a)
        with pytest.raises(PreconditionError):
            hirano(a)

    def test_mod5_units(self):
        z5 = modular(5)
        assert not has_hirano(z5.element(3))
        assert has_hirano(z5.element(4))

    @given(ring_elements())
    @settings(max_examples=60)
    def test_certificate_axioms(self, a):
        if not has_hirano(a):
            return
        cert = hirano(a)
        b = cert.b
        assert a * b == b * a
        assert b * a * b == b
        assert is_nilpotent(a * a - a * b) is not None


class TestStronglyDrazin:
    def test_z9_three(self):
        z9 = modular(9)
        cert = strongly_drazin(z9.element(3))
        assert cert.b == z9.element(0)
        assert check_strongly_drazin(z9.element(3), cert.b)

    def test_idempotent_is_own_inverse(self):
        m2 = matrix(Z, 2)
        a = m2.element([[1, 0], [0, 0]])
        assert strongly_drazin(a).b == a

    def test_integer_cube_fixed_matrix_has_none(self):
        m3 = matrix(Z, 3)
        a = m3.element(CUBE_FIXED)
        assert not has_strongly_drazin(a)
        poly = char_poly(a - a * a)
        assert poly == (0, 0, 2, 1)
        with pytest.raises(PreconditionError):
            strongly_drazin(a)

    def test_mod3_two_has_none(self):
        assert not has_strongly_drazin(modular(3).element(2))

    @given(ring_elements())
    @settings(max_examples=60)
    def test_certificate_axioms(self, a):
        if not has_strongly_drazin(a):
            return
        cert = strongly_drazin(a)
        b = cert.b
        assert a * b == b * a
        assert b * a * b == b
        assert is_nilpotent(a - a * b) is not None


class TestSemigroupProfile:
    def test_z9_two(self):
        profile = semigroup_profile(modular(9).element(2))
        assert (profile.index, profile.period) == (1, 6)

    def test_identity(self):
        profile = semigroup_profile(modular(7).element(1))
        assert (profile.index, profile.period) == (1, 1)

    def test_square_zero(self):
        z4 = modular(4)
        profile = semigroup_profile(z4.element(2))
        assert (profile.index, profile.period) == (2, 1)

    def test_infinite_ring_rejected(self):
        with pytest.raises(InfiniteRingError):
            semigroup_profile(Z.element(2))

    @given(ring_elements())
    @settings(max_examples=60)
    def test_profile_is_minimal(self, a):
        profile = semigroup_profile(a)
        i, p = profile.index, profile.period
        assert a ** (i + p) == a**i
        if i > 1:
            assert a ** (i - 1 + p) != a ** (i - 1)
        for q in range(1, p):
            assert a ** (i + q) != a**i


class TestDrazinFinite:
    def test_mod2_matrix(self):
        m2 = matrix(modular(2), 2)
        a = m2.element([[0, 1], [1, 1]])
        cert = drazin_finite(a)
        assert cert.b == m2.element([[1, 1], [1, 0]])
        assert cert.index == 1
        assert check_drazin(a, cert.b, cert.index)

    def test_nilpotent(self):
        z8 = modular(8)
        cert = drazin_finite(z8.element(2))
        assert cert.b == z8.element(0)
        assert cert.index == 3

    def test_z9_two(self):
        assert drazin_finite(modular(9).element(2)).b == modular(9).element(5)

    @given(ring_elements())
    @settings(max_examples=60)
    def test_unit_gets_its_inverse(self, a):
        one = a.ring.element_at(0) ** 0 if False else None
        cert = drazin_finite(a)
        b = cert.b
        assert a * b == b * a
        assert b * a * b == b
        assert a**cert.index == a ** (cert.index + 1) * b
        identity = a**0
        if cert.index == 0 or a * b == identity:
            assert a * b == identity

    def test_check_drazin_rejects_wrong_index(self):
        z4 = modular(4)
        a = z4.element(2)
        assert check_drazin(a, z4.element(0), 2)
        assert not check_drazin(a, z4.element(0), 1)


class TestBruteForce:
    def test_no_hirano_in_mod2_matrix_example(self):
        m2 = matrix(modular(2), 2)
        assert brute_force_hirano(m2.element([[0, 1], [1, 1]])) == []

    def test_unique_over_z9(self):
        z9 = modular(9)
        assert brute_force_hirano(z9.element(2)) == [z9.element(5)]
        assert brute_force_strongly_drazin(z9.element(3)) == [z9.element(0)]

    def test_drazin_scan_contains_construction(self):
        m2 = matrix(modular(2), 2)
        a = m2.element([[0, 1], [1, 1]])
        assert drazin_finite(a).b in brute_force_drazin(a)

    def test_infinite_ring_rejected(self):
        with pytest.raises(InfiniteRingError):
            brute_force_hirano(Z.element(2))

    @given(ring_elements())
    @settings(max_examples=40)
    def test_uniqueness_and_agreement(self, a):
        found = brute_force_hirano(a)
        assert len(found) <= 1
        if found:
            assert hirano(a).b == found[0]
            assert drazin_finite(a).b == found[0]
        else:
            assert not has_hirano(a)


class TestTripotentDecomposition:
    def test_z9_two(self):
        z9 = modular(9)
        dec = tripotent_decomposition(z9.element(2))
        assert dec.tripotent == z9.element(8)
        assert dec.nilpotent_part == z9.element(3)
        assert dec.plus_idempotent == z9.element(0)
        assert dec.minus_idempotent == z9.element(1)
        assert dec.tripotent_certificate.evaluate() == dec.tripotent

    def test_tripotent_fixed(self):
        z3 = modular(3)
        dec = tripotent_decomposition(z3.element(2))
        assert dec.tripotent == z3.element(2)
        assert dec.nilpotent_part == z3.element(0)

    def test_even_modulus_rejected(self):
        with pytest.raises(PreconditionError):
            tripotent_decomposition(modular(4).element(1))

    def test_integer_matrix_with_integral_half(self):
        m2 = matrix(Z, 2)
        a = m2.element([[1, 0], [0, -1]])
        dec = tripotent_decomposition(a)
        assert dec.tripotent == a
        assert dec.nilpotent_part == m2.element([[0, 0], [0, 0]])
        assert dec.plus_idempotent == m2.element([[1, 0], [0, 0]])
        assert dec.minus_idempotent == m2.element([[0, 0], [0, 1]])
        assert dec.plus_certificate is None

    def test_integer_matrix_with_odd_half(self):
        m2 = matrix(Z, 2)
        a = m2.element([[0, 1], [1, 0]])
        dec = tripotent_decomposition(a)
        assert dec.tripotent == a
        assert dec.plus_idempotent is None

    def test_integer_matrix_without_cube_identity_rejected(self):
        m2 = matrix(Z, 2)
        with pytest.raises(PreconditionError):
            tripotent_decomposition(m2.element([[1, 1], [0, 1]]))

    @given(ring_elements())
    @settings(max_examples=60)
    def test_decomposition_laws(self, a):
        ring = a.ring
        if ring.modulus is None or ring.modulus % 2 == 0:
            return
        if not has_hirano(a):
            return
        dec = tripotent_decomposition(a)
        p, w = dec.tripotent, dec.nilpotent_part
        assert a == p + w
        assert is_tripotent(p)
        assert p * w == w * p
        assert dec.nilpotent_witness.index >= 1
        assert dec.tripotent_certificate.evaluate() == p


class TestSdDifference:
    def test_z9_two(self):
        z9 = modular(9)
        b, c = sd_difference_decomposition(z9.element(2))
        assert (b, c) == (z9.element(0), z9.element(7))

    def test_idempotent(self):
        z9 = modular(9)
        b, c = sd_difference_decomposition(z9.element(1))
        assert (b, c) == (z9.element(1), z9.element(0))

    def test_zero(self):
        z9 = modular(9)
        assert sd_difference_decomposition(z9.element(0)) == (
            z9.element(0),
            z9.element(0),
        )

    def test_integer_matrix_with_integral_half(self):
        m2 = matrix(Z, 2)
        a = m2.element([[1, 0], [0, -1]])
        b, c = sd_difference_decomposition(a)
        assert b - c == a
        assert has_strongly_drazin(b) and has_strongly_drazin(c)

    def test_integer_matrix_with_odd_half_rejected(self):
        m2 = matrix(Z, 2)
        with pytest.raises(PreconditionError):
            sd_difference_decomposition(m2.element([[0, 1], [1, 0]]))

    @given(ring_elements())
    @settings(max_examples=60)
    def test_difference_laws(self, a):
        ring = a.ring
        if ring.modulus is None or ring.modulus % 2 == 0:
            return
        if not has_hirano(a):
            return
        b, c = sd_difference_decomposition(a)
        assert b - c == a
        assert b * c == c * b
        assert has_strongly_drazin(b)
        assert has_strongly_drazin(c)


class TestSquareRoute:
    def test_mod5_four(self):
        z5 = modular(5)
        cert = hirano_via_square(z5.element(4))
        assert cert.b == z5.element(4)

    def test_zero(self):
        z5 = modular(5)
        assert hirano_via_square(z5.element(0)).b == z5.element(0)

    def test_agrees_with_direct_construction(self):
        z9 = modular(9)
        for k in range(9):
            a = z9.element(k)
            if not has_strongly_drazin(a * a):
                continue
            assert hirano_via_square(a).b == hirano(a).b

    def test_inverse_of_inverse(self):
        z9 = modular(9)
        a = z9.element(2)
        assert hirano_of_hirano(hirano(a)) == a * a * hirano(a).b


class TestClassify:
    def test_mod2_matrix_example(self):
        m2 = matrix(modular(2), 2)
        report = classify(m2.element([[0, 1], [1, 1]]))
        assert report.has_drazin is True
        assert report.has_strongly_drazin is False
        assert report.has_hirano is False
        assert report.hirano is None
        assert report.strongly_drazin is None
        assert report.drazin.b == m2.element([[1, 1], [1, 0]])

    def test_integer_scalar_without_hirano(self):
        report = classify(Z.element(5))
        assert report.has_hirano is False
        assert report.has_drazin is False

    def test_integer_scalar_units(self):
        for value in (0, 1, -1):
            report = classify(Z.element(value))
            assert report.has_hirano is True
            assert report.has_drazin is True
            assert report.drazin.b == Z.element(value)

    def test_integer_matrix_undecided(self):
        m2 = matrix(Z, 2)
        report = classify(m2.element([[2, 0], [0, 0]]))
        assert report.has_hirano is False
        assert report.has_drazin is None
        assert report.drazin is None

    def test_integer_cube_fixed_matrix(self):
        m3 = matrix(Z, 3)
        report = classify(m3.element(CUBE_FIXED))
        assert report.has_hirano is True
        assert report.has_strongly_drazin is False
        assert report.has_drazin is True
        assert report.hirano.b == report.element
        assert report.drazin.b == report.element

    @given(ring_elements())
    @settings(max_examples=40)
    def test_finite_ring_reports(self, a):
        report = classify(a)
        assert report.has_drazin is True
        assert report.drazin is not None
        if report.has_hirano:
            assert report.hirano.b == report.drazin.b
        if report.has_strongly_drazin:
            assert report.strongly_drazin.b == report.drazin.b


class TestValidators:
    def test_check_hirano_rejects_noncommuting(self):
        m2 = matrix(modular(3), 2)
        a = m2.element([[1, 1], [0, 1]])
        b = m2.element([[1, 0], [1, 1]])
        assert not check_hirano(a, b)

    def test_check_strongly_drazin_fixture(self):
        z9 = modular(9)
        assert check_strongly_drazin(z9.element(1), z9.element(1))
        assert not check_strongly_drazin(z9.element(3), z9.element(3))

    def test_exhaustive_scan_matches_validator(self):
        z9 = modular(9)
        for a in all_elements(z9):
            found = brute_force_hirano(a)
            for b in all_elements(z9):
                assert (check_hirano(a, b) is not None) == (b in found)
