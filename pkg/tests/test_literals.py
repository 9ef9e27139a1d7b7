from __future__ import annotations

import pytest
from hypothesis import given

from ringinv import (
    ParseError,
    Z,
    matrix,
    modular,
    parse_element,
    parse_ring,
    render_element,
    render_ring,
)

from conftest import ring_elements


class TestRingGrammar:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("Z", Z),
            ("Z/9", modular(9)),
            ("Z/2", modular(2)),
            ("M2(Z/3)", matrix(modular(3), 2)),
            ("M3(Z)", matrix(Z, 3)),
            (" M2( Z/5 ) ", matrix(modular(5), 2)),
        ],
    )
    def test_accepts(self, text, expected):
        assert parse_ring(text) == expected

    @pytest.mark.parametrize(
        "text",
        ["", "Q", "Z/1", "Z/0", "Z/-3", "M0(Z)", "M2(M2(Z))", "M2(Z/3) extra", "M2(Z/3"],
    )
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_ring(text)

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_ring("Z/x")
        assert "position" in str(err.value)

    def test_round_trip(self):
        for ring in (Z, modular(12), matrix(modular(7), 2), matrix(Z, 4)):
            assert parse_ring(render_ring(ring)) == ring


class TestElementGrammar:
    def test_scalar(self):
        z9 = modular(9)
        assert parse_element(z9, "5") == z9.element(5)
        assert parse_element(z9, "-1") == z9.element(8)
        assert parse_element(Z, "-17") == Z.element(-17)

    def test_unicode_minus(self):
        assert parse_element(Z, "−2") == Z.element(-2)

    def test_matrix(self):
        m = matrix(modular(3), 2)
        assert parse_element(m, "[[0,1],[1,1]]") == m.element([[0, 1], [1, 1]])
        assert parse_element(m, " [ [ -1 , 0 ] , [ 0 , 2 ] ] ") == m.element([[2, 0], [0, 2]])

    @pytest.mark.parametrize(
        "text",
        ["", "[[1,2],[3]]", "[[1,2,3],[4,5,6]]", "[1,2]", "5", "[[1,2],[3,4]] junk", "[[1,2],[3,4"],
    )
    def test_rejects_bad_matrix(self, text):
        with pytest.raises(ParseError):
            parse_element(matrix(modular(3), 2), text)

    def test_rejects_matrix_for_scalar_ring(self):
        with pytest.raises(ParseError):
            parse_element(modular(3), "[[1,0],[0,1]]")

    def test_scalar_for_matrix_ring_rejected(self):
        with pytest.raises(ParseError):
            parse_element(matrix(modular(3), 2), "7")

    @given(ring_elements())
    def test_round_trip(self, a):
        assert parse_element(a.ring, render_element(a)) == a

    def test_round_trip_over_integers(self):
        m = matrix(Z, 2)
        a = m.element([[-3, 12], [0, -1]])
        assert parse_element(m, render_element(a)) == a
