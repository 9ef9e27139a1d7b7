from __future__ import annotations

import pytest
from hypothesis import strategies as st

from ringinv import RingSpec, matrix, modular

SMALL_MODULAR = [modular(n) for n in range(2, 17)]
SMALL_MATRIX = [
    matrix(modular(2), 2),
    matrix(modular(3), 2),
    matrix(modular(4), 2),
    matrix(modular(2), 3),
]
SMALL_RINGS = SMALL_MODULAR + SMALL_MATRIX

finite_rings = st.sampled_from(SMALL_RINGS)


@st.composite
def ring_elements(draw, rings=finite_rings):
    """One element of one small finite ring."""
    ring = draw(rings)
    index = draw(st.integers(0, ring.size() - 1))
    return ring.element_at(index)


@st.composite
def ring_element_pairs(draw, rings=finite_rings):
    """Two elements of the same small finite ring."""
    ring = draw(rings)
    size = ring.size()
    i = draw(st.integers(0, size - 1))
    j = draw(st.integers(0, size - 1))
    return ring.element_at(i), ring.element_at(j)


@pytest.fixture(scope="session")
def z9():
    return modular(9)


@pytest.fixture(scope="session")
def m2z2():
    return matrix(modular(2), 2)


@pytest.fixture(scope="session")
def m2z3():
    return matrix(modular(3), 2)


def all_elements(ring: RingSpec):
    return list(ring.elements())
