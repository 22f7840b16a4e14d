import os

import numpy as np
import pytest

from srglab.constructions import (
    PrimeFieldElement,
    cycle,
    is_prime,
    petersen,
    projective_points,
    rook,
    shrikhande,
    symplectic_complement_params,
    symplectic_params,
    symplectic_polar,
    triangular,
    triangular_params,
    vertex_cap,
    windmill,
)
from srglab.errors import DomainTooSmall, NotPrime, TooLarge
from srglab.graph import SrgParams, complement, detect_srg, triangle_count


def test_prime_field_arithmetic():
    a = PrimeFieldElement(3, 7)
    assert (a * a.inverse()) == 1
    assert (a / 3) == 1
    assert (a + 5).value == 1
    assert (-a).value == 4
    with pytest.raises(NotPrime):
        PrimeFieldElement(1, 9)
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElement(0, 5).inverse()


def test_named_srgs():
    assert detect_srg(petersen()) == SrgParams(10, 3, 0, 1)
    assert detect_srg(shrikhande()) == SrgParams(16, 6, 2, 2)
    assert detect_srg(rook(4)) == SrgParams(16, 6, 2, 2)
    assert detect_srg(triangular(5)) == SrgParams(10, 6, 3, 4)
    assert detect_srg(triangular(6)) == triangular_params(6) == SrgParams(15, 8, 4, 4)


def test_shrikhande_differs_from_rook():
    # same parameters; the rook's graph has 4-cliques, Shrikhande does not
    assert shrikhande() != rook(4)
    assert triangle_count(shrikhande()) == triangle_count(rook(4)) == 32


def test_triangular_is_complement_of_petersen_up_to_params():
    assert detect_srg(complement(petersen())) == SrgParams(10, 6, 3, 4)


def test_domain_errors():
    with pytest.raises(DomainTooSmall):
        cycle(2)
    with pytest.raises(DomainTooSmall):
        triangular(3)
    with pytest.raises(DomainTooSmall):
        windmill(0)
    with pytest.raises(DomainTooSmall):
        symplectic_polar(1, 2)
    with pytest.raises(NotPrime):
        symplectic_polar(2, 4)


def test_projective_points_are_normalised():
    pts = projective_points(4, 3)
    assert pts.shape == (40, 4)
    lead = np.argmax(pts != 0, axis=1)
    assert np.all(pts[np.arange(len(pts)), lead] == 1)
    assert len({tuple(r) for r in pts}) == 40


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (2, 5), (3, 3)])
def test_symplectic_params_match_construction(n, q):
    g = symplectic_polar(n, q)
    assert detect_srg(g) == symplectic_params(n, q)
    assert detect_srg(complement(g)) == symplectic_complement_params(n, q)


def test_vertex_cap(monkeypatch):
    assert vertex_cap() == 5000
    monkeypatch.setenv("SRGLAB_VERTEX_CAP", "50")
    assert vertex_cap() == 50
    with pytest.raises(TooLarge):
        symplectic_polar(3, 2)
    with pytest.raises(TooLarge):
        symplectic_polar(3, 2, cap=62)
    assert symplectic_polar(3, 2, cap=63).order == 63


def test_is_prime():
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]
