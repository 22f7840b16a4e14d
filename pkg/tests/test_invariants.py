import pytest

from srglab.constructions import cycle, petersen, rook, shrikhande, symplectic_polar, triangular
from srglab.errors import ParamRelationViolated, TooLarge
from srglab.graph import SrgParams, complement, empty
from srglab.invariants import (
    chromatic_number,
    clique_number,
    ell_friendship_bounds,
    independence_number,
    maximum_clique,
    srg_invariant_bounds,
    tightness,
)

from conftest import brute_alpha, brute_chi, random_graph


def test_clique_and_alpha_against_brute_force(rng):
    for _ in range(60):
        g = random_graph(rng, int(rng.integers(1, 11)), rng.random())
        assert independence_number(g) == brute_alpha(g)
        assert clique_number(g) == brute_alpha(complement(g))


def test_chromatic_against_brute_force(rng):
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(1, 8)), rng.random())
        assert chromatic_number(g) == brute_chi(g)


def test_maximum_clique_is_a_clique():
    g = rook(4)
    c = maximum_clique(g)
    assert len(c) == 4
    assert all(g.has_edge(a, b) for a in c for b in c if a < b)


@pytest.mark.parametrize(
    "g,values",
    [
        (petersen(), (4, 2, 3, 5)),
        (shrikhande(), (4, 3, 4, 6)),
        (rook(4), (4, 4, 4, 4)),
        (triangular(6), (3, 5, 5, 4)),
        (cycle(7), (3, 2, 3, 4)),
    ],
)
def test_named_invariants(g, values):
    got = (
        independence_number(g),
        clique_number(g),
        chromatic_number(g),
        chromatic_number(complement(g)),
    )
    assert got == values


def test_symplectic_complement_alpha_omega():
    g = complement(symplectic_polar(3, 2))
    assert independence_number(g) == 7
    assert clique_number(g) == 7


def test_caps():
    with pytest.raises(TooLarge):
        clique_number(empty(65))
    with pytest.raises(TooLarge):
        chromatic_number(empty(33))
    assert chromatic_number(empty(5)) == 1


def test_srg_bounds_and_tightness():
    b = srg_invariant_bounds(SrgParams(16, 6, 2, 2))
    assert b.as_dict() == {"alpha_ub": 4, "omega_ub": 4, "chi_lb": 4, "chi_complement_lb": 4}
    t = tightness(b, {"alpha": 4, "omega": 3, "chi": 4, "chi_complement": 6})
    assert t == {"alpha": True, "omega": False, "chi": True, "chi_complement": False}
    # rook's graph attains every bound
    assert all(tightness(b, {"alpha": 4, "omega": 4, "chi": 4, "chi_complement": 4}).values())
    lk6 = srg_invariant_bounds(SrgParams(15, 8, 4, 4))
    assert lk6.as_dict() == {"alpha_ub": 3, "omega_ub": 5, "chi_lb": 5, "chi_complement_lb": 3}
    assert tightness(lk6, {"chi_complement": 4}) == {
        "alpha": None,
        "omega": None,
        "chi": None,
        "chi_complement": False,
    }


def test_irrational_bounds_round_correctly():
    b = srg_invariant_bounds(SrgParams(5, 2, 0, 1))
    assert (b.alpha_ub, b.omega_ub, b.chi_lb, b.chi_complement_lb) == (2, 2, 3, 3)


def test_ell_bounds_match_srg_bounds():
    assert ell_friendship_bounds(16, 6, 2) == srg_invariant_bounds(SrgParams(16, 6, 2, 2))
    assert ell_friendship_bounds(63, 32, 16) == srg_invariant_bounds(SrgParams(63, 32, 16, 16))
    with pytest.raises(ParamRelationViolated):
        ell_friendship_bounds(16, 6, 3)
    with pytest.raises(ParamRelationViolated):
        ell_friendship_bounds(16, 2, 2)
