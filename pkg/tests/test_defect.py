"""Defect classification, dual dimension, support lattices, rho bound."""

import pytest

from discforge.config import (
    GaleConfiguration,
    PointConfiguration,
    cayley,
    dual_of,
    gale_dual,
    segment,
)
from discforge.defect import (
    DEFAULT_SIZE_BOUND,
    SIZE_BOUND_ENV,
    dirocco_fixtures,
    dual_variety_dim,
    is_dual_defect,
    is_dual_defect_exhaustive,
    rho_bound,
    size_bound,
    support_lattice,
)
from discforge.errors import (
    DegenerateDual,
    NotHomogeneous,
    PyramidInput,
    SizeBound,
)

EXPECTED_FIXTURES = {
    "cayley-1-1-1": ("degenerate", 3),
    "cayley-1-1-2": ("degenerate", 4),
    "cayley-1-2-2": ("codim-4-planes", 5),
    "cayley-1-1-3": ("degenerate", 5),
    "cayley-1-1-1-1": ("degenerate", 4),
    "cayley-1-1-1-2": ("degenerate", 5),
    "cayley-1-1-1-1-1": ("degenerate", 5),
}


def test_cayley_fixtures_are_defect():
    fixtures = dirocco_fixtures()
    assert [name for name, _ in fixtures] == list(EXPECTED_FIXTURES)
    for name, cfg in fixtures:
        rep = is_dual_defect(gale_dual(cfg))
        method, dim = EXPECTED_FIXTURES[name]
        assert rep.defect, name
        assert rep.method == method, name
        assert dual_variety_dim(cfg) == dim, name
        assert dim < cfg.n - 2, name


def test_fast_path_matches_exhaustive_search():
    for _, cfg in dirocco_fixtures():
        b = gale_dual(cfg)
        assert is_dual_defect(b).defect == is_dual_defect_exhaustive(b)


def test_complementary_planes_witness():
    cfg = cayley([segment(1), segment(2), segment(2)])
    rep = is_dual_defect(gale_dual(cfg))
    assert rep.method == "codim-4-planes"
    assert rep.witness == {
        "kind": "complementary-planes",
        "parts": [[2, 3, 4], [5, 6, 7]],
    }


def test_codim_one_never_defect(quadratic):
    rep = is_dual_defect(gale_dual(quadratic))
    assert not rep.defect
    assert rep.method == "codim-one"
    assert rep.witness == {"kind": "flag", "flats": []}


def test_twisted_cubic_not_defect(twisted_cubic):
    rep = is_dual_defect(gale_dual(twisted_cubic))
    assert not rep.defect
    assert rep.method == "codim-2"
    assert rep.witness == {"kind": "flag", "flats": [[0]]}
    assert dual_variety_dim(twisted_cubic) == 2


def test_seven_point_not_defect(seven_point_b):
    rep = is_dual_defect(seven_point_b)
    assert not rep.defect
    assert rep.method == "codim-2"
    a = dual_of(seven_point_b)
    assert dual_variety_dim(a) == a.n - 2 == 5


def test_three_squares_flag_search(cay222):
    b = gale_dual(cay222)
    assert b.m == 5
    rep = is_dual_defect(b)
    assert rep.defect
    assert rep.method == "flag-search"
    assert rep.witness == {"kind": "no-nonsplitting-flag", "length": 4}
    assert dual_variety_dim(cay222) == 6


def test_validation_errors():
    with pytest.raises(NotHomogeneous):
        is_dual_defect(GaleConfiguration([[1, 0], [0, 1]]))
    with pytest.raises(PyramidInput):
        is_dual_defect(GaleConfiguration([[1], [-2], [1], [0]]))
    with pytest.raises(DegenerateDual):
        is_dual_defect(GaleConfiguration([[1, 0], [-1, 0], [2, 0], [-2, 0]]))


def test_support_lattice_quadratic(quadratic):
    lat = support_lattice(quadratic)
    assert lat.n == 3 and lat.m == 1
    assert lat.elements == (frozenset({0, 1, 2}),)
    assert lat.height[frozenset({0, 1, 2})] == 1


def test_support_lattice_cubic(twisted_cubic):
    lat = support_lattice(twisted_cubic)
    full = frozenset(range(4))
    triples = [full - {i} for i in range(4)]
    assert set(lat.elements) == set(triples) | {full}
    assert lat.height[full] == 2
    assert all(lat.height[t] == 1 for t in triples)
    assert all(lat.covers[t] == [full] for t in triples)
    assert lat.covers[full] == []


def test_support_lattice_size_bound(monkeypatch, twisted_cubic):
    monkeypatch.setenv(SIZE_BOUND_ENV, "3")
    with pytest.raises(SizeBound):
        support_lattice(twisted_cubic)


def test_size_bound_env(monkeypatch):
    monkeypatch.delenv(SIZE_BOUND_ENV, raising=False)
    assert size_bound() == DEFAULT_SIZE_BOUND == 12
    monkeypatch.setenv(SIZE_BOUND_ENV, "7")
    assert size_bound() == 7
    monkeypatch.setenv(SIZE_BOUND_ENV, "junk")
    assert size_bound() == DEFAULT_SIZE_BOUND


def test_dual_dim_errors():
    with pytest.raises(NotHomogeneous):
        dual_variety_dim(PointConfiguration([[0, 1, 2]]))
    with pytest.raises(PyramidInput):
        dual_variety_dim(
            PointConfiguration([[1, 1, 1, 0], [0, 1, 2, 0], [0, 0, 0, 1]])
        )


def test_rho_bound_three_squares(cay222):
    rep = rho_bound(gale_dual(cay222))
    assert rep.parts == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
    assert rep.ranks == (2, 2, 2)
    assert rep.rho == 3
    assert rep.m == 5
    assert rep.sufficient_defect


def test_rho_bound_mixed_cayley():
    b = gale_dual(cayley([segment(1), segment(2), segment(2)]))
    rep = rho_bound(b)
    # rows 0,1 form a splitting pair and belong to no part
    assert rep.parts == ((2, 3, 4), (5, 6, 7))
    assert rep.ranks == (2, 2)
    assert rep.rho == 2
    assert rep.sufficient_defect


def test_rho_bound_not_sufficient(seven_point_b):
    rep = rho_bound(seven_point_b)
    assert rep.rho == 1
    assert rep.m == 2
    assert not rep.sufficient_defect
