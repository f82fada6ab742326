import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cospectra import appendix_graph, hypercube
from cospectra.cayley import CayleyGraph, ConnectionSet, cayley_graph, spectrum
from cospectra.cospectral import (
    build_report,
    check_cubelike_bounds,
    check_multiplicity_bound,
    pst_pair,
    strongly_cospectral_pair,
    strongly_cospectral_to_zero,
    subgroup_basis,
    verify_subgroup,
)
from cospectra.errors import NotCubelike
from cospectra.groups import group_new
from cospectra.oracle import idempotent_strong_cospectrality

from corpus import random_cubelike


def test_k2():
    assert strongly_cospectral_to_zero(hypercube(1)) == [(0,), (1,)]


@pytest.mark.parametrize("d", range(1, 9))
def test_hypercube_antipodes(d):
    assert strongly_cospectral_to_zero(hypercube(d)) == [(0,) * d, (1,) * d]


def test_appendix_1():
    H = strongly_cospectral_to_zero(appendix_graph(1))
    assert len(H) == 4
    assert H[0] == (0,) * 5
    assert (1,) * 5 in H


def test_non_involutions_never_detected():
    # in Z_4 the 4-cycle: 2 is the antipode, 1 and 3 are not involutions
    C4 = cayley_graph(group_new([4]), [(1,), (3,)])
    assert strongly_cospectral_to_zero(C4) == [(0,), (2,)]
    # the odd cycle has no involutions at all
    C5 = cayley_graph(group_new([5]), [(1,), (4,)])
    assert strongly_cospectral_to_zero(C5) == [(0,)]


def test_edgeless_graph_has_trivial_h():
    G = group_new([2, 2, 2])
    assert strongly_cospectral_to_zero(CayleyGraph(G, ConnectionSet(G, ()))) == [G.zero()]


def test_verify_subgroup():
    G = group_new([2, 2, 2])
    assert verify_subgroup(G, [G.zero()])
    assert verify_subgroup(G, [G.zero(), (1, 1, 1)])
    assert verify_subgroup(group_new([2] * 5), strongly_cospectral_to_zero(appendix_graph(1)))
    assert not verify_subgroup(G, [(1, 1, 1)])
    assert not verify_subgroup(G, [G.zero(), (1, 0, 0), (0, 1, 0)])
    Z4 = group_new([4])
    assert not verify_subgroup(Z4, [(0,), (1,), (2,), (3,)])


def test_subgroup_basis():
    G = group_new([2] * 5)
    H = strongly_cospectral_to_zero(appendix_graph(1))
    basis = subgroup_basis(G, H)
    assert len(basis) == 2
    span = {G.zero()}
    for b in basis:
        span |= {G.add(s, b) for s in span}
    assert span == set(H)
    assert subgroup_basis(group_new([4, 2]), [(0, 0), (2, 0), (0, 1), (2, 1)]) == [(2, 0), (0, 1)]


def test_multiplicity_bound_examples():
    r = build_report(appendix_graph(1))
    assert r.h_size * r.max_multiplicity == 32  # tight: 4 = 32 / 8
    assert check_multiplicity_bound(r)
    r = build_report(hypercube(1))
    assert (r.h_size, r.max_multiplicity) == (2, 1)
    assert check_multiplicity_bound(r)
    r = build_report(hypercube(6))
    assert (r.h_size, r.max_multiplicity) == (2, 20)
    assert check_multiplicity_bound(r)


def test_cubelike_bounds_examples():
    C4 = cayley_graph(group_new([2, 2]), [(1, 0), (0, 1)])
    v = check_cubelike_bounds(build_report(C4))
    assert v.cube_mult is None and v.cube_size is None and v.third_bound is None

    v = check_cubelike_bounds(build_report(appendix_graph(1)))
    assert (v.cube_mult, v.cube_size, v.third_bound) == (True, True, True)

    r = build_report(hypercube(3))
    assert r.max_multiplicity == 3 and 3 > 2 ** 1.5
    v = check_cubelike_bounds(r)
    assert (v.cube_mult, v.cube_size, v.third_bound) == (True, True, True)

    # |V| >= 5 only: the 4-cycle on Z_4 is skipped, Z_6 is checked
    v = check_cubelike_bounds(build_report(cayley_graph(group_new([6]), [(1,), (5,)])))
    assert v.cube_mult is None and v.third_bound is True


def test_report_json():
    js = build_report(appendix_graph(1)).to_json()
    assert list(js) == ["group", "degree", "H", "generators", "hSize", "maxMultiplicity", "verdicts"]
    assert js["group"] == "Z2^5"
    assert js["hSize"] == 4
    assert "11111" in js["H"]
    assert set(js["verdicts"]) == {"subgroup", "multBound", "cubeMult", "cubeSize", "thirdBound"}
    js = build_report(cayley_graph(group_new([4]), [(1,), (3,)])).to_json()
    assert js["H"] == [[0], [2]]


def test_pst_pair_examples():
    assert pst_pair(appendix_graph(1)) == (1, 1, 1, 1, 1)
    G = group_new([2, 2])
    assert pst_pair(cayley_graph(G, [(1, 0), (0, 1), (1, 1)])) is None
    for d in (1, 3, 5, 7):
        assert pst_pair(hypercube(d)) == (1,) * d
    with pytest.raises(NotCubelike):
        pst_pair(cayley_graph(group_new([4]), [(1,), (3,)]))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 2**32 - 1))
def test_detector_properties_random(d, seed):
    X = random_cubelike(d, np.random.default_rng(seed))
    r = build_report(X)
    assert r.H[0] == X.group.zero()
    assert r.subgroup_ok
    assert 2 ** int(math.log2(r.h_size)) == r.h_size
    assert check_multiplicity_bound(r)
    assert r.all_ok()
    sigma = pst_pair(X)
    if sigma is not None:
        assert sigma in r.H


@pytest.mark.parametrize("X", [appendix_graph(1), appendix_graph(4), hypercube(4)], ids=str)
def test_translation_invariance(X):
    """Relabel by x -> x + h: the set strongly cospectral to h is h + H."""
    G = X.group
    H = set(strongly_cospectral_to_zero(X))
    rng = np.random.default_rng(5)
    for hi in rng.choice(G.order, size=4, replace=False):
        h = G.element_at(int(hi))
        for g in G.involutions():
            assert idempotent_strong_cospectrality(X, h, G.add(h, g)) == (g in H)
            assert strongly_cospectral_pair(X, h, G.add(h, g)) == (g in H)


def test_pair_reduction_for_non_involution():
    X = appendix_graph(1)
    table = spectrum(X)
    assert strongly_cospectral_pair(X, (0,) * 5, (1,) * 5, table)
    C4 = cayley_graph(group_new([4]), [(1,), (3,)])
    assert not strongly_cospectral_pair(C4, (0,), (1,))
    assert strongly_cospectral_pair(C4, (1,), (3,))
