"""The path composition m, its cocycle, internal category laws, and o."""

import pytest

from graypath.fixtures import fixture
from graypath.kernel import StrictMap, all_pass
from graypath.pathcomp import (build_pullback, m_apply, m_cocycle,
                               m_naturality_check, m_pseudo, o_cell, o_pseudo,
                               verify_internal_category, verify_internal_groupoid,
                               verify_m_pseudo)
from graypath.pathspace import PathView, build_pathspace, degeneracy, pd0, pd1


@pytest.fixture(scope="module")
def pair_setup():
    H = fixture("PAIR")
    PH = build_pathspace(H)
    return H, PH, PathView(H)


def test_m_identity_paths(pair_setup):
    H, PH, V = pair_setup
    for f in H.cells[1]:
        y = H.tgt(1, f)
        up = V.ident(0, H.ident(0, y))
        lo = V.ident(0, f)
        # the identity square on id_y is a left unit for pasting
        r = m_apply(H, V, 1, up, lo)
        assert r == lo


def test_m_pair_squares(pair_setup):
    """Two commuting squares over f and g paste to one over h = g #0 f."""
    H, PH, V = pair_setup
    lo = ("sq", "id[f]", "idx", "idy", "f", "f")
    up = ("sq", "id[g]", "idy", "idz", "g", "g")
    r = m_apply(H, V, 1, up, lo)
    assert r[4] == "h" and r[5] == "h"
    assert r[1] == H.ident(1, "h")


def test_m_2cell_twist_matches_stepwise_oracle():
    H = fixture("TWIST")
    PH = build_pathspace(H)
    V = PathView(H)
    K = build_pullback(PH, H, 2)
    checked = 0
    for (u, l) in K.cells[2]:
        if H.is_id3(u[1]) and H.is_id3(l[1]):
            continue
        fh1 = u[4][5]
        top = l[4][4]
        step1 = H.wr23(H.wl13(fh1, l[1]), H.wr12(u[4][1], top))
        step2 = H.wl23(H.wl12(fh1, l[5][1]), H.wr13(u[1], top))
        assert m_apply(H, V, 2, u, l)[1] == H.comp2(step2, step1)
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("name", ["INT", "PAIR"])
def test_m_cocycle_trivial_when_tensors_trivial(name):
    H = fixture(name)
    PH = build_pathspace(H)
    V = PathView(H)
    K = build_pullback(PH, H, 2)
    for (q, p) in K.comp0_11:
        c = m_cocycle(H, V, q, p)
        assert PH.is_id2(c)


def test_m_cocycle_twist_component_is_whiskered_interchanger():
    H = fixture("TWIST")
    PH = build_pathspace(H)
    V = PathView(H)
    K = build_pullback(PH, H, 2)
    seen_tau = 0
    for (q, p) in K.comp0_11:
        c = m_cocycle(H, V, q, p)
        # 2-cell faces of the cocycle are always identities
        assert H.is_id2(c[2]) and H.is_id2(c[3])
        base = H.tensor(q[0][1], p[1][1])
        if base == "tau":
            # the 3-component is tau in its whisker context, never dropped
            assert not PH.is_id2(c)
            seen_tau += 1
    assert seen_tau > 0


@pytest.mark.parametrize("name", ["T1", "BIG"])
def test_verify_m_pseudo(name):
    reports = verify_m_pseudo(fixture(name))
    assert all_pass(reports), [r for r in reports if not r.ok]


@pytest.mark.parametrize("name", ["INT", "CYC2"])
def test_verify_internal_category(name):
    reports = verify_internal_category(fixture(name))
    assert all_pass(reports), [r for r in reports if not r.ok]
    assert all(r.tuples_checked > 0 for r in reports)


def test_m_natural_for_strict_functor():
    H = fixture("BIG")
    T = fixture("T1")
    maps = {0: {x: "*" for x in H.cells[0]},
            1: {f: "id*" for f in H.cells[1]},
            2: {a: "id[id*]" for a in H.cells[2]},
            3: {g: "id[id[id*]]" for g in H.cells[3]}}
    bang = StrictMap(H, T, maps, name="!")
    bang.validate()
    rep = m_naturality_check(bang, H, T)
    assert rep.ok


def test_o_identity_and_inverse_laws():
    H = fixture("CYC2")
    reports = verify_internal_groupoid(H)
    assert all_pass(reports), [r for r in reports if not r.ok]


def test_o_cocycle_trivial_when_tensors_trivial():
    H = fixture("CYC2")
    PH, o = o_pseudo(H)
    for pair in o.cocycle:
        assert PH.is_id2(o.cocycle[pair])


def test_o_requires_groupoid():
    from graypath.kernel import NotAGroupoid
    H = fixture("BIG")
    with pytest.raises(NotAGroupoid):
        o_cell(H, ("sq", "alpha", "idx", "idy", "f", "g"))


def test_unit_law_quantified_over_all_cells():
    for name in ("BIG", "CYC2"):
        H = fixture(name)
        PH = build_pathspace(H)
        V = PathView(H)
        for d in range(4):
            for c in PH.cells[d]:
                lo = degeneracy(H, d, pd0(H, d, c))
                hi = degeneracy(H, d, pd1(H, d, c))
                assert m_apply(H, V, d, c, lo) == c
                assert m_apply(H, V, d, hi, c) == c
