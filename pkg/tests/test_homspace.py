"""The mapping space: validators, composites vs the m-oracle, [INT,BIG]."""

import pytest

from graypath.fixtures import fixture
from graypath.highercells import Tower
from graypath.kernel import all_pass, check_gray_axioms, structural_violations
from graypath.homspace import (LaxTransformation, Modification, Perturbation,
                               compose_0, compose_0_oracle, compose_mods,
                               enumerate_modifications, enumerate_perturbations,
                               enumerate_strict_functors,
                               enumerate_transformations, hom_graycat,
                               hom_hl_mod, hom_hr_mod, identity_transformation,
                               is_stiff, mod_to_pseudo, precompose, postcompose,
                               pseudo_to_trans, rho, sesquicategory_check,
                               tensor_mods, trans_to_pseudo,
                               validate_modification, validate_perturbation,
                               validate_transformation)
from graypath.pathcomp import m_pseudo
from graypath.resolution import (strict_as_pseudo, validate_pseudo_map,
                                 pseudo_maps_equal)


@pytest.fixture(scope="module")
def intbig():
    G, H = fixture("INT"), fixture("BIG")
    funs, _ = enumerate_strict_functors(G, H)
    pseudos = [strict_as_pseudo(F) for F in funs]
    trans = {}
    for i, F in enumerate(pseudos):
        for j, Gp in enumerate(pseudos):
            ts, _ = enumerate_transformations(F, Gp)
            trans[(i, j)] = ts
    return G, H, funs, pseudos, trans


def test_strict_functor_counts(intbig):
    """Hand count: the generator goes to any 1-cell, endpoints follow."""
    G, H, funs, _, _ = intbig
    assert len(funs) == 4
    t1 = fixture("T1")
    only, _ = enumerate_strict_functors(t1, t1)
    assert len(only) == 1


def test_transformation_count_and_validation(intbig):
    G, H, funs, pseudos, trans = intbig
    total = sum(len(ts) for ts in trans.values())
    # hand count: per functor pair, components (a0_0, a0_1, a_a) with the
    # required incidences; tallied independently below
    expected = 0
    for F in pseudos:
        for Gp in pseudos:
            for a00 in H.cells[1]:
                if H.src(1, a00) != F(0, "0") or H.tgt(1, a00) != Gp(0, "0"):
                    continue
                for a01 in H.cells[1]:
                    if H.src(1, a01) != F(0, "1") or H.tgt(1, a01) != Gp(0, "1"):
                        continue
                    lhs = H.comp0(Gp(1, "a"), a00)
                    rhs = H.comp0(a01, F(1, "a"))
                    expected += sum(1 for u in H.cells[2]
                                    if H.src(2, u) == lhs and H.tgt(2, u) == rhs)
    assert total == expected == 14
    for ts in trans.values():
        for t in ts:
            assert all(r.ok for r in validate_transformation(t))


def test_transformation_pseudo_route_agreement(intbig):
    """The componentwise validators agree with the assembled pseudo map."""
    G, H, funs, pseudos, trans = intbig
    PH, K, m = m_pseudo(H)
    for ts in trans.values():
        for t in ts:
            P = trans_to_pseudo(t, PH)
            assert all_pass(validate_pseudo_map(P))
            from graypath.pathspace import pd0, pd1
            for d in range(4):
                for c in G.cells[d]:
                    assert pd0(H, d, P(d, c)) == t.F(d, c)
                    assert pd1(H, d, P(d, c)) == t.G(d, c)
            t2 = pseudo_to_trans(P, t.F, t.G)
            assert t2.key() == t.key()


def test_identity_transformation_stiff(intbig):
    _, H, _, pseudos, _ = intbig
    for F in pseudos:
        idt = identity_transformation(F)
        assert all(r.ok for r in validate_transformation(idt))
        assert is_stiff(idt)


def test_corrupted_cocycle_fails(intbig):
    from graypath.faults import corrupt_transformation
    _, H, _, pseudos, trans = intbig
    hits = 0
    for ts in trans.values():
        for t in ts:
            bad, info = corrupt_transformation(t, seed=7)
            reports = validate_transformation(bad)
            if not all(r.ok for r in reports):
                hits += 1
    assert hits > 0


def test_compose_matches_m_oracle(intbig):
    G, H, funs, pseudos, trans = intbig
    PH, K, m = m_pseudo(H)
    checked = 0
    for (i, j), ts in trans.items():
        for (j2, k), us in trans.items():
            if j2 != j:
                continue
            for a in ts:
                for b in us:
                    ba = compose_0(b, a)
                    assert ba.key() == compose_0_oracle(b, a, PH, K, m).key()
                    assert all(r.ok for r in validate_transformation(ba))
                    checked += 1
    assert checked == 30


def test_compose_identity_is_unit(intbig):
    _, H, _, pseudos, trans = intbig
    for (i, j), ts in trans.items():
        for t in ts:
            li = identity_transformation(pseudos[j])
            ri = identity_transformation(pseudos[i])
            assert compose_0(li, t).key() == t.key()
            assert compose_0(t, ri).key() == t.key()


def test_composite_cocycle_trivial_when_everything_trivial(intbig):
    _, H, _, _, trans = intbig
    for (i, j), ts in trans.items():
        for (j2, k), us in trans.items():
            if j2 != j:
                continue
            for a in ts:
                for b in us:
                    if is_stiff(a) and is_stiff(b):
                        assert is_stiff(compose_0(b, a))


def test_modifications_and_vertical_composite(intbig):
    G, H, _, pseudos, trans = intbig
    tower = Tower(H)
    checked = 0
    for ts in trans.values():
        for a in ts:
            for b in ts:
                if a.F is b.F and a.G is b.G:
                    for A in enumerate_modifications(a, b):
                        assert all(r.ok for r in validate_modification(A))
                        Am = mod_to_pseudo(A, tower)
                        assert all_pass(validate_pseudo_map(Am))
                        checked += 1
    assert checked > 0
    # vertical composite against the mbar evaluation of the conversions
    for ts in trans.values():
        for a in ts:
            mods_aa = enumerate_modifications(a, a)
            for A in mods_aa:
                for B in mods_aa:
                    BA = compose_mods(B, A, tower)
                    lhs = mod_to_pseudo(BA, tower)
                    Amap = mod_to_pseudo(A, tower)
                    Bmap = mod_to_pseudo(B, tower)
                    for d in range(4):
                        for c in G.cells[d]:
                            assert lhs(d, c) == tower.mbar(
                                d, Bmap(d, c), Amap(d, c))


def test_tensor_of_modifications_lands_over_hcomps(intbig):
    G, H, _, pseudos, trans = intbig
    tower = Tower(H)
    checked = 0
    for (i, j), ts in trans.items():
        for (j2, k), us in trans.items():
            if j2 != j:
                continue
            for a in ts:
                for b in us:
                    A = enumerate_modifications(a, a)[0]
                    B = enumerate_modifications(b, b)[0]
                    s = tensor_mods(B, A, tower)
                    assert all(r.ok for r in validate_perturbation(s))
                    # faces are the horizontal composites
                    assert s.A.key() == hom_hl_mod(B, A, tower).key()
                    assert s.B.key() == hom_hr_mod(B, A, tower).key()
                    checked += 1
                    if checked > 6:
                        return
    assert checked > 0


def test_perturbations(intbig):
    G, H, _, pseudos, trans = intbig
    found = 0
    for ts in trans.values():
        for a in ts:
            for A in enumerate_modifications(a, a):
                for s in enumerate_perturbations(A, A):
                    assert all(r.ok for r in validate_perturbation(s))
                    found += 1
    assert found > 0


def test_precompose_identity_and_postcompose_collapse(intbig):
    from graypath.kernel import StrictMap, identity_map
    G, H, _, pseudos, trans = intbig
    idG = identity_map(G)
    T = fixture("T1")
    maps = {0: {x: "*" for x in H.cells[0]},
            1: {f: "id*" for f in H.cells[1]},
            2: {a: "id[id*]" for a in H.cells[2]},
            3: {g: "id[id[id*]]" for g in H.cells[3]}}
    bang = StrictMap(H, T, maps, name="!")
    for ts in trans.values():
        for t in ts:
            pre = precompose(t, idG)
            assert pre.at0 == t.at0 and pre.at1 == t.at1
            post = postcompose(bang, t)
            assert all(T.is_id1(v) for v in post.at0.values())
            assert all(r.ok for r in validate_transformation(post))


def test_hom_graycat_int_big_is_gray_category():
    C, reg, reports = hom_graycat(fixture("INT"), fixture("BIG"))
    assert all(r.ok for r in reports)
    assert structural_violations(C) == []
    assert all_pass(check_gray_axioms(C))
    assert [len(C.cells[d]) for d in range(4)] == [4, 14, 19, 19]


def test_hom_graycat_t1_cases():
    for h in ("T1", "BIG"):
        C, reg, reports = hom_graycat(fixture("T1"), fixture(h))
        assert structural_violations(C) == []
        assert all_pass(check_gray_axioms(C))


def test_restricted_space_closure():
    from graypath.homspace import restricted_space
    C, reg, reports = restricted_space(fixture("INT"), fixture("BIG"))
    # every 1-cell lies between strict functors and the tables are closed
    assert structural_violations(C) == []
    for (u, t), v in C.comp0_11.items():
        assert C.has_cell(1, v)


def test_stiff_implies_malleable(intbig):
    _, H, _, pseudos, trans = intbig
    for ts in trans.values():
        for t in ts:
            if is_stiff(t):
                # malleable = transformation between strict functors
                assert t.F.is_strict() and t.G.is_strict()


def test_sesquicategory_laws():
    reports = sesquicategory_check(fixture("INT"), fixture("BIG"))
    assert all_pass(reports), [r for r in reports if not r.ok]
    assert all(r.tuples_checked > 0 for r in reports)


def test_rho_strict_is_identity(intbig):
    _, H, _, pseudos, _ = intbig
    for F in pseudos:
        r = rho(F)
        assert all(v == H.ident(1, F(1, f)) for f, v in r.at1.items())
        assert all(rr.ok for rr in validate_transformation(r))
        assert is_stiff(r)


def test_rho_nontrivial_pseudo_map():
    from tests.test_resolution import nontrivial_pseudo_into_path_twist
    from graypath.resolution import strictify
    F, PT = nontrivial_pseudo_into_path_twist()
    r = rho(F)
    s = strictify(F)
    # rho runs from F to its strictification and is the identity on objects
    assert r.F is F and pseudo_maps_equal(r.G, s)
    for x in F.dom.cells[0]:
        assert PT.is_id1(r.at0[x])
    assert all(rr.ok for rr in validate_transformation(r))
    # cocycle entries are identity 3-cells
    assert is_stiff(r)
    # the component at the composite is the nontrivial compositor itself
    assert r.at1["h"] == F.coc("g", "f")
    assert not PT.is_id2(r.at1["h"])
