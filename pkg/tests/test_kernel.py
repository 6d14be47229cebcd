"""Kernel: axiom checker, horizontal composites, pullback along a functor."""

import pytest

from graypath.fixtures import fixture, fixture_names
from graypath.kernel import (FinCat, Functor, NotAFunctor, NotComposable,
                             all_pass, check_gray_axioms, hcomp_left,
                             hcomp_right, pullback_along_functor,
                             structural_violations)

ALL = ["T1", "INT", "BIG", "PAIR", "CYC2", "TWIST", "CHAIN3", "CHAIN4"]


@pytest.mark.parametrize("name", ALL)
def test_fixture_passes_axioms(name):
    C = fixture(name)
    assert structural_violations(C) == []
    reports = check_gray_axioms(C)
    assert all_pass(reports), [r for r in reports if not r.ok]
    assert all(r.tuples_checked >= 1 for r in reports
               if r.law not in ("groupoid-laws",) or C.is_groupoid)


def test_hcomp_identity_whisker_is_unit():
    B = fixture("BIG")
    # hcomp with the identity 2-cell on id_y collapses to alpha
    a = "alpha"
    idy2 = B.ident(1, "idy")
    assert hcomp_left(B, idy2, a) == a
    assert hcomp_right(B, idy2, a) == a


def test_hcomp_twist_matches_table_oracle():
    T = fixture("TWIST")
    # oracle: direct two-step lookup
    left = T.comp1_22[(T.whisk_r12[("beta", "fp")], T.whisk_l12[("g", "alpha")])]
    assert hcomp_left(T, "beta", "alpha") == left == "b<a"
    right = T.comp1_22[(T.whisk_l12[("gp", "alpha")], T.whisk_r12[("beta", "f")])]
    assert hcomp_right(T, "beta", "alpha") == right == "b>a"


def test_hcomp_t1_identity():
    C = fixture("T1")
    i2 = C.ident(1, "id*")
    assert hcomp_left(C, i2, i2) == i2


def test_hcomp_sides_agree_on_identities_and_tensor_trivial():
    for name in ALL:
        C = fixture(name)
        for (b, a) in C.tensor_pairs():
            if C.is_id2(b) or C.is_id2(a):
                assert hcomp_left(C, b, a) == hcomp_right(C, b, a)
                assert C.is_id3(C.tensor(b, a))


def test_noncomposable_raises():
    B = fixture("BIG")
    with pytest.raises(NotComposable):
        B.comp0("f", "g")  # f: x->y after g: x->y does not compose


def test_twist_closure_against_free_enumerator():
    """Brute-force free construction on two 0-composable 2-cells.

    2-cells of the composite hom are the monotone paths in the 2x2 grid of
    whiskered generators; 3-cells are the identities plus the invertible
    interchanger pair.
    """
    T = fixture("TWIST")
    # hom(x, z): 4 identity 2-cells + 4 single moves + 2 full paths
    homxz = [a for a in T.cells[2]
             if T.src0(2, a) == "x" and T.tgt0(2, a) == "z"]
    assert len(homxz) == 10
    grid_vertices = {("f", "g"), ("fp", "g"), ("f", "gp"), ("fp", "gp")}
    ones = {a for a in T.cells[1] if T.src(1, a) == "x" and T.tgt(1, a) == "z"}
    assert ones == {f"{g}.{f}" for (f, g) in grid_vertices}
    # 3-cells: one identity per 2-cell plus the interchanger and its inverse
    assert len(T.cells[3]) == len(T.cells[2]) + 2
    nonid = [g for g in T.cells[3] if not T.is_id3(g)]
    assert sorted(nonid) == ["tau", "tau~"]
    assert T.tensor_[("beta", "alpha")] == "tau"
    assert T.src(3, "tau") == hcomp_left(T, "beta", "alpha")
    assert T.tgt(3, "tau") == hcomp_right(T, "beta", "alpha")
    assert T.inv_3("tau") == "tau~"


def test_corrupted_tensor_face_is_caught():
    from graypath.faults import copy_graycat
    T = copy_graycat(fixture("TWIST"))
    # swap the interchanger's faces by corrupting the tensor entry
    T.tensor_[("beta", "alpha")] = "tau~"
    reports = check_gray_axioms(T)
    bad = [r for r in reports if not r.ok]
    assert bad and any(r.counterexample for r in bad)
    # re-evaluating the law on the counterexample still fails
    law = [r for r in bad if r.law == "tensor-laws"]
    assert law and law[0].counterexample[0] == "tensor-faces"


def _free_interval_fincat():
    C = FinCat("free-a")
    for x in ("0", "1"):
        C.add_object(x)
        C.add_morphism(f"id{x}", x, x)
        C.ids[x] = f"id{x}"
    C.add_morphism("a", "0", "1")
    for f in C.morphisms:
        C.comp[(f, C.ids[C.src[f]])] = f
        C.comp[(C.ids[C.tgt[f]], f)] = f
    # dedupe identity-square entries
    C.comp[("id0", "id0")] = "id0"
    C.comp[("id1", "id1")] = "id1"
    return C


def test_pullback_along_identity_functor():
    G = fixture("BIG")
    C = FinCat("big1")
    for x in G.cells[0]:
        C.add_object(x)
        C.ids[x] = G.id_up[0][x]
    for f in G.cells[1]:
        C.add_morphism(f, G.src(1, f), G.tgt(1, f))
    C.comp = dict(G.comp0_11)
    F = Functor(C, G, {x: x for x in C.objects}, {f: f for f in C.morphisms})
    P, proj = pullback_along_functor(F, G)
    assert structural_violations(P) == []
    assert all_pass(check_gray_axioms(P))
    # canonical bijection on every dimension
    for d in range(4):
        assert len(P.cells[d]) == len(G.cells[d])
    # projection is face-preserving by construction
    for c in P.cells[2]:
        assert G.src(2, proj[2][c]) == proj[1][P.src(2, c)]
        assert G.tgt(2, proj[2][c]) == proj[1][P.tgt(2, c)]


def test_pullback_free_interval_into_int():
    G = fixture("INT")
    C = _free_interval_fincat()
    F = Functor(C, G, {"0": "0", "1": "1"},
                {"id0": "id0", "id1": "id1", "a": "a"})
    P, proj = pullback_along_functor(F, G)
    # oracle: 2-cells are exactly (id; f, g) pairs over equal composites
    expected = set()
    for f in C.morphisms:
        for g in C.morphisms:
            if C.src[f] == C.src[g] and C.tgt[f] == C.tgt[g]:
                for a in G.cells[2]:
                    if (G.src(2, a) == F.mor_map[f]
                            and G.tgt(2, a) == F.mor_map[g]):
                        expected.add(("pb2", a, f, g))
    assert set(P.cells[2]) == expected
    assert all_pass(check_gray_axioms(P))


def test_pullback_empty_index():
    G = fixture("BIG")
    C = FinCat("empty")
    F = Functor(C, G, {}, {})
    P, _ = pullback_along_functor(F, G)
    assert all(len(P.cells[d]) == 0 for d in range(4))


def test_pullback_rejects_non_functor():
    G = fixture("PAIR")
    C = _free_interval_fincat()
    bad = Functor(C, G, {"0": "x", "1": "z"},
                  {"id0": "idx", "id1": "idz", "a": "f"})  # f: x->y, not x->z
    with pytest.raises(NotAFunctor):
        pullback_along_functor(bad, G)


def test_unknown_fixture():
    from graypath.fixtures import UnknownFixture
    with pytest.raises(UnknownFixture):
        fixture("NOPE")


def test_cyc2_group_law():
    C = fixture("CYC2")
    assert C.comp0("s", "s") == "e"
    assert C.inv_1("s") == "s"
    assert C.is_groupoid
