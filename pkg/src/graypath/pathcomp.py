"""Composition of paths: the pseudo map m, its cocycle, and the inverse o.

m composes a vertically composable pair of path cells by horizontal pasting;
its 2-cocycle resolves the interchange between 'composite of images' and
'image of composites' and has identity 2-cell components, so the face maps
of the resulting internal category are strict even though m is not.

The associativity check composes m with the induced maps of the triple
pullback through kleisli_compose and compares cells and cocycles; it never
re-derives the composite ad hoc.
"""

from __future__ import annotations

from .kernel import (CheckReport, NotAGroupoid, NotComposable, law_report)
from .pathspace import (PathView, build_pathspace, degeneracy, materialize,
                        p2, p3, pd0, pd1, pdim, sq)
from .resolution import PseudoMap, kleisli_compose, validate_pseudo_map


class TupleView:
    """Componentwise operations on n-tuples of path cells over one view."""

    def __init__(self, V, n, name=""):
        self.V = V
        self.n = n
        self.name = name or f"{V.name}^{n}"
        self.is_groupoid = V.is_groupoid

    def _zip(self, op, *tuples):
        return tuple(op(*(t[i] for t in tuples)) for i in range(self.n))

    def src(self, d, c):
        return tuple(self.V.src(d, x) for x in c)

    def tgt(self, d, c):
        return tuple(self.V.tgt(d, x) for x in c)

    def src0(self, d, c):
        return tuple(self.V.src0(d, x) for x in c)

    def tgt0(self, d, c):
        return tuple(self.V.tgt0(d, x) for x in c)

    def ident(self, d, c):
        return tuple(self.V.ident(d, x) for x in c)

    def is_id1(self, c):
        return all(self.V.is_id1(x) for x in c)

    def is_id2(self, c):
        return all(self.V.is_id2(x) for x in c)

    def is_id3(self, c):
        return all(self.V.is_id3(x) for x in c)

    def comp0(self, h, g):
        return self._zip(self.V.comp0, h, g)

    def comp1(self, b, a):
        return self._zip(self.V.comp1, b, a)

    def comp2(self, d3, g3):
        return self._zip(self.V.comp2, d3, g3)

    def wl12(self, k, a):
        return self._zip(self.V.wl12, k, a)

    def wr12(self, a, k):
        return self._zip(self.V.wr12, a, k)

    def wl13(self, k, g):
        return self._zip(self.V.wl13, k, g)

    def wr13(self, g, k):
        return self._zip(self.V.wr13, g, k)

    def wl23(self, c, g):
        return self._zip(self.V.wl23, c, g)

    def wr23(self, g, c):
        return self._zip(self.V.wr23, g, c)

    def tensor(self, b, a):
        return self._zip(self.V.tensor, b, a)

    def inv_2(self, a):
        return self._zip(self.V.inv_2, a)

    def inv_3(self, g):
        return self._zip(self.V.inv_3, g)


def composable_tuples(PH, H, n):
    """n-tuples of path cells, adjacent ones matched by d0 = d1."""
    out = {d: [] for d in (0, 1, 2, 3)}
    for d in (0, 1, 2, 3):
        by_d1 = {}
        for c in PH.cells[d]:
            by_d1.setdefault(pd1(H, d, c), []).append(c)
        tuples = [(c,) for c in PH.cells[d]]
        for _ in range(n - 1):
            tuples = [t + (c,) for t in tuples
                      for c in by_d1.get(pd0(H, d, t[-1]), ())]
        out[d] = tuples
    return out


def build_pullback(PH, H, n=2, name=""):
    """The strict pullback path(H) x_H .. x_H path(H), tabulated."""
    V = TupleView(PathView(H), n)
    cells = composable_tuples(PH, H, n)
    return materialize(V, (cells[0], cells[1], cells[2], cells[3]),
                       name=name or f"pb{n}({H.name})")


# -- the composite of paths ----------------------------------------------------


def m_apply(H, V, d, u, l):
    """Horizontal pasting of the composable pair (u after l) of path d-cells.

    The dimension is explicit because over an iterated base the tuple tag of
    a cell reflects its shape one level down, not its path dimension.
    """
    if d == 0:
        return H.comp0(u, l)
    if d == 1:
        if pd0(H, 1, u) != pd1(H, 1, l):
            raise NotComposable("m: pair of squares not composable")
        two = H.comp1(H.wl12(u[5], l[1]), H.wr12(u[1], l[4]))
        return sq(H, two, l[2], u[3], H.comp0(u[4], l[4]), H.comp0(u[5], l[5]))
    if d == 2:
        fh1 = u[4][5]                       # bottom 1-cell of the upper pair
        top = l[4][4]
        step1 = H.wr23(H.wl13(fh1, l[1]), H.wr12(u[4][1], top))
        step2 = H.wl23(H.wl12(fh1, l[5][1]), H.wr13(u[1], top))
        t = H.comp2(step2, step1)
        return p2(H, t, l[2], u[3],
                  m_apply(H, V, 1, u[4], l[4]), m_apply(H, V, 1, u[5], l[5]))
    return p3(H, l[1], u[2],
              m_apply(H, V, 2, u[3], l[3]), m_apply(H, V, 2, u[4], l[4]))


def m_cocycle(H, V, q, p):
    """The interchanging square between m(q) o m(p) and m(q o p).

    q and p are vertically composable pairs of squares (q below p); the
    3-component whiskers the base tensor of the two off-diagonal 2-cells,
    and both 2-cell faces are identities.
    """
    qu, ql = q
    pu, pl = p
    if qu[4] != pu[5] or ql[4] != pl[5]:
        raise NotComposable("m cocycle: pairs not vertically composable")
    mid = H.tensor(qu[1], pl[1])
    left2 = H.wl12(qu[5], H.wr12(ql[1], pl[2]))
    right2 = H.wr12(H.wl12(qu[3], pu[1]), pl[4])
    t = H.wl23(left2, H.wr23(mid, right2))
    a1 = H.ident(1, H.comp0(ql[2], pl[2]))
    a2 = H.ident(1, H.comp0(qu[3], pu[3]))
    gq = V.comp0(m_apply(H, V, 1, qu, ql), m_apply(H, V, 1, pu, pl))
    hq = m_apply(H, V, 1, V.comp0(qu, pu), V.comp0(ql, pl))
    return p2(H, t, a1, a2, gq, hq)


def m_pseudo(H, PH=None, K=None):
    """m as a PseudoMap on the tabulated pullback."""
    PH = PH or build_pathspace(H)
    K = K or build_pullback(PH, H, 2)
    V = PathView(H)
    assign = {d: {c: m_apply(H, V, d, c[0], c[1]) for c in K.cells[d]}
              for d in (0, 1, 2, 3)}
    coc = {}
    for (qq, pp) in K.comp0_11:
        coc[(qq, pp)] = m_cocycle(H, V, qq, pp)
    return PH, K, PseudoMap(K, PH, assign, coc, name=f"m({H.name})")


def verify_m_pseudo(H, PH=None, K=None):
    """Lemma-level check: m is a pseudo Q1 graph map over path(H) x_H path(H)."""
    PH, K, m = m_pseudo(H, PH, K)
    return validate_pseudo_map(m)


# -- internal category laws ----------------------------------------------------


def _pair_map(K3, K, comp, coc_fn, name):
    """An induced map of pullbacks; coc_fn supplies the paired cocycle."""
    assign = {d: {c: comp(d, c) for c in K3.cells[d]} for d in (0, 1, 2, 3)}
    coc = {}
    for (t, s) in K3.comp0_11:
        coc[(t, s)] = coc_fn(t, s)
    return PseudoMap(K3, K, assign, coc, name=name)


def verify_internal_category(H, fast=False):
    """Associativity, units, and face conditions of the internal category."""
    reports = []
    PH = build_pathspace(H)
    K = build_pullback(PH, H, 2)
    K3 = build_pullback(PH, H, 3)
    V = PathView(H)
    _, _, m = m_pseudo(H, PH, K)

    def law(name, gen):
        reports.append(law_report(name, gen))

    def faces():
        for d in (0, 1, 2, 3):
            for (a, b) in K.cells[d]:
                mc = m(d, (a, b))
                yield pd0(H, d, mc) == pd0(H, d, b), ("d0-of-m", d, a, b)
                yield pd1(H, d, mc) == pd1(H, d, a), ("d1-of-m", d, a, b)

    def units():
        for d in (0, 1, 2, 3):
            for c in PH.cells[d]:
                right = degeneracy(H, d, pd0(H, d, c))
                left = degeneracy(H, d, pd1(H, d, c))
                yield m(d, (c, right)) == c, ("right-unit", d, c)
                yield m(d, (left, c)) == c, ("left-unit", d, c)
        # unital cocycles: composites with degenerate pairs are trivial
        for (q, p) in K.comp0_11:
            if TupleView(V, 2).is_id1(q) or TupleView(V, 2).is_id1(p):
                yield PH.is_id2(m.coc(q, p)), ("unit-cocycle", q, p)

    def assoc():
        def mx1_coc(t, s):
            inner = m_cocycle(H, V, (t[0], t[1]), (s[0], s[1]))
            return (inner, V.ident(1, V.comp0(t[2], s[2])))

        def x1m_coc(t, s):
            inner = m_cocycle(H, V, (t[1], t[2]), (s[1], s[2]))
            return (V.ident(1, V.comp0(t[0], s[0])), inner)

        mx1 = _pair_map(K3, K, lambda d, c: (m(d, (c[0], c[1])), c[2]),
                        mx1_coc, "mx1")
        x1m = _pair_map(K3, K, lambda d, c: (c[0], m(d, (c[1], c[2]))),
                        x1m_coc, "1xm")
        lhs = kleisli_compose(m, mx1)
        rhs = kleisli_compose(m, x1m)
        for d in (0, 1, 2, 3):
            for c in K3.cells[d]:
                yield lhs(d, c) == rhs(d, c), ("assoc-cells", d, c)
        for pair in K3.comp0_11:
            yield lhs.coc(*pair) == rhs.coc(*pair), ("assoc-cocycle", pair)

    law("internal-source-target", faces())
    law("internal-units", units())
    law("internal-associativity", assoc())
    return reports


def m_naturality_check(F, H, K_cod):
    """The strict-functor naturality square for m (elementwise)."""
    PH = build_pathspace(H)
    PK = build_pathspace(K_cod)
    KH = build_pullback(PH, H, 2)
    VH, VK = PathView(H), PathView(K_cod)
    _, _, mH = m_pseudo(H, PH, KH)
    from .pathspace import path_map
    fn = lambda d, c: F.maps[d][c]

    def image(d, c):
        return path_map(fn, c) if d > 0 else F.maps[1][c]

    for d in (0, 1, 2, 3):
        for (a, b) in KH.cells[d]:
            lhs = image(d, mH(d, (a, b)))
            rhs = m_apply(K_cod, VK, d, image(d, a), image(d, b))
            if lhs != rhs:
                return CheckReport("m-naturality", "fail", 0, (d, a, b))
    return CheckReport("m-naturality", "pass",
                       sum(len(KH.cells[d]) for d in (0, 1, 2, 3)))


# -- the inverse map o ---------------------------------------------------------


def o_cell(H, c):
    """The m-inverse of a path cell (H a Gray-groupoid)."""
    if not H.is_groupoid:
        raise NotAGroupoid(f"{H.name} is not flagged as a groupoid")
    d = pdim(c)
    if d == 0:
        return H.inv_1(c)
    if d == 1:
        f, f1 = c[4], c[5]
        fb, f1b = H.inv_1(f), H.inv_1(f1)
        w = H.wl12(f1b, H.wr12(H.inv_2(c[1]), fb))
        return sq(H, w, c[3], c[2], fb, f1b)
    if d == 2:
        gq, hq = c[4], c[5]
        f, f1 = gq[4], gq[5]
        fb, f1b = H.inv_1(f), H.inv_1(f1)
        ogq, ohq = o_cell(H, gq), o_cell(H, hq)
        w3 = H.wl13(f1b, H.wr13(H.inv_3(c[1]), fb))
        t = H.wl23(ohq[1], H.wr23(w3, ogq[1]))
        return p2(H, t, c[3], c[2], ogq, ohq)
    return p3(H, c[2], c[1], o_cell(H, c[3]), o_cell(H, c[4]))


def o_cocycle(H, V, q, p):
    """o^2: o(q) o o(p) => o(q o p), by the whiskered inverse tensor."""
    if q[4] != p[5]:
        raise NotComposable("o cocycle: squares not composable")
    fb = H.inv_1(p[4])
    f1b = H.inv_1(p[5])
    f2b = H.inv_1(q[5])
    mid = H.tensor(H.wr12(H.inv_2(q[1]), f1b), H.inv_2(p[1]))
    t = H.wl13(f2b, H.wr13(mid, fb))
    oq, op = o_cell(H, q), o_cell(H, p)
    gq = V.comp0(oq, op)
    hq = o_cell(H, V.comp0(q, p))
    a1 = H.ident(1, H.comp0(q[3], p[3]))
    a2 = H.ident(1, H.comp0(q[2], p[2]))
    return p2(H, t, a1, a2, gq, hq)


def o_pseudo(H, PH=None):
    PH = PH or build_pathspace(H)
    V = PathView(H)
    assign = {d: {c: o_cell(H, c) for c in PH.cells[d]} for d in (0, 1, 2, 3)}
    coc = {}
    for (q, p) in PH.comp0_11:
        coc[(q, p)] = o_cocycle(H, V, q, p)
    return PH, PseudoMap(PH, PH, assign, coc, name=f"o({H.name})")


def verify_internal_groupoid(H):
    """m(o(c), c) = i d0(c) and m(c, o(c)) = i d1(c), plus o's own validity."""
    reports = []
    PH, o = o_pseudo(H)
    V = PathView(H)

    def inverse_laws():
        for d in (0, 1, 2, 3):
            for c in PH.cells[d]:
                oc = o(d, c)
                lhs = m_apply(H, V, d, oc, c)
                yield lhs == degeneracy(H, d, pd0(H, d, c)), ("left-inverse", d, c)
                rhs = m_apply(H, V, d, c, oc)
                yield rhs == degeneracy(H, d, pd1(H, d, c)), ("right-inverse", d, c)

    n, bad = 0, None
    for ok, wit in inverse_laws():
        n += 1
        if not ok:
            bad = wit
            break
    reports.append(CheckReport("groupoid-inverse-laws",
                               "fail" if bad else "pass", n, bad))
    reports.extend(validate_pseudo_map(o))
    return reports
