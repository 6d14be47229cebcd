"""The path space of a Gray-category.

Cells of path(B) are square diagrams in the base B:

    ('sq', u, g0, g1, f, f1)     u: g1 #0 f => f1 #0 g0;  top f, bottom f1,
                                 left g0, right g1
    ('p2', t, a1, a2, gq, hq)    a1: g0 => h0, a2: g1 => h1 between parallel
                                 squares, and
                                 t: (f1 #0 a1) #1 u_g  =>  u_h #1 (a2 #0 f)
    ('p3', G1, G2, aq, bq)       G1: a1 => b1, G2: a2 => b2; the square of
                                 whiskered 3-cells around them must commute

A path 3-cell stores only (G1, G2) plus its boundary 2-cells; the two
pastings its commuting condition equates are recomputed on construction.

PathView evaluates every operation by formula over any GrayCat-like base,
so the construction iterates; build_pathspace additionally materializes
cells and tables for a finite base.

Note on the two whisker readings: the left-whisker display for squares is
rendered ambiguously in places (its legend mixes the names of the outer
square and the moving cell); the formulas below follow the reading forced
by incidence, which the construction-time checks re-verify on every call.
The alternative reading fails those checks on the first nontrivial input.
"""

from __future__ import annotations

from .kernel import GrayCat, GrayError, NotComposable, StrictMap
from .resolution import PseudoMap, Q1Layer, q1_normalize, q1_tag, q2_cell, q3_cell


# -- constructors with incidence checks --------------------------------------


def sq(B, u, g0, g1, f, f1):
    if B.src(2, u) != B.comp0(g1, f) or B.tgt(2, u) != B.comp0(f1, g0):
        raise NotComposable(f"square 2-cell {u!r} has wrong faces")
    return ("sq", u, g0, g1, f, f1)


def src_paste(B, a1, gq):
    """(f1 #0 a1) #1 u_g: the pasting on the source side of a path 2-cell."""
    return B.comp1(B.wl12(gq[5], a1), gq[1])


def tgt_paste(B, a2, hq, top):
    """u_h #1 (a2 #0 f)."""
    return B.comp1(hq[1], B.wr12(a2, top))


def p2(B, t, a1, a2, gq, hq):
    if gq[4] != hq[4] or gq[5] != hq[5]:
        raise NotComposable("path 2-cell needs parallel squares")
    if B.src(2, a1) != gq[2] or B.tgt(2, a1) != hq[2]:
        raise NotComposable("a1 does not connect the left faces")
    if B.src(2, a2) != gq[3] or B.tgt(2, a2) != hq[3]:
        raise NotComposable("a2 does not connect the right faces")
    if (B.src(3, t) != src_paste(B, a1, gq)
            or B.tgt(3, t) != tgt_paste(B, a2, hq, gq[4])):
        raise NotComposable("path 2-cell 3-component has wrong faces")
    return ("p2", t, a1, a2, gq, hq)


def p3(B, G1, G2, aq, bq):
    if aq[4] != bq[4] or aq[5] != bq[5]:
        raise NotComposable("path 3-cell needs parallel path 2-cells")
    if B.src(3, G1) != aq[2] or B.tgt(3, G1) != bq[2]:
        raise NotComposable("G1 does not connect the a1 components")
    if B.src(3, G2) != aq[3] or B.tgt(3, G2) != bq[3]:
        raise NotComposable("G2 does not connect the a2 components")
    gq, hq = aq[4], aq[5]
    lhs = B.comp2(bq[1], B.wr23(B.wl13(gq[5], G1), gq[1]))
    rhs = B.comp2(B.wl23(hq[1], B.wr13(G2, gq[4])), aq[1])
    if lhs != rhs:
        raise NotComposable("path 3-cell commuting condition fails")
    return ("p3", G1, G2, aq, bq)


def pdim(c):
    tag = c[0] if isinstance(c, tuple) and c else None
    return {"sq": 1, "p2": 2, "p3": 3}.get(tag, 0)


def pd0(B, d, c):
    """The source-side projection d0 to the base."""
    if d == 0:
        return B.src(1, c)
    return {1: c[2], 2: c[2], 3: c[1]}[d]


def pd1(B, d, c):
    if d == 0:
        return B.tgt(1, c)
    return {1: c[3], 2: c[3], 3: c[2]}[d]


def degeneracy(B, d, c):
    """i: the degenerate path cell on a base d-cell."""
    if d == 0:
        return B.ident(0, c)
    if d == 1:
        x, y = B.src(1, c), B.tgt(1, c)
        return sq(B, B.ident(1, c), c, c, B.ident(0, x), B.ident(0, y))
    if d == 2:
        f, g = B.src(2, c), B.tgt(2, c)
        gq, hq = degeneracy(B, 1, f), degeneracy(B, 1, g)
        return p2(B, B.ident(2, c), c, c, gq, hq)
    a, b = B.src(3, c), B.tgt(3, c)
    return p3(B, c, c, degeneracy(B, 2, a), degeneracy(B, 2, b))


def path_map(fn, c):
    """Apply a dimension-indexed base-cell map to a path cell's components."""
    d = pdim(c)
    if d == 0:
        return fn(1, c)
    if d == 1:
        return ("sq", fn(2, c[1]), fn(1, c[2]), fn(1, c[3]),
                fn(1, c[4]), fn(1, c[5]))
    if d == 2:
        return ("p2", fn(3, c[1]), fn(2, c[2]), fn(2, c[3]),
                path_map(fn, c[4]), path_map(fn, c[5]))
    return ("p3", fn(3, c[1]), fn(3, c[2]),
            path_map(fn, c[3]), path_map(fn, c[4]))


class PathView:
    """Formula-level Gray operations on path cells over a base."""

    def __init__(self, base):
        self.base = base
        self.name = f"path({getattr(base, 'name', '?')})"
        self.is_groupoid = getattr(base, "is_groupoid", False)

    # faces and identities

    def src(self, d, c):
        return c[4] if d <= 2 else c[3]

    def tgt(self, d, c):
        return c[5] if d <= 2 else c[4]

    def src0(self, d, c):
        while d > 1:
            c = self.src(d, c)
            d -= 1
        return c[4]

    def tgt0(self, d, c):
        while d > 1:
            c = self.src(d, c)
            d -= 1
        return c[5]

    def ident(self, d, c):
        B = self.base
        if d == 0:
            x, y = B.src(1, c), B.tgt(1, c)
            return sq(B, B.ident(1, c), B.ident(0, x), B.ident(0, y), c, c)
        if d == 1:
            return p2(B, B.ident(2, c[1]), B.ident(1, c[2]), B.ident(1, c[3]),
                      c, c)
        if d == 2:
            return p3(B, B.ident(2, c[2]), B.ident(2, c[3]), c, c)
        raise GrayError("no identities above dimension 3")

    def is_id1(self, c):
        return c == self.ident(0, c[4])

    def is_id2(self, c):
        return c == self.ident(1, c[4])

    def is_id3(self, c):
        return c == self.ident(2, c[3])

    # compositions

    def comp0(self, h, g):
        """Vertical pasting, g on top: requires h.top == g.bottom."""
        B = self.base
        if h[4] != g[5]:
            raise NotComposable("path comp0: top/bottom mismatch")
        u = B.comp1(B.wr12(h[1], g[2]), B.wl12(h[3], g[1]))
        return sq(B, u, B.comp0(h[2], g[2]), B.comp0(h[3], g[3]), g[4], h[5])

    def comp1(self, b, a):
        B = self.base
        if b[4] != a[5]:
            raise NotComposable("path comp1: faces mismatch")
        gq, kq = a[4], b[5]
        f, f1 = gq[4], gq[5]
        t = B.comp2(B.wr23(b[1], B.wr12(a[3], f)),
                    B.wl23(B.wl12(f1, b[2]), a[1]))
        return p2(B, t, B.comp1(b[2], a[2]), B.comp1(b[3], a[3]), gq, kq)

    def comp2(self, d3, g3):
        B = self.base
        if d3[3] != g3[4]:
            raise NotComposable("path comp2: faces mismatch")
        return p3(B, B.comp2(d3[1], g3[1]), B.comp2(d3[2], g3[2]),
                  g3[3], d3[4])

    # whiskers

    def wl12(self, k, a):
        """Whisker a path 2-cell by a later square k (k.top == squares' bottom)."""
        B = self.base
        gq, hq = a[4], a[5]
        if k[4] != gq[5]:
            raise NotComposable("path wl12: faces mismatch")
        step1 = B.wr23(B.inv_3(B.tensor(k[1], a[2])), B.wl12(k[3], gq[1]))
        step2 = B.wl23(B.wr12(k[1], hq[2]), B.wl13(k[3], a[1]))
        t = B.comp2(step2, step1)
        return p2(B, t, B.wl12(k[2], a[2]), B.wl12(k[3], a[3]),
                  self.comp0(k, gq), self.comp0(k, hq))

    def wr12(self, b, n):
        """Whisker a path 2-cell by an earlier square n (squares' top == n.bottom)."""
        B = self.base
        kq, mq = b[4], b[5]
        if kq[4] != n[5]:
            raise NotComposable("path wr12: faces mismatch")
        step1 = B.wr23(B.wr13(b[1], n[2]), B.wl12(kq[3], n[1]))
        step2 = B.wl23(B.wr12(mq[1], n[2]), B.tensor(b[3], n[1]))
        t = B.comp2(step2, step1)
        return p2(B, t, B.wr12(b[2], n[2]), B.wr12(b[3], n[3]),
                  self.comp0(kq, n), self.comp0(mq, n))

    def wl13(self, k, g3):
        B = self.base
        return p3(B, B.wl13(k[2], g3[1]), B.wl13(k[3], g3[2]),
                  self.wl12(k, g3[3]), self.wl12(k, g3[4]))

    def wr13(self, g3, n):
        B = self.base
        return p3(B, B.wr13(g3[1], n[2]), B.wr13(g3[2], n[3]),
                  self.wr12(g3[3], n), self.wr12(g3[4], n))

    def wl23(self, c, g3):
        B = self.base
        if c[4] != g3[3][5]:
            raise NotComposable("path wl23: faces mismatch")
        return p3(B, B.wl23(c[2], g3[1]), B.wl23(c[3], g3[2]),
                  self.comp1(c, g3[3]), self.comp1(c, g3[4]))

    def wr23(self, g3, c):
        B = self.base
        if g3[3][4] != c[5]:
            raise NotComposable("path wr23: faces mismatch")
        return p3(B, B.wr23(g3[1], c[2]), B.wr23(g3[2], c[3]),
                  self.comp1(g3[3], c), self.comp1(g3[4], c))

    # horizontal structure

    def hcomp_left(self, b, a):
        return self.comp1(self.wr12(b, a[5]), self.wl12(b[4], a))

    def hcomp_right(self, b, a):
        return self.comp1(self.wl12(b[5], a), self.wr12(b, a[4]))

    def tensor(self, b, a):
        B = self.base
        if b[4][4] != a[4][5]:
            raise NotComposable("path tensor: not 0-composable")
        return p3(B, B.tensor(b[2], a[2]), B.tensor(b[3], a[3]),
                  self.hcomp_left(b, a), self.hcomp_right(b, a))

    # inverses

    def inv_2(self, a):
        B = self.base
        gq, hq = a[4], a[5]
        f = gq[4]
        f1 = gq[5]
        ia1, ia2 = B.inv_2(a[2]), B.inv_2(a[3])
        t = B.wl23(B.wl12(f1, ia1), B.wr23(B.inv_3(a[1]), B.wr12(ia2, f)))
        return p2(B, t, ia1, ia2, hq, gq)

    def inv_3(self, g3):
        B = self.base
        return p3(B, B.inv_3(g3[1]), B.inv_3(g3[2]), g3[4], g3[3])

    def fold0(self, cells, anchor=None):
        if not cells:
            return self.ident(0, anchor)
        out = cells[-1]
        for c in reversed(cells[:-1]):
            out = self.comp0(c, out)
        return out


# -- enumeration and materialization ------------------------------------------


def path_cells(B):
    """All path cells over a finite base, in deterministic order."""
    dec = {h: [] for h in B.cells[1]}
    for (g, f), h in B.comp0_11.items():
        dec[h].append((g, f))
    for h in dec:
        dec[h].sort(key=repr)

    squares = []
    for u in B.cells[2]:
        for (g1, f) in dec[B.src(2, u)]:
            for (f1, g0) in dec[B.tgt(2, u)]:
                squares.append(("sq", u, g0, g1, f, f1))

    by_tb = {}
    for q in squares:
        by_tb.setdefault((q[4], q[5]), []).append(q)
    two_by = {}
    for a in B.cells[2]:
        two_by.setdefault((B.src(2, a), B.tgt(2, a)), []).append(a)
    three_by = {}
    for t in B.cells[3]:
        three_by.setdefault((B.src(3, t), B.tgt(3, t)), []).append(t)

    p2s = []
    for group in by_tb.values():
        for gq in group:
            sp = {}
            for hq in group:
                for a1 in two_by.get((gq[2], hq[2]), ()):
                    key = a1
                    if key not in sp:
                        sp[key] = src_paste(B, a1, gq)
                    for a2 in two_by.get((gq[3], hq[3]), ()):
                        tp = tgt_paste(B, a2, hq, gq[4])
                        for t in three_by.get((sp[key], tp), ()):
                            p2s.append(("p2", t, a1, a2, gq, hq))

    by_sq = {}
    for c in p2s:
        by_sq.setdefault((c[4], c[5]), []).append(c)
    p3s = []
    for group in by_sq.values():
        for aq in group:
            for bq in group:
                for G1 in three_by.get((aq[2], bq[2]), ()):
                    for G2 in three_by.get((aq[3], bq[3]), ()):
                        try:
                            p3s.append(p3(B, G1, G2, aq, bq))
                        except NotComposable:
                            pass
    return list(B.cells[1]), squares, p2s, p3s


def materialize(view, cells, name=""):
    """Tabulate a GrayCat from a formula view and enumerated closed cell sets."""
    c0, c1, c2, c3 = cells
    C = GrayCat(name=name or view.name)
    for c in c0:
        C.add_cell(0, c)
    for c in c1:
        C.add_cell(1, c, view.src(1, c), view.tgt(1, c))
    for c in c2:
        C.add_cell(2, c, view.src(2, c), view.tgt(2, c))
    for c in c3:
        C.add_cell(3, c, view.src(3, c), view.tgt(3, c))

    def place(d, c, what):
        if not C.has_cell(d, c):
            raise GrayError(f"{name}: {what} produced an unlisted {d}-cell {c!r}")
        return c

    for d in (0, 1, 2):
        for c in C.cells[d]:
            C.id_up[d][c] = place(d + 1, view.ident(d, c), "identity")

    by_src1 = {}
    for c in c1:
        by_src1.setdefault(view.src(1, c), []).append(c)
    for g in c1:
        for h in by_src1.get(view.tgt(1, g), ()):
            C.comp0_11[(h, g)] = place(1, view.comp0(h, g), "comp0")

    def tgt0(d, c):
        return view.tgt0(d, c)

    def src0(d, c):
        return view.src0(d, c)

    by_src0_2 = {}
    for a in c2:
        by_src0_2.setdefault(src0(2, a), []).append(a)
    by_tgt0_2 = {}
    for a in c2:
        by_tgt0_2.setdefault(tgt0(2, a), []).append(a)
    for k in c1:
        for a in by_tgt0_2.get(view.src(1, k), ()):
            C.whisk_l12[(k, a)] = place(2, view.wl12(k, a), "whisk_l12")
        for a in by_src0_2.get(view.tgt(1, k), ()):
            C.whisk_r12[(a, k)] = place(2, view.wr12(a, k), "whisk_r12")

    by_src0_3 = {}
    by_tgt0_3 = {}
    for g3 in c3:
        by_src0_3.setdefault(src0(3, g3), []).append(g3)
        by_tgt0_3.setdefault(tgt0(3, g3), []).append(g3)
    for k in c1:
        for g3 in by_tgt0_3.get(view.src(1, k), ()):
            C.whisk_l13[(k, g3)] = place(3, view.wl13(k, g3), "whisk_l13")
        for g3 in by_src0_3.get(view.tgt(1, k), ()):
            C.whisk_r13[(g3, k)] = place(3, view.wr13(g3, k), "whisk_r13")

    by_src2 = {}
    for a in c2:
        by_src2.setdefault(view.src(2, a), []).append(a)
    for a in c2:
        for b in by_src2.get(view.tgt(2, a), ()):
            C.comp1_22[(b, a)] = place(2, view.comp1(b, a), "comp1")

    by_srcface = {}
    by_tgtface = {}
    for g3 in c3:
        a = view.src(3, g3)
        by_srcface.setdefault(view.src(2, a), []).append(g3)
        by_tgtface.setdefault(view.tgt(2, a), []).append(g3)
    for c in c2:
        for g3 in by_tgtface.get(view.src(2, c), ()):
            C.whisk_l23[(c, g3)] = place(3, view.wl23(c, g3), "whisk_l23")
        for g3 in by_srcface.get(view.tgt(2, c), ()):
            C.whisk_r23[(g3, c)] = place(3, view.wr23(g3, c), "whisk_r23")

    by_src3 = {}
    for g3 in c3:
        by_src3.setdefault(view.src(3, g3), []).append(g3)
    for g3 in c3:
        for d3 in by_src3.get(view.tgt(3, g3), ()):
            C.comp2_33[(d3, g3)] = place(3, view.comp2(d3, g3), "comp2")

    for b in c2:
        for a in by_tgt0_2.get(src0(2, b), ()):
            C.tensor_[(b, a)] = place(3, view.tensor(b, a), "tensor")

    if getattr(view, "is_groupoid", False):
        C.is_groupoid = True
        for f in c1:
            for g in c1:
                if (C.comp0_11.get((g, f)) == C.id_up[0][C.src(1, f)]
                        and C.comp0_11.get((f, g)) == C.id_up[0][C.src(1, g)]):
                    C.inv1[f] = g
                    break
    return C


def build_pathspace(B, name=""):
    """Materialize path(B) as a tabulated Gray-category."""
    view = PathView(B)
    return materialize(view, path_cells(B), name=name or f"path({B.name})")


# -- functoriality ------------------------------------------------------------


def p_functor(F, PH, PK):
    """path(F): path(H) -> path(K) for a strict F, acting componentwise."""
    maps = {d: {} for d in (0, 1, 2, 3)}
    fn = lambda d, c: F.maps[d][c]
    for d in (0, 1, 2, 3):
        for c in PH.cells[d]:
            maps[d][c] = path_map(fn, c) if d > 0 else F.maps[1][c]
    out = StrictMap(PH, PK, maps, name=f"path({F.name})")
    return out


def face_map(PH, H, which):
    """d0 or d1: path(H) -> H as a StrictMap between tabulated categories."""
    proj = pd0 if which == 0 else pd1
    maps = {d: {c: proj(H, d, c) for c in PH.cells[d]} for d in (0, 1, 2, 3)}
    return StrictMap(PH, H, maps, name=f"d{which}({H.name})")


def degeneracy_map(H, PH):
    maps = {d: {c: degeneracy(H, d, c) for c in H.cells[d]} for d in (0, 1, 2, 3)}
    return StrictMap(H, PH, maps, name=f"i({H.name})")


# -- the semi-distributive law ------------------------------------------------


def psi(G, c):
    """psi: Q1(path(G)) -> path(Q1(G)) on a symbolic cell.

    Lists of squares become a single square over Q1 G whose 2-cell is the
    full vertical pasting in G and whose side faces are the lists of side
    1-cells; 2- and 3-cells re-anchor their components to those lists.
    """
    L = Q1Layer(G)
    PV = PathView(G)
    tag = q1_tag(c)
    if tag is None:
        # a 0-cell of Q1(path G): a path-0-cell of path(G), i.e. a 1-cell of G
        return q1_normalize(G, [c], anchor=G.src(1, c))
    if tag == "q1":
        anchor_path = c[1]          # a 1-cell of G
        if not c[2]:
            top = q1_normalize(G, [anchor_path], anchor=G.src(1, anchor_path))
            return PathView(L).ident(0, top)
        entries = list(c[2])        # entries[0] is bottom-most
        fold = PV.fold0(entries)
        lefts = [e[2] for e in entries]
        rights = [e[3] for e in entries]
        left = q1_normalize(G, lefts, anchor=G.src(1, entries[-1][2]))
        right = q1_normalize(G, rights, anchor=G.src(1, entries[-1][3]))
        top = q1_normalize(G, [fold[4]], anchor=G.src(1, fold[4]))
        bot = q1_normalize(G, [fold[5]], anchor=G.src(1, fold[5]))
        lsrc = q1_normalize(G, rights + [fold[4]], anchor=G.src(1, fold[4]))
        ltgt = q1_normalize(G, [fold[5]] + lefts, anchor=G.src(1, entries[-1][2]))
        two = q2_cell(G, fold[1], lsrc, ltgt)
        return sq(L, two, left, right, top, bot)
    if tag == "q2":
        A = c[1]                    # a path 2-cell over G
        gq, hq = psi(G, c[2]), psi(G, c[3])
        a1 = q2_cell(G, A[2], gq[2], hq[2])
        a2 = q2_cell(G, A[3], gq[3], hq[3])
        t = q3_cell(G, A[1], src_paste(L, a1, gq), tgt_paste(L, a2, hq, gq[4]))
        return p2(L, t, a1, a2, gq, hq)
    if tag == "q3":
        Gam = c[1]                  # a path 3-cell over G
        aq, bq = psi(G, c[2]), psi(G, c[3])
        G1 = q3_cell(G, Gam[1], aq[2], bq[2])
        G2 = q3_cell(G, Gam[2], aq[3], bq[3])
        return p3(L, G1, G2, aq, bq)
    raise GrayError(f"not a symbolic cell: {c!r}")


# -- the path-space action on pseudo maps --------------------------------------


class PPrime:
    """P' F: path(dom F) -|-> path(cod F), evaluated cell by cell.

    cell() implements the conjugation-by-cocycle formulas; coc() builds the
    cocycle square whose 3-component is an identity (its two boundary
    pastings agree by the cocycle coherences, asserted on construction).
    """

    def __init__(self, F, domops=None, codops=None):
        self.F = F
        self.domview = domops if domops is not None else PathView(F.dom)
        self.codview = codops if codops is not None else PathView(F.cod)

    def cell(self, d, c):
        """The image of a path d-cell; d is explicit since over an iterated
        base the tuple tag does not determine the path dimension."""
        F = self.F
        H = F.cod
        if d == 0:
            return F(1, c)
        if d == 1:
            two = H.comp1(H.inv_2(F.coc(c[5], c[2])),
                          H.comp1(F(2, c[1]), F.coc(c[3], c[4])))
            return sq(H, two, F(1, c[2]), F(1, c[3]), F(1, c[4]), F(1, c[5]))
        if d == 2:
            gq, hq = self.cell(1, c[4]), self.cell(1, c[5])
            t = H.wl23(H.inv_2(F.coc(c[4][5], c[5][2])),
                       H.wr23(F(3, c[1]), F.coc(c[4][3], c[4][4])))
            return p2(H, t, F(2, c[2]), F(2, c[3]), gq, hq)
        return p3(H, F(3, c[1]), F(3, c[2]),
                  self.cell(2, c[3]), self.cell(2, c[4]))

    def coc(self, h, g):
        """The cocycle at a composable pair of path 1-cells (h after g)."""
        F = self.F
        H = F.cod
        if h[4] != g[5]:
            raise NotComposable("PPrime cocycle: pair not composable")
        a1 = F.coc(h[2], g[2])
        a2 = F.coc(h[3], g[3])
        gq = self.codview.comp0(self.cell(1, h), self.cell(1, g))
        hq = self.cell(1, self.domview.comp0(h, g))
        t = H.ident(2, src_paste(H, a1, gq))
        return p2(H, t, a1, a2, gq, hq)

    def as_pseudo_map(self, PG, PH, name=""):
        """Materialized over a tabulated path(dom F)."""
        assign = {d: {c: self.cell(d, c) for c in PG.cells[d]}
                  for d in (0, 1, 2, 3)}
        coc = {}
        for (h, g) in PG.comp0_11:
            coc[(h, g)] = self.coc(h, g)
        return PseudoMap(PG, PH, assign, coc,
                         name=name or f"P({self.F.name})")


def p_on_pseudo(F, PG, PH, name=""):
    return PPrime(F).as_pseudo_map(PG, PH, name=name)
