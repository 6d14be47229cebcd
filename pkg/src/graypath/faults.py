"""Seeded single-entry corruption, used to prove the checkers have teeth.

A corruption replaces one table entry by a different cell of the same
dimension.  Replacements with different faces are preferred (always caught
by the incidence laws); same-face swaps exercise the equational laws.
"""

from __future__ import annotations

import random

from .kernel import GrayCat, all_pass, check_gray_axioms, structural_violations

_TABLES = ["comp0_11", "whisk_l12", "whisk_r12", "whisk_l13", "whisk_r13",
           "comp1_22", "whisk_l23", "whisk_r23", "comp2_33", "tensor_"]

_OUT_DIM = {"comp0_11": 1, "whisk_l12": 2, "whisk_r12": 2, "whisk_l13": 3,
            "whisk_r13": 3, "comp1_22": 2, "whisk_l23": 3, "whisk_r23": 3,
            "comp2_33": 3, "tensor_": 3}


def copy_graycat(C):
    D = GrayCat(C.name)
    for d in C.DIMS:
        for c in C.cells[d]:
            if d == 0:
                D.add_cell(0, c)
            else:
                D.add_cell(d, c, C.src_[d][c], C.tgt_[d][c])
    for d in (0, 1, 2):
        D.id_up[d] = dict(C.id_up[d])
    for t in _TABLES:
        setattr(D, t, dict(getattr(C, t)))
    D.is_groupoid = C.is_groupoid
    D.inv1, D.inv2, D.inv3 = dict(C.inv1), dict(C.inv2), dict(C.inv3)
    D.generators = list(C.generators) if C.generators is not None else None
    return D


def corrupt_graycat(C, seed):
    """Return (corrupted copy, description) for a random single-entry fault."""
    rng = random.Random(seed)
    D = copy_graycat(C)
    candidates = [t for t in _TABLES if getattr(D, t)]
    table_name = rng.choice(candidates)
    table = getattr(D, table_name)
    key = rng.choice(sorted(table, key=repr))
    old = table[key]
    dim = _OUT_DIM[table_name]
    others = [c for c in D.cells[dim] if c != old]
    if not others:
        # single-cell dimension: break a face map instead
        D.src_[dim][old] = D.tgt_[dim][old]
        return D, (table_name, key, old, "face-swap")
    diff_faces = [c for c in others
                  if (D.src_[dim][c], D.tgt_[dim][c])
                  != (D.src_[dim][old], D.tgt_[dim][old])]
    pool = diff_faces if (diff_faces and rng.random() < 0.7) else others
    new = rng.choice(sorted(pool, key=repr))
    table[key] = new
    return D, (table_name, key, old, new)


def corrupt_m_cocycle(H, seed):
    """Swap one m-cocycle entry for a parallel 2-cell of the path space."""
    from .pathcomp import m_pseudo
    rng = random.Random(seed)
    PH, K, m = m_pseudo(H)
    keys = sorted(m.cocycle, key=repr)
    key = rng.choice(keys)
    old = m.cocycle[key]
    others = [c for c in PH.cells[2]
              if c != old and PH.src(2, c) == PH.src(2, old)
              and PH.tgt(2, c) == PH.tgt(2, old)]
    if not others:
        others = [c for c in PH.cells[2] if c != old]
    m.cocycle[key] = rng.choice(sorted(others, key=repr))
    return m, (key, old, m.cocycle[key])


def corrupt_transformation(t, seed):
    """Swap one cocycle or 1-cell component of a transformation."""
    rng = random.Random(seed)
    H = t.H
    from .homspace import LaxTransformation
    t2 = LaxTransformation(t.F, t.G, t.at0, t.at1, t.at2, t.coc, name="bad")
    keys = sorted(t2.at1, key=repr)
    key = rng.choice(keys)
    old = t2.at1[key]
    others = [c for c in H.cells[2] if c != old]
    t2.at1 = dict(t2.at1)
    t2.at1[key] = rng.choice(sorted(others, key=repr))
    return t2, (key, old, t2.at1[key])


def fault_detected(C):
    if structural_violations(C):
        return True
    return not all_pass(check_gray_axioms(C))


def run_fault_trials(make_fixture, names, count, seed=0):
    """Corrupt `count` seeded single entries across the named fixtures.

    Returns (detected, total, misses); the acceptance demands
    detected == total.
    """
    misses = []
    for i in range(count):
        name = names[i % len(names)]
        C = make_fixture(name)
        D, info = corrupt_graycat(C, seed + i)
        if not fault_detected(D):
            misses.append((name, seed + i, info))
    return count - len(misses), count, misses
