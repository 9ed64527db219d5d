"""Acceptance checks, one per criterion; a summary line per criterion is printed at the end.

Run as ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import io
import random
import sys
import time
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import nodal, record, tac  # noqa: E402
from curvestab.auslander import (enumerate_submodule_types, exhaustive_submodule_types,
                                 ext_dims, random_module, submodule_witness)  # noqa: E402
from curvestab.cli import run  # noqa: E402
from curvestab.curve_model import conductor_lookup, validate_curve_config  # noqa: E402
from curvestab.genus import G  # noqa: E402
from curvestab.moduli_geometry import (ext1, flip_data, flip_gap, moduli_dim,
                                       wall_crossing_report)  # noqa: E402
from curvestab.numerical_k import admissible_class, euler_auslander  # noqa: E402
from curvestab.walls import chambers_2d, chambers_with, walls_for  # noqa: E402

NODE = validate_curve_config("node")
TAC = validate_curve_config("tacnode")


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def check(number, ok, text):
    record(number, ok, text)
    assert ok, text


# -- 1 -----------------------------------------------------------------------

NODE_616 = [
    ("1/6", "(3, 1, 6) + 3(1, 0, 0)", "No", "N/A"),
    ("1/4", "(3, 1, 5) + (3, 0, 1)", "Yes", "P^{9g-6} -> * <- P^{9g+12}"),
    ("1/3", "(2, 1, 4) + 2(2, 0, 1)", "No", "N/A"),
    ("1/2", "(3, 1, 4) + (3, 0, 2)", "Yes", "P^{9g-3} -> * <- P^{9g+3}"),
    ("1/2", "(3, 2, 6) + (3, -1, 0)", "Yes", "P^{9g-1} -> * <- P^{9g+17}"),
    ("2/3", "2(2, 1, 3) + (2, -1, 0)", "No", "N/A"),
    ("3/4", "(3, 2, 5) + (3, -1, 1)", "Yes", "P^{9g} -> * <- P^{9g+6}"),
    ("5/6", "3(1, 1, 2) + (3, -2, 0)", "No", "N/A"),
]


def test_criterion_1_node_616():
    start = time.perf_counter()
    code, out, _ = cli("walls", "--preset", "node", "--class", "6,1,6")
    elapsed = time.perf_counter() - start
    rows = [tuple(c.strip() for c in line.strip("|").split("|"))
            for line in out.splitlines()[2:]]
    ok = code == 0 and rows == NODE_616 and elapsed < 1
    check(1, ok, f"node (6,1,6): {len(rows)}/8 rows exact, {elapsed:.3f}s (< 1s)")


# -- 2 and 3 -------------------------------------------------------------------

TAC_WALLS = [
    ((1, -1, 0, 0), (1, 2, 2, 4), "2delta1 + 4delta2 = 3"),
    ((1, 0, 0, 0), (1, 1, 2, 4), "2delta1 + 4delta2 = 1"),
    ((1, 0, 0, 1), (1, 1, 2, 3), "2delta1 + 2delta2 = 1"),
    ((1, 0, 0, 2), (1, 1, 2, 2), "2delta1 = 1"),
]
TAC_DIMS = [
    (G, G, G + 4, G + 2),
    (G, G, G + 6, G),
    (G + 1, G + 1, G + 3, G + 1),
    (G, G, G + 2, G + 4),
]
TAC_SETS = [["R1", "R2", "R3", "R5"], ["R1"], ["R1", "R2"], ["R1", "R2", "R3", "R4"]]


def _tac_walls():
    return walls_for(tac(2, 1, 2, 4), TAC)


def _wall_triples(walls):
    return [(w.main.u.coords(), w.main.w.coords(), w.hyperplane.equation()) for w in walls]


def test_tacnode_four_tabulated_walls():
    """The four tabulated walls are found with the tabulated (u, w) and equations."""
    triples = _wall_triples(_tac_walls())
    assert triples[:4] == TAC_WALLS


def test_tacnode_tabulated_dims():
    """The 16 dimension entries of the four tabulated walls."""
    walls = _tac_walls()[:4]
    got = [(moduli_dim(w.main.u, TAC), moduli_dim(w.main.w, TAC),
            ext1(w.main.u, w.main.w, TAC), ext1(w.main.w, w.main.u, TAC)) for w in walls]
    assert got == TAC_DIMS


def test_criterion_2_tacnode_walls():
    start = time.perf_counter()
    walls = _tac_walls()
    chs = chambers_2d(tac(2, 1, 2, 4), TAC, walls)
    elapsed = time.perf_counter() - start
    triples = _wall_triples(walls)
    ok = triples == TAC_WALLS and len(chs) == 5 and elapsed < 1
    extra = [t[2] for t in triples if t not in TAC_WALLS]
    check(2, ok, f"tacnode (2,1,2,4): {len(walls)} walls (want 4), {len(chs)} chambers "
                 f"(want 5), extra {extra}, {elapsed:.3f}s")


def test_criterion_3_tacnode_dims_and_chambers():
    walls = _tac_walls()
    chs = chambers_2d(tac(2, 1, 2, 4), TAC, walls)
    rep = wall_crossing_report(tac(2, 1, 2, 4), TAC)
    dims = [(r.dim_u, r.dim_w, r.ext_uw, r.ext_wu) for r in rep.rows[:4]]
    sets = [chambers_with(w, chs) for w in walls[:4]]
    n_dims = sum(a == b for x, y in zip(dims, TAC_DIMS) for a, b in zip(x, y))
    n_sets = sum(a == b for a, b in zip(sets, TAC_SETS))
    check(3, n_dims == 16 and n_sets == 4,
          f"tacnode table: {n_dims}/16 dims, {n_sets}/4 chamber sets exact, got {sets}")


# -- 4 -----------------------------------------------------------------------

def test_criterion_4_ell_pairs():
    pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (2, 4)]
    want = [G, G + 1, G, G + 1, G + 2, G + 1, G, G + 1, G]
    types = sorted(enumerate_submodule_types(2))
    got = [moduli_dim(tac(1, 0, a, b), TAC) for a, b in types]
    check(4, types == pairs and got == want, f"(l1, l2) table: 9 pairs {types == pairs}, dims {got == want}")


# -- 5 -----------------------------------------------------------------------

def test_criterion_5_conductors():
    code, out, _ = cli("conductor", "table")
    rows = [tuple(c.strip() for c in line.strip("|").split("|")) for line in out.splitlines()[2:]]
    exact = {("Node", "xy", "(x, y)"), ("Cusp", "y^2-x^3", "(x, y)"),
             ("A_k", "x^{k+1} + y^2", "(x^{\\lfloor (k+1)/2\\rfloor}, y)")}
    ordinary = conductor_lookup("ordinary", 4)
    ok = (code == 0 and exact <= set(rows) and ordinary.conductor_display == "(x, y)^3"
          and bool(ordinary.note)
          and ("Ordinary n-uple point", "prod_i (y - lambda_i x)", "(x, y)^{n-1}") in rows)
    check(5, ok, "conductor table: node, cusp, A_k exact; ordinary emits (x, y)^{n-1} with note")


# -- 6 -----------------------------------------------------------------------

def test_criterion_6_auslander_oracle():
    rng = random.Random(6)
    start = time.perf_counter()
    failures = 0
    for _ in range(500):
        m = random_module(rng.randint(0, 4), rng.randint(0, 4), rng)
        n = random_module(rng.randint(0, 4), rng.randint(0, 4), rng)
        h, e1, e2 = ext_dims(m, n)
        failures += h - e1 + e2 != euler_auslander(*m.dims, *n.dims)
    elapsed = time.perf_counter() - start
    check(6, failures == 0 and elapsed < 10, f"Auslander Euler form: 500 pairs, {failures} failures, {elapsed:.2f}s (< 10s)")


# -- 7 -----------------------------------------------------------------------

def test_criterion_7_submodules():
    ok = True
    for n in (1, 2):
        want = {(a, b) for a in range(n + 1) for b in range(a, a + n + 1)}
        ok &= exhaustive_submodule_types(n) == want
        for a, b in want:
            k, inc = submodule_witness(n, a, b)
            ok &= k.dims == (a, b) and inc.commutes() and inc.is_injective()
    check(7, ok, "submodules of P2^n over F2 (n = 1, 2) match; witnesses verified")


# -- 8 -----------------------------------------------------------------------

def test_criterion_8_flip_identity():
    count = bad = 0
    for r in range(2, 7):
        for d in range(-3, 4):
            for l in range(0, 2 * r + 1):
                if gcd(gcd(r, d), l) != 1:
                    continue
                for wl in walls_for(nodal(r, d, l), NODE):
                    if not wl.simple:
                        continue
                    fd = flip_data(wl, NODE)
                    gap = fd.b - fd.c
                    count += 1
                    bad += not (gap.coef == 0 and Fraction(gap.const) == flip_gap(fd.u, fd.w, fd.t)
                                and gap.const > 0)
    check(8, bad == 0 and count > 0, f"flip identity: {count} simple walls, {bad} failures")


# -- 9 -----------------------------------------------------------------------

def _naive(v):
    r, d, l = v.coords()
    out = set()
    for rp in range(1, r):
        for lp in range(0, 2 * rp + 1):
            den = lp * r - l * rp
            if den == 0:
                continue
            # t in (0, 1) forces d' r strictly between d r' and d r' + den
            lo, hi = sorted((d * rp, d * rp + den))
            for dp in range(lo // r - 1, hi // r + 2):
                u = nodal(rp, dp, lp)
                t = Fraction(dp * r - d * rp, den)
                if 0 < t < 1 and admissible_class(v - u, NODE):
                    out.add((t, frozenset((u, v - u))))
    return out


def test_criterion_9_brute_force():
    total = agree = 0
    for r in range(1, 4):
        for d in range(-6, 7):
            for l in range(0, 2 * r + 1):
                if gcd(gcd(r, d), l) != 1:
                    continue
                v = nodal(r, d, l)
                got = {(w.locus, frozenset((x.u, x.w))) for w in walls_for(v, NODE) for x in w.decomps}
                total += 1
                agree += got == _naive(v)
    check(9, agree == total, f"brute-force wall oracle: {agree}/{total} classes agree")


# -- 10 ----------------------------------------------------------------------

def _rank_two_ok(k):
    d = 2 * k + 1
    rep = wall_crossing_report(nodal(2, d, 2), NODE)
    if len(rep.walls) != 1:
        return False
    wl = rep.walls[0]
    fd = flip_data(wl, NODE)
    near_zero, near_one = rep.endpoints
    code, out, _ = cli("report", "--preset", "node", "--class", f"2,{d},2")
    return (wl.locus == Fraction(1, 2)
            and (wl.main.u, wl.main.w) == (nodal(1, k, 0), nodal(1, k + 1, 2))
            and fd.locus_dims == (G - 1, G + 1)
            and (near_zero.fiber, near_zero.fiber_dim) == ("Gr(4, 2)", 4)
            and near_one.target == ("M_C", 2, d)
            and code == 0 and "P^{g-1} -> * <- P^{g+1}" in out)


def test_criterion_10_rank_two():
    passed = [k for k in range(3) if _rank_two_ok(k)]
    check(10, passed == [0, 1, 2], f"node (2, 2k+1, 2): k = {passed} of [0, 1, 2] match")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-p", "no:cacheprovider"]))
