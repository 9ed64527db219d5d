from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nodal, tac
from curvestab.curve_model import validate_curve_config
from curvestab.errors import UnsupportedKindError, ValidationError
from curvestab.numerical_k import NumClass, admissible_class
from curvestab.stability import Order, StabilityParams, slope_order
from curvestab.walls import (Hyperplane, ParamRegion, chamber_side, chambers, chambers_with,
                             decompositions, enumerate_walls, params_at, wall_hyperplane, wall_t,
                             walls_for)

NODE = validate_curve_config("node")
TAC = validate_curve_config("tacnode")


def node_classes(rmax, dmax):
    for r in range(1, rmax + 1):
        for d in range(-dmax, dmax + 1):
            for l in range(0, 2 * r + 1):
                if gcd(gcd(r, d), l) == 1:
                    yield nodal(r, d, l)


def brute_force(v):
    """Every split v = u + w with equal slope for some t in (0, 1), by direct search."""
    r, d, l = v.coords()
    found = set()
    for rp in range(1, r):
        for lp in range(0, 2 * rp + 1):
            for dp in range(-40, 41):
                u = nodal(rp, dp, lp)
                if not admissible_class(v - u, NODE):
                    continue
                den = lp * r - l * rp
                if den == 0:
                    continue
                t = Fraction(dp * r - d * rp, den)
                if 0 < t < 1:
                    found.add((t, frozenset((u, v - u))))
    return found


def from_walls(v):
    return {(wl.locus, frozenset((dec.u, dec.w)))
            for wl in walls_for(v, NODE) for dec in wl.decomps}


class TestHyperplane:
    def test_normalization(self):
        hp = wall_hyperplane(tac(2, 1, 2, 4), tac(1, 0, 0, 0))
        assert hp.equation() == "2delta1 + 4delta2 = 1"
        assert hp.coeffs[0] > 0

    def test_equation_text(self):
        assert Hyperplane((2, 0), 1).equation() == "2delta1 = 1"
        assert Hyperplane((2, 4), 3).equation() == "2delta1 + 4delta2 = 3"

    @settings(max_examples=60)
    @given(st.integers(2, 5), st.integers(-4, 4), st.integers(0, 4), st.integers(0, 8),
           st.integers(1, 4), st.integers(-4, 4), st.integers(0, 4), st.integers(0, 8))
    def test_swap_invariant(self, r, d, l1, l2, rp, dp, m1, m2):
        rp = min(rp, r - 1)
        v, u = tac(r, d, l1, l2), tac(rp, dp, m1, m2)
        if not any(l * rp - lp * r for l, lp in zip((l1, l2), (m1, m2))):
            return
        assert wall_hyperplane(v, u) == wall_hyperplane(v, v - u)

    def test_wall_t(self):
        assert wall_t(nodal(2, 3, 2), nodal(1, 1, 0)) == Fraction(1, 2)
        assert wall_t(nodal(2, 3, 2), nodal(1, 1, 1)) is None


class TestRegions:
    def test_node_path(self):
        reg = ParamRegion.node_path()
        assert reg.contains([Fraction(1, 2)]) and not reg.contains([Fraction(1)])

    def test_triangle(self):
        reg = ParamRegion.tacnode_triangle()
        assert reg.contains([Fraction(1, 3), Fraction(1, 3)])
        assert not reg.contains([Fraction(1, 2), Fraction(1, 2)])
        assert set(reg.vertices) == {(0, 0), (1, 0), (0, 1)}


class TestEnumeration:
    def test_rank_one_has_no_walls(self):
        assert walls_for(nodal(1, 0, 1), NODE) == []

    def test_rank_two(self):
        (wl,) = walls_for(nodal(2, 3, 2), NODE)
        assert wl.locus == Fraction(1, 2)
        assert (wl.main.u, wl.main.w) == (nodal(1, 1, 0), nodal(1, 2, 2))
        assert wl.simple

    def test_bad_inputs(self):
        with pytest.raises(ValidationError):
            walls_for(nodal(2, 2, 2), NODE)
        with pytest.raises(ValidationError):
            walls_for(nodal(1, 0, 3), NODE)
        with pytest.raises(ValidationError):
            walls_for(nodal(0, 1, 0), NODE)

    def test_reducible_unsupported(self):
        curve = validate_curve_config({
            "n": 2, "genera": [1, 1], "m": 1, "e": 1, "pa_minus_g": 1,
            "sing_points": [{"preimages": [{"component": 0, "lengths": [1]},
                                           {"component": 1, "lengths": [1]}]}]})
        with pytest.raises(UnsupportedKindError):
            walls_for(NumClass((2, 2), (1, 0), ((1,),)), curve)

    def test_orientation_low_side(self):
        for wl in walls_for(nodal(6, 1, 6), NODE):
            p = StabilityParams.node_path(wl.locus - Fraction(1, 100))
            assert slope_order(p, wl.main.u, wl.main.w) == Order.LESS

    def test_deterministic(self):
        a = walls_for(nodal(6, 1, 6), NODE)
        b = walls_for(nodal(6, 1, 6), NODE)
        assert a == b
        assert [w.locus for w in a] == sorted(w.locus for w in a)

    def test_decompositions_sum(self):
        v = tac(2, 1, 2, 4)
        for u, w, hp in decompositions(v, ParamRegion.tacnode_triangle(), TAC):
            assert u + w == v
            assert hp.meets_open(ParamRegion.tacnode_triangle())



@pytest.mark.parametrize("v", list(node_classes(3, 6)), ids=str)
def test_brute_force_oracle(v):
    assert from_walls(v) == brute_force(v)


class TestChambers:
    def test_node(self):
        chs = chambers(nodal(2, 3, 2), NODE)
        assert [c.label for c in chs] == ["R1", "R2"]
        assert chs[0].sample[0] < Fraction(1, 2) < chs[1].sample[0]

    def test_sides_flip_across_walls(self):
        v = nodal(6, 1, 6)
        walls = walls_for(v, NODE)
        for wl in walls:
            lo = params_at([wl.locus - Fraction(1, 1000)])
            hi = params_at([wl.locus + Fraction(1, 1000)])
            for (_, a), (_, b) in zip(chamber_side(lo, wl), chamber_side(hi, wl)):
                assert a == b.flipped() and a != Order.EQUAL

    def test_on_wall_rejected(self):
        (wl,) = walls_for(nodal(2, 3, 2), NODE)
        with pytest.raises(ValidationError):
            chamber_side(params_at([Fraction(1, 2)]), wl)

    def test_tacnode_arrangement(self):
        v = tac(2, 1, 2, 4)
        walls = walls_for(v, TAC)
        chs = chambers(v, TAC, walls=walls)
        assert chs[0].sample == (Fraction(1, 6), Fraction(1, 12))
        for ch in chs:
            assert ParamRegion.tacnode_triangle().contains(ch.sample)
        assert len({c.signs for c in chs}) == len(chs)
        assert chambers_with(walls[1], chs) == ["R1"]
        assert chambers_with(walls[2], chs) == ["R1", "R2"]

    def test_chamber_areas_cover_triangle(self):
        chs = chambers(tac(2, 1, 2, 4), TAC)

        def area(poly):
            s = 0
            for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
                s += x1 * y2 - x2 * y1
            return abs(s) / 2
        assert sum(area(list(c.vertices)) for c in chs) == Fraction(1, 2)
