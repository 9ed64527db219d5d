from __future__ import annotations

import pytest

from curvestab.curve_model import (canonical_presentation, conductor_lookup,
                                   small_nr_presentation, validate_curve_config)
from curvestab.errors import UnsupportedKindError, ValidationError


def raw(**kw):
    base = {"n": 1, "genera": [0], "m": 1, "e": 1,
            "sing_points": [{"preimages": [{"component": 0, "lengths": [1]},
                                           {"component": 0, "lengths": [1]}]}],
            "pa_minus_g": 1}
    base.update(kw)
    return base


class TestConductors:
    def test_node(self):
        assert conductor_lookup("node").conductor_display == "(x, y)"

    def test_cusp(self):
        assert conductor_lookup("cusp").conductor_display == "(x, y)"

    def test_a3(self):
        assert conductor_lookup("A", 3).conductor_display == "(x^2, y)"
        assert conductor_lookup("A(3)").conductor == ("x^2", "y")

    def test_ordinary_two_is_the_node(self):
        # exponent n - 1 specializes to the node at n = 2
        assert conductor_lookup("ordinary", 2).conductor_display == "(x, y)"

    def test_ordinary_general_exponent(self):
        d = conductor_lookup("ordinary", 4)
        assert d.conductor_display == "(x, y)^3"
        assert d.conductor == ("x^3", "x^2*y", "x*y^2", "y^3")
        assert "n-1" in d.note

    def test_family_coincidence(self):
        node = conductor_lookup("node")
        assert node.same_ideal(conductor_lookup("A", 1))
        assert node.same_ideal(conductor_lookup("ordinary", 2))

    def test_a_even(self):
        assert conductor_lookup("A", 4).conductor_display == "(x^2, y)"
        assert conductor_lookup("A", 5).conductor_display == "(x^3, y)"

    def test_unknown_kind(self):
        with pytest.raises(UnsupportedKindError):
            conductor_lookup("E8")


class TestPresentation:
    def test_node(self):
        d = small_nr_presentation((1, 1))
        assert d.presentation == (("x_{1,1}", "x_{2,1}"), ("x_{1,1}*x_{2,1}",))
        assert canonical_presentation(d) == canonical_presentation(conductor_lookup("node"))

    def test_cusp(self):
        d = small_nr_presentation((2,))
        assert d.presentation == (("x_{1,2}", "x_{1,3}"), ("x_{1,2}^3 - x_{1,3}^2",))
        assert canonical_presentation(d) == canonical_presentation(conductor_lookup("cusp"))

    def test_coordinate_axes(self):
        d = small_nr_presentation((1, 1, 1))
        gens, rels = d.presentation
        assert len(gens) == 3
        assert sorted(rels) == sorted(["x_{1,1}*x_{2,1}", "x_{1,1}*x_{3,1}", "x_{2,1}*x_{3,1}"])

    @pytest.mark.parametrize("mult", [(1,), (3,), (2, 1), (1, 2, 3)])
    def test_embedding_dimension(self, mult):
        assert small_nr_presentation(mult).embedding_dimension == sum(mult)

    def test_self_relations_for_e3(self):
        gens, rels = small_nr_presentation((3,)).presentation
        assert gens == ("x_{1,3}", "x_{1,4}", "x_{1,5}")
        assert "x_{1,3}^4 - x_{1,4}^3" in rels
        assert len(rels) == 3

    def test_empty(self):
        with pytest.raises(ValidationError):
            small_nr_presentation(())


class TestValidate:
    def test_node_preset(self):
        c = validate_curve_config("node")
        assert (c.n, c.m, c.e, c.pa_minus_g) == (1, 1, 1, 1)
        assert [p.lengths for p in c.sing_points[0].preimages] == [(1,), (1,)]
        assert c.kind == "node"

    def test_tacnode_preset(self):
        c = validate_curve_config({"preset": "tacnode", "genera": [2]})
        assert c.e == 2 and c.g == 2
        # stored as (l(I^1), l(I^0))
        assert [p.lengths for p in c.sing_points[0].preimages] == [(1, 2), (1, 2)]
        assert c.kind == "tacnode"

    def test_cusp_is_node_kind(self):
        assert validate_curve_config("cusp").kind == "node"

    @pytest.mark.parametrize("name,kind", [("A(1)", "node"), ("A(2)", "node"),
                                           ("A(3)", "tacnode"), ("ordinary(2)", "node"),
                                           ("A(5)", "generic"), ("ordinary(3)", "generic")])
    def test_presets_are_structural(self, name, kind):
        assert validate_curve_config(name).kind == kind

    def test_ordinary_preset(self):
        c = validate_curve_config("ordinary(3)")
        assert c.e == 2 and c.pa_minus_g == 3
        assert len(c.sing_points[0].preimages) == 3

    def test_custom_round_trip(self):
        c = validate_curve_config(raw())
        assert validate_curve_config(c) is c
        assert validate_curve_config(c.to_dict()) == c

    def test_preset_round_trip(self):
        c = validate_curve_config("tacnode")
        assert validate_curve_config(c.to_dict()) == c

    @pytest.mark.parametrize("bad,inv", [
        (dict(e=0), "e"),
        (dict(n=0, genera=[]), "n"),
        (dict(genera=[-1]), "genera"),
        (dict(sing_points=[{"preimages": [{"component": 1, "lengths": [1]}]}]), "component"),
        (dict(sing_points=[{"preimages": [{"component": 0, "lengths": [0]}]}]), "support"),
        (dict(e=2, sing_points=[{"preimages": [{"component": 0, "lengths": [2, 1]}]}]), "monotone"),
        (dict(e=2), "lengths"),
        (dict(m=2), "m"),
        (dict(extra=1), "schema"),
    ])
    def test_invariants(self, bad, inv):
        with pytest.raises(ValidationError) as err:
            validate_curve_config(raw(**bad))
        assert err.value.invariant == inv

    def test_preset_conflict(self):
        with pytest.raises(ValidationError):
            validate_curve_config({"preset": "node", "e": 2})

    def test_unknown_preset(self):
        with pytest.raises(ValidationError):
            validate_curve_config("septuple")
