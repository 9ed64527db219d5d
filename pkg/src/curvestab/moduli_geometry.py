"""Dimension counts, flips at simple walls and the two endpoint maps.

Everything here is bookkeeping with the Euler pairing: dimensions are
``1 - chi(v, v)`` and the flip at a simple wall ``v = u + w`` exchanges a
projective bundle with fiber ``P^(c-1)``, ``c = -chi(w, u)``, for one with
fiber ``P^(b-1)``, ``b = -chi(u, w)``.  All outputs are polynomials in ``g``
unless an integer genus is passed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .curve_model import CurveConfig
from .errors import InvariantError, UnsupportedKindError, ValidationError
from .genus import G, GenusPoly
from .numerical_k import NumClass, admissible_class, euler, pushforward_class
from .stability import Order
from .walls import (ParamRegion, Wall, chamber_side, chambers, chambers_with,
                    enumerate_walls, wall_t)


def _check_class(v, curve):
    if v.r <= 0:
        raise ValidationError("need a class of positive rank", "rank")
    if not admissible_class(v, curve):
        raise ValidationError(f"class {v} violates the length bounds", "admissible")


def moduli_dim(v: NumClass, curve: CurveConfig, g=G):
    if curve.kind not in ("node", "tacnode"):
        raise UnsupportedKindError("dimension formula needs a nodal or tacnodal curve")
    _check_class(v, curve)
    return 1 - euler(v, v, curve, g)


def ext1(u: NumClass, w: NumClass, curve: CurveConfig, g=G):
    """``dim Ext^1(u, w) = -chi(u, w)`` for stable objects of equal phase."""
    return -euler(u, w, curve, g)


@dataclass(frozen=True)
class FlipData:
    u: NumClass
    w: NumClass
    b: object
    c: object
    base_dim: object
    t: Fraction | None = None

    @property
    def locus_dims(self):
        """Fiber dimensions ``(c - 1, b - 1)``; the first sits on the side with phi(u) < phi(w)."""
        return (self.c - 1, self.b - 1)

    def display(self):
        c1, b1 = self.locus_dims
        return f"P^{{{c1}}} -> * <- P^{{{b1}}}"


def flip_gap(u: NumClass, w: NumClass, t: Fraction) -> Fraction:
    """Right-hand side ``2 r1 r2 (1 - t)(l2/r2 - l1/r1)`` of the nodal flip identity."""
    r1, _, l1 = u.coords()
    r2, _, l2 = w.coords()
    return 2 * r1 * r2 * (1 - t) * (Fraction(l2, r2) - Fraction(l1, r1))


def flip_data(wall_or_pair, curve: CurveConfig, g=G) -> FlipData:
    """Flip data for a simple wall, given as a :class:`Wall` or a pair ``(u, w)``."""
    if isinstance(wall_or_pair, Wall):
        if not wall_or_pair.simple:
            raise ValidationError("flip data needs a simple wall", "simple")
        u, w = wall_or_pair.main.u, wall_or_pair.main.w
    else:
        u, w = wall_or_pair
        if u.content() != 1 or w.content() != 1:
            raise ValidationError("flip data needs primitive summands", "simple")
    kind = curve.kind
    t = None
    if kind == "node":
        r1, _, l1 = u.coords()
        r2, _, l2 = w.coords()
        if Fraction(l1, r1) > Fraction(l2, r2):
            u, w = w, u
        elif Fraction(l1, r1) == Fraction(l2, r2):
            raise ValidationError("summands with equal l/r give no wall", "wall")
        t = wall_t(u + w, u)
        if t is None:
            raise ValidationError("the pair has no wall on the nodal path", "wall")
    elif kind != "tacnode":
        raise UnsupportedKindError("flip data needs a nodal or tacnodal curve")
    b = ext1(u, w, curve, g)
    c = ext1(w, u, curve, g)
    base = moduli_dim(u, curve, g) + moduli_dim(w, curve, g)
    fd = FlipData(u, w, b, c, base, t)
    if kind == "node":
        gap = b - c
        gap = gap.const if isinstance(gap, GenusPoly) else gap
        if Fraction(gap) != flip_gap(u, w, t):
            raise InvariantError("flip identity b - c failed")
        if not gap > 0:
            raise InvariantError("expected b > c on the nodal path")
    return fd


@dataclass(frozen=True)
class EndpointMap:
    endpoint: str
    target: tuple
    fiber: str
    fiber_dim: object
    birational: bool = False
    notes: tuple = ()


def _node_fiber(r, l):
    dim = l * (2 * r - l)
    if dim == 0:
        name = "point (isomorphism)"
    elif (r, l) == (1, 1):
        name = "P^1 = Gr(2, 1)"
    else:
        name = f"Gr({2 * r}, {l})"
    return name, dim


def _tac_fiber(r, l1, l2):
    dim = l1 * (2 * r - l1) + (l2 - l1) * (2 * r - l2 + l1)
    if dim == 0:
        name = "point (isomorphism)"
    elif r == 1 and dim == 1:
        name = "P^1"
    elif (r, l1, l2) == (1, 1, 2):
        name = "F_2 (Hirzebruch surface)"
    else:
        name = f"F({l1}, {l2}; {r})"
    return name, dim


def is_pullback_class(v: NumClass, curve: CurveConfig) -> bool:
    r = v.rk[0]
    if curve.kind == "node":
        return v.ell[0][0] == r
    if curve.kind == "tacnode":
        return v.ell[0] == (r, 2 * r)
    raise UnsupportedKindError("pullback classes are only pinned down for nodes and tacnodes")


def fiber_description(v: NumClass, endpoint: str, curve: CurveConfig) -> EndpointMap:
    kind = curve.kind
    if kind not in ("node", "tacnode"):
        raise UnsupportedKindError("endpoint maps are only described for nodes and tacnodes")
    _check_class(v, curve)
    r, d = v.rk[0], v.deg[0]
    if endpoint == "near_zero":
        if kind == "node":
            name, dim = _node_fiber(r, v.ell[0][0])
        else:
            name, dim = _tac_fiber(r, *v.ell[0])
        return EndpointMap("near_zero", ("M_normalization", r, d), name, dim,
                           notes=("Zariski-locally trivial bundle, small delta",))
    if endpoint == "near_one":
        rr, dbar = pushforward_class(v, curve)
        pull = is_pullback_class(v, curve)
        notes = ["proper map, delta_ie close to 1"]
        if pull:
            notes.append("isomorphism over the vector-bundle locus; birational onto the image")
            notes.append("assumes g >= 1")
        return EndpointMap("near_one", ("M_C", rr, dbar), "unknown", None, pull, tuple(notes))
    raise ValidationError(f"unknown endpoint {endpoint!r}", "endpoint")


@dataclass(frozen=True)
class WallRow:
    """Per-wall dimension data and the chambers where phi(u) < phi(w)."""

    wall: Wall
    label: str
    dim_u: object
    dim_w: object
    ext_uw: object
    ext_wu: object
    less_in: tuple


@dataclass(frozen=True)
class Report:
    v: NumClass
    kind: str
    region: ParamRegion
    dim: object
    walls: tuple
    wall_labels: tuple
    chambers: tuple
    rows: tuple
    flips: tuple
    endpoints: tuple
    adjacency: tuple
    sides: tuple
    caveats: tuple = field(default=())


def wall_rows(walls, chamber_list, curve, g=G, labels=None):
    labels = labels or [f"W{i + 1}" for i in range(len(walls))]
    rows = []
    for wl, lab in zip(walls, labels):
        u, w = wl.main.u, wl.main.w
        rows.append(WallRow(wl, lab, moduli_dim(u, curve, g) if wl.main.mu == 1 else None,
                            moduli_dim(w, curve, g) if wl.main.mw == 1 else None,
                            ext1(u, w, curve, g), ext1(w, u, curve, g),
                            tuple(chambers_with(wl, chamber_list))))
    return rows


def _adjacency(walls, chamber_list, labels):
    planes = sorted({wl.hyperplane for wl in walls}, key=lambda h: (h.coeffs, h.const))
    out = []
    for a in range(len(chamber_list)):
        for b in range(a + 1, len(chamber_list)):
            ca, cb = chamber_list[a], chamber_list[b]
            diff = [k for k, (x, y) in enumerate(zip(ca.signs, cb.signs)) if x != y]
            if len(diff) != 1:
                continue
            hp = planes[diff[0]]
            shared = [labels[i] for i in ca.bounding
                      if i in cb.bounding and walls[i].hyperplane == hp]
            if shared:
                out.append((ca.label, cb.label, tuple(shared)))
    return tuple(out)


def wall_crossing_report(v: NumClass, curve: CurveConfig, region=None, g=G) -> Report:
    region = region or ParamRegion.for_curve(curve)
    walls = enumerate_walls(v, region, curve)
    chs = chambers(v, curve, region, walls) if region.dim <= 2 else []
    labels = [f"W{i + 1}" for i in range(len(walls))]
    rows = wall_rows(walls, chs, curve, g, labels) if curve.kind in ("node", "tacnode") else []
    flips = tuple((lab, flip_data(wl, curve, g)) for wl, lab in zip(walls, labels) if wl.simple)
    endpoints = tuple(fiber_description(v, e, curve) for e in ("near_zero", "near_one"))
    sides = tuple((lab, ch.label, str(chamber_side(ch.params(), wl)[0][1]))
                  for wl, lab in zip(walls, labels) for ch in chs)
    caveats = ["walls are numerical: nonemptiness of the semistable loci is not checked"]
    if curve.kind == "tacnode":
        caveats.append("birationality statements assume g >= 1")
    if isinstance(g, int) and g == 0:
        caveats.append("g = 0: moduli spaces on the normalization may be empty")
    return Report(v, curve.kind, region, moduli_dim(v, curve, g), tuple(walls), tuple(labels),
                  tuple(chs), tuple(rows), flips, endpoints,
                  _adjacency(walls, chs, labels), sides, tuple(caveats))
