"""Numerical walls and chambers for a primitive class in the delta-parameters.

With ``alpha = gamma = 1`` and ``beta = 0`` fixed, a decomposition ``v = u + w``
gives the affine hyperplane

    sum_ij (l_ij r' - l'_ij r) delta_ij = d r' - d' r

where ``u = (r', d', l')``.  Enumeration runs over all ``u`` with
``0 < r' < r`` such that ``u`` and ``v - u`` satisfy the length bounds, and
keeps the hyperplanes meeting the open parameter region.  The region is a
bounded polytope, so the admissible ``d'`` form a finite integer window
computed from its vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import gcd

from . import linalg as la
from .curve_model import CurveConfig
from .errors import UnsupportedKindError, ValidationError
from .numerical_k import NumClass, admissible_class, check_shape, is_primitive, length_bound
from .stability import Order, StabilityParams, slope_order


# -- parameter regions -----------------------------------------------------

@dataclass(frozen=True)
class ParamRegion:
    """Open polytope ``{x : a.x < b for (a, b) in inequalities}`` in delta-space.

    Coordinates are the flattened ``delta_ij`` in row-major order.
    """

    kind: str
    dim: int
    inequalities: tuple
    vertices: tuple
    sample: tuple

    def contains(self, point) -> bool:
        return all(sum(Fraction(a) * x for a, x in zip(row, point)) < b
                   for row, b in self.inequalities)

    @classmethod
    def _build(cls, kind, dim, ineqs):
        ineqs = tuple(dict.fromkeys(
            (tuple(Fraction(a) for a in row), Fraction(b)) for row, b in ineqs))
        verts = _polytope_vertices(ineqs, dim)
        if not verts:
            raise ValidationError("parameter region is empty", "region")
        sample = tuple(sum(v[i] for v in verts) / len(verts) for i in range(dim))
        region = cls(kind, dim, ineqs, tuple(verts), sample)
        if not region.contains(sample):
            raise ValidationError("parameter region has empty interior", "region")
        return region

    @classmethod
    def node_path(cls):
        return cls._build("node_path", 1, [((-1,), 0), ((1,), 1)])

    @classmethod
    def tacnode_triangle(cls):
        return cls._build("tacnode_triangle", 2,
                          [((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)])

    @classmethod
    def generic_box(cls, curve: CurveConfig):
        m, e = curve.m, curve.e
        dim = m * e
        ineqs = []
        for k in range(dim):
            row = [0] * dim
            row[k] = -1
            ineqs.append((tuple(row), 0))
        for i, q in enumerate(curve.sing_points):
            for p in q.preimages:
                row = [0] * dim
                for j in range(e):
                    row[i * e + j] = p.lengths[j]
                ineqs.append((tuple(row), 1))
        return cls._build("generic_box", dim, ineqs)

    @classmethod
    def for_curve(cls, curve: CurveConfig):
        if curve.kind == "node":
            return cls.node_path()
        if curve.kind == "tacnode":
            return cls.tacnode_triangle()
        return cls.generic_box(curve)


def _polytope_vertices(ineqs, dim):
    verts = set()
    for combo in combinations(ineqs, dim):
        a = [list(row) for row, _ in combo]
        if la.rank(a, dim) < dim:
            continue
        x = la.solve(a, [b for _, b in combo], dim)
        if x is None:
            continue
        if all(sum(r * xi for r, xi in zip(row, x)) <= b for row, b in ineqs):
            verts.add(tuple(x))
    return sorted(verts)


# -- hyperplanes -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class Hyperplane:
    """``sum_k coeffs[k] * delta_k = const`` with coprime integer data."""

    coeffs: tuple
    const: int

    def value(self, point) -> Fraction:
        return sum(Fraction(c) * x for c, x in zip(self.coeffs, point)) - self.const

    def meets_open(self, region: ParamRegion) -> bool:
        vals = [self.value(p) for p in region.vertices]
        return min(vals) < 0 < max(vals)

    def equation(self, names=None) -> str:
        dim = len(self.coeffs)
        if names is None:
            names = ["t"] if dim == 1 else [f"delta{k + 1}" for k in range(dim)]
        terms = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            if not terms:
                terms.append(("-" if c < 0 else "") + mag + name)
            else:
                terms.append(("- " if c < 0 else "+ ") + mag + name)
        return " ".join(terms) + f" = {self.const}"


def _normalized(coeffs, const):
    k = reduce(gcd, list(coeffs) + [const], 0)
    coeffs = [c // k for c in coeffs]
    const //= k
    lead = next(c for c in coeffs if c)
    if lead < 0:
        coeffs = [-c for c in coeffs]
        const = -const
    return Hyperplane(tuple(coeffs), const)


def _flat_ell(v: NumClass):
    return [x for row in v.ell for x in row]


def wall_hyperplane(v: NumClass, u: NumClass) -> Hyperplane:
    """Equal-phase hyperplane of ``u`` and ``v`` (hence of ``u`` and ``v - u``)."""
    r, rp = v.r, u.r
    if not r > rp > 0:
        raise ValidationError("need rk(v) > rk(u) > 0", "rank bound")
    coeffs = [l * rp - lp * r for l, lp in zip(_flat_ell(v), _flat_ell(u))]
    const = v.d * rp - u.d * r
    if not any(coeffs):
        raise ValidationError("decomposition gives no hyperplane in the delta-parameters",
                              "nonzero functional")
    return _normalized(coeffs, const)


def wall_t(v: NumClass, u: NumClass):
    """Position of the wall of ``u`` on the nodal path, or None."""
    if v.shape != (1, 1, 1) or u.shape != (1, 1, 1):
        raise ValidationError("wall_t needs nodal classes (r, d, l)", "shape")
    r, d, l = v.coords()
    rp, dp, lp = u.coords()
    if not 0 < rp < r:
        return None
    den = lp * r - l * rp
    if den == 0:
        return None
    t = Fraction(dp * r - d * rp, den)
    return t if 0 < t < 1 else None


# -- walls -----------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """``v = mu * pu + mw * pw`` with ``pu``, ``pw`` primitive."""

    u: NumClass
    w: NumClass
    mu: int
    pu: NumClass
    mw: int
    pw: NumClass

    @classmethod
    def of(cls, u, w):
        mu, pu = u.primitive_part()
        mw, pw = w.primitive_part()
        return cls(u, w, mu, pu, mw, pw)

    def sort_key(self):
        return (-(self.mu + self.mw), self.w.coords(), self.u.coords())


@dataclass(frozen=True)
class Wall:
    v: NumClass
    hyperplane: Hyperplane
    decomps: tuple
    locus: Fraction | None = None
    numerical: bool = True

    @property
    def main(self) -> Decomposition:
        return self.decomps[0]

    @property
    def simple(self) -> bool:
        return is_simple_wall(self)


def is_simple_wall(wall: Wall) -> bool:
    if len(wall.decomps) != 1:
        return False
    dec = wall.decomps[0]
    return dec.mu == 1 and dec.mw == 1


def _low_slope_key(c: NumClass, region: ParamRegion):
    """Slope ordering near the zero corner, refined at the region sample."""
    s = sum(Fraction(x) * y for x, y in zip(_flat_ell(c), region.sample))
    return (Fraction(c.d, c.r), -s / c.r)


def _orient(u, w, region):
    """Order so that ``u`` has the smaller slope on the low-delta side."""
    return (u, w) if _low_slope_key(u, region) <= _low_slope_key(w, region) else (w, u)


def _length_ranges(v: NumClass, curve: CurveConfig, rp: int):
    u_rank = NumClass((rp,), (0,), v.ell)
    ranges = []
    for i in range(curve.m):
        for j in range(1, curve.e + 1):
            ranges.append(range(0, min(length_bound(u_rank, curve, i, j), v.ell[i][j - 1]) + 1))
    return ranges


def decompositions(v: NumClass, region: ParamRegion, curve: CurveConfig):
    """All ``(u, w, hyperplane)`` with a wall through the open region, oriented."""
    if curve.n != 1:
        raise UnsupportedKindError("wall enumeration needs an irreducible curve")
    check_shape(v, curve)
    if region.dim != curve.m * curve.e:
        raise ValidationError("region dimension does not match the curve", "shape")
    if v.r <= 0:
        raise ValidationError("walls need a class of positive rank", "rank")
    if not is_primitive(v):
        raise ValidationError(f"class {v} is not primitive", "primitive")
    if not admissible_class(v, curve):
        raise ValidationError(f"class {v} violates the length bounds", "admissible")
    r, d = v.r, v.d
    m, e = curve.m, curve.e
    out = []
    for rp in range(1, r):
        for flat in product(*_length_ranges(v, curve, rp)):
            ell = tuple(tuple(flat[i * e:(i + 1) * e]) for i in range(m))
            probe = NumClass((rp,), (0,), ell)
            if not admissible_class(probe, curve):
                continue
            if not admissible_class(v - probe, curve):
                continue
            coeffs = [l * rp - lp * r for l, lp in zip(_flat_ell(v), flat)]
            if not any(coeffs):
                continue
            vals = [sum(Fraction(c) * x for c, x in zip(coeffs, p)) for p in region.vertices]
            lo, hi = min(vals), max(vals)
            # need lo < d r' - d' r < hi
            dmin = (d * rp - hi) / r
            dmax = (d * rp - lo) / r
            start = int(dmin) - 1
            for dp in range(start, int(dmax) + 2):
                if not dmin < dp < dmax:
                    continue
                u = NumClass((rp,), (dp,), ell)
                w = v - u
                hp = wall_hyperplane(v, u)
                a, b = _orient(u, w, region)
                out.append((a, b, hp))
    return out


def enumerate_walls(v: NumClass, region: ParamRegion, curve: CurveConfig):
    """Walls for ``v`` in the open region, grouped and sorted.

    Decompositions on one hyperplane are merged into one wall when they share
    a primitive summand direction, so distinct walls can lie on the same
    hyperplane.  The first stored decomposition is the one with the largest
    total multiplicity.
    """
    decs = decompositions(v, region, curve)
    by_plane = {}
    for u, w, hp in decs:
        by_plane.setdefault(hp, {})[(u, w)] = Decomposition.of(u, w)
    walls = []
    for hp, group in by_plane.items():
        items = sorted(group.values(), key=Decomposition.sort_key)
        parent = list(range(len(items)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        owner = {}
        for idx, dec in enumerate(items):
            for prim in (dec.pu, dec.pw):
                if prim in owner:
                    parent[find(idx)] = find(owner[prim])
                else:
                    owner[prim] = idx
        clusters = {}
        for idx in range(len(items)):
            clusters.setdefault(find(idx), []).append(items[idx])
        for members in clusters.values():
            members.sort(key=Decomposition.sort_key)
            locus = None
            if region.kind == "node_path":
                locus = Fraction(hp.const, hp.coeffs[0])
            walls.append(Wall(v, hp, tuple(members), locus))
    return sort_walls(walls, region)


def sort_walls(walls, region):
    if region.dim == 1:
        key = lambda wl: (wl.hyperplane.const / wl.hyperplane.coeffs[0],
                          tuple(-x for x in wl.main.u.coords()))
        return sorted(walls, key=key)
    key = lambda wl: (tuple(-c for c in wl.hyperplane.coeffs), -wl.hyperplane.const,
                      tuple(-x for x in wl.main.u.coords()))
    return sorted(walls, key=key)


def walls_for(v, curve, region=None):
    region = region or ParamRegion.for_curve(curve)
    return enumerate_walls(v, region, curve)


# -- chambers -------------------------------------------------------------

@dataclass(frozen=True)
class Chamber:
    label: str
    sample: tuple
    vertices: tuple
    bounding: tuple
    signs: tuple

    def params(self) -> StabilityParams:
        return params_at(self.sample)


def params_at(point) -> StabilityParams:
    """Standard parameters (alpha = gamma = 1, beta = 0) for an irreducible curve with one singular point."""
    return StabilityParams.standard([list(point)])


def _split(poly, hp):
    vals = [hp.value(p) for p in poly]
    if all(x >= 0 for x in vals) or all(x <= 0 for x in vals):
        return [poly]
    neg, pos = [], []
    k = len(poly)
    for idx in range(k):
        p, q = poly[idx], poly[(idx + 1) % k]
        a, b = vals[idx], vals[(idx + 1) % k]
        if a <= 0:
            neg.append(p)
        if a >= 0:
            pos.append(p)
        if (a < 0 < b) or (b < 0 < a):
            s = a / (a - b)
            x = tuple(pi + s * (qi - pi) for pi, qi in zip(p, q))
            neg.append(x)
            pos.append(x)
    return [neg, pos]


def _sign(x):
    return (x > 0) - (x < 0)


def chambers(v: NumClass, curve: CurveConfig, region: ParamRegion | None = None, walls=None):
    """Chambers of the wall arrangement in a one- or two-dimensional region.

    Chambers are labelled ``R1, R2, ...`` by the number of walls separating
    them from the chamber at the zero corner, ties broken by the sample point.
    """
    region = region or ParamRegion.for_curve(curve)
    if walls is None:
        walls = enumerate_walls(v, region, curve)
    planes = sorted({wl.hyperplane for wl in walls}, key=lambda h: (h.coeffs, h.const))
    if region.dim == 1:
        cuts = sorted({Fraction(h.const, h.coeffs[0]) for h in planes})
        lo, hi = region.vertices[0][0], region.vertices[-1][0]
        pts = [lo] + cuts + [hi]
        polys = [[(a,), (b,)] for a, b in zip(pts, pts[1:])]
    elif region.dim == 2:
        polys = [_convex_hull(region.vertices)]
        for hp in planes:
            polys = [piece for poly in polys for piece in _split(poly, hp)]
    else:
        raise UnsupportedKindError("chambers are only computed in one or two dimensions")

    raw = []
    for poly in polys:
        sample = tuple(sum(p[i] for p in poly) / len(poly) for i in range(region.dim))
        signs = tuple(_sign(hp.value(sample)) for hp in planes)
        bounding = tuple(idx for idx, wl in enumerate(walls)
                         if sum(1 for p in poly if wl.hyperplane.value(p) == 0) >= region.dim)
        raw.append((sample, tuple(poly), bounding, signs))
    zero = tuple(Fraction(0) for _ in range(region.dim))
    base = next((r for r in raw if zero in r[1]), min(raw, key=lambda r: r[0]))

    def dist(r):
        return sum(1 for a, b in zip(r[3], base[3]) if a != b)
    raw.sort(key=lambda r: (dist(r), r[0]))
    return [Chamber(f"R{i + 1}", s, p, b, sg) for i, (s, p, b, sg) in enumerate(raw)]


def _convex_hull(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def chambers_2d(v: NumClass, curve: CurveConfig, walls=None):
    region = ParamRegion.for_curve(curve)
    if region.dim != 2:
        raise UnsupportedKindError("chambers_2d needs a two-parameter region")
    return chambers(v, curve, region, walls)


def chamber_side(params: StabilityParams, wall: Wall):
    """Slope order of ``u`` against ``w`` for every decomposition of the wall."""
    point = [x for row in params.delta for x in row]
    if wall.hyperplane.value(point) == 0:
        raise ValidationError("parameters lie on the wall", "off wall")
    return [(dec, slope_order(params, dec.u, dec.w)) for dec in wall.decomps]


def chambers_with(wall: Wall, chamber_list, order=Order.LESS):
    """Labels of the chambers where ``u`` and ``w`` compare as ``order``."""
    out = []
    for ch in chamber_list:
        if chamber_side(ch.params(), wall)[0][1] == order:
            out.append(ch.label)
    return out
