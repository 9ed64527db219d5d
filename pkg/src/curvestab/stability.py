"""Central charges on the numerical lattice and the support-property constants.

Phases are never turned into angles.  Two classes are compared through the
slope ``-Re Z / Im Z``, with classes on the negative real axis (phase one)
placed above every finite slope.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .curve_model import CurveConfig
from .errors import ValidationError
from .numerical_k import NumClass, check_shape, norm_sq


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise ValidationError("use exact rationals such as '1/3', not floats", "exact")
    return Fraction(x)


@dataclass(frozen=True)
class StabilityParams:
    alpha: tuple
    beta: tuple
    gamma: tuple
    delta: tuple

    def __init__(self, alpha, beta, gamma, delta):
        object.__setattr__(self, "alpha", tuple(frac(x) for x in alpha))
        object.__setattr__(self, "beta", tuple(frac(x) for x in beta))
        object.__setattr__(self, "gamma", tuple(frac(x) for x in gamma))
        object.__setattr__(self, "delta", tuple(tuple(frac(x) for x in row) for row in delta))
        n = len(self.alpha)
        if len(self.beta) != n or len(self.gamma) != n:
            raise ValidationError("alpha, beta, gamma need one entry per component", "shape")

    @classmethod
    def standard(cls, delta, n=1):
        """alpha = gamma = 1 and beta = 0, the normalization used for walls."""
        return cls([1] * n, [0] * n, [1] * n, delta)

    @classmethod
    def node_path(cls, t):
        return cls.standard([[t]])

    @classmethod
    def tacnode(cls, delta1, delta2):
        return cls.standard([[delta1, delta2]])

    @classmethod
    def from_json(cls, obj, curve: CurveConfig | None = None):
        if "t" in obj:
            return cls.node_path(frac(obj["t"]))
        if "delta1" in obj or "delta2" in obj:
            return cls.tacnode(frac(obj.get("delta1", 0)), frac(obj.get("delta2", 0)))
        n = len(obj["alpha"]) if "alpha" in obj else (curve.n if curve else 1)
        return cls(obj.get("alpha", [1] * n), obj.get("beta", [0] * n),
                   obj.get("gamma", [1] * n), obj["delta"])

    def to_json(self):
        def f(x):
            return str(x)
        return {"alpha": [f(x) for x in self.alpha], "beta": [f(x) for x in self.beta],
                "gamma": [f(x) for x in self.gamma],
                "delta": [[f(x) for x in row] for row in self.delta]}

    def scaled(self, c):
        c = frac(c)
        return StabilityParams([c * x for x in self.alpha], [c * x for x in self.beta],
                               [c * x for x in self.gamma],
                               [[c * x for x in row] for row in self.delta])


def _shape_check(params: StabilityParams, curve: CurveConfig):
    if len(params.alpha) != curve.n:
        raise ValidationError("parameter count does not match the components", "shape")
    if len(params.delta) != curve.m or any(len(row) != curve.e for row in params.delta):
        raise ValidationError("delta must be an m x e array", "shape")


def _margins(params, curve):
    """``gamma_k - sum_j l(I^(e-j)|p) delta_ij`` for each preimage point."""
    out = []
    for i, q in enumerate(curve.sing_points):
        for p in q.preimages:
            s = sum(Fraction(L) * d for L, d in zip(p.lengths, params.delta[i]))
            out.append((i, p, params.gamma[p.component] - s))
    return out


def check_condition(params: StabilityParams, curve: CurveConfig) -> bool:
    _shape_check(params, curve)
    if any(a <= 0 for a in params.alpha) or any(c <= 0 for c in params.gamma):
        return False
    if any(d <= 0 for row in params.delta for d in row):
        return False
    return all(mg > 0 for _, _, mg in _margins(params, curve))


@dataclass(frozen=True)
class ChargeValue:
    re: Fraction
    im: Fraction


def central_charge(params: StabilityParams, v: NumClass) -> ChargeValue:
    re = (sum(d * x for drow, xrow in zip(params.delta, v.ell) for d, x in zip(drow, xrow))
          - sum(c * x for c, x in zip(params.gamma, v.deg))
          + sum(b * x for b, x in zip(params.beta, v.rk)))
    im = sum(a * x for a, x in zip(params.alpha, v.rk))
    return ChargeValue(Fraction(re), Fraction(im))


class Order(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"

    def __str__(self):
        return self.value

    def flipped(self):
        return {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS}.get(self, self)


def slope_key(z: ChargeValue):
    """Sort key for the phase: ``(0, -Re/Im)`` for finite slopes, ``(1, 0)`` on the phase-one ray."""
    if z.im > 0:
        return (0, -z.re / z.im)
    if z.im == 0 and z.re < 0:
        return (1, Fraction(0))
    if z.im == 0 and z.re == 0:
        raise ValidationError("zero central charge has no phase", "nonzero charge")
    raise ValidationError("charge lies outside the closed upper half-plane", "heart")


def slope_order(params: StabilityParams, u: NumClass, w: NumClass) -> Order:
    ku = slope_key(central_charge(params, u))
    kw = slope_key(central_charge(params, w))
    if ku < kw:
        return Order.LESS
    if ku > kw:
        return Order.GREATER
    return Order.EQUAL


@dataclass(frozen=True)
class SupportConstants:
    P0: Fraction
    Q1: Fraction
    P1: Fraction

    def __iter__(self):
        return iter((self.P0, self.Q1, self.P1))


def support_constants(params: StabilityParams, curve: CurveConfig) -> SupportConstants:
    """Exact constants with ``||E||^2 <= P0 Re^2`` in phase one and
    ``||E||^2 <= Q1 Im^2 + P1 Re^2`` below it.

    Lengths are taken at preimage points, and the length of ``S`` on a
    component is the sum over the preimage points lying on it.
    """
    if not check_condition(params, curve):
        raise ValidationError("parameters violate the region condition", "region")
    p0 = [1 / c ** 2 for c in params.gamma]
    for i, p, mg in _margins(params, curve):
        p0.append((1 + sum(L * L for L in p.lengths)) / mg ** 2)
    p0.extend(1 / d ** 2 for row in params.delta for d in row)

    inv_a2 = [1 / a ** 2 for a in params.alpha]
    q1 = Fraction(0)
    for k in range(curve.n):
        for j in range(curve.e):
            a_kj = sum(p.lengths[j] for _, p in curve.preimages_on(k))
            q1 += curve.m * Fraction(a_kj) ** 2 * inv_a2[k]
    q1 += sum(inv_a2)
    weight = sum(params.delta[i][j] * sum(p.lengths[j] for p in q.preimages)
                 for i, q in enumerate(curve.sing_points) for j in range(curve.e))
    for k in range(curve.n):
        q1 += 2 * (weight + abs(params.beta[k])) ** 2 * inv_a2[k] / params.gamma[k] ** 2
    return SupportConstants(max(p0), q1, 2 * sum(inv_a2))


def support_check(params: StabilityParams, curve: CurveConfig, v: NumClass) -> bool:
    check_shape(v, curve)
    c = support_constants(params, curve)
    z = central_charge(params, v)
    return norm_sq(v) <= max(c.P0, c.P1) * z.re ** 2 + c.Q1 * z.im ** 2


@dataclass(frozen=True)
class ClassFamily:
    """A family of numerical classes of phase-one stable objects.

    ``kind`` 1: point off ``S`` on a component; 2: point over ``q_i`` with
    bounded lengths; 3: shifted torsion modules over ``q_i`` (negated lengths).
    ``upper`` gives per-``j`` upper bounds for the lengths (None when unbounded).
    """

    kind: int
    component: int | None
    point: int | None
    upper: tuple | None
    description: str

    def members(self, curve: CurveConfig, bound=2):
        """Concrete classes in the family; unbounded lengths are cut at ``bound``."""
        n, m, e = curve.n, curve.m, curve.e

        def make(deg_k, row):
            deg = [0] * n
            if deg_k is not None:
                deg[deg_k] = 1
            ell = [[0] * e for _ in range(m)]
            if row is not None:
                ell[self.point] = list(row)
            return NumClass((0,) * n, tuple(deg), tuple(tuple(r) for r in ell))

        if self.kind == 1:
            return [make(self.component, None)]
        if self.kind == 2:
            return [make(self.component, row)
                    for row in product(*(range(u + 1) for u in self.upper))]
        rows = product(*(range(bound + 1) for _ in range(e)))
        return [make(None, [-x for x in row]) for row in rows if any(row)]


def phase1_stable_types(curve: CurveConfig):
    fams = []
    for k in range(curve.n):
        fams.append(ClassFamily(1, k, None, None,
                                f"point off S on component {k}: deg_{k} = 1, all else 0"))
    for i, q in enumerate(curve.sing_points):
        for p in q.preimages:
            fams.append(ClassFamily(
                2, p.component, i, tuple(p.lengths),
                f"point over q_{i} on component {p.component}: deg = 1, "
                f"0 <= l_{i}j <= {list(p.lengths)}"))
    for i in range(curve.m):
        fams.append(ClassFamily(3, None, i, None,
                                f"shifted module over q_{i}: rk = deg = 0, l_{i}j <= 0"))
    return fams
