"""The numerical lattice ``Z^(2n+me)`` and the closed-form Euler pairings.

A class is stored as ranks and degrees per component and an ``m x e`` array of
lengths.  For irreducible curves with one singular point the flat coordinate
order ``(r, d, l_1, ..., l_e)`` is also the usual shorthand, e.g. ``(6, 1, 6)``
on a nodal curve or ``(2, 1, 2, 4)`` on a tacnodal one.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from math import gcd

from .curve_model import CurveConfig
from .errors import UnsupportedKindError, ValidationError


@dataclass(frozen=True)
class NumClass:
    rk: tuple[int, ...]
    deg: tuple[int, ...]
    ell: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rk) != len(self.deg):
            raise ValidationError("rk and deg must have the same length", "shape")
        if len({len(row) for row in self.ell}) > 1:
            raise ValidationError("ell rows must have equal length", "shape")

    # construction
    @classmethod
    def from_flat(cls, values, n=1, m=1, e=None):
        values = [int(x) for x in values]
        if e is None:
            e = (len(values) - 2 * n) // m if m else 0
        if len(values) != 2 * n + m * e:
            raise ValidationError(
                f"expected {2 * n + m * e} coordinates, got {len(values)}", "shape")
        ell = tuple(tuple(values[2 * n + i * e: 2 * n + (i + 1) * e]) for i in range(m))
        return cls(tuple(values[:n]), tuple(values[n:2 * n]), ell)

    @classmethod
    def for_curve(cls, values, curve: CurveConfig):
        return cls.from_flat(values, curve.n, curve.m, curve.e)

    @classmethod
    def zero(cls, n=1, m=1, e=1):
        return cls.from_flat([0] * (2 * n + m * e), n, m, e)

    @classmethod
    def parse(cls, obj, curve: CurveConfig | None = None):
        """Accept ``"6,1,6"``, a flat list, a JSON string, or ``[rk, deg, ell]``."""
        if isinstance(obj, NumClass):
            return obj
        if isinstance(obj, str):
            text = obj.strip()
            obj = json.loads(text) if text.startswith("[") else [
                int(x) for x in text.replace("(", "").replace(")", "").split(",")]
        if (isinstance(obj, (list, tuple)) and len(obj) == 3
                and all(isinstance(x, (list, tuple)) for x in obj)):
            rk, deg, ell = obj
            v = cls(tuple(int(x) for x in rk), tuple(int(x) for x in deg),
                    tuple(tuple(int(x) for x in row) for row in ell))
        else:
            if curve is None:
                v = cls.from_flat(obj)
            else:
                v = cls.for_curve(obj, curve)
        if curve is not None:
            check_shape(v, curve)
        return v

    # shape and coordinates
    @property
    def n(self):
        return len(self.rk)

    @property
    def m(self):
        return len(self.ell)

    @property
    def e(self):
        return len(self.ell[0]) if self.ell else 0

    @property
    def shape(self):
        return (self.n, self.m, self.e)

    @property
    def r(self):
        return sum(self.rk)

    @property
    def d(self):
        return sum(self.deg)

    def coords(self) -> tuple[int, ...]:
        return self.rk + self.deg + tuple(x for row in self.ell for x in row)

    def is_zero(self):
        return not any(self.coords())

    def content(self) -> int:
        return reduce(gcd, self.coords(), 0)

    def primitive_part(self):
        """``(k, u)`` with ``self = k * u`` and ``u`` primitive."""
        k = self.content()
        if k == 0:
            raise ValidationError("zero class has no primitive part", "nonzero")
        return k, self._map(lambda x: x // k)

    # lattice operations
    def _map(self, f):
        return NumClass(tuple(f(x) for x in self.rk), tuple(f(x) for x in self.deg),
                        tuple(tuple(f(x) for x in row) for row in self.ell))

    def _zip(self, other, f):
        if self.shape != other.shape:
            raise ValidationError("classes have different shapes", "shape")
        return NumClass(
            tuple(f(a, b) for a, b in zip(self.rk, other.rk)),
            tuple(f(a, b) for a, b in zip(self.deg, other.deg)),
            tuple(tuple(f(a, b) for a, b in zip(x, y)) for x, y in zip(self.ell, other.ell)))

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return self._map(lambda x: -x)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return self._map(lambda x: k * x)

    __rmul__ = __mul__

    # display
    def __str__(self):
        if self.n == 1 and self.m <= 1:
            return "(" + ", ".join(str(x) for x in self.coords()) + ")"
        return json.dumps(self.to_json(), separators=(",", ":"))

    def to_json(self):
        return [list(self.rk), list(self.deg), [list(row) for row in self.ell]]


def check_shape(v: NumClass, curve: CurveConfig):
    if v.shape != (curve.n, curve.m, curve.e):
        raise ValidationError(
            f"class shape {v.shape} does not match curve (n, m, e) = "
            f"{(curve.n, curve.m, curve.e)}", "shape")


def norm_sq(v: NumClass) -> int:
    return sum(x * x for x in v.coords())


def is_primitive(v: NumClass) -> bool:
    if v.is_zero():
        raise ValidationError("primitivity is undefined for the zero class", "nonzero")
    return v.content() == 1


def _need(v, shape, label):
    if v.shape != shape:
        raise ValidationError(f"{label} pairing needs shape {shape}, got {v.shape}", "shape")


def euler_node(v: NumClass, w: NumClass, g):
    """chi(v, w) on a curve with one node or cusp; ``g`` may be an int or symbolic."""
    _need(v, (1, 1, 1), "node")
    _need(w, (1, 1, 1), "node")
    r, d, l = v.coords()
    r2, d2, l2 = w.coords()
    return d2 * r - d * r2 + r * r2 - (r * r2) * g - 2 * r * l2 + l * l2


def euler_auslander(l1, l2, m1, m2) -> int:
    """Euler form of the point Auslander algebra on dimension vectors."""
    return 2 * l1 * m1 - l1 * m2 - l2 * m1 + l2 * m2


def euler_tacnode(v: NumClass, w: NumClass, g):
    """chi(v, w) on a curve with one tacnode."""
    _need(v, (1, 1, 2), "tacnode")
    _need(w, (1, 1, 2), "tacnode")
    r, d, a1, a2 = v.coords()
    r2, d2, b1, b2 = w.coords()
    return (d2 * r - d * r2 + (r * r2) * (1 - g) - 2 * r * b2
            + euler_auslander(a1, a2, b1, b2))


def euler(v: NumClass, w: NumClass, curve: CurveConfig, g):
    kind = curve.kind
    if kind == "node":
        return euler_node(v, w, g)
    if kind == "tacnode":
        return euler_tacnode(v, w, g)
    raise UnsupportedKindError("the Euler pairing is only available for nodal/cuspidal "
                               "and tacnodal curves")


def pushforward_class(v: NumClass, curve: CurveConfig):
    """Rank and degree of the pushforward to the singular curve."""
    if curve.n != 1:
        raise UnsupportedKindError("pushforward bookkeeping needs an irreducible curve")
    check_shape(v, curve)
    r, d = v.rk[0], v.deg[0]
    return r, d + r * curve.pa_minus_g - sum(row[-1] for row in v.ell)


def length_bound(v: NumClass, curve: CurveConfig, i: int, j: int) -> int:
    """Upper bound ``sum_p rk_k(p) * l(I^(e-j)|p)`` for ``l_ij``; ``j`` is 1-based."""
    return sum(v.rk[p.component] * p.lengths[j - 1] for p in curve.sing_points[i].preimages)


def admissible_class(v: NumClass, curve: CurveConfig) -> bool:
    """Surjectivity bounds on the length coordinates.

    Exact for nodal and tacnodal curves; for other curves only the necessary
    upper bound is checked.
    """
    check_shape(v, curve)
    if any(x < 0 for x in v.rk):
        raise ValidationError("admissibility needs nonnegative ranks", "rank")
    kind = curve.kind
    if kind == "node":
        (l,), r = v.ell[0], v.rk[0]
        return 0 <= l <= 2 * r
    if kind == "tacnode":
        (l1, l2), r = v.ell[0], v.rk[0]
        return 0 <= l1 <= 2 * r and 0 <= l2 - l1 <= 2 * r
    return all(0 <= v.ell[i][j - 1] <= length_bound(v, curve, i, j)
               for i in range(curve.m) for j in range(1, curve.e + 1))


def admissibility_exact(curve: CurveConfig) -> bool:
    return curve.kind in ("node", "tacnode")
