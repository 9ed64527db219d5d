"""Curve configurations and the singularity reference data.

A configuration records only the discrete data the numerical layer needs: the
components of the normalization with their genera, the singular points with
the component of each preimage, and for every preimage ``p`` the lengths
``l(I^(e-j)|p)`` for ``j = 1..e``.  Lengths are stored in that order, so the
last entry is the length of the structure sheaf of ``S`` at ``p``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .errors import UnsupportedKindError, ValidationError


@dataclass(frozen=True)
class PreimagePoint:
    component: int
    lengths: tuple[int, ...]


@dataclass(frozen=True)
class SingularPoint:
    preimages: tuple[PreimagePoint, ...]


@dataclass(frozen=True)
class CurveConfig:
    n: int
    genera: tuple[int, ...]
    m: int
    e: int
    sing_points: tuple[SingularPoint, ...]
    pa_minus_g: int
    preset: str = "custom"

    @property
    def g(self) -> int:
        return sum(self.genera)

    @property
    def kind(self) -> str:
        """``node``, ``tacnode`` or ``generic``.

        Detection is structural, so ``A(1)``, ``A(3)``, ``cusp`` and
        ``ordinary(2)`` fall into the two closed-form families.
        """
        if self.n != 1 or self.m != 1:
            return "generic"
        pre = self.sing_points[0].preimages
        if self.e == 1 and sum(p.lengths[0] for p in pre) == 2 and self.pa_minus_g == 1:
            return "node"
        if (self.e == 2 and len(pre) == 2 and all(p.lengths == (1, 2) for p in pre)
                and self.pa_minus_g == 2):
            return "tacnode"
        return "generic"

    def preimages_on(self, k: int):
        """Pairs ``(i, p)`` for the preimage points lying on component ``k``."""
        return [(i, p) for i, q in enumerate(self.sing_points)
                for p in q.preimages if p.component == k]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "genera": list(self.genera),
            "m": self.m,
            "e": self.e,
            "sing_points": [
                {"preimages": [{"component": p.component, "lengths": list(p.lengths)}
                               for p in q.preimages]}
                for q in self.sing_points
            ],
            "pa_minus_g": self.pa_minus_g,
            "preset": self.preset,
        }


def _pt(lengths, component=0):
    return {"component": component, "lengths": list(lengths)}


def _preset_data(name: str) -> dict:
    name = name.strip().lower().replace(" ", "")
    if name == "node":
        pts, e, delta = [_pt([1]), _pt([1])], 1, 1
    elif name == "cusp":
        pts, e, delta = [_pt([2])], 1, 1
    elif name == "tacnode":
        pts, e, delta = [_pt([1, 2]), _pt([1, 2])], 2, 2
    else:
        mo = re.fullmatch(r"(ordinary|a)[(:]?(\d+)\)?", name)
        if not mo:
            raise ValidationError(f"unknown preset {name!r}", "preset")
        fam, k = mo.group(1), int(mo.group(2))
        if fam == "ordinary":
            if k < 2:
                raise ValidationError("ordinary(n) needs n >= 2", "preset")
            e = k - 1
            pts = [_pt(range(1, e + 1)) for _ in range(k)]
            delta = k * (k - 1) // 2
        else:
            if k < 1:
                raise ValidationError("A(k) needs k >= 1", "preset")
            if k % 2:
                e = (k + 1) // 2
                pts = [_pt(range(1, e + 1)), _pt(range(1, e + 1))]
            else:
                e = k // 2
                pts = [_pt(range(2, k + 1, 2))]
            delta = (k + 1) // 2 if k % 2 else k // 2
        name = f"{fam.replace('a', 'A')}({k})" if fam == "a" else f"ordinary({k})"
    return {"n": 1, "m": 1, "e": e, "sing_points": [{"preimages": pts}],
            "pa_minus_g": delta, "preset": name}


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValidationError(f"{what} must be an integer, got {x!r}", what)
    return x


def validate_curve_config(raw) -> CurveConfig:
    """Check a raw configuration and return the normalized :class:`CurveConfig`.

    ``raw`` may be a preset name, a dict following the curve-spec schema, or an
    already validated config (returned unchanged).
    """
    if isinstance(raw, CurveConfig):
        return raw
    if isinstance(raw, str):
        raw = {"preset": raw}
    if not isinstance(raw, dict):
        raise ValidationError("curve spec must be an object or preset name", "type")
    raw = dict(raw)
    preset = raw.get("preset", "custom")
    if preset != "custom":
        data = _preset_data(str(preset))
        for key in ("n", "m", "e", "sing_points", "pa_minus_g"):
            if key in raw and raw[key] != data[key]:
                raise ValidationError(f"preset {data['preset']} fixes {key}", "preset")
        data["genera"] = raw.get("genera", [0])
        raw = data
        preset = data["preset"]
    unknown = set(raw) - {"n", "genera", "m", "e", "sing_points", "pa_minus_g", "preset"}
    if unknown:
        raise ValidationError(f"unknown keys {sorted(unknown)}", "schema")
    for key in ("n", "genera", "m", "e", "sing_points", "pa_minus_g"):
        if key not in raw:
            raise ValidationError(f"missing key {key!r}", "schema")

    n = _int(raw["n"], "n")
    if n < 1:
        raise ValidationError("n must be positive", "n")
    genera = tuple(_int(x, "genera") for x in raw["genera"])
    if len(genera) != n or any(x < 0 for x in genera):
        raise ValidationError("genera must be n nonnegative integers", "genera")
    m = _int(raw["m"], "m")
    if m < 0:
        raise ValidationError("m must be nonnegative", "m")
    e = _int(raw["e"], "e")
    if e < 1:
        raise ValidationError("e must be positive", "e")
    pa = _int(raw["pa_minus_g"], "pa_minus_g")
    if len(raw["sing_points"]) != m:
        raise ValidationError("sing_points must have m entries", "m")

    points = []
    for i, q in enumerate(raw["sing_points"]):
        pre = q.get("preimages") if isinstance(q, dict) else None
        if not pre:
            raise ValidationError(f"singular point {i} has no preimages", "preimages")
        pts = []
        for p in pre:
            k = _int(p.get("component"), "component")
            if not 0 <= k < n:
                raise ValidationError(f"component index {k} out of range", "component")
            lengths = tuple(_int(x, "lengths") for x in p.get("lengths", ()))
            if len(lengths) != e:
                raise ValidationError("each preimage needs e lengths", "lengths")
            if any(x < 0 for x in lengths):
                raise ValidationError("lengths must be nonnegative", "lengths")
            if any(a > b for a, b in zip(lengths, lengths[1:])):
                raise ValidationError("lengths must shrink with the ideal power", "monotone")
            if lengths[-1] < 1:
                raise ValidationError("l(I^0|p) must be at least 1", "support")
            pts.append(PreimagePoint(k, lengths))
        points.append(SingularPoint(tuple(pts)))

    curve = CurveConfig(n, genera, m, e, tuple(points), pa, str(preset))
    if preset in ("node", "cusp"):
        if curve.kind != "node":
            raise ValidationError(f"{preset} preset data is inconsistent", "preset")
    elif preset == "tacnode" and curve.kind != "tacnode":
        raise ValidationError("tacnode preset data is inconsistent", "preset")
    return curve


# -- singularity reference data ------------------------------------------

@dataclass(frozen=True)
class SingularityDescriptor:
    kind: str
    conductor: tuple[str, ...]
    conductor_display: str
    equation: str | None = None
    presentation: tuple[tuple[str, ...], tuple[str, ...]] | None = None
    note: str | None = None

    @property
    def embedding_dimension(self):
        if self.presentation is None:
            return None
        return len(self.presentation[0])

    def same_ideal(self, other) -> bool:
        return self.conductor == other.conductor


def _mono(var, k):
    return var if k == 1 else f"{var}^{k}"


def _power_of_maximal(k):
    gens = []
    for a in range(k, -1, -1):
        parts = [_mono(v, p) for v, p in (("x", a), ("y", k - a)) if p]
        gens.append("*".join(parts))
    return tuple(gens)


TABLE_KINDS = ("node", "cusp", "ordinary", "A")


def conductor_lookup(kind, param=None) -> SingularityDescriptor:
    """Tabulated conductor of a planar singularity.

    ``kind`` is ``node``, ``cusp``, ``ordinary`` (with ``param = n``) or ``A``
    (with ``param = k``).  Forms like ``"A(3)"`` or ``"ordinary(4)"`` are also
    accepted.  ``param=None`` for the two families gives the symbolic row.
    """
    kind = str(kind).strip()
    mo = re.fullmatch(r"(\w+)\((\d+)\)", kind)
    if mo:
        kind, param = mo.group(1), int(mo.group(2))
    low = kind.lower()
    if low == "node":
        return SingularityDescriptor("node", ("x", "y"), "(x, y)", "xy",
                                     (("x", "y"), ("x*y",)))
    if low == "cusp":
        return SingularityDescriptor("cusp", ("x", "y"), "(x, y)", "y^2-x^3",
                                     (("x", "y"), ("x^3 - y^2",)))
    if low in ("a", "a_k"):
        if param is None:
            return SingularityDescriptor("A(k)", (), "(x^{\\lfloor (k+1)/2\\rfloor}, y)",
                                         "x^{k+1} + y^2")
        k = int(param)
        if k < 1:
            raise ValidationError("A(k) needs k >= 1", "param")
        a = (k + 1) // 2
        gens = (_mono("x", a), "y")
        return SingularityDescriptor(f"A({k})", gens, f"({gens[0]}, y)",
                                     f"x^{k + 1} + y^2")
    if low == "ordinary":
        note = ("the tabulated exponent n disagrees with the derivation in the text, "
                "which gives n-1; n-1 is used")
        if param is None:
            return SingularityDescriptor("ordinary(n)", (), "(x, y)^{n-1}",
                                         "prod_i (y - lambda_i x)", note=note)
        n = int(param)
        if n < 2:
            raise ValidationError("ordinary(n) needs n >= 2", "param")
        disp = "(x, y)" if n == 2 else f"(x, y)^{n - 1}"
        return SingularityDescriptor(f"ordinary({n})", _power_of_maximal(n - 1), disp,
                                     f"prod_{{i=1}}^{n} (y - lambda_i x)", note=note)
    raise UnsupportedKindError(f"no tabulated conductor for {kind!r}")


def small_nr_presentation(multiplicities) -> SingularityDescriptor:
    """Ring presentation of the singularity with multiplicity tuple ``(e_1..e_s)``.

    Generators are ``x_{i,j}`` for ``e_i <= j <= 2e_i - 1``; relations are
    ``x_{i,j}^{j'} - x_{i,j'}^{j}`` within a branch and ``x_{i,j}*x_{i',j'}``
    across branches.
    """
    mult = tuple(int(x) for x in multiplicities)
    if not mult:
        raise ValidationError("multiplicity tuple must be nonempty", "multiplicities")
    if any(x < 1 for x in mult):
        raise ValidationError("multiplicities must be positive", "multiplicities")

    def var(i, j):
        return f"x_{{{i},{j}}}"

    gens, rels = [], []
    branches = []
    for i, ei in enumerate(mult, start=1):
        js = list(range(ei, 2 * ei))
        branches.append([(i, j) for j in js])
        gens.extend(var(i, j) for j in js)
        for j, jj in combinations(js, 2):
            rels.append(f"{_mono(var(i, j), jj)} - {_mono(var(i, jj), j)}")
    for b1, b2 in combinations(branches, 2):
        for a in b1:
            for b in b2:
                rels.append(f"{var(*a)}*{var(*b)}")
    return SingularityDescriptor(f"multiplicity{mult}", tuple(gens),
                                 "(" + ", ".join(gens) + ")",
                                 presentation=(tuple(gens), tuple(rels)))


def canonical_presentation(desc: SingularityDescriptor):
    """Rename generators to ``x, y, z, ...`` in order; for normal-form comparison."""
    if desc.presentation is None:
        return None
    gens, rels = desc.presentation
    letters = "xyzuvwabcdefhijklmnopqrst"
    if len(gens) > len(letters):
        names = [f"t{i}" for i in range(len(gens))]
    else:
        names = list(letters[:len(gens)])
    mapping = dict(zip(gens, names))
    pat = re.compile("|".join(re.escape(gv) for gv in sorted(gens, key=len, reverse=True)))
    new_rels = tuple(sorted(pat.sub(lambda mo: mapping[mo.group(0)], r) for r in rels))
    return tuple(names), new_rels
