"""Modules over the Auslander algebra of a double point.

A module is a pair of vector spaces with maps ``alpha: N1 -> N2`` and
``beta: N2 -> N1`` subject to ``beta alpha = 0``.  The indecomposable
projectives are

    P1 = (Q, Q; id, 0)        P2 = (Q, Q^2; (1, 0)^T, (0, 1))

and every module has a projective resolution of length at most two, which is
what :func:`ext_dims` uses.  Submodule searches run over the field with two
elements using bitmask vectors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg as la
from .errors import InvariantError, ValidationError


def _frac_matrix(rows, nrows, ncols):
    if isinstance(rows, (list, tuple)) and len(rows) == 0 and nrows:
        raise ValidationError("matrix has the wrong shape", "shape")
    m = [[Fraction(x) for x in row] for row in rows]
    if len(m) != nrows or any(len(row) != ncols for row in m):
        raise ValidationError(f"expected a {nrows}x{ncols} matrix", "shape")
    return tuple(tuple(row) for row in m)


def _lists(a):
    return [list(row) for row in a]


@dataclass(frozen=True)
class QuiverModule:
    """Representation ``(N1, N2; alpha, beta)``; alpha is l2 x l1, beta is l1 x l2."""

    l1: int
    l2: int
    alpha: tuple
    beta: tuple

    def __init__(self, l1, l2, alpha=None, beta=None):
        if l1 < 0 or l2 < 0:
            raise ValidationError("dimensions must be nonnegative", "dims")
        alpha = la.zeros(l2, l1) if alpha is None else alpha
        beta = la.zeros(l1, l2) if beta is None else beta
        object.__setattr__(self, "l1", l1)
        object.__setattr__(self, "l2", l2)
        object.__setattr__(self, "alpha", _frac_matrix(alpha, l2, l1))
        object.__setattr__(self, "beta", _frac_matrix(beta, l1, l2))
        if not la.is_zero(la.matmul(_lists(self.beta), _lists(self.alpha), l1)):
            raise ValidationError("beta * alpha must vanish", "relation")

    @property
    def dims(self):
        return (self.l1, self.l2)

    def conjugate(self, g1, g2):
        """Same module in new bases: alpha -> g2 alpha g1^-1, beta -> g1 beta g2^-1."""
        g1, g2 = _lists(g1), _lists(g2)
        i1 = la.inverse(g1) if self.l1 else []
        i2 = la.inverse(g2) if self.l2 else []
        a = la.matmul(la.matmul(g2, _lists(self.alpha), self.l1), i1, self.l1)
        b = la.matmul(la.matmul(g1, _lists(self.beta), self.l2), i2, self.l2)
        return QuiverModule(self.l1, self.l2, a, b)

    def to_json(self):
        def fmt(x):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return {"l1": self.l1, "l2": self.l2,
                "alpha": [[fmt(x) for x in row] for row in self.alpha],
                "beta": [[fmt(x) for x in row] for row in self.beta]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["l1"]), int(obj["l2"]),
                   [[Fraction(x) for x in row] for row in obj.get("alpha", [])] or None,
                   [[Fraction(x) for x in row] for row in obj.get("beta", [])] or None)


@dataclass(frozen=True)
class ModuleMap:
    source: QuiverModule
    target: QuiverModule
    f1: tuple
    f2: tuple

    def __init__(self, source, target, f1, f2, check=True):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "f1", _frac_matrix(f1, target.l1, source.l1))
        object.__setattr__(self, "f2", _frac_matrix(f2, target.l2, source.l2))
        if check and not self.commutes():
            raise ValidationError("map does not commute with alpha and beta", "module map")

    def commutes(self) -> bool:
        s, t = self.source, self.target
        f1, f2 = _lists(self.f1), _lists(self.f2)
        lhs = la.matmul(f2, _lists(s.alpha), s.l1)
        rhs = la.matmul(_lists(t.alpha), f1, s.l1)
        if lhs != rhs:
            return False
        lhs = la.matmul(f1, _lists(s.beta), s.l2)
        rhs = la.matmul(_lists(t.beta), f2, s.l2)
        return lhs == rhs

    def flat(self):
        return [x for row in self.f1 for x in row] + [x for row in self.f2 for x in row]

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self o other``."""
        mid = other.source
        f1 = la.matmul(_lists(self.f1), _lists(other.f1), mid.l1)
        f2 = la.matmul(_lists(self.f2), _lists(other.f2), mid.l2)
        return ModuleMap(other.source, self.target, f1, f2, check=False)

    def is_injective(self):
        return (la.rank(_lists(self.f1), self.source.l1) == self.source.l1
                and la.rank(_lists(self.f2), self.source.l2) == self.source.l2)


# -- standard modules ----------------------------------------------------

P1 = QuiverModule(1, 1, [[1]], [[0]])
P2 = QuiverModule(1, 2, [[1], [0]], [[0, 1]])
S1 = QuiverModule(1, 0)
S2 = QuiverModule(0, 1)


def standard_modules():
    return {"P1": P1, "P2": P2, "S1": S1, "S2": S2}


def direct_sum(mods) -> QuiverModule:
    mods = list(mods)
    l1 = sum(x.l1 for x in mods)
    l2 = sum(x.l2 for x in mods)
    a, b = la.zeros(l2, l1), la.zeros(l1, l2)
    o1 = o2 = 0
    for x in mods:
        for i in range(x.l2):
            for j in range(x.l1):
                a[o2 + i][o1 + j] = x.alpha[i][j]
        for i in range(x.l1):
            for j in range(x.l2):
                b[o1 + i][o2 + j] = x.beta[i][j]
        o1 += x.l1
        o2 += x.l2
    return QuiverModule(l1, l2, a, b)


def projective(a: int, b: int) -> QuiverModule:
    """``P1^a + P2^b`` with the P1 summands first."""
    return direct_sum([P1] * a + [P2] * b)


# -- Hom ---------------------------------------------------------------

def hom_space(m: QuiverModule, n: QuiverModule):
    """Dimension and a basis of ``Hom(m, n)``."""
    n1 = n.l1 * m.l1
    nvars = n1 + n.l2 * m.l2

    def v1(a, b):
        return a * m.l1 + b

    def v2(a, b):
        return n1 + a * m.l2 + b

    rows = []
    # f2 alpha_m - alpha_n f1 = 0, an (n.l2 x m.l1) block
    for a in range(n.l2):
        for c in range(m.l1):
            row = [Fraction(0)] * nvars
            for b in range(m.l2):
                row[v2(a, b)] += m.alpha[b][c]
            for b in range(n.l1):
                row[v1(b, c)] -= n.alpha[a][b]
            rows.append(row)
    # f1 beta_m - beta_n f2 = 0, an (n.l1 x m.l2) block
    for a in range(n.l1):
        for c in range(m.l2):
            row = [Fraction(0)] * nvars
            for b in range(m.l1):
                row[v1(a, b)] += m.beta[b][c]
            for b in range(n.l2):
                row[v2(b, c)] -= n.beta[a][b]
            rows.append(row)
    basis = []
    for x in la.nullspace(rows, nvars):
        f1 = [x[v1(a, 0):v1(a, 0) + m.l1] for a in range(n.l1)]
        f2 = [x[v2(a, 0):v2(a, 0) + m.l2] for a in range(n.l2)]
        basis.append(ModuleMap(m, n, f1, f2, check=False))
    return len(basis), basis


# -- projective resolutions ----------------------------------------------

@dataclass(frozen=True)
class Resolution:
    """``0 -> Q_k -> ... -> Q_0 -> M -> 0``.

    ``terms[i]`` is ``(a, b, Q_i)`` with ``Q_i = P1^a + P2^b``;
    ``maps[0]`` is the augmentation ``Q_0 -> M`` and ``maps[i]`` is ``Q_i -> Q_(i-1)``.
    """

    module: QuiverModule
    terms: tuple
    maps: tuple

    @property
    def length(self):
        return len(self.terms) - 1 if self.terms else 0


def _col(vec):
    return [[x] for x in vec]


def _projective_cover(nm: QuiverModule):
    """Minimal cover ``Q -> nm``: P1 for the top of N1, P2 for the top of N2."""
    alpha, beta = _lists(nm.alpha), _lists(nm.beta)
    x_cols = la.complement_basis(la.column_space_basis(beta, nm.l2) if nm.l2 else la.zeros(nm.l1, 0), nm.l1)
    y_cols = la.complement_basis(la.column_space_basis(alpha, nm.l1) if nm.l1 else la.zeros(nm.l2, 0), nm.l2)
    xs = [[x_cols[i][j] for i in range(nm.l1)] for j in range(len(x_cols[0]) if x_cols else 0)]
    ys = [[y_cols[i][j] for i in range(nm.l2)] for j in range(len(y_cols[0]) if y_cols else 0)]
    a, b = len(xs), len(ys)
    q = projective(a, b)
    f1 = la.zeros(nm.l1, q.l1)
    f2 = la.zeros(nm.l2, q.l2)
    for c, x in enumerate(xs):
        ax = [row[0] for row in la.matmul(alpha, _col(x), 1)] if nm.l2 else []
        for i in range(nm.l1):
            f1[i][c] = x[i]
        for i in range(nm.l2):
            f2[i][c] = ax[i]
    for c, y in enumerate(ys):
        by = [row[0] for row in la.matmul(beta, _col(y), 1)] if nm.l1 else []
        aby = [row[0] for row in la.matmul(alpha, _col(by), 1)] if nm.l1 else [Fraction(0)] * nm.l2
        # P2 block c has N1 index a + c and N2 indices a + 2c (alpha image), a + 2c + 1 (generator)
        for i in range(nm.l1):
            f1[i][a + c] = by[i]
        for i in range(nm.l2):
            f2[i][a + 2 * c] = aby[i]
            f2[i][a + 2 * c + 1] = y[i]
    return a, b, q, ModuleMap(q, nm, f1, f2)


def _kernel(fmap: ModuleMap):
    """Kernel submodule and its inclusion."""
    q = fmap.source
    k1 = la.nullspace(_lists(fmap.f1), q.l1)
    k2 = la.nullspace(_lists(fmap.f2), q.l2)
    b1 = la.transpose(k1, q.l1)
    b2 = la.transpose(k2, q.l2)
    d1, d2 = len(k1), len(k2)
    alpha = la.matmul(_lists(q.alpha), b1, d1) if d1 else la.zeros(q.l2, 0)
    beta = la.matmul(_lists(q.beta), b2, d2) if d2 else la.zeros(q.l1, 0)
    ka = la.solve_columns(b2, alpha, q.l2) if d2 else la.zeros(0, d1)
    kb = la.solve_columns(b1, beta, q.l1) if d1 else la.zeros(0, d2)
    if not d2 and not la.is_zero(alpha):
        raise InvariantError("kernel is not closed under alpha")
    if not d1 and not la.is_zero(beta):
        raise InvariantError("kernel is not closed under beta")
    km = QuiverModule(d1, d2, ka, kb)
    return km, ModuleMap(km, q, b1, b2)


def projective_resolution(m: QuiverModule) -> Resolution:
    terms, maps = [], []
    current = m
    inclusion = None
    for _ in range(4):
        if current.l1 == 0 and current.l2 == 0:
            break
        a, b, q, cover = _projective_cover(current)
        terms.append((a, b, q))
        maps.append(cover if inclusion is None else inclusion.compose(cover))
        current, inclusion = _kernel(cover)
    if current.l1 or current.l2:
        raise InvariantError("resolution did not terminate")
    if len(terms) > 3:
        raise InvariantError("resolution longer than the global dimension")
    res = Resolution(m, tuple(terms), tuple(maps))
    check_exact(res)
    return res


def _ranks(fmap):
    return (la.rank(_lists(fmap.f1), fmap.source.l1), la.rank(_lists(fmap.f2), fmap.source.l2))


def check_exact(res: Resolution):
    """Rank test of exactness at every spot of the augmented complex."""
    m = res.module
    if not res.terms:
        return
    r = _ranks(res.maps[0])
    if r != (m.l1, m.l2):
        raise InvariantError("augmentation is not surjective")
    for i, (_, _, q) in enumerate(res.terms):
        out = _ranks(res.maps[i])
        inc = _ranks(res.maps[i + 1]) if i + 1 < len(res.maps) else (0, 0)
        if (q.l1 - out[0], q.l2 - out[1]) != inc:
            raise InvariantError(f"complex not exact at term {i}")
        if i + 1 < len(res.maps):
            comp = res.maps[i].compose(res.maps[i + 1])
            if not (la.is_zero(_lists(comp.f1)) and la.is_zero(_lists(comp.f2))):
                raise InvariantError(f"d^2 != 0 at term {i}")


def ext_dims(m: QuiverModule, n: QuiverModule):
    """``(dim Hom, dim Ext^1, dim Ext^2)`` computed from a projective resolution of ``m``."""
    res = projective_resolution(m)
    homs = [hom_space(q, n)[1] for (_, _, q) in res.terms]
    dims = [len(h) for h in homs]
    ranks = []
    for i in range(1, len(res.terms)):
        d = res.maps[i]
        vecs = [phi.compose(d).flat() for phi in homs[i - 1]]
        width = res.terms[i][2].l1 * n.l1 + res.terms[i][2].l2 * n.l2
        ranks.append(la.rank(vecs, width) if vecs else 0)
    out = []
    for i in range(3):
        dim = dims[i] if i < len(dims) else 0
        into = ranks[i - 1] if 0 < i <= len(ranks) else 0
        away = ranks[i] if i < len(ranks) else 0
        out.append(dim - into - away)
    return tuple(out)


def ext_dims_vector_spaces(a: int, b: int):
    """The ``e = 1`` case: modules are vector spaces and only Hom survives."""
    return (a * b, 0, 0)


def random_module(l1, l2, rng: random.Random, bound=2) -> QuiverModule:
    """Random module with small integer entries; beta is drawn from the left kernel of alpha."""
    alpha = [[Fraction(rng.randint(-bound, bound)) for _ in range(l1)] for _ in range(l2)]
    if l1 and l2 and rng.random() < 0.3:
        # lower the rank of alpha so that beta has room
        keep = rng.randint(0, min(l1, l2))
        for i in range(keep, l2):
            alpha[i] = [Fraction(0)] * l1
    left = la.nullspace(la.transpose(alpha, l1), l2) if l2 else []
    beta = []
    for _ in range(l1):
        row = [Fraction(0)] * l2
        for vec in left:
            c = rng.randint(-bound, bound)
            row = [x + c * y for x, y in zip(row, vec)]
        beta.append(row)
    return QuiverModule(l1, l2, alpha, beta)


# -- submodules of P2^n ----------------------------------------------------

def p2_power(n: int) -> QuiverModule:
    """``P2^n`` with N2 ordered as (alpha-image block, generator block)."""
    alpha = [[Fraction(int(i == j)) for j in range(n)] for i in range(2 * n)]
    beta = [[Fraction(int(j == n + i)) for j in range(2 * n)] for i in range(n)]
    return QuiverModule(n, 2 * n, alpha, beta)


def enumerate_submodule_types(n: int):
    """Feasible ``(dim K1, dim K2)`` for submodules ``K`` of ``P2^n``."""
    if n < 0:
        raise ValidationError("n must be nonnegative", "n")
    return {(l1, l2) for l1 in range(n + 1) for l2 in range(l1, l1 + n + 1)}


def submodule_witness(n: int, l1: int, l2: int):
    """Explicit submodule of ``P2^n`` with dimensions ``(l1, l2)`` and its inclusion."""
    if not (0 <= l1 <= n and 0 <= l2 - l1 <= n):
        raise ValidationError(f"no submodule of P2^{n} has dimensions ({l1}, {l2})",
                              "infeasible")
    big = p2_power(n)
    hi, lo = max(l1, l2 - l1), min(l1, l2 - l1)
    b1 = [[Fraction(int(i == j)) for j in range(l1)] for i in range(n)]
    cols = [i for i in range(hi)] + [n + i for i in range(lo)]
    b2 = [[Fraction(int(i == c)) for c in cols] for i in range(2 * n)]
    alpha = la.matmul(_lists(big.alpha), b1, l1)
    beta = la.matmul(_lists(big.beta), b2, l2)
    ka = la.solve_columns(b2, alpha, 2 * n) if l2 else la.zeros(0, l1)
    kb = la.solve_columns(b1, beta, n) if l1 else la.zeros(0, l2)
    k = QuiverModule(l1, l2, ka, kb)
    return k, ModuleMap(k, big, b1, b2)


def _span(vectors):
    space = {0}
    for v in vectors:
        space |= {x ^ v for x in space}
    return frozenset(space)


def _subspaces(dim):
    """All subspaces of F2^dim as frozensets of bitmasks."""
    found = {frozenset({0})}
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            for v in range(1, 1 << dim):
                if v not in s:
                    t = frozenset(s | {x ^ v for x in s})
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt
    return found


def _rank_f2(space):
    return len(space).bit_length() - 1


def exhaustive_submodule_types(n: int):
    """Brute force over all subspace pairs of ``P2^n`` defined over F2."""
    low = (1 << n) - 1
    types = set()
    subs1 = _subspaces(n)
    subs2 = _subspaces(2 * n)
    for k1 in subs1:
        img = {x for x in k1}  # alpha(x) = (x, 0): the low n bits
        for k2 in subs2:
            if not img <= k2:
                continue
            if all(((v >> n) & low) in k1 for v in k2):
                types.add((_rank_f2(k1), _rank_f2(k2)))
    return types
