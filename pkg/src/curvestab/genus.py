"""Degree-one integer polynomials in the genus symbol ``g``."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GenusPoly:
    """The polynomial ``coef * g + const``."""

    const: int = 0
    coef: int = 0

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GenusPoly):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        return NotImplemented

    def __add__(self, other):
        other = GenusPoly.coerce(other)
        if other is NotImplemented:
            return other
        return GenusPoly(self.const + other.const, self.coef + other.coef)

    __radd__ = __add__

    def __neg__(self):
        return GenusPoly(-self.const, -self.coef)

    def __sub__(self, other):
        other = GenusPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return GenusPoly(self.const * k, self.coef * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = GenusPoly.coerce(other)
        if other is NotImplemented:
            return False
        return (self.const, self.coef) == (other.const, other.coef)

    def __hash__(self):
        return hash((self.const, self.coef))

    def evaluate(self, g: int) -> int:
        return self.coef * g + self.const

    def __call__(self, g):
        return self.evaluate(g)

    def __str__(self):
        if self.coef == 0:
            return str(self.const)
        lead = {1: "g", -1: "-g"}.get(self.coef, f"{self.coef}g")
        if self.const == 0:
            return lead
        sign = "+" if self.const > 0 else "-"
        return f"{lead}{sign}{abs(self.const)}"

    def __repr__(self):
        return f"GenusPoly({self})"


G = GenusPoly(0, 1)


def genus_value(x, g=None):
    """Evaluate ``x`` at ``g`` when given, else return it unchanged."""
    if g is None or not isinstance(x, GenusPoly):
        return x
    return x.evaluate(g)
