"""JSON-friendly conversion of the library's value types."""
from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction

from .genus import GenusPoly
from .numerical_k import NumClass


def rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def jsonable(obj, g=None):
    """Recursively convert to plain JSON data; ``g`` substitutes a numeric genus."""
    if isinstance(obj, GenusPoly):
        return obj.evaluate(g) if g is not None else str(obj)
    if isinstance(obj, Fraction):
        return rat(obj)
    if isinstance(obj, NumClass):
        if obj.n == 1 and obj.m <= 1:
            return list(obj.coords())
        return obj.to_json()
    if isinstance(obj, enum.Enum):
        return str(obj.value)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name), g) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v, g) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(x, g) for x in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    return obj


def dumps(obj, g=None) -> str:
    return json.dumps(jsonable(obj, g), indent=2, sort_keys=False) + "\n"
