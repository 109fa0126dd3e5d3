import json
from typing import Sequence

from multibgg.core.Field import Field
from multibgg.core.PolyRing import PolyRing, mk_poly_ring
from multibgg.errors import SchemaError


def hirzebruch(a: int, field: Field = None) -> PolyRing:
    """Cox ring of the Hirzebruch surface F_a."""
    degrees = [(1, 0), (-a, 1), (1, 0), (0, 1)]
    return mk_poly_ring(field or Field.rationals(), _names(4), degrees)


def weighted_projective(weights: Sequence[int], field: Field = None) -> PolyRing:
    if any(w <= 0 for w in weights):
        raise SchemaError(f"weights must be positive, got {list(weights)}", "/ring/args")
    return mk_poly_ring(field or Field.rationals(), _names(len(weights)), [(w,) for w in weights])


def standard(n: int, field: Field = None) -> PolyRing:
    """k[x_0, ..., x_n], every variable of degree 1."""
    if n < 0:
        raise SchemaError(f"standard n needs n >= 0, got {n}", "/ring/args")
    return mk_poly_ring(field or Field.rationals(), _names(n + 1), [(1,)] * (n + 1))


def _names(n: int):
    return [f"x_{i}" for i in range(n)]


BUILTIN_RINGS = {
    "hirzebruch": hirzebruch,
    "weighted-projective": weighted_projective,
    "standard": standard,
}


def builtin_ring(name: str, params=(), field: Field = None) -> PolyRing:
    """
    `name` is one of BUILTIN_RINGS. `params` holds its arguments, either as a
    list ([3], [[1, 1, 1, 2, 2]]) or as the text after the name ("3",
    "[1,1,1,2,2]").
    """
    if name not in BUILTIN_RINGS:
        raise SchemaError(f"unknown builtin ring {name!r}, expected one of {sorted(BUILTIN_RINGS)}", "/ring/builtin")
    if isinstance(params, str):
        params = _read_args(params)
    params = list(params)
    if name == "weighted-projective" and params and all(isinstance(w, int) for w in params):
        params = [params]
    if len(params) != 1:
        raise SchemaError(f"{name} takes exactly one argument, got {params}", "/ring/args")
    arg = params[0]
    if name == "weighted-projective":
        if not isinstance(arg, list) or not arg or any(not isinstance(w, int) for w in arg):
            raise SchemaError(f"weighted-projective needs a list of weights, got {arg!r}", "/ring/args")
    elif not isinstance(arg, int):
        raise SchemaError(f"{name} needs an integer argument, got {arg!r}", "/ring/args")
    return BUILTIN_RINGS[name](arg, field)


def _read_args(text: str) -> list:
    text = text.strip()
    try:
        if text.startswith("["):
            return [json.loads(text)]
        return [json.loads(p) for p in text.split()]
    except json.JSONDecodeError as e:
        raise SchemaError(f"cannot read the ring arguments {text!r}: {e.msg}", "/ring/args") from None


def parse_builtin(text: str, field: Field = None) -> PolyRing:
    """"hirzebruch 3", "weighted-projective [1,1,1,2,2]", "standard 2"."""
    name, _, rest = text.strip().partition(" ")
    return builtin_ring(name, rest, field)
