from typing import Sequence, Tuple

Degree = Tuple[int, ...]
"""A multidegree: an element of Z^t (or Z^(t+1) on the exterior side)."""


def deg(*coords) -> Degree:
    """Normalize ints / sequences into a degree tuple: deg(1) == deg([1]) == (1,)."""
    if len(coords) == 1 and not isinstance(coords[0], int):
        coords = coords[0]
    return tuple(int(c) for c in coords)


def deg_add(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def deg_sub(a: Degree, b: Degree) -> Degree:
    return tuple(x - y for x, y in zip(a, b))


def deg_neg(a: Degree) -> Degree:
    return tuple(-x for x in a)


def deg_scale(k: int, a: Degree) -> Degree:
    return tuple(k * x for x in a)


def dot(theta: Sequence[int], d: Degree) -> int:
    return sum(t * x for t, x in zip(theta, d, strict=True))


def exp_add(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def format_degree(d: Degree) -> str:
    return "{" + ", ".join(str(x) for x in d) + "}"
