"""Catalog of example polytopes.

Facet orders follow the usual numbering of normals for each example, so
reported facet indices line up with ``v_1, v_2, ...`` (0-based here).
"""

from __future__ import annotations

from fractions import Fraction

from .polytope import Polytope


def _param(eps, lo, hi, name) -> Fraction:
    if isinstance(eps, float):
        raise TypeError("builtin parameters must be exact rationals")
    eps = Fraction(eps)
    if not lo < eps < hi:
        raise ValueError(f"{name}: parameter must satisfy {lo} < eps < {hi}, got {eps}")
    return eps


def segment() -> Polytope:
    """The interval [-1, 1], moment polytope of CP^1."""
    return Polytope.from_data("segment", [(1,), (-1,)], [-1, -1], fano=True)


def cp(n: int = 2) -> Polytope:
    """Standard simplex of CP^n: ``x_i >= 0`` and ``sum x_i <= 1``."""
    n = int(n)
    if n < 1:
        raise ValueError("cp(n) needs n >= 1")
    normals = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    normals.append((-1,) * n)
    return Polytope.from_data(f"cp{n}", normals, [0] * n + [-1], fano=True)


def hirzebruch1() -> Polytope:
    """Hirzebruch surface F_1: ``x = -1, y = -1, x + y = -1, x + y = 1``.

    Ordered as v1 = (-1,-1), v2 = (1,0), v3 = (1,1), v4 = (0,1).
    """
    return Polytope.from_data(
        "hirzebruch1", [(-1, -1), (1, 0), (1, 1), (0, 1)], [-1, -1, -1, -1], fano=True
    )


def blowup3(eps=Fraction(1, 8)) -> Polytope:
    """CP^2 blown up at three torus fixed points (hexagon), counterclockwise from (-1,-1)."""
    eps = _param(eps, 0, Fraction(1, 3), "blowup3")
    return Polytope.from_data(
        "blowup3",
        [(-1, -1), (0, -1), (1, 0), (1, 1), (0, 1), (-1, 0)],
        [-1, -(1 - eps), 0, eps, 0, -(1 - eps)],
        fano=True,
    )


_CUBE_NORMALS = [
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (-1, 0, 0), (0, -1, 0), (0, 0, -1),
    (-1, -1, -1), (1, 1, 1),
]


def cube_blowup_a(eps=Fraction(1, 4)) -> Polytope:
    """Cube blown up at two opposite corners, facets ``x = y = z = -1+eps`` and ``x+y+z = 1-eps`` moved in."""
    eps = _param(eps, 0, 1, "cube_blowup_a")
    offsets = [-1 + eps] * 3 + [-1] * 3 + [-(1 - eps), -1]
    return Polytope.from_data("cube_blowup_a", _CUBE_NORMALS, offsets, fano=True)


def cube_blowup_b(eps=Fraction(1, 4)) -> Polytope:
    """Cube blown up at two opposite corners, facets ``x = y = z = 1-eps`` and ``x+y+z = 1-eps`` moved in."""
    eps = _param(eps, 0, 1, "cube_blowup_b")
    offsets = [-1] * 3 + [-(1 - eps)] * 3 + [-(1 - eps), -1]
    return Polytope.from_data("cube_blowup_b", _CUBE_NORMALS, offsets, fano=True)


def cube_reflexive() -> Polytope:
    """Common eps -> 0 limit of both cube blow-ups: every offset equals -1.

    Reflexive but not smooth: the corner planes pass through cube vertices.
    """
    return Polytope.from_data("cube_reflexive", _CUBE_NORMALS, [-1] * 8, fano=True)


# name -> (constructor, parameter kind, default parameter)
BUILTINS = {
    "segment": (segment, None, None),
    "cp": (cp, "int", 2),
    "hirzebruch1": (hirzebruch1, None, None),
    "blowup3": (blowup3, "rational", Fraction(1, 8)),
    "cube_blowup_a": (cube_blowup_a, "rational", Fraction(1, 4)),
    "cube_blowup_b": (cube_blowup_b, "rational", Fraction(1, 4)),
    "cube_reflexive": (cube_reflexive, None, None),
}


def get_builtin(name: str, param=None) -> Polytope:
    try:
        ctor, kind, default = BUILTINS[name]
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None
    if kind is None:
        if param is not None:
            raise ValueError(f"builtin {name!r} takes no parameter")
        return ctor()
    if param is None:
        param = default
    if kind == "int":
        param = Fraction(param)
        if param.denominator != 1:
            raise ValueError(f"builtin {name!r} needs an integer parameter")
        param = int(param)
    return ctor(param)


def fano_builtins() -> list[Polytope]:
    """Every builtin at its default parameter, plus cp(1..3)."""
    out = [get_builtin(name) for name in BUILTINS if name != "cp"]
    out[1:1] = [cp(k) for k in (1, 2, 3)]
    return out
