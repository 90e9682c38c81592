"""Moment polytopes ``P = {x : <x, v_j> >= lambda_j}`` with exact rational data.

All checks here are exact.  Vertex enumeration intersects every n-subset of
facet hyperplanes, which is fine for the small polytopes this package targets
(n <= 4, N <= 12).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from numbers import Rational

from . import linalg

SMOOTHNESS_MAX_DIM = 4
FANO_WARNING = "Fano/positivity not verified; asserted by user"


class PolytopeFormatError(ValueError):
    """The polytope document is malformed."""


class InvalidPolytopeError(ValueError):
    """The facet data do not define a valid moment polytope."""


class FiberError(ValueError):
    """A fiber point is not in the open interior of the polytope."""


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    offset: Fraction

    def value(self, x) -> Fraction:
        """``<x, normal> - offset``."""
        return sum((a * b for a, b in zip(x, self.normal)), Fraction(0)) - self.offset


def _primitive(normal, offset) -> Facet:
    normal = tuple(int(a) for a in normal)
    g = math.gcd(*normal)
    if g == 0:
        raise InvalidPolytopeError("facet normal must be nonzero")
    return Facet(tuple(a // g for a in normal), Fraction(offset) / g)


def as_fiber(coords) -> tuple[Fraction, ...]:
    """Convert fiber coordinates to exact rationals.

    Floats are rejected: energy levels are compared exactly, and a decimal
    approximation silently breaks coincidences such as ``1 - 2*eps``.
    """
    out = []
    for c in coords:
        if isinstance(c, bool) or not isinstance(c, (Rational, str)):
            raise TypeError(f"fiber coordinates must be exact rationals, got {c!r}")
        out.append(Fraction(c))
    return tuple(out)


@dataclass(frozen=True)
class Polytope:
    """A validated moment polytope.

    Normals are reduced to primitive integer vectors on construction (offsets
    rescaled to match), and the polytope is checked to be bounded, full
    dimensional and free of redundant facets.  ``fano`` records the user's
    assertion that the toric manifold is Fano; it is never verified.
    """

    name: str
    dim: int
    facets: tuple[Facet, ...]
    fano: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InvalidPolytopeError("dim must be a positive integer")
        facets = []
        for f in self.facets:
            if not isinstance(f, Facet):
                f = Facet(*f)
            if len(f.normal) != self.dim:
                raise PolytopeFormatError(
                    f"normal {f.normal} has length {len(f.normal)}, expected {self.dim}"
                )
            facets.append(_primitive(f.normal, f.offset))
        object.__setattr__(self, "facets", tuple(facets))
        self._check()

    @classmethod
    def from_data(cls, name, normals, offsets, fano=False) -> "Polytope":
        normals = [tuple(v) for v in normals]
        if len(normals) != len(offsets):
            raise PolytopeFormatError("normals and offsets differ in length")
        dim = len(normals[0]) if normals else 0
        return cls(name, dim, tuple(Facet(v, Fraction(o)) for v, o in zip(normals, offsets)), fano)

    # -- basic data -------------------------------------------------------

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def normals(self) -> tuple[tuple[int, ...], ...]:
        return tuple(f.normal for f in self.facets)

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return tuple(f.offset for f in self.facets)

    def slacks(self, x) -> tuple[Fraction, ...]:
        return tuple(f.value(x) for f in self.facets)

    # -- validation -------------------------------------------------------

    def _check(self):
        n, N = self.dim, self.n_facets
        if N <= n:
            raise InvalidPolytopeError(f"need more than {n} facets, got {N}")
        if len(set(self.facets)) != N:
            raise InvalidPolytopeError("duplicate facet")
        if not _is_bounded(self.normals, n):
            raise InvalidPolytopeError("polytope is unbounded")
        verts = self.vertices
        if not verts or linalg.rank([[a - b for a, b in zip(v, verts[0])] for v in verts]) < n:
            raise InvalidPolytopeError("polytope has empty interior")
        for j, f in enumerate(self.facets):
            on = [v for v in verts if f.value(v) == 0]
            if len(on) < n or linalg.rank([[a - b for a, b in zip(v, on[0])] for v in on]) < n - 1:
                raise InvalidPolytopeError(f"facet {j} ({f.normal}, {f.offset}) is inessential")

    @cached_property
    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        found = set()
        for subset in combinations(self.facets, self.dim):
            rows = [f.normal for f in subset]
            if linalg.rank(rows) < self.dim:
                continue
            x = linalg.solve(rows, [f.offset for f in subset])
            if all(f.value(x) >= 0 for f in self.facets):
                found.add(x)
        return tuple(sorted(found))

    def active_facets(self, x) -> tuple[int, ...]:
        return tuple(j for j, f in enumerate(self.facets) if f.value(x) == 0)

    def contains_interior(self, point) -> bool:
        point = as_fiber(point)
        if len(point) != self.dim:
            raise ValueError(f"point has dimension {len(point)}, polytope has {self.dim}")
        return all(f.value(point) > 0 for f in self.facets)

    def require_interior(self, point) -> tuple[Fraction, ...]:
        point = as_fiber(point)
        if not self.contains_interior(point):
            raise FiberError(f"fiber {tuple(map(str, point))} is not in the interior of {self.name}")
        return point

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "fano": self.fano,
            "facets": [{"normal": list(f.normal), "offset": str(f.offset)} for f in self.facets],
        }


def _is_bounded(normals, n: int) -> bool:
    # Bounded iff the recession cone {y : V y >= 0} is {0}.  A nonzero pointed
    # cone has an extreme ray lying on n-1 independent active constraints.
    if linalg.rank(normals) < n:
        return False
    for subset in combinations(normals, n - 1):
        if subset and linalg.rank(subset) < n - 1:
            continue
        basis = linalg.kernel_basis(list(subset), n_cols=n)
        if len(basis) != 1:
            continue
        y = basis[0]
        for s in (1, -1):
            if all(s * sum(a * b for a, b in zip(v, y)) >= 0 for v in normals):
                return False
    return True


@dataclass
class ValidationReport:
    bounded: bool
    full_dimensional: bool
    facets_essential: bool
    smooth: bool | None
    reflexive: bool
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bounded and self.full_dimensional and self.facets_essential

    def to_dict(self) -> dict:
        return {
            "bounded": self.bounded,
            "full_dimensional": self.full_dimensional,
            "facets_essential": self.facets_essential,
            "smooth": self.smooth,
            "reflexive": self.reflexive,
            "ok": self.ok,
            "warnings": list(self.warnings),
        }


def is_smooth(P: Polytope) -> bool:
    """Every vertex has exactly n active facets whose normals form a Z^n basis."""
    for v in P.vertices:
        active = P.active_facets(v)
        if len(active) != P.dim:
            return False
        if abs(linalg.det([P.facets[j].normal for j in active])) != 1:
            return False
    return True


def is_reflexive(P: Polytope) -> bool:
    # Integral vertices + all offsets -1 + interior origin; interior lattice
    # points are not enumerated.
    if any(o != -1 for o in P.offsets):
        return False
    if any(c.denominator != 1 for v in P.vertices for c in v):
        return False
    return P.contains_interior((0,) * P.dim)


def validate(P: Polytope) -> ValidationReport:
    warnings = []
    smooth = None
    if P.dim <= SMOOTHNESS_MAX_DIM:
        smooth = is_smooth(P)
        if not smooth:
            warnings.append("polytope is not smooth (Delzant condition fails at some vertex)")
    else:
        warnings.append(f"smoothness check skipped above dimension {SMOOTHNESS_MAX_DIM}")
    warnings.append(FANO_WARNING if P.fano else "polytope not flagged Fano; positivity not asserted")
    # Construction already enforced the structural invariants.
    return ValidationReport(True, True, True, smooth, is_reflexive(P), warnings)


def vertices(P: Polytope):
    return list(P.vertices)


def contains_interior(P: Polytope, point) -> bool:
    return P.contains_interior(point)


def monotone_fiber(P: Polytope):
    """The fiber where every facet has the same slack, with that common slack.

    Solves ``<A, v_j> - r = lambda_j`` for all j exactly.  Returns ``None``
    when the system is inconsistent.
    """
    rows = [list(f.normal) + [-1] for f in P.facets]
    sol = linalg.solve(rows, P.offsets)
    if sol is None:
        return None
    A, r = sol[:-1], sol[-1]
    if r <= 0:
        return None
    return A, r


def parse_polytope(text: str) -> Polytope:
    """Parse a JSON polytope document.

    Fields: ``name``, ``dim``, ``facets`` (list of ``{"normal": [...],
    "offset": "p/q"}``) and an optional boolean ``fano``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolytopeFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise PolytopeFormatError("document must be an object")
    for key in ("name", "dim", "facets"):
        if key not in doc:
            raise PolytopeFormatError(f"missing field {key!r}")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise PolytopeFormatError("dim must be a positive integer")
    if not isinstance(doc["facets"], list):
        raise PolytopeFormatError("facets must be an array")
    facets = []
    for i, f in enumerate(doc["facets"]):
        try:
            normal, offset = f["normal"], f["offset"]
        except (TypeError, KeyError) as exc:
            raise PolytopeFormatError(f"facet {i}: needs 'normal' and 'offset'") from exc
        if not isinstance(normal, list) or not all(
            isinstance(a, int) and not isinstance(a, bool) for a in normal
        ):
            raise PolytopeFormatError(f"facet {i}: normal must be an array of integers")
        if len(normal) != dim:
            raise PolytopeFormatError(f"facet {i}: normal has length {len(normal)}, dim is {dim}")
        if isinstance(offset, bool) or not isinstance(offset, (str, int)):
            raise PolytopeFormatError(f"facet {i}: offset must be a string 'p/q' or an integer")
        try:
            offset = Fraction(offset)
        except (ValueError, ZeroDivisionError) as exc:
            raise PolytopeFormatError(f"facet {i}: bad rational {f['offset']!r}") from exc
        facets.append(Facet(tuple(normal), offset))
    fano = doc.get("fano", False)
    if not isinstance(fano, bool):
        raise PolytopeFormatError("fano must be a boolean")
    return Polytope(str(doc["name"]), dim, tuple(facets), fano)


def dump_polytope(P: Polytope) -> str:
    return json.dumps(P.to_dict(), indent=2)
