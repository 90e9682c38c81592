"""Maslov index two disc classes at a torus fiber and the m_{1,2} differential.

At an interior fiber ``A`` the class ``beta_j`` attached to facet ``j`` has
boundary ``v_j`` and area ``2*pi*(<A, v_j> - lambda_j)``.  The differential of
the i-th codimension one generator is

    m12_i = (-1)^n * sum_j v_{ji} * d_j * x^{v_j} * T^(2*pi*r_j)

where ``x`` is the holonomy point of the local system and ``d_j`` the period
weight of the complex two-form on ``beta_j``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .novikov import GaussianRational, NovikovElement, is_exact
from .polytope import Polytope, as_fiber

FLOAT_ZERO_TOL = 1e-10
UNITARY_TOL = 1e-12


class DiscClass(NamedTuple):
    index: int
    boundary: tuple[int, ...]
    area_exp: Fraction


@dataclass(frozen=True)
class DiscClassSet:
    fiber: tuple[Fraction, ...]
    classes: tuple[DiscClass, ...]

    @property
    def dim(self) -> int:
        return len(self.fiber)

    @property
    def area_exps(self) -> tuple[Fraction, ...]:
        return tuple(c.area_exp for c in self.classes)


def disc_classes(P: Polytope, A) -> DiscClassSet:
    """One Maslov index two class per facet, with exact area exponents."""
    A = P.require_interior(A)
    classes = tuple(
        DiscClass(j, f.normal, f.value(A)) for j, f in enumerate(P.facets)
    )
    return DiscClassSet(A, classes)


class EnergyLevel(NamedTuple):
    area_exp: Fraction
    indices: tuple[int, ...]


def energy_levels(D: DiscClassSet) -> tuple[EnergyLevel, ...]:
    """Group the disc classes by equal area, lowest energy first."""
    groups: dict[Fraction, list[int]] = {}
    for c in D.classes:
        groups.setdefault(c.area_exp, []).append(c.index)
    return tuple(EnergyLevel(r, tuple(ix)) for r, ix in sorted(groups.items()))


def _as_scalar(value):
    if isinstance(value, bool):
        raise TypeError("boolean is not a scalar")
    if is_exact(value):
        return GaussianRational.coerce(value)
    return complex(value)


def _quarter_turn(angle: Fraction):
    if (4 * angle).denominator == 1:
        return GaussianRational(0, 1) ** int((4 * angle) % 4)
    return None


@dataclass(frozen=True)
class LocalSystem:
    """Flat line bundle on the torus, described by its holonomy point in (C*)^n."""

    holonomy_point: tuple
    unitary: bool = False

    def __post_init__(self):
        x = tuple(_as_scalar(v) for v in self.holonomy_point)
        if any(v == 0 for v in x):
            raise ValueError("holonomy entries must be nonzero")
        if self.unitary:
            for v in x:
                if isinstance(v, GaussianRational):
                    ok = v.norm() == 1
                else:
                    ok = abs(abs(v) - 1) <= UNITARY_TOL
                if not ok:
                    raise ValueError(f"holonomy entry {v} is not unit modulus")
        object.__setattr__(self, "holonomy_point", x)

    @classmethod
    def trivial(cls, n: int) -> "LocalSystem":
        return cls((1,) * n, unitary=True)

    @classmethod
    def from_angles(cls, turns) -> "LocalSystem":
        """Unitary holonomy ``x_k = exp(2*pi*i*turns_k)``.

        Quarter turns stay exact; anything else becomes floating.
        """
        exact = []
        for t in turns:
            t = Fraction(t) if not isinstance(t, float) else None
            exact.append(_quarter_turn(t) if t is not None else None)
        if all(e is not None for e in exact):
            return cls(tuple(exact), unitary=True)
        return cls(tuple(cmath.exp(2j * math.pi * float(t)) for t in turns), unitary=True)

    @classmethod
    def from_log_angles(cls, h) -> "LocalSystem":
        """Unitary holonomy ``x_k = exp(i*h_k)`` from real angles."""
        return cls(tuple(cmath.exp(1j * float(a)) for a in h), unitary=True)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, GaussianRational) for v in self.holonomy_point)

    def monodromy(self, v: Sequence[int]):
        """Holonomy around a loop of class ``v``: the monomial ``x^v``."""
        result = GaussianRational(1) if self.exact else complex(1.0)
        for xk, vk in zip(self.holonomy_point, v):
            if not self.exact:
                xk = complex(xk)
            result = result * xk**vk
        return result


@dataclass(frozen=True)
class BFieldWeights:
    """Period weights ``d_j = exp(integral of B over beta_j)``, one per facet."""

    d: tuple

    def __post_init__(self):
        d = tuple(_as_scalar(v) for v in self.d)
        if any(v == 0 for v in d):
            raise ValueError("B-field weights must be nonzero")
        object.__setattr__(self, "d", d)

    @classmethod
    def trivial(cls, N: int) -> "BFieldWeights":
        return cls((1,) * N)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, GaussianRational) for v in self.d)

    def periods(self) -> tuple[complex, ...]:
        """Principal logarithms of the weights."""
        return tuple(cmath.log(complex(v)) for v in self.d)


def m12(D: DiscClassSet, L: LocalSystem, W: BFieldWeights) -> tuple[NovikovElement, ...]:
    """The Maslov index two part of the differential on each generator C_i."""
    n, N = D.dim, len(D.classes)
    if len(L.holonomy_point) != n:
        raise ValueError(f"holonomy has length {len(L.holonomy_point)}, expected {n}")
    if len(W.d) != N:
        raise ValueError(f"weights have length {len(W.d)}, expected {N}")
    exact = L.exact and W.exact
    sign = (-1) ** n
    weights = []
    for c in D.classes:
        d = W.d[c.index]
        hol = L.monodromy(c.boundary)
        if not exact:
            d, hol = complex(d), complex(hol)
        weights.append(d * hol)
    out = []
    for i in range(n):
        terms = [
            (c.area_exp, sign * c.boundary[i] * w)
            for c, w in zip(D.classes, weights)
            if c.boundary[i] != 0
        ]
        out.append(NovikovElement(terms))
    return tuple(out)


def m12_pt(D: DiscClassSet, L: LocalSystem, W: BFieldWeights) -> tuple:
    """Coefficients ``a_i`` of ``m_{1,2}(pt) = sum a_i [l_i]``.

    When every component is zero or a single term at one common energy, the
    scalar coefficients are returned.  Otherwise the components carry several
    energies and the Novikov elements themselves are returned.
    """
    comps = m12(D, L, W)
    exps = {e for c in comps for e, _ in c.terms}
    if len(exps) <= 1 and all(len(c) <= 1 for c in comps):
        return tuple(c.leading_coefficient() for c in comps)
    return comps


class Verdict(str, Enum):
    NON_VANISHING = "NonVanishing"
    VANISHING = "Vanishing"


def is_zero_component(m: NovikovElement, tol: float = FLOAT_ZERO_TOL) -> bool:
    if m.exact is False:
        return m.max_abs_coefficient() < tol
    return not m.terms


def floer_verdict(m: Sequence[NovikovElement], tol: float = FLOAT_ZERO_TOL) -> Verdict:
    """Non-vanishing iff every component of m_{1,2} vanishes."""
    if all(is_zero_component(c, tol) for c in m):
        return Verdict.NON_VANISHING
    return Verdict.VANISHING


def m12_to_json(m: Sequence[NovikovElement]) -> dict:
    return {str(i): c.to_json() for i, c in enumerate(m)}


def m12_from_json(doc: dict) -> tuple[NovikovElement, ...]:
    return tuple(NovikovElement.from_json(doc[k]) for k in sorted(doc, key=int))
