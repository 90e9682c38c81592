"""Non-displaceability certificates from fully supported kernel vectors.

At a fiber, the disc classes are grouped by energy.  If every energy level
admits coefficients ``c_j``, all nonzero, with ``sum c_j v_j = 0`` over the
level, then weighting each class by ``d_j = c_j`` kills m_{1,2} and the Floer
cohomology of the fiber (with that complex two-form) is non-vanishing.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product

from . import __version__
from .floer import BFieldWeights, DiscClassSet, disc_classes, energy_levels
from .linalg import kernel_basis
from .novikov import GaussianRational
from .polytope import Polytope, as_fiber, monotone_fiber

REALIZABILITY_NOTE = (
    "weights are periods of a closed complex two-form supported near the toric "
    "divisors; the form itself is not constructed or checked"
)
MAX_SCAN_DENOMINATOR = 64

__all__ = [
    "Certificate",
    "CertificateLevel",
    "CertificateVerdict",
    "InconsistencyError",
    "certify_fiber",
    "certify_monotone",
    "fully_supported_kernel_vector",
    "kernel_basis",
    "scan_fibers",
    "verify_certificate",
]


class InconsistencyError(RuntimeError):
    """A result that the theory rules out (e.g. an uncertifiable monotone fiber)."""


class CertificateVerdict(str, Enum):
    CERTIFIED = "Certified"
    UNKNOWN = "Unknown"


def fully_supported_kernel_vector(rows, n_cols: int | None = None):
    """A kernel vector of ``M`` with every coordinate nonzero, or None.

    With kernel basis ``b_1..b_k`` the candidate ``sum t^(k-1) b_k`` has
    coordinates that are nonzero polynomials in ``t`` of degree < k (unless a
    coordinate vanishes on the whole kernel), so some ``t`` in
    ``1..(k-1)*m+1`` works.  The smallest such ``t`` is used.
    """
    basis = kernel_basis(rows, n_cols)
    if not basis:
        return None
    m = len(basis[0])
    if any(all(b[j] == 0 for b in basis) for j in range(m)):
        return None
    for t in range(1, (len(basis) - 1) * m + 2):
        c = tuple(sum((t**k * b[j] for k, b in enumerate(basis)), Fraction(0)) for j in range(m))
        if all(x != 0 for x in c):
            return c
    raise InconsistencyError("no fully supported combination found within the degree bound")


def _level_matrix(P: Polytope, indices) -> list[list[int]]:
    return [[P.facets[j].normal[i] for j in indices] for i in range(P.dim)]


@dataclass(frozen=True)
class CertificateLevel:
    area_exp: Fraction
    indices: tuple[int, ...]
    coeffs: tuple[GaussianRational, ...] | None

    @property
    def certified(self) -> bool:
        return self.coeffs is not None


@dataclass(frozen=True)
class Certificate:
    fiber: tuple[Fraction, ...]
    levels: tuple[CertificateLevel, ...]
    weights: tuple[GaussianRational, ...] | None
    verdict: CertificateVerdict
    failing_levels: tuple[Fraction, ...]
    note: str = REALIZABILITY_NOTE
    version: str = field(default=__version__, compare=False)

    @property
    def certified(self) -> bool:
        return self.verdict is CertificateVerdict.CERTIFIED

    def bfield_weights(self) -> BFieldWeights:
        if self.weights is None:
            raise ValueError("uncertified fiber has no weights")
        return BFieldWeights(self.weights)

    def periods(self) -> tuple[complex, ...]:
        """Principal logs of the weights: the periods of the two-form on each class."""
        return self.bfield_weights().periods()

    def to_dict(self) -> dict:
        def pair(c):
            return [str(c.re), str(c.im)]

        return {
            "fiber": [str(x) for x in self.fiber],
            "levels": [
                {
                    "exponent": str(lv.area_exp),
                    "indices": list(lv.indices),
                    "coefficients": None if lv.coeffs is None else [pair(c) for c in lv.coeffs],
                }
                for lv in self.levels
            ],
            "weights": None if self.weights is None else [pair(c) for c in self.weights],
            "verdict": self.verdict.value,
            "failing_levels": [str(r) for r in self.failing_levels],
            "note": self.note,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Certificate":
        def gr(pair):
            return GaussianRational(Fraction(pair[0]), Fraction(pair[1]))

        levels = tuple(
            CertificateLevel(
                Fraction(lv["exponent"]),
                tuple(lv["indices"]),
                None if lv["coefficients"] is None else tuple(gr(p) for p in lv["coefficients"]),
            )
            for lv in doc["levels"]
        )
        weights = doc.get("weights")
        return cls(
            fiber=tuple(Fraction(x) for x in doc["fiber"]),
            levels=levels,
            weights=None if weights is None else tuple(gr(p) for p in weights),
            verdict=CertificateVerdict(doc["verdict"]),
            failing_levels=tuple(Fraction(r) for r in doc["failing_levels"]),
            note=doc.get("note", REALIZABILITY_NOTE),
            version=doc.get("version", __version__),
        )


def certify_fiber(P: Polytope, A, *, warn: bool = True) -> Certificate:
    """Search for a per-energy-level fully supported kernel certificate at fiber A."""
    A = as_fiber(A)
    D = disc_classes(P, A)
    if warn and not P.fano:
        warnings.warn(
            f"{P.name} is not flagged Fano; the certificate assumes positivity", stacklevel=2
        )
    return _certify(P, D)


def _certify(P: Polytope, D: DiscClassSet) -> Certificate:
    levels = []
    failing = []
    weights: list = [None] * P.n_facets
    for level in energy_levels(D):
        c = fully_supported_kernel_vector(_level_matrix(P, level.indices))
        if c is None:
            levels.append(CertificateLevel(level.area_exp, level.indices, None))
            failing.append(level.area_exp)
            continue
        coeffs = tuple(GaussianRational(x) for x in c)
        levels.append(CertificateLevel(level.area_exp, level.indices, coeffs))
        for j, x in zip(level.indices, coeffs):
            weights[j] = x
    verdict = CertificateVerdict.UNKNOWN if failing else CertificateVerdict.CERTIFIED
    return Certificate(
        fiber=D.fiber,
        levels=tuple(levels),
        weights=None if failing else tuple(weights),
        verdict=verdict,
        failing_levels=tuple(failing),
    )


def verify_certificate(P: Polytope, cert: Certificate) -> bool:
    """Re-check a certificate exactly against the polytope.

    The levels must match the energy levels at the fiber; every certified
    level needs nonzero coefficients in the kernel of its normals, and the
    weights must agree with the level coefficients.
    """
    try:
        D = disc_classes(P, cert.fiber)
    except ValueError:
        return False
    expected = energy_levels(D)
    if [(lv.area_exp, lv.indices) for lv in cert.levels] != [tuple(e) for e in expected]:
        return False
    failing = []
    for lv in cert.levels:
        if lv.coeffs is None:
            failing.append(lv.area_exp)
            continue
        if len(lv.coeffs) != len(lv.indices) or any(c == 0 for c in lv.coeffs):
            return False
        for row in _level_matrix(P, lv.indices):
            if sum((a * c for a, c in zip(row, lv.coeffs)), GaussianRational(0)) != 0:
                return False
        if cert.weights is not None and any(cert.weights[j] != c for j, c in zip(lv.indices, lv.coeffs)):
            return False
    if tuple(failing) != tuple(cert.failing_levels):
        return False
    if cert.certified:
        return not failing and cert.weights is not None and all(w != 0 for w in cert.weights)
    return bool(failing)


def certify_monotone(P: Polytope) -> Certificate | None:
    """Certificate at the monotone fiber, or None if the polytope has none.

    A Fano-flagged polytope whose monotone fiber fails to certify raises
    :class:`InconsistencyError`: the normals of a complete fan always admit a
    fully supported relation.
    """
    mono = monotone_fiber(P)
    if mono is None:
        return None
    cert = _certify(P, disc_classes(P, mono[0]))
    if P.fano and not cert.certified:
        raise InconsistencyError(f"monotone fiber of Fano polytope {P.name} failed to certify")
    return cert


def _grid_range(lo: Fraction, hi: Fraction, q: int) -> range:
    return range(math.ceil(lo * q), math.floor(hi * q) + 1)


def scan_fibers(P: Polytope, denominator_bound: int) -> list[tuple[tuple[Fraction, ...], Certificate]]:
    """All certified interior grid points ``k/denominator_bound``, in lexicographic order."""
    q = int(denominator_bound)
    if not 1 <= q <= MAX_SCAN_DENOMINATOR:
        raise ValueError(f"denominator bound must be in 1..{MAX_SCAN_DENOMINATOR}")
    verts = P.vertices
    axes = [
        _grid_range(min(v[i] for v in verts), max(v[i] for v in verts), q) for i in range(P.dim)
    ]
    found = []
    for ks in product(*axes):
        A = tuple(Fraction(k, q) for k in ks)
        if not P.contains_interior(A):
            continue
        cert = _certify(P, disc_classes(P, A))
        if cert.certified:
            found.append((A, cert))
    return found
