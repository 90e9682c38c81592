"""Convergent version: the Landau-Ginzburg superpotential and its critical points.

Substituting ``T^(2*pi) = e^(-1)`` and ``z = exp(-theta + i*h)`` turns the
m_{1,2} components into the logarithmic derivatives of

    W(z) = sum_j exp(lambda_j) * z^(v_j).

Critical points are found by multi-start damped Newton iteration in the
coordinates ``w = log z``, which keeps iterates inside (C*)^n.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .floer import (
    FLOAT_ZERO_TOL,
    BFieldWeights,
    DiscClassSet,
    LocalSystem,
    m12,
)
from .polytope import Polytope

CONVERGENT_BASE = math.exp(-1)
NOT_A_CERTIFICATE = "not a displaceability certificate"
INTERIOR_TOL = 1e-9
ESCAPE_TOL = 1e-8


@dataclass(frozen=True)
class Superpotential:
    dim: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]
    source: Polytope | None = None

    @property
    def exponents(self) -> np.ndarray:
        return np.array([v for v, _ in self.terms], dtype=float).reshape(len(self.terms), self.dim)

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([math.exp(lam) for _, lam in self.terms])

    def __call__(self, z) -> complex:
        z = np.asarray(z, dtype=complex)
        return complex(sum(c * np.prod(z ** np.array(v)) for (v, _), c in zip(self.terms, self.coefficients)))

    def __str__(self):
        return " + ".join(f"e^({lam})*z^{v}" for v, lam in self.terms)


@dataclass(frozen=True)
class LaurentPolynomial:
    """``sum coeff * z^exponent`` with floating coefficients."""

    dim: int
    terms: tuple[tuple[tuple[int, ...], float], ...]

    def __call__(self, z) -> complex:
        z = np.asarray(z, dtype=complex)
        return complex(sum(c * np.prod(z ** np.array(v)) for v, c in self.terms))


def superpotential(P: Polytope) -> Superpotential:
    return Superpotential(P.dim, tuple((f.normal, f.offset) for f in P.facets), P)


def critical_equations(W: Superpotential) -> list[LaurentPolynomial]:
    """``E_i = z_i dW/dz_i``; terms with ``v_ji = 0`` are omitted."""
    eqs = []
    for i in range(W.dim):
        terms = tuple(
            (v, v[i] * math.exp(lam)) for v, lam in W.terms if v[i] != 0
        )
        eqs.append(LaurentPolynomial(W.dim, terms))
    return eqs


@dataclass(frozen=True)
class CriticalPoint:
    z: tuple[complex, ...]
    residual: float
    fiber: tuple[float, ...]
    holonomy_angles: tuple[float, ...]
    interior: bool

    @property
    def log_z(self) -> tuple[complex, ...]:
        return tuple(complex(-t, h) for t, h in zip(self.fiber, self.holonomy_angles))

    def local_system(self) -> LocalSystem:
        return LocalSystem.from_log_angles(self.holonomy_angles)

    def to_dict(self) -> dict:
        return {
            "z": [{"re": c.real, "im": c.imag} for c in self.z],
            "residual": self.residual,
            "theta": list(self.fiber),
            "h": list(self.holonomy_angles),
            "interior": self.interior,
        }


@dataclass(frozen=True)
class SolveOptions:
    starts: int = 200
    max_iter: int = 100
    residual_tol: float = 1e-10
    dedup_tol: float = 1e-8
    seed: int | None = 0
    log_modulus_range: tuple[float, float] = (-2.0, 2.0)


def _system(V: np.ndarray, c: np.ndarray, w: np.ndarray):
    """Residuals E (S, n) and Jacobians dE/dw (S, n, n) at log-points w (S, n)."""
    t = c * np.exp(w @ V.T)
    E = t @ V
    J = np.einsum("sj,ji,jk->sik", t, V, V)
    return E, J


def _newton_steps(J: np.ndarray, E: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.solve(J, -E[..., None])[..., 0]
    except np.linalg.LinAlgError:
        out = np.empty_like(E)
        for s in range(len(E)):
            out[s] = np.linalg.lstsq(J[s], -E[s], rcond=None)[0]
        return out


def _newton(V, c, w, max_iter: int) -> np.ndarray:
    """Damped Newton on all starts at once; halves the step until |E| drops."""
    with np.errstate(over="ignore", invalid="ignore"):
        E, J = _system(V, c, w)
        norm = np.linalg.norm(E, axis=1)
        for _ in range(max_iter):
            live = np.isfinite(norm) & (norm > 1e-15) & (np.abs(w.real).max(axis=1) < 50)
            if not live.any():
                break
            step = np.zeros_like(w)
            step[live] = _newton_steps(J[live], E[live])
            alpha = np.ones(len(w))
            accepted = ~live
            w_new = w.copy()
            for _ in range(40):
                trial = w + alpha[:, None] * step
                E_t, _ = _system(V, c, trial)
                n_t = np.linalg.norm(E_t, axis=1)
                ok = ~accepted & np.isfinite(n_t) & (n_t < norm)
                w_new[ok] = trial[ok]
                accepted |= ok
                if accepted.all():
                    break
                alpha = np.where(accepted, alpha, alpha / 2)
            moved = ~np.all(w_new == w, axis=1)
            if not moved.any():
                break
            w = w_new
            E, J = _system(V, c, w)
            norm = np.linalg.norm(E, axis=1)
    return w


def _wrap(a: np.ndarray) -> np.ndarray:
    return (a + np.pi) % (2 * np.pi) - np.pi


def solve_critical(W: Superpotential, options: SolveOptions | None = None, **kwargs) -> list[CriticalPoint]:
    """Critical points of W in (C*)^n by multi-start Newton in log coordinates.

    Keyword arguments override fields of ``options``.  Roots closer than
    ``dedup_tol`` in log coordinates (imaginary parts taken modulo 2*pi) are
    merged, and only roots with residual below ``residual_tol`` are kept.
    The result is sorted by the moduli of z, then by argument.
    """
    opts = options or SolveOptions()
    if kwargs:
        opts = SolveOptions(**{**opts.__dict__, **kwargs})
    n = W.dim
    if n > 3:
        raise ValueError("critical point search is limited to dimension <= 3")
    V = W.exponents
    c = W.coefficients
    rng = np.random.default_rng(opts.seed)
    lo, hi = opts.log_modulus_range
    w0 = rng.uniform(lo, hi, size=(opts.starts, n)) + 1j * rng.uniform(0, 2 * np.pi, size=(opts.starts, n))
    w = _newton(V, c, w0, opts.max_iter)

    with np.errstate(over="ignore", invalid="ignore"):
        E, _ = _system(V, c, w)
        residual = np.abs(E).max(axis=1)
        # Iterates escaping towards the coordinate hyperplanes make every term small;
        # measuring the residual against the size of the terms rejects them.
        scale = (c * np.abs(np.exp(w @ V.T))).sum(axis=1)
        relative = residual / scale
    good = np.isfinite(residual) & (residual < opts.residual_tol) & (relative < ESCAPE_TOL)
    w = w[good]
    residual = residual[good]
    w = w.real + 1j * _wrap(w.imag)

    # Sort first so the merged representatives do not depend on start order.
    order = sorted(range(len(w)), key=lambda s: (tuple(np.round(w[s].real, 6)), tuple(np.round(w[s].imag, 6))))
    kept: list[int] = []
    for s in order:
        for k in kept:
            d_re = w[s].real - w[k].real
            d_im = _wrap(w[s].imag - w[k].imag)
            if np.sqrt(np.sum(d_re**2 + d_im**2)) < opts.dedup_tol:
                break
        else:
            kept.append(s)

    points = [_critical_point(W, w[s], residual[s]) for s in kept]
    points.sort(key=lambda p: (tuple(round(abs(x), 9) for x in p.z), tuple(round(h, 9) for h in p.holonomy_angles)))
    if not points:
        warnings.warn("no Newton start converged to a critical point", RuntimeWarning, stacklevel=2)
    return points


def _critical_point(W: Superpotential, w: np.ndarray, residual: float) -> CriticalPoint:
    theta = tuple(float(-x) for x in w.real)
    h = tuple(float(x) for x in w.imag)
    interior = False
    if W.source is not None:
        interior = all(
            sum(a * float(b) for a, b in zip(theta, f.normal)) - float(f.offset) > INTERIOR_TOL
            for f in W.source.facets
        )
    z = tuple(complex(x) for x in np.exp(w))
    return CriticalPoint(z, float(residual), theta, h, interior)


class ConvergentVerdict(str, Enum):
    NON_VANISHING = "NonVanishingConvergent"
    VANISHING = "VanishingConvergent"


@dataclass(frozen=True)
class ConvergentResult:
    verdict: ConvergentVerdict
    values: tuple[complex, ...]
    label: str = NOT_A_CERTIFICATE

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "values": [{"re": v.real, "im": v.imag} for v in self.values],
            "label": self.label,
        }


def _verdict(values, tol) -> ConvergentResult:
    ok = all(abs(v) < tol for v in values)
    return ConvergentResult(
        ConvergentVerdict.NON_VANISHING if ok else ConvergentVerdict.VANISHING, tuple(values)
    )


def convergent_verdict(
    D: DiscClassSet, L: LocalSystem, W: BFieldWeights, tol: float = FLOAT_ZERO_TOL
) -> ConvergentResult:
    """Evaluate m_{1,2} at ``T^(2*pi) = e^(-1)`` and test for vanishing.

    This is not symplectically invariant, so a non-vanishing result says
    nothing about displaceability.
    """
    values = [c.convergent_eval(CONVERGENT_BASE) for c in m12(D, L, W)]
    return _verdict(values, tol)


def convergent_values_at(P: Polytope, theta: Sequence[float], L: LocalSystem, W: BFieldWeights) -> tuple[complex, ...]:
    """Convergent m_{1,2} at a fiber given in floating point (e.g. from a root)."""
    n = P.dim
    sign = (-1) ** n
    out = []
    for i in range(n):
        total = 0j
        for j, f in enumerate(P.facets):
            if f.normal[i] == 0:
                continue
            area = sum(t * a for t, a in zip(theta, f.normal)) - float(f.offset)
            total += sign * f.normal[i] * complex(W.d[j]) * complex(L.monodromy(f.normal)) * CONVERGENT_BASE**area
        out.append(total)
    return tuple(out)


def convergent_verdict_at(
    P: Polytope, theta: Sequence[float], L: LocalSystem, W: BFieldWeights, tol: float = 1e-8
) -> ConvergentResult:
    return _verdict(convergent_values_at(P, theta, L, W), tol)
