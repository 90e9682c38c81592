"""Command line front end: ``toric-floer SUBCOMMAND [options]``.

Exit codes: 0 success, 1 usage or input errors, 2 domain errors (fiber not
interior, no monotone fiber, no certificate for the requested mode).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from fractions import Fraction

from . import __version__
from .builtins import BUILTINS, get_builtin
from .certificate import MAX_SCAN_DENOMINATOR, certify_fiber, certify_monotone, scan_fibers
from .floer import (
    BFieldWeights,
    LocalSystem,
    disc_classes,
    energy_levels,
    floer_verdict,
    m12,
    m12_to_json,
)
from .mirror import SolveOptions, convergent_verdict, solve_critical, superpotential
from .novikov import GaussianRational
from .polytope import (
    FiberError,
    InvalidPolytopeError,
    PolytopeFormatError,
    monotone_fiber,
    parse_polytope,
    validate,
)

SEED_ENV = "TORIC_FLOER_SEED"


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not an exact rational: {text!r}") from None


def _rational_list(text: str) -> tuple[Fraction, ...]:
    items = [t for t in text.split(",") if t.strip()]
    for t in items:
        if "." in t or "e" in t.lower():
            raise UsageError(f"use exact rationals p/q, not decimals: {t!r}")
    return tuple(_rational(t) for t in items)


def _scalar(text: str):
    """Exact rational, or a Python complex literal when it contains 'j'."""
    text = text.strip()
    if "j" in text:
        try:
            return complex(text)
        except ValueError:
            raise UsageError(f"bad complex literal {text!r}") from None
    return GaussianRational(_rational(text))


def _holonomy(text: str | None, n: int) -> LocalSystem:
    if text is None:
        return LocalSystem.trivial(n)
    items = [t.strip() for t in text.split(",")]
    if len(items) != n:
        raise UsageError(f"--holonomy needs {n} entries")
    if any("j" in t for t in items):
        return LocalSystem(tuple(complex(_scalar(t)) for t in items))
    return LocalSystem.from_angles(_rational_list(text))


def _weights(text: str | None, N: int) -> BFieldWeights | None:
    if text is None:
        return None
    items = [t for t in text.split(",")]
    if len(items) != N:
        raise UsageError(f"--weights needs {N} entries")
    try:
        return BFieldWeights(tuple(_scalar(t) for t in items))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_polytope(args):
    if args.builtin and args.polytope:
        raise UsageError("give either --builtin or --polytope, not both")
    if args.builtin:
        param = None if args.param is None else _rational(args.param)
        try:
            return get_builtin(args.builtin, param)
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(str(exc).strip("'\"")) from None
    if args.polytope:
        try:
            with open(args.polytope, encoding="utf-8") as fh:
                return parse_polytope(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.polytope}: {exc.strerror}") from None
    raise UsageError("one of --builtin or --polytope is required")


def _fiber(args, P):
    if args.fiber is None:
        raise UsageError("--fiber is required")
    A = _rational_list(args.fiber)
    if len(A) != P.dim:
        raise UsageError(f"--fiber needs {P.dim} coordinates")
    return A


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _complex_json(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


# -- subcommands ----------------------------------------------------------


def cmd_builtins(args):
    rows = []
    for name, (_, kind, default) in BUILTINS.items():
        P = get_builtin(name)
        rep = validate(P)
        rows.append(
            {
                "name": name,
                "parameter": kind,
                "default": None if default is None else str(default),
                "dim": P.dim,
                "facets": P.n_facets,
                "valid": rep.ok,
                "smooth": rep.smooth,
                "reflexive": rep.reflexive,
            }
        )
    if args.json:
        return {"builtins": rows}
    lines = []
    for r in rows:
        param = f" [{r['parameter']} param, default {r['default']}]" if r["parameter"] else ""
        lines.append(
            f"{r['name']}{param}: dim {r['dim']}, {r['facets']} facets, "
            f"smooth={r['smooth']}, reflexive={r['reflexive']}"
        )
    return "\n".join(lines)


def cmd_validate(args):
    P = _load_polytope(args)
    rep = validate(P)
    if args.json:
        return {"polytope": P.to_dict(), "report": rep.to_dict()}
    lines = [f"{P.name}: dim {P.dim}, {P.n_facets} facets"]
    for key in ("bounded", "full_dimensional", "facets_essential", "smooth", "reflexive"):
        lines.append(f"  {key}: {getattr(rep, key)}")
    lines += [f"  warning: {w}" for w in rep.warnings]
    return "\n".join(lines)


def cmd_vertices(args):
    P = _load_polytope(args)
    if args.json:
        return {"vertices": [[str(x) for x in v] for v in P.vertices]}
    return "\n".join(_fmt_vec(v) for v in P.vertices)


def cmd_monotone(args):
    P = _load_polytope(args)
    mono = monotone_fiber(P)
    if mono is None:
        raise DomainError(f"{P.name} has no monotone fiber")
    A, r = mono
    if args.json:
        return {"fiber": [str(x) for x in A], "area_exp": str(r)}
    return f"monotone fiber {_fmt_vec(A)}, every disc area 2pi*{r}"


def cmd_areas(args):
    P = _load_polytope(args)
    D = disc_classes(P, _fiber(args, P))
    if args.json:
        return {
            "fiber": [str(x) for x in D.fiber],
            "classes": [
                {"index": c.index, "boundary": list(c.boundary), "area_exp": str(c.area_exp)}
                for c in D.classes
            ],
        }
    return "\n".join(
        f"v{c.index + 1} = {_fmt_vec(c.boundary)}: area 2pi*{c.area_exp}" for c in D.classes
    )


def cmd_levels(args):
    P = _load_polytope(args)
    levels = energy_levels(disc_classes(P, _fiber(args, P)))
    if args.json:
        return {"levels": [{"area_exp": str(r), "indices": list(ix)} for r, ix in levels]}
    return "\n".join(
        f"2pi*{r}: " + ", ".join(f"v{j + 1}" for j in ix) for r, ix in levels
    )


def _m12_inputs(args, P):
    D = disc_classes(P, _fiber(args, P))
    L = _holonomy(args.holonomy, P.dim)
    W = _weights(args.weights, P.n_facets)
    if W is None:
        if args.mode == "bfield":
            cert = certify_fiber(P, D.fiber, warn=False)
            if not cert.certified:
                raise DomainError("no B-field certificate at this fiber; pass --weights explicitly")
            W = cert.bfield_weights()
        else:
            W = BFieldWeights.trivial(P.n_facets)
    return D, L, W


def cmd_m12(args):
    P = _load_polytope(args)
    D, L, W = _m12_inputs(args, P)
    if args.mode == "convergent":
        res = convergent_verdict(D, L, W)
        if args.json:
            return {"mode": "convergent", "values": [_complex_json(v) for v in res.values], "label": res.label}
        return "\n".join(f"m12(C{i + 1}) = {v:.12g}" for i, v in enumerate(res.values)) + f"\n({res.label})"
    comps = m12(D, L, W)
    if args.json:
        return {"mode": args.mode, "m12": m12_to_json(comps)}
    return "\n".join(f"m12(C{i + 1}) = {c}" for i, c in enumerate(comps))


def cmd_verdict(args):
    P = _load_polytope(args)
    D, L, W = _m12_inputs(args, P)
    if args.mode == "convergent":
        res = convergent_verdict(D, L, W)
        if args.json:
            return res.to_dict()
        return f"{res.verdict.value} ({res.label})"
    v = floer_verdict(m12(D, L, W))
    if args.json:
        return {"mode": args.mode, "verdict": v.value}
    return v.value


def cmd_certify(args):
    P = _load_polytope(args)
    if args.fiber is None:
        cert = certify_monotone(P)
        if cert is None:
            raise DomainError(f"{P.name} has no monotone fiber; pass --fiber")
    else:
        cert = certify_fiber(P, _fiber(args, P), warn=False)
    if args.json:
        return {"polytope": P.name, "certificate": cert.to_dict()}
    lines = [f"fiber {_fmt_vec(cert.fiber)}: {cert.verdict.value}"]
    for lv in cert.levels:
        idx = ", ".join(f"v{j + 1}" for j in lv.indices)
        coeffs = "none" if lv.coeffs is None else _fmt_vec(lv.coeffs)
        lines.append(f"  level 2pi*{lv.area_exp} [{idx}]: {coeffs}")
    if cert.weights is not None:
        lines.append(f"  weights d = {_fmt_vec(cert.weights)}")
    if not P.fano:
        lines.append("  warning: polytope not flagged Fano; positivity is assumed")
    return "\n".join(lines)


def cmd_scan(args):
    P = _load_polytope(args)
    if not 1 <= args.grid <= MAX_SCAN_DENOMINATOR:
        raise UsageError(f"--grid must be in 1..{MAX_SCAN_DENOMINATOR}")
    found = scan_fibers(P, args.grid)
    if args.json:
        return {"polytope": P.name, "grid": args.grid, "certified": [c.to_dict() for _, c in found]}
    if not found:
        return "no certified fibers on this grid"
    return "\n".join(f"{_fmt_vec(A)}: Certified" for A, _ in found)


def cmd_critical(args):
    P = _load_polytope(args)
    seed = int(os.environ.get(SEED_ENV, "0"))
    opts = SolveOptions(starts=args.starts, residual_tol=args.tol, seed=seed)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        points = solve_critical(superpotential(P), opts)
    if args.json:
        return {
            "polytope": P.name,
            "critical_points": [p.to_dict() for p in points],
            "warnings": [str(w.message) for w in caught],
        }
    lines = [f"{len(points)} critical points"]
    for p in points:
        logs = ", ".join(f"{w.real:.4f}{w.imag:+.4f}i" for w in p.log_z)
        lines.append(f"  log z = ({logs})  residual {p.residual:.1e}  interior={p.interior}")
    return "\n".join(lines)


COMMANDS = {
    "builtins": cmd_builtins,
    "validate": cmd_validate,
    "vertices": cmd_vertices,
    "monotone": cmd_monotone,
    "areas": cmd_areas,
    "levels": cmd_levels,
    "m12": cmd_m12,
    "verdict": cmd_verdict,
    "certify": cmd_certify,
    "scan": cmd_scan,
    "critical": cmd_critical,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toric-floer", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--builtin", help="builtin polytope name (see 'builtins')")
    common.add_argument("--polytope", help="JSON polytope file")
    common.add_argument("--param", help="builtin parameter, exact rational p/q")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    fiber = _Parser(add_help=False)
    fiber.add_argument("--fiber", help="fiber coordinates r1,r2,... as exact rationals")

    floer = _Parser(add_help=False)
    floer.add_argument("--holonomy", help="angles in turns (1/3 means exp(2pi i/3)), or complex literals like 2+0j")
    floer.add_argument("--weights", help="B-field weights d_1,...,d_N (rationals or complex literals)")
    floer.add_argument("--mode", choices=["standard", "bfield", "convergent"], default="standard")

    sub.add_parser("builtins", parents=[common], help="list builtin polytopes")
    sub.add_parser("validate", parents=[common], help="validation report")
    sub.add_parser("vertices", parents=[common], help="exact vertices")
    sub.add_parser("monotone", parents=[common], help="monotone fiber")
    sub.add_parser("areas", parents=[common, fiber], help="Maslov index two disc areas")
    sub.add_parser("levels", parents=[common, fiber], help="energy levels")
    sub.add_parser("m12", parents=[common, fiber, floer], help="m_{1,2} on each generator")
    sub.add_parser("verdict", parents=[common, fiber, floer], help="Floer cohomology verdict")
    sub.add_parser("certify", parents=[common, fiber], help="search for a certificate")
    p = sub.add_parser("scan", parents=[common], help="certify every grid fiber")
    p.add_argument("--grid", type=int, default=8, help="denominator bound")
    p = sub.add_parser("critical", parents=[common], help="superpotential critical points")
    p.add_argument("--starts", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-10, help="residual tolerance")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UserWarning)
            out = COMMANDS[args.command](args)
    except (UsageError, PolytopeFormatError, InvalidPolytopeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except (DomainError, FiberError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if isinstance(out, dict):
        out = json.dumps(out, indent=2, sort_keys=True)
    print(out, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
