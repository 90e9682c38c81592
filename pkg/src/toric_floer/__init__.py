"""Floer-theoretic non-displaceability certificates for toric fibers."""

__version__ = "0.1.0"

from .novikov import GaussianRational, NovikovElement  # noqa: E402
from .polytope import (  # noqa: E402
    FiberError,
    InvalidPolytopeError,
    Polytope,
    PolytopeFormatError,
    contains_interior,
    monotone_fiber,
    parse_polytope,
    validate,
    vertices,
)
from .floer import (  # noqa: E402
    BFieldWeights,
    LocalSystem,
    Verdict,
    disc_classes,
    energy_levels,
    floer_verdict,
    m12,
    m12_pt,
)
from .mirror import (  # noqa: E402
    ConvergentVerdict,
    convergent_verdict,
    critical_equations,
    solve_critical,
    superpotential,
)
from .certificate import (  # noqa: E402
    Certificate,
    CertificateVerdict,
    certify_fiber,
    certify_monotone,
    fully_supported_kernel_vector,
    kernel_basis,
    scan_fibers,
    verify_certificate,
)
from . import builtins  # noqa: E402
