import json
import random
from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_floer.builtins import (
    blowup3,
    cp,
    cube_blowup_a,
    cube_blowup_b,
    fano_builtins,
    hirzebruch1,
)
from toric_floer.certificate import (
    Certificate,
    CertificateVerdict,
    InconsistencyError,
    certify_fiber,
    certify_monotone,
    fully_supported_kernel_vector,
    scan_fibers,
    verify_certificate,
)
from toric_floer.floer import BFieldWeights, LocalSystem, Verdict, disc_classes, floer_verdict, m12
from toric_floer.linalg import det, kernel_basis, matvec, rank, solve
from toric_floer.novikov import GaussianRational
from toric_floer.polytope import FiberError, Polytope, monotone_fiber

F = Fraction
EPS = F(1, 8)


def sympy_kernel_dim(rows, n_cols):
    return n_cols - sympy.Matrix(rows).rank() if rows else n_cols


def oracle_has_full_support(rows, n_cols):
    """Independent oracle: a coordinate vanishes on the whole kernel iff e_j is in the row space."""
    M = sympy.Matrix(rows)
    null = M.nullspace()
    if not null:
        return False
    B = sympy.Matrix.hstack(*null)
    return all(any(B[j, k] != 0 for k in range(B.shape[1])) for j in range(n_cols))


# -- exact linear algebra -----------------------------------------------------


def test_kernel_basis_examples():
    assert kernel_basis([[1, 0, -1], [0, 1, -1]]) == [(1, 1, 1)]
    assert kernel_basis([[1, 2]]) == [(-2, 1)]
    assert kernel_basis([], 2) == [(1, 0), (0, 1)]
    assert kernel_basis([[1, 0], [0, 1]]) == []


def test_rank_det_solve():
    assert rank([[1, 2], [2, 4]]) == 1
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[1, 2], [2, 4]]) == 0
    assert solve([[1, 1], [1, -1]], [2, 0]) == (1, 1)
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=1, max_size=4))
def test_kernel_exact_by_remultiplication(rows):
    basis = kernel_basis(rows)
    assert len(basis) == sympy_kernel_dim(rows, 5)
    for b in basis:
        assert all(x == 0 for x in matvec(rows, b))
    if basis:
        assert rank(basis) == len(basis)


# -- fully supported kernel vectors ---------------------------------------------


def test_fully_supported_hirzebruch():
    rows = [[-1, 1, 1, 0], [-1, 0, 1, 1]]
    c = fully_supported_kernel_vector(rows)
    assert all(x != 0 for x in c)
    assert matvec(rows, c) == [0, 0]


def test_fully_supported_impossible():
    # columns (1,0), (-1,0), (0,1): the third coordinate vanishes on the kernel
    assert fully_supported_kernel_vector([[1, -1, 0], [0, 0, 1]]) is None
    assert fully_supported_kernel_vector([[1, 0], [0, 1]]) is None


def test_fully_supported_blowup3_level():
    c = fully_supported_kernel_vector([[1, 1, 0], [0, 1, 1]])
    # v3 - v4 + v5 = 0 up to scale
    assert (c[1] / c[0], c[2] / c[0]) == (-1, 1)


def test_random_matrix_oracle_equivalence():
    rng = random.Random(20240601)
    for _ in range(200):
        rows = [[rng.randint(-2, 2) for _ in range(5)] for _ in range(3)]
        c = fully_supported_kernel_vector(rows)
        assert (c is not None) == oracle_has_full_support(rows, 5)
        if c is None:
            continue
        assert all(x != 0 for x in c) and all(x == 0 for x in matvec(rows, c))
        basis = kernel_basis(rows)
        for _ in range(5):
            coeffs = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in basis]
            v = [sum((a * b[j] for a, b in zip(coeffs, basis)), F(0)) for j in range(5)]
            assert all(x == 0 for x in matvec(rows, v))


# -- certificates -------------------------------------------------------------------


def test_hirzebruch_certificate():
    cert = certify_fiber(hirzebruch1(), (0, 0))
    assert cert.verdict is CertificateVerdict.CERTIFIED
    assert len(cert.levels) == 1
    assert cert.weights == (2, 1, 1, 1)
    D = disc_classes(hirzebruch1(), (0, 0))
    assert m12(D, LocalSystem.trivial(2), cert.bfield_weights()) == (0, 0)
    assert verify_certificate(hirzebruch1(), cert)


def test_blowup3_corner_fiber():
    cert = certify_fiber(blowup3(EPS), (EPS, EPS))
    assert cert.certified
    assert [(lv.area_exp, lv.indices) for lv in cert.levels] == [(EPS, (2, 3, 4)), (F(3, 4), (0, 1, 5))]
    low, high = (lv.coeffs for lv in cert.levels)
    assert tuple(c / low[0] for c in low) == (1, -1, 1)
    assert tuple(c / high[1] for c in high) == (-1, 1, 1)


def test_blowup3_generic_fiber_unknown():
    cert = certify_fiber(blowup3(EPS), (F(1, 10), F(1, 5)))
    assert cert.verdict is CertificateVerdict.UNKNOWN
    assert len(cert.failing_levels) == 6
    assert all(len(lv.indices) == 1 for lv in cert.levels)
    assert cert.weights is None
    with pytest.raises(ValueError):
        cert.bfield_weights()
    assert verify_certificate(blowup3(EPS), cert)


def test_exterior_fiber_raises():
    with pytest.raises(FiberError):
        certify_fiber(blowup3(EPS), (F(3, 4), F(3, 4)))


def test_cube_variants():
    a = certify_fiber(cube_blowup_a(F(1, 4)), (0, 0, 0))
    b = certify_fiber(cube_blowup_b(F(1, 4)), (0, 0, 0))
    assert a.certified and b.certified
    for lv in a.levels:
        assert lv.coeffs == (1, 1, 1, 1)
    for lv in b.levels:
        (k,) = kernel_basis([[cube_blowup_b(F(1, 4)).facets[j].normal[i] for j in lv.indices] for i in range(3)])
        assert min(k) < 0 < max(k)


def test_non_fano_warning():
    P = Polytope.from_data("square", [(1, 0), (-1, 0), (0, 1), (0, -1)], [0, -1, 0, -1])
    with pytest.warns(UserWarning, match="Fano"):
        cert = certify_fiber(P, (F(1, 2), F(1, 2)))
    assert cert.certified


def test_certificate_round_trip():
    for P, A in [(hirzebruch1(), (0, 0)), (blowup3(EPS), (EPS, EPS)), (blowup3(EPS), (F(1, 10), F(1, 5)))]:
        cert = certify_fiber(P, A)
        back = Certificate.from_dict(json.loads(json.dumps(cert.to_dict())))
        assert back == cert
        assert verify_certificate(P, back)


def test_verify_rejects_tampering():
    P = hirzebruch1()
    cert = certify_fiber(P, (0, 0))
    doc = cert.to_dict()
    doc["levels"][0]["coefficients"][0] = ["3", "0"]
    assert not verify_certificate(P, Certificate.from_dict(doc))
    doc = cert.to_dict()
    doc["fiber"] = ["5", "5"]
    assert not verify_certificate(P, Certificate.from_dict(doc))


def test_certify_monotone_builtins():
    missing = []
    for P in fano_builtins():
        cert = certify_monotone(P)
        if cert is None:
            missing.append(P.name)
        else:
            assert cert.certified and verify_certificate(P, cert), P.name
    # the blow-ups with small exceptional facets are not monotone
    assert missing == ["blowup3", "cube_blowup_a", "cube_blowup_b"]


def test_certify_monotone_inconsistency_guard(monkeypatch):
    # a Fano-flagged polytope whose monotone fiber fails is reported, not hidden
    import toric_floer.certificate as certificate

    monkeypatch.setattr(certificate, "fully_supported_kernel_vector", lambda rows, n_cols=None: None)
    with pytest.raises(InconsistencyError):
        certify_monotone(cp(2))
    unflagged = Polytope.from_data("tri", [(1, 0), (0, 1), (-1, -1)], [0, 0, -1])
    assert not certify_monotone(unflagged).certified


def test_scan_blowup3():
    found = [A for A, _ in scan_fibers(blowup3(EPS), 8)]
    assert found == [(EPS, EPS), (EPS, F(3, 4)), (F(3, 4), EPS)]


def test_scan_cp2():
    found = [A for A, _ in scan_fibers(cp(2), 6)]
    assert found == [(F(1, 3), F(1, 3))]


def test_scan_bounds():
    with pytest.raises(ValueError):
        scan_fibers(cp(2), 0)
    with pytest.raises(ValueError):
        scan_fibers(cp(2), 65)


def test_cross_module_soundness():
    """Certified fibers give exactly vanishing m_{1,2} with the certificate weights."""
    for P in fano_builtins() + [blowup3(EPS)]:
        fibers = [A for A, _ in scan_fibers(P, 4)]
        mono = monotone_fiber(P)
        if mono:
            fibers.append(mono[0])
        for A in fibers:
            cert = certify_fiber(P, A)
            assert cert.certified
            m = m12(disc_classes(P, A), LocalSystem.trivial(P.dim), cert.bfield_weights())
            assert floer_verdict(m) is Verdict.NON_VANISHING
            assert all(c == 0 for c in m)


def test_scaling_invariance_of_certificate():
    P = blowup3(EPS)
    cert = certify_fiber(P, (EPS, EPS))
    for s in [F(-3), F(2, 7), GaussianRational(1, 1)]:
        scaled = tuple(s * w for w in cert.weights)
        m = m12(disc_classes(P, (EPS, EPS)), LocalSystem.trivial(2), BFieldWeights(scaled))
        assert all(c == 0 for c in m)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 15), st.integers(1, 15))
def test_grid_fibers_consistent(a, b):
    P = blowup3(EPS)
    A = (F(a, 16), F(b, 16))
    if not P.contains_interior(A):
        return
    cert = certify_fiber(P, A)
    assert verify_certificate(P, cert)
    for lv in cert.levels:
        rows = [[P.facets[j].normal[i] for j in lv.indices] for i in range(2)]
        assert lv.certified == oracle_has_full_support(rows, len(lv.indices))


def test_sign_patterns_enumerated():
    # brute force over small integer coefficients agrees with the exact search on one level
    rows = [[1, 1, 0], [0, 1, 1]]
    hits = [c for c in product(range(-2, 3), repeat=3) if all(c) and matvec(rows, c) == [0, 0]]
    assert hits and fully_supported_kernel_vector(rows) is not None
