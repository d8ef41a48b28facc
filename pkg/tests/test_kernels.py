import numpy as np
import pytest

from graviton import _ghkernel_py, _kernels

compiled = pytest.importorskip("graviton._ghkernel")


def setup_module():
    global P, X, n
    rng = np.random.default_rng(0)
    P = rng.uniform(-2, 2, size=(5, 3))
    X = rng.uniform(-3, 3, size=(300, 3))
    n = np.array([0.3, -0.4, 0.866])
    n /= np.linalg.norm(n)


def test_backend_flag():
    assert _kernels.BACKEND in ("cython", "python")


def test_potential_parity():
    for a, b in zip(compiled.potential_terms(P, X), _ghkernel_py.potential_terms(P, X)):
        assert np.allclose(a, b, rtol=1e-12, atol=1e-12)


def test_center_terms_parity():
    for a, b in zip(compiled.center_terms(P, X), _ghkernel_py.center_terms(P, X)):
        assert np.allclose(a, b, rtol=1e-12, atol=1e-12)


def test_gauge_parity():
    (A1, m1), (A2, m2) = compiled.gauge_terms(P, X, n), _ghkernel_py.gauge_terms(P, X, n)
    ok = m1 > 1e-3
    assert np.allclose(A1[ok], A2[ok], rtol=1e-9, atol=1e-9)
    assert np.allclose(m1, m2, rtol=1e-12, atol=1e-12)
