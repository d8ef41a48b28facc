import cmath

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from graviton.conic_model import (
    A1_POINTS,
    a1_germ,
    degenerate_fibers,
    invariant_chart_check,
    nondegenerate_line,
    resubstitution_residual,
    split_degenerate_fiber,
)
from graviton.errors import InvalidInputError
from graviton.germs import lift_Ak_germ

from oracles import conic_factor


def linear_factor_count(eps1, eps2, x):
    _, factors = conic_factor(eps1, eps2, x)
    return sum(m for f, m in factors if sp.Poly(f, *sp.symbols("alpha beta gamma")).total_degree() == 1)


def test_unit_example():
    fib = degenerate_fibers(1, 1)
    assert fib.total_space_smooth and sorted(v.real for v in fib.values) == [-2, 2]
    for x in fib.values:
        assert linear_factor_count(1, 1, int(x.real)) == 2
        sf = split_degenerate_fiber(1, 1, x)
        assert sf.residual <= 1e-12
        assert resubstitution_residual(1, 1, x, sf.l1) <= 1e-12
        assert resubstitution_residual(1, 1, x, sf.l2) <= 1e-12
    assert linear_factor_count(1, 1, 1) == 0


def test_singular_total_space():
    fib = degenerate_fibers(0, 3)
    assert not fib.total_space_smooth and fib.values == (0j,)
    sf = split_degenerate_fiber(0, 3, 0)
    assert sf.residual <= 1e-12
    assert linear_factor_count(0, 3, 0) == 2


def test_non_degenerate_fiber_rejected():
    with pytest.raises(InvalidInputError):
        split_degenerate_fiber(1, 1, 1)


complex_nonzero = st.tuples(st.floats(-3, 3), st.floats(-3, 3)).map(lambda p: complex(*p)).filter(lambda z: abs(z) > 0.05)


@settings(max_examples=60, deadline=None)
@given(complex_nonzero, complex_nonzero)
def test_split_residuals(e1, e2):
    fib = degenerate_fibers(e1, e2)
    assert len(fib.values) == 2 and fib.total_space_smooth
    assert abs(fib.values[0] - fib.values[1]) > 0
    for x in fib.values:
        sf = split_degenerate_fiber(e1, e2, x)
        assert sf.residual <= 1e-12
        for line in (sf.l1, sf.l2):
            assert resubstitution_residual(e1, e2, x, line) <= 1e-12 * max(1, abs(e1), abs(e2), abs(x))


@settings(max_examples=15, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-6, 6))
def test_reducible_iff_discriminant_vanishes(e1, e2, x):
    reducible = linear_factor_count(e1, e2, x) == 2
    assert reducible == (x * x == 4 * e1 * e2)


def test_invariant_charts():
    rng = np.random.default_rng(0)
    S = rng.normal(size=(50, 3)) + 1j * rng.normal(size=(50, 3))
    S[0, 1] = 0
    S[1, 2] = 0
    res = invariant_chart_check(S)
    assert max(res.values()) <= 1e-12
    with pytest.raises(InvalidInputError):
        invariant_chart_check([[1, 0, 0]])


def test_affine_chart_is_a1_family():
    a, y, z, x, e1, e2 = sp.symbols("alpha y z x eps1 eps2")
    Q = e1 * y ** 2 + e2 + x * y - z ** 2  # beta = 1, alpha = y, gamma = z
    xp = sp.Symbol("xp")
    assert sp.expand(Q.subs(x, xp - e1 * y) - (xp * y - z ** 2 + e2)) == 0


def test_line_criterion():
    v = nondegenerate_line(1, 1)
    assert v.nondegenerate and all(v.per_point.values())
    v = nondegenerate_line(1, 0)
    assert not v.nondegenerate
    assert v.per_point == {"[1:0:0]": True, "[0:1:0]": False}
    assert set(A1_POINTS) == {"[1:0:0]", "[0:1:0]"}


def test_a1_germ_lifts_with_square_root():
    lg = lift_Ak_germ(a1_germ(2 + 1j))
    assert lg.cover_order == 2
    assert abs(abs(lg.series[1, 0]) - abs(cmath.sqrt(2 + 1j))) < 1e-9
