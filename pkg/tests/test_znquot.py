import numpy as np
import pytest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st

import sympy as sp

from graviton.errors import InvalidInputError
from graviton.germs import invariant_parameter_dims
from graviton.gibbons_hawking import SegmentSphere
from graviton.znquot import (
    averaged_class,
    build_polygon_config,
    classify_quotient_sphere,
    closest_vertex,
    invariant_cohomology_dim,
    is_invariant,
    quotient_pairing,
    segment_relation,
)

from oracles import sympy_segments_meet


def embedded_config():
    return build_polygon_config(2, 2, 1, [(0.0, 1.0, 0.0), (0.0, 2.0, np.pi / 2)])


def test_rp2():
    pc = build_polygon_config(1, 2, 1, [(0.0, 1.0)])
    v = classify_quotient_sphere(pc, 0, 1)
    assert v.shape == "RP2" and not v.nonzero_class


def test_double_point_sphere():
    pc = build_polygon_config(1, 3, 1, [(0.0, 1.0)])
    v = classify_quotient_sphere(pc, 0, 1)
    assert v.shape == "DoublePointS2" and not v.nonzero_class
    assert len(v.intersections) == 3


def test_embedded_sphere_with_nonzero_class():
    pc = embedded_config()
    b = closest_vertex(pc, 0, 1)
    assert b == 2
    v = classify_quotient_sphere(pc, 0, b)
    assert v.shape == "EmbeddedS2" and v.nonzero_class
    half = Fraction(1, 2)
    assert v.class_in_quotient == (half, half, -half, -half)
    theta = [float(x) for x in v.class_in_quotient]
    assert quotient_pairing(pc, theta, SegmentSphere(0, 2)) == pytest.approx(2 * np.pi)
    assert quotient_pairing(pc, theta, SegmentSphere(0, 2), quadrature=True) == pytest.approx(2 * np.pi, rel=1e-8)


def test_complicated_and_invalid():
    square = build_polygon_config(1, 4, 1, [(0.0, 1.0)])
    assert classify_quotient_sphere(square, 0, 2).shape == "Complicated"
    stacked = build_polygon_config(2, 3, 1, [(0.0, 1.0), (1.0, 1.0)])
    assert classify_quotient_sphere(stacked, 0, 3).shape == "Invalid"


def test_invalid_polygon_inputs():
    with pytest.raises(InvalidInputError):
        build_polygon_config(1, 4, 2, [(0.0, 1.0)])
    with pytest.raises(InvalidInputError):
        build_polygon_config(1, 3, 1, [(0.0, 0.0)])
    with pytest.raises(InvalidInputError):
        build_polygon_config(2, 3, 1, [(0.0, 1.0)])
    with pytest.raises(InvalidInputError):
        quotient_pairing(embedded_config(), [1, -1, 0, 0], SegmentSphere(0, 1))


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("n", range(2, 6))
def test_invariant_dims(d, n):
    assert invariant_cohomology_dim(d, n) == d - 1 == invariant_parameter_dims(d, n)["real"]


def test_averaged_class_is_invariant():
    pc = build_polygon_config(2, 3, 2, [(0.0, 1.0), (0.0, 2.0, 0.3)])
    for a in range(6):
        for b in range(6):
            if a != b:
                theta, _ = averaged_class(pc, a, b)
                assert is_invariant(pc, theta) and sum(theta) == 0


def oracle_relation(s1, s2, pts):
    meet = sympy_segments_meet(pts[s1[0]], pts[s1[1]], pts[s2[0]], pts[s2[1]])
    if not meet:
        return "disjoint"
    shared = set(s1) & set(s2)
    if len(shared) == 1 and len(meet) == 1 and isinstance(meet[0], sp.Point):
        v = shared.pop()
        if meet[0] == sp.Point(*[sp.Rational(Fraction(float(x))) for x in pts[v]]):
            return "endpoint"
    return "interior"


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=4, max_size=4, unique=True),
       st.booleans())
def test_segment_relation_matches_sympy(raw, share):
    pts = {i: (Fraction(x), Fraction(y)) for i, (x, y) in enumerate(raw)}
    s1 = (0, 1)
    s2 = (1, 2) if share else (2, 3)
    assert segment_relation(s1, s2, pts) == oracle_relation(s1, s2, {i: raw[i] for i in pts})
