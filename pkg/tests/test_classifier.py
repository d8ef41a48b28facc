import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graviton.cartan import DeformationParameter, build_root_system
from graviton.classifier import (
    classify_roots,
    gh_parameter,
    persistently_lagrangian,
    root_for_pair,
    rotation_to_holomorphic,
    scale_parameter,
    sphere_inventory_A,
)
from graviton.errors import InvalidInputError, NumericalRejection
from graviton.gibbons_hawking import GHConfig, Omega, SegmentSphere, pairing

from oracles import is_rotation


def sum_zero(v):
    v = np.asarray(v, float)
    return v - v.mean()


def verdict_for(cls, root):
    return next(v for v in cls.verdicts if tuple(float(x) for x in v.root) == tuple(float(x) for x in root))


def test_classify_example():
    rs = build_root_system("A", 2)
    cls = classify_roots(rs, DeformationParameter([1, -1, 0], [0, 0, 0]))
    assert cls.smooth
    assert all(v.holomorphic and not v.lagrangian for v in cls.verdicts)
    assert not verdict_for(cls, (1, 0, -1)).primitive_holomorphic
    assert verdict_for(cls, (1, -1, 0)).primitive_holomorphic


def test_classify_wall():
    rs = build_root_system("A", 2)
    cls = classify_roots(rs, DeformationParameter([1, 1, -2], [2, 2, -4]))
    assert not cls.smooth
    v = verdict_for(cls, (1, -1, 0))
    assert v.wall_violation and v.lagrangian and v.holomorphic


def test_classify_rejects_wrong_length():
    with pytest.raises(InvalidInputError):
        classify_roots(build_root_system("A", 2), DeformationParameter([1, -1], [0, 0]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_smooth_iff_no_root_kills_all_three(ints):
    rs = build_root_system("A", 2)
    Z = np.array(ints, float).reshape(3, 3)
    Z -= Z.mean(axis=1, keepdims=True)
    cls = classify_roots(rs, DeformationParameter.from_triple(*Z))
    brute = any(np.all(np.abs(Z @ np.array([float(x) for x in th])) < 1e-12) for th in rs.positive_roots)
    assert cls.smooth == (not brute)
    for v in cls.verdicts:
        assert v.wall_violation == (v.lagrangian and v.holomorphic)
        assert not v.primitive_lagrangian or v.lagrangian


def test_rotation_example():
    w = rotation_to_holomorphic((1, -1), ((0, 0), (0.5, -0.5), (0.5, -0.5)))
    assert w.phi == pytest.approx(3 * np.pi / 4)
    assert is_rotation(w.u)
    assert w.residual((1, -1)) < 1e-15
    assert np.allclose(w.complex_structure, [0, np.sqrt(0.5), np.sqrt(0.5)])


def test_rotation_aligned_case():
    w = rotation_to_holomorphic((1, -1), ((0, 0), (1, -1), (0, 0)))
    assert w.phi == 0.0
    assert np.allclose(w.complex_structure, [0, -1, 0])


def test_rotation_requires_lagrangian():
    with pytest.raises(NumericalRejection):
        rotation_to_holomorphic((1, -1), ((1, -1), (0, 0), (0, 0)))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_rotation_lemma_property(seed):
    rng = np.random.default_rng(seed)
    rs = build_root_system("A", 3)
    th = rs.positive_roots[int(rng.integers(len(rs.positive_roots)))]
    t = np.array([float(x) for x in th])
    z1 = sum_zero(rng.normal(size=4))
    z1 -= (z1 @ t) / (t @ t) * t
    triple = (z1, sum_zero(rng.normal(size=4)), sum_zero(rng.normal(size=4)))
    w = rotation_to_holomorphic(th, triple)
    assert 0 <= w.phi < np.pi
    assert is_rotation(w.u)
    assert w.residual(th) <= 1e-12 * max(1.0, np.abs(np.stack(triple)).max())
    # after rotation the root is holomorphic for the new complex structure
    cls = classify_roots(rs, DeformationParameter.from_triple(*w.xi))
    assert verdict_for(cls, th).holomorphic


@settings(max_examples=20, deadline=None)
@given(st.floats(0.05, 20), st.floats(0, 2 * np.pi), st.integers(0, 1000))
def test_scaling_preserves_verdicts(mod, arg, seed):
    rng = np.random.default_rng(seed)
    rs = build_root_system("A", 3)
    zr = sum_zero(rng.integers(-2, 3, size=4))
    zc = sum_zero(rng.integers(-2, 3, size=4)) + 1j * sum_zero(rng.integers(-2, 3, size=4))
    zeta = DeformationParameter(zr, zc)
    lam = mod * np.exp(1j * arg)
    sp = scale_parameter(lam, zeta)
    assert sp.metric_factor == pytest.approx(1 / mod ** 2)
    a, b = classify_roots(rs, zeta), classify_roots(rs, sp.zeta)
    assert [v.flags() for v in a.verdicts] == [v.flags() for v in b.verdicts]


def test_scale_by_zero_rejected():
    with pytest.raises(InvalidInputError):
        scale_parameter(0, DeformationParameter([1, -1], [0, 0]))


def test_gh_dictionary():
    cfg = GHConfig([[0, 0, 0], [1, 0, 0], [0, 2, 1]])
    zeta = gh_parameter(cfg)
    for a in range(3):
        for b in range(3):
            if a != b:
                th = np.array(root_for_pair(3, a, b), float)
                assert np.allclose([th @ z for z in zeta.triple()], cfg.points[a] - cfg.points[b])


def test_sphere_inventory_matches_kahler_periods():
    cfg = GHConfig([[0, 0, 0], [1, 0, 0], [2, 0, 0], [0.5, 1.5, -0.5]], string_direction=[0.2, 0.3, 0.93])
    recs = sphere_inventory_A(cfg)
    assert len(recs) == 6
    assert [r.valid for r in recs if (r.a, r.b) == (0, 2)] == [False]
    rng = np.random.default_rng(0)
    for r in recs:
        if not r.valid:
            continue
        for xi in [*r.lagrangian_plane, r.holomorphic_direction, rng.normal(size=3)]:
            period = pairing(cfg, Omega(tuple(xi / np.linalg.norm(xi))), SegmentSphere(r.a, r.b))
            assert r.lagrangian_for(xi) == (abs(period) < 1e-8)


def test_persistently_lagrangian():
    th = (1, -1, 0)
    ks = np.array([[0, 0, 0], [1, 1, -2], [2, 2, -4]], float)
    assert persistently_lagrangian(ks, th) == {"persistent": True, "order": 2, "first_violation": None}
    ks[2] = [1, 0, -1]
    assert persistently_lagrangian(ks, th)["first_violation"] == 2
    with pytest.raises(InvalidInputError):
        persistently_lagrangian(ks, (1, -1))
