import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graviton.cartan import (
    DeformationParameter,
    build_root_system,
    classify_T_singularity,
    primitive_decomposition,
    wall_test,
    weyl_element_order,
    weyl_orbit,
)
from graviton.errors import InvalidInputError

from oracles import positive_root_count

SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("A", 5), ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8)]
F = Fraction


def e(n, *idx_sign):
    v = [F(0)] * n
    for i, s in idx_sign:
        v[i] = F(s)
    return tuple(v)


@pytest.mark.parametrize("kind,rank", SYSTEMS)
def test_positive_root_counts(kind, rank):
    rs = build_root_system(kind, rank)
    assert len(rs.positive_roots) == positive_root_count(kind, rank)
    assert len(set(rs.positive_roots)) == len(rs.positive_roots)


@pytest.mark.parametrize("kind,rank", SYSTEMS)
def test_positive_roots_are_nonnegative_combinations(kind, rank):
    rs = build_root_system(kind, rank)
    S = np.array([[float(x) for x in s] for s in rs.simple_roots])
    for th, c in zip(rs.positive_roots, rs.coefficients):
        assert all(x >= 0 for x in c)
        assert np.allclose(np.array(c) @ S, [float(x) for x in th])
        assert sum(x * x for x in th) == 2


@pytest.mark.parametrize("kind,rank", SYSTEMS)
def test_reflection_closure(kind, rank):
    rs = build_root_system(kind, rank)
    roots = set(rs.positive_roots) | {tuple(-x for x in r) for r in rs.positive_roots}
    for a in rs.simple_roots:
        for r in rs.positive_roots:
            assert rs.reflect(a, r) in roots


def test_type_a_roots_are_differences_of_basis_vectors():
    rs = build_root_system("A", 3)
    brute = {e(4, (a, 1), (b, -1)) for a, b in itertools.combinations(range(4), 2)}
    assert set(rs.positive_roots) == brute
    assert rs.ambient_dim == 4


def test_a1_ambient_model():
    rs = build_root_system("A1")
    assert rs.positive_roots == ((F(1), F(-1)),)
    rs.check_vector((F(3), F(-3)))
    with pytest.raises(InvalidInputError):
        rs.check_vector((F(1), F(1)))


@pytest.mark.parametrize("kind,rank", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 2)])
def test_invalid_root_systems(kind, rank):
    with pytest.raises(InvalidInputError):
        build_root_system(kind, rank)


def test_wall_examples():
    rs = build_root_system("A", 2)
    assert wall_test(rs, (1, 1, -2)) == [e(3, (0, 1), (1, -1))]
    assert wall_test(rs, (1, 0, -1)) == []
    assert set(wall_test(rs, (0, 0, 0))) == set(rs.positive_roots)


def test_wall_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        wall_test(build_root_system("A", 2), (1, -1))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-3, 3), min_size=3, max_size=3),
    st.floats(0.01, 100) | st.floats(-100, -0.01),
)
def test_wall_scale_invariance(raw, alpha):
    rs = build_root_system("A", 3)
    v = np.array(raw + [-sum(raw)], dtype=float)
    tol = 1e-9
    assert set(wall_test(rs, alpha * v, tol * abs(alpha))) == set(wall_test(rs, v, tol))


def test_primitive_examples():
    rs = build_root_system("A", 2)
    d = primitive_decomposition(rs, e(3, (0, 1), (2, -1)), lambda t: True)
    assert not d.primitive and set(d.witness) == {e(3, (0, 1), (1, -1)), e(3, (1, 1), (2, -1))}
    assert primitive_decomposition(rs, e(3, (0, 1), (1, -1)), lambda t: False).primitive
    rs3 = build_root_system("A", 3)
    assert not primitive_decomposition(rs3, e(4, (0, 1), (3, -1)), lambda t: rs3.pair(t, (0, 0, 0, 0)) == 0).primitive


def test_primitive_rejects_non_root():
    rs = build_root_system("A", 2)
    with pytest.raises(InvalidInputError):
        primitive_decomposition(rs, (F(2), F(-1), F(-1)), lambda t: True)


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4), ("E", 6)])
def test_primitive_matches_exhaustive_search(kind, rank):
    rs = build_root_system(kind, rank)
    rng = np.random.default_rng(rank)
    v = rng.integers(-1, 2, size=rs.ambient_dim)
    v = rs.project(v.astype(float))
    pred = lambda t: abs(float(np.dot([float(x) for x in t], v))) < 1e-9
    pos = set(rs.positive_roots)
    for th in rs.positive_roots:
        brute = any(
            tuple(a + b for a, b in zip(t1, t2)) == th and pred(t1) and pred(t2)
            for t1 in pos
            for t2 in pos
        )
        assert primitive_decomposition(rs, th, pred).primitive == (not brute)


def test_weyl_orbits_and_orders():
    assert weyl_orbit(build_root_system("A", 1), (1, -1)) == {(F(1), F(-1)), (F(-1), F(1))}
    assert len(weyl_orbit(build_root_system("A", 2), (2, -1, -1))) == 3
    assert weyl_element_order(build_root_system("A", 2), permutation=(1, 2, 0)) == 3
    assert weyl_element_order(build_root_system("A", 2), word=[0, 1]) == 3
    rs = build_root_system("E", 8)
    assert len(weyl_orbit(rs, rs.positive_roots[0])) == 240


def test_coxeter_element_order_matches_coxeter_number():
    # the product of all simple reflections has order equal to the Coxeter number
    for kind, rank, h in [("A", 4, 5), ("D", 5, 8), ("E", 6, 12), ("E", 7, 18), ("E", 8, 30)]:
        rs = build_root_system(kind, rank)
        assert weyl_element_order(rs, word=range(rank)) == h
        assert len(rs.positive_roots) == rank * h // 2


def test_t_singularity_examples():
    t = classify_T_singularity(4, 1)
    assert (t.classification, t.d, t.n, t.a) == ("ClassT", 1, 2, 1)
    assert classify_T_singularity(2, 1).classification == "RDP_A"
    assert classify_T_singularity(5, 2).classification == "NotClassT"
    with pytest.raises(InvalidInputError):
        classify_T_singularity(4, 2)


def test_t_singularity_round_trip():
    for d in range(1, 6):
        for n in range(1, 6):
            for a in range(1, max(n, 2)):
                if math.gcd(a, n) != 1:
                    continue
                r = d * n * n
                if r < 2:
                    continue
                q = (d * n * a - 1) % r
                if q == 0 or math.gcd(q, r) != 1:
                    continue
                t = classify_T_singularity(r, q)
                if t.classification == "ClassT":
                    assert t.d * t.n ** 2 == r and (t.d * t.n * t.a - 1 - q) % r == 0
                    assert math.gcd(t.a, t.n) == 1
                else:
                    assert t.classification == "RDP_A" and (q + 1) % r == 0


def test_t_class_closed_under_inverse():
    for r in range(2, 60):
        for q in range(1, r):
            if math.gcd(q, r) == 1:
                assert (classify_T_singularity(r, q).classification == "NotClassT") == (
                    classify_T_singularity(r, pow(q, -1, r)).classification == "NotClassT"
                )


def test_deformation_parameter_triple():
    z = DeformationParameter.from_triple([1, -1], [2, -2], [0.5, -0.5])
    zr, z2, z3 = z.triple()
    assert np.allclose(zr, [1, -1]) and np.allclose(z2, [2, -2]) and np.allclose(z3, [0.5, -0.5])
    assert math.isclose(z.norm, math.sqrt(2 + 8 + 0.5))
    with pytest.raises(InvalidInputError):
        DeformationParameter([1, -1], [1, 2, 3])
