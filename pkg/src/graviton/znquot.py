"""Z_n-symmetric Gibbons-Hawking configurations and quotient images of segment spheres.

Centers form ``d`` regular n-gons in horizontal planes, centered on the
x3-axis.  Vertex ``l`` of polygon ``j`` has index ``a = j * n + l``; the generator
rotates by ``2 pi / n`` and sends ``(j, l)`` to ``(j, l + 1)``.  All intersection
predicates run in exact rational arithmetic on the floating coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidInputError
from .gibbons_hawking import GHConfig, SegmentSphere, class_period_quadrature, class_to_period, segment_blocker

SHAPES = ("EmbeddedS2", "RP2", "DoublePointS2", "Complicated", "Invalid")


@dataclass(frozen=True)
class PolygonSpec:
    height: float
    radius: float
    phase: float = 0.0


@dataclass(frozen=True)
class PolygonConfig:
    d: int
    n: int
    m: int
    polygons: tuple
    cfg: GHConfig

    def vertex(self, a: int) -> tuple:
        """``(polygon j, position l)`` of vertex ``a``."""
        return divmod(a, self.n)

    def act(self, a: int, s: int = 1) -> int:
        j, l = self.vertex(a)
        return j * self.n + (l + s) % self.n

    @property
    def generator_matrix(self) -> np.ndarray:
        N = self.d * self.n
        P = np.zeros((N, N), dtype=int)
        for a in range(N):
            P[self.act(a), a] = 1
        return P

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "m": self.m,
            "polygons": [{"height": p.height, "radius": p.radius, "phase": p.phase} for p in self.polygons],
        }


def _rotation(n: int) -> np.ndarray:
    c, s = math.cos(2 * math.pi / n), math.sin(2 * math.pi / n)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def build_polygon_config(d: int, n: int, m: int, polygons: Sequence, string_direction=None) -> PolygonConfig:
    """Expand ``d`` polygon specs (height, radius, phase) into ``d n`` centers."""
    if d < 1 or n < 1:
        raise InvalidInputError("need d >= 1 and n >= 1")
    if math.gcd(m, n) != 1:
        raise InvalidInputError(f"twist exponent m={m} must be coprime to n={n}")
    specs = tuple(p if isinstance(p, PolygonSpec) else PolygonSpec(**p) if isinstance(p, dict) else PolygonSpec(*p) for p in polygons)
    if len(specs) != d:
        raise InvalidInputError(f"expected {d} polygons, got {len(specs)}")
    pts = []
    for j, p in enumerate(specs):
        if not p.radius > 0:
            raise InvalidInputError(f"polygon {j} has radius {p.radius}: vertices on the axis would be fixed points")
        for l in range(n):
            ang = p.phase + 2 * math.pi * l / n
            pts.append((p.radius * math.cos(ang), p.radius * math.sin(ang), float(p.height)))
    cfg = GHConfig(np.array(pts), string_direction)
    pc = PolygonConfig(int(d), int(n), int(m), specs, cfg)
    _check_invariance(pc)
    return pc


def _check_invariance(pc: PolygonConfig, tol: float = 1e-12) -> None:
    R = _rotation(pc.n)
    P = pc.cfg.points
    err = max(np.linalg.norm(R @ P[a] - P[pc.act(a)]) for a in range(len(P)))
    if err > tol * max(1.0, float(np.abs(P).max())):
        raise InvalidInputError("configuration is not invariant under rotation by 2 pi / n")


# -- cohomology --------------------------------------------------------------------


def invariant_cohomology_dim(pc, n: Optional[int] = None) -> int:
    """Dimension of the Z_n-fixed part of ``{c in R^{dn} : sum c = 0}``.

    Accepts a :class:`PolygonConfig` or the pair ``(d, n)``.
    """
    if n is not None:
        pc = build_polygon_config(int(pc), n, 1, [PolygonSpec(float(j), 1.0) for j in range(int(pc))])
    P = pc.generator_matrix
    N = P.shape[0]
    M = np.vstack([P - np.eye(N), np.ones((1, N))])
    return int(N - np.linalg.matrix_rank(M))


def averaged_class(pc: PolygonConfig, a: int, b: int) -> tuple:
    """``(1/n) sum_g g (e_a - e_b)`` as exact fractions, and whether it is nonzero."""
    N = pc.d * pc.n
    theta = [Fraction(0)] * N
    for s in range(pc.n):
        theta[pc.act(a, s)] += Fraction(1, pc.n)
        theta[pc.act(b, s)] -= Fraction(1, pc.n)
    return tuple(theta), any(x != 0 for x in theta)


def is_invariant(pc: PolygonConfig, c, tol: float = 1e-12) -> bool:
    c = np.asarray([float(x) for x in c])
    return bool(np.abs(pc.generator_matrix @ c - c).max() <= tol * max(1.0, np.abs(c).max()))


# -- exact planar predicates -------------------------------------------------------------


def _q(p) -> tuple:
    return Fraction(float(p[0])), Fraction(float(p[1]))


def orient(p, q, r) -> int:
    """Sign of the cross product ``(q - p) x (r - p)`` in exact arithmetic."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r) -> bool:
    """``r`` on the closed segment ``[p, q]``, given collinearity."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segment_relation(s1: tuple, s2: tuple, pts: dict) -> str:
    """``"disjoint"``, ``"endpoint"`` (meet only at a shared vertex) or ``"interior"``.

    Segments are pairs of vertex indices; ``pts`` maps indices to exact 2-D points.
    """
    shared = set(s1) & set(s2)
    A, B = pts[s1[0]], pts[s1[1]]
    C, D = pts[s2[0]], pts[s2[1]]
    if len(shared) == 2:
        return "interior"
    if len(shared) == 1:
        v = shared.pop()
        o = pts[v]
        x = pts[s1[0] if s1[1] == v else s1[1]]
        y = pts[s2[0] if s2[1] == v else s2[1]]
        if orient(o, x, y) == 0:
            dot = (x[0] - o[0]) * (y[0] - o[0]) + (x[1] - o[1]) * (y[1] - o[1])
            if dot > 0:
                return "interior"
        return "endpoint"
    o1, o2, o3, o4 = orient(A, B, C), orient(A, B, D), orient(C, D, A), orient(C, D, B)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return "interior"
    if (o1 == 0 and _on_segment(A, B, C)) or (o2 == 0 and _on_segment(A, B, D)):
        return "interior"
    if (o3 == 0 and _on_segment(C, D, A)) or (o4 == 0 and _on_segment(C, D, B)):
        return "interior"
    return "disjoint"


@dataclass(frozen=True)
class QuotientSphereVerdict:
    segment: tuple
    class_in_quotient: tuple
    shape: str
    nonzero_class: bool
    intersections: tuple = ()
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "segment": list(self.segment),
            "class_in_quotient": [str(x) for x in self.class_in_quotient],
            "shape": self.shape,
            "nonzero_class": self.nonzero_class,
            "intersections": [list(x) for x in self.intersections],
            "reason": self.reason,
        }


def orbit_segments(pc: PolygonConfig, a: int, b: int) -> list:
    return [(pc.act(a, s), pc.act(b, s)) for s in range(pc.n)]


def classify_quotient_sphere(pc: PolygonConfig, a: int, b: int, tol: float = 1e-9) -> QuotientSphereVerdict:
    """Shape of the image of the sphere over ``[p_a, p_b]`` in the Z_n quotient."""
    N = pc.d * pc.n
    if not (0 <= a < N and 0 <= b < N) or a == b:
        raise InvalidInputError(f"invalid segment ({a}, {b}) for {N} centers")
    theta, nonzero = averaged_class(pc, a, b)
    P = pc.cfg.points
    scale = max(1.0, float(np.abs(P).max()))

    def verdict(shape, reason="", inter=()):
        return QuotientSphereVerdict((a, b), theta, shape, nonzero, tuple(inter), reason)

    if abs(P[a, 2] - P[b, 2]) > tol * scale:
        return verdict("Invalid", "segment is not horizontal")
    blocker = segment_blocker(P, a, b, tol)
    if blocker is not None:
        return verdict("Invalid", f"segment passes through center {blocker}")

    segs = orbit_segments(pc, a, b)
    if pc.n == 2 and set(segs[0]) == set(segs[1]):
        return verdict("RP2", "the generator reverses the segment")
    pts = {v: _q(P[v]) for s in segs for v in s}
    inter, touch = [], []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            rel = segment_relation(segs[i], segs[j], pts)
            if rel == "interior":
                inter.append((i, j))
            elif rel == "endpoint":
                touch.append((i, j))
    if inter:
        return verdict("Complicated", "orbit segments meet in interior points", inter)
    if touch:
        return verdict("DoublePointS2", "orbit segments share endpoints", touch)
    return verdict("EmbeddedS2", "orbit segments are pairwise disjoint")


def closest_vertex(pc: PolygonConfig, a: int, polygon: int) -> int:
    """Vertex of ``polygon`` nearest to ``p_a`` (exact squared distances, lowest index on ties)."""
    P = pc.cfg.points
    pa = [Fraction(float(x)) for x in P[a]]
    best, arg = None, None
    for l in range(pc.n):
        c = polygon * pc.n + l
        if c == a:
            continue
        dist = sum((Fraction(float(x)) - y) ** 2 for x, y in zip(P[c], pa))
        if best is None or dist < best:
            best, arg = dist, c
    return arg


def quotient_pairing(pc: PolygonConfig, c, sphere: SegmentSphere, quadrature: bool = False) -> float:
    """Period of the invariant class ``sum c_i chi_i`` on a segment sphere of the cover."""
    c = [float(x) for x in c]
    if not is_invariant(pc, c):
        raise InvalidInputError("class is not Z_n-invariant")
    if quadrature:
        return class_period_quadrature(pc.cfg, c, sphere)
    return class_to_period(pc.cfg, c, sphere)
