"""Which roots give Lagrangian or holomorphic spheres for a given parameter.

For a root ``theta`` and ``zeta = (zeta_r, zeta_c)``: the class of ``theta`` is
Lagrangian for ``omega_1`` when ``<theta, zeta_r> = 0`` and is carried by a
holomorphic cycle when ``<theta, zeta_c> = 0``; both at once means ``zeta`` sits
on a wall and the space is singular.  For Gibbons-Hawking spaces the root
``e_a - e_b`` corresponds to the segment sphere over ``[p_a, p_b]`` via
``<theta_ab, zeta_j> = (p_a - p_b)_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .cartan import DeformationParameter, RootSystem, build_root_system, primitive_decomposition
from .errors import InvalidInputError, NumericalRejection
from .gibbons_hawking import GHConfig, segment_blocker

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class RootVerdict:
    root: tuple
    lagrangian: bool
    holomorphic: bool
    wall_violation: bool
    primitive_lagrangian: bool
    primitive_holomorphic: bool

    def flags(self) -> tuple:
        return (self.lagrangian, self.holomorphic, self.wall_violation, self.primitive_lagrangian, self.primitive_holomorphic)

    def to_json(self) -> dict:
        return {
            "root": [str(x) for x in self.root],
            "lagrangian": self.lagrangian,
            "holomorphic": self.holomorphic,
            "wall_violation": self.wall_violation,
            "primitive_lagrangian": self.primitive_lagrangian,
            "primitive_holomorphic": self.primitive_holomorphic,
        }


@dataclass(frozen=True)
class Classification:
    verdicts: tuple
    smooth: bool

    def to_json(self) -> dict:
        return {"smooth": self.smooth, "verdicts": [v.to_json() for v in self.verdicts]}


def classify_roots(rs: RootSystem, zeta: DeformationParameter, tol: float = DEFAULT_TOL) -> Classification:
    """Verdict per positive root; vanishing means ``|<theta, .>| <= tol |theta| |zeta|``."""
    zeta.check(rs)
    P = rs.positive_array
    bound = tol * np.linalg.norm(P, axis=1) * zeta.norm
    lag = np.abs(P @ zeta.zeta_r) <= bound
    hol = np.abs(P @ zeta.zeta_c) <= bound
    index = {th: i for i, th in enumerate(rs.positive_roots)}
    is_lag = lambda th: bool(lag[index[th]])
    is_hol = lambda th: bool(hol[index[th]])
    verdicts = []
    for i, th in enumerate(rs.positive_roots):
        pl = bool(lag[i]) and primitive_decomposition(rs, th, is_lag).primitive
        ph = bool(hol[i]) and primitive_decomposition(rs, th, is_hol).primitive
        verdicts.append(RootVerdict(th, bool(lag[i]), bool(hol[i]), bool(lag[i] and hol[i]), pl, ph))
    return Classification(tuple(verdicts), not any(v.wall_violation for v in verdicts))


# -- rotation lemma -------------------------------------------------------------


@dataclass(frozen=True)
class RotationWitness:
    """``u`` sends the triple ``zeta`` to ``xi = u zeta`` with ``<theta, xi_c> = 0``.

    The class of ``theta`` is then holomorphic for ``u^{-1}(I_1) = -cos(phi) I_2 + sin(phi) I_3``,
    whose direction is :attr:`complex_structure`.
    """

    phi: float
    u: np.ndarray
    xi: tuple

    @property
    def complex_structure(self) -> np.ndarray:
        return self.u[0].copy()

    def residual(self, theta: Sequence) -> float:
        th = np.array([float(x) for x in theta])
        return float(max(abs(th @ self.xi[1]), abs(th @ self.xi[2])))

    def to_json(self) -> dict:
        return {"phi": self.phi, "u": self.u.tolist(), "complex_structure": self.complex_structure.tolist()}


def rotation_matrix(phi: float) -> np.ndarray:
    c, s = np.cos(phi), np.sin(phi)
    return np.array([[0.0, -c, s], [1.0, 0.0, 0.0], [0.0, s, c]])


def rotate_triple(u: np.ndarray, triple: Sequence) -> tuple:
    Z = np.stack([np.asarray(z, float) for z in triple])
    X = u @ Z
    return tuple(X[i] for i in range(3))


def rotation_to_holomorphic(theta: Sequence, triple: Sequence, tol: float = DEFAULT_TOL) -> RotationWitness:
    """Angle ``phi in [0, pi)`` with ``sin(phi) <theta, zeta_2> + cos(phi) <theta, zeta_3> = 0``.

    That equation is ``<theta, xi_3> = 0`` for ``xi = u(phi) zeta``; ``<theta, xi_2> =
    <theta, zeta_1>`` vanishes by hypothesis.  ``phi = 0`` exactly when
    ``<theta, zeta_3> = 0``.
    """
    th = np.array([float(x) for x in theta])
    z1, z2, z3 = (np.asarray(z, float) for z in triple)
    scale = np.linalg.norm(th) * float(np.sqrt(sum(np.sum(np.asarray(z) ** 2) for z in triple)))
    p1, p2, p3 = th @ z1, th @ z2, th @ z3
    if abs(p1) > tol * max(scale, 1e-300):
        raise NumericalRejection(f"<theta, zeta_1> = {p1:.3e} is not zero: the class is not Lagrangian for I_1")
    phi = float(np.mod(np.arctan2(-p3, p2), np.pi)) if (p2 != 0 or p3 != 0) else 0.0
    if np.isclose(phi, np.pi, rtol=0, atol=1e-15):
        phi = 0.0
    u = rotation_matrix(phi)
    return RotationWitness(phi, u, rotate_triple(u, (z1, z2, z3)))


# -- C* action ----------------------------------------------------------------------


@dataclass(frozen=True)
class ScaledParameter:
    zeta: DeformationParameter
    metric_factor: float


def scale_parameter(lam: complex, zeta: DeformationParameter) -> ScaledParameter:
    """``(zeta_r, zeta_c) -> (|lam|^2 zeta_r, lam^2 zeta_c)``; the metric scales by ``1/|lam|^2``."""
    lam = complex(lam)
    if lam == 0:
        raise InvalidInputError("lambda must be nonzero")
    a = abs(lam) ** 2
    return ScaledParameter(DeformationParameter(a * zeta.zeta_r, lam ** 2 * zeta.zeta_c), 1.0 / a)


# -- Gibbons-Hawking dictionary ---------------------------------------------------------


def gh_parameter(cfg: GHConfig) -> DeformationParameter:
    """``zeta_j`` = j-th coordinates of the centers, projected to sum zero."""
    P = cfg.points - cfg.points.mean(axis=0)
    return DeformationParameter.from_triple(P[:, 0], P[:, 1], P[:, 2])


def root_for_pair(n_centers: int, a: int, b: int) -> tuple:
    v = [0] * n_centers
    v[a], v[b] = 1, -1
    return tuple(v)


@dataclass(frozen=True)
class SphereRecord:
    a: int
    b: int
    root: tuple
    valid: bool
    holomorphic_direction: np.ndarray
    lagrangian_plane: np.ndarray  # (2, 3) orthonormal basis of directions xi with omega_xi vanishing

    def lagrangian_for(self, xi, tol: float = DEFAULT_TOL) -> bool:
        xi = np.asarray(xi, float)
        return abs(xi @ self.holomorphic_direction) <= tol * np.linalg.norm(xi)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "root": list(self.root),
            "valid": self.valid,
            "holomorphic_direction": self.holomorphic_direction.tolist(),
            "lagrangian_plane": self.lagrangian_plane.tolist(),
        }


def _orthonormal_complement(v: np.ndarray) -> np.ndarray:
    _, _, vt = np.linalg.svd(v[None, :])
    return vt[1:]


def sphere_inventory_A(cfg: GHConfig, tol: float = DEFAULT_TOL) -> list:
    """Every pair of centers with its segment-sphere validity and model character.

    Each record is cross-checked against :func:`classify_roots` for the
    dictionary parameter rotated so that its first component points along
    each Lagrangian direction and its complex part along the holomorphic one.
    """
    m = len(cfg.points)
    rs = build_root_system("A", m - 1) if m > 1 else None
    out = []
    for a in range(m):
        for b in range(a + 1, m):
            d = cfg.points[a] - cfg.points[b]
            xi = d / np.linalg.norm(d)
            plane = _orthonormal_complement(xi)
            rec = SphereRecord(a, b, root_for_pair(m, a, b), segment_blocker(cfg.points, a, b) is None, xi, plane)
            _cross_check(rs, cfg, rec, tol)
            out.append(rec)
    return out


def _cross_check(rs: RootSystem, cfg: GHConfig, rec: SphereRecord, tol: float) -> None:
    z = gh_parameter(cfg).triple()
    for lag_dir in rec.lagrangian_plane:
        frame = np.stack([lag_dir, *_orthonormal_complement(lag_dir)])
        rotated = rotate_triple(frame, z)
        cls = classify_roots(rs, DeformationParameter.from_triple(*rotated), tol)
        verdict = next(v for v in cls.verdicts if v.root == rec.root)
        if not verdict.lagrangian:
            raise NumericalRejection(f"dictionary mismatch for sphere ({rec.a}, {rec.b})")


def persistently_lagrangian(kahler_series: np.ndarray, theta: Sequence, tol: float = DEFAULT_TOL) -> dict:
    """Check ``<theta, (zeta_r)(t)> = 0`` coefficientwise up to the truncation order.

    Returns ``{"persistent": bool, "order": N, "first_violation": n or None}``;
    ``persistent`` means "to order N", the only decidable statement.
    """
    ks = np.atleast_2d(np.asarray(kahler_series, float))
    th = np.array([float(x) for x in theta])
    if ks.shape[1] != len(th):
        raise InvalidInputError("kahler_series and theta have different lengths")
    scale = max(float(np.abs(ks).max()), 1e-300) * np.linalg.norm(th)
    vals = np.abs(ks @ th)
    bad = np.flatnonzero(vals > tol * scale)
    first = int(bad[0]) if len(bad) else None
    return {"persistent": first is None, "order": len(ks) - 1, "first_violation": first}
