"""The local smoothing model ``eps1 alpha^2 + eps2 beta^2 + x alpha beta = gamma^2`` of a double A_1.

At ``eps = 0`` this is ``x alpha beta = gamma^2``, the quotient of ``C x CP^1`` by
``(u, [v:w]) -> (-u, [-v:w])``, with A_1 points at ``[0:1:0]`` and ``[1:0:0]``
over ``x = 0``.  In the affine chart ``beta = 1`` around ``[0:1:0]`` the family reads
``z^2 = y (x + eps1 y) + eps2``; after ``x' = x + eps1 y`` this is the A_1 family
``x' y = z^2 + a_0`` with ``a_0 = -eps2``.  Symmetrically ``eps1`` smooths the point
``[1:0:0]``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGermError, InvalidInputError
from .germs import CoefficientGerm, check_nondegenerate_def11


def quadratic_form(eps1: complex, eps2: complex, x: complex) -> np.ndarray:
    """Symmetric matrix of ``eps1 a^2 + eps2 b^2 + x a b - c^2`` in ``(alpha, beta, gamma)``."""
    return np.array([[eps1, x / 2, 0], [x / 2, eps2, 0], [0, 0, -1]], dtype=complex)


@dataclass(frozen=True)
class DegenerateFibers:
    values: tuple
    total_space_smooth: bool

    def to_json(self) -> dict:
        return {
            "values": [[complex(v).real, complex(v).imag] for v in self.values],
            "total_space_smooth": self.total_space_smooth,
        }


def degenerate_fibers(eps1: complex, eps2: complex) -> DegenerateFibers:
    """Fibers ``x`` with ``x^2 = 4 eps1 eps2``, where the conic splits into two lines."""
    prod = complex(eps1) * complex(eps2)
    if prod == 0:
        return DegenerateFibers((0j,), False)
    r = 2 * cmath.sqrt(prod)
    return DegenerateFibers((r, -r), True)


@dataclass(frozen=True)
class SplitFiber:
    """Linear forms ``l1, l2`` (coefficients of alpha, beta, gamma) with ``l1 l2 = Q``."""

    l1: np.ndarray
    l2: np.ndarray
    residual: float
    crossing: np.ndarray  # homogeneous point where the lines meet

    def to_json(self) -> dict:
        enc = lambda v: [[complex(c).real, complex(c).imag] for c in v]
        return {"l1": enc(self.l1), "l2": enc(self.l2), "residual": self.residual, "crossing": enc(self.crossing)}


def _product_matrix(l1: np.ndarray, l2: np.ndarray) -> np.ndarray:
    return 0.5 * (np.outer(l1, l2) + np.outer(l2, l1))


def split_degenerate_fiber(eps1: complex, eps2: complex, x: complex) -> SplitFiber:
    """Factor the quadric on a degenerate fiber as ``(L - gamma)(L + gamma)``.

    ``L = sqrt(eps1) alpha + x / (2 sqrt(eps1)) beta`` (or ``sqrt(eps2) beta`` when
    ``eps1 = 0``), using principal square roots.
    """
    eps1, eps2, x = complex(eps1), complex(eps2), complex(x)
    scale = max(1.0, abs(eps1), abs(eps2), abs(x) ** 2)
    if abs(x * x - 4 * eps1 * eps2) > 1e-12 * scale:
        raise InvalidInputError(f"x = {x} is not a degenerate fiber: x^2 != 4 eps1 eps2")
    if eps1 != 0:
        s = cmath.sqrt(eps1)
        L = np.array([s, x / (2 * s), 0], dtype=complex)
    else:
        L = np.array([0, cmath.sqrt(eps2), 0], dtype=complex)
    g = np.array([0, 0, 1], dtype=complex)
    l1, l2 = L - g, L + g
    Q = quadratic_form(eps1, eps2, x)
    residual = float(np.abs(_product_matrix(l1, l2) - Q).max() / max(1.0, np.abs(Q).max()))
    return SplitFiber(l1, l2, residual, np.cross(l1, l2))


def resubstitution_residual(eps1: complex, eps2: complex, x: complex, line: np.ndarray, n: int = 16, seed: int = 0) -> float:
    """Max ``|Q(p)|`` over random points ``p`` of the projective line ``{line . p = 0}``."""
    _, _, vh = np.linalg.svd(np.atleast_2d(line))
    basis = vh[1:].conj()  # spans the kernel of p -> line . p
    rng = np.random.default_rng(seed)
    c = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    P = c @ basis
    P /= np.linalg.norm(P, axis=1, keepdims=True)
    Q = quadratic_form(eps1, eps2, x)
    return float(np.abs(np.einsum("ni,ij,nj->n", P, Q, P)).max())


# -- the invariant charts ---------------------------------------------------------


def chart_w(u, v, w) -> tuple:
    """Invariants on ``w != 0``: ``x1 = u^2, y1 = (v/w)^2, z1 = u v / w``."""
    return u * u, (v / w) ** 2, u * v / w


def chart_v(u, v, w) -> tuple:
    """Invariants on ``v != 0``: ``x2 = u^2, y2 = (w/v)^2, z2 = u w / v``."""
    return u * u, (w / v) ** 2, u * w / v


def invariant_chart_check(samples) -> dict:
    """Residuals of the chart equations and gluing relations at points ``(u, v, w)``.

    Each chart is used only where it is defined; every point must lie in one.
    """
    S = np.atleast_2d(np.asarray(samples, dtype=complex))
    if S.shape[1] != 3:
        raise InvalidInputError("samples must be (u, v, w) triples")
    rel = lambda a, b: abs(a - b) / max(1.0, abs(a), abs(b))
    eq1, eq2, glue, cone = [0.0], [0.0], [0.0], [0.0]
    for u, v, w in S:
        if v == 0 and w == 0:
            raise InvalidInputError("[v:w] = [0:0] is not a point of CP^1")
        if w != 0:
            x1, y1, z1 = chart_w(u, v, w)
            eq1.append(rel(x1 * y1, z1 * z1))
            cone.append(rel(x1 * y1 * 1.0, z1 ** 2))  # [alpha:beta:gamma] = [y1:1:z1]
        if v != 0:
            x2, y2, z2 = chart_v(u, v, w)
            eq2.append(rel(x2 * y2, z2 * z2))
            cone.append(rel(x2 * 1.0 * y2, z2 ** 2))  # [alpha:beta:gamma] = [1:y2:z2]
        if v != 0 and w != 0:
            glue += [rel(x1, x2), rel(y1 * y2, 1.0), rel(z2 * y1, z1)]
    return {"chart_w": max(eq1), "chart_v": max(eq2), "gluing": max(glue), "cone": max(cone)}


# -- non-degenerate smoothing lines ------------------------------------------------


A1_POINTS = {"[1:0:0]": 0, "[0:1:0]": 1}  # point -> index of the eps_i smoothing it


def a1_germ(delta: complex) -> CoefficientGerm:
    """The A_1 germ ``a_0(z) = -delta z`` induced at one singular point by ``eps = z delta``."""
    return CoefficientGerm(1, ((0, -complex(delta)),))


@dataclass(frozen=True)
class LineVerdict:
    nondegenerate: bool
    per_point: dict

    def to_json(self) -> dict:
        return {"nondegenerate": self.nondegenerate, "per_point": self.per_point}


def nondegenerate_line(delta1: complex, delta2: complex) -> LineVerdict:
    """Is the family along ``eps = z (delta1, delta2)`` non-degenerate at both A_1 points?

    The closed-form answer ``delta1 != 0 and delta2 != 0`` is cross-checked by
    running the germ criterion on each point's A_1 germ.
    """
    deltas = (complex(delta1), complex(delta2))
    per_point = {}
    for point, i in A1_POINTS.items():
        try:
            ok = check_nondegenerate_def11(a1_germ(deltas[i]))
        except DegenerateGermError:
            ok = False
        per_point[point] = ok
    closed_form = deltas[0] != 0 and deltas[1] != 0
    verdict = all(per_point.values())
    if verdict != closed_form:
        raise RuntimeError("germ verdicts disagree with the closed-form line criterion")
    return LineVerdict(verdict, per_point)
