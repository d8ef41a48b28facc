"""One-parameter smoothing germs of A_k singularities and their tangent gravitons.

A coefficient germ is the family ``xy = w^{k+1} + a_{k-1}(z) w^{k-1} + ... + a_0(z)``
with polynomial ``a_i`` vanishing at ``z = 0``.  We fix the convention

    w^{k+1} + sum_i a_i(z) w^i = prod_j (w - rho_j(z)),   sum_j rho_j = 0,

so the roots ``rho_j`` are the coordinates of the complex period in the
sum-zero model of the A_k Cartan algebra.  Lifting means following the roots
around ``|z| = R``; the induced permutation has order ``d`` and the roots
become single-valued power series in ``t`` with ``z = t^d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
import sympy as sp
from scipy.optimize import linear_sum_assignment

from .cartan import DeformationParameter, RootSystem, build_root_system, permutation_order
from .errors import (
    DegenerateGermError,
    InvalidInputError,
    NumericalRejection,
    RootCollisionError,
    VanishingSeriesError,
)

_W, _Z = sp.symbols("w z")
FIT_RATIO = 0.3
DEFAULT_TOL = 1e-8
MAX_DOUBLINGS = 6


def _exact(c: complex):
    c = complex(c)
    return sp.Rational(c.real) + sp.I * sp.Rational(c.imag)


@dataclass(frozen=True)
class CoefficientGerm:
    """``a_i(z)`` for ``i = 0..k-1`` as polynomial coefficient lists, lowest degree first."""

    k: int
    coeffs: tuple

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or self.k < 1:
            raise InvalidInputError(f"k must be a positive integer, got {self.k!r}")
        if len(self.coeffs) != self.k:
            raise InvalidInputError(f"expected {self.k} coefficient polynomials a_0..a_{self.k - 1}, got {len(self.coeffs)}")
        polys = []
        for i, c in enumerate(self.coeffs):
            arr = tuple(complex(x) for x in c) or (0j,)
            if not all(np.isfinite(x.real) and np.isfinite(x.imag) for x in arr):
                raise InvalidInputError(f"a_{i} has non-finite coefficients")
            polys.append(arr)
        scale = max(1.0, max(abs(x) for p in polys for x in p))
        for i, p in enumerate(polys):
            if abs(p[0]) > 1e-12 * scale:
                raise InvalidInputError(f"a_{i}(0) = {p[0]} must vanish: the central fiber is the A_{self.k} singularity")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "coeffs", tuple((0j,) + p[1:] for p in polys))

    @property
    def root_system(self) -> RootSystem:
        return build_root_system("A", self.k)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for p in self.coeffs for x in p)

    def evaluate(self, z) -> np.ndarray:
        """``(a_0(z), .., a_{k-1}(z))``."""
        return np.array([np.polyval(np.array(p[::-1]), z) for p in self.coeffs])

    def polynomial(self):
        """The exact sympy polynomial ``w^{k+1} + sum a_i(z) w^i``."""
        expr = _W ** (self.k + 1)
        for i, p in enumerate(self.coeffs):
            expr += sum(_exact(c) * _Z ** j for j, c in enumerate(p)) * _W ** i
        return sp.expand(expr)

    def to_json(self) -> dict:
        enc = lambda x: x.real if x.imag == 0 else [x.real, x.imag]
        return {"type": "Ak", "k": self.k, "coeffs": [[enc(x) for x in p] for p in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CoefficientGerm":
        dec = lambda x: complex(x[0], x[1]) if isinstance(x, (list, tuple)) else complex(x)
        return cls(int(data["k"]), tuple(tuple(dec(x) for x in p) for p in data["coeffs"]))


@dataclass(frozen=True)
class LiftedGerm:
    """The lifted complex period ``zeta_c(t)`` (and optional Kaehler part) as truncated series.

    ``series[n]`` is the coefficient of ``t^n``; ``sample_radius`` is the ``|t|``
    at which the coefficients were fitted (1 for supplied series).
    """

    rs: RootSystem
    cover_order: int
    series: np.ndarray
    kahler_series: Optional[np.ndarray] = None
    sample_radius: float = 1.0
    permutation: tuple = ()
    start_roots: Optional[np.ndarray] = None
    loop_radius: Optional[float] = None
    residual: Optional[float] = None
    degenerate: bool = False
    multiplicities: tuple = ()

    def __post_init__(self):
        s = np.atleast_2d(np.asarray(self.series, dtype=complex))
        dim = self.rs.ambient_dim
        if s.shape[1] != dim:
            raise InvalidInputError(f"series coefficients must have length {dim}, got {s.shape[1]}")
        if self.cover_order < 1:
            raise InvalidInputError("cover_order must be a positive integer")
        scale = max(1.0, float(np.abs(s).max()))
        if np.abs(s[0]).max() > 1e-8 * scale:
            raise InvalidInputError("series must have zero constant term")
        s = s.copy()
        s[0] = 0.0
        ks = self.kahler_series
        if ks is not None:
            ks = np.atleast_2d(np.asarray(ks, dtype=float)).copy()
            if ks.shape[1] != dim:
                raise InvalidInputError(f"kahler_series coefficients must have length {dim}")
            if np.abs(ks[0]).max() > 1e-8 * max(1.0, float(np.abs(ks).max())):
                raise InvalidInputError("kahler_series must have zero constant term")
            ks[0] = 0.0
        object.__setattr__(self, "series", s)
        object.__setattr__(self, "kahler_series", ks)
        object.__setattr__(self, "cover_order", int(self.cover_order))

    @property
    def order(self) -> int:
        return len(self.series) - 1

    def evaluate(self, t) -> np.ndarray:
        """``zeta_c(t)`` from the truncated series."""
        powers = np.asarray(t, dtype=complex) ** np.arange(len(self.series))
        return powers @ self.series

    def evaluate_kahler(self, t: float) -> np.ndarray:
        if self.kahler_series is None:
            return np.zeros(self.rs.ambient_dim)
        return (float(t) ** np.arange(len(self.kahler_series))) @ self.kahler_series

    def relabeled(self, perm: Sequence[int]) -> "LiftedGerm":
        """The same lift with sheets permuted: new coordinate ``j`` is old coordinate ``perm[j]``."""
        perm = list(perm)
        ks = None if self.kahler_series is None else self.kahler_series[:, perm]
        return LiftedGerm(self.rs, self.cover_order, self.series[:, perm], ks, self.sample_radius)

    def to_json(self) -> dict:
        out = {
            "type": "lifted",
            "root_system": {"kind": self.rs.kind, "rank": self.rs.rank},
            "cover_order": self.cover_order,
            "series": [[[z.real, z.imag] for z in row] for row in self.series],
            "sample_radius": self.sample_radius,
        }
        if self.kahler_series is not None:
            out["kahler_series"] = self.kahler_series.tolist()
        if self.permutation:
            out["permutation"] = list(self.permutation)
        if self.residual is not None:
            out["residual"] = self.residual
        if self.loop_radius is not None:
            out["loop_radius"] = self.loop_radius
        if self.multiplicities:
            out["degenerate"] = self.degenerate
        return out

    @classmethod
    def from_json(cls, data: dict) -> "LiftedGerm":
        rs = build_root_system(data["root_system"]["kind"], data["root_system"]["rank"])
        dec = lambda x: complex(x[0], x[1]) if isinstance(x, (list, tuple)) else complex(x)
        series = np.array([[dec(x) for x in row] for row in data["series"]], dtype=complex)
        return cls(rs, int(data["cover_order"]), series, data.get("kahler_series"), float(data.get("sample_radius", 1.0)))


@dataclass(frozen=True)
class TangentGraviton:
    """Leading term ``zeta(t) = t^p zeta_dot + O(t^{p+1})``; the rescaling is ``eps = t^{p/2}``."""

    p: int
    zeta_dot: DeformationParameter
    smooth: bool
    epsilon_exponent: Fraction
    failing_roots: tuple = ()

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "zeta_dot_r": self.zeta_dot.zeta_r.tolist(),
            "zeta_dot_c": [[z.real, z.imag] for z in self.zeta_dot.zeta_c],
            "smooth": self.smooth,
            "epsilon_exponent": str(self.epsilon_exponent),
            "failing_roots": [list(r) for r in self.failing_roots],
        }


# -- exact preprocessing ------------------------------------------------------


@dataclass
class _Factor:
    multiplicity: int
    coeff: np.ndarray  # (deg_w + 1, deg_z + 1), rows highest w-power first, columns z^0, z^1, ..

    @property
    def degree(self) -> int:
        return self.coeff.shape[0] - 1

    def roots(self, z: complex) -> np.ndarray:
        zp = z ** np.arange(self.coeff.shape[1])
        c = self.coeff @ zp
        if self.degree == 1:
            return np.array([-c[1] / c[0]])
        return np.roots(c)


def _z_coeffs(expr) -> list:
    p = sp.Poly(expr, _Z)
    return [complex(c) for c in reversed(p.all_coeffs())]


def _nonzero_zero_moduli(expr) -> list:
    if expr == 0:
        return []
    c = sp.Poly(expr, _Z).all_coeffs()
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
    if len(c) <= 1:
        return []
    return list(np.abs(np.roots(np.array([complex(x) for x in c]))))


@dataclass
class _Prepared:
    factors: list
    critical_radius: float  # nearest nonzero z where roots collide (inf if none)

    @property
    def degenerate(self) -> bool:
        return any(f.multiplicity > 1 for f in self.factors)


def _prepare(g: CoefficientGerm) -> _Prepared:
    if g.is_zero:
        raise DegenerateGermError("all a_i vanish identically: the family never smooths the singularity")
    _, facs = sp.sqf_list(g.polynomial(), _W, _Z)
    factors, exprs = [], []
    for f, m in facs:
        pw = sp.Poly(f, _W)
        if pw.degree() < 1:
            continue
        lead = pw.LC()
        rows = [_z_coeffs(sp.expand(c / lead)) for c in pw.all_coeffs()]
        width = max(len(r) for r in rows)
        coeff = np.array([r + [0j] * (width - len(r)) for r in rows], dtype=complex)
        factors.append(_Factor(int(m), coeff))
        exprs.append(sp.expand(f / lead))
    moduli = []
    for i, f in enumerate(exprs):
        if sp.Poly(f, _W).degree() > 1:
            moduli += _nonzero_zero_moduli(sp.discriminant(f, _W))
        for h in exprs[i + 1:]:
            moduli += _nonzero_zero_moduli(sp.resultant(f, h, _W))
    crit = min(moduli) if moduli else math.inf
    return _Prepared(factors, crit)


def default_loop_radius(g: CoefficientGerm) -> float:
    """Half the distance to the nearest nonzero collision point, capped at 1/2."""
    return 0.5 * min(1.0, _prepare(g).critical_radius)


# -- continuation ---------------------------------------------------------------


class _Ambiguous(Exception):
    pass


def _track(factor: _Factor, zs: np.ndarray, start: np.ndarray) -> np.ndarray:
    """Continue the roots of ``factor`` along the sample points ``zs`` (``zs[0]`` gives ``start``)."""
    deg = factor.degree
    path = np.empty((len(zs), deg), dtype=complex)
    path[0] = start
    for s in range(1, len(zs)):
        pred = path[s - 1] if s == 1 else 2 * path[s - 1] - path[s - 2]
        new = factor.roots(zs[s])
        if deg == 1:
            path[s] = new
            continue
        cost = np.abs(pred[:, None] - new[None, :])
        rows, cols = linear_sum_assignment(cost)
        sep = np.abs(new[:, None] - new[None, :]) + np.diag(np.full(deg, np.inf))
        min_sep = sep.min()
        if min_sep == 0 or cost[rows, cols].max() > 0.25 * min_sep:
            raise _Ambiguous()
        path[s, rows] = new[cols]
    return path


def _loop_points(radius: float, base_angle: float, n_steps: int, loops: int) -> np.ndarray:
    ang = base_angle + 2 * np.pi * np.arange(n_steps * loops + 1) / n_steps
    return radius * np.exp(1j * ang)


def _track_all(prep: _Prepared, radius: float, base_angle: float, n_steps: int, loops: int):
    """Paths per factor, doubling the step count on ambiguous matches."""
    steps = n_steps
    for _ in range(MAX_DOUBLINGS + 1):
        zs = _loop_points(radius, base_angle, steps, loops)
        try:
            paths = [_track(f, zs, f.roots(zs[0])) for f in prep.factors]
            return paths, steps
        except _Ambiguous:
            steps *= 2
    raise RootCollisionError(
        f"root matching stayed ambiguous at {steps // 2} steps on |z| = {radius:g}", suggested_radius=radius / 2
    )


def _factor_permutation(path: np.ndarray) -> list:
    start, end = path[0], path[-1]
    cost = np.abs(end[:, None] - start[None, :])
    rows, cols = linear_sum_assignment(cost)
    perm = [0] * len(start)
    for r, c in zip(rows, cols):
        perm[r] = c
    return perm


def _sheet_layout(prep: _Prepared) -> list:
    """``(factor index, root index)`` for each sheet, repeated by multiplicity."""
    out = []
    for fi, f in enumerate(prep.factors):
        for r in range(f.degree):
            out += [(fi, r)] * f.multiplicity
    return out


def _sheet_permutation(prep: _Prepared, fperms: list) -> tuple:
    layout = _sheet_layout(prep)
    first = {}
    for s, key in enumerate(layout):
        first.setdefault(key, s)
    perm = []
    for s, (fi, r) in enumerate(layout):
        copy = s - first[(fi, r)]
        perm.append(first[(fi, fperms[fi][r])] + copy)
    return tuple(perm)


def monodromy(g: CoefficientGerm, loop_radius: Optional[float] = None, n_steps: int = 256, base_angle: float = 0.0):
    """Sheet permutation after one loop and the starting root values.

    ``perm[i] = j`` means the sheet starting at ``start[i]`` ends at ``start[j]``.
    """
    prep = _prepare(g)
    radius = _check_radius(prep, loop_radius)
    paths, _ = _track_all(prep, radius, base_angle, n_steps, 1)
    perm = _sheet_permutation(prep, [_factor_permutation(p) for p in paths])
    start = np.array([paths[fi][0, r] for fi, r in _sheet_layout(prep)])
    return perm, start


def _check_radius(prep: _Prepared, loop_radius: Optional[float]) -> float:
    auto = 0.5 * min(1.0, prep.critical_radius)
    if loop_radius is None:
        return auto
    if not loop_radius > 0:
        raise InvalidInputError("loop_radius must be positive")
    if loop_radius >= prep.critical_radius * (1 - 1e-9):
        raise RootCollisionError(
            f"loop |z| = {loop_radius:g} reaches a root collision at |z| = {prep.critical_radius:g}",
            suggested_radius=auto,
        )
    return float(loop_radius)


# -- lift -------------------------------------------------------------------------


def coefficients_from_roots(roots: np.ndarray) -> np.ndarray:
    """``(a_0, .., a_{k-1})`` of ``prod (w - rho_j)``; ``roots`` may carry leading batch axes."""
    roots = np.asarray(roots, dtype=complex)
    n = roots.shape[-1]
    poly = np.zeros(roots.shape[:-1] + (n + 1,), dtype=complex)
    poly[..., 0] = 1.0
    for j in range(n):
        shifted = np.zeros_like(poly)
        shifted[..., 1:] = poly[..., :-1] * roots[..., j, None]
        poly = poly - shifted
    # poly is highest-first: poly[..., m] multiplies w^{n-m}; a_i sits at m = n - i
    return np.stack([poly[..., n - i] for i in range(n - 1)], axis=-1)


def _series_product(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    return np.convolve(a, b)[: order + 1]


def series_coefficients(series: np.ndarray) -> np.ndarray:
    """Taylor coefficients of ``a_i(t)`` from root series; returns (k, order+1)."""
    order, n = len(series) - 1, series.shape[1]
    poly = [np.zeros(order + 1, dtype=complex) for _ in range(n + 1)]
    poly[0][0] = 1.0  # poly[m] = coefficient of w^{n-m}, itself a t-series
    for j in range(n):
        factor = -series[:, j]
        new = [p.copy() for p in poly]
        for m in range(1, n + 1):
            new[m] = poly[m] + _series_product(poly[m - 1], factor, order)
        poly = new
    return np.array([poly[n - i] for i in range(n - 1)])


def _round_trip_residual(g: CoefficientGerm, series: np.ndarray, d: int, r_t: float) -> float:
    order = len(series) - 1
    got = series_coefficients(series)
    want = np.zeros_like(got)
    for i, p in enumerate(g.coeffs):
        for j, c in enumerate(p):
            if j * d <= order:
                want[i, j * d] = c
    w = r_t ** np.arange(order + 1)
    scale = max(float(np.abs(want * w).max()), 1e-300)
    return float(np.abs((got - want) * w).max() / scale)


def lift_Ak_germ(
    g: CoefficientGerm,
    loop_radius: Optional[float] = None,
    n_steps: int = 256,
    base_angle: float = 0.0,
    order: int = 8,
    fit_order: int = 32,
) -> LiftedGerm:
    """Lift an A_k coefficient germ through ``z = t^d``.

    The roots are continued around ``|z| = loop_radius`` to get the monodromy
    and ``d``; then continued ``d`` times around ``|z| = R_fit`` (with
    ``R_fit^{1/d} = 0.3 * R_crit^{1/d}`` unless ``loop_radius`` is smaller) and
    fitted in ``t`` by least squares.  The fit keeps ``fit_order`` terms and
    the returned series is truncated at ``order``.
    """
    if order < 1 or fit_order < order:
        raise InvalidInputError("need 1 <= order <= fit_order")
    prep = _prepare(g)
    radius = _check_radius(prep, loop_radius)
    perm, start = monodromy(g, radius, n_steps, base_angle)
    d = permutation_order(perm)

    fit_radius = min(radius, min(1.0, prep.critical_radius) * FIT_RATIO ** d)
    paths, steps = _track_all(prep, fit_radius, base_angle, n_steps, d)
    layout = _sheet_layout(prep)
    values = np.stack([paths[fi][:-1, r] for fi, r in layout], axis=1)  # (steps*d, k+1)
    closure = np.abs(np.stack([paths[fi][-1, r] - paths[fi][0, r] for fi, r in layout]))
    if closure.max() > 1e-6 * max(1e-300, float(np.abs(values).max())):
        raise NumericalRejection("sheets did not close up after d loops")

    r_t = fit_radius ** (1.0 / d)
    phase = (base_angle + 2 * np.pi * np.arange(steps * d) / steps) / d
    u = np.exp(1j * phase)
    A = u[:, None] ** np.arange(fit_order + 1)[None, :]
    coef, *_ = np.linalg.lstsq(A, values, rcond=None)
    coef = coef / (r_t ** np.arange(fit_order + 1))[:, None]

    series = coef[: order + 1]
    scale = max(1e-300, float(np.abs(values).max()))
    if np.abs(coef[0]).max() > 1e-8 * scale:
        raise NumericalRejection("lifted roots do not vanish at t = 0")
    series = series.copy()
    series[0] = 0.0
    series -= series.mean(axis=1, keepdims=True)

    resid = _round_trip_residual(g, series, d, r_t)
    return LiftedGerm(
        rs=g.root_system,
        cover_order=d,
        series=series,
        sample_radius=r_t,
        permutation=perm,
        start_roots=start,
        loop_radius=radius,
        residual=resid,
        degenerate=prep.degenerate,
        multiplicities=tuple(f.multiplicity for f in prep.factors),
    )


# -- tangent graviton and non-degeneracy ---------------------------------------


def _leading_order(norms: np.ndarray, r: float, tol: float) -> Optional[int]:
    n = np.arange(len(norms))
    top = float(np.max(norms * r ** n))
    if top == 0:
        return None
    thr = tol * top / r ** n
    for m in range(1, len(norms)):
        if norms[m] > thr[m]:
            return m
    return None


def _kernel_hits(rs: RootSystem, v: np.ndarray, scale: float, tol: float) -> set:
    P = rs.positive_array
    vals = np.abs(P @ v)
    bound = tol * np.linalg.norm(P, axis=1) * scale
    return set(np.flatnonzero(vals <= bound))


def tangent_graviton(lg: LiftedGerm, tol: float = DEFAULT_TOL) -> TangentGraviton:
    """Leading order ``p`` and coefficient ``zeta_dot`` of the joint series.

    A root obstructs smoothness only if it pairs to (relatively) zero with
    both ``zeta_dot_r`` and ``zeta_dot_c``.
    """
    n = max(len(lg.series), 0 if lg.kahler_series is None else len(lg.kahler_series))
    dim = lg.rs.ambient_dim
    zc = np.zeros((n, dim), dtype=complex)
    zc[: len(lg.series)] = lg.series
    zr = np.zeros((n, dim))
    if lg.kahler_series is not None:
        zr[: len(lg.kahler_series)] = lg.kahler_series
    norms = np.sqrt(np.sum(zr ** 2, axis=1) + np.sum(np.abs(zc) ** 2, axis=1))
    p = _leading_order(norms, lg.sample_radius, tol)
    if p is None:
        raise VanishingSeriesError(f"parameter series vanishes to available order {n - 1}")
    zd = DeformationParameter(zr[p], zc[p])
    fails = _kernel_hits(lg.rs, zd.zeta_r, zd.norm, tol) & _kernel_hits(lg.rs, zd.zeta_c, zd.norm, tol)
    roots = tuple(lg.rs.positive_roots[i] for i in sorted(fails))
    return TangentGraviton(p, zd, not roots, Fraction(p, 2), roots)


def check_nondegenerate_def11(g: CoefficientGerm, tol: float = DEFAULT_TOL, lift: Optional[LiftedGerm] = None) -> bool:
    """Complex-only criterion: ``p = 1`` and ``zeta_dot_c`` avoids every root kernel."""
    lg = lift_Ak_germ(g) if lift is None else lift
    norms = np.abs(lg.series).max(axis=1)
    p = _leading_order(norms, lg.sample_radius, tol)
    if p != 1:
        return False
    v = lg.series[1]
    return not _kernel_hits(lg.rs, v, float(np.linalg.norm(v)), tol)


def check_nondegenerate_def12(lg: LiftedGerm, p_bound: Optional[int] = None, tol: float = DEFAULT_TOL) -> bool:
    """``p <= d`` (or ``p_bound``) and the tangent graviton is smooth."""
    tg = tangent_graviton(lg, tol)
    bound = lg.cover_order if p_bound is None else p_bound
    return tg.p <= bound and tg.smooth


def invariant_parameter_dims(d: int, n: int) -> dict:
    """Dimensions of ``h_C^{Z_n}`` and ``h_R^{Z_n}`` for the cyclic quotient of an A-type graviton."""
    if d < 1 or n < 1:
        raise InvalidInputError("need d >= 1 and n >= 1")
    return {"complex": d, "real": d if n == 1 else d - 1}


# -- discriminants -----------------------------------------------------------------


def sylvester_discriminant(poly: Sequence[complex]) -> complex:
    """Discriminant of a monic polynomial (coefficients highest first) via a Sylvester determinant."""
    p = np.asarray(poly, dtype=complex)
    n = len(p) - 1
    if n < 2:
        return 1.0 + 0j
    dp = p[:-1] * np.arange(n, 0, -1)
    size = 2 * n - 1
    S = np.zeros((size, size), dtype=complex)
    for i in range(n - 1):
        S[i, i : i + n + 1] = p
    for i in range(n):
        S[n - 1 + i, i : i + n] = dp
    sign = (-1) ** (n * (n - 1) // 2)
    return sign * np.linalg.det(S) / p[0]


def scaled_discriminant(a: Sequence[complex], scale: Optional[float] = None) -> complex:
    """Discriminant of ``w^{k+1} + sum a_i w^i`` after rescaling roots to unit size.

    With ``s = max |a_i|^{1/(k+1-i)}`` the substitution ``w = s u`` makes all
    coefficients at most 1 in modulus; returns 0 when every ``a_i`` is 0.
    Pass ``scale`` to fix the root scale ``s`` externally, e.g. from the size
    of a germ near the sample point, when the coefficients themselves are tiny.
    """
    a = np.asarray(a, dtype=complex)
    k = len(a)
    deg = np.arange(k + 1, 1, -1)  # weight of a_i is k+1-i
    if scale is None:
        s = max((abs(a[i]) ** (1.0 / deg[i]) for i in range(k)), default=0.0)
    else:
        s = float(scale)
    if s == 0:
        return 0j
    scaled = a / s ** deg
    poly = np.concatenate([[1.0, 0.0], scaled[::-1]])
    return sylvester_discriminant(poly)
