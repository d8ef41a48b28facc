"""Multi-center Gibbons-Hawking geometry in local coordinates (x1, x2, x3, tau).

Conventions, fixed once here:

* ``V(x) = 1/2 sum_i 1/|x - p_i|`` and ``eta = dtau + A``, with ``dA = *dV`` on R^3;
  each center carries a charge-1/2 monopole whose Dirac string runs along
  ``p_i - s * string_direction`` (s > 0).  The fiber period is 2 pi.
* ``g = V dx^2 + V^-1 eta^2``; orientation ``dx1 dx2 dx3 eta`` (= the coordinate
  orientation), for which the Kaehler forms are self-dual.
* Complex structures act on tangent vectors through a matrix ``J``; on
  1-forms they act by ``(I alpha)(X) = -alpha(J X)``, so ``I_xi (xi.dx) = eta / V``
  and ``omega_xi(X, Y) = g(J X, Y)``.
* The 2-sphere over the segment [p_a, p_b] is oriented by ``dtau ^ ds`` with s
  running from a to b; with this choice ``<chi_i, S_ab> = 2 pi (delta_ia - delta_ib)``.
* ``chi_i = df_i ^ eta - V *_3 df_i`` with ``f_i = 1 / (2 V |x - p_i|)``; the sign
  of the second term is the one making ``chi_i`` closed and anti-self-dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from . import _kernels
from .errors import CenterEvaluationError, GaugeSingularityError, InvalidInputError

FIBER_PERIOD = 2.0 * np.pi
CENTER_TOL = 1e-9
STRING_TOL = 1e-10

_EPS3 = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _EPS3[_i, _j, _k] = 1.0
    _EPS3[_i, _k, _j] = -1.0


def _levi_civita4() -> np.ndarray:
    eps = np.zeros((4, 4, 4, 4))
    from itertools import permutations

    for p in permutations(range(4)):
        inv = sum(1 for a in range(4) for b in range(a + 1, 4) if p[a] > p[b])
        eps[p] = -1.0 if inv % 2 else 1.0
    return eps


_EPS4 = _levi_civita4()


def _fibonacci_directions(n: int = 96) -> np.ndarray:
    k = np.arange(n) + 0.5
    z = 1.0 - 2.0 * k / n
    phi = np.pi * (1.0 + 5 ** 0.5) * k
    s = np.sqrt(1.0 - z * z)
    return np.stack([s * np.cos(phi), s * np.sin(phi), z], axis=1)


def _string_margins(points: np.ndarray, probes: np.ndarray, direction: np.ndarray) -> float:
    """Smallest ``1 + cos`` between a probe offset and ``direction`` over all centers."""
    d = probes[:, None, :] - points[None, :, :]
    r = np.linalg.norm(d, axis=2)
    mask = r > 1e-12
    cos = np.where(mask, (d @ direction) / np.where(mask, r, 1.0), 1.0)
    return float((1.0 + cos).min())


def _default_direction(points: np.ndarray) -> np.ndarray:
    """String direction keeping every string far (in angle) from other centers and segments."""
    m = len(points)
    if m == 1:
        return np.array([0.0, 0.0, 1.0])
    s = np.linspace(0.05, 0.95, 9)
    probes = [points]
    for a in range(m):
        for b in range(a + 1, m):
            probes.append(points[a] + s[:, None] * (points[b] - points[a]))
    probes = np.concatenate(probes)
    cands = _fibonacci_directions()
    scores = [_string_margins(points, probes, c) for c in cands]
    return cands[int(np.argmax(scores))]


@dataclass(frozen=True)
class GHConfig:
    """Centers ``p_0..p_k`` of a Gibbons-Hawking space plus the gauge choice."""

    points: np.ndarray
    string_direction: Optional[np.ndarray] = None
    fiber_period: float = FIBER_PERIOD

    def __post_init__(self):
        pts = np.ascontiguousarray(np.asarray(self.points, dtype=float))
        if pts.ndim != 2 or pts.shape[1] != 3 or len(pts) == 0:
            raise InvalidInputError(f"points must have shape (k+1, 3), got {pts.shape}")
        if self.fiber_period != FIBER_PERIOD:
            raise InvalidInputError("fiber_period is fixed at 2 pi")
        diff = pts[:, None, :] - pts[None, :, :]
        dist = np.linalg.norm(diff, axis=2)
        np.fill_diagonal(dist, np.inf)
        if len(pts) > 1 and dist.min() <= 1e-12 * max(1.0, float(np.abs(pts).max())):
            i, j = np.unravel_index(np.argmin(dist), dist.shape)
            raise InvalidInputError(f"points {i} and {j} coincide")
        if self.string_direction is None:
            n = _default_direction(pts)
        else:
            n = np.asarray(self.string_direction, dtype=float)
            norm = np.linalg.norm(n)
            if n.shape != (3,) or norm == 0:
                raise InvalidInputError("string_direction must be a nonzero 3-vector")
            n = n / norm
        if len(pts) > 1 and _string_margins(pts, pts, n) <= STRING_TOL:
            raise InvalidInputError("a Dirac string passes through another center; choose another string_direction")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "string_direction", np.ascontiguousarray(n))

    @property
    def k(self) -> int:
        return len(self.points) - 1

    @property
    def scale(self) -> float:
        if len(self.points) == 1:
            return 1.0
        return float(np.linalg.norm(self.points - self.points.mean(axis=0), axis=1).max()) or 1.0

    def transformed(self, rotation=None, scale: float = 1.0, shift=None) -> "GHConfig":
        """Image under ``x -> scale * R x + shift``; the string direction is rotated along."""
        R = np.eye(3) if rotation is None else np.asarray(rotation, float)
        b = np.zeros(3) if shift is None else np.asarray(shift, float)
        return GHConfig(scale * self.points @ R.T + b, R @ self.string_direction)

    def to_json(self) -> dict:
        return {"points": self.points.tolist(), "string_direction": self.string_direction.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> "GHConfig":
        return cls(np.asarray(data["points"], float), data.get("string_direction"))


class Potential(NamedTuple):
    V: np.ndarray
    grad: np.ndarray
    hessian: np.ndarray


class FormSample(NamedTuple):
    """A differential form at one point, components in the coframe (dx1, dx2, dx3, dtau)."""

    base_point: np.ndarray
    degree: int
    components: np.ndarray


def _as_batch(x, width: int) -> tuple:
    arr = np.asarray(x, dtype=float)
    single = arr.ndim == 1
    arr = np.ascontiguousarray(np.atleast_2d(arr))
    if arr.shape[1] != width:
        raise InvalidInputError(f"expected points with {width} coordinates, got shape {arr.shape}")
    return arr, single


def _check_centers(cfg: GHConfig, rmin: np.ndarray) -> None:
    bad = rmin <= CENTER_TOL * cfg.scale
    if np.any(bad):
        raise CenterEvaluationError(f"evaluation at a center (sample {int(np.argmax(bad))})")


def _potential_batch(cfg: GHConfig, X: np.ndarray) -> Potential:
    V, g, H, rmin = _kernels.potential_terms(cfg.points, X)
    _check_centers(cfg, rmin)
    return Potential(V, g, H)


def _gauge_batch(cfg: GHConfig, X: np.ndarray) -> np.ndarray:
    A, margin = _kernels.gauge_terms(cfg.points, X, cfg.string_direction)
    bad = ~(margin > STRING_TOL)
    if np.any(bad):
        raise GaugeSingularityError(f"sample {int(np.argmax(bad))} lies on a Dirac string")
    return A


def potential(cfg: GHConfig, x) -> Potential:
    """``V``, its gradient and Hessian at one point or a batch of points in R^3."""
    X, single = _as_batch(x, 3)
    out = _potential_batch(cfg, X)
    if single:
        return Potential(float(out.V[0]), out.grad[0], out.hessian[0])
    return out


def gauge_potential(cfg: GHConfig, x) -> np.ndarray:
    """The connection 1-form ``A`` on R^3 (``eta = dtau + A``) with ``dA = *dV``."""
    X, single = _as_batch(x, 3)
    _, _, _, rmin = _kernels.potential_terms(cfg.points, X)
    _check_centers(cfg, rmin)
    A = _gauge_batch(cfg, X)
    return A[0] if single else A


class _Frame(NamedTuple):
    V: np.ndarray  # (N,)
    gradV: np.ndarray  # (N, 3)
    eta: np.ndarray  # (N, 4) components of eta


def _frame(cfg: GHConfig, X4: np.ndarray) -> _Frame:
    X = np.ascontiguousarray(X4[:, :3])
    pot = _potential_batch(cfg, X)
    A = _gauge_batch(cfg, X)
    eta = np.concatenate([A, np.ones((len(X), 1))], axis=1)
    return _Frame(pot.V, pot.grad, eta)


def _metric_from_frame(fr: _Frame) -> np.ndarray:
    N = len(fr.V)
    G = np.einsum("n,ab->nab", fr.V, np.diag([1.0, 1.0, 1.0, 0.0]))
    G += np.einsum("na,nb->nab", fr.eta, fr.eta) / fr.V[:, None, None]
    return G.reshape(N, 4, 4)


def _mixed_form(v3: np.ndarray, eta: np.ndarray, spatial: np.ndarray) -> np.ndarray:
    """Components of ``v.dx ^ eta + spatial * *_3(v.dx)`` for batches of 3-vectors ``v``."""
    N = len(eta)
    vh = np.concatenate([v3, np.zeros((N, 1))], axis=1)
    F = np.einsum("na,nb->nab", vh, eta) - np.einsum("na,nb->nab", eta, vh)
    F[:, :3, :3] += spatial[:, None, None] * np.einsum("ijk,ni->njk", _EPS3, v3)
    return F


def _unit_xi(xi) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    norm = np.linalg.norm(xi)
    if xi.shape != (3,) or norm == 0:
        raise InvalidInputError("xi must be a nonzero 3-vector")
    return xi / norm


def metric_batch(cfg: GHConfig, X4) -> np.ndarray:
    X4, _ = _as_batch(X4, 4)
    return _metric_from_frame(_frame(cfg, X4))


def kahler_form_batch(cfg: GHConfig, X4, xi) -> np.ndarray:
    X4, _ = _as_batch(X4, 4)
    xi = _unit_xi(xi)
    fr = _frame(cfg, X4)
    v = np.broadcast_to(xi, (len(X4), 3))
    return _mixed_form(v, fr.eta, fr.V)


def complex_structure_batch(cfg: GHConfig, X4, xi) -> np.ndarray:
    """Matrices ``J`` with ``(J X)^a = J[a, b] X^b`` for the complex structure ``I_xi``."""
    X4, _ = _as_batch(X4, 4)
    xi = _unit_xi(xi)
    fr = _frame(cfg, X4)
    N = len(X4)
    K = np.zeros((N, 4, 4))  # action on covector components, column b = image of basis covector b
    for b in range(3):
        e = np.zeros(3)
        e[b] = 1.0
        K[:, :3, b] = np.cross(xi, e)
        K[:, :, b] += xi[b] * fr.eta / fr.V[:, None]
    K[:, :3, 3] = -fr.V[:, None] * xi
    K[:, :, 3] -= np.einsum("nb,nab->na", fr.eta[:, :3], K[:, :, :3])
    return -np.transpose(K, (0, 2, 1))


def f_functions(cfg: GHConfig, x) -> np.ndarray:
    """``f_i = 1 / (2 V |x - p_i|)``; rows sum to 1."""
    X, single = _as_batch(x, 3)
    pot = _potential_batch(cfg, X)
    Vi, _ = _kernels.center_terms(cfg.points, X)
    f = Vi / pot.V[:, None]
    return f[0] if single else f


def chi_batch(cfg: GHConfig, i: int, X4) -> np.ndarray:
    if not 0 <= i <= cfg.k:
        raise InvalidInputError(f"center index {i} out of range 0..{cfg.k}")
    X4, _ = _as_batch(X4, 4)
    fr = _frame(cfg, X4)
    Vi, gVi = _kernels.center_terms(cfg.points, np.ascontiguousarray(X4[:, :3]))
    f = Vi[:, i] / fr.V
    df = (gVi[:, i, :] - f[:, None] * fr.gradV) / fr.V[:, None]
    return _mixed_form(df, fr.eta, -fr.V)


def metric(cfg: GHConfig, x4) -> np.ndarray:
    """The 4x4 metric ``V dx^2 + V^-1 eta^2`` at a point of R^3 x R."""
    return metric_batch(cfg, np.atleast_2d(x4))[0]


def kahler_form(cfg: GHConfig, x4, xi) -> FormSample:
    """``omega_xi = sum xi_i (dx_i ^ eta + V dx_j ^ dx_k)``."""
    x4 = np.asarray(x4, float)
    return FormSample(x4, 2, kahler_form_batch(cfg, np.atleast_2d(x4), xi)[0])


def complex_structure(cfg: GHConfig, x4, xi) -> np.ndarray:
    return complex_structure_batch(cfg, np.atleast_2d(x4), xi)[0]


def harmonic_form_chi(cfg: GHConfig, i: int, x4) -> FormSample:
    """The closed anti-self-dual form ``chi_i`` at one point."""
    x4 = np.asarray(x4, float)
    return FormSample(x4, 2, chi_batch(cfg, i, np.atleast_2d(x4))[0])


def hodge_star_2form(G: np.ndarray, F: np.ndarray) -> np.ndarray:
    """Hodge star of 2-forms for batched metrics ``G`` (coordinate orientation)."""
    Gi = np.linalg.inv(G)
    Fup = Gi @ F @ Gi
    vol = np.sqrt(np.linalg.det(G))
    return 0.5 * vol[:, None, None] * np.einsum("abcd,nab->ncd", _EPS4, Fup)


# -- forms addressed by name --------------------------------------------------


@dataclass(frozen=True)
class Chi:
    index: int

    def components(self, cfg: GHConfig, X4: np.ndarray) -> np.ndarray:
        return chi_batch(cfg, self.index, X4)

    @property
    def name(self) -> str:
        return f"chi{self.index}"


@dataclass(frozen=True)
class Omega:
    xi: tuple

    def components(self, cfg: GHConfig, X4: np.ndarray) -> np.ndarray:
        return kahler_form_batch(cfg, X4, self.xi)

    @property
    def name(self) -> str:
        return "omega[" + ",".join(f"{x:g}" for x in self.xi) + "]"


Form = Union[Chi, Omega]


def parse_form(spec) -> Form:
    """``"chi2"``, ``"omega1"`` .. ``"omega3"`` or a 3-vector for ``omega_xi``."""
    if isinstance(spec, (Chi, Omega)):
        return spec
    if isinstance(spec, str):
        if spec.startswith("chi") and spec[3:].isdigit():
            return Chi(int(spec[3:]))
        if spec in ("omega1", "omega2", "omega3"):
            xi = [0.0, 0.0, 0.0]
            xi[int(spec[-1]) - 1] = 1.0
            return Omega(tuple(xi))
        raise InvalidInputError(f"unknown form {spec!r}")
    xi = np.asarray(spec, float)
    if xi.shape != (3,):
        raise InvalidInputError(f"unknown form {spec!r}")
    return Omega(tuple(_unit_xi(xi)))


# -- finite-difference verification ----------------------------------------------


def sample_points(
    cfg: GHConfig, n: int, rng: np.random.Generator, min_center_distance: float = 0.1,
    min_string_distance: float = 0.1, padding: float = 1.0,
) -> np.ndarray:
    """Random points ``(x, tau)`` in a padded bounding box, away from centers and strings."""
    lo = cfg.points.min(axis=0) - padding
    hi = cfg.points.max(axis=0) + padding
    out = []
    while len(out) < n:
        X = rng.uniform(lo, hi, size=(4 * n, 3))
        d = X[:, None, :] - cfg.points[None, :, :]
        r = np.linalg.norm(d, axis=2)
        s = np.maximum(0.0, -(d @ cfg.string_direction))
        ds = np.linalg.norm(d + s[:, :, None] * cfg.string_direction, axis=2)
        ok = (r.min(axis=1) >= min_center_distance) & (ds.min(axis=1) >= min_string_distance)
        out.extend(X[ok])
    X = np.array(out[:n])
    tau = rng.uniform(0.0, FIBER_PERIOD, size=(n, 1))
    return np.concatenate([X, tau], axis=1)


def _resolve_samples(cfg: GHConfig, samples, seed: int = 0) -> np.ndarray:
    if isinstance(samples, (int, np.integer)):
        return sample_points(cfg, int(samples), np.random.default_rng(seed))
    X4, _ = _as_batch(samples, 4)
    return X4


def exterior_derivative_fd(form_fn, X4: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order centered-difference ``dF`` of a batched 2-form; returns (N, 4, 4, 4) components."""
    D = []
    for a in range(4):
        e = np.zeros(4)
        e[a] = h
        D.append(
            (8.0 * (form_fn(X4 + e) - form_fn(X4 - e)) - (form_fn(X4 + 2 * e) - form_fn(X4 - 2 * e)))
            / (12.0 * h)
        )
    D = np.stack(D)  # (4, N, 4, 4): D[a] = d_a F
    return (
        np.einsum("anbc->nabc", D) + np.einsum("bnca->nabc", D) + np.einsum("cnab->nabc", D)
    )


def closedness_residuals(cfg: GHConfig, form, samples=200, h_step: float = 1e-4, seed: int = 0) -> np.ndarray:
    """Per-sample max ``|dF|`` for a named form (``Chi``/``Omega``/string)."""
    form = parse_form(form)
    X4 = _resolve_samples(cfg, samples, seed)
    dF = exterior_derivative_fd(lambda Y: form.components(cfg, Y), X4, h_step)
    return np.abs(dF).reshape(len(X4), -1).max(axis=1)


def verify_closed(cfg: GHConfig, xi, samples=200, h_step: float = 1e-4, seed: int = 0) -> np.ndarray:
    """Finite-difference residual of ``d omega_xi`` at each sample point."""
    return closedness_residuals(cfg, Omega(tuple(_unit_xi(xi))), samples, h_step, seed)


def _curvature_single_h(cfg: GHConfig, X4: np.ndarray, h: float) -> np.ndarray:
    N = len(X4)
    E = np.eye(4) * h
    stencil = [np.zeros(4)]
    for a in range(4):
        stencil += [E[a], -E[a]]
    pairs = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    for a, b in pairs:
        stencil += [E[a] + E[b], E[a] - E[b], -E[a] + E[b], -E[a] - E[b]]
    S = np.array(stencil)
    pts = (X4[:, None, :] + S[None, :, :]).reshape(-1, 4)
    G = metric_batch(cfg, pts).reshape(N, len(S), 4, 4)
    g0 = G[:, 0]
    dg = np.zeros((N, 4, 4, 4))  # dg[:, c] = d_c g
    ddg = np.zeros((N, 4, 4, 4, 4))  # ddg[:, c, d] = d_c d_d g
    for a in range(4):
        gp, gm = G[:, 1 + 2 * a], G[:, 2 + 2 * a]
        dg[:, a] = (gp - gm) / (2 * h)
        ddg[:, a, a] = (gp - 2 * g0 + gm) / h ** 2
    base = 9
    for idx, (a, b) in enumerate(pairs):
        pp, pm, mp, mm = (G[:, base + 4 * idx + j] for j in range(4))
        ddg[:, a, b] = ddg[:, b, a] = (pp - pm - mp + mm) / (4 * h ** 2)
    gi = np.linalg.inv(g0)
    # Christoffel symbols of the first kind: Gam1[n, e, a, b] = Gamma_{e, ab}
    Gam1 = 0.5 * (
        np.einsum("naeb->neab", dg) + np.einsum("nbea->neab", dg) - np.einsum("neab->neab", dg)
    )
    dGam1 = 0.5 * (
        np.einsum("ndaeb->ndeab", ddg) + np.einsum("ndbea->ndeab", ddg) - np.einsum("ndeab->ndeab", ddg)
    )
    Gam = np.einsum("nce,neab->ncab", gi, Gam1)
    dgi = -np.einsum("nce,ndef,nfg->ndcg", gi, dg, gi)
    dGam = np.einsum("ndce,neab->ndcab", dgi, Gam1) + np.einsum("nce,ndeab->ndcab", gi, dGam1)
    # R_ab = d_c Gam^c_ab - d_b Gam^c_ac + Gam^c_cd Gam^d_ab - Gam^c_bd Gam^d_ac
    ric = (
        np.einsum("nccab->nab", dGam)
        - np.einsum("nbcac->nab", dGam)
        + np.einsum("nccd,ndab->nab", Gam, Gam)
        - np.einsum("ncbd,ndac->nab", Gam, Gam)
    )
    return np.einsum("nab,nab->n", gi, ric)


def scalar_curvature_fd(cfg: GHConfig, x4, h_step: float = 1e-3, richardson: bool = True):
    """Scalar curvature from second-order central differences of metric samples.

    By default the ``h`` and ``h/2`` estimates are combined (Richardson) to
    cancel the leading ``O(h^2)`` error.  Each point is evaluated in a gauge
    whose Dirac strings point away from it.
    """
    X4, single = _as_batch(x4, 4)
    out = np.empty(len(X4))
    for i, x in enumerate(X4):
        local = _gauge_away_from(cfg, x[:3])
        s = _curvature_single_h(local, x[None, :], h_step)
        if richardson:
            s = (4.0 * _curvature_single_h(local, x[None, :], h_step / 2) - s) / 3.0
        out[i] = s[0]
    return float(out[0]) if single else out


def _gauge_away_from(cfg: GHConfig, x: np.ndarray) -> GHConfig:
    """Same centers, with Dirac strings chosen as far as possible from ``x``.

    Curvature is gauge invariant, and finite differences are far more
    accurate where the connection is small.
    """
    if len(cfg.points) == 1:
        d = x - cfg.points[0]
        return GHConfig(cfg.points, d if np.linalg.norm(d) > 0 else None)
    u = x - cfg.points
    u = u / np.linalg.norm(u, axis=1, keepdims=True)
    cands = np.vstack([_fibonacci_directions(), u.sum(axis=0)[None, :]])
    cands = cands[np.linalg.norm(cands, axis=1) > 1e-12]
    cands = cands / np.linalg.norm(cands, axis=1, keepdims=True)
    best, score = None, -np.inf
    for c in cands:
        sc = min(_string_margins(cfg.points, x[None, :], c), _string_margins(cfg.points, cfg.points, c))
        if sc > score:
            best, score = c, sc
    return GHConfig(cfg.points, best)


def flat_model_deviation(cfg: GHConfig, direction, radii: Sequence[float]) -> np.ndarray:
    """Frame-invariant distance between ``g`` and the one-center model of total charge ``(k+1)/2``.

    The model puts all charge at the centroid with the same string direction.
    Evaluated along the ray ``centroid + R * direction``.
    """
    c = cfg.points.mean(axis=0)
    u = _unit_xi(direction)
    model = GHConfig(np.array([c]), cfg.string_direction)
    X = c + np.asarray(radii, float)[:, None] * u
    X4 = np.concatenate([X, np.zeros((len(X), 1))], axis=1)
    G = metric_batch(cfg, X4)
    fr0 = _frame(model, X4)
    m = cfg.k + 1
    V0 = m * fr0.V
    eta0 = np.concatenate([m * fr0.eta[:, :3], np.ones((len(X), 1))], axis=1)
    G0 = _metric_from_frame(_Frame(V0, m * fr0.gradV, eta0))
    w, Q = np.linalg.eigh(G0)
    Wm = np.einsum("nab,nb,ncb->nac", Q, 1.0 / np.sqrt(w), Q)
    Dev = Wm @ (G - G0) @ Wm
    return np.linalg.norm(Dev, ord=2, axis=(1, 2))


# -- cohomology and homology pairings ---------------------------------------------


@dataclass(frozen=True)
class SegmentSphere:
    """The 2-sphere over the segment [p_a, p_b], oriented by dtau ^ ds (s from a to b)."""

    a: int
    b: int

    def validate(self, cfg: GHConfig, tol: float = 1e-9) -> None:
        m = len(cfg.points)
        if not (0 <= self.a < m and 0 <= self.b < m) or self.a == self.b:
            raise InvalidInputError(f"invalid segment ({self.a}, {self.b}) for {m} centers")
        blocker = segment_blocker(cfg.points, self.a, self.b, tol)
        if blocker is not None:
            raise InvalidInputError(
                f"segment ({self.a}, {self.b}) passes through center {blocker}: not a sphere"
            )


def segment_blocker(points: np.ndarray, a: int, b: int, tol: float = 1e-9) -> Optional[int]:
    """Index of a third center on the open segment [p_a, p_b], if any."""
    pa, pb = points[a], points[b]
    u = pb - pa
    L2 = float(u @ u)
    for c in range(len(points)):
        if c in (a, b):
            continue
        t = float((points[c] - pa) @ u) / L2
        if 0.0 < t < 1.0 and np.linalg.norm(points[c] - pa - t * u) <= tol * np.sqrt(L2):
            return c
    return None


def valid_segment_spheres(cfg: GHConfig, tol: float = 1e-9) -> list:
    m = len(cfg.points)
    return [
        SegmentSphere(a, b)
        for a in range(m)
        for b in range(a + 1, m)
        if segment_blocker(cfg.points, a, b, tol) is None
    ]


def pairing(cfg: GHConfig, form, sphere: SegmentSphere, n_quad: int = 48, rtol: float = 1e-12) -> float:
    """Integral of a closed 2-form over the segment sphere by adaptive Gauss-Legendre quadrature.

    The fiber integral is exact (forms are circle invariant), leaving a 1-D
    integral of ``F(d_tau, d_s)`` over the segment; the integrand extends
    continuously to the endpoints, so no endpoint treatment is needed.  Panels
    of ``n_quad`` nodes are bisected until the halves agree with the whole to
    ``rtol`` times the integral of ``|F|``, which matters when another center
    sits close to the segment.
    """
    form = parse_form(form)
    sphere.validate(cfg)
    x, w = np.polynomial.legendre.leggauss(n_quad)
    pa, pb = cfg.points[sphere.a], cfg.points[sphere.b]
    u = pb - pa

    def panel(lo, hi):
        s = lo + 0.5 * (hi - lo) * (x + 1.0)
        X4 = np.concatenate([pa + s[:, None] * u, np.zeros((n_quad, 1))], axis=1)
        f = form.components(cfg, X4)[:, 3, :3] @ u
        ww = 0.5 * (hi - lo) * w
        return float(ww @ f), float(ww @ np.abs(f))

    whole, mass = panel(0.0, 1.0)
    total, stack = 0.0, [(0.0, 1.0, whole, 0)]
    while stack:
        lo, hi, val, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        (left, _), (right, _) = panel(lo, mid), panel(mid, hi)
        if abs(left + right - val) <= rtol * max(mass, 1e-300) or depth >= 40:
            total += left + right
        else:
            stack += [(lo, mid, left, depth + 1), (mid, hi, right, depth + 1)]
    return float(cfg.fiber_period * total)


@dataclass(frozen=True)
class CohomologyBasis:
    """``H^2 = {sum c_i chi_i : sum c_i = 0}`` with basis ``chi_i - chi_{i+1}``."""

    n_centers: int

    @property
    def dimension(self) -> int:
        return self.n_centers - 1

    @property
    def basis(self) -> np.ndarray:
        B = np.zeros((self.dimension, self.n_centers))
        for i in range(self.dimension):
            B[i, i], B[i, i + 1] = 1.0, -1.0
        return B

    def contains(self, c, tol: float = 1e-12) -> bool:
        c = np.asarray(c, float)
        return c.shape == (self.n_centers,) and abs(c.sum()) <= tol * max(1.0, np.abs(c).max())

    def describe(self) -> str:
        return f"{{sum_i c_i chi_i : sum_i c_i = 0}}, dimension {self.dimension}"


def cohomology_basis(cfg: GHConfig) -> CohomologyBasis:
    return CohomologyBasis(len(cfg.points))


def class_to_period(cfg: GHConfig, c, sphere: SegmentSphere) -> float:
    """Exact period ``2 pi (c_a - c_b)`` of ``sum c_i chi_i`` on ``S_ab``."""
    basis = cohomology_basis(cfg)
    if not basis.contains(c):
        raise InvalidInputError("class coefficients must have one entry per center and sum to zero")
    sphere.validate(cfg)
    c = np.asarray(c, float)
    return float(cfg.fiber_period * (c[sphere.a] - c[sphere.b]))


def class_period_quadrature(cfg: GHConfig, c, sphere: SegmentSphere, n_quad: int = 48) -> float:
    """Same period computed as ``sum_i c_i <chi_i, S>`` by quadrature."""
    return float(sum(ci * pairing(cfg, Chi(i), sphere, n_quad) for i, ci in enumerate(c) if ci != 0))
