"""Independent reference computations used to cross-check the package.

Nothing here imports the routines it is meant to check.
"""

import itertools
import math
from fractions import Fraction

import numpy as np
import sympy as sp


def positive_root_count(kind, rank):
    """Standard counts |Phi^+| for the simply-laced types."""
    if kind == "A":
        return rank * (rank + 1) // 2
    if kind == "D":
        return rank * (rank - 1)
    return {6: 36, 7: 63, 8: 120}[rank]


def greedy_monodromy(a_coeffs, radius, n_steps, start):
    """Follow roots of ``w^{k+1} + sum a_i(z) w^i`` by nearest-neighbour matching only.

    ``a_coeffs[i]`` lists ``a_i`` low-to-high; ``start`` gives the sheet values
    at ``z = radius``.  Returns ``perm`` with sheet ``i`` ending at ``start[perm[i]]``.
    """
    k = len(a_coeffs)

    def roots(z):
        poly = np.zeros(k + 2, dtype=complex)
        poly[0] = 1.0
        for i, c in enumerate(a_coeffs):
            poly[k + 1 - i] = np.polyval(np.asarray(c, dtype=complex)[::-1], z)
        return np.roots(poly)

    cur = np.array(start, dtype=complex)
    for s in range(1, n_steps + 1):
        new = roots(radius * np.exp(2j * np.pi * s / n_steps))
        taken = np.zeros(len(new), dtype=bool)
        nxt = np.empty_like(cur)
        for i in np.argsort(np.abs(cur)):
            d = np.abs(new - cur[i])
            d[taken] = np.inf
            j = int(np.argmin(d))
            taken[j] = True
            nxt[i] = new[j]
        cur = nxt
    return tuple(int(np.argmin(np.abs(np.asarray(start) - c))) for c in cur)


def discriminant_from_roots(roots):
    r = np.asarray(roots, dtype=complex)
    out = 1.0 + 0j
    for i, j in itertools.combinations(range(len(r)), 2):
        out *= (r[i] - r[j]) ** 2
    return out


def monopole_field_check(points, x, A_fn, V_fn, h=1e-5):
    """``curl A - grad V`` by central differences (``dA = *dV`` on R^3)."""
    J = np.zeros((3, 3))
    gV = np.zeros(3)
    for a in range(3):
        e = np.zeros(3)
        e[a] = h
        J[:, a] = (A_fn(x + e) - A_fn(x - e)) / (2 * h)
        gV[a] = (V_fn(x + e) - V_fn(x - e)) / (2 * h)
    curl = np.array([J[2, 1] - J[1, 2], J[0, 2] - J[2, 0], J[1, 0] - J[0, 1]])
    return curl - gV


def gh_potential(points, x):
    return 0.5 * sum(1.0 / np.linalg.norm(x - p) for p in points)


def sympy_segments_meet(p1, p2, q1, q2):
    """Intersection of closed planar segments in exact rationals via sympy geometry."""
    P = lambda p: sp.Point(sp.Rational(Fraction(float(p[0]))), sp.Rational(Fraction(float(p[1]))))
    s1, s2 = sp.Segment(P(p1), P(p2)), sp.Segment(P(q1), P(q2))
    return s1.intersection(s2)


def cyclic_group(r, a, b):
    return frozenset(((k * a) % r, (k * b) % r) for k in range(r))


def is_same_cyclic_quotient(r, ab, q):
    """``1/r(a, b) ~ 1/r(1, q)`` up to swapping coordinates, by comparing groups."""
    g = cyclic_group(r, *ab)
    return g == cyclic_group(r, 1, q) or g == cyclic_group(r, q, 1)


def symmetric_functions(roots):
    """Elementary symmetric polynomials e_1..e_n via sympy."""
    x = sp.symbols(f"x0:{len(roots)}")
    w = sp.Symbol("w")
    poly = sp.Poly(sp.prod([w - xi for xi in x]), w)
    coeffs = poly.all_coeffs()
    subs = dict(zip(x, roots))
    return [complex(sp.N(c.subs(subs))) for c in coeffs]


def conic_factor(eps1, eps2, x):
    a, b, g = sp.symbols("alpha beta gamma")
    e1, e2 = sp.nsimplify(eps1), sp.nsimplify(eps2)
    Q = e1 * a ** 2 + e2 * b ** 2 + sp.nsimplify(x) * a * b - g ** 2
    # the split lines have coefficients in Q(i, sqrt|eps1|, sqrt|eps2|)
    ext = [sp.I] + [sp.sqrt(abs(e)) for e in (e1, e2) if e != 0 and not sp.sqrt(abs(e)).is_Rational]
    return sp.factor_list(Q, extension=ext)


def is_rotation(u, tol=1e-12):
    u = np.asarray(u)
    return np.allclose(u @ u.T, np.eye(3), atol=tol) and math.isclose(np.linalg.det(u), 1.0, abs_tol=tol)
