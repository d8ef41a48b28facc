"""Pure numpy implementation of the Gibbons-Hawking field sums.

Mirrors ``_ghkernel.pyx`` function for function.  All inputs are C-contiguous
float64 arrays: ``points`` of shape (m, 3), ``x`` of shape (N, 3).
"""

import numpy as np


def _offsets(points, x):
    d = x[:, None, :] - points[None, :, :]
    r = np.sqrt(np.einsum("nmk,nmk->nm", d, d))
    return d, r


def potential_terms(points, x):
    """V = 1/2 sum 1/|x - p_i| with its gradient and Hessian; also the minimal center distance."""
    d, r = _offsets(points, x)
    with np.errstate(divide="ignore", invalid="ignore"):  # callers reject r = 0 via rmin
        ir = 1.0 / r
        ir3 = ir ** 3
        ir5 = ir3 * ir * ir
        V = 0.5 * ir.sum(axis=1)
        grad = -0.5 * np.einsum("nm,nmk->nk", ir3, d)
        hess = 0.5 * (
            3.0 * np.einsum("nm,nma,nmb->nab", ir5, d, d) - ir3.sum(axis=1)[:, None, None] * np.eye(3)
        )
    return V, grad, hess, r.min(axis=1)


def center_terms(points, x):
    """Per-center potentials V_i = 1/(2|x - p_i|) and their gradients."""
    d, r = _offsets(points, x)
    with np.errstate(divide="ignore", invalid="ignore"):
        Vi = 0.5 / r
        gVi = -0.5 * d / (r ** 3)[:, :, None]
    return Vi, gVi


def gauge_terms(points, x, direction):
    """Sum of charge-1/2 monopole potentials with Dirac strings along ``-direction``.

    Returns ``A`` (N, 3) and the string margin ``min_i (1 + n.(x - p_i)/|x - p_i|)``,
    which vanishes exactly on a string.
    """
    d, r = _offsets(points, x)
    nd = d @ direction
    cross = np.cross(direction[None, None, :], d)
    with np.errstate(divide="ignore", invalid="ignore"):  # on a string; callers reject via margin
        A = -0.5 * np.einsum("nmk,nm->nk", cross, 1.0 / (r * (r + nd)))
        margin = (1.0 + nd / r).min(axis=1)
    return A, margin
