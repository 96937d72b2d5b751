"""Gradients and Hessians of squared distances and the edge-edge mollifier.

Everything here differentiates with respect to the stacked coordinates of
the four participating points (12 values), ordered (p, t0, t1, t2) for
point-triangle and (a0, a1, b0, b1) for edge-edge.  Regions where fewer
points matter scatter the reduced derivative into the right slots.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ._distance_derivs import (
    line_line_grad_hess,
    point_line_grad_hess,
    point_plane_grad_hess,
)
from .distance import (
    PT_DEGENERATE,
    PT_EDGE01,
    PT_EDGE02,
    PT_EDGE12,
    PT_FACE,
    PT_VERT0,
    PT_VERT1,
    PT_VERT2,
    edge_edge_closest,
    point_triangle_closest,
)


@njit(cache=True)
def _scatter(g_loc, H_loc, slots):
    """Expand derivatives over a subset of points into the 12-dim layout."""
    g = np.zeros(12)
    H = np.zeros((12, 12))
    k = slots.shape[0]
    for i in range(k):
        si = 3 * slots[i]
        for a in range(3):
            g[si + a] = g_loc[3 * i + a]
        for j in range(k):
            sj = 3 * slots[j]
            for a in range(3):
                for b in range(3):
                    H[si + a, sj + b] = H_loc[3 * i + a, 3 * j + b]
    return g, H


@njit(cache=True)
def _pp_grad_hess(a, b):
    g = np.empty(6)
    for i in range(3):
        d = 2.0 * (a[i] - b[i])
        g[i] = d
        g[3 + i] = -d
    H = np.zeros((6, 6))
    for i in range(3):
        H[i, i] = 2.0
        H[3 + i, 3 + i] = 2.0
        H[i, 3 + i] = -2.0
        H[3 + i, i] = -2.0
    return g, H


@njit(cache=True)
def point_triangle_grad_hess(p, t0, t1, t2):
    """(d2, grad, hess) of the clamped point-triangle squared distance."""
    d2, region, _ = point_triangle_closest(p, t0, t1, t2)
    x = np.empty(12)
    if region == PT_FACE:
        x[0:3] = p
        x[3:6] = t0
        x[6:9] = t1
        x[9:12] = t2
        g, H = point_plane_grad_hess(x)
        return d2, g, H
    if region == PT_VERT0 or region == PT_VERT1 or region == PT_VERT2:
        tv = t0 if region == PT_VERT0 else (t1 if region == PT_VERT1 else t2)
        g_loc, H_loc = _pp_grad_hess(p, tv)
        slots = np.empty(2, np.int64)
        slots[0] = 0
        slots[1] = 1 + region
        g, H = _scatter(g_loc, H_loc, slots)
        return d2, g, H
    if region == PT_EDGE01 or region == PT_EDGE12 or region == PT_EDGE02:
        if region == PT_EDGE01:
            ea, eb, sa, sb = t0, t1, 1, 2
        elif region == PT_EDGE12:
            ea, eb, sa, sb = t1, t2, 2, 3
        else:
            ea, eb, sa, sb = t0, t2, 1, 3
        x9 = np.empty(9)
        x9[0:3] = p
        x9[3:6] = ea
        x9[6:9] = eb
        g_loc, H_loc = point_line_grad_hess(x9)
        slots = np.empty(3, np.int64)
        slots[0] = 0
        slots[1] = sa
        slots[2] = sb
        g, H = _scatter(g_loc, H_loc, slots)
        return d2, g, H
    # degenerate triangle: signal with d2 < 0, caller handles fallback
    return -1.0, np.zeros(12), np.zeros((12, 12))


@njit(cache=True)
def edge_edge_grad_hess(a0, a1, b0, b1):
    """(d2, grad, hess) of the clamped edge-edge squared distance."""
    d2, s, t = edge_edge_closest(a0, a1, b0, b1)
    x = np.empty(12)
    s_int = 0.0 < s < 1.0
    t_int = 0.0 < t < 1.0
    if s_int and t_int:
        x[0:3] = a0
        x[3:6] = a1
        x[6:9] = b0
        x[9:12] = b1
        g, H = line_line_grad_hess(x)
        return d2, g, H
    if s_int:  # endpoint of b against interior of a
        pb = b0 if t == 0.0 else b1
        x9 = np.empty(9)
        x9[0:3] = pb
        x9[3:6] = a0
        x9[6:9] = a1
        g_loc, H_loc = point_line_grad_hess(x9)
        slots = np.empty(3, np.int64)
        slots[0] = 2 if t == 0.0 else 3
        slots[1] = 0
        slots[2] = 1
        g, H = _scatter(g_loc, H_loc, slots)
        return d2, g, H
    if t_int:  # endpoint of a against interior of b
        pa = a0 if s == 0.0 else a1
        x9 = np.empty(9)
        x9[0:3] = pa
        x9[3:6] = b0
        x9[6:9] = b1
        g_loc, H_loc = point_line_grad_hess(x9)
        slots = np.empty(3, np.int64)
        slots[0] = 0 if s == 0.0 else 1
        slots[1] = 2
        slots[2] = 3
        g, H = _scatter(g_loc, H_loc, slots)
        return d2, g, H
    pa = a0 if s == 0.0 else a1
    pb = b0 if t == 0.0 else b1
    g_loc, H_loc = _pp_grad_hess(pa, pb)
    slots = np.empty(2, np.int64)
    slots[0] = 0 if s == 0.0 else 1
    slots[1] = 2 if t == 0.0 else 3
    g, H = _scatter(g_loc, H_loc, slots)
    return d2, g, H


@njit(cache=True)
def mollifier_value(a0, a1, b0, b1, eps_x):
    u0 = a1[0] - a0[0]
    u1 = a1[1] - a0[1]
    u2 = a1[2] - a0[2]
    v0 = b1[0] - b0[0]
    v1 = b1[1] - b0[1]
    v2 = b1[2] - b0[2]
    w0 = u1 * v2 - u2 * v1
    w1 = u2 * v0 - u0 * v2
    w2 = u0 * v1 - u1 * v0
    c = w0 * w0 + w1 * w1 + w2 * w2
    if c >= eps_x:
        return 1.0
    r = c / eps_x
    return r * (2.0 - r)


@njit(cache=True)
def mollifier_grad_hess(a0, a1, b0, b1, eps_x):
    """(m, grad, hess) of the near-parallel mollifier over the 12 coordinates."""
    u = a1 - a0
    v = b1 - b0
    w = np.empty(3)
    w[0] = u[1] * v[2] - u[2] * v[1]
    w[1] = u[2] * v[0] - u[0] * v[2]
    w[2] = u[0] * v[1] - u[1] * v[0]
    c = w[0] * w[0] + w[1] * w[1] + w[2] * w[2]
    g = np.zeros(12)
    H = np.zeros((12, 12))
    if c >= eps_x:
        return 1.0, g, H
    r = c / eps_x
    m = r * (2.0 - r)
    dm = (2.0 - 2.0 * r) / eps_x  # dm/dc
    d2m = -2.0 / (eps_x * eps_x)

    # dc/du = 2 v x w, dc/dv = 2 w x u
    gu = np.empty(3)
    gu[0] = 2.0 * (v[1] * w[2] - v[2] * w[1])
    gu[1] = 2.0 * (v[2] * w[0] - v[0] * w[2])
    gu[2] = 2.0 * (v[0] * w[1] - v[1] * w[0])
    gv = np.empty(3)
    gv[0] = 2.0 * (w[1] * u[2] - w[2] * u[1])
    gv[1] = 2.0 * (w[2] * u[0] - w[0] * u[2])
    gv[2] = 2.0 * (w[0] * u[1] - w[1] * u[0])

    uu = u[0] * u[0] + u[1] * u[1] + u[2] * u[2]
    vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    udv = u[0] * v[0] + u[1] * v[1] + u[2] * v[2]

    # second derivatives of c in the (u, v) coordinates
    Huu = np.empty((3, 3))
    Hvv = np.empty((3, 3))
    Huv = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            eye = 1.0 if i == j else 0.0
            Huu[i, j] = 2.0 * (vv * eye - v[i] * v[j])
            Hvv[i, j] = 2.0 * (uu * eye - u[i] * u[j])
            Huv[i, j] = 2.0 * (2.0 * u[i] * v[j] - udv * eye - v[i] * u[j])

    # chain through u = a1 - a0, v = b1 - b0 (signs: a0 -, a1 +, b0 -, b1 +)
    sg = np.empty(4)
    sg[0] = -1.0
    sg[1] = 1.0
    sg[2] = -1.0
    sg[3] = 1.0
    gc = np.zeros(12)
    for a in range(3):
        gc[0 + a] = -gu[a]
        gc[3 + a] = gu[a]
        gc[6 + a] = -gv[a]
        gc[9 + a] = gv[a]
    Hc = np.zeros((12, 12))
    for pi in range(4):
        for pj in range(4):
            iu = pi < 2  # belongs to u block
            ju = pj < 2
            if iu and ju:
                blk = Huu
            elif (not iu) and (not ju):
                blk = Hvv
            elif iu and not ju:
                blk = Huv
            else:
                blk = Huv.T
            f = sg[pi] * sg[pj]
            for a in range(3):
                for b in range(3):
                    Hc[3 * pi + a, 3 * pj + b] = f * blk[a, b]

    for i in range(12):
        g[i] = dm * gc[i]
    for i in range(12):
        for j in range(12):
            H[i, j] = d2m * gc[i] * gc[j] + dm * Hc[i, j]
    return m, g, H
