"""Unsigned distance primitives between points, edges, and triangles.

Scalar kernels report which closed region attained the minimum so the
derivative dispatch can pick the matching smooth formula; batched kernels
return values only and are used by the narrowphase filter and CCD.
All distances are squared (meters squared) unless noted.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# Region codes for point-triangle queries.
PT_VERT0, PT_VERT1, PT_VERT2 = 0, 1, 2
PT_EDGE01, PT_EDGE12, PT_EDGE02 = 3, 4, 5
PT_FACE = 6
PT_DEGENERATE = -1

# Squared-length threshold below which a primitive counts as degenerate.
DEGENERATE_EPS = 1e-12


@njit(cache=True, inline="always")
def _dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


@njit(cache=True)
def point_point_dist_sq(p, q):
    d0 = p[0] - q[0]
    d1 = p[1] - q[1]
    d2 = p[2] - q[2]
    return d0 * d0 + d1 * d1 + d2 * d2


@njit(cache=True)
def point_edge_closest(p, e0, e1):
    """Squared distance from p to segment [e0, e1] and the segment parameter."""
    u = e1 - e0
    uu = _dot3(u, u)
    if uu < DEGENERATE_EPS:
        return point_point_dist_sq(p, e0), 0.0
    t = _dot3(p - e0, u) / uu
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    c = e0 + t * u
    return point_point_dist_sq(p, c), t


@njit(cache=True)
def point_triangle_closest(p, t0, t1, t2):
    """Closest-point query against a closed triangle.

    Returns (squared distance, region code, barycentric weights of the
    closest point).  Degenerate triangles report PT_DEGENERATE and the
    caller falls back to the point-edge primitive.
    """
    ab = t1 - t0
    ac = t2 - t0
    n = np.empty(3)
    n[0] = ab[1] * ac[2] - ab[2] * ac[1]
    n[1] = ab[2] * ac[0] - ab[0] * ac[2]
    n[2] = ab[0] * ac[1] - ab[1] * ac[0]
    if _dot3(n, n) < DEGENERATE_EPS:
        w = np.zeros(3)
        return -1.0, PT_DEGENERATE, w

    w = np.zeros(3)
    ap = p - t0
    d1 = _dot3(ab, ap)
    d2 = _dot3(ac, ap)
    if d1 <= 0.0 and d2 <= 0.0:
        w[0] = 1.0
        return point_point_dist_sq(p, t0), PT_VERT0, w

    bp = p - t1
    d3 = _dot3(ab, bp)
    d4 = _dot3(ac, bp)
    if d3 >= 0.0 and d4 <= d3:
        w[1] = 1.0
        return point_point_dist_sq(p, t1), PT_VERT1, w

    vc = d1 * d4 - d3 * d2
    if vc <= 0.0 and d1 >= 0.0 and d3 <= 0.0:
        v = d1 / (d1 - d3)
        w[0] = 1.0 - v
        w[1] = v
        c = t0 + v * ab
        return point_point_dist_sq(p, c), PT_EDGE01, w

    cp = p - t2
    d5 = _dot3(ab, cp)
    d6 = _dot3(ac, cp)
    if d6 >= 0.0 and d5 <= d6:
        w[2] = 1.0
        return point_point_dist_sq(p, t2), PT_VERT2, w

    vb = d5 * d2 - d1 * d6
    if vb <= 0.0 and d2 >= 0.0 and d6 <= 0.0:
        v = d2 / (d2 - d6)
        w[0] = 1.0 - v
        w[2] = v
        c = t0 + v * ac
        return point_point_dist_sq(p, c), PT_EDGE02, w

    va = d3 * d6 - d5 * d4
    if va <= 0.0 and (d4 - d3) >= 0.0 and (d5 - d6) >= 0.0:
        v = (d4 - d3) / ((d4 - d3) + (d5 - d6))
        w[1] = 1.0 - v
        w[2] = v
        c = t1 + v * (t2 - t1)
        return point_point_dist_sq(p, c), PT_EDGE12, w

    denom = va + vb + vc
    v = vb / denom
    u = vc / denom
    w[0] = 1.0 - v - u
    w[1] = v
    w[2] = u
    c = t0 + v * ab + u * ac
    return point_point_dist_sq(p, c), PT_FACE, w


@njit(cache=True)
def edge_edge_closest(a0, a1, b0, b1):
    """Squared distance between segments [a0,a1] and [b0,b1].

    Returns (squared distance, s, t) with closest points a0 + s*(a1-a0) and
    b0 + t*(b1-b0); s and t are exactly 0.0 or 1.0 in endpoint regions.
    """
    u = a1 - a0
    v = b1 - b0
    r = a0 - b0
    a = _dot3(u, u)
    e = _dot3(v, v)
    f = _dot3(v, r)

    if a < DEGENERATE_EPS and e < DEGENERATE_EPS:
        return point_point_dist_sq(a0, b0), 0.0, 0.0
    if a < DEGENERATE_EPS:
        t = f / e
        t = min(max(t, 0.0), 1.0)
        c2 = b0 + t * v
        return point_point_dist_sq(a0, c2), 0.0, t
    c = _dot3(u, r)
    if e < DEGENERATE_EPS:
        s = min(max(-c / a, 0.0), 1.0)
        c1 = a0 + s * u
        return point_point_dist_sq(c1, b0), s, 0.0

    b = _dot3(u, v)
    denom = a * e - b * b
    if denom > DEGENERATE_EPS * a * e:
        s = (b * f - c * e) / denom
        s = min(max(s, 0.0), 1.0)
    else:
        s = 0.0  # near-parallel: pin one endpoint, closest pair is non-unique
    t = (b * s + f) / e
    if t < 0.0:
        t = 0.0
        s = min(max(-c / a, 0.0), 1.0)
    elif t > 1.0:
        t = 1.0
        s = min(max((b - c) / a, 0.0), 1.0)
    c1 = a0 + s * u
    c2 = b0 + t * v
    return point_point_dist_sq(c1, c2), s, t


@njit(cache=True)
def _pt_dist_sq(p, t0, t1, t2):
    d2, region, _ = point_triangle_closest(p, t0, t1, t2)
    if region == PT_DEGENERATE:
        # collapse to the best point-edge distance
        best, _ = point_edge_closest(p, t0, t1)
        d, _ = point_edge_closest(p, t1, t2)
        if d < best:
            best = d
        d, _ = point_edge_closest(p, t2, t0)
        if d < best:
            best = d
        return best
    return d2


@njit(cache=True)
def _ee_dist_sq(a0, a1, b0, b1):
    d2, _, _ = edge_edge_closest(a0, a1, b0, b1)
    return d2


@njit(cache=True)
def point_triangle_dist_sq_batch(P, T0, T1, T2):
    n = P.shape[0]
    out = np.empty(n)
    for k in range(n):
        out[k] = _pt_dist_sq(P[k], T0[k], T1[k], T2[k])
    return out


@njit(cache=True)
def edge_edge_dist_sq_batch(A0, A1, B0, B1):
    n = A0.shape[0]
    out = np.empty(n)
    for k in range(n):
        out[k] = _ee_dist_sq(A0[k], A1[k], B0[k], B1[k])
    return out


def edge_edge_mollifier_threshold(rest_len_sq_a: float, rest_len_sq_b: float) -> float:
    """Cross-product-magnitude threshold below which the mollifier engages."""
    return 1e-3 * rest_len_sq_a * rest_len_sq_b


def edge_edge_cross_sq(a0, a1, b0, b1):
    """Squared cross-product magnitude of the two edge directions."""
    c = np.cross(a1 - a0, b1 - b0)
    return float(c @ c)
