"""Conservative continuous collision detection on linear vertex trajectories.

Affine DOFs are interpolated linearly along a step or a line-search
direction, so every vertex moves on a straight segment.  Time of impact is
found by conservative advancement: repeatedly step forward by the largest
fraction that provably cannot close the remaining gap, using the sum of the
two primitives' maximum displacement norms as the approach-speed bound.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .distance import _ee_dist_sq, _pt_dist_sq

CONSERVATIVE_FACTOR = 0.1
MIN_STEP = 2.0 ** -16
NO_IMPACT = 2.0
START_VIOLATED = -1.0
_MAX_ITER = 256


@njit(cache=True)
def _pt_toi(p0, p1, a0, a1, b0, b1, c0, c1, min_sep, cf):
    # displacements, with the mean removed (uniform translation is distance-free)
    up = p1 - p0
    ua = a1 - a0
    ub = b1 - b0
    uc = c1 - c0
    mean = (up + ua + ub + uc) / 4.0
    up = up - mean
    ua = ua - mean
    ub = ub - mean
    uc = uc - mean
    lp = np.sqrt(up[0] ** 2 + up[1] ** 2 + up[2] ** 2)
    la = np.sqrt(ua[0] ** 2 + ua[1] ** 2 + ua[2] ** 2)
    lb = np.sqrt(ub[0] ** 2 + ub[1] ** 2 + ub[2] ** 2)
    lc = np.sqrt(uc[0] ** 2 + uc[1] ** 2 + uc[2] ** 2)
    lt = max(la, max(lb, lc))
    speed = lp + lt
    d0 = np.sqrt(_pt_dist_sq(p0, a0, b0, c0))
    if d0 <= min_sep:
        return START_VIOLATED
    if speed == 0.0:
        return NO_IMPACT
    t = 0.0
    for _ in range(_MAX_ITER):
        p = p0 + t * (p1 - p0)
        a = a0 + t * (a1 - a0)
        b = b0 + t * (b1 - b0)
        c = c0 + t * (c1 - c0)
        d = np.sqrt(_pt_dist_sq(p, a, b, c))
        dt = (d - min_sep) * (1.0 - cf) / speed
        if t + dt >= 1.0:
            return NO_IMPACT
        if dt < MIN_STEP:
            if t == 0.0:
                t = dt  # strictly positive and provably safe
            return t
        t += dt
    return t


@njit(cache=True)
def _ee_toi(a00, a01, a10, a11, b00, b01, b10, b11, min_sep, cf):
    u0 = a01 - a00
    u1 = a11 - a10
    u2 = b01 - b00
    u3 = b11 - b10
    mean = (u0 + u1 + u2 + u3) / 4.0
    u0 = u0 - mean
    u1 = u1 - mean
    u2 = u2 - mean
    u3 = u3 - mean
    la = max(
        np.sqrt(u0[0] ** 2 + u0[1] ** 2 + u0[2] ** 2),
        np.sqrt(u1[0] ** 2 + u1[1] ** 2 + u1[2] ** 2),
    )
    lb = max(
        np.sqrt(u2[0] ** 2 + u2[1] ** 2 + u2[2] ** 2),
        np.sqrt(u3[0] ** 2 + u3[1] ** 2 + u3[2] ** 2),
    )
    speed = la + lb
    d0 = np.sqrt(_ee_dist_sq(a00, a10, b00, b10))
    if d0 <= min_sep:
        return START_VIOLATED
    if speed == 0.0:
        return NO_IMPACT
    t = 0.0
    for _ in range(_MAX_ITER):
        a0 = a00 + t * (a01 - a00)
        a1 = a10 + t * (a11 - a10)
        b0 = b00 + t * (b01 - b00)
        b1 = b10 + t * (b11 - b10)
        d = np.sqrt(_ee_dist_sq(a0, a1, b0, b1))
        dt = (d - min_sep) * (1.0 - cf) / speed
        if t + dt >= 1.0:
            return NO_IMPACT
        if dt < MIN_STEP:
            if t == 0.0:
                t = dt
            return t
        t += dt
    return t


@njit(cache=True)
def point_triangle_toi_batch(P0, P1, T00, T01, T10, T11, T20, T21, min_sep, cf):
    n = P0.shape[0]
    out = np.empty(n)
    for k in range(n):
        out[k] = _pt_toi(
            P0[k], P1[k], T00[k], T01[k], T10[k], T11[k], T20[k], T21[k], min_sep, cf
        )
    return out


@njit(cache=True)
def edge_edge_toi_batch(A00, A01, A10, A11, B00, B01, B10, B11, min_sep, cf):
    n = A00.shape[0]
    out = np.empty(n)
    for k in range(n):
        out[k] = _ee_toi(
            A00[k], A01[k], A10[k], A11[k], B00[k], B01[k], B10[k], B11[k], min_sep, cf
        )
    return out


def point_triangle_toi(p0, p1, t0_start, t0_end, t1_start, t1_end, t2_start, t2_end,
                       min_separation=0.0, conservative=CONSERVATIVE_FACTOR):
    """Scalar convenience wrapper; see module docstring for the contract."""
    toi = _pt_toi(
        np.asarray(p0, float), np.asarray(p1, float),
        np.asarray(t0_start, float), np.asarray(t0_end, float),
        np.asarray(t1_start, float), np.asarray(t1_end, float),
        np.asarray(t2_start, float), np.asarray(t2_end, float),
        min_separation, conservative,
    )
    return _check(toi)


def edge_edge_toi(a0s, a0e, a1s, a1e, b0s, b0e, b1s, b1e,
                  min_separation=0.0, conservative=CONSERVATIVE_FACTOR):
    toi = _ee_toi(
        np.asarray(a0s, float), np.asarray(a0e, float),
        np.asarray(a1s, float), np.asarray(a1e, float),
        np.asarray(b0s, float), np.asarray(b0e, float),
        np.asarray(b1s, float), np.asarray(b1e, float),
        min_separation, conservative,
    )
    return _check(toi)


def _check(toi: float):
    from .errors import CcdError

    if toi == START_VIOLATED:
        raise CcdError("CCD query started at or below the minimum separation")
    return None if toi == NO_IMPACT else float(toi)
