"""Barrier contact energy and lagged friction.

The barrier is the smoothly clamped log form b(d) = -(d - dhat)^2 ln(d/dhat)
for d < dhat and 0 beyond, which is C2 at the clamping distance and diverges
as d -> 0.  Edge-edge terms are multiplied by a mollifier that vanishes at
parallel configurations where the edge-edge distance is non-smooth.

Friction is semi-implicit: normal force magnitudes and contact frames are
frozen from the previous converged step, making the friction term a smooth
function of the current coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .derivs import edge_edge_grad_hess, mollifier_grad_hess, point_triangle_grad_hess
from .errors import SimulationError


@dataclass
class BarrierParams:
    dhat: float = 1e-3
    kappa: float = 1e4
    kappa_min: float = 1e4
    kappa_max: float = 1e10
    eps_v: float = 1e-3

    def __post_init__(self):
        if self.dhat <= 0 or self.kappa <= 0 or self.eps_v <= 0:
            raise ValueError("barrier parameters must be positive")


@dataclass
class ContactPair:
    """One active primitive pair (reporting / anchor bookkeeping)."""

    kind: str  # "point-triangle" or "edge-edge"
    body_a: int
    body_b: int
    prim_a: int
    prim_b: int
    distance: float
    mollifier: float = 1.0


def barrier(d, dhat):
    """Clamped log barrier value; accepts scalars or arrays, requires d > 0."""
    d = np.asarray(d, float)
    if np.any(d <= 0.0):
        raise SimulationError("barrier evaluated at non-positive distance (CCD breach)")
    out = np.zeros_like(d)
    m = d < dhat
    if np.any(m):
        dm = d[m]
        out[m] = -((dm - dhat) ** 2) * np.log(dm / dhat)
    return out if out.ndim else float(out)


def barrier_grad(d, dhat):
    d = np.asarray(d, float)
    if np.any(d <= 0.0):
        raise SimulationError("barrier evaluated at non-positive distance (CCD breach)")
    out = np.zeros_like(d)
    m = d < dhat
    if np.any(m):
        dm = d[m]
        out[m] = -2.0 * (dm - dhat) * np.log(dm / dhat) - (dm - dhat) ** 2 / dm
    return out if out.ndim else float(out)


def barrier_hess(d, dhat):
    d = np.asarray(d, float)
    if np.any(d <= 0.0):
        raise SimulationError("barrier evaluated at non-positive distance (CCD breach)")
    out = np.zeros_like(d)
    m = d < dhat
    if np.any(m):
        dm = d[m]
        r = dm - dhat
        out[m] = -2.0 * np.log(dm / dhat) - 4.0 * r / dm + (r / dm) ** 2
    return out if out.ndim else float(out)


def _sqrt_chain(d2, g2, H2):
    """Gradient and Hessian of d = sqrt(d2) from those of d2."""
    d = np.sqrt(d2)
    gd = g2 / (2.0 * d)
    Hd = H2 / (2.0 * d) - np.outer(g2, g2) / (4.0 * d2 * d)
    return d, gd, Hd


def point_triangle_barrier(p, t0, t1, t2, params: BarrierParams):
    """(energy, grad, hess, distance, lam) over the 12 stacked coordinates.

    lam is the contact force magnitude kappa * |b'(d)| used for friction
    anchoring.  Inactive pairs return exact zeros.
    """
    d2, g2, H2 = point_triangle_grad_hess(p, t0, t1, t2)
    if d2 < 0.0:
        raise SimulationError("degenerate triangle reached the barrier term")
    d = np.sqrt(d2)
    if d >= params.dhat:
        return 0.0, np.zeros(12), np.zeros((12, 12)), d, 0.0
    if d <= 0.0:
        raise SimulationError("contact pair at zero distance (CCD breach)")
    d, gd, Hd = _sqrt_chain(d2, g2, H2)
    b = barrier(d, params.dhat)
    bp = barrier_grad(d, params.dhat)
    bpp = barrier_hess(d, params.dhat)
    k = params.kappa
    e = k * b
    g = k * bp * gd
    H = k * (bpp * np.outer(gd, gd) + bp * Hd)
    return e, g, H, d, -k * bp


def edge_edge_barrier(a0, a1, b0, b1, eps_x, params: BarrierParams):
    """Mollified edge-edge barrier; returns (energy, grad, hess, d, lam, m)."""
    d2, g2, H2 = edge_edge_grad_hess(a0, a1, b0, b1)
    d = np.sqrt(d2)
    if d >= params.dhat:
        return 0.0, np.zeros(12), np.zeros((12, 12)), d, 0.0, 1.0
    if d <= 0.0:
        raise SimulationError("contact pair at zero distance (CCD breach)")
    d, gd, Hd = _sqrt_chain(d2, g2, H2)
    b = barrier(d, params.dhat)
    bp = barrier_grad(d, params.dhat)
    bpp = barrier_hess(d, params.dhat)
    m, gm, Hm = mollifier_grad_hess(a0, a1, b0, b1, eps_x)
    k = params.kappa
    e = k * m * b
    bg = bp * gd
    g = k * (b * gm + m * bg)
    H = k * (
        b * Hm
        + np.outer(gm, bg)
        + np.outer(bg, gm)
        + m * (bpp * np.outer(gd, gd) + bp * Hd)
    )
    return e, g, H, d, -k * m * bp, m


def update_barrier_stiffness(min_distance: float, params: BarrierParams) -> float:
    """Adaptive stiffness: double when the converged state sits very close."""
    if min_distance <= 0.0:
        raise SimulationError("non-positive minimum distance after a step")
    kappa = params.kappa
    if min_distance < 1e-2 * params.dhat:
        kappa = 2.0 * kappa
    return float(min(max(kappa, params.kappa_min), params.kappa_max))


@dataclass
class FrictionAnchor:
    """Frozen contact data driving one friction term for a whole step.

    weights combine the four stacked points into the relative motion of the
    anchored pair of material points: u = sum_i weights[i] * x_i.
    """

    kind: str
    bodies: tuple[int, int, int, int]  # body index per stacked point
    rest_points: np.ndarray  # (4, 3) rest coordinates per stacked point
    weights: np.ndarray  # (4,)
    normal: np.ndarray  # (3,) frozen contact normal
    lam: float  # frozen normal force magnitude (N)
    mu: float
    base_points: np.ndarray = field(default=None)  # (4, 3) world points at step start


def pt_friction_anchor_geometry(p, t0, t1, t2, w):
    """Normal and weights for a point-triangle anchor with barycentric w."""
    c = w[0] * t0 + w[1] * t1 + w[2] * t2
    n = p - c
    nn = np.linalg.norm(n)
    if nn < 1e-14:
        return None
    return n / nn, np.array([1.0, -w[0], -w[1], -w[2]])


def ee_friction_anchor_geometry(a0, a1, b0, b1, s, t):
    ca = a0 + s * (a1 - a0)
    cb = b0 + t * (b1 - b0)
    n = ca - cb
    nn = np.linalg.norm(n)
    if nn < 1e-14:
        return None
    return n / nn, np.array([1.0 - s, s, -(1.0 - t), -t])


def _mobilizer(y: float, eps: float):
    """Smooth slip mobilizer: quadratic below eps, linear above (C1)."""
    if y <= eps:
        return y * y / eps - y ** 3 / (3.0 * eps * eps)
    return y - eps / 3.0


def _mobilizer_grad(y: float, eps: float):
    if y <= eps:
        return 2.0 * y / eps - (y / eps) ** 2
    return 1.0


def _mobilizer_hess(y: float, eps: float):
    if y <= eps:
        return 2.0 / eps - 2.0 * y / (eps * eps)
    return 0.0


def friction_energy_pair(anchor: FrictionAnchor, points_now: np.ndarray, eps: float,
                         with_derivs: bool = True):
    """Friction term of one anchor given the current world points (4, 3).

    Returns (energy, grad(12,), hess(12,12)); the Hessian is PSD by
    construction of the mobilizer.
    """
    disp = points_now - anchor.base_points
    u = (anchor.weights[:, None] * disp).sum(axis=0)
    n = anchor.normal
    ut = u - n * float(n @ u)
    y = float(np.linalg.norm(ut))
    scale = anchor.mu * anchor.lam
    e = scale * _mobilizer(y, eps)
    if not with_derivs:
        return e
    P = np.eye(3) - np.outer(n, n)
    if y < 1e-14:
        gu = np.zeros(3)
        Hu = (2.0 * scale / eps) * P
    else:
        uhat = ut / y
        gp = _mobilizer_grad(y, eps)
        gpp = _mobilizer_hess(y, eps)
        gu = scale * gp * uhat
        Hu = scale * (gpp * np.outer(uhat, uhat) + (gp / y) * (np.eye(3) - np.outer(uhat, uhat)))
        Hu = P @ Hu @ P
    g = np.zeros(12)
    H = np.zeros((12, 12))
    gut = P @ gu
    for i in range(4):
        g[3 * i : 3 * i + 3] = anchor.weights[i] * gut
        for j in range(4):
            H[3 * i : 3 * i + 3, 3 * j : 3 * j + 3] = (
                anchor.weights[i] * anchor.weights[j] * Hu
            )
    return e, g, H


def pair_mu(mu_a: float, mu_b: float) -> float:
    """Per-pair friction coefficient: geometric mean of the two bodies'."""
    return float(np.sqrt(mu_a * mu_b))
