"""Affine body state, generalized mass, and the smooth per-body energies.

A body carries 12 generalized coordinates q = (p, rows of A) so that a rest
point X maps to the world as x = p + A X.  The generalized mass couples the
translation and linear-map blocks through the density-weighted moments
integral(rho dV), integral(rho X dV), integral(rho X X^T dV), computed
exactly from the closed surface mesh by a tetrahedra fan against the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MeshError
from .meshes import SurfaceMesh

CLOSEDNESS_TOL = 1e-8


def rest_to_world_jacobian(X) -> np.ndarray:
    """3x12 map from one body's generalized coordinates to a world point."""
    J = np.zeros((3, 12))
    for i in range(3):
        J[i, i] = 1.0
        J[i, 3 + 3 * i : 6 + 3 * i] = X
    return J


def world_point(q, X) -> np.ndarray:
    p = q[0:3]
    A = q[3:12].reshape(3, 3)
    return p + A @ np.asarray(X, float)


def world_vertices(q, rest: np.ndarray) -> np.ndarray:
    p = q[0:3]
    A = q[3:12].reshape(3, 3)
    return rest @ A.T + p


@dataclass
class MassProperties:
    volume: float
    mass: float
    first_moment: np.ndarray  # integral(rho X dV), (3,)
    second_moment: np.ndarray  # integral(rho X X^T dV), (3, 3)
    generalized: np.ndarray  # (12, 12)

    @property
    def center_of_mass(self) -> np.ndarray:
        return self.first_moment / self.mass


def compute_generalized_mass(mesh: SurfaceMesh, density: float) -> MassProperties:
    """Exact volume integrals over the closed surface via signed tetrahedra.

    Raises MeshError when the surface is open (flux residual) or inverted
    (negative enclosed volume).
    """
    residual = mesh.closedness_residual()
    if not np.isfinite(residual) or residual > CLOSEDNESS_TOL:
        raise MeshError(
            f"mesh is not closed (area-vector residual {residual:.3e}); "
            "generalized mass requires a watertight surface"
        )
    v = mesh.vertices
    t = mesh.triangles
    a, b, c = v[t[:, 0]], v[t[:, 1]], v[t[:, 2]]
    det = np.einsum("ij,ij->i", a, np.cross(b, c))
    vol6 = det  # 6 * signed tet volume against the origin
    volume = vol6.sum() / 6.0
    if volume <= 0.0:
        raise MeshError(
            f"mesh encloses non-positive volume ({volume:.3e} m^3); "
            "flip the triangle orientation so normals point outward"
        )
    s = a + b + c
    first = (vol6[:, None] * s).sum(axis=0) / 24.0  # V/4 * (a+b+c) per tet
    # integral over tet {0,a,b,c} of x x^T = V/20 (s s^T + a a^T + b b^T + c c^T)
    outer = (
        np.einsum("i,ij,ik->jk", vol6, s, s)
        + np.einsum("i,ij,ik->jk", vol6, a, a)
        + np.einsum("i,ij,ik->jk", vol6, b, b)
        + np.einsum("i,ij,ik->jk", vol6, c, c)
    ) / 120.0
    mass = density * volume
    first = density * first
    second = density * outer

    M = np.zeros((12, 12))
    for i in range(3):
        M[i, i] = mass
        blk = slice(3 + 3 * i, 6 + 3 * i)
        M[i, blk] = first
        M[blk, i] = first
        M[blk, blk] = second
    return MassProperties(volume, mass, first, second, M)


@dataclass
class AffineBodyState:
    """One simulated body: geometry, material, and generalized coordinates."""

    name: str
    mesh: SurfaceMesh
    density: float = 1000.0
    mu: float = 0.5
    kappa_shape: float = 1e8
    is_static: bool = False
    collides: bool = True
    q: np.ndarray = field(default_factory=lambda: _identity_coords())
    qdot: np.ndarray = field(default_factory=lambda: np.zeros(12))
    mass_props: MassProperties | None = None

    def __post_init__(self):
        self.q = np.asarray(self.q, float).copy()
        self.qdot = np.asarray(self.qdot, float).copy()
        if not self.is_static and self.mass_props is None:
            self.mass_props = compute_generalized_mass(self.mesh, self.density)
            m = self.mass_props.generalized
            w = np.linalg.eigvalsh(m)
            if w[0] <= 0.0:
                raise MeshError(
                    f"body '{self.name}': generalized mass not positive definite"
                )

    def world_vertices(self, q=None) -> np.ndarray:
        return world_vertices(self.q if q is None else q, self.mesh.vertices)


def _identity_coords() -> np.ndarray:
    q = np.zeros(12)
    q[3] = q[7] = q[11] = 1.0
    return q


def pose_coords(rotation=None, translation=None) -> np.ndarray:
    """Generalized coordinates for a rigid placement."""
    q = _identity_coords()
    if rotation is not None:
        q[3:12] = np.asarray(rotation, float).reshape(9)
    if translation is not None:
        q[0:3] = np.asarray(translation, float)
    return q


@dataclass
class StepState:
    """Per-step quantities entering the inertia term."""

    h: float
    gravity: np.ndarray
    predictor: dict[int, np.ndarray]  # dynamic body index -> x~ (12,)
    applied_forces: dict[int, np.ndarray]  # generalized forces used to build x~


def gravity_generalized_force(props: MassProperties, gravity) -> np.ndarray:
    g = np.asarray(gravity, float)
    f = np.zeros(12)
    f[0:3] = props.mass * g
    for i in range(3):
        f[3 + 3 * i : 6 + 3 * i] = g[i] * props.first_moment
    return f


def build_predictor(q, qdot, props: MassProperties, h: float, force) -> np.ndarray:
    return q + h * qdot + h * h * np.linalg.solve(props.generalized, force)


def inertia_energy(q, predictor, M, with_derivs: bool = True):
    """0.5 (q - x~)^T M (q - x~) for one body."""
    d = q - predictor
    Md = M @ d
    e = 0.5 * float(d @ Md)
    if not with_derivs:
        return e
    return e, Md, M


def shape_energy(q, kappa: float, volume: float, with_derivs: bool = True):
    """Orthogonality potential kappa * V * ||A^T A - I||_F^2 for one body.

    Zero exactly when the linear map is a rotation; the raw (unprojected)
    Hessian of the 9 map coordinates is returned in the full 12x12 layout.
    """
    A = q[3:12].reshape(3, 3)
    C = A.T @ A - np.eye(3)
    kv = kappa * volume
    e = kv * float((C * C).sum())
    if not with_derivs:
        return e
    G = 4.0 * kv * (A @ C)
    g = np.zeros(12)
    g[3:12] = G.reshape(9)
    H = np.zeros((12, 12))
    AAt = A @ A.T
    for k in range(3):
        for l in range(3):
            E = np.zeros((3, 3))
            E[k, l] = 1.0
            dG = 4.0 * kv * (E @ C + A @ (E.T @ A + A.T @ E))
            H[3:12, 3 + 3 * k + l] = dG.reshape(9)
    return e, g, H


def project_psd(H: np.ndarray, floor: float = 0.0) -> np.ndarray:
    """Eigenvalue clamp onto the PSD cone (symmetric input assumed)."""
    w, V = np.linalg.eigh(0.5 * (H + H.T))
    if w[0] >= floor:
        return H
    w = np.maximum(w, floor)
    return (V * w) @ V.T
