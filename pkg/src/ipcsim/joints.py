"""Joint constraints, joint limits, and motors.

Point connections (revolute and fixed joints) are linear in the affine
coordinates and are eliminated exactly by a change of variables.  A
prismatic joint ties the child's linear map to the parent's (also linear)
and keeps the child attachment on the sliding line with a stiff quadratic
penalty whose perpendicular frame is frozen at each step start, since the
line direction is nonlinear in the parent coordinates.

Limits and motors act on distances between a child point and parent-frame
anchor points: limits as barriers around a mid-range anchor, position and
velocity motors as two quadratic distance-equality penalties, and torque
motors as external forces along the joint trajectory tangent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .contact import BarrierParams, barrier, barrier_grad, barrier_hess
from .dynamics import AffineBodyState, world_point
from .errors import SceneError

REVOLUTE_LEVER = 1.0  # meters; radius of the reference point used for angles


@dataclass
class JointSpec:
    name: str
    kind: str  # 'fixed' | 'revolute' | 'prismatic'
    parent: int  # body index
    child: int
    origin: np.ndarray  # world joint origin at assembly
    axis: np.ndarray  # world unit axis at assembly
    limits: tuple[float, float] | None = None

    def __post_init__(self):
        self.origin = np.asarray(self.origin, float)
        self.axis = np.asarray(self.axis, float)
        n = np.linalg.norm(self.axis)
        if self.kind in ("revolute", "prismatic"):
            if n < 1e-12:
                raise SceneError(f"joint '{self.name}': zero axis")
            self.axis = self.axis / n
        if self.limits is not None:
            lo, hi = self.limits
            if not lo < hi:
                raise SceneError(f"joint '{self.name}': limit lower must be < upper")
            if self.kind == "revolute" and hi - lo >= 2.0 * np.pi:
                raise SceneError(
                    f"joint '{self.name}': revolute limit range must be < 2*pi "
                    "(use kind 'continuous' semantics by omitting limits)"
                )


@dataclass
class MotorCommand:
    joint: str
    mode: str  # 'position' | 'velocity' | 'torque'
    target: float
    kappa: float | None = None  # optional stiffness override (position/velocity)


def _perp_basis(axis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    k = int(np.argmin(np.abs(axis)))
    e = np.zeros(3)
    e[k] = 1.0
    e1 = e - axis * float(axis @ e)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(axis, e1)


def _rotation_about(axis: np.ndarray, angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    K = np.array(
        [[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]]
    )
    return np.eye(3) + s * K + (1 - c) * (K @ K)


def _material(body: AffineBodyState, x_world: np.ndarray) -> np.ndarray:
    A0 = body.q[3:12].reshape(3, 3)
    return np.linalg.solve(A0, np.asarray(x_world, float) - body.q[0:3])


def _material_dir(body: AffineBodyState, d_world: np.ndarray) -> np.ndarray:
    A0 = body.q[3:12].reshape(3, 3)
    return np.linalg.solve(A0, np.asarray(d_world, float))


@dataclass
class JointRuntime:
    """Assembly-time derived data for one joint."""

    spec: JointSpec
    connections: list  # [(Xp, Xc)] material point pairs eliminated exactly
    a_tie: np.ndarray | None = None  # R0 with A_child = A_parent R0
    # prismatic
    axis_mat: np.ndarray | None = None  # parent-material axis direction
    origin_mat: np.ndarray | None = None  # parent-material joint origin
    attach_mat: np.ndarray | None = None  # child-material attachment point
    # revolute
    radial_child_mat: np.ndarray | None = None  # child point at unit radius
    radial_parent_mat: np.ndarray | None = None  # parent reference at unit radius
    # limits
    limit_anchor_mat: np.ndarray | None = None  # parent-material mid-range anchor
    limit_child_mat: np.ndarray | None = None
    limit_half_chord: float = 0.0
    # state
    prev_coordinate: float = 0.0
    kappa_motor: float = 1e8


def build_joint_runtime(bodies: list[AffineBodyState], spec: JointSpec) -> JointRuntime:
    parent = bodies[spec.parent]
    child = bodies[spec.child]
    o, a = spec.origin, spec.axis
    rt = JointRuntime(spec=spec, connections=[])
    if spec.kind == "fixed":
        axis = a if np.linalg.norm(a) > 0.5 else np.array([0.0, 0.0, 1.0])
        axis = axis / np.linalg.norm(axis)
        e1, _ = _perp_basis(axis)
        for pt in (o, o + axis, o + e1):
            rt.connections.append((_material(parent, pt), _material(child, pt)))
        return rt
    if spec.kind == "revolute":
        for pt in (o, o + a):
            rt.connections.append((_material(parent, pt), _material(child, pt)))
        e1, _ = _perp_basis(a)
        radial = o + REVOLUTE_LEVER * e1
        rt.radial_child_mat = _material(child, radial)
        rt.radial_parent_mat = _material(parent, radial)
        rt.axis_mat = _material_dir(parent, a)
        rt.origin_mat = _material(parent, o)
        if spec.limits is not None:
            lo, hi = spec.limits
            mid = 0.5 * (lo + hi)
            half = 0.5 * (hi - lo)
            anchor = o + REVOLUTE_LEVER * (_rotation_about(a, mid) @ e1)
            rt.limit_anchor_mat = _material(parent, anchor)
            rt.limit_child_mat = rt.radial_child_mat
            rt.limit_half_chord = 2.0 * REVOLUTE_LEVER * np.sin(half / 2.0)
        return rt
    if spec.kind == "prismatic":
        Ap0 = parent.q[3:12].reshape(3, 3)
        Ac0 = child.q[3:12].reshape(3, 3)
        rt.a_tie = np.linalg.solve(Ap0, Ac0)  # A_c = A_p R0 at assembly
        rt.axis_mat = _material_dir(parent, a)
        rt.origin_mat = _material(parent, o)
        rt.attach_mat = _material(child, o)
        if spec.limits is not None:
            lo, hi = spec.limits
            mid = 0.5 * (lo + hi)
            rt.limit_anchor_mat = _material(parent, o + mid * a)
            rt.limit_child_mat = rt.attach_mat
            rt.limit_half_chord = 0.5 * (hi - lo)
        return rt
    raise SceneError(f"joint '{spec.name}': unsupported kind '{spec.kind}'")


@dataclass
class DofReduction:
    """Affine change of variables q = q_ref + S y satisfying all exact rows."""

    S: np.ndarray  # (12*ndyn, m), orthonormal columns
    q_ref: np.ndarray  # (12*ndyn,)
    C: np.ndarray  # (rows, 12*ndyn)
    rhs: np.ndarray  # (rows,)
    connection_rows: int  # leading rows that are point connections (meters)

    @property
    def dim(self) -> int:
        return self.S.shape[1]

    def full_coords(self, y: np.ndarray) -> np.ndarray:
        return self.q_ref + self.S @ y

    def residual(self, q: np.ndarray) -> float:
        if self.C.shape[0] == 0:
            return 0.0
        return float(np.abs(self.C @ q - self.rhs).max())

    def connection_residual(self, q: np.ndarray) -> float:
        if self.connection_rows == 0:
            return 0.0
        r = self.C[: self.connection_rows] @ q - self.rhs[: self.connection_rows]
        return float(np.abs(r).max())


def _check_forest(bodies, joints):
    parent_of = {}
    root = {}

    def find(i):
        while root.get(i, i) != i:
            root[i] = root.get(root[i], root[i])
            i = root[i]
        return i

    for spec in joints:
        if spec.parent == spec.child:
            raise SceneError(f"joint '{spec.name}' connects a body to itself")
        ra, rb = find(spec.parent), find(spec.child)
        if ra == rb:
            raise SceneError(
                f"joint '{spec.name}' closes a kinematic loop; only trees are supported"
            )
        root[ra] = rb


def build_reduction(
    bodies: list[AffineBodyState], runtimes: list[JointRuntime]
) -> DofReduction:
    """Eliminate all linear joint rows over the dynamic bodies' coordinates."""
    _check_forest(bodies, [rt.spec for rt in runtimes])
    dyn = [i for i, b in enumerate(bodies) if not b.is_static]
    slot = {b: s for s, b in enumerate(dyn)}
    n = 12 * len(dyn)
    q_ref = np.concatenate([bodies[i].q for i in dyn]) if dyn else np.zeros(0)

    conn_rows = []
    conn_rhs = []
    tie_rows = []
    tie_rhs = []
    for rt in runtimes:
        spec = rt.spec
        if bodies[spec.parent].is_static and bodies[spec.child].is_static:
            continue
        for conn_Xp, conn_Xc in rt.connections:
            # orient each row so a dynamic body carries the +1 coefficients
            p_idx, c_idx, Xp, Xc = spec.parent, spec.child, conn_Xp, conn_Xc
            if bodies[c_idx].is_static:
                p_idx, c_idx, Xp, Xc = c_idx, p_idx, Xc, Xp
            cs = 12 * slot[c_idx]
            for i in range(3):
                row = np.zeros(n)
                rhs = 0.0
                row[cs + i] += 1.0
                row[cs + 3 + 3 * i : cs + 6 + 3 * i] += Xc
                if bodies[p_idx].is_static:
                    rhs = world_point(bodies[p_idx].q, Xp)[i]
                else:
                    ps = 12 * slot[p_idx]
                    row[ps + i] -= 1.0
                    row[ps + 3 + 3 * i : ps + 6 + 3 * i] -= Xp
                conn_rows.append(row)
                conn_rhs.append(rhs)
        if rt.a_tie is not None:
            # A_child = A_parent R0; when one side is static its map is data
            R0 = rt.a_tie
            p_idx, c_idx = spec.parent, spec.child
            if bodies[c_idx].is_static:
                # constrain the parent instead: A_parent = A_child R0^-1
                R0 = np.linalg.inv(R0)
                p_idx, c_idx = c_idx, p_idx
            cs = 12 * slot[c_idx]
            Ap0 = bodies[p_idx].q[3:12].reshape(3, 3)
            for i in range(3):
                for j in range(3):
                    row = np.zeros(n)
                    rhs = 0.0
                    row[cs + 3 + 3 * i + j] += 1.0
                    if bodies[p_idx].is_static:
                        rhs = float((Ap0 @ R0)[i, j])
                    else:
                        ps = 12 * slot[p_idx]
                        for k in range(3):
                            row[ps + 3 + 3 * i + k] -= R0[k, j]
                    tie_rows.append(row)
                    tie_rhs.append(rhs)

    rows = conn_rows + tie_rows
    if not rows:
        S = np.eye(n)
        return DofReduction(S, q_ref, np.zeros((0, n)), np.zeros(0), 0)
    C = np.array(rows)
    rhs = np.array(conn_rhs + tie_rhs)

    sv = scipy.linalg.svdvals(C)
    rank = int((sv > max(C.shape) * np.finfo(float).eps * sv[0]).sum())
    if rank < C.shape[0]:
        raise SceneError(
            "joint constraint rows are rank-deficient (coincident attachment "
            "points or redundant joints); check "
            + ", ".join(rt.spec.name for rt in runtimes)
        )
    res = np.abs(C @ q_ref - rhs).max()
    if res > 1e-9:
        raise SceneError(
            f"assembly configuration violates joint constraints (residual {res:.3e})"
        )
    S = scipy.linalg.null_space(C)
    if S.shape[1] != n - C.shape[0]:
        raise SceneError("unexpected null-space dimension building the reduction")
    return DofReduction(S, q_ref, C, rhs, len(conn_rows))


def _dyn_q(bodies, slot_of, q_stacked, body_index):
    s = slot_of.get(body_index, -1)
    if s < 0:
        return bodies[body_index].q
    return q_stacked[12 * s : 12 * s + 12]


def joint_coordinate(
    bodies, slot_of, q_stacked, rt: JointRuntime, unwrap: bool = True
) -> float:
    """Prismatic displacement (m) or revolute angle (rad), zero at assembly."""
    spec = rt.spec
    qp = _dyn_q(bodies, slot_of, q_stacked, spec.parent)
    qc = _dyn_q(bodies, slot_of, q_stacked, spec.child)
    Ap = qp[3:12].reshape(3, 3)
    if spec.kind == "prismatic":
        u = Ap @ rt.axis_mat
        u = u / np.linalg.norm(u)
        tau = float(u @ (world_point(qc, rt.attach_mat) - world_point(qp, rt.origin_mat)))
        return tau
    if spec.kind == "revolute":
        u = Ap @ rt.axis_mat
        u = u / np.linalg.norm(u)
        xo = world_point(qp, rt.origin_mat)
        vc = world_point(qc, rt.radial_child_mat) - xo
        vp = world_point(qp, rt.radial_parent_mat) - xo
        vc = vc - u * float(u @ vc)
        vp = vp - u * float(u @ vp)
        nc, np_ = np.linalg.norm(vc), np.linalg.norm(vp)
        if nc < 1e-12 or np_ < 1e-12:
            return rt.prev_coordinate
        vc, vp = vc / nc, vp / np_
        raw = float(np.arctan2(u @ np.cross(vp, vc), vp @ vc))
        if not unwrap:
            return raw
        k = np.round((rt.prev_coordinate - raw) / (2.0 * np.pi))
        return raw + 2.0 * np.pi * float(k)
    raise SceneError(f"joint '{spec.name}' has no scalar coordinate")


@dataclass
class PointTerm:
    """A smooth energy over a small set of body-attached points.

    points: [(body_index, X_rest)], evaluate(world_points (k,3)) ->
    (energy, grad (3k,), hess (3k,3k)).  The solver lifts derivatives to the
    generalized coordinates and applies PSD projection where marked.
    """

    points: list
    evaluate: object
    needs_projection: bool = False
    label: str = ""


def limit_margin(bodies, slot_of, q_stacked, rt: JointRuntime) -> float:
    spec = rt.spec
    qp = _dyn_q(bodies, slot_of, q_stacked, spec.parent)
    qc = _dyn_q(bodies, slot_of, q_stacked, spec.child)
    xa = world_point(qp, rt.limit_anchor_mat)
    xc = world_point(qc, rt.limit_child_mat)
    return rt.limit_half_chord - float(np.linalg.norm(xc - xa))


def make_limit_term(rt: JointRuntime, params: BarrierParams) -> PointTerm:
    """Barrier on the chord-distance margin to the joint's limit surface."""
    half = rt.limit_half_chord

    def evaluate(pts):
        xc, xa = pts[0], pts[1]
        w = xc - xa
        r = float(np.linalg.norm(w))
        margin = half - r
        if margin >= params.dhat:
            return 0.0, np.zeros(6), np.zeros((6, 6))
        if margin <= 0.0:
            # crossed the limit surface; only reachable by rejected trials
            return np.inf, np.zeros(6), np.zeros((6, 6))
        b = params.kappa * barrier(margin, params.dhat)
        bp = params.kappa * barrier_grad(margin, params.dhat)
        bpp = params.kappa * barrier_hess(margin, params.dhat)
        nhat = w / r
        gm = np.concatenate([-nhat, nhat])  # d(margin)/d(xc, xa)
        P = (np.eye(3) - np.outer(nhat, nhat)) / r
        Hr = np.block([[P, -P], [-P, P]])  # Hessian of r
        g = bp * gm
        H = bpp * np.outer(gm, gm) + bp * (-Hr)
        return float(b), g, H

    return PointTerm(
        points=[(rt.spec.child, rt.limit_child_mat), (rt.spec.parent, rt.limit_anchor_mat)],
        evaluate=evaluate,
        needs_projection=False,
        label=f"limit:{rt.spec.name}",
    )


def make_distance_penalty_term(
    child: int, Xc, parent: int, Xa, target: float, kappa: float, label: str
) -> PointTerm:
    """kappa * (||x_c - x_a|| - target)^2 between two attached points."""

    def evaluate(pts):
        w = pts[0] - pts[1]
        r2 = float(w @ w)
        if target < 1e-9:
            e = kappa * r2
            g = 2.0 * kappa * np.concatenate([w, -w])
            I = np.eye(3)
            H = 2.0 * kappa * np.block([[I, -I], [-I, I]])
            return e, g, H
        r = np.sqrt(r2)
        if r < 1e-12:
            return kappa * target * target, np.zeros(6), 2.0 * kappa * np.block(
                [[np.eye(3), -np.eye(3)], [-np.eye(3), np.eye(3)]]
            )
        nhat = w / r
        gr = np.concatenate([nhat, -nhat])
        P = (np.eye(3) - np.outer(nhat, nhat)) / r
        Hr = np.block([[P, -P], [-P, P]])
        e = kappa * (r - target) ** 2
        g = 2.0 * kappa * (r - target) * gr
        H = 2.0 * kappa * (np.outer(gr, gr) + (r - target) * Hr)
        return float(e), g, H

    return PointTerm(
        points=[(child, Xc), (parent, Xa)],
        evaluate=evaluate,
        needs_projection=True,
        label=label,
    )


def make_sliding_term(rt: JointRuntime, e1_world, e2_world, kappa: float) -> PointTerm:
    """Quadratic penalty keeping the child attachment on the sliding line.

    The perpendicular frame is frozen at step start, keeping the term
    quadratic in the coordinates.
    """
    e1 = np.asarray(e1_world, float)
    e2 = np.asarray(e2_world, float)

    def evaluate(pts):
        w = pts[0] - pts[1]
        c1, c2 = float(e1 @ w), float(e2 @ w)
        e = kappa * (c1 * c1 + c2 * c2)
        gw = 2.0 * kappa * (c1 * e1 + c2 * e2)
        g = np.concatenate([gw, -gw])
        Hw = 2.0 * kappa * (np.outer(e1, e1) + np.outer(e2, e2))
        H = np.block([[Hw, -Hw], [-Hw, Hw]])
        return e, g, H

    return PointTerm(
        points=[(rt.spec.child, rt.attach_mat), (rt.spec.parent, rt.origin_mat)],
        evaluate=evaluate,
        needs_projection=False,
        label=f"slide:{rt.spec.name}",
    )


def motor_penalty_terms(
    bodies, slot_of, q_stacked, rt: JointRuntime, target: float, kappa: float,
    limit_pad: float = 0.0,
) -> tuple[list[PointTerm], float]:
    """Two distance-equality penalties pinning the joint coordinate.

    Returns the terms and the (possibly limit-clamped) target actually used;
    targets outside the limits are pulled inside by `limit_pad`.
    """
    spec = rt.spec
    if spec.limits is not None:
        lo, hi = spec.limits
        pad = min(limit_pad, 0.25 * (hi - lo))
        target = float(np.clip(target, lo + pad, hi - pad))
    qp = _dyn_q(bodies, slot_of, q_stacked, spec.parent)
    parent = bodies[spec.parent]
    terms = []
    if spec.kind == "prismatic":
        cur = joint_coordinate(bodies, slot_of, q_stacked, rt)
        L = 1.0 + max(abs(target), abs(cur))
        if spec.limits is not None:
            L = 1.0 + max(abs(spec.limits[0]), abs(spec.limits[1]), abs(target), abs(cur))
        for sgn, tag in ((-1.0, "a"), (1.0, "b")):
            Xa = rt.origin_mat + sgn * L * rt.axis_mat
            r_target = target + L if sgn < 0 else L - target
            terms.append(
                make_distance_penalty_term(
                    spec.child, rt.attach_mat, spec.parent, Xa, r_target, kappa,
                    label=f"motor:{spec.name}:{tag}",
                )
            )
        return terms, target
    if spec.kind == "revolute":
        o, a = spec.origin, spec.axis
        e1, _ = _perp_basis(a)
        q0 = o + REVOLUTE_LEVER * e1
        q90 = o + REVOLUTE_LEVER * (_rotation_about(a, np.pi / 2.0) @ e1)
        anchors = (
            (_material(parent, q0), 2.0 * REVOLUTE_LEVER * abs(np.sin(target / 2.0))),
            (
                _material(parent, q90),
                2.0 * REVOLUTE_LEVER * abs(np.sin((target - np.pi / 2.0) / 2.0)),
            ),
        )
        for k, (Xa, r_target) in enumerate(anchors):
            terms.append(
                make_distance_penalty_term(
                    spec.child, rt.radial_child_mat, spec.parent, Xa, r_target, kappa,
                    label=f"motor:{spec.name}:{k}",
                )
            )
        return terms, target
    raise SceneError(f"motor on joint '{spec.name}': kind '{spec.kind}' not controllable")


def torque_generalized_force(
    bodies, slot_of, q_stacked, rt: JointRuntime, force: float
):
    """(child body index, rest point, world force vector) at step start."""
    spec = rt.spec
    qp = _dyn_q(bodies, slot_of, q_stacked, spec.parent)
    qc = _dyn_q(bodies, slot_of, q_stacked, spec.child)
    Ap = qp[3:12].reshape(3, 3)
    u = Ap @ rt.axis_mat
    u = u / np.linalg.norm(u)
    if spec.kind == "prismatic":
        return spec.child, rt.attach_mat, force * u
    if spec.kind == "revolute":
        xo = world_point(qp, rt.origin_mat)
        v = world_point(qc, rt.radial_child_mat) - xo
        v = v - u * float(u @ v)
        nv = np.linalg.norm(v)
        if nv < 1e-12:
            raise SceneError(f"joint '{spec.name}': radial reference on the axis")
        tangent = np.cross(u, v / nv)
        return spec.child, rt.radial_child_mat, force * tangent
    raise SceneError(f"torque motor on joint '{spec.name}': unsupported kind")
