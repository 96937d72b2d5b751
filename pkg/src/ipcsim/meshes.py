"""Triangle surface meshes: representation, OBJ I/O, and primitive builders.

All meshes are plain triangle soups with consistent outward orientation.
Dynamic bodies require closed surfaces (the generalized mass is computed by
divergence-theorem volume integrals over the boundary).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MeshError


@dataclass
class SurfaceMesh:
    """Rest-pose triangle mesh with derived unique edges."""

    vertices: np.ndarray  # (nv, 3) float64, rest positions in meters
    triangles: np.ndarray  # (nt, 3) int64
    edges: np.ndarray = field(init=False)  # (ne, 2) int64, undirected, unique

    def __post_init__(self):
        self.vertices = np.ascontiguousarray(self.vertices, dtype=np.float64)
        self.triangles = np.ascontiguousarray(self.triangles, dtype=np.int64)
        if self.vertices.ndim != 2 or self.vertices.shape[1] != 3:
            raise MeshError("vertices must be (n, 3)")
        if self.triangles.ndim != 2 or self.triangles.shape[1] != 3:
            raise MeshError("triangles must be (m, 3)")
        if self.triangles.size and (
            self.triangles.min() < 0 or self.triangles.max() >= len(self.vertices)
        ):
            raise MeshError("triangle index out of range")
        self.edges = _unique_edges(self.triangles)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_triangles(self) -> int:
        return len(self.triangles)

    def transformed(self, rotation: np.ndarray, translation: np.ndarray) -> "SurfaceMesh":
        """New mesh with rest vertices mapped by x -> R x + t."""
        verts = self.vertices @ np.asarray(rotation, float).T + np.asarray(translation, float)
        return SurfaceMesh(verts, self.triangles.copy())

    def area_vectors(self) -> np.ndarray:
        """Per-triangle area-weighted outward normals (cross/2)."""
        v = self.vertices
        t = self.triangles
        return 0.5 * np.cross(v[t[:, 1]] - v[t[:, 0]], v[t[:, 2]] - v[t[:, 0]])

    def closedness_residual(self) -> float:
        """Norm of the summed area vectors relative to total area (0 iff closed)."""
        av = self.area_vectors()
        total = np.linalg.norm(av, axis=1).sum()
        if total == 0.0:
            return np.inf
        return float(np.linalg.norm(av.sum(axis=0)) / total)

    def aabb(self) -> tuple[np.ndarray, np.ndarray]:
        return self.vertices.min(axis=0), self.vertices.max(axis=0)


def _unique_edges(triangles: np.ndarray) -> np.ndarray:
    if len(triangles) == 0:
        return np.zeros((0, 2), dtype=np.int64)
    e = np.concatenate(
        [triangles[:, [0, 1]], triangles[:, [1, 2]], triangles[:, [2, 0]]], axis=0
    )
    e.sort(axis=1)
    return np.unique(e, axis=0)


def load_obj(path: str) -> SurfaceMesh:
    """Load a triangles-only Wavefront OBJ file.

    Quads or higher polygons are rejected; normals/texcoords are ignored.
    """
    verts: list[list[float]] = []
    tris: list[list[int]] = []
    with open(path, "r") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "v":
                if len(parts) < 4:
                    raise MeshError(f"{path}:{lineno}: malformed vertex line")
                verts.append([float(parts[1]), float(parts[2]), float(parts[3])])
            elif parts[0] == "f":
                idx = parts[1:]
                if len(idx) != 3:
                    raise MeshError(
                        f"{path}:{lineno}: face with {len(idx)} vertices; "
                        "only triangle meshes are supported"
                    )
                face = []
                for tok in idx:
                    i = int(tok.split("/")[0])
                    face.append(i - 1 if i > 0 else len(verts) + i)
                tris.append(face)
    if not verts or not tris:
        raise MeshError(f"{path}: no triangle geometry found")
    return SurfaceMesh(np.array(verts, float), np.array(tris, np.int64))


def save_obj(path: str, mesh: SurfaceMesh, world_vertices: np.ndarray | None = None) -> None:
    verts = mesh.vertices if world_vertices is None else world_vertices
    with open(path, "w") as fh:
        for v in verts:
            fh.write(f"v {v[0]!r} {v[1]!r} {v[2]!r}\n")
        for t in mesh.triangles:
            fh.write(f"f {t[0] + 1} {t[1] + 1} {t[2] + 1}\n")


def box(size, center=(0.0, 0.0, 0.0)) -> SurfaceMesh:
    """Closed axis-aligned box of extents `size` centered at `center` (12 triangles)."""
    sx, sy, sz = [0.5 * float(s) for s in np.atleast_1d(size) * np.ones(3)]
    cx, cy, cz = center
    verts = np.array(
        [
            [cx - sx, cy - sy, cz - sz],
            [cx + sx, cy - sy, cz - sz],
            [cx + sx, cy + sy, cz - sz],
            [cx - sx, cy + sy, cz - sz],
            [cx - sx, cy - sy, cz + sz],
            [cx + sx, cy - sy, cz + sz],
            [cx + sx, cy + sy, cz + sz],
            [cx - sx, cy + sy, cz + sz],
        ]
    )
    tris = np.array(
        [
            [0, 2, 1], [0, 3, 2],  # bottom (-z)
            [4, 5, 6], [4, 6, 7],  # top (+z)
            [0, 1, 5], [0, 5, 4],  # -y
            [2, 3, 7], [2, 7, 6],  # +y
            [1, 2, 6], [1, 6, 5],  # +x
            [3, 0, 4], [3, 4, 7],  # -x
        ],
        dtype=np.int64,
    )
    return SurfaceMesh(verts, tris)


def cylinder(radius: float, height: float, segments: int = 24, center=(0.0, 0.0, 0.0)) -> SurfaceMesh:
    """Closed prism approximating a z-aligned cylinder."""
    if segments < 3:
        raise MeshError("cylinder needs at least 3 segments")
    ang = 2.0 * np.pi * np.arange(segments) / segments
    ring = np.stack([radius * np.cos(ang), radius * np.sin(ang)], axis=1)
    lo, hi = -0.5 * height, 0.5 * height
    verts = np.concatenate(
        [
            np.column_stack([ring, np.full(segments, lo)]),
            np.column_stack([ring, np.full(segments, hi)]),
        ]
    ) + np.asarray(center, float)
    tris = []
    for i in range(segments):
        j = (i + 1) % segments
        tris.append([i, j, segments + j])
        tris.append([i, segments + j, segments + i])
    for i in range(1, segments - 1):  # bottom fan, outward = -z
        tris.append([0, i + 1, i])
    for i in range(1, segments - 1):  # top fan, outward = +z
        tris.append([segments, segments + i, segments + i + 1])
    return SurfaceMesh(verts, np.array(tris, np.int64))


def revolve(profile, segments: int = 24) -> SurfaceMesh:
    """Revolve a closed (r, z) polygon around the z axis into a closed solid.

    `profile` is a sequence of (r, z) pairs with r > 0, ordered so the solid
    interior lies to the left of the walk (counter-clockwise in the r-z plane
    gives outward normals).
    """
    prof = np.asarray(profile, float)
    if prof.ndim != 2 or prof.shape[1] != 2 or len(prof) < 3:
        raise MeshError("profile must be a closed polygon of (r, z) pairs")
    if (prof[:, 0] <= 0).any():
        raise MeshError("profile radii must be positive (solid of revolution with a hole)")
    npts = len(prof)
    ang = 2.0 * np.pi * np.arange(segments) / segments
    ca, sa = np.cos(ang), np.sin(ang)
    verts = np.empty((segments * npts, 3))
    for k in range(npts):
        r, z = prof[k]
        verts[k * segments : (k + 1) * segments, 0] = r * ca
        verts[k * segments : (k + 1) * segments, 1] = r * sa
        verts[k * segments : (k + 1) * segments, 2] = z
    tris = []
    for k in range(npts):
        k2 = (k + 1) % npts
        for i in range(segments):
            j = (i + 1) % segments
            a = k * segments + i
            b = k * segments + j
            c = k2 * segments + j
            d = k2 * segments + i
            tris.append([a, b, c])
            tris.append([a, c, d])
    return SurfaceMesh(verts, np.array(tris, np.int64))


def icosphere(radius: float = 1.0, subdivisions: int = 2) -> SurfaceMesh:
    """Geodesic sphere (closed, for volume-integral cross-checks)."""
    phi = (1.0 + np.sqrt(5.0)) / 2.0
    verts = np.array(
        [
            [-1, phi, 0], [1, phi, 0], [-1, -phi, 0], [1, -phi, 0],
            [0, -1, phi], [0, 1, phi], [0, -1, -phi], [0, 1, -phi],
            [phi, 0, -1], [phi, 0, 1], [-phi, 0, -1], [-phi, 0, 1],
        ],
        float,
    )
    tris = np.array(
        [
            [0, 11, 5], [0, 5, 1], [0, 1, 7], [0, 7, 10], [0, 10, 11],
            [1, 5, 9], [5, 11, 4], [11, 10, 2], [10, 7, 6], [7, 1, 8],
            [3, 9, 4], [3, 4, 2], [3, 2, 6], [3, 6, 8], [3, 8, 9],
            [4, 9, 5], [2, 4, 11], [6, 2, 10], [8, 6, 7], [9, 8, 1],
        ],
        np.int64,
    )
    for _ in range(subdivisions):
        cache: dict[tuple[int, int], int] = {}
        new_tris = []
        vlist = list(verts)

        def midpoint(a: int, b: int) -> int:
            key = (a, b) if a < b else (b, a)
            if key in cache:
                return cache[key]
            vlist.append(0.5 * (vlist[a] + vlist[b]))
            cache[key] = len(vlist) - 1
            return cache[key]

        for a, b, c in tris:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new_tris += [[a, ab, ca], [b, bc, ab], [c, ca, bc], [ab, bc, ca]]
        verts = np.array(vlist)
        tris = np.array(new_tris, np.int64)
    verts = radius * verts / np.linalg.norm(verts, axis=1, keepdims=True)
    return SurfaceMesh(verts, tris)
