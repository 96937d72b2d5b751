"""Swept-AABB culling with a uniform spatial hash.

Candidates are cross-body vertex-triangle and edge-edge primitive pairs
whose inflated swept boxes share a hash cell.  The hash guarantees a
superset of every pair whose inflated swept AABBs overlap; exactness is
left to the narrowphase.
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np


def _prim_aabbs(V0, V1, prim_verts, inflation):
    """Swept AABBs over both snapshots for primitives given as index arrays."""
    lo = np.minimum(V0[prim_verts], V1[prim_verts])
    hi = np.maximum(V0[prim_verts], V1[prim_verts])
    if prim_verts.ndim == 2:
        lo = lo.min(axis=1)
        hi = hi.max(axis=1)
    return lo - inflation, hi + inflation


def _hash_insert(table, lo, hi, ids, tag, cell):
    cells_lo = np.floor(lo / cell).astype(np.int64)
    cells_hi = np.floor(hi / cell).astype(np.int64)
    for k in range(len(ids)):
        for cx in range(cells_lo[k, 0], cells_hi[k, 0] + 1):
            for cy in range(cells_lo[k, 1], cells_hi[k, 1] + 1):
                for cz in range(cells_lo[k, 2], cells_hi[k, 2] + 1):
                    table[(cx, cy, cz)][tag].append(ids[k])


def _overlap(lo_a, hi_a, lo_b, hi_b):
    return np.all(lo_a <= hi_b) and np.all(lo_b <= hi_a)


class Broadphase:
    """Collects candidate pairs for one pair of DOF snapshots.

    Parameters are global index arrays into the flattened scene geometry;
    same-body pairs and excluded body pairs are never emitted.
    """

    def __init__(self, vert_body, tris, tri_body, edges, edge_body, excluded_pairs=frozenset()):
        self.vert_body = vert_body
        self.tris = tris
        self.tri_body = tri_body
        self.edges = edges
        self.edge_body = edge_body
        self.excluded = frozenset(excluded_pairs)

    def _body_skip(self, ba, bb):
        if ba == bb:
            return True
        key = (ba, bb) if ba < bb else (bb, ba)
        return key in self.excluded

    def candidates(self, V0, V1, inflation, collide_verts, collide_tris, collide_edges):
        """Return (vt_pairs (n,2), ee_pairs (m,2)) of global primitive ids."""
        v_ids = collide_verts
        t_ids = collide_tris
        e_ids = collide_edges
        if len(v_ids) == 0 or len(t_ids) == 0:
            vt = np.zeros((0, 2), np.int64)
        else:
            vt = None
        v_lo, v_hi = _prim_aabbs(V0, V1, v_ids, inflation)
        t_lo, t_hi = _prim_aabbs(V0, V1, self.tris[t_ids], inflation)
        e_lo, e_hi = _prim_aabbs(V0, V1, self.edges[e_ids], inflation)

        diag_t = np.linalg.norm(t_hi - t_lo, axis=1).max() if len(t_ids) else 0.0
        diag_e = np.linalg.norm(e_hi - e_lo, axis=1).max() if len(e_ids) else 0.0
        cell = 2.0 * max(diag_t, diag_e, 1e-9)

        table: dict = defaultdict(lambda: {"v": [], "t": [], "e": []})
        _hash_insert(table, v_lo, v_hi, v_ids, "v", cell)
        _hash_insert(table, t_lo, t_hi, t_ids, "t", cell)
        _hash_insert(table, e_lo, e_hi, e_ids, "e", cell)

        v_pos = {int(i): k for k, i in enumerate(v_ids)}
        t_pos = {int(i): k for k, i in enumerate(t_ids)}
        e_pos = {int(i): k for k, i in enumerate(e_ids)}

        vt_set: set[tuple[int, int]] = set()
        ee_set: set[tuple[int, int]] = set()
        for bucket in table.values():
            for v in bucket["v"]:
                bv = self.vert_body[v]
                kv = v_pos[int(v)]
                for t in bucket["t"]:
                    if self._body_skip(bv, self.tri_body[t]):
                        continue
                    kt = t_pos[int(t)]
                    if _overlap(v_lo[kv], v_hi[kv], t_lo[kt], t_hi[kt]):
                        vt_set.add((int(v), int(t)))
            eb = bucket["e"]
            for i in range(len(eb)):
                ei = eb[i]
                bi = self.edge_body[ei]
                ki = e_pos[int(ei)]
                for j in range(i + 1, len(eb)):
                    ej = eb[j]
                    if self._body_skip(bi, self.edge_body[ej]):
                        continue
                    kj = e_pos[int(ej)]
                    if _overlap(e_lo[ki], e_hi[ki], e_lo[kj], e_hi[kj]):
                        a, b = (int(ei), int(ej)) if ei < ej else (int(ej), int(ei))
                        ee_set.add((a, b))

        if vt_set:
            vt = np.array(sorted(vt_set), np.int64)
        else:
            vt = np.zeros((0, 2), np.int64)
        if ee_set:
            ee = np.array(sorted(ee_set), np.int64)
        else:
            ee = np.zeros((0, 2), np.int64)
        return vt, ee


def brute_force_candidates(
    V0,
    V1,
    vert_body,
    tris,
    tri_body,
    edges,
    edge_body,
    inflation,
    collide_verts,
    collide_tris,
    collide_edges,
    excluded_pairs=frozenset(),
):
    """All-pairs swept-AABB reference used as the completeness oracle."""
    excluded = frozenset(excluded_pairs)

    def skip(ba, bb):
        if ba == bb:
            return True
        key = (ba, bb) if ba < bb else (bb, ba)
        return key in excluded

    v_lo, v_hi = _prim_aabbs(V0, V1, collide_verts, inflation)
    t_lo, t_hi = _prim_aabbs(V0, V1, tris[collide_tris], inflation)
    e_lo, e_hi = _prim_aabbs(V0, V1, edges[collide_edges], inflation)

    vt = []
    for i, v in enumerate(collide_verts):
        for j, t in enumerate(collide_tris):
            if skip(vert_body[v], tri_body[t]):
                continue
            if _overlap(v_lo[i], v_hi[i], t_lo[j], t_hi[j]):
                vt.append((int(v), int(t)))
    ee = []
    for i in range(len(collide_edges)):
        for j in range(i + 1, len(collide_edges)):
            a, b = collide_edges[i], collide_edges[j]
            if skip(edge_body[a], edge_body[b]):
                continue
            if _overlap(e_lo[i], e_hi[i], e_lo[j], e_hi[j]):
                ee.append((int(min(a, b)), int(max(a, b))))
    vt_arr = np.array(sorted(set(vt)), np.int64) if vt else np.zeros((0, 2), np.int64)
    ee_arr = np.array(sorted(set(ee)), np.int64) if ee else np.zeros((0, 2), np.int64)
    return vt_arr, ee_arr
