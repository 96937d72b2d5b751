"""Generate closed-form gradients/Hessians of squared-distance primitives.

Writes src/ipcsim/_distance_derivs.py.  The three unclamped primitives
(point-line, point-plane, line-line) cover the interior regions of the
clamped point-triangle and edge-edge distances; endpoint regions reduce to
point-point which is hand-coded in ipcsim.derivs.

Run from the repository root:  python tools/gen_distance_derivatives.py
"""

from __future__ import annotations

import sympy as sp
from sympy.printing.pycode import pycode

HEADER = '''"""Autogenerated squared-distance derivatives (tools/gen_distance_derivatives.py).

Do not edit by hand.  Each function takes a flat float64 array of stacked
point coordinates and returns (gradient, hessian) of the squared distance
of the corresponding unclamped primitive pair.
"""

import numpy as np
from numba import njit

'''

FUNC_TEMPLATE = '''
@njit(cache=True)
def {name}(x):
{body}
'''


def _vec(prefix: str, offset: int):
    return sp.Matrix([sp.Symbol(f"x{offset + i}") for i in range(3)])


def _emit(name: str, d2: sp.Expr, nvars: int) -> str:
    syms = [sp.Symbol(f"x{i}") for i in range(nvars)]
    grad = [sp.diff(d2, s) for s in syms]
    hess = []
    for i in range(nvars):
        for j in range(i, nvars):
            hess.append(sp.diff(grad[i], syms[j]))
    repl, reduced = sp.cse(grad + hess, order="none")
    lines = []
    for i in range(nvars):
        lines.append(f"x{i} = x[{i}]")
    for lhs, rhs in repl:
        lines.append(f"{lhs} = {pycode(rhs)}")
    lines.append(f"g = np.empty({nvars})")
    for i in range(nvars):
        lines.append(f"g[{i}] = {pycode(reduced[i])}")
    lines.append(f"H = np.empty(({nvars}, {nvars}))")
    k = nvars
    for i in range(nvars):
        for j in range(i, nvars):
            lines.append(f"H[{i}, {j}] = {pycode(reduced[k])}")
            if i != j:
                lines.append(f"H[{j}, {i}] = H[{i}, {j}]")
            k += 1
    lines.append("return g, H")
    body = "\n".join("    " + ln for ln in lines)
    return FUNC_TEMPLATE.format(name=name, body=body)


def point_line_d2() -> sp.Expr:
    p, e0, e1 = _vec("p", 0), _vec("e0", 3), _vec("e1", 6)
    u = e1 - e0
    c = (p - e0).cross(u)
    return c.dot(c) / u.dot(u)


def point_plane_d2() -> sp.Expr:
    p, t0, t1, t2 = _vec("p", 0), _vec("t0", 3), _vec("t1", 6), _vec("t2", 9)
    n = (t1 - t0).cross(t2 - t0)
    s = (p - t0).dot(n)
    return s * s / n.dot(n)


def line_line_d2() -> sp.Expr:
    a0, a1, b0, b1 = _vec("a0", 0), _vec("a1", 3), _vec("b0", 6), _vec("b1", 9)
    n = (a1 - a0).cross(b1 - b0)
    s = (b0 - a0).dot(n)
    return s * s / n.dot(n)


def main() -> None:
    parts = [HEADER]
    parts.append(_emit("point_line_grad_hess", point_line_d2(), 9))
    parts.append(_emit("point_plane_grad_hess", point_plane_d2(), 12))
    parts.append(_emit("line_line_grad_hess", line_line_d2(), 12))
    out = "".join(parts)
    with open("src/ipcsim/_distance_derivs.py", "w") as fh:
        fh.write(out)
    print(f"wrote src/ipcsim/_distance_derivs.py ({len(out)} bytes)")


if __name__ == "__main__":
    main()
