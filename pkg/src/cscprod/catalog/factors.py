"""Coordinates on the unit sphere, hyperbolic space and horospheres.

Every ``*_point`` function takes a list of parameters (floats or jets) and
returns ambient components, so it can be composed into chart maps.
"""

from __future__ import annotations

import math

import numpy as np

from .. import jets

HYPERBOLIC_RADIUS = 1.5


def sphere_point(t):
    """Nested angular coordinates on S^m, m = len(t), as m+1 components."""
    m = len(t)
    out = []
    prod = 1.0
    for i in range(m):
        out.append(prod * jets.cos(t[i]))
        prod = prod * jets.sin(t[i])
    out.append(prod)
    return out


def sphere_box(m: int):
    lower = np.zeros(m)
    upper = np.full(m, math.pi)
    if m >= 1:
        lower[-1], upper[-1] = -math.pi, math.pi
    return lower, upper


def sphere_metric(t) -> np.ndarray:
    """Round metric of S^m in nested angles: diag(1, sin^2 t1, ...)."""
    t = np.asarray(t, dtype=float)
    m = t.shape[0]
    d = np.ones(m)
    for i in range(1, m):
        d[i] = d[i - 1] * math.sin(t[i - 1]) ** 2
    return np.diag(d)


def hyperbolic_point(u):
    """Polar coordinates on H^m in L^{m+1}; the timelike component comes first."""
    m = len(u)
    r = u[0]
    if m == 1:
        return [jets.cosh(r), jets.sinh(r)]
    sh = jets.sinh(r)
    return [jets.cosh(r)] + [sh * p for p in sphere_point(u[1:])]


def hyperbolic_box(m: int, radius: float = HYPERBOLIC_RADIUS):
    if m == 1:
        return np.array([-radius]), np.array([radius])
    lo, hi = sphere_box(m - 1)
    return np.concatenate([[0.0], lo]), np.concatenate([[radius], hi])


def hyperbolic_metric(u) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    m = u.shape[0]
    g = np.zeros((m, m))
    g[0, 0] = 1.0
    if m > 1:
        g[1:, 1:] = math.sinh(u[0]) ** 2 * sphere_metric(u[1:])
    return g


SQRT_HALF = math.sqrt(0.5)


def from_null_frame(a):
    """Standard coordinates of sum a_i e_i for the pseudo-orthonormal frame

    e_1 = (d1 + d_{m})/sqrt2, e_{m} = (-d1 + d_{m})/sqrt2, e_j = d_j otherwise,

    where m = len(a) and <e_1, e_m> = 1, <e_1, e_1> = <e_m, e_m> = 0 in the
    Lorentzian metric. With a_1 > 0 and a_m < 0 the point lands on the sheet
    x_1 > 0.
    """
    a1, am = a[0], a[-1]
    return [(a1 - am) * SQRT_HALF] + list(a[1:-1]) + [(a1 + am) * SQRT_HALF]


def horosphere_point(t):
    """Horosphere of H^m (m = len(t) + 1) in flat coordinates t."""
    q = 0.0
    for ti in t:
        q = q + ti * ti
    return from_null_frame([1.0] + list(t) + [-0.5 - 0.5 * q])
