"""Rotation hypersurfaces of S^n x R and H^n x R built from the closed-form profiles."""

from __future__ import annotations

import math

import numpy as np

from .. import jets
from . import factors
from .base import Chart, InadmissibleError, ModelConfig, shrink_box
from .profiles import (
    HYPERBOLIC_H,
    PARABOLIC_H,
    SPHERICAL_H,
    SPHERICAL_S,
    ProfileCurve,
    profile,
)
from .warped import WarpedSolution, warped_rho

# half-width of the s-box for profiles defined on all of R
PROFILE_HALF_WIDTH = 2.0

FAMILY_OF_KIND = {
    SPHERICAL_S: "rot-sph-S",
    SPHERICAL_H: "rot-sph-H",
    HYPERBOLIC_H: "rot-hyp-H",
    PARABOLIC_H: "rot-par-H",
}


def _check_model(kind, model: ModelConfig):
    if kind == SPHERICAL_S and model.epsilon != 1:
        raise InadmissibleError("Theorem 4.1: spherical rotation profile lives in S^n x R (epsilon = +1)")
    if kind != SPHERICAL_S and model.epsilon != -1:
        raise InadmissibleError(f"Theorem 4.2: {kind} rotation profile lives in H^n x R (epsilon = -1)")


def _s_interval(prof: ProfileCurve):
    lo, hi = prof.s_domain
    if prof.kind in (SPHERICAL_S, SPHERICAL_H):
        # s = 0 is on the axis (orbit radius 0) for every spherical profile
        lo = 0.0
    if math.isinf(lo):
        lo = -PROFILE_HALF_WIDTH
    if math.isinf(hi):
        hi = PROFILE_HALF_WIDTH
    return lo, hi


def factor_point(kind: str, t):
    if kind in (SPHERICAL_S, SPHERICAL_H):
        return factors.sphere_point(t)
    if kind == HYPERBOLIC_H:
        return factors.hyperbolic_point(t)
    return list(t)


def factor_metric(kind: str, t) -> np.ndarray:
    """Metric of the unit orbit: round sphere, hyperbolic space or flat R^{n-1}."""
    if kind in (SPHERICAL_S, SPHERICAL_H):
        return factors.sphere_metric(t)
    if kind == HYPERBOLIC_H:
        return factors.hyperbolic_metric(t)
    return np.eye(len(t))


def factor_box(kind: str, m: int):
    if kind in (SPHERICAL_S, SPHERICAL_H):
        return factors.sphere_box(m)
    if kind == HYPERBOLIC_H:
        return factors.hyperbolic_box(m)
    return -np.ones(m), np.ones(m)


def warping_function(kind: str, k):
    """Orbit radius as a function of k: cos k, sinh k, cosh k or k."""
    if kind == SPHERICAL_S:
        return jets.cos(k)
    if kind == SPHERICAL_H:
        return jets.sinh(k)
    if kind == HYPERBOLIC_H:
        return jets.cosh(k)
    return k


def matching_warped_solution(kind: str, c: float) -> WarpedSolution:
    """The warped-product solution the rotation metric must reproduce."""
    delta = {SPHERICAL_S: 1, SPHERICAL_H: 1, HYPERBOLIC_H: -1, PARABOLIC_H: 0}[kind]
    return warped_rho(c, delta, 0.0)


def _rotation_map(kind: str, prof: ProfileCurve, n: int):
    def f(u):
        s, t = u[0], u[1:]
        k, h = prof.k(s), prof.h(s)
        phi = factor_point(kind, t)
        if kind == SPHERICAL_S:
            rho = jets.cos(k)
            return [jets.sin(k)] + [rho * p for p in phi] + [h]
        if kind == SPHERICAL_H:
            rho = jets.sinh(k)
            return [jets.cosh(k)] + [rho * p for p in phi] + [h]
        if kind == HYPERBOLIC_H:
            ch = jets.cosh(k)
            return [ch * p for p in phi] + [jets.sinh(k), h]
        # parabolic: components in the null frame (e_1, e_2..e_n, e_{n+1})
        q = 0.0
        for ti in t:
            q = q + ti * ti
        a = [k] + [k * ti for ti in t] + [-0.5 / k - 0.5 * k * q]
        return factors.from_null_frame(a) + [h]

    return f


def rotation_chart(kind: str, c: float, model: ModelConfig) -> Chart:
    """Rotation hypersurface with constant sectional curvature ``c``.

    Parameters are (s, t_1, ..., t_{n-1}): arclength along the profile and
    coordinates on the orbit (sphere angles, hyperbolic polar coordinates or
    flat coordinates for the parabolic kind).
    """
    _check_model(kind, model)
    prof = profile(kind, c)
    n = model.n
    s_lo, s_hi = _s_interval(prof)
    t_lo, t_hi = factor_box(kind, n - 1)
    lower, upper = shrink_box(np.concatenate([[s_lo], t_lo]), np.concatenate([[s_hi], t_hi]))
    return Chart(
        model=model,
        func=_rotation_map(kind, prof, n),
        lower=lower,
        upper=upper,
        family=FAMILY_OF_KIND[kind],
        params={"c": c, "kind": kind, "profile": prof},
    )
