"""Closed-form profile curves of the constant curvature rotation hypersurfaces."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .. import jets
from .base import InadmissibleError

SPHERICAL_S = "spherical-S"
SPHERICAL_H = "spherical-H"
HYPERBOLIC_H = "hyperbolic-H"
PARABOLIC_H = "parabolic-H"

PROFILE_KINDS = (SPHERICAL_S, SPHERICAL_H, HYPERBOLIC_H, PARABOLIC_H)


@dataclass(frozen=True, eq=False)
class ProfileCurve:
    """Profile (k(s), h(s)) of a rotation hypersurface with curvature ``c``.

    ``k`` and ``h`` accept floats or jets. ``s_domain`` is the open interval
    on which the closed forms are valid (possibly infinite).
    """

    k: Callable
    h: Callable
    s_domain: tuple[float, float]
    c: float
    kind: str

    def derivatives(self, s: float):
        """(k, k', k'', h, h', h'') at ``s``."""
        js = jets.seed([s], 0)
        K, H = self.k(js), self.h(js)
        return (
            K.val, K.grad[0], K.hess[0, 0],
            H.val, H.grad[0], H.hess[0, 0],
        )

    def arclength_residual(self, s: float) -> float:
        """Defect of the unit-speed condition at ``s``.

        Uses k'^2 + h'^2 = 1, or (ln k)'^2 + h'^2 = 1 for the parabolic kind.
        """
        js = jets.seed([s], 0)
        H = self.h(js)
        if self.kind == PARABOLIC_H:
            lk = jets.log(self.k(js))
            return abs(lk.grad[0] ** 2 + H.grad[0] ** 2 - 1.0)
        K = self.k(js)
        return abs(K.grad[0] ** 2 + H.grad[0] ** 2 - 1.0)


def profile_spherical_S(c: float) -> ProfileCurve:
    if not c > 1:
        raise InadmissibleError(
            f"Theorem 4.1 requires c ≥ 1 (c = 1 is the slice); got c = {c}"
        )
    r = math.sqrt(c)
    coef = -math.sqrt((c - 1) / c)

    def k(s):
        return jets.arccos(jets.sin(r * s) / r)

    def h(s):
        sn = jets.sin(r * s)
        return coef * jets.log((jets.cos(r * s) + jets.sqrt(c - sn * sn)) / (1 + r))

    return ProfileCurve(k, h, (0.0, math.pi / r), c, SPHERICAL_S)


def profile_spherical_H(c: float) -> ProfileCurve:
    if not c > -1:
        raise InadmissibleError(
            f"Theorem 4.2 requires c ≥ −1 (c = −1 is the slice); got c = {c}"
        )
    inf = math.inf
    if c < 0:
        r = math.sqrt(-c)
        coef = math.sqrt((c + 1) / -c)

        def k(s):
            return jets.arcsinh(jets.sinh(r * s) / r)

        def h(s):
            sh = jets.sinh(r * s)
            return coef * jets.log((jets.cosh(r * s) + jets.sqrt(-c + sh * sh)) / (1 + r))

        return ProfileCurve(k, h, (-inf, inf), c, SPHERICAL_H)

    if c == 0:

        def k(s):
            return jets.arcsinh(s)

        def h(s):
            return -1.0 + jets.sqrt(1.0 + s * s)

        return ProfileCurve(k, h, (-inf, inf), c, SPHERICAL_H)

    r = math.sqrt(c)
    coef = -math.sqrt((c + 1) / c)

    def k(s):
        return jets.arcsinh(jets.sin(r * s) / r)

    def h(s):
        sn = jets.sin(r * s)
        return coef * jets.arctan(jets.cos(r * s) / jets.sqrt(c + sn * sn))

    return ProfileCurve(k, h, (0.0, math.pi / r), c, SPHERICAL_H)


def _require_open_unit(c, what):
    if not -1 < c < 0:
        raise InadmissibleError(
            f"Theorem 4.2(ii) requires −1 < c < 0 for {what} type; got c = {c}"
        )


def profile_hyperbolic_H(c: float) -> ProfileCurve:
    _require_open_unit(c, "hyperbolic")
    r = math.sqrt(-c)
    coef = math.sqrt((c + 1) / -c)

    def k(s):
        return jets.arccosh(jets.cosh(r * s) / r)

    def h(s):
        ch = jets.cosh(r * s)
        return coef * jets.log(jets.sinh(r * s) + jets.sqrt(c + ch * ch))

    return ProfileCurve(k, h, (-math.inf, math.inf), c, HYPERBOLIC_H)


def profile_parabolic_H(c: float) -> ProfileCurve:
    _require_open_unit(c, "parabolic")
    r = math.sqrt(-c)
    slope = math.sqrt(1 + c)

    def k(s):
        return jets.exp(r * s)

    def h(s):
        return slope * s

    return ProfileCurve(k, h, (-math.inf, math.inf), c, PARABOLIC_H)


def profile(kind: str, c: float) -> ProfileCurve:
    makers = {
        SPHERICAL_S: profile_spherical_S,
        SPHERICAL_H: profile_spherical_H,
        HYPERBOLIC_H: profile_hyperbolic_H,
        PARABOLIC_H: profile_parabolic_H,
    }
    try:
        return makers[kind](c)
    except KeyError:
        raise ValueError(f"unknown profile kind {kind!r}") from None
