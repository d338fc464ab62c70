"""Parallel hypersurfaces in Q_eps^n and the constant angle hypersurfaces built on them."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import jets
from ..pseudo_linalg import generalized_eigen
from .base import DOMAIN_MARGIN, Chart, FocalPointError, InadmissibleError, ModelConfig

# cap for parallel ranges that are unbounded (eps = -1 without focal values)
S_CAP = 2.0


def cos_eps(s, eps):
    return jets.cos(s) if eps == 1 else jets.cosh(s)


def sin_eps(s, eps):
    return jets.sin(s) if eps == 1 else jets.sinh(s)


def admissible_parallel_range(principal_curvatures, epsilon: int) -> tuple[float, float]:
    """Largest open interval around 0 free of focal distances.

    For eps = +1 each curvature is written cot(theta), theta in (0, pi), and
    the range is (theta_max - pi, theta_min). For eps = -1 only curvatures
    with |lambda| > 1 are focal, lambda = coth(theta); the range runs from the
    greatest negative theta to the least positive one.
    """
    lam = np.asarray(principal_curvatures, dtype=float)
    if epsilon == 1:
        theta = np.arctan2(1.0, lam)
        return float(theta.max() - math.pi), float(theta.min())
    big = lam[np.abs(lam) > 1.0]
    theta = np.arctanh(1.0 / big) if big.size else np.array([])
    pos = theta[theta > 0]
    neg = theta[theta < 0]
    lo = float(neg.max()) if neg.size else -math.inf
    hi = float(pos.min()) if pos.size else math.inf
    return lo, hi


def parallel_shape_operator(A, s: float, epsilon: int) -> np.ndarray:
    """Shape operator of the parallel hypersurface at distance ``s``.

    Evaluates (cot_eps(s) I - A)^{-1} (cot_eps(s) A + eps I), written with
    C = cos_eps(s), S = sin_eps(s) cleared so that s = 0 returns A itself.
    """
    A = np.asarray(A, dtype=float)
    m = A.shape[0]
    C, S = cos_eps(s, epsilon), sin_eps(s, epsilon)
    M = C * np.eye(m) - S * A
    if np.linalg.cond(M) > 1e12:
        raise FocalPointError(f"focal distance: s = {s} makes cot_eps(s) a principal curvature")
    return np.linalg.solve(M, C * A + epsilon * S * np.eye(m))


@dataclass(frozen=True, eq=False)
class ParallelFamily:
    """A hypersurface g of Q_eps^n with a closed-form unit normal N.

    ``base`` is a factor chart (n-1 parameters into E^{n+1}); ``normal``
    maps the same parameters to the components of N and must accept jets.
    """

    base: Chart
    normal: Callable
    name: str = "parallel"
    params: dict = field(default_factory=dict)
    s_cap: float = S_CAP

    @property
    def epsilon(self) -> int:
        return self.base.model.epsilon

    def normal_at(self, x) -> np.ndarray:
        return np.array([float(v) for v in self.normal(list(map(float, x)))])

    def shape_operator(self, x) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(metric, second fundamental form, shape operator) of g w.r.t. N at x."""
        jp = self.base.evaluate(x)
        sig = self.base.signature
        N = self.normal_at(x)
        D = jp.first * sig.diag
        g = D @ jp.first.T
        h = jp.second @ (sig.diag * N)
        return g, h, np.linalg.solve(g, h)

    def principal_curvatures(self, x) -> np.ndarray:
        g, h, _ = self.shape_operator(x)
        return generalized_eigen(g, h)[0]

    def s_range(self, x) -> tuple[float, float]:
        return admissible_parallel_range(self.principal_curvatures(x), self.epsilon)

    def s_interval(self, samples: int = 3) -> tuple[float, float]:
        """Admissible s-range shared by sampled points of the base box, capped."""
        lo, hi = -self.s_cap, self.s_cap
        axes = [
            np.linspace(a, b, samples + 2)[1:-1]
            for a, b in zip(self.base.lower, self.base.upper)
        ]
        for x in itertools.product(*axes):
            a, b = self.s_range(np.array(x))
            lo, hi = max(lo, a), min(hi, b)
        return lo, hi


def parallel_point(fam: ParallelFamily):
    """Map (x, s) -> C_eps(s) g(x) + S_eps(s) N(x) as a function of the parameters."""
    eps = fam.epsilon

    def f(u):
        x, t = u[:-1], u[-1]
        C, S = cos_eps(t, eps), sin_eps(t, eps)
        return [C * gi + S * ni for gi, ni in zip(fam.base.func(x), fam.normal(x))]

    return f


def _require_admissible(fam: ParallelFamily, s: float, samples: int = 3):
    lo, hi = fam.s_interval(samples)
    if not lo < s < hi:
        raise FocalPointError(
            f"parallel focal point: s = {s} outside admissible range ({lo}, {hi})"
        )
    # rounding can leave a focal s just inside the range; the differential then drops rank
    lift = parallel_point(fam)
    diag = fam.base.model.factor_signature.diag
    axes = [np.linspace(a, b, samples + 2)[1:-1] for a, b in zip(fam.base.lower, fam.base.upper)]
    for x in itertools.product(*axes):
        D = jets.lift(lift(jets.seed_all(list(x) + [s])), len(x) + 1).first[:-1]
        if abs(np.linalg.det((D * diag) @ D.T)) < 1e-10:
            raise FocalPointError(f"parallel focal point: differential of g_s degenerates at s = {s}")


def parallel_chart(fam: ParallelFamily, s: float) -> Chart:
    """The parallel hypersurface g_s as a chart into Q_eps^n."""
    if s != 0.0:
        _require_admissible(fam, s)
    lift = parallel_point(fam)
    base = fam.base
    return Chart(
        model=base.model,
        func=lambda x: lift(list(x) + [s]),
        lower=base.lower,
        upper=base.upper,
        family=f"{fam.name}-parallel",
        params={**fam.params, "s": s},
        ambient="factor",
    )


def parallel_normal(fam: ParallelFamily, s: float, x) -> np.ndarray:
    """Unit normal N_s = -eps S_eps(s) g + C_eps(s) N of g_s inside Q_eps^n."""
    eps = fam.epsilon
    C, S = cos_eps(s, eps), sin_eps(s, eps)
    g = np.array([float(v) for v in fam.base.func(list(map(float, x)))])
    return -eps * S * g + C * fam.normal_at(x)


def constant_angle_chart(fam: ParallelFamily, B: float) -> Chart:
    """f(x, s) = g_s(x) + B s d/dt, a hypersurface of Q_eps^n x R."""
    if not B > 0:
        raise InadmissibleError(f"constant angle construction needs B > 0, got {B}")
    lo, hi = fam.s_interval()
    w = hi - lo
    lo, hi = lo + DOMAIN_MARGIN * w, hi - DOMAIN_MARGIN * w
    lift = parallel_point(fam)
    base = fam.base

    def f(u):
        return lift(u) + [B * u[-1]]

    a = math.sqrt(1 + B * B)
    model = ModelConfig(base.model.n, base.model.epsilon)
    return Chart(
        model=model,
        func=f,
        lower=np.concatenate([base.lower, [lo]]),
        upper=np.concatenate([base.upper, [hi]]),
        family="constant-angle",
        params={**fam.params, "B": B, "a": a, "c": model.epsilon / a**2, "family": fam},
    )


def constant_angle_normal(fam: ParallelFamily, B: float, u) -> np.ndarray:
    """eta = -(B/a) N_s + (1/a) d/dt at parameters u = (x, s)."""
    u = np.asarray(u, dtype=float)
    a = math.sqrt(1 + B * B)
    Ns = parallel_normal(fam, u[-1], u[:-1])
    return np.concatenate([-B / a * Ns, [1.0 / a]])


# -- flat tori ------------------------------------------------------------


def clifford_base_chart(theta0: float, epsilon: int) -> Chart:
    """Flat torus in S^3 (eps=+1) or its hyperbolic analog H^1 x S^1 in H^3."""
    if epsilon == 1:
        if not 0 < theta0 < math.pi / 2:
            raise ValueError(f"Clifford angle must lie in (0, pi/2), got {theta0}")
        c0, s0 = math.cos(theta0), math.sin(theta0)

        def g(t):
            return [
                c0 * jets.cos(t[0]), c0 * jets.sin(t[0]),
                s0 * jets.cos(t[1]), s0 * jets.sin(t[1]),
            ]

        lower, upper = np.array([-math.pi, -math.pi]), np.array([math.pi, math.pi])
    else:
        if not theta0 > 0:
            raise ValueError(f"hyperbolic Clifford radius parameter must be > 0, got {theta0}")
        c0, s0 = math.cosh(theta0), math.sinh(theta0)

        def g(t):
            return [
                c0 * jets.cosh(t[0]), c0 * jets.sinh(t[0]),
                s0 * jets.cos(t[1]), s0 * jets.sin(t[1]),
            ]

        lower, upper = np.array([-1.5, -math.pi]), np.array([1.5, math.pi])
    w = upper - lower
    return Chart(
        model=ModelConfig(3, epsilon),
        func=g,
        lower=lower + DOMAIN_MARGIN * w,
        upper=upper - DOMAIN_MARGIN * w,
        family="clifford-torus",
        params={"theta0": theta0},
        ambient="factor",
    )


def clifford_normal(theta0: float, epsilon: int) -> Callable:
    if epsilon == 1:
        c0, s0 = math.cos(theta0), math.sin(theta0)

        def N(t):
            return [
                -s0 * jets.cos(t[0]), -s0 * jets.sin(t[0]),
                c0 * jets.cos(t[1]), c0 * jets.sin(t[1]),
            ]
    else:
        c0, s0 = math.cosh(theta0), math.sinh(theta0)

        def N(t):
            return [
                s0 * jets.cosh(t[0]), s0 * jets.sinh(t[0]),
                c0 * jets.cos(t[1]), c0 * jets.sin(t[1]),
            ]

    return N


def clifford_family(theta0: float, epsilon: int) -> ParallelFamily:
    return ParallelFamily(
        base=clifford_base_chart(theta0, epsilon),
        normal=clifford_normal(theta0, epsilon),
        name="clifford",
        params={"theta0": theta0},
    )


def clifford_chart(theta0: float, B: float, epsilon: int) -> Chart:
    """Constant angle hypersurface over a flat torus in closed form.

    f(t1, t2, s) = (cos s cos t1, cos s sin t1, sin s cos t2, sin s sin t2, B s)
    for eps = +1 and the cosh/sinh analog for eps = -1. The torus angle has
    been absorbed into s, so ``theta0`` only labels the chart; B = 0 gives an
    open piece of a slice.
    """
    if B < 0:
        raise ValueError(f"B must be >= 0, got {B}")
    a = math.sqrt(1 + B * B)
    if epsilon == 1:

        def f(u):
            t1, t2, s = u
            cs, sn = jets.cos(s), jets.sin(s)
            return [cs * jets.cos(t1), cs * jets.sin(t1), sn * jets.cos(t2), sn * jets.sin(t2), B * s]

        lower, upper = np.array([-math.pi, -math.pi, 0.0]), np.array([math.pi, math.pi, math.pi / 2])
    else:

        def f(u):
            t1, t2, s = u
            cs, sn = jets.cosh(s), jets.sinh(s)
            return [cs * jets.cosh(t1), cs * jets.sinh(t1), sn * jets.cos(t2), sn * jets.sin(t2), B * s]

        lower, upper = np.array([-1.5, -math.pi, 0.0]), np.array([1.5, math.pi, S_CAP])
    w = upper - lower
    return Chart(
        model=ModelConfig(3, epsilon),
        func=f,
        lower=lower + DOMAIN_MARGIN * w,
        upper=upper - DOMAIN_MARGIN * w,
        family="constant-angle-clifford",
        params={"theta0": theta0, "B": B, "a": a, "c": epsilon / a**2},
    )
