"""Slices Q_eps^n x {t0}, products M^{n-1} x R and the horosphere."""

from __future__ import annotations

import numpy as np

from . import factors
from .base import Chart, ModelConfig, shrink_box

PRODUCT_T_HALF_WIDTH = 1.0


def slice_chart(t0: float, model: ModelConfig) -> Chart:
    n = model.n
    if model.epsilon == 1:
        point = factors.sphere_point
        lower, upper = factors.sphere_box(n)
    else:
        point = factors.hyperbolic_point
        lower, upper = factors.hyperbolic_box(n)
    lower, upper = shrink_box(lower, upper)
    return Chart(
        model=model,
        func=lambda u: point(u) + [t0],
        lower=lower,
        upper=upper,
        family="slice",
        params={"t0": t0, "c": float(model.epsilon)},
    )


def horosphere_chart(model: ModelConfig) -> Chart:
    """Horosphere of H^n in flat coordinates, a factor chart with n-1 parameters."""
    if model.epsilon != -1:
        raise ValueError("horospheres live in hyperbolic space (epsilon = -1)")
    m = model.n - 1
    lower, upper = shrink_box(-np.ones(m), np.ones(m))
    return Chart(
        model=model,
        func=factors.horosphere_point,
        lower=lower,
        upper=upper,
        family="horosphere",
        ambient="factor",
    )


def product_chart(g: Chart, model: ModelConfig | None = None, family: str | None = None) -> Chart:
    """Riemannian product g(M^{n-1}) x R; the last parameter is the height."""
    if g.ambient != "factor":
        raise ValueError("product_chart needs a hypersurface chart of Q_eps^n")
    model = model or g.model
    lower, upper = shrink_box([-PRODUCT_T_HALF_WIDTH], [PRODUCT_T_HALF_WIDTH])

    def f(u):
        return list(g.func(u[:-1])) + [u[-1]]

    return Chart(
        model=model,
        func=f,
        lower=np.concatenate([g.lower, lower]),
        upper=np.concatenate([g.upper, upper]),
        family=family or f"product-{g.family}",
        params={**g.params, "c": 0.0},
    )
