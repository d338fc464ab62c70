from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .. import jets
from ..pseudo_linalg import Signature

# relative shrink applied to every open parameter box
DOMAIN_MARGIN = 1e-3


class InadmissibleError(ValueError):
    """Requested (family, c, epsilon, n) is excluded by the classification."""


class FocalPointError(ValueError):
    pass


@dataclass(frozen=True)
class ModelConfig:
    """Ambient Q_eps^n x R: the sphere product for eps=+1, hyperbolic for eps=-1."""

    n: int
    epsilon: int

    def __post_init__(self):
        if self.epsilon not in (-1, 1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}")
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")

    @property
    def signature(self) -> Signature:
        return Signature(self.n + 2, self.epsilon)

    @property
    def factor_signature(self) -> Signature:
        return Signature(self.n + 1, self.epsilon)


def shrink_box(lower, upper, margin: float = DOMAIN_MARGIN):
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    w = upper - lower
    return lower + margin * w, upper - margin * w


@dataclass(frozen=True, eq=False)
class Chart:
    """A parametrised immersion of an open box of R^k.

    ``ambient`` is ``"product"`` for hypersurfaces of Q_eps^n x R (k = n,
    values in E^{n+2}) and ``"factor"`` for hypersurfaces of Q_eps^n itself
    (k = n - 1, values in E^{n+1}).
    """

    model: ModelConfig
    func: Callable[[Sequence], list]
    lower: np.ndarray
    upper: np.ndarray
    family: str
    params: dict = field(default_factory=dict)
    ambient: str = "product"

    @property
    def n_params(self) -> int:
        return len(self.lower)

    @property
    def signature(self) -> Signature:
        if self.ambient == "product":
            return self.model.signature
        return self.model.factor_signature

    def contains(self, u) -> bool:
        u = np.asarray(u, dtype=float)
        return bool(np.all(u > self.lower) and np.all(u < self.upper))

    def require_inside(self, u):
        u = np.asarray(u, dtype=float)
        if u.shape != self.lower.shape:
            raise ValueError(
                f"expected {self.n_params} parameters, got shape {u.shape}"
            )
        if not self.contains(u):
            raise jets.OutsideDomainError(
                f"{self.family}: parameter {u.tolist()} outside admissible domain"
            )

    def point(self, u) -> np.ndarray:
        self.require_inside(u)
        return np.array([float(x) for x in self.func(list(map(float, u)))])

    def evaluate(self, u) -> jets.Jet2Point:
        return jets.evaluate_chart(self, u)

    def quadric_residual(self, x) -> float:
        """|eps x1^2 + ... + x_{n+1}^2 - eps| for a point of this chart."""
        eps = self.model.epsilon
        q = x[: self.model.n + 1]
        return abs(eps * q[0] ** 2 + np.sum(q[1:] ** 2) - eps)

    def center(self) -> np.ndarray:
        return 0.5 * (self.lower + self.upper)
