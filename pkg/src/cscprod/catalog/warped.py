"""Warping functions rho for which ds^2 + rho(s)^2 g_delta has constant curvature c."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .. import jets
from .base import InadmissibleError


@dataclass(frozen=True, eq=False)
class WarpedSolution:
    c: float
    delta: int
    shift: float
    rho: Callable

    def _jet(self, s):
        return self.rho(jets.seed([s], 0))

    def first_integral_residual(self, s: float) -> float:
        """|rho'^2 + c rho^2 - delta|."""
        r = self._jet(s)
        return abs(r.grad[0] ** 2 + self.c * r.val**2 - self.delta)

    def ode_residual(self, s: float) -> float:
        """|rho'' + c rho|."""
        r = self._jet(s)
        return abs(r.hess[0, 0] + self.c * r.val)


def warped_rho(
    c: float, delta: int, shift: float = 0.0, sign: int = 1, amplitude: float = 1.0
) -> WarpedSolution:
    """Closed-form warping function for curvature ``c`` over Q_delta.

    ``shift`` is the phase theta0 (sin/sinh/cosh forms) or the offset s0
    (linear and exponential forms); ``sign`` picks the +- branch of those
    two forms, and ``amplitude`` is the constant used when c = delta = 0.
    """
    if delta not in (-1, 0, 1):
        raise ValueError(f"delta must be -1, 0 or 1, got {delta!r}")
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")

    if c > 0:
        if delta != 1:
            raise InadmissibleError(f"no warped solution: c > 0 forces delta = 1, got {delta}")
        r = math.sqrt(c)
        rho = lambda s: jets.sin(r * s + shift) / r  # noqa: E731
    elif c == 0:
        if delta == 1:
            rho = lambda s: sign * s + shift  # noqa: E731
        elif delta == 0:
            rho = lambda s: 0.0 * s + amplitude  # noqa: E731
        else:
            raise InadmissibleError("no warped solution: c = 0 requires delta in {0, 1}")
    else:
        r = math.sqrt(-c)
        if delta == -1:
            rho = lambda s: jets.cosh(r * s + shift) / r  # noqa: E731
        elif delta == 0:
            rho = lambda s: jets.exp(sign * r * s + shift)  # noqa: E731
        else:
            rho = lambda s: jets.sinh(r * s + shift) / r  # noqa: E731
    return WarpedSolution(c, delta, shift, rho)
