"""
Rotation hypersurfaces of constant curvature
============================================

Build one rotation hypersurface of each kind, sample random tangent planes
and watch the sectional curvature stay pinned at c.
"""

import numpy as np

from cscprod import catalog as cat
from cscprod import geometry as geo

rng = np.random.default_rng(0)

# kind, epsilon, c: spherical orbits in S^3 x R and the three orbit types of H^3 x R
cases = [
    (cat.SPHERICAL_S, 1, 4.0),
    (cat.SPHERICAL_H, -1, 0.7),
    (cat.HYPERBOLIC_H, -1, -0.25),
    (cat.PARABOLIC_H, -1, -0.5),
]

for kind, eps, c in cases:
    chart = cat.rotation_chart(kind, c, cat.ModelConfig(3, eps))
    ks = []
    for _ in range(10):
        u = chart.lower + rng.random(3) * (chart.upper - chart.lower)
        fd = geo.fundamental_data(chart, u)
        X, Y = rng.normal(size=(2, 3))
        ks.append(geo.sectional_curvature(fd, X, Y))
    print(f"{chart.family:10s} c = {c:+.2f}   K in [{min(ks):+.12f}, {max(ks):+.12f}]")

# the profile curve is unit speed; print it along the s-range
prof = cat.profile_spherical_S(4.0)
print("\n   s        k(s)       h(s)   |k'^2+h'^2-1|")
for s in np.linspace(0.05, np.pi / 2 - 0.05, 6):
    print(f"{s:6.3f}  {prof.k(s):9.6f}  {prof.h(s):9.6f}   {prof.arclength_residual(s):.1e}")

# the induced metric is the warped product ds^2 + rho(s)^2 g_orbit
chart = cat.rotation_chart(cat.HYPERBOLIC_H, -0.25, cat.ModelConfig(3, -1))
ws = cat.matching_warped_solution(cat.HYPERBOLIC_H, -0.25)
u = np.array([0.3, 0.4, 1.0])
fd = geo.fundamental_data(chart, u)
rho = ws.rho(u[0])
print("\ninduced metric:\n", np.round(fd.metric, 12))
print("rho^2 * orbit metric:\n", np.round(rho**2 * cat.factor_metric(cat.HYPERBOLIC_H, u[1:]), 12))
