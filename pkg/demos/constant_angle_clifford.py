"""
Constant angle hypersurfaces over flat tori
===========================================

Slide a flat torus along its parallel family while climbing at slope B.
The result meets the vertical at a fixed angle and has curvature eps/(1+B^2).
"""

import math

import numpy as np

from cscprod import catalog as cat
from cscprod import geometry as geo

for eps, theta0 in ((1, math.pi / 4), (-1, 0.5)):
    fam = cat.clifford_family(theta0, eps)
    lo, hi = fam.s_interval()
    print(f"eps = {eps:+d}: torus principal curvatures {fam.principal_curvatures([0.1, 0.2])}")
    print(f"         parallel surfaces exist for s in ({lo:.4f}, {hi:.4f})")

    # every parallel surface is still flat: k1 k2 = -eps
    _, _, A = fam.shape_operator([0.1, 0.2])
    for s in np.linspace(lo, hi, 5)[1:-1]:
        A_s = cat.parallel_shape_operator(A, s, eps)
        print(f"         s = {s:+.3f}  det A_s = {np.linalg.det(A_s):+.15f}")

    for B in (0.5, 1.0, 2.0):
        chart = cat.constant_angle_chart(fam, B)
        a = math.sqrt(1 + B * B)
        nus, ks = [], []
        rng = np.random.default_rng(1)
        for _ in range(8):
            u = chart.lower + rng.random(3) * (chart.upper - chart.lower)
            fd = geo.fundamental_data(chart, u)
            nus.append(fd.nu)
            X, Y = rng.normal(size=(2, 3))
            ks.append(geo.sectional_curvature(fd, X, Y))
        print(
            f"   B = {B}: nu spread {np.ptp(nus):.1e} (1/a = {1 / a:.6f}),"
            f" K = {np.mean(ks):+.10f} vs eps/a^2 = {eps / a**2:+.10f}"
        )
    print()
