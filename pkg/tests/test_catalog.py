import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cscprod import catalog as cat
from cscprod import geometry as geo
from cscprod.catalog import InadmissibleError, FocalPointError

from conftest import catalog_charts, interior_points

S3 = cat.ModelConfig(3, 1)
H3 = cat.ModelConfig(3, -1)


# -- profiles ---------------------------------------------------------------


def quad_height(k_mp, s):
    """h(s) - h(0) from the unit-speed condition, by quadrature (h' >= 0 on the range used)."""
    with mpmath.workdps(30):
        return float(mpmath.quad(lambda t: mpmath.sqrt(1 - mpmath.diff(k_mp, t) ** 2), [0, s]))


def test_spherical_S_values():
    p = cat.profile_spherical_S(4.0)
    assert p.k(0.0) == pytest.approx(math.pi / 2, abs=1e-15)
    assert p.h(0.0) == pytest.approx(0.0, abs=1e-15)
    assert p.k(math.pi / 4) == pytest.approx(math.pi / 3, abs=1e-15)
    oracle = quad_height(lambda t: mpmath.acos(mpmath.sin(2 * t) / 2), mpmath.pi / 4)
    assert p.h(math.pi / 4) == pytest.approx(oracle, abs=1e-12)
    assert p.h(math.pi / 4) == pytest.approx(0.475713075448173, abs=1e-14)


def test_spherical_H_values():
    p0 = cat.profile_spherical_H(0.0)
    assert p0.k(0.0) == 0.0 and p0.h(0.0) == 0.0
    assert p0.h(1.0) == pytest.approx(math.sqrt(2) - 1, abs=1e-15)
    p = cat.profile_spherical_H(-0.5)
    with mpmath.workdps(30):
        k1 = float(mpmath.asinh(mpmath.sqrt(2) * mpmath.sinh(1 / mpmath.sqrt(2))))
        oracle = quad_height(
            lambda t: mpmath.asinh(mpmath.sqrt(2) * mpmath.sinh(t / mpmath.sqrt(2))), 1
        )
    assert p.k(1.0) == pytest.approx(k1, abs=1e-14)
    assert p.k(1.0) == pytest.approx(0.940518336367696, abs=1e-14)
    assert p.h(1.0) - p.h(0.0) == pytest.approx(oracle, abs=1e-12)
    pp = cat.profile_spherical_H(0.7)
    oracle = quad_height(
        lambda t: mpmath.asinh(mpmath.sin(mpmath.sqrt(0.7) * t) / mpmath.sqrt(0.7)), 0.5
    )
    assert pp.h(0.5) - pp.h(0.0) == pytest.approx(oracle, abs=1e-12)


def test_hyperbolic_H_values():
    p = cat.profile_hyperbolic_H(-0.25)
    assert p.k(0.0) == pytest.approx(math.acosh(2.0), abs=1e-15)
    assert p.h(0.0) == pytest.approx(math.sqrt(3) * math.log(math.sqrt(3) / 2), abs=1e-15)
    assert p.arclength_residual(0.7) < 1e-10
    oracle = quad_height(lambda t: mpmath.acosh(2 * mpmath.cosh(t / 2)), 0.7)
    assert p.h(0.7) - p.h(0.0) == pytest.approx(oracle, abs=1e-12)


def test_parabolic_H_values():
    p = cat.profile_parabolic_H(-0.5)
    assert p.k(0.0) == 1.0 and p.h(0.0) == 0.0
    assert p.k(1.0) == pytest.approx(math.exp(1 / math.sqrt(2)), rel=1e-15)
    assert p.h(1.0) == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    for s in np.linspace(-2, 2, 9):
        assert p.arclength_residual(s) < 1e-14


PROFILE_CASES = [
    (cat.SPHERICAL_S, c) for c in (1.1, 1.5, 2.0, 4.0, 10.0)
] + [
    (cat.SPHERICAL_H, c) for c in (-0.9, -0.5, 0.0, 0.3, 0.7, 3.0)
] + [
    (cat.HYPERBOLIC_H, c) for c in (-0.9, -0.5, -0.25, -0.1)
] + [
    (cat.PARABOLIC_H, c) for c in (-0.75, -0.5)
]


@pytest.mark.parametrize("kind,c", PROFILE_CASES)
def test_arclength_at_fifty_points(kind, c):
    p = cat.profile(kind, c)
    lo, hi = p.s_domain
    lo, hi = (max(lo, -2.0), min(hi, 2.0))
    w = hi - lo
    for s in np.linspace(lo + 1e-3 * w, hi - 1e-3 * w, 50):
        assert p.arclength_residual(s) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.floats(1.01, 20.0), st.floats(0.02, 0.98))
def test_spherical_S_arclength_property(c, frac):
    p = cat.profile_spherical_S(c)
    assert p.arclength_residual(frac * math.pi / math.sqrt(c)) < 1e-10


@pytest.mark.parametrize(
    "maker,c,match",
    [
        (cat.profile_spherical_S, 0.5, "Theorem 4.1 requires c ≥ 1"),
        (cat.profile_spherical_S, 1.0, "Theorem 4.1"),
        (cat.profile_spherical_H, -1.0, "Theorem 4.2 requires c ≥ −1"),
        (cat.profile_hyperbolic_H, 0.0, r"Theorem 4.2\(ii\)"),
        (cat.profile_parabolic_H, -1.5, r"Theorem 4.2\(ii\)"),
    ],
)
def test_profile_admissibility(maker, c, match):
    with pytest.raises(InadmissibleError, match=match):
        maker(c)


# -- warped products --------------------------------------------------------


def test_warped_examples():
    w = cat.warped_rho(1.0, 1, 0.0)
    for s in np.linspace(0.1, 3.0, 7):
        assert w.rho(s) == pytest.approx(math.sin(s), abs=1e-15)
        assert w.first_integral_residual(s) < 1e-12 and w.ode_residual(s) < 1e-12
    e = cat.warped_rho(-1.0, 0, 0.0)
    assert e.rho(0.7) == pytest.approx(math.exp(0.7))
    assert e.first_integral_residual(0.7) < 1e-12
    sh = cat.warped_rho(-1.0, 1, 0.0)
    assert sh.rho(0.7) == pytest.approx(math.sinh(0.7))
    assert sh.first_integral_residual(0.7) < 1e-12


@pytest.mark.parametrize("c,delta", [(1.0, 0), (1.0, -1), (0.0, -1)])
def test_warped_inadmissible(c, delta):
    with pytest.raises(InadmissibleError, match="no warped solution"):
        cat.warped_rho(c, delta)


# -- rotation charts --------------------------------------------------------


def test_rotation_S_membership_and_metric():
    chart = cat.rotation_chart(cat.SPHERICAL_S, 4.0, S3)
    u = np.array([0.4, 0.3, 0.5])
    assert chart.quadric_residual(chart.point(u)) < 1e-12
    fd = geo.fundamental_data(chart, u)
    k = chart.params["profile"].k(0.4)
    expected = np.diag([1.0, math.cos(k) ** 2, math.cos(k) ** 2 * math.sin(0.3) ** 2])
    assert np.abs(fd.metric - expected).max() < 1e-10


def test_rotation_parabolic_metric():
    chart = cat.rotation_chart(cat.PARABOLIC_H, -0.5, H3)
    u = np.array([0.3, 0.2, -0.4])
    fd = geo.fundamental_data(chart, u)
    k = math.exp(math.sqrt(0.5) * 0.3)
    assert np.abs(fd.metric - np.diag([1.0, k * k, k * k])).max() < 1e-10
    assert fd.point[0] > 0


def test_rotation_model_mismatch():
    with pytest.raises(InadmissibleError, match="Theorem 4.1"):
        cat.rotation_chart(cat.SPHERICAL_S, 4.0, H3)
    with pytest.raises(InadmissibleError, match="Theorem 4.2"):
        cat.rotation_chart(cat.HYPERBOLIC_H, -0.5, S3)


@pytest.mark.parametrize("label,chart", catalog_charts(), ids=lambda v: v if isinstance(v, str) else "")
def test_membership_everywhere(label, chart):
    for u in interior_points(chart, 30, seed=3):
        x = chart.point(u)
        assert chart.quadric_residual(x) < 1e-12 * max(1.0, np.abs(x).max() ** 2)
        if chart.model.epsilon == -1:
            assert x[0] > 0


# -- parallel surfaces ------------------------------------------------------


def test_admissible_parallel_range_examples():
    lo, hi = cat.admissible_parallel_range([1.0, -1.0], 1)
    assert (lo, hi) == pytest.approx((-math.pi / 4, math.pi / 4), abs=1e-15)
    c = 1 / math.tanh(0.5)
    assert cat.admissible_parallel_range([c, -c], -1) == pytest.approx((-0.5, 0.5), abs=1e-15)
    assert cat.admissible_parallel_range([0.5, -0.5], -1) == (-math.inf, math.inf)


def test_parallel_shape_operator_examples():
    s = math.pi / 8
    A_s = cat.parallel_shape_operator(np.diag([1.0, -1.0]), s, 1)
    assert np.allclose(A_s, np.diag([1 / math.tan(s), -math.tan(s)]), atol=1e-13)
    assert np.linalg.det(A_s) == pytest.approx(-1.0, abs=1e-12)
    assert np.allclose(cat.parallel_shape_operator(np.zeros((2, 2)), 0.3, 1), math.tan(0.3) * np.eye(2))
    assert np.allclose(cat.parallel_shape_operator(np.diag([2.0, 0.0]), 0.0, 1), np.diag([2.0, 0.0]))
    with pytest.raises(FocalPointError, match="focal distance"):
        cat.parallel_shape_operator(np.diag([1.0, -1.0]), math.pi / 4, 1)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([1, -1]), st.floats(0.05, 1.5), st.floats(-0.95, 0.95))
def test_flatness_preserved(eps, theta, frac):
    # flat base surfaces: k1 k2 = -eps
    if eps == 1:
        k = np.array([1 / math.tan(theta), -math.tan(theta)])
    else:
        k = np.array([1 / math.tanh(theta), math.tanh(theta)])
    lo, hi = cat.admissible_parallel_range(k, eps)
    lo, hi = max(lo, -3.0), min(hi, 3.0)
    s = 0.5 * (lo + hi) + frac * 0.5 * (hi - lo)
    A_s = cat.parallel_shape_operator(np.diag(k), s, eps)
    assert abs(np.linalg.det(A_s) + eps) < 1e-10 * max(1.0, np.abs(A_s).max())


def test_parallel_of_clifford_is_clifford():
    fam = cat.clifford_family(math.pi / 4, 1)
    chart = cat.parallel_chart(fam, math.pi / 8)
    target = cat.clifford_base_chart(3 * math.pi / 8, 1)
    for t in interior_points(chart, 10):
        assert np.abs(chart.point(t) - target.point(t)).max() < 1e-12
    base = cat.parallel_chart(fam, 0.0)
    t = np.array([0.4, -1.1])
    assert np.array_equal(base.point(t), fam.base.point(t))
    assert np.allclose(cat.parallel_normal(fam, 0.0, t), fam.normal_at(t), atol=0)


@pytest.mark.parametrize("eps,theta0,s", [(1, math.pi / 4, math.pi / 8), (-1, 0.5, 0.2), (-1, 0.5, -0.3)])
def test_parallel_normal_properties(eps, theta0, s):
    fam = cat.clifford_family(theta0, eps)
    chart = cat.parallel_chart(fam, s)
    sig = chart.signature
    for t in interior_points(chart, 10):
        jp = chart.evaluate(t)
        N = cat.parallel_normal(fam, s, t)
        assert chart.quadric_residual(jp.value) < 1e-12
        assert abs(sig.diag * N @ N - 1) < 1e-12
        assert np.abs(jp.first @ (sig.diag * N)).max() < 1e-12
        assert abs(jp.value @ (sig.diag * N)) < 1e-12


def test_parallel_chart_rejects_focal_distance():
    fam = cat.clifford_family(math.pi / 4, 1)
    with pytest.raises(FocalPointError, match="parallel focal point"):
        cat.parallel_chart(fam, math.pi / 4)
    hfam = cat.clifford_family(0.5, -1)
    with pytest.raises(FocalPointError, match="parallel focal point"):
        cat.parallel_chart(hfam, -0.6)


@pytest.mark.parametrize("eps,theta0", [(1, math.pi / 4), (1, 0.3), (-1, 0.5), (-1, 1.0)])
def test_parallel_shape_matches_measured(eps, theta0):
    fam = cat.clifford_family(theta0, eps)
    lo, hi = fam.s_interval()
    hi = min(hi, 1.5)
    x = np.array([0.2, -0.4])
    _, _, A = fam.shape_operator(x)
    for s in np.linspace(lo, hi, 12)[1:-1]:
        chart = cat.parallel_chart(fam, s)
        measured, *_ = geo.factor_shape_operator(chart, x, orient=cat.parallel_normal(fam, s, x))
        predicted = cat.parallel_shape_operator(A, s, eps)
        assert np.abs(measured - predicted).max() < 1e-8


# -- constant angle and Clifford charts ---------------------------------


def test_constant_angle_requires_positive_B():
    fam = cat.clifford_family(math.pi / 4, 1)
    with pytest.raises(InadmissibleError):
        cat.constant_angle_chart(fam, 0.0)


def test_clifford_chart_points():
    f = cat.clifford_chart(math.pi / 4, 1.0, 1)
    r = math.sqrt(2) / 2
    assert np.allclose(f.point([0, 0, math.pi / 4]), [r, 0, r, 0, math.pi / 4], atol=1e-15)
    g = cat.clifford_chart(0.5, 1.0, -1)
    assert np.allclose(g.point([0, 0, 0.5]), [math.cosh(0.5), 0, math.sinh(0.5), 0, 0.5], atol=1e-15)


@pytest.mark.parametrize("eps,theta0", [(1, math.pi / 4), (-1, 0.5)])
@pytest.mark.parametrize("B", [0.5, 2.0])
def test_family_chart_is_reparametrized_clifford(eps, theta0, B):
    # f(t, s) = clifford(t, s + theta0) - B theta0 d/dt
    fam_chart = cat.constant_angle_chart(cat.clifford_family(theta0, eps), B)
    explicit = cat.clifford_chart(theta0, B, eps)
    shift = np.zeros(5)
    shift[-1] = B * theta0
    for u in interior_points(fam_chart, 10):
        v = u + np.array([0, 0, theta0])
        assert np.abs(fam_chart.point(u) - (explicit.func(list(v)) - shift)).max() < 1e-12


@pytest.mark.parametrize("eps", [1, -1])
def test_clifford_chart_curvature(eps):
    chart = cat.clifford_chart(math.pi / 4, 1.0, eps)
    rng = np.random.default_rng(0)
    for u in interior_points(chart, 10):
        fd = geo.fundamental_data(chart, u)
        assert fd.nu == pytest.approx(1 / math.sqrt(2), abs=1e-12)
        for _ in range(5):
            X, Y = rng.normal(size=(2, 3))
            assert geo.sectional_curvature(fd, X, Y) == pytest.approx(eps / 2, abs=1e-8)


def test_clifford_chart_B_zero_is_slice_piece():
    chart = cat.clifford_chart(math.pi / 4, 0.0, 1)
    u = np.array([0.1, 0.2, 0.7])
    assert chart.point(u)[-1] == 0.0


# -- slices and products ------------------------------------------------


def test_slice_height_and_T():
    chart = cat.slice_chart(2.0, S3)
    for u in interior_points(chart, 5):
        fd = geo.fundamental_data(chart, u)
        assert fd.height == 2.0
        assert fd.nu == pytest.approx(1.0, abs=1e-14)
        assert np.abs(fd.T).max() < 1e-14
        assert np.abs(fd.A_N).max() < 1e-13


@pytest.mark.parametrize(
    "base",
    [
        cat.horosphere_chart(H3),
        cat.horosphere_chart(cat.ModelConfig(4, -1)),
        cat.clifford_base_chart(math.pi / 4, 1),
        cat.clifford_base_chart(0.5, -1),
    ],
    ids=["horosphere3", "horosphere4", "clifford-S3", "clifford-H3"],
)
def test_products_over_flat_bases_are_flat(base):
    chart = cat.product_chart(base)
    rng = np.random.default_rng(1)
    n = chart.n_params
    for u in interior_points(chart, 8):
        fd = geo.fundamental_data(chart, u)
        assert abs(fd.nu) < 1e-14 and fd.norm(fd.T) == pytest.approx(1.0, abs=1e-14)
        for _ in range(5):
            X, Y = rng.normal(size=(2, n))
            assert abs(geo.sectional_curvature(fd, X, Y)) < 1e-10


def test_product_chart_needs_factor_chart():
    with pytest.raises(ValueError):
        cat.product_chart(cat.slice_chart(0.0, S3))
