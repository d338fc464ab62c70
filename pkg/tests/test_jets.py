import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cscprod import catalog as cat
from cscprod import jets
from cscprod.jets import DomainError, Jet2, OutsideDomainError

from conftest import catalog_charts, interior_points


def test_seed():
    x = jets.seed([0.3, 0.7], 0)
    assert x.val == 0.3 and x.grad.tolist() == [1, 0] and not x.hess.any()
    y = jets.seed([0.3, 0.7], 1)
    assert y.val == 0.7 and y.grad.tolist() == [0, 1]
    with pytest.raises(IndexError):
        jets.seed([0.3, 0.7], 2)


def test_product_rule():
    x, y = jets.seed_all([2.0, 3.0])
    p = x * y
    assert p.val == 6.0
    assert p.grad.tolist() == [3.0, 2.0]
    assert p.hess.tolist() == [[0.0, 1.0], [1.0, 0.0]]


def test_sin_at_zero_and_arccos_half():
    s = jets.sin(jets.seed([0.0], 0))
    assert (s.val, s.grad[0], s.hess[0, 0]) == (0.0, 1.0, 0.0)
    assert jets.arccos(jets.constant(0.5, 1)).val == pytest.approx(math.pi / 3, abs=1e-15)


def test_arccos_of_sine_matches_finite_difference():
    s0 = 0.3
    j = jets.arccos(0.5 * jets.sin(2 * jets.seed([s0], 0)))
    f = lambda s: math.acos(0.5 * math.sin(2 * s))  # noqa: E731
    h = 1e-4
    fd2 = (f(s0 + h) - 2 * f(s0) + f(s0 - h)) / h**2
    assert abs(j.hess[0, 0] - fd2) < 1e-6


@pytest.mark.parametrize(
    "func,arg",
    [(jets.arccos, 1.2), (jets.log, 0.0), (jets.log, -1.0), (jets.arccosh, 0.5), (jets.sqrt, -0.1)],
)
def test_domain_errors_name_function_and_value(func, arg):
    with pytest.raises(DomainError) as info:
        func(jets.constant(arg, 1))
    assert info.value.func == func.__name__
    assert str(info.value).startswith(func.__name__)
    assert repr(arg) in str(info.value)


def test_jet_rejects_branch_points():
    # derivatives blow up at the end points, so jets refuse them
    with pytest.raises(DomainError):
        jets.arccos(jets.constant(1.0, 1))
    with pytest.raises(DomainError):
        jets.arccosh(jets.constant(1.0, 1))


def test_elementary_dispatch():
    x, y = jets.seed_all([0.5, 2.0])
    assert jets.elementary("ln", y).val == pytest.approx(math.log(2))
    assert jets.elementary("pow", x, y).val == pytest.approx(0.25)
    assert jets.elementary("/", x, y).grad == pytest.approx([0.5, -0.125])
    with pytest.raises(KeyError):
        jets.elementary("tan", x)
    with pytest.raises(TypeError):
        jets.elementary("sin", x, y)


MP_FUNCS = {
    "sin": mpmath.sin,
    "cos": mpmath.cos,
    "sinh": mpmath.sinh,
    "cosh": mpmath.cosh,
    "exp": mpmath.exp,
    "ln": mpmath.log,
    "sqrt": mpmath.sqrt,
    "arccos": mpmath.acos,
    "arcsinh": mpmath.asinh,
    "arccosh": mpmath.acosh,
    "arctan": mpmath.atan,
}
# inner argument ranges that keep every function inside its domain
SHIFT = {"arccosh": 2.0, "ln": 1.5, "sqrt": 1.5}


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(sorted(MP_FUNCS)),
    st.floats(-0.9, 0.9),
    st.floats(-0.9, 0.9),
)
def test_chain_rule_against_mpmath(tag, x0, y0):
    shift = SHIFT.get(tag, 0.0)

    def inner(x, y):
        return 0.3 * x + 0.2 * y + 0.1 * x * y + shift

    x, y = jets.seed_all([x0, y0])
    j = jets.elementary(tag, inner(x, y))
    f = lambda a, b: MP_FUNCS[tag](inner(a, b))  # noqa: E731
    with mpmath.workdps(30):
        assert abs(j.val - float(f(x0, y0))) < 1e-13
        for i, order in enumerate([(1, 0), (0, 1)]):
            assert abs(j.grad[i] - float(mpmath.diff(f, (x0, y0), order))) < 1e-12
        for (i, k), order in {(0, 0): (2, 0), (0, 1): (1, 1), (1, 1): (0, 2)}.items():
            assert abs(j.hess[i, k] - float(mpmath.diff(f, (x0, y0), order))) < 1e-11
    assert np.array_equal(j.hess, j.hess.T)


def test_division_and_powers():
    x, y = jets.seed_all([1.3, 0.4])
    q = (x**3 - 2.0 / y) / (1.0 + x * y)
    f = lambda p: [(p[0] ** 3 - 2.0 / p[1]) / (1.0 + p[0] * p[1])]  # noqa: E731
    first, second = jets.central_differences(f, [1.3, 0.4])
    assert np.allclose(q.grad, first[:, 0], rtol=1e-8)
    assert np.allclose(q.hess, second[:, :, 0], rtol=1e-4)
    r = 2.0**x
    assert r.grad[0] == pytest.approx(math.log(2) * 2**1.3)


def test_evaluate_chart_outside_domain():
    chart = cat.rotation_chart(cat.SPHERICAL_S, 4.0, cat.ModelConfig(3, 1))
    with pytest.raises(OutsideDomainError, match="outside admissible domain"):
        jets.evaluate_chart(chart, [-0.1, 1.0, 0.5])


def test_rotation_chart_membership_and_first_derivative():
    chart = cat.rotation_chart(cat.SPHERICAL_S, 4.0, cat.ModelConfig(3, 1))
    u = np.array([0.4, 0.2, 0.5])
    jp = jets.evaluate_chart(chart, u)
    x = jp.value
    assert abs(x[:4] @ x[:4] - 1) < 1e-12
    first, _ = jets.central_differences(chart.func, u)
    assert np.abs(jp.first[0] - first[0]).max() < 1e-6


def test_slice_second_derivatives_tangent_to_factor():
    chart = cat.slice_chart(2.0, cat.ModelConfig(3, 1))
    jp = jets.evaluate_chart(chart, [1.0, 1.2, 0.3])
    assert not jp.second[:, :, -1].any()
    assert jp.value[-1] == 2.0


def _relative_gap(jet_part, fd_part):
    return np.abs(jet_part - fd_part).max() / max(1.0, np.abs(jet_part).max())


@pytest.mark.parametrize("label,chart", catalog_charts(), ids=lambda v: v if isinstance(v, str) else "")
def test_jets_agree_with_finite_differences(label, chart):
    worst1 = worst2 = 0.0
    for u in interior_points(chart, 20, seed=7):
        jp = chart.evaluate(u)
        first, second = jets.central_differences(chart.func, u)
        worst1 = max(worst1, _relative_gap(jp.first, first))
        worst2 = max(worst2, _relative_gap(jp.second, second))
    assert worst1 < 1e-5, label
    assert worst2 < 1e-3, label


def test_jet2_repr_and_shapes():
    j = Jet2(1.0, np.zeros(2), np.zeros((2, 2)))
    assert j.n == 2
    assert "Jet2" in repr(j)
