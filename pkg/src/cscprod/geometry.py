"""Fundamental forms, shape operators and structure-equation residuals.

A hypersurface f of Q_eps^n x R is treated as a codimension-two
submanifold of the flat space E^{n+2}, with normal frame (N, xi): N the unit
normal inside the product and xi the position vector of the Q-factor. All
tangent vectors are expressed in chart coordinates; norms use the induced
metric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import jets
from .catalog.base import Chart
from .pseudo_linalg import NotRiemannianError, generalized_eigen, orthonormal_complement

FD_STEP = np.cbrt(np.finfo(float).eps)
T_VANISHING = 1e-8


@dataclass(frozen=True, eq=False)
class FundamentalData:
    point: np.ndarray
    tangent_frame: np.ndarray  # (n, dim): rows are d_i f
    second: np.ndarray  # (n, n, dim): d_i d_j f
    metric: np.ndarray
    metric_inverse: np.ndarray
    xi: np.ndarray
    N: np.ndarray
    h_N: np.ndarray
    h_xi: np.ndarray
    A_N: np.ndarray
    A_xi: np.ndarray
    spectrum: np.ndarray
    T: np.ndarray
    nu: float
    height: float
    epsilon: int

    @property
    def n(self) -> int:
        return self.metric.shape[0]

    def dot(self, X, Y) -> float:
        return float(X @ self.metric @ Y)

    def norm(self, X) -> float:
        return float(np.sqrt(abs(X @ self.metric @ X)))

    def christoffel(self) -> np.ndarray:
        """Gamma[k, i, j] with nabla_{d_i} d_j = Gamma[k, i, j] d_k.

        Exact from the jets: the tangential part of d_i d_j f.
        """
        sig = np.ones(self.point.shape[0])
        sig[0] = self.epsilon
        lowered = np.einsum("ija,la->lij", self.second, self.tangent_frame * sig)
        return np.einsum("kl,lij->kij", self.metric_inverse, lowered)


def _metric_of(frame: np.ndarray, diag: np.ndarray) -> np.ndarray:
    g = (frame * diag) @ frame.T
    return 0.5 * (g + g.T)


def fundamental_data(chart: Chart, u, orient=None) -> FundamentalData:
    """Measure f at parameters ``u``.

    The unit normal is the canonical one returned by the complement
    construction, which makes nu >= 0 wherever nu is not negligible. Passing
    ``orient`` (an ambient vector) instead flips N to have positive inner
    product with it; finite-difference stencils use this to keep a
    consistent orientation across neighbouring points.
    """
    if chart.ambient != "product":
        raise ValueError("fundamental_data needs a hypersurface of Q_eps^n x R")
    u = np.asarray(u, dtype=float)
    jp = chart.evaluate(u)
    sig = chart.signature
    diag = sig.diag
    eps = sig.epsilon

    x = jp.value
    D = jp.first
    g = _metric_of(D, diag)
    if np.linalg.eigvalsh(g)[0] <= 1e-14 * max(1.0, np.abs(g).max()):
        raise jets.OutsideDomainError(
            f"{chart.family}: degenerate metric at {u.tolist()} (outside admissible domain)"
        )

    xi = x.copy()
    xi[-1] = 0.0
    (N,) = orthonormal_complement(sig, np.vstack([D, xi]))
    if orient is not None and np.sum(N * np.asarray(orient) * diag) < 0:
        N = -N

    h_N = jp.second @ (diag * N)
    h_xi = jp.second @ (diag * xi)
    h_N = 0.5 * (h_N + h_N.T)
    h_xi = 0.5 * (h_xi + h_xi.T)
    try:
        spectrum = generalized_eigen(g, h_N)[0]
    except NotRiemannianError:
        raise jets.OutsideDomainError(
            f"{chart.family}: metric not Riemannian at {u.tolist()} (outside admissible domain)"
        ) from None
    g_inv = np.linalg.inv(g)

    # d/dt = f_* T + nu N, with d/dt the last coordinate direction
    T = g_inv @ D[:, -1]
    return FundamentalData(
        point=x,
        tangent_frame=D,
        second=jp.second,
        metric=g,
        metric_inverse=g_inv,
        xi=xi,
        N=N,
        h_N=h_N,
        h_xi=h_xi,
        A_N=g_inv @ h_N,
        A_xi=g_inv @ h_xi,
        spectrum=spectrum,
        T=T,
        nu=float(N[-1]),
        height=float(x[-1]),
        epsilon=eps,
    )


def orthonormal_frame(fd: FundamentalData, first=None) -> np.ndarray:
    """Columns form a g-orthonormal basis; the first column is along ``first`` if given."""
    n = fd.n
    cols = [] if first is None else [np.asarray(first, dtype=float)]
    cols += list(np.eye(n))
    frame = []
    for v in cols:
        for e in frame:
            v = v - fd.dot(e, v) * e
        nv = fd.norm(v)
        if nv > 1e-10:
            frame.append(v / nv)
        if len(frame) == n:
            break
    return np.column_stack(frame)


def t_complement_basis(fd: FundamentalData) -> np.ndarray:
    """g-orthonormal basis of {T}^perp (all of TM when T vanishes)."""
    if fd.norm(fd.T) <= T_VANISHING:
        return orthonormal_frame(fd)
    return orthonormal_frame(fd, fd.T)[:, 1:]


def xi_shape_check(fd: FundamentalData) -> float:
    """max(|A_xi T + nu^2 T|, max_X |A_xi X + X| over an orthonormal basis of {T}^perp)."""
    r = fd.norm(fd.A_xi @ fd.T + fd.nu**2 * fd.T)
    for X in t_complement_basis(fd).T:
        r = max(r, fd.norm(fd.A_xi @ X + X))
    return r


# -- curvature ------------------------------------------------------------


def _second_forms(fd, X, Y):
    return X @ fd.h_N @ Y, X @ fd.h_xi @ Y


def sectional_curvature(fd: FundamentalData, X, Y) -> float:
    """Sectional curvature of span{X, Y} from the flat ambient Gauss equation.

    The normal space (N, xi) carries the inner product diag(1, eps).
    """
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    den = fd.dot(X, X) * fd.dot(Y, Y) - fd.dot(X, Y) ** 2
    if den <= 1e-12 * fd.dot(X, X) * fd.dot(Y, Y):
        raise ValueError("degenerate plane")
    nxx, xxx = _second_forms(fd, X, X)
    nyy, xyy = _second_forms(fd, Y, Y)
    nxy, xxy = _second_forms(fd, X, Y)
    num = nxx * nyy - nxy**2 + fd.epsilon * (xxx * xyy - xxy**2)
    return num / den


def wedge(fd: FundamentalData, X, Y, Z) -> np.ndarray:
    """(X ^ Y) Z = <Y, Z> X - <X, Z> Y."""
    return fd.dot(Y, Z) * X - fd.dot(X, Z) * Y


def riemann_extrinsic(fd: FundamentalData, X, Y, Z) -> np.ndarray:
    """R(X, Y)Z from the Gauss equation of f into flat E^{n+2}."""
    nyz, xyz = _second_forms(fd, Y, Z)
    nxz, xxz = _second_forms(fd, X, Z)
    return (
        nyz * (fd.A_N @ X)
        - nxz * (fd.A_N @ Y)
        + fd.epsilon * (xyz * (fd.A_xi @ X) - xxz * (fd.A_xi @ Y))
    )


def riemann_product(fd: FundamentalData, X, Y, Z) -> np.ndarray:
    """R(X, Y)Z from A_N and T via the Gauss equation of f into Q_eps^n x R."""
    T, eps = fd.T, fd.epsilon
    AX, AY = fd.A_N @ X, fd.A_N @ Y
    return wedge(fd, AX, AY, Z) + eps * (
        wedge(fd, X, Y, Z)
        - fd.dot(Y, T) * wedge(fd, X, T, Z)
        + fd.dot(X, T) * wedge(fd, Y, T, Z)
    )


def sectional_curvature_product(fd: FundamentalData, X, Y) -> float:
    """Sectional curvature contracted from :func:`riemann_product`."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    den = fd.dot(X, X) * fd.dot(Y, Y) - fd.dot(X, Y) ** 2
    if den <= 1e-12 * fd.dot(X, X) * fd.dot(Y, Y):
        raise ValueError("degenerate plane")
    return fd.dot(riemann_product(fd, X, Y, Y), X) / den


def gauss_residual(fd: FundamentalData, X, Y, Z, c_expected: float | None = None) -> float:
    """|R_ext(X,Y)Z - R_prod(X,Y)Z| in the induced metric.

    With ``c_expected`` the residual also covers the constant curvature
    model c (X ^ Y) Z.
    """
    X, Y, Z = (np.asarray(v, dtype=float) for v in (X, Y, Z))
    R = riemann_extrinsic(fd, X, Y, Z)
    r = fd.norm(R - riemann_product(fd, X, Y, Z))
    if c_expected is not None:
        r = max(r, fd.norm(R - c_expected * wedge(fd, X, Y, Z)))
    return r


@dataclass(frozen=True)
class PrincipalDecomposition:
    lam: float
    mu: np.ndarray
    t_alignment: float


def principal_decomposition(fd: FundamentalData) -> PrincipalDecomposition:
    """Principal curvature along T, the spectrum on {T}^perp, and |A T - lam T| / |T|."""
    T = fd.T
    nT = fd.norm(T)
    if nT <= T_VANISHING:
        raise ValueError("T vanishes; decomposition undefined")
    AT = fd.A_N @ T
    lam = fd.dot(AT, T) / nT**2
    E = orthonormal_frame(fd, T)
    M = E.T @ fd.h_N @ E
    mu = np.linalg.eigvalsh(0.5 * (M[1:, 1:] + M[1:, 1:].T))
    return PrincipalDecomposition(lam, mu, fd.norm(AT - lam * T) / nT)


def gauss_scalar_residuals(fd: FundamentalData, c: float) -> tuple[float, float]:
    """Defects of c - eps = mu_i mu_j (i != j) and c - eps = lam mu_i - eps |T|^2."""
    pd = principal_decomposition(fd)
    eps = fd.epsilon
    mu = pd.mu
    r1 = 0.0
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            r1 = max(r1, abs(mu[i] * mu[j] - (c - eps)))
    t2 = fd.norm(fd.T) ** 2
    r2 = max(abs(pd.lam * m - eps * t2 - (c - eps)) for m in mu)
    return r1, r2


# -- finite-difference residuals -----------------------------------------


def _steps(u: np.ndarray) -> np.ndarray:
    return FD_STEP * np.maximum(1.0, np.abs(u))


def _stencil(chart: Chart, u: np.ndarray, center: FundamentalData):
    h = _steps(u)
    plus, minus = [], []
    for k in range(u.shape[0]):
        e = np.zeros_like(u)
        e[k] = h[k]
        if not (chart.contains(u + e) and chart.contains(u - e)):
            raise ValueError(f"finite-difference stencil exits domain at {u.tolist()}")
        plus.append(fundamental_data(chart, u + e, orient=center.N))
        minus.append(fundamental_data(chart, u - e, orient=center.N))
    return h, plus, minus


def codazzi_residual(chart: Chart, u, i: int | None = None, j: int | None = None) -> float:
    """Codazzi defect for coordinate fields X = d_i, Y = d_j.

    (nabla_X A)Y - (nabla_Y A)X - eps nu (X ^ Y) T with A differentiated by
    central differences; maximised over all pairs when i, j are omitted.
    """
    u = np.asarray(u, dtype=float)
    fd = fundamental_data(chart, u)
    h, plus, minus = _stencil(chart, u, fd)
    n = fd.n
    dA = [(plus[k].A_N - minus[k].A_N) / (2 * h[k]) for k in range(n)]
    G = fd.christoffel()
    A = fd.A_N
    E = np.eye(n)
    pairs = [(i, j)] if i is not None else [(a, b) for a in range(n) for b in range(a + 1, n)]
    r = 0.0
    for a, b in pairs:
        lhs = dA[a][:, b] - dA[b][:, a] + G[:, a, :] @ A[:, b] - G[:, b, :] @ A[:, a]
        rhs = fd.epsilon * fd.nu * wedge(fd, E[a], E[b], fd.T)
        r = max(r, fd.norm(lhs - rhs))
    return r


def structure_residuals(chart: Chart, u) -> tuple[float, float]:
    """Defects of nabla_X T = nu A X and X(nu) = -<A X, T> over coordinate directions."""
    u = np.asarray(u, dtype=float)
    fd = fundamental_data(chart, u)
    h, plus, minus = _stencil(chart, u, fd)
    G = fd.christoffel()
    r_T = r_nu = 0.0
    for k in range(fd.n):
        dT = (plus[k].T - minus[k].T) / (2 * h[k])
        nabla = dT + G[:, k, :] @ fd.T
        r_T = max(r_T, fd.norm(nabla - fd.nu * fd.A_N[:, k]))
        dnu = (plus[k].nu - minus[k].nu) / (2 * h[k])
        r_nu = max(r_nu, abs(dnu + fd.h_N[k] @ fd.T))
    return r_T, r_nu


# -- hypersurfaces of the factor Q_eps^n ---------------------------------


def factor_shape_operator(chart: Chart, u, orient=None):
    """Shape operator of a hypersurface of Q_eps^n, normal measured independently.

    The normal is the unit vector orthogonal to the tangent frame and the
    position vector, flipped to agree with ``orient`` if given. Returns
    (A, N, metric, second fundamental form).
    """
    if chart.ambient != "factor":
        raise ValueError("factor_shape_operator needs a hypersurface chart of Q_eps^n")
    jp = chart.evaluate(u)
    sig = chart.signature
    D = jp.first
    (N,) = orthonormal_complement(sig, np.vstack([D, jp.value]))
    if orient is not None and np.sum(N * np.asarray(orient) * sig.diag) < 0:
        N = -N
    g = _metric_of(D, sig.diag)
    h = jp.second @ (sig.diag * N)
    h = 0.5 * (h + h.T)
    return np.linalg.solve(g, h), N, g, h
