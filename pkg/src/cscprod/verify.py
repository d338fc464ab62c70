"""Batch verification: sample a catalog member, run every residual check, report."""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from . import catalog as cat
from . import geometry as geo

GRID_MARGIN = 0.05
T_NONZERO = 1e-6

# -- classification table -------------------------------------------------

ROTATION_KIND = {
    "rot-sph-S": cat.SPHERICAL_S,
    "rot-sph-H": cat.SPHERICAL_H,
    "rot-hyp-H": cat.HYPERBOLIC_H,
    "rot-par-H": cat.PARABOLIC_H,
}
CONSTANT_ANGLE = ("constant-angle", "constant-angle-clifford")
FAMILIES = (
    "slice",
    "rot-sph-S",
    "rot-sph-H",
    "rot-hyp-H",
    "rot-par-H",
    "constant-angle",
    "constant-angle-clifford",
    "product-flat-surface-S3",
    "product-flat-surface-H3",
    "product-horosphere",
)
N3_ONLY = {"constant-angle", "constant-angle-clifford", "product-flat-surface-S3", "product-flat-surface-H3"}


def admissibility_error(family: str, epsilon: int, c: float, n: int) -> str | None:
    """Why (family, eps, c, n) is excluded by the classification, or None."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    sphere = epsilon == 1
    if family == "slice":
        if c != epsilon:
            return (
                "Theorem 7.1(iii): slices of S^n × R have c = 1"
                if sphere
                else "Theorem 7.2(i): slices of H^n × R have c = −1"
            )
        return None
    if family == "rot-sph-S":
        if not sphere:
            return "Theorem 4.1: rot-sph-S lives in S^n × R (epsilon = +1)"
        if c < 1:
            return "Theorem 4.1 requires c ≥ 1"
        if c == 1:
            return "Theorem 4.1(i): c = 1 is an open subset of a slice, not a rotation profile"
        return None
    if family in ("rot-sph-H", "rot-hyp-H", "rot-par-H"):
        if sphere:
            return f"Theorem 4.2: {family} lives in H^n × R (epsilon = −1)"
        if c < -1:
            return "Theorem 4.2 requires c ≥ −1"
        if c == -1:
            return "Theorem 4.2(i): c = −1 is an open subset of a slice, not a rotation profile"
        if family != "rot-sph-H" and not c < 0:
            return "Theorem 4.2(ii) requires −1 < c < 0 for hyperbolic and parabolic types"
        return None
    if family in CONSTANT_ANGLE:
        thm = "Theorem 7.1(ii)" if sphere else "Theorem 7.2(ii)"
        if n != 3:
            return f"{thm} requires n = 3 for the constant angle construction"
        if sphere and not 0 < c < 1:
            return f"{thm} requires 0 < c < 1"
        if not sphere and not -1 < c < 0:
            return f"{thm} requires −1 < c < 0"
        return None
    if family == "product-flat-surface-S3":
        if not sphere:
            return "Theorem 7.1(i): product over a flat surface of S^3 needs epsilon = +1"
        if n != 3 or c != 0:
            return "Theorem 7.1(i) requires n = 3 and c = 0"
        return None
    if family == "product-flat-surface-H3":
        if sphere:
            return "Theorem 7.2(iii)(a): product over a flat surface of H^3 needs epsilon = −1"
        if n != 3 or c != 0:
            return "Theorem 7.2(iii)(a) requires n = 3 and c = 0"
        return None
    # product-horosphere
    if sphere:
        return "Theorem 7.2(iii)(b): horospheres live in H^n (epsilon = −1)"
    if c != 0:
        return "Theorem 7.2(iii)(b) requires c = 0"
    return None


def classification_scan(epsilon: int, c: float, n: int | None = None) -> list[str]:
    """Families carrying constant sectional curvature c in Q_eps^n x R.

    n = None lists the n = 3 families as well as those valid for every n.
    The explicit Clifford chart is an alias of ``constant-angle`` and is not
    listed separately.
    """
    if epsilon not in (-1, 1):
        raise ValueError("epsilon must be +1 or -1")
    out = []
    for fam in FAMILIES:
        if fam == "constant-angle-clifford":
            continue
        if admissibility_error(fam, epsilon, c, 3 if n is None else n) is None:
            out.append(fam)
    return out


# -- entries --------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    epsilon: int
    c: float | None = None
    n: int = 3
    B: float | None = None
    theta0: float | None = None
    t0: float = 0.0

    def resolved(self) -> "CatalogEntry":
        """Fill c from B (or B from c) for constant angle families and check admissibility."""
        c, B, theta0 = self.c, self.B, self.theta0
        if self.family in CONSTANT_ANGLE:
            if B is not None:
                cB = self.epsilon / (1 + B * B)
                if c is not None and not math.isclose(c, cB, rel_tol=1e-12, abs_tol=1e-15):
                    raise cat.InadmissibleError(
                        f"B = {B} gives c = eps/(1+B^2) = {cB}, inconsistent with c = {c}"
                    )
                c = cB
            elif c is not None and c != 0 and self.epsilon / c > 1:
                B = math.sqrt(self.epsilon / c - 1)
            if theta0 is None:
                theta0 = math.pi / 4 if self.epsilon == 1 else 0.5
        elif self.family.startswith("product-flat") and theta0 is None:
            theta0 = math.pi / 4 if self.epsilon == 1 else 0.5
        if self.family == "slice" and c is None:
            c = float(self.epsilon)
        if c is None:
            raise ValueError(f"{self.family} needs a curvature value c")
        msg = admissibility_error(self.family, self.epsilon, c, self.n)
        if msg is not None:
            raise cat.InadmissibleError(msg)
        return CatalogEntry(self.family, self.epsilon, float(c), self.n, B, theta0, self.t0)

    def params(self) -> dict:
        d = {"epsilon": self.epsilon, "c": self.c, "n": self.n}
        if self.B is not None:
            d["B"] = self.B
        if self.theta0 is not None:
            d["theta0"] = self.theta0
        if self.family == "slice":
            d["t0"] = self.t0
        return d


# reference family used to read the explicit Clifford chart through the parallel formulas
def _reference_family(epsilon: int) -> cat.ParallelFamily:
    return cat.clifford_family(math.pi / 4 if epsilon == 1 else 0.5, epsilon)


def build_chart(entry: CatalogEntry) -> cat.Chart:
    e = entry.resolved()
    model = cat.ModelConfig(e.n, e.epsilon)
    fam = e.family
    if fam == "slice":
        return cat.slice_chart(e.t0, model)
    if fam in ROTATION_KIND:
        return cat.rotation_chart(ROTATION_KIND[fam], e.c, model)
    if fam == "constant-angle":
        return cat.constant_angle_chart(cat.clifford_family(e.theta0, e.epsilon), e.B)
    if fam == "constant-angle-clifford":
        return cat.clifford_chart(e.theta0, e.B, e.epsilon)
    if fam.startswith("product-flat"):
        base = cat.clifford_base_chart(e.theta0, e.epsilon)
        return cat.product_chart(base, model, family=fam)
    return cat.product_chart(cat.horosphere_chart(model), model, family=fam)


# -- grids, tolerances, reports -------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Sampling plan.

    Points are drawn without replacement from the tensor grid with
    ``counts`` nodes per parameter over the chart box shrunk by
    ``GRID_MARGIN`` (or over ``box``); ``planes`` random planes or triples
    are tested at each point.
    """

    counts: int = 16
    points: int = 24
    planes: int = 20
    seed: int = 0
    box: tuple | None = None

    def __post_init__(self):
        if self.counts < 3:
            raise ValueError("grid counts must be >= 3")
        if self.points < 1 or self.planes < 1:
            raise ValueError("points and planes must be positive")

    def sub_box(self, chart: cat.Chart):
        if self.box is not None:
            lo, hi = (np.asarray(b, dtype=float) for b in self.box)
            if np.any(lo <= chart.lower) or np.any(hi >= chart.upper):
                raise ValueError("grid sub-box must lie inside the chart domain")
            return lo, hi
        w = chart.upper - chart.lower
        return chart.lower + GRID_MARGIN * w, chart.upper - GRID_MARGIN * w

    def axes(self, chart: cat.Chart):
        lo, hi = self.sub_box(chart)
        return [np.linspace(a, b, self.counts) for a, b in zip(lo, hi)]

    def sample(self, chart: cat.Chart) -> np.ndarray:
        axes = self.axes(chart)
        total = self.counts ** len(axes)
        rng = np.random.default_rng(self.seed)
        k = min(self.points, total)
        flat = np.sort(rng.choice(total, size=k, replace=False))
        idx = np.array(np.unravel_index(flat, [self.counts] * len(axes))).T
        return np.array([[ax[i] for ax, i in zip(axes, row)] for row in idx])

    def echo(self) -> dict:
        d = {"counts": self.counts, "points": self.points, "planes": self.planes, "seed": self.seed}
        if self.box is not None:
            d["box"] = [list(map(float, b)) for b in self.box]
        return d


@dataclass(frozen=True)
class Tolerances:
    membership: float = 1e-12
    jet_identities: float = 1e-8
    fd_identities: float = 1e-4
    spectra: float = 1e-9
    unit: float = 1e-10
    constancy: float = 1e-11

    def __post_init__(self):
        if any(not v > 0 for v in asdict(self).values()):
            raise ValueError("tolerances must be positive")

    @classmethod
    def profile(cls, name: str) -> "Tolerances":
        if name == "default":
            return cls()
        if name == "strict":
            return cls(1e-13, 1e-10, 1e-5, 1e-10, 1e-11, 1e-12)
        raise ValueError(f"unknown tolerance profile {name!r}")


@dataclass
class CheckResult:
    name: str
    max_residual: float
    argmax: list
    tol: float
    passed: bool


@dataclass
class VerificationReport:
    family: str
    params: dict
    grid: dict
    checks: list[CheckResult] = field(default_factory=list)
    passed: bool = True
    runtime_ms: float | None = None
    version: str = __version__

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self) -> int | None:
        for i, c in enumerate(self.checks):
            if not c.passed:
                return i
        return None

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "grid": self.grid,
            "checks": [
                {
                    "name": c.name,
                    "max_residual": c.max_residual,
                    "argmax": c.argmax,
                    "tol": c.tol,
                    "pass": c.passed,
                }
                for c in self.checks
            ],
            "pass": self.passed,
            "runtime_ms": round(self.runtime_ms, 3) if timing and self.runtime_ms is not None else None,
            "version": self.version,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False)


class _Tracker:
    """Running maximum; ties go to the lexicographically smallest location."""

    def __init__(self, name, tol):
        self.name, self.tol = name, tol
        self.value = 0.0
        self.where: list = []
        self.seen = False

    def add(self, value, where):
        value = float(value)
        where = [float(w) for w in np.atleast_1d(where)]
        if math.isnan(value):
            value = math.inf
        if not self.seen or value > self.value or (value == self.value and where < self.where):
            self.value, self.where = value, where
        self.seen = True

    def result(self) -> CheckResult:
        ok = self.seen and self.value <= self.tol
        return CheckResult(self.name, self.value, self.where, self.tol, bool(ok))


def run_suite(
    entry: CatalogEntry, grid: GridSpec | None = None, tol: Tolerances | None = None
) -> VerificationReport:
    """Run every applicable residual check on ``entry``; deterministic for a fixed seed."""
    grid = grid or GridSpec()
    tol = tol or Tolerances()
    t_start = time.perf_counter()
    e = entry.resolved()
    chart = build_chart(e)
    c, eps, n = e.c, e.epsilon, e.n
    pts = grid.sample(chart)
    rng = np.random.default_rng(grid.seed + 1)

    checks: dict[str, _Tracker] = {}

    def track(name, t):
        if name not in checks:
            checks[name] = _Tracker(name, t)
        return checks[name]

    membership = track("membership", tol.membership)
    unit = track("unit-T-nu", tol.unit)
    gauss = track("gauss", tol.jet_identities)
    const_k = track("constant-K", tol.jet_identities)
    k_agree = track("K-extrinsic-vs-product", tol.jet_identities)
    xi = track("xi-spectrum", tol.spectra)
    codazzi = track("codazzi", tol.fd_identities)
    nabla_t = track("nabla-T", tol.fd_identities)
    d_nu = track("d-nu", tol.fd_identities)

    is_rot = e.family in ROTATION_KIND
    is_ca = e.family in CONSTANT_ANGLE
    if is_rot:
        arclength = track("arclength", tol.unit)
        metric_form = track("metric-form", tol.unit)
        warped = track("warped-rho", tol.unit)
        prof = chart.params["profile"]
        kind = chart.params["kind"]
        ws = cat.matching_warped_solution(kind, c)
    if is_ca:
        a = math.sqrt(1 + e.B**2)
        nu_spread = track("nu-constancy", tol.constancy)
        nu_value = track("nu-value", tol.spectra)
        a_eta = track("A_eta-spectrum", tol.jet_identities)
        a_xi = track("A_xi-spectrum", tol.jet_identities)
        fam = (
            chart.params["family"] if e.family == "constant-angle" else _reference_family(eps)
        )
        shift = 0.0 if e.family == "constant-angle" else fam.params["theta0"]
        nus = []
    if e.family == "slice":
        t_zero = track("T-vanishes", tol.unit)
    if e.family.startswith("product"):
        nu_zero = track("nu-vanishes", tol.unit)

    for u in pts:
        x = chart.point(u)
        m = chart.quadric_residual(x)
        if eps == -1 and x[0] <= 0:
            m = math.inf
        membership.add(m, u)

        fd = geo.fundamental_data(chart, u)
        unit.add(abs(fd.norm(fd.T) ** 2 + fd.nu**2 - 1), u)
        xi.add(geo.xi_shape_check(fd), u)
        for _ in range(grid.planes):
            X, Y, Z = rng.normal(size=(3, n))
            X, Y, Z = X / fd.norm(X), Y / fd.norm(Y), Z / fd.norm(Z)
            gauss.add(geo.gauss_residual(fd, X, Y, Z), u)
            K = geo.sectional_curvature(fd, X, Y)
            const_k.add(abs(K - c), u)
            k_agree.add(abs(K - geo.sectional_curvature_product(fd, X, Y)), u)

        codazzi.add(geo.codazzi_residual(chart, u), u)
        r_t, r_nu = geo.structure_residuals(chart, u)
        nabla_t.add(r_t, u)
        d_nu.add(r_nu, u)

        if fd.norm(fd.T) > T_NONZERO:
            pd = geo.principal_decomposition(fd)
            track("principal-alignment", tol.spectra).add(pd.t_alignment, u)
            r1, r2 = geo.gauss_scalar_residuals(fd, c)
            track("gauss-scalar", tol.jet_identities).add(max(r1, r2), u)
            if is_rot:
                g1 = max(abs(mu**2 - (c - eps)) for mu in pd.mu)
                g2 = max(abs(pd.lam * mu + eps * fd.nu**2 - c) for mu in pd.mu)
                track("G1-mu-squared", tol.jet_identities).add(g1, u)
                track("G2b-lambda-mu", tol.jet_identities).add(g2, u)
            if is_ca:
                track("G2c-lambda-zero", tol.jet_identities).add(
                    max(abs(pd.lam), abs(eps * fd.nu**2 - c)), u
                )

        if is_rot:
            s = u[0]
            arclength.add(prof.arclength_residual(s), u)
            rho = float(cat.warping_function(kind, prof.k(s)))
            target = np.zeros((n, n))
            target[0, 0] = 1.0
            target[1:, 1:] = rho**2 * cat.factor_metric(kind, u[1:])
            r_form = np.abs(fd.metric - target).max()
            r_form = max(r_form, abs(rho - float(ws.rho(s))))
            metric_form.add(r_form, u)
            warped.add(max(ws.first_integral_residual(s), ws.ode_residual(s)), u)

        if is_ca:
            nus.append(fd.nu)
            nu_value.add(abs(fd.nu - 1 / a), u)
            a_xi.add(np.abs(np.sort(np.linalg.eigvals(fd.A_xi).real) - [-1, -1, -1 / a**2]).max(), u)
            x_base, s_par = u[:-1], u[-1] - shift
            A_s = cat.parallel_shape_operator(fam.shape_operator(x_base)[2], s_par, eps)
            expected = np.sort(np.concatenate([-e.B / a * np.linalg.eigvals(A_s).real, [0.0]]))
            a_eta.add(np.abs(fd.spectrum - expected).max(), u)
            eta = cat.constant_angle_normal(fam, e.B, np.concatenate([x_base, [s_par]]))
            nu_value.add(np.abs(fd.N - eta).max(), u)

        if e.family == "slice":
            t_zero.add(max(fd.norm(fd.T), abs(fd.nu - 1)), u)
        if e.family.startswith("product"):
            nu_zero.add(max(abs(fd.nu), abs(fd.norm(fd.T) - 1)), u)

    if is_rot:
        lo, hi = chart.lower[0], chart.upper[0]
        for s in np.linspace(lo, hi, 52)[1:-1]:
            arclength.add(prof.arclength_residual(s), [s])
            warped.add(max(ws.first_integral_residual(s), ws.ode_residual(s)), [s])
    if is_ca:
        nu_spread.add(float(np.ptp(nus)), pts[int(np.argmax(nus))])

    report = VerificationReport(
        family=e.family,
        params=e.params(),
        grid=grid.echo(),
        checks=[t.result() for t in checks.values()],
    )
    report.passed = all(ch.passed for ch in report.checks)
    report.runtime_ms = 1e3 * (time.perf_counter() - t_start)
    return report


# -- battery --------------------------------------------------------------


def battery_entries() -> list[CatalogEntry]:
    """Every catalog member exercised by the acceptance suite."""
    out = []
    sweep = [
        (1, "rot-sph-S", (1.5, 2.0, 4.0)),
        (-1, "rot-sph-H", (-0.5, 0.0, 0.7)),
        (-1, "rot-hyp-H", (-0.5, -0.25)),
        (-1, "rot-par-H", (-0.5, -0.75)),
    ]
    for n in (3, 4):
        for eps, fam, cs in sweep:
            out += [CatalogEntry(fam, eps, c, n) for c in cs]
    for eps in (1, -1):
        for B in (0.5, 1.0, 2.0):
            out.append(CatalogEntry("constant-angle", eps, n=3, B=B))
        out.append(CatalogEntry("constant-angle-clifford", eps, n=3, B=1.0))
    for n in (3, 4):
        out.append(CatalogEntry("slice", 1, n=n, t0=2.0))
        out.append(CatalogEntry("slice", -1, n=n, t0=0.0))
        out.append(CatalogEntry("product-horosphere", -1, 0.0, n))
    out.append(CatalogEntry("product-flat-surface-S3", 1, 0.0, 3))
    out.append(CatalogEntry("product-flat-surface-H3", -1, 0.0, 3))
    return out


def entry_label(e: CatalogEntry) -> str:
    parts = [e.family, f"eps{e.epsilon:+d}", f"n{e.n}"]
    if e.c is not None:
        parts.append(f"c{e.c:g}")
    if e.B is not None:
        parts.append(f"B{e.B:g}")
    return "_".join(parts)


def run_battery(grid: GridSpec | None = None, tol: Tolerances | None = None):
    return [(entry_label(e), run_suite(e, grid, tol)) for e in battery_entries()]
