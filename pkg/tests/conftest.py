import math

import numpy as np
import pytest

from cscprod import catalog as cat
from cscprod.verify import battery_entries, build_chart, entry_label

ACCEPTANCE: dict[int, tuple[bool, str]] = {}
N_CRITERIA = 9


def catalog_charts():
    """(label, chart) for every chart the library can build, product and factor ambient."""
    out = [(entry_label(e), build_chart(e)) for e in battery_entries()]
    for eps, theta0 in ((1, math.pi / 4), (-1, 0.5)):
        fam = cat.clifford_family(theta0, eps)
        out.append((f"clifford-base{eps:+d}", fam.base))
        lo, hi = fam.s_interval()
        out.append((f"clifford-parallel{eps:+d}", cat.parallel_chart(fam, 0.3 * hi)))
    out.append(("horosphere", cat.horosphere_chart(cat.ModelConfig(3, -1))))
    return out


def interior_points(chart, count, seed=0):
    rng = np.random.default_rng(seed)
    w = chart.upper - chart.lower
    lo, hi = chart.lower + 0.02 * w, chart.upper - 0.02 * w
    return lo + (hi - lo) * rng.random((count, chart.n_params))


@pytest.fixture
def acceptance():
    def record(index: int, ok: bool, detail: str):
        ACCEPTANCE[index] = (bool(ok), detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for i in range(1, N_CRITERIA + 1):
        if i in ACCEPTANCE:
            ok, detail = ACCEPTANCE[i]
            terminalreporter.write_line(f"criterion {i}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            terminalreporter.write_line(f"criterion {i}: FAIL  (not reached)")
