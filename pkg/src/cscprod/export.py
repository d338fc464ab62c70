"""Sample tables (csv/json) and triangulated meshes (obj) of catalog members.

Rows sweep the first two chart parameters over a ``counts`` x ``counts``
grid of the shrunk chart box, the remaining parameters held at the box
centre. Columns, in order::

    u1..un, x1..x{n+2}, nu, height, k1..kn, K12

where ``k`` are the principal curvatures (ascending) and ``K12`` is the
sectional curvature of the coordinate plane spanned by d/du1 and d/du2.

The obj mesh triangulates the same slice and projects it orthographically
onto three ambient coordinates (``project``, 1-based). It is a lossy
picture, meant for looking at, not for measuring.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from . import geometry as geo
from .verify import GRID_MARGIN, CatalogEntry, build_chart

FORMATS = ("csv", "json", "obj")
OBJ_UNSUPPORTED = {"slice"}


def columns(n: int) -> list[str]:
    return (
        [f"u{i + 1}" for i in range(n)]
        + [f"x{i + 1}" for i in range(n + 2)]
        + ["nu", "height"]
        + [f"k{i + 1}" for i in range(n)]
        + ["K12"]
    )


def slice_grid(chart, counts: int) -> list[np.ndarray]:
    w = chart.upper - chart.lower
    lo, hi = chart.lower + GRID_MARGIN * w, chart.upper - GRID_MARGIN * w
    centre = 0.5 * (lo + hi)
    pts = []
    for a in np.linspace(lo[0], hi[0], counts):
        for b in np.linspace(lo[1], hi[1], counts):
            u = centre.copy()
            u[0], u[1] = a, b
            pts.append(u)
    return pts


def sample_rows(entry: CatalogEntry, counts: int = 8) -> tuple[list[str], list[list[float]]]:
    if counts < 2:
        raise ValueError("export grid needs at least 2 points per axis")
    chart = build_chart(entry)
    n = chart.n_params
    e1, e2 = np.eye(n)[0], np.eye(n)[1]
    rows = []
    for u in slice_grid(chart, counts):
        fd = geo.fundamental_data(chart, u)
        K = geo.sectional_curvature(fd, e1, e2)
        rows.append(
            [*map(float, u), *map(float, fd.point), fd.nu, fd.height, *map(float, fd.spectrum), float(K)]
        )
    return columns(n), rows


def parse_projection(text: str | None) -> tuple[int, int, int]:
    if text is None:
        return (2, 3, 4)
    parts = [p.strip().lstrip("x") for p in text.split(",")]
    if len(parts) != 3 or not all(p.isdigit() for p in parts):
        raise ValueError(f"projection must look like x2,x3,x4, got {text!r}")
    return tuple(int(p) for p in parts)


def write_obj(entry: CatalogEntry, path, counts: int = 16, project=(2, 3, 4)) -> None:
    e = entry.resolved()
    if e.family in OBJ_UNSUPPORTED or e.n != 3:
        raise ValueError(f"unsupported family for obj export: {e.family} (n = {e.n})")
    chart = build_chart(e)
    dim = chart.signature.dim
    if any(not 1 <= p <= dim for p in project):
        raise ValueError(f"projection coordinates must lie in 1..{dim}")
    idx = [p - 1 for p in project]
    lines = [f"# {e.family} {json.dumps(e.params())} projected to x{project[0]},x{project[1]},x{project[2]}"]
    for u in slice_grid(chart, counts):
        x = chart.point(u)
        lines.append("v " + " ".join(f"{x[i]:.12g}" for i in idx))
    for i in range(counts - 1):
        for j in range(counts - 1):
            a = i * counts + j + 1
            b, c, d = a + 1, a + counts, a + counts + 1
            lines += [f"f {a} {c} {b}", f"f {b} {c} {d}"]
    _write(path, "\n".join(lines) + "\n")


def export_samples(entry: CatalogEntry, path, fmt: str, counts: int = 8, project=(2, 3, 4)) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    if fmt == "obj":
        write_obj(entry, path, counts, project)
        return
    header, rows = sample_rows(entry, counts)
    e = entry.resolved()
    if fmt == "json":
        doc = {
            "family": e.family,
            "params": e.params(),
            "columns": header,
            "rows": [dict(zip(header, r)) for r in rows],
        }
        _write(path, json.dumps(doc, indent=1) + "\n")
    else:
        path = Path(path)
        try:
            with path.open("w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(header)
                w.writerows([[repr(v) for v in r] for r in rows])
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror}") from exc


def _write(path, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
