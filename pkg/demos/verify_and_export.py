"""
Verification reports and exports
================================

Run the full residual suite on one member, read the report, then write a
sample table and a mesh to a temporary directory.
"""

import json
import tempfile
from pathlib import Path

from cscprod.export import export_samples
from cscprod.verify import CatalogEntry, GridSpec, run_suite

entry = CatalogEntry("rot-sph-S", epsilon=1, c=4.0, n=3)
report = run_suite(entry, GridSpec(points=24, planes=20, seed=0))
print(f"{report.family} {report.params}: overall {'pass' if report.passed else 'FAIL'}")
for check in report.checks:
    print(f"  {check.name:<22} {check.max_residual:9.2e}  tol {check.tol:.0e}")

out = Path(tempfile.mkdtemp())
export_samples(entry, out / "rot.csv", "csv", counts=8)
export_samples(entry, out / "rot.obj", "obj", counts=24, project=(2, 3, 5))
export_samples(CatalogEntry("constant-angle-clifford", 1, B=1.0), out / "clifford.json", "json")

rows = (out / "rot.csv").read_text().splitlines()
print(f"\n{out / 'rot.csv'}: {len(rows) - 1} rows, columns {rows[0]}")
doc = json.loads((out / "clifford.json").read_text())
print(f"{out / 'clifford.json'}: nu values {sorted({round(r['nu'], 15) for r in doc['rows']})}")
print(f"{out / 'rot.obj'}: open it in any mesh viewer")
