"""
Which hypersurfaces have constant curvature c?
==============================================

Walk c across the real line for both product spaces and print the families
that exist, then show that anything else is refused with a reason.
"""

from cscprod.catalog import InadmissibleError
from cscprod.verify import CatalogEntry, classification_scan

for eps, name in ((1, "S^n x R"), (-1, "H^n x R")):
    print(name)
    for c in (-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0):
        n3 = classification_scan(eps, c, 3)
        n4 = classification_scan(eps, c, 4)
        extra = sorted(set(n3) - set(n4))
        note = f"   (n = 3 only: {', '.join(extra)})" if extra else ""
        print(f"  c = {c:+.1f}: {', '.join(n3) or '-'}{note}")
    print()

for fam, eps, c in (("rot-sph-S", 1, 0.5), ("rot-hyp-H", -1, 0.3), ("constant-angle", 1, 1.5)):
    try:
        CatalogEntry(fam, eps, c).resolved()
    except InadmissibleError as exc:
        print(f"{fam} with c = {c}: {exc}")
