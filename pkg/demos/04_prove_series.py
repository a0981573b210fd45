"""Prove a series end to end and write its certificate.

Run with ``python3 demos/04_prove_series.py [output.json]``.
"""

import sys

from ramanujan_pi import emit_certificate, load_catalog, prove_series

cat = load_catalog()

for name in ("series-10n+1", "series-28n+3", "series-26390n+1103"):
    spec = cat.find(name)
    cert = prove_series(spec, cat)
    print(f"{name} ({spec.name}): {cert.verdict.value}")
    print(f"  detected degree {cert.detected_d}, nome identity {cert.q_identity}")
    if cert.derived_a is not None:
        print(f"  derived a = {cert.derived_a}, b = {cert.derived_b}, C = {cert.C}")
    worst = max(cert.residuals.values()) if cert.residuals else None
    print(f"  largest residual {worst}")

if len(sys.argv) > 1:
    record = emit_certificate(prove_series(cat.find("series-28n+3"), cat), sys.argv[1])
    print("wrote", sys.argv[1], "with keys", sorted(record))
