"""Check the whole claim registry and print the summary table.

    python demos/04_claims_report.py
"""

from __future__ import annotations

import time

from metricdim.claims import FAIL, summary_table, verify_claims

t0 = time.perf_counter()
reports = verify_claims()
print(summary_table(reports))
print(f"checked {len(reports)} cases in {time.perf_counter() - t0:.1f}s")
for r in reports:
    if r.verdict == FAIL:
        print(f"  {r.claim_id} {r.params}: expected {r.expected}, computed {r.computed}")
