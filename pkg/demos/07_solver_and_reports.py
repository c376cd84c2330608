"""
The homomorphism solver and verification reports
================================================

Searches run under a time budget. Running out of time raises SearchTimeout,
which suites record as inconclusive rather than as a failure. Reports can be
written as JSON.
"""

import json
import tempfile
from pathlib import Path

from graphpowers import SearchOptions, SearchTimeout, complete_graph, find_homomorphism, petersen, subdivide
from graphpowers import io
from graphpowers.suites import suite_circular_power, suite_multichromatic

g = subdivide(complete_graph(11), 3)
try:
    find_homomorphism(g, petersen(), SearchOptions(time_budget=0.05))
except SearchTimeout as exc:
    print("timed out:", exc)
print("with a full budget:", find_homomorphism(g, petersen(), SearchOptions(time_budget=120)))

report = suite_circular_power(max_n=7)
for line in report.lines()[:5]:
    print(line)
print(len(report.records), "records,", len(report.failures), "failures")

rushed = suite_multichromatic(include_long=True, opts=SearchOptions(time_budget=0.01))
print("inconclusive under a 10ms budget:", [r.claim for r in rushed.inconclusive])

out = Path(tempfile.mkdtemp()) / "report.json"
io.save_report(report, out, {"suite": "circular-power", "max_n": 7})
print(json.dumps(json.loads(out.read_text())["summary"]))
print(io.to_dot(complete_graph(3)))
