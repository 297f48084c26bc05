"""Run a handful of registered checks and print their verdicts and a JSON
record, the same data ``bracketalg verify`` prints.

Run with ``python3 demos/verification_report.py``.
"""

import json

from bracketalg.checks import report_record, run_all

ids = ["rsm-a-relations", "grothendieck-bruhat", "nichols-dimensions", "tau-relations", "tau-square-printed"]
report = run_all("quick", ids=ids)
for result in report["results"]:
    print(result.to_text())
print("failed:", report["summary"]["failed"])

record = report_record(report)["results"][0]
print(json.dumps({k: record[k] for k in ("checkId", "statement", "verdict", "degreeVerified", "seed")}, indent=2))
