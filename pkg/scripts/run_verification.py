#!/usr/bin/env python3
"""Run the full verification campaign over the ten standard (N, K) pairs and
write a JSON report next to this script's working directory."""

import sys

from uqram.harness import DEFAULT_PAIRS, format_table, rows_to_json, run_verification_suite


def main():
    rows = run_verification_suite(DEFAULT_PAIRS)
    print(format_table(rows))
    with open("verification_report.json", "w") as f:
        f.write(rows_to_json(rows))
    print("wrote verification_report.json")
    return 0 if all(r.passed for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
