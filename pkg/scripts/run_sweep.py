#!/usr/bin/env python3
"""Sweep all double-commutator exponent tuples in a box and certify each.

Writes one certificate per tuple as JSON and prints a summary.  Every
certificate is re-verified by the independent checker before it is
written; the exit code is nonzero if any nontrivial tuple stays
inconclusive or any check fails.
"""

import argparse
import json
import sys
import time
from collections import Counter
from pathlib import Path

from sl2wiggle.certify import check_certificate, sweep_box


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-abs", type=int, default=3, help="exponent bound")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-attempts", type=int, default=5)
    parser.add_argument("--out", type=Path, default=Path("sweep.json"))
    args = parser.parse_args()

    start = time.perf_counter()
    certs = sweep_box(max_abs=args.max_abs, seed=args.seed, max_attempts=args.max_attempts)
    elapsed = time.perf_counter() - start

    failures = []
    for cert in certs:
        outcome = check_certificate(cert)
        if not outcome.valid:
            failures.append((cert.params.as_list(), outcome.reason))

    counts = Counter(cert.status.value for cert in certs)
    print(f"{len(certs)} tuples in {elapsed:.1f}s: {dict(counts)}")
    if failures:
        for params, reason in failures:
            print(f"CHECK FAILED for {params}: {reason}", file=sys.stderr)

    args.out.write_text(
        json.dumps([c.to_json() for c in certs], indent=2, sort_keys=True)
    )
    print(f"wrote {args.out}")

    inconclusive = counts.get("Inconclusive", 0)
    return 1 if (failures or inconclusive) else 0


if __name__ == "__main__":
    raise SystemExit(main())
