"""Run every verification suite at its default parameters and write one report
file per suite into an output directory."""

import argparse
import pathlib
from collections import Counter

from fieldgrid.verify import DEFAULT_SEED, run_all


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="reports")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    seen = Counter()
    failed = 0
    for rep in run_all(seed=args.seed):
        seen[rep.suite] += 1
        name = f"{rep.suite}-{seen[rep.suite]:02d}.txt"
        (out / name).write_text(rep.to_records())
        print(f"{rep.summary():<80} {rep.wall_time:8.3f}s")
        failed += not rep.passed
    print(f"{failed} suite(s) failed" if failed else "all suites passed")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
