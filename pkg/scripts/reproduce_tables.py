"""Regenerate the Moebius tables (left, right, cohomology of the right As family).

    python3 scripts/reproduce_tables.py [--max-n 8] [--tab3-n 5] [--outdir out/]
"""
import argparse
import sys
from pathlib import Path

from operadic_posets.cli import run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--tab3-n", type=int, default=5)
    ap.add_argument("--outdir")
    args = ap.parse_args()
    jobs = [("tab2", args.max_n), ("tab4", args.max_n), ("tab3", args.tab3_n)]
    rc = 0
    for tid, n in jobs:
        argv = ["reproduce", "--table", tid, "--max-n", str(n)]
        if tid == "tab3" and n > 5:
            argv.append("--unsafe-large")
        if args.outdir:
            Path(args.outdir).mkdir(parents=True, exist_ok=True)
            argv += ["--out", str(Path(args.outdir) / ("%s.tsv" % tid))]
        else:
            print("# %s" % tid)
        rc = max(rc, run(argv))
    return rc


if __name__ == "__main__":
    sys.exit(main())
