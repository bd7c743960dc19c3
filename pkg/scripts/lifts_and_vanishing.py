"""Run the closed-formula, vanishing, lift and small-weight suites and write a CSV."""
import argparse
from pathlib import Path

from siegelcount import conjectures as C
from siegelcount.motives import Tracer


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--out", type=Path, default=Path("suites.csv"))
    args = ap.parse_args()
    rep = C.report(tuple(args.q), ["theorem", "zero_dim", "table2", "appendix"], Tracer())
    args.out.write_text(rep.csv())
    print(rep.summary())
    for r in rep.failures:
        print(f"FAIL {r.check} ({r.lam}) q={r.q}: expected {r.expected}, got {r.actual}")


if __name__ == "__main__":
    main()
