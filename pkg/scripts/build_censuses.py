"""Build every census the verification suites read, over the desk-scale fields."""
import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from siegelcount.census.runner import RunOptions
from siegelcount.census.store import CensusStore, default_data_dir


@dataclass
class BuildConfig:
    data: Path = field(default_factory=default_data_dir)
    workers: int = 1
    # (family, field sizes); the stacks pull in their curve censuses
    plan: tuple = (
        ("A1", (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17)),
        ("A2", (2, 3, 4, 5, 8, 16)),
        ("A3", (2, 3)),
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data", type=Path, default=None)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    cfg = BuildConfig(args.data or default_data_dir(), args.workers)
    store = CensusStore(cfg.data, opts=RunOptions(workers=cfg.workers))
    for space, qs in cfg.plan:
        for q in qs:
            t0 = time.time()
            t = store.stack(space, q)
            print(f"{space} q={q}: mass {t.total_mass()}, {len(t.cells)} cells, {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
