"""Block-parallel enumeration with checkpointing and deterministic merge."""
from __future__ import annotations

import logging
import multiprocessing as mp
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from .table import CensusError, CensusTable, load_census, save_census

log = logging.getLogger(__name__)


@dataclass
class RunOptions:
    workers: int = 1
    block_depth: int = 2
    checkpoint_dir: Optional[Path] = None
    resume: bool = False


def _part_path(d: Path, block_id: str) -> Path:
    return Path(d) / f"block-{block_id}.census"


def run_blocks(
    blocks: Sequence[tuple],
    work: Callable[[tuple], CensusTable],
    empty: Callable[[], CensusTable],
    opts: RunOptions,
) -> CensusTable:
    """Run `work` on every block and fold the partial tables in block order.

    Each block is a tuple whose repr serves as its id.  With a checkpoint
    directory every finished block is written to disk; with resume set,
    blocks already on disk are loaded instead of recomputed.
    """
    ids = ["_".join(str(x).replace(" ", "") for x in b) for b in blocks]
    done = {}
    todo = []
    for b, i in zip(blocks, ids):
        if opts.checkpoint_dir and opts.resume:
            path = _part_path(opts.checkpoint_dir, i)
            if path.exists():
                try:
                    done[i] = load_census(path)
                    continue
                except CensusError:
                    log.warning("discarding unreadable checkpoint %s", path)
        todo.append((b, i))

    def finish(i, t):
        if opts.checkpoint_dir:
            save_census(t, _part_path(opts.checkpoint_dir, i))
        done[i] = t

    if opts.workers <= 1 or len(todo) <= 1:
        for b, i in todo:
            finish(i, work(b))
    else:
        with mp.get_context("fork").Pool(opts.workers) as pool:
            for (b, i), t in zip(todo, pool.imap(work, [b for b, _ in todo])):
                finish(i, t)

    total = empty()
    for i in ids:
        total.merge(done[i])
    return total
