"""On-disk cache of censuses and assembled stack censuses."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from .runner import RunOptions
from .table import CensusError, CensusTable, load_census, save_census

log = logging.getLogger(__name__)

DATA_ENV = "SIEGELCOUNT_DATA"


def default_data_dir() -> Path:
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "siegelcount"


def build_census(family: str, q: int, opts: RunOptions | None = None, longrun: bool = False) -> CensusTable:
    if family == "elliptic":
        from .elliptic import enumerate_elliptic

        return enumerate_elliptic(q)
    if family in ("hyper2", "hyper3"):
        from .hyperelliptic import enumerate_hyperelliptic

        return enumerate_hyperelliptic(int(family[-1]), q, opts, longrun=longrun)
    if family == "quartic":
        from .quartic import enumerate_quartics

        return enumerate_quartics(q, opts, longrun=longrun)
    raise CensusError(f"unknown curve family {family!r}")


@dataclass
class CensusStore:
    """Loads censuses from `root`, building and saving the missing ones."""

    root: Path = field(default_factory=default_data_dir)
    build: bool = True
    opts: RunOptions = field(default_factory=RunOptions)
    longrun: bool = False
    _mem: dict = field(default_factory=dict, repr=False)

    def path(self, family: str, q: int) -> Path:
        return Path(self.root) / f"{family}-{q}.census"

    def get(self, family: str, q: int, force: bool = False) -> CensusTable:
        key = (family, q)
        if key in self._mem and not force:
            return self._mem[key]
        path = self.path(family, q)
        t = None
        if path.exists() and not force:
            t = load_census(path)
        if t is None:
            if not self.build:
                raise CensusError(f"census {path} not found")
            log.info("building %s census over F_%d", family, q)
            if family in ("A1", "A2", "A3"):
                t = self._assemble(family, q)
            else:
                opts = self.opts
                if opts.checkpoint_dir is None and family == "quartic":
                    opts = RunOptions(opts.workers, opts.block_depth,
                                      Path(self.root) / f"blocks-{family}-{q}", opts.resume)
                t = build_census(family, q, opts, self.longrun)
            save_census(t, path)
        self._mem[key] = t
        return t

    def _assemble(self, space: str, q: int) -> CensusTable:
        from ..strata import assemble

        inputs = {"elliptic1": self.get("elliptic", q)}
        if space in ("A2", "A3"):
            inputs["elliptic2"] = self.get("elliptic", q * q)
            inputs["hyper2"] = self.get("hyper2", q)
        if space == "A3":
            inputs["elliptic3"] = self.get("elliptic", q ** 3)
            inputs["hyper3"] = self.get("hyper3", q)
            inputs["quartic"] = self.get("quartic", q)
        return assemble(space, q, inputs)

    def stack(self, space: str, q: int) -> CensusTable:
        return self.get(space, q)
