"""Census tables: exact masses indexed by Frobenius cells, and their file format."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path

FORMAT_VERSION = "v1"
FAMILIES = {"elliptic": 1, "hyper2": 2, "hyper3": 3, "quartic": 3, "A1": 1, "A2": 2, "A3": 3}


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class FrobeniusCell:
    a1: int
    a2: int
    a3: int
    g: int
    q: int

    def __post_init__(self):
        check_weil(self.key, self.g, self.q)

    @property
    def key(self):
        return (self.a1, self.a2, self.a3)


def check_weil(key, g, q):
    for i, a in enumerate(key, start=1):
        if a * a > 4 * g * g * q ** i:
            raise CensusError(f"cell {key} violates the Weil bound for g={g}, q={q}")


@dataclass
class CensusTable:
    family: str
    q: int
    g: int
    cells: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise CensusError(f"unknown family {self.family!r}")

    def add(self, key, mass):
        key = tuple(int(a) for a in key)
        mass = Fraction(mass)
        # numpy integers inside a Fraction overflow silently later on
        mass = Fraction(int(mass.numerator), int(mass.denominator))
        m = self.cells.get(key, 0) + mass
        if m:
            self.cells[key] = m
        else:
            self.cells.pop(key, None)

    def merge(self, other: "CensusTable"):
        if (other.q, other.g) != (self.q, self.g):
            raise CensusError("cannot merge tables over different fields or genera")
        for k, m in other.cells.items():
            self.add(k, m)
        return self

    def total_mass(self) -> Fraction:
        return sum(self.cells.values(), Fraction(0))

    def moment(self, fn) -> Fraction:
        return sum((m * fn(*k) for k, m in self.cells.items()), Fraction(0))

    def cell_objects(self):
        return [FrobeniusCell(*k, self.g, self.q) for k in sorted(self.cells)]

    def validate(self):
        for k, m in self.cells.items():
            check_weil(k, self.g, self.q)
            if m <= 0:
                raise CensusError(f"non-positive mass at {k}")

    def body_lines(self):
        lines = []
        for k in sorted(self.cells):
            m = Fraction(self.cells[k])
            lines.append(f"{k[0]} {k[1]} {k[2]} {m.numerator} {m.denominator}")
        return lines

    def checksum(self) -> str:
        return hashlib.sha256("\n".join(self.body_lines()).encode()).hexdigest()

    def __eq__(self, other):
        return (
            isinstance(other, CensusTable)
            and (self.family, self.q, self.g) == (other.family, other.q, other.g)
            and self.cells == other.cells
        )


def save_census(t: CensusTable, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    out = [f"SIEGELCENSUS {FORMAT_VERSION} family={t.family} q={t.q} g={t.g}"]
    out += [f"# {k}={v}" for k, v in sorted(t.meta.items())]
    out += t.body_lines()
    out.append(f"CHECKSUM {t.checksum()}")
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text("\n".join(out) + "\n")
    tmp.replace(path)
    return path


def load_census(path) -> CensusTable:
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise CensusError(f"{path}: empty file")
    head = lines[0].split()
    if len(head) < 2 or head[0] != "SIEGELCENSUS":
        raise CensusError(f"{path}: not a census file")
    if head[1] != FORMAT_VERSION:
        raise CensusError(f"{path}: unsupported version {head[1]}")
    try:
        kv = dict(h.split("=", 1) for h in head[2:])
        t = CensusTable(kv["family"], int(kv["q"]), int(kv["g"]))
    except (KeyError, ValueError) as e:
        raise CensusError(f"{path}: bad header") from e
    if not lines[-1].startswith("CHECKSUM "):
        raise CensusError(f"{path}: checksum line missing (truncated file?)")
    for n, line in enumerate(lines[1:-1], start=2):
        if line.startswith("#"):
            k, _, v = line[1:].strip().partition("=")
            t.meta[k] = v
            continue
        parts = line.split()
        if len(parts) != 5:
            raise CensusError(f"{path}:{n}: malformed cell line")
        a1, a2, a3, num, den = map(int, parts)
        if den <= 0 or gcd(num, den) != 1:
            raise CensusError(f"{path}:{n}: mass not in lowest terms")
        t.cells[(a1, a2, a3)] = Fraction(num, den)
    if t.checksum() != lines[-1].split()[1]:
        raise CensusError(f"{path}: checksum mismatch")
    return t
