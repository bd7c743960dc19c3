"""Flat array packing of a field tower for the compiled kernels."""
from __future__ import annotations

import numpy as np

from ..ff import FiniteField, embedding_table, make_field


class FieldPack:
    """Tables of F_{q^1..q^levels} concatenated with per-level offsets."""

    def __init__(self, F: FiniteField, levels: int = 3):
        p, n = F.p, F.n
        self.base = F
        self.fields = fields = [make_field(p, n * k) for k in range(1, levels + 1)]
        self.char2 = p == 2
        self.sizes = np.array([K.q for K in fields], dtype=np.int64)
        self.exp_all = np.concatenate([K.exp_table for K in fields])
        self.log_all = np.concatenate([K.log_table for K in fields])
        self.exp_off = _offsets([len(K.exp_table) for K in fields])
        self.log_off = _offsets([K.q for K in fields])
        self.neg_all = np.concatenate([K.neg_table.astype(np.int64) for K in fields])
        self.neg_off = self.log_off
        if self.char2:
            self.add_all = np.zeros(1, dtype=np.int64)
            self.add_off = np.zeros(levels, dtype=np.int64)
            self.tr_all = np.concatenate([K.trace_table().astype(np.int64) for K in fields])
            self.tr_off = self.log_off
        else:
            self.add_all = np.concatenate([K.add_table.ravel().astype(np.int64) for K in fields])
            self.add_off = _offsets([K.q ** 2 for K in fields])
            self.chi_all = np.concatenate([K.sq_char_table().astype(np.int64) for K in fields])
            self.chi_off = self.log_off
        self.emb = np.zeros((levels, F.q), dtype=np.int64)
        for lev in range(levels):
            self.emb[lev] = embedding_table(p, n, lev + 1)

    def arith(self):
        return (self.exp_all, self.log_all, self.exp_off, self.log_off)


def _offsets(lengths):
    return np.cumsum([0] + list(lengths[:-1])).astype(np.int64)


def line_orbit_reps(F: FiniteField, levels: int = 3):
    """Frobenius orbit representatives of the affine line over F_{q^d}, d <= levels.

    Returns (lev_of, deg_of, points) with each orbit of exact degree d stored
    once as an element of F_{q^d}.
    """
    q = F.q
    lev_of, deg_of, pts = [], [], []
    for lev in range(levels):
        K = make_field(F.p, F.n * (lev + 1))
        seen = set()
        for x in range(K.q):
            if x in seen:
                continue
            orbit = [x]
            y = K.pow(x, q)
            while y != x:
                orbit.append(y)
                y = K.pow(y, q)
            seen.update(orbit)
            if len(orbit) == lev + 1:
                lev_of.append(lev)
                deg_of.append(lev + 1)
                pts.append(x)
    return np.array(lev_of, dtype=np.int64), np.array(deg_of, dtype=np.int64), pts


def weil_offsets(g: int, q: int):
    b = [int(np.floor(2 * g * np.sqrt(float(q) ** i))) + 1 for i in (1, 2, 3)]
    return b, tuple(2 * x + 1 for x in b)
