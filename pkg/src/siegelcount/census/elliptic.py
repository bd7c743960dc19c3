"""Elliptic curve censuses over F_q from Weierstrass models.

Three strategies:

* "long": every long Weierstrass 5-tuple, weight 1/(q^3 (q-1)).
* "short": odd characteristic.  For p >= 5 the models y^2 = x^3 + a x + b
  with weight 1/(q-1); for p = 3 the models y^2 = x^3 + a2 x^2 + a4 x + a6
  with weight 1/(q (q-1)).  Coefficients are reduced to representatives
  of F_q^* modulo powers where the scaling acts freely on the rest.
* "normal": characteristic 2 normal forms.  Ordinary curves
  y^2 + xy = x^3 + a2 x^2 + a6 (a2 in {0, d}, Tr d = 1, a6 != 0) have two
  automorphisms; supersingular ones y^2 + a3 y = x^3 + a4 x + a6 are counted
  over all models with weight 1/(q^2 (q-1)), a3 reduced modulo cubes.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np

from ..ff import FiniteField, field_of_size
from .table import CensusError, CensusTable

LONG_MAX_Q = {"odd": 27, "char2": 64}
SHORT_MAX_Q = {"p>=5": 4913, "p=3": 2187}
NORMAL_MAX_Q = 4096


def elliptic_cell(a1: int, q: int):
    return (a1, a1 * a1 - 2 * q, a1 ** 3 - 3 * q * a1)


def _hist_size(q):
    off = 2 * isqrt(q) + 2
    return off, 2 * off + 1


def _tables(F: FiniteField):
    return F.exp_table.astype(np.int64), F.log_table.astype(np.int64)


def _power_class_reps(F: FiniteField, k: int):
    """Representatives of F^* / (F^*)^k with class sizes."""
    m = np.gcd(k, F.q - 1)
    size = (F.q - 1) // m
    return [(int(F.exp_table[i]), size) for i in range(m)]


def _to_table(q, hist_weights):
    t = CensusTable("elliptic", q, 1)
    for hist, off, w in hist_weights:
        for i in np.nonzero(hist)[0]:
            t.add(elliptic_cell(int(i) - off, q), w * int(hist[i]))
    return t


def _long(F: FiniteField):
    from .kernels import elliptic_long_char2_block, elliptic_long_odd_block

    q, p, n = F.q, F.p, F.n
    exp_t, log_t = _tables(F)
    off, size = _hist_size(q)
    hist = np.zeros(size, dtype=np.int64)
    if p == 2:
        tr = F.trace_table().astype(np.int64)
        tdual = np.zeros(q, dtype=np.int64)
        for b in range(q):
            tdual[b] = sum(int(tr[F.mul(b, 1 << i)]) << i for i in range(n))
        for a1 in range(q):
            for a2 in range(q):
                elliptic_long_char2_block(q, a1, a2, exp_t, log_t, tr, tdual, hist, off)
    else:
        chi = F.sq_char_table().astype(np.int64)
        for a1 in range(q):
            for a2 in range(q):
                elliptic_long_odd_block(q, p, n, a1, a2, exp_t, log_t, chi, hist, off)
    return _to_table(q, [(hist, off, Fraction(1, q ** 3 * (q - 1)))])


def _short(F: FiniteField):
    from .kernels import elliptic_cubic_block

    q, p, n = F.q, F.p, F.n
    exp_t, log_t = _tables(F)
    chi = F.sq_char_table().astype(np.int64)
    off, size = _hist_size(q)
    parts = []
    if p == 3:
        # a2 = 0: a4 up to 4th powers; a2 != 0: x -> x + r moves a4 to 0
        for a4, cls in [(0, 1)] + _power_class_reps(F, 4):
            hist = np.zeros(size, dtype=np.int64)
            elliptic_cubic_block(q, p, n, 0, a4, exp_t, log_t, chi, hist, off)
            parts.append((hist, off, Fraction(cls, q * (q - 1))))
        for a2, cls in _power_class_reps(F, 2):
            hist = np.zeros(size, dtype=np.int64)
            elliptic_cubic_block(q, p, n, a2, 0, exp_t, log_t, chi, hist, off)
            parts.append((hist, off, Fraction(cls * q, q * (q - 1))))
    else:
        for a4, cls in [(0, 1)] + _power_class_reps(F, 4):
            hist = np.zeros(size, dtype=np.int64)
            elliptic_cubic_block(q, p, n, 0, a4, exp_t, log_t, chi, hist, off)
            parts.append((hist, off, Fraction(cls, q - 1)))
    return _to_table(q, parts)


def _normal(F: FiniteField):
    from .kernels import elliptic_ordinary_char2, elliptic_supersingular_char2

    q = F.q
    exp_t, log_t = _tables(F)
    tr = F.trace_table().astype(np.int64)
    off, size = _hist_size(q)
    hist = np.zeros(size, dtype=np.int64)
    elliptic_ordinary_char2(q, exp_t, log_t, tr, hist, off)
    parts = [(hist, off, Fraction(1, 2))]
    for a3, cls in _power_class_reps(F, 3):
        h = np.zeros(size, dtype=np.int64)
        elliptic_supersingular_char2(q, a3, exp_t, log_t, tr, h, off)
        parts.append((h, off, Fraction(cls, q * q * (q - 1))))
    return _to_table(q, parts)


def default_strategy(q: int) -> str:
    return "normal" if q % 2 == 0 else "short"


def enumerate_elliptic(q: int, strategy: str | None = None) -> CensusTable:
    """Census of elliptic curves over F_q weighted by 1/|Aut|; total mass q."""
    F = field_of_size(q)
    strategy = strategy or default_strategy(q)
    if strategy == "long":
        bound = LONG_MAX_Q["char2" if F.p == 2 else "odd"]
        run = _long
    elif strategy == "short":
        if F.p == 2:
            raise CensusError("short models need odd characteristic")
        bound = SHORT_MAX_Q["p=3" if F.p == 3 else "p>=5"]
        run = _short
    elif strategy == "normal":
        if F.p != 2:
            raise CensusError("normal forms are for characteristic 2")
        bound = NORMAL_MAX_Q
        run = _normal
    else:
        raise CensusError(f"unknown elliptic strategy {strategy!r}")
    if q > bound:
        raise CensusError(f"elliptic census ({strategy}) q={q} exceeds the bound {bound}")
    t = run(F)
    t.meta["strategy"] = strategy
    if t.total_mass() != q:
        raise CensusError(f"elliptic census mass {t.total_mass()} != {q}")
    t.validate()
    return t
