"""Frobenius traces of the symplectic local systems V_lambda at census cells."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .census.table import CensusTable

log = logging.getLogger(__name__)

MAX_WEIGHT_G3 = 60


class SymplecticError(ValueError):
    pass


@dataclass(frozen=True)
class LocalSystem:
    parts: tuple

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if not 1 <= len(p) <= 3:
            raise SymplecticError("genus must be 1, 2 or 3")
        if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise SymplecticError(f"{p} is not a partition")
        if len(p) == 3 and sum(p) > MAX_WEIGHT_G3:
            raise SymplecticError(f"weight of {p} exceeds {MAX_WEIGHT_G3}")
        object.__setattr__(self, "parts", p)

    @classmethod
    def parse(cls, text: str) -> "LocalSystem":
        try:
            return cls(tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",")))
        except ValueError as e:
            raise SymplecticError(f"cannot parse local system {text!r}") from e

    @property
    def g(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def siegel_weight(self) -> tuple:
        p = self.parts
        return tuple(p[i] - p[i + 1] for i in range(len(p) - 1)) + (p[-1] + len(p) + 1,)

    def __str__(self):
        return ",".join(map(str, self.parts))


def _exact_div(a: int, b: int) -> int:
    if a % b:
        raise SymplecticError("non-integral zeta coefficient (corrupt cell?)")
    return a // b


def zeta_coeffs(cell, g: int, q: int) -> tuple:
    """e_1..e_2g of the 2g Frobenius eigenvalues from the power sums (a1, a2, a3)."""
    P1, P2, P3 = (tuple(cell) + (0, 0, 0))[:3]
    e = [1, P1, _exact_div(P1 * P1 - P2, 2), _exact_div(P1 ** 3 - 3 * P1 * P2 + 2 * P3, 6)]
    out = [0] * (2 * g + 1)
    out[0] = 1
    for k in range(1, g + 1):
        out[k] = e[k]
    for k in range(0, g):
        out[2 * g - k] = q ** (g - k) * out[k]
    return tuple(out[1:])


def complete_homogeneous(ec, m: int) -> int:
    """h_m of the eigenvalue alphabet with elementary symmetric functions ec."""
    h = [1]
    e = (1,) + tuple(ec)
    for n in range(1, m + 1):
        s = 0
        for k in range(1, min(n, len(e) - 1) + 1):
            s += (-1) ** (k - 1) * e[k] * h[n - k]
        h.append(s)
    return h[m]


def _h_list(ec, m):
    h = [1]
    e = (1,) + tuple(ec)
    for n in range(1, m + 1):
        h.append(sum((-1) ** (k - 1) * e[k] * h[n - k] for k in range(1, min(n, len(e) - 1) + 1)))
    return h


def _det(M):
    """Exact determinant of a small integer matrix (cofactor expansion)."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    return sum((-1) ** j * M[0][j] * _det([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(n) if M[0][j])


def _parts(lam):
    return lam.parts if isinstance(lam, LocalSystem) else tuple(lam)


def sp_character(lam, cell, q: int, g: int | None = None) -> int:
    """Trace of Frobenius on V_lambda at a cell: the homogenized Sp(2g) character."""
    parts = _parts(lam)
    g = g or len(parts)
    if len(parts) > g:
        raise SymplecticError("genus mismatch between local system and cell")
    return _character_from_e(parts, zeta_coeffs(cell, g, q), q)


def _character_from_e(parts, ec, q):
    parts = tuple(x for x in parts if x)
    ell = len(parts)
    if ell == 0:
        return 1
    h = _h_list(ec, parts[0] + ell)

    def H(m):
        return h[m] if m >= 0 else 0

    M = [[H(parts[i] - i + j) + q ** j * H(parts[i] - i - j) for j in range(ell)] for i in range(ell)]
    d = _det(M)
    if not isinstance(d, int):
        return Fraction(d) / 2
    if d % 2:
        raise SymplecticError("odd character determinant")
    return d // 2


def weyl_character(parts, xs, t) -> Fraction:
    """Weyl character formula for Sp(2g) homogenized by t, exact.

    xs are g eigenvalues; the others are t/x.  Requires t to be the square
    of a rational s, so that x/s and s/x are the normalized eigenvalues.
    """
    t = Fraction(t)
    s = _rational_sqrt(t)
    g = len(xs)
    parts = tuple(parts) + (0,) * (g - len(parts))
    ys = [Fraction(x) / s for x in xs]

    def alt(exps):
        return _fdet([[y ** m - y ** (-m) for y in ys] for m in exps])

    num = alt([parts[i] + g - i for i in range(g)])
    den = alt([g - i for i in range(g)])
    if den == 0:
        raise SymplecticError("Weyl denominator vanishes at this point")
    return s ** sum(parts) * num / den


def _rational_sqrt(t: Fraction) -> Fraction:
    from math import isqrt

    a, b = t.numerator, t.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra != a or rb * rb != b:
        raise SymplecticError("homogenizing parameter must be a rational square")
    return Fraction(ra, rb)


def _fdet(M):
    n = len(M)
    M = [list(r) for r in M]
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            for k in range(c, n):
                M[r][k] -= f * M[c][k]
    return d


def power_sums(xs, t, k: int = 3):
    """(a1..ak): power sums of {x_i, t/x_i}."""
    t = Fraction(t)
    return tuple(sum(Fraction(x) ** i + (t / Fraction(x)) ** i for x in xs) for i in range(1, k + 1))


@lru_cache(maxsize=None)
def weyl_dimension(parts) -> int:
    g = len(parts)
    return sp_character(parts, (2 * g, 2 * g, 2 * g), 1)


def trace_local_system(census: CensusTable, lam) -> Fraction:
    """Sum over cells of mass times the character: Tr(F_q, e_c(A_g, V_lambda))."""
    parts = _parts(lam)
    parts = tuple(parts) + (0,) * (census.g - len(parts))
    if len(parts) != census.g:
        raise SymplecticError(f"local system {parts} does not match genus {census.g}")
    if sum(parts) % 2:
        log.warning("odd weight local system %s: trace is 0", parts)
        return Fraction(0)
    q = census.q
    total = Fraction(0)
    for cell, m in census.cells.items():
        total += m * _character_from_e(parts, zeta_coeffs(cell, census.g, q), q)
    if census.family in ("A1", "A2", "A3") and total.denominator != 1:
        raise SymplecticError(f"non-integral trace {total} for {parts} over F_{q}")
    return total
