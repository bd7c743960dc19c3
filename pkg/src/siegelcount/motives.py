"""Formal expressions in L and the motive symbols S[...], with Frobenius traces.

A term is coefficient * L^k * (product of at most two symbols).  Symbols:

* ("S", k)        genus 1 cusp form motive S[k]
* ("S", j, k)     genus 2 symbol S[j,k]
* ("S", x, y, z)  genus 3 symbol S[x,y,z]
* ("EC2", a, b)   e_c(A_2, V_{a,b}) itself

Traces come from the censuses through a `Tracer`, which memoizes per
(symbol, q).
"""
from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from pathlib import Path

MAX_FACTORS = 2


class MotiveError(ValueError):
    pass


def dim_S1(k: int) -> int:
    """Dimension of the level-one cusp forms of weight k, with s_2 = -1."""
    if k % 2:
        raise MotiveError(f"odd weight {k}")
    if k < 2:
        raise MotiveError(f"weight {k} < 2")
    if k == 2:
        return -1
    return k // 12 - 1 if k % 12 == 2 else k // 12


def s(k: int) -> int:
    """dim_S1 extended by zero to odd and small weights."""
    if k % 2 or k < 2:
        return 0
    return dim_S1(k)


@dataclass(frozen=True)
class MotiveExpr:
    terms: tuple = ()  # sorted ((lpow, factors), coef)

    @staticmethod
    def _make(d: dict) -> "MotiveExpr":
        return MotiveExpr(tuple(sorted((k, c) for k, c in d.items() if c)))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other):
        other = _lift(other)
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d.get(k, 0) + c
        return MotiveExpr._make(d)

    __radd__ = __add__

    def __neg__(self):
        return MotiveExpr(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        d = {}
        for (l1, f1), c1 in self.terms:
            for (l2, f2), c2 in other.terms:
                f = tuple(sorted(f1 + f2))
                if len(f) > MAX_FACTORS:
                    raise MotiveError("more than two motive factors in one term")
                key = (l1 + l2, f)
                d[key] = d.get(key, 0) + c1 * c2
        return MotiveExpr._make(d)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def symbols(self):
        return sorted({f for (_, fs), _ in self.terms for f in fs})

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (lp, fs), c in sorted(self.terms, key=lambda t: (-t[0][0], t[0][1])):
            mono = "".join(_sym_str(f) for f in fs)
            if lp:
                mono += "L" if lp == 1 else f"L^{lp}"
            if not mono:
                out.append(f"{c:+d}")
            elif c == 1:
                out.append(f"+{mono}")
            elif c == -1:
                out.append(f"-{mono}")
            else:
                out.append(f"{c:+d}{mono}")
        txt = "".join(out)
        return txt[1:] if txt.startswith("+") else txt


def _sym_str(f):
    if f[0] == "S":
        return "S[" + ",".join(map(str, f[1:])) + "]"
    return f"e_c(A2,V_{{{f[1]},{f[2]}}})"


def _lift(x) -> MotiveExpr:
    if isinstance(x, MotiveExpr):
        return x
    if isinstance(x, int):
        return MotiveExpr._make({(0, ()): x})
    raise TypeError(f"cannot use {x!r} as a motive expression")


def const(c: int) -> MotiveExpr:
    return _lift(int(c))


def L(k: int = 1) -> MotiveExpr:
    return MotiveExpr._make({(k, ()): 1})


def S(*idx) -> MotiveExpr:
    """The symbol S[idx] with parity and special-value rules applied."""
    idx = tuple(int(i) for i in idx)
    if len(idx) == 1:
        (k,) = idx
        if k % 2 or k < 2:
            return MotiveExpr()
        if k == 2:
            return -L() - 1
        if dim_S1(k) == 0:
            return MotiveExpr()
    elif len(idx) == 2:
        j, k = idx
        if j % 2 or j < 0 or k < 3:
            return MotiveExpr()
        if (j, k) == (0, 3):
            return -L(3) - L(2) - L() - 1
    elif len(idx) == 3:
        x, y, z = idx
        # |lambda| = x + 2y + 3z - 12 has the parity of x + z
        if (x + z) % 2 or x < 0 or y < 0 or z < 4:
            return MotiveExpr()
        if (x, y, z) == (0, 0, 4):
            return L(6) + L(5) + L(4) + 2 * L(3) + L(2) + L() + 1
    else:
        raise MotiveError(f"bad symbol S{list(idx)}")
    return MotiveExpr._make({(0, (("S",) + idx,)): 1})


def EC2(a: int, b: int) -> MotiveExpr:
    if (a + b) % 2:
        return MotiveExpr()
    return MotiveExpr._make({(0, (("EC2", int(a), int(b)),)): 1})


def rank(e: MotiveExpr, dims: dict | None = None) -> int:
    """Rank of an expression: L^k -> 1, S[k] -> 2 s_k, other symbols from `dims`.

    `dims` maps genus 2/3 symbols to (rank) integers, e.g. 4 s_{j,k}.
    """
    dims = dims or {}
    total = 0
    for (lp, fs), c in e.terms:
        r = 1
        for f in fs:
            if f[0] == "S" and len(f) == 2:
                r *= 2 * s(f[1])
            elif f in dims:
                r *= dims[f]
            else:
                raise MotiveError(f"no rank known for {_sym_str(f)}")
        total += c * r
    return total


# --- parsing ------------------------------------------------------------------


def parse_expr(text: str) -> MotiveExpr:
    """Parse strings like '-S[12]L^3+L^7-L^3+1+S[6,3,6]' or 'S[12](S[20]+L^10+L^9)'."""
    text = text.replace(" ", "").replace("{", "").replace("}", "")
    if not text:
        raise MotiveError("empty expression")
    expr, pos = _parse_sum(text, 0)
    if pos != len(text):
        raise MotiveError(f"cannot parse {text!r} at position {pos}")
    return expr


def _parse_sum(t, i):
    total = MotiveExpr()
    first = True
    while i < len(t) and t[i] != ")":
        sign = 1
        if t[i] in "+-":
            sign = -1 if t[i] == "-" else 1
            i += 1
        elif not first:
            raise MotiveError(f"expected + or - at {i} in {t!r}")
        term, i = _parse_product(t, i)
        total = total + sign * term
        first = False
    return total, i


def _parse_product(t, i):
    m = re.match(r"\d+", t[i:])
    coef = 1
    if m:
        coef = int(m.group())
        i += m.end()
    out = const(coef)
    seen = bool(m)
    while i < len(t):
        if t[i] == "S":
            m = re.match(r"S\[([\d,]+)\]", t[i:])
            if not m:
                raise MotiveError(f"bad symbol at {i} in {t!r}")
            out = out * S(*map(int, m.group(1).split(",")))
            i += m.end()
        elif t.startswith("e_c(", i):
            m = re.match(r"e_c\(A2,V_(\d+),(\d+)\)", t[i:])
            if not m:
                raise MotiveError(f"bad e_c term at {i} in {t!r}")
            out = out * EC2(int(m.group(1)), int(m.group(2)))
            i += m.end()
        elif t[i] == "*":
            i += 1
            continue
        elif t[i] == "L":
            m = re.match(r"L(?:\^(\d+))?", t[i:])
            out = out * L(int(m.group(1) or 1))
            i += m.end()
        elif t[i] == "(":
            inner, i = _parse_sum(t, i + 1)
            if i >= len(t) or t[i] != ")":
                raise MotiveError(f"unbalanced parenthesis in {t!r}")
            out = out * inner
            i += 1
        else:
            break
        seen = True
    if not seen:
        raise MotiveError(f"empty term at {i} in {t!r}")
    return out, i


# --- genus-1 and genus-2 recipes -------------------------------------------------

def e2_extr_expr(a: int, b: int) -> MotiveExpr:
    """Extraneous part of e_c(A_2, V_{a,b}) for a >= b >= 0, a + b even."""
    if a < b or b < 0:
        raise MotiveError(f"({a},{b}) is not a partition")
    if (a + b) % 2:
        raise MotiveError(f"({a},{b}) has odd weight")
    e = -s(a + b + 4) * S(a - b + 2) * L(b + 1) + s(a - b + 2) - s(a + b + 4) * L(b + 1)
    if a % 2 == 0:
        e = e + S(b + 2) + 1
    else:
        e = e - S(a + 3)
    return e


def sk_expr(a: int, b: int | None = None) -> MotiveExpr:
    """Saito-Kurokawa correction for a = b odd; zero otherwise."""
    b = a if b is None else b
    if a != b or a % 2 == 0:
        return MotiveExpr()
    return -S(2 * a + 4) - s(2 * a + 4) * (L(a + 1) + L(a + 2))


def delta_tau(p: int) -> int:
    """tau(p) from the product expansion q prod (1 - q^n)^24."""
    n = p
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for m in range(1, n + 1):
        for _ in range(24):
            for i in range(n, m - 1, -1):
                coeffs[i] -= coeffs[i - m]
    return coeffs[p - 1]


# --- traces -----------------------------------------------------------------------

@dataclass
class Tracer:
    """Evaluates Frobenius traces of expressions using censuses from `store`."""

    store: object = None
    _memo: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        if self.store is None:
            from .census.store import CensusStore

            self.store = CensusStore()

    def _cached(self, key, fn):
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        v = fn()
        with self._lock:
            self._memo[key] = v
        return v

    def e_c(self, space: str, parts, q: int) -> int:
        from .symplectic import trace_local_system

        parts = tuple(parts)
        if sum(parts) % 2:
            return 0

        def run():
            v = trace_local_system(self.store.stack(space, q), parts)
            return int(v)

        return self._cached(("e_c", space, parts, q), run)

    def trace_S1(self, k: int, q: int) -> int:
        if k % 2 or k < 2:
            return 0
        if k == 2:
            return -q - 1
        return self._cached(("S", k, q), lambda: -self.e_c("A1", (k - 2,), q) - 1)

    def trace_S2(self, j: int, k: int, q: int) -> int:
        if (j, k) == (0, 3):
            return -q ** 3 - q ** 2 - q - 1
        a, b = j + k - 3, k - 3
        if b < 0 or j < 0:
            raise MotiveError(f"S[{j},{k}] is outside the genus-2 range")
        if (a + b) % 2:
            return 0
        return self._cached(("S", j, k, q),
                            lambda: -self.e_c("A2", (a, b), q) + self.trace(e2_extr_expr(a, b), q))

    def trace_S3(self, x: int, y: int, z: int, q: int) -> int:
        from .conjectures import predict_hecke_trace_g3

        lam = (x + y + z - 4, y + z - 4, z - 4)
        return self._cached(("S", x, y, z, q), lambda: predict_hecke_trace_g3(lam, q, self))

    def symbol(self, f, q: int) -> int:
        if f[0] == "EC2":
            return self.e_c("A2", f[1:], q)
        if len(f) == 2:
            return self.trace_S1(f[1], q)
        if len(f) == 3:
            return self.trace_S2(f[1], f[2], q)
        if len(f) == 4:
            return self.trace_S3(*f[1:], q)
        raise MotiveError(f"unresolvable symbol {f}")

    def trace(self, e: MotiveExpr, q: int) -> int:
        total = 0
        for (lp, fs), c in e.terms:
            v = c * q ** lp
            for f in fs:
                if not v:
                    break
                v *= self.symbol(f, q)
            total += v
        return total


# --- eigenform tables -----------------------------------------------------------------

@dataclass(frozen=True)
class EigenformRow:
    space: str
    q: int
    value: int
    mode: str = "eigenvalue"


def load_eigenforms(path) -> dict:
    """Rows 'space q value [mode]' keyed by (space, q); '#' starts a comment."""
    rows = {}
    for n, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (3, 4):
            raise MotiveError(f"{path}:{n}: expected 'space q value [mode]'")
        try:
            row = EigenformRow(parts[0], int(parts[1]), int(parts[2]), parts[3] if len(parts) == 4 else "eigenvalue")
        except ValueError as e:
            raise MotiveError(f"{path}:{n}: {e}") from e
        if row.mode not in ("eigenvalue", "norm"):
            raise MotiveError(f"{path}:{n}: unknown mode {row.mode!r}")
        key = (row.space, row.q)
        if key in rows and rows[key] != row:
            raise MotiveError(f"{path}:{n}: conflicting duplicate row for {key}")
        rows[key] = row
    return rows


def parse_space(label: str):
    """'S_12' -> (12,), 'S_{4,10}' -> (4, 10), 'S_{6,3,6}' -> (6, 3, 6)."""
    m = re.fullmatch(r"S_\{?([\d,]+)\}?", label.strip())
    if not m:
        raise MotiveError(f"bad space label {label!r}")
    return tuple(int(x) for x in m.group(1).split(","))


def space_trace(tracer: Tracer, label: str, q: int) -> int:
    """Trace of T(q) on a space given by label, from the censuses."""
    idx = parse_space(label)
    if len(idx) == 1:
        return tracer.trace_S1(idx[0], q)
    if len(idx) == 2:
        return tracer.trace_S2(*idx, q)
    return tracer.trace_S3(*idx, q)


def space_dim(label: str):
    """Dimension when the space is a genus-1 space; None otherwise."""
    idx = parse_space(label)
    if len(idx) == 1:
        return s(idx[0])
    return None

