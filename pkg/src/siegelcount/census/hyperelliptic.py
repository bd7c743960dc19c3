"""Hyperelliptic curves of genus 2 and 3: models, point counts and censuses.

Odd characteristic models are y^2 = f(x) with f a binary form of degree
2g+2 (coefficients f[0..2g+2], constant term first).  In characteristic 2
models are pairs (h, f) for y^2 + h(x) y = f(x) with deg h <= g+1 and
deg f <= 2g+2.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .. import poly as P
from ..ff import FiniteField, embedding_table, field_of_size, make_field
from .packing import FieldPack, line_orbit_reps, weil_offsets
from .runner import RunOptions, run_blocks
from .table import CensusError, CensusTable

ODD_MAX_Q = {2: 17, 3: 11}
CHAR2_MAX_Q = {2: 16, 3: 8}


def gl2_order(q: int) -> int:
    return (q * q - 1) * (q * q - q)


def _deg(a):
    return len(P.trim(a)) - 1


def hyperelliptic_model_filter(F: FiniteField, g: int, model) -> bool:
    if F.p != 2:
        f = P.trim(model)
        if _deg(f) not in (2 * g + 1, 2 * g + 2):
            return False
        return P.is_squarefree(F, f)
    h, f = (list(m) for m in model)
    if len(h) > g + 2 or len(f) > 2 * g + 3:
        return False
    h = h + [0] * (g + 2 - len(h))
    f = f + [0] * (2 * g + 3 - len(f))
    dh, df = _deg(h), _deg(f)
    if dh < 0 or max(2 * dh, df) not in (2 * g + 1, 2 * g + 2):
        return False
    flipped = (list(reversed(h)), list(reversed(f)))
    return all(_char2_chart_smooth(F, hh, ff) for hh, ff in ((h, f), flipped))


def _char2_chart_smooth(F, h, f):
    """No x with h(x) = 0 and f'(x)^2 = h'(x)^2 f(x)."""
    h, f = P.trim(h), P.trim(f)
    if not h:
        return False
    if len(h) == 1:
        return True
    fd, hd = P.derivative(F, f), P.derivative(F, h)
    cond = P.add(F, P.mul(F, fd, fd), P.mul(F, P.mul(F, hd, hd), f))
    return len(P.gcd(F, h, cond)) == 1


def count_points_hyperelliptic(F: FiniteField, g: int, model, i: int) -> int:
    """|C(F_{q^i})| for a model passing hyperelliptic_model_filter."""
    if not hyperelliptic_model_filter(F, g, model):
        raise ValueError("model fails the smoothness/genus filter")
    K = make_field(F.p, F.n * i)
    emb = embedding_table(F.p, F.n, i)
    if F.p != 2:
        f = [int(emb[c]) for c in model] + [0] * (2 * g + 3 - len(model))
        chi = K.sq_char_table()
        total = 1 + int(chi[f[2 * g + 2]])
        for x in range(K.q):
            total += 1 + int(chi[P.evaluate(K, f, x)])
        return total
    h, f = (list(m) for m in model)
    h = [int(emb[c]) for c in h] + [0] * (g + 2 - len(h))
    f = [int(emb[c]) for c in f] + [0] * (2 * g + 3 - len(f))
    tr = K.trace_table()

    def fiber(hv, fv):
        if hv == 0:
            return 1
        return 2 - 2 * int(tr[K.div(fv, K.mul(hv, hv))])

    total = fiber(h[g + 1], f[2 * g + 2])
    for x in range(K.q):
        total += fiber(P.evaluate(K, h, x), P.evaluate(K, f, x))
    return total


# --- odd characteristic census ------------------------------------------------

class _OddContext:
    def __init__(self, g, F):
        self.g, self.F = g, F
        self.pack = pk = FieldPack(F, 3)
        self.lev_of, self.deg_of, pts = line_orbit_reps(F, 3)
        N = 2 * g + 3
        npts = len(pts)
        self.xpow = np.zeros((N, npts), dtype=np.int64)
        self.addvec = np.zeros((N, F.n, npts), dtype=np.int64)
        for k, (x, lev) in enumerate(zip(pts, self.lev_of)):
            K = pk.fields[lev]
            for j in range(N):
                xj = K.pow(x, j)
                self.xpow[j, k] = xj
                for d in range(F.n):
                    self.addvec[j, d, k] = K.mul(int(pk.emb[lev, F.p ** d]), xj)
        self.offsets, self.shape = weil_offsets(g, F.q)

    def run(self, prefix):
        from .kernels import hyper_odd_block

        pk, F = self.pack, self.F
        hist = np.zeros(self.shape, dtype=np.int64)
        hyper_odd_block(
            self.g, F.q, F.p, F.n, np.asarray(prefix, dtype=np.int64),
            self.lev_of, self.deg_of, self.xpow, self.addvec, pk.emb, pk.chi_all, pk.chi_off,
            pk.exp_all, pk.log_all, pk.exp_off, pk.log_off, pk.add_all, pk.add_off, pk.sizes,
            pk.neg_all, pk.neg_off, hist, *self.offsets,
        )
        return hist


_CTX = {}


def _ctx(kind, g, q):
    key = (kind, g, q)
    if key not in _CTX:
        F = field_of_size(q)
        _CTX[key] = _OddContext(g, F) if kind == "odd" else _Char2Context(g, F)
    return _CTX[key]


def _hist_to_table(hist, offsets, family, q, g, weight):
    t = CensusTable(family, q, g)
    for idx in zip(*np.nonzero(hist)):
        key = tuple(int(idx[i]) - offsets[i] for i in range(3))
        t.add(key, weight * int(hist[idx]))
    return t


def _odd_work(block):
    g, q, prefix = block[0], block[1], block[2:]
    c = _ctx("odd", g, q)
    return _hist_to_table(c.run(prefix), c.offsets, f"hyper{g}", q, g, Fraction(1, gl2_order(q)))


# --- characteristic 2 census --------------------------------------------------

def _binary_form_orbits(F: FiniteField, deg: int):
    """Orbits of nonzero binary forms of degree `deg` under GL_2 x scalars.

    Forms are coefficient tuples (constant term first).  Returns a list of
    (representative, orbit size) with the least-index representative.
    """
    q = F.q
    L = deg + 1

    def enc(h):
        v = 0
        for c in reversed(h):
            v = v * q + c
        return v

    def dec(v):
        out = []
        for _ in range(L):
            out.append(v % q)
            v //= q
        return out

    def translate(h, a):
        out = [0] * L
        for j, c in enumerate(h):
            if c == 0:
                continue
            # (x + a)^j = sum_i C(j, i) a^(j-i) x^i
            for i in range(j + 1):
                b = _binom_mod(j, i, F.p)
                if b:
                    out[i] = F.add(out[i], F.mul(F.mul(c, F.from_int(b)), F.pow(a, j - i)))
        return out

    w = F.generator
    gens = [lambda h, a=F.p ** b: translate(h, a) for b in range(F.n)]
    gens.append(lambda h: [F.mul(c, F.pow(w, j)) for j, c in enumerate(h)])
    gens.append(lambda h: list(reversed(h)))
    gens.append(lambda h: [F.mul(c, w) for c in h])

    size = q ** L
    parent = list(range(size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for v in range(1, size):
        h = dec(v)
        for gfn in gens:
            u = enc(gfn(h))
            ra, rb = find(v), find(u)
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
    counts = {}
    for v in range(1, size):
        r = find(v)
        counts[r] = counts.get(r, 0) + 1
    return [(tuple(dec(r)), n) for r, n in sorted(counts.items())]


def _binom_mod(n, k, p):
    # Lucas
    out = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        c = 1
        for i in range(b):
            c = c * (a - i) // (i + 1)
        out = out * c % p
        n //= p
        k //= p
    return out


def artin_schreier_complement(F: FiniteField, g: int, h):
    """F_2-basis of a complement of {u^2 + h u : deg u <= g+1} in {deg f <= 2g+2}.

    Coordinates of f are the bits of its coefficient indices, coefficient j
    bit b at position j*n + b; the complement is spanned by the unit vectors
    at the non-pivot positions of the subspace in reduced echelon form.
    """
    n = F.n
    N = 2 * g + 3
    rows = []
    for j in range(g + 2):
        for b in range(n):
            u = [0] * (j + 1)
            u[j] = 1 << b
            w = P.add(F, P.mul(F, u, u), P.mul(F, u, list(h)))
            vec = 0
            for pos, c in enumerate(w):
                vec |= c << (pos * n)
            rows.append(vec)
    pivots = []
    basis = []
    for r in rows:
        for pv, bv in zip(pivots, basis):
            if (r >> pv) & 1:
                r ^= bv
        if r:
            pv = r.bit_length() - 1
            for i in range(len(basis)):
                if (basis[i] >> pv) & 1:
                    basis[i] ^= r
            pivots.append(pv)
            basis.append(r)
    out = []
    for c in range(N * n):
        if c not in pivots:
            f = [0] * N
            f[c // n] = 1 << (c % n)
            out.append(f)
    return out, len(basis)


class _Char2Context:
    def __init__(self, g, F):
        self.g, self.F = g, F
        self.pack = FieldPack(F, 3)
        self.lev_of, self.deg_of, self.pts = line_orbit_reps(F, 3)
        self.orbits = _binary_form_orbits(F, g + 1)
        self.offsets, self.shape = weil_offsets(g, F.q)

    def run(self, h, fb=None):
        from .kernels import hyper_char2_block

        g, F, pk = self.g, self.F, self.pack
        if fb is None:
            fb, rank = artin_schreier_complement(F, g, h)
            if rank != (g + 2) * F.n - 1:
                raise CensusError(f"unexpected Artin-Schreier rank for h={h}")
        npts = len(self.pts)
        hval = np.zeros(npts, dtype=np.int64)
        fval = np.zeros((len(fb), npts), dtype=np.int64)
        for k, (x, lev) in enumerate(zip(self.pts, self.lev_of)):
            K = pk.fields[lev]
            e = pk.emb[lev]
            hval[k] = P.evaluate(K, [int(e[c]) for c in h], x)
            for r, f in enumerate(fb):
                fval[r, k] = P.evaluate(K, [int(e[c]) for c in f], x)
        hist = np.zeros(self.shape, dtype=np.int64)
        hyper_char2_block(
            g, F.q, np.asarray(h, dtype=np.int64), hval, np.asarray(fb, dtype=np.int64), fval,
            self.lev_of, self.deg_of, pk.tr_all, pk.tr_off,
            pk.exp_all, pk.log_all, pk.exp_off, pk.log_off, pk.sizes,
            hist, *self.offsets,
        )
        return hist


def _char2_work(block):
    g, q, idx = block
    c = _ctx("char2", g, q)
    h, size = c.orbits[idx]
    w = Fraction(size, 2 * gl2_order(q))
    return _hist_to_table(c.run(h), c.offsets, f"hyper{g}", q, g, w)


def _char2_full_work(block):
    """Unreduced enumeration over every (h, f); used to validate the reduction."""
    g, q, hidx = block
    c = _ctx("char2", g, q)
    F = c.F
    h = []
    v = hidx
    for _ in range(g + 2):
        h.append(v % q)
        v //= q
    fb = []
    for pos in range(2 * g + 3):
        for b in range(F.n):
            f = [0] * (2 * g + 3)
            f[pos] = 1 << b
            fb.append(f)
    hist = c.run(tuple(h), fb)
    w = Fraction(1, gl2_order(q) * q ** (g + 2))
    return _hist_to_table(hist, c.offsets, f"hyper{g}", q, g, w)


def enumerate_hyperelliptic(g: int, q: int, opts: RunOptions | None = None, longrun: bool = False,
                            reduce: bool = True) -> CensusTable:
    """Census of hyperelliptic curves of genus g over F_q, weighted by 1/|Aut|."""
    if g not in (2, 3):
        raise CensusError("genus must be 2 or 3")
    F = field_of_size(q)
    bound = (CHAR2_MAX_Q if F.p == 2 else ODD_MAX_Q)[g]
    if q > bound and not longrun:
        raise CensusError(f"hyperelliptic census g={g}, q={q} exceeds the configured bound {bound}")
    opts = opts or RunOptions()
    empty = lambda: CensusTable(f"hyper{g}", q, g)  # noqa: E731
    if F.p != 2:
        _ctx("odd", g, q)
        depth = max(2, min(opts.block_depth, 2 * g + 2))
        blocks = [
            (g, q) + pre
            for pre in itertools.product(range(q), repeat=depth)
            if pre[0] or pre[1]
        ]
        t = run_blocks(blocks, _odd_work, empty, opts)
        t.meta["weight"] = f"1/{gl2_order(q)}"
    elif reduce:
        c = _ctx("char2", g, q)
        blocks = [(g, q, i) for i in range(len(c.orbits))]
        t = run_blocks(blocks, _char2_work, empty, opts)
        t.meta["weight"] = f"|orbit(h)|/{2 * gl2_order(q)} over an Artin-Schreier complement"
    else:
        _ctx("char2", g, q)
        blocks = [(g, q, i) for i in range(1, q ** (g + 2))]
        t = run_blocks(blocks, _char2_full_work, empty, opts)
        t.meta["weight"] = f"1/{gl2_order(q) * q ** (g + 2)}"
    t.validate()
    return t
