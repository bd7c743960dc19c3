"""Plane quartics: point counts and smoothness."""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .. import poly as P
from ..ff import FiniteField, embedding_table, field_of_size, make_field
from .runner import RunOptions, run_blocks
from .table import CensusError, CensusTable

# exponent triples (i, j, k) of x^i y^j z^k; z^4 must stay last
MONOMIALS = tuple(
    (i, j, 4 - i - j) for i in range(4, -1, -1) for j in range(4 - i, -1, -1)
)
assert MONOMIALS[-1] == (0, 0, 4) and len(MONOMIALS) == 15


def quartic_from_dict(F: FiniteField, terms: dict) -> list:
    """Coefficient vector from {(i, j, k): coefficient index}."""
    vec = [0] * 15
    for e, c in terms.items():
        vec[MONOMIALS.index(tuple(e))] = c
    return vec


def projective_points(K: FiniteField):
    """P^2(K) as (x, y, z) index triples normalised with last nonzero entry 1."""
    pts = [(x, y, 1) for x in range(K.q) for y in range(K.q)]
    pts += [(x, 1, 0) for x in range(K.q)]
    pts.append((1, 0, 0))
    return pts


def _eval_form(K, coeffs, exps, pt):
    acc = 0
    for c, e in zip(coeffs, exps):
        if c == 0:
            continue
        t = c
        for v, k in zip(pt, e):
            if k:
                t = K.mul(t, K.pow(v, k))
        acc = K.add(acc, t)
    return acc


def partials(F: FiniteField, vec):
    """(coefficients, exponents) of F_x, F_y, F_z as cubic forms."""
    out = []
    for var in range(3):
        coeffs, exps = [], []
        for c, e in zip(vec, MONOMIALS):
            if e[var] == 0 or c == 0:
                continue
            c2 = F.mul(c, F.from_int(e[var]))
            if c2:
                e2 = list(e)
                e2[var] -= 1
                coeffs.append(c2)
                exps.append(tuple(e2))
        out.append((coeffs, exps))
    return out


def count_points_quartic(F: FiniteField, vec, i: int) -> int:
    """|{P in P^2(F_{q^i}) : F(P) = 0}| by evaluation at every point."""
    if not any(vec):
        raise ValueError("zero quartic")
    K = make_field(F.p, F.n * i)
    emb = embedding_table(F.p, F.n, i)
    coeffs = [int(emb[c]) for c in vec]
    return sum(1 for pt in projective_points(K) if _eval_form(K, coeffs, MONOMIALS, pt) == 0)


def singular_point_search(F: FiniteField, vec, max_degree: int = 4) -> bool:
    """True iff F, F_x, F_y, F_z share a zero in P^2(F_{q^k}) for some k <= max_degree.

    The singular locus of a reduced quartic is a Galois-stable set of at most
    six points whose Frobenius orbits have size at most 4 (irreducible curves
    have at most three singular points; for reducible ones the singular points
    are pairwise intersections of at most four components).  A non-reduced
    quartic is singular along a component defined over F_q or F_{q^2}.  So the
    default max_degree = 4 decides smoothness exactly.
    """
    if not any(vec):
        raise ValueError("zero quartic")
    d = partials(F, vec)
    for k in range(1, max_degree + 1):
        K = make_field(F.p, F.n * k)
        emb = embedding_table(F.p, F.n, k)
        forms = [([int(emb[c]) for c in vec], MONOMIALS)]
        forms += [([int(emb[c]) for c in cs], es) for cs, es in d]
        for pt in projective_points(K):
            if all(_eval_form(K, cs, es, pt) == 0 for cs, es in forms):
                return True
    return False


# --- resultant-based smoothness ---------------------------------------------

def _affine(F, coeffs, exps, xv, yv, zv):
    """Dehomogenise a form: variables (xv, yv) free, zv set to 1.

    Returns a polynomial in y over F[x] (list over powers of y).
    """
    out = {}
    for c, e in zip(coeffs, exps):
        i, j = e[xv], e[yv]
        row = out.setdefault(j, {})
        row[i] = F.add(row.get(i, 0), c)
    if not out:
        return []
    top = max(out)
    res = []
    for j in range(top + 1):
        row = out.get(j, {})
        res.append(P.trim([row.get(i, 0) for i in range(max(row, default=-1) + 1)]))
    return P.trim_y(res)


def _swap_xy(A):
    """Polynomial in y over F[x] -> same polynomial with x and y exchanged."""
    coeffs = {}
    for j, row in enumerate(A):
        for i, c in enumerate(row):
            if c:
                coeffs[(j, i)] = c
    if not coeffs:
        return []
    dy = max(i for _, i in coeffs)
    out = []
    for new_j in range(dy + 1):
        row = [0] * (max((jj for jj, ii in coeffs if ii == new_j), default=-1) + 1)
        for (jj, ii), c in coeffs.items():
            if ii == new_j:
                row[jj] = c
        out.append(P.trim(row))
    return P.trim_y(out)


def _lin(F, a, A, b, B):
    """a*A + b*B for polynomials in y over F[x] and scalars a, b."""
    n = max(len(A), len(B))
    out = []
    for j in range(n):
        u = P.scale(F, a, A[j]) if j < len(A) else []
        v = P.scale(F, b, B[j]) if j < len(B) else []
        out.append(P.add(F, u, v))
    return P.trim_y(out)


def _y_degree_zero_gcd(F, A, D):
    a = A[0] if A else []
    d = D[0] if D else []
    return P.gcd(F, a, d)


def _affine_chart_singular(F, f, fx, fy):
    """Singular points of the affine curve f = 0 (f_z follows by Euler)."""
    for swap in (False, True):
        g0, gx, gy = (f, fx, fy) if not swap else (_swap_xy(f), _swap_xy(fy), _swap_xy(fx))
        # after the swap the old x is the new y, so gx is the derivative in
        # the new x and gy in the new y
        for t in [None] + list(range(F.q)):
            D = gy if t is None else _lin(F, 1, gx, t, gy)
            if not D:
                continue
            if len(g0) <= 1 and len(D) <= 1:
                R = _y_degree_zero_gcd(F, g0, D)
            else:
                R = P.resultant_y(F, g0, D)
            if not R:
                continue
            return P.common_root_over(F, R, [g0, gx, gy])
    raise ArithmeticError("no eliminating direction found for this quartic")


def is_smooth_quartic(F: FiniteField, vec) -> bool:
    """Exact smoothness test by resultant elimination chart by chart."""
    if not any(vec):
        raise ValueError("zero quartic")
    (cx, ex), (cy, ey), (cz, ez) = partials(F, vec)
    coeffs = [c for c in vec]
    # point (1:0:0)
    c = dict(zip(MONOMIALS, vec))
    if c[(4, 0, 0)] == 0 and c[(3, 1, 0)] == 0 and c[(3, 0, 1)] == 0:
        return False
    # points (x:1:0): univariate in x with y = 1, z = 0
    def on_line(cs, es):
        out = {}
        for cc, e in zip(cs, es):
            if e[2] == 0:
                out[e[0]] = F.add(out.get(e[0], 0), cc)
        return P.trim([out.get(i, 0) for i in range(5)])
    u = on_line(coeffs, MONOMIALS)
    g = P.gcd(F, P.gcd(F, u, on_line(cx, ex)), on_line(cz, ez))
    if not g or len(g) > 1:
        return False
    # affine chart z = 1 in the variables (x, y)
    f = _affine(F, coeffs, MONOMIALS, 0, 1, 2)
    fx = _affine(F, cx, ex, 0, 1, 2)
    fy = _affine(F, cy, ey, 0, 1, 2)
    return not _affine_chart_singular(F, f, fx, fy)


def monomial_values(K: FiniteField, pts, exps=MONOMIALS) -> np.ndarray:
    """values[m, P] of each monomial at each point, as field indices."""
    out = np.zeros((len(exps), len(pts)), dtype=np.int64)
    for m, e in enumerate(exps):
        for n, pt in enumerate(pts):
            out[m, n] = _eval_form(K, [1], [e], pt)
    return out


# --- census -------------------------------------------------------------------

def pgl3_order(q: int) -> int:
    return q ** 3 * (q ** 3 - 1) * (q ** 2 - 1)


def _dmon(K, e, var, pt):
    if e[var] == 0:
        return 0
    c = K.from_int(e[var])
    if c == 0:
        return 0
    e2 = list(e)
    e2[var] -= 1
    return K.mul(c, _eval_form(K, [1], [tuple(e2)], pt))


def _frobenius_orbit_reps(K: FiniteField, q: int, pts):
    """Orbit representatives of x -> x^q on a list of points, with orbit sizes."""
    seen = set()
    reps = []
    for pt in pts:
        if pt in seen:
            continue
        orbit = [pt]
        cur = tuple(K.pow(v, q) for v in pt)
        while cur != pt:
            orbit.append(cur)
            cur = tuple(K.pow(v, q) for v in cur)
        seen.update(orbit)
        reps.append((pt, len(orbit)))
    return reps


class QuarticContext:
    """Packed point and field tables for quartic_block over F_q.

    Points are Frobenius orbits of P^2 over F_{q^d}, d = 1..4, each stored
    once in its field of definition.
    """

    def __init__(self, F: FiniteField):
        self.F = F
        q, p, n = F.q, F.p, F.n
        fields = [make_field(p, n * k) for k in (1, 2, 3, 4)]
        lev_of, deg_of, affine, pts_all = [], [], [], []
        for lev, K in enumerate(fields):
            for pt, d in _frobenius_orbit_reps(K, q, projective_points(K)):
                if d != lev + 1:
                    continue
                lev_of.append(lev)
                deg_of.append(d)
                affine.append(pt[2] == 1)
                pts_all.append(pt)
        npts = len(pts_all)
        self.npts = npts
        self.lev_of = np.array(lev_of, dtype=np.int64)
        self.deg_of = np.array(deg_of, dtype=np.int64)
        self.affine = np.array(affine, dtype=np.bool_)
        mon = np.zeros((3, 15, npts), dtype=np.int64)
        for k, (pt, lev) in enumerate(zip(pts_all, lev_of)):
            K = fields[lev]
            if pt[2] == 1:
                v1, v2 = 0, 1
            elif pt[1] == 1:
                v1, v2 = 0, 2
            else:
                v1, v2 = 1, 2
            for m, e in enumerate(MONOMIALS):
                mon[0, m, k] = _eval_form(K, [1], [e], pt)
                mon[1, m, k] = _dmon(K, e, v1, pt)
                mon[2, m, k] = _dmon(K, e, v2, pt)
        self.mon = mon
        self.emb = np.zeros((4, q), dtype=np.int64)
        for lev in range(4):
            self.emb[lev] = embedding_table(p, n, lev + 1)
        qmax = fields[3].q
        self.neg_sub = np.full((4, qmax), -1, dtype=np.int64)
        for lev, K in enumerate(fields):
            for c in range(q):
                self.neg_sub[lev, K.neg(int(self.emb[lev, c]))] = c
        # addvec[r, pos, d, k] = embed(p^d) * mon[r, pos, k]
        self.addvec = np.zeros((3, 15, n, npts), dtype=np.int64)
        for d in range(n):
            for k in range(npts):
                lev = lev_of[k]
                K = fields[lev]
                b = int(self.emb[lev, p ** d])
                for r in range(3):
                    for m in range(15):
                        self.addvec[r, m, d, k] = K.mul(b, int(mon[r, m, k]))
        self.exp_all = np.concatenate([K.exp_table for K in fields])
        self.log_all = np.concatenate([K.log_table for K in fields])
        self.exp_off = np.cumsum([0] + [len(K.exp_table) for K in fields[:-1]]).astype(np.int64)
        self.log_off = np.cumsum([0] + [K.q for K in fields[:-1]]).astype(np.int64)
        self.sizes = np.array([K.q for K in fields], dtype=np.int64)
        self.char2 = p == 2
        if self.char2:
            self.add_all = np.zeros(1, dtype=np.int64)
            self.add_off = np.zeros(4, dtype=np.int64)
        else:
            self.add_all = np.concatenate([K.add_table.ravel().astype(np.int64) for K in fields])
            self.add_off = np.cumsum([0] + [K.q ** 2 for K in fields[:-1]]).astype(np.int64)
        b = [int(np.floor(6 * np.sqrt(float(q) ** i))) + 1 for i in (1, 2, 3)]
        self.offsets = b
        self.hist_shape = tuple(2 * x + 1 for x in b)

    def run_block(self, lead, prefix):
        from .kernels import quartic_block

        hist = np.zeros(self.hist_shape, dtype=np.int64)
        F = self.F
        quartic_block(
            lead, np.asarray(prefix, dtype=np.int64), F.q, F.p, F.n,
            self.lev_of, self.deg_of, self.affine, self.mon, self.addvec,
            self.emb, self.neg_sub,
            self.exp_all, self.log_all, self.exp_off, self.log_off,
            self.add_all, self.add_off, self.sizes, self.char2,
            hist, *self.offsets,
        )
        return hist


def quartic_blocks(q: int, depth: int):
    blocks = []
    for lead in range(14):
        k = min(depth, 13 - lead)
        for pre in itertools.product(range(q), repeat=k):
            blocks.append((lead,) + pre)
    return blocks


_CONTEXTS = {}


def _context(q):
    if q not in _CONTEXTS:
        _CONTEXTS[q] = QuarticContext(field_of_size(q))
    return _CONTEXTS[q]


def _quartic_work(block):
    q, lead, pre = block[0], block[1], block[2:]
    ctx = _context(q)
    hist = ctx.run_block(lead, pre)
    t = CensusTable("quartic", q, 3)
    o = ctx.offsets
    w = Fraction(1, pgl3_order(q))
    for idx in zip(*np.nonzero(hist)):
        key = (int(idx[0]) - o[0], int(idx[1]) - o[1], int(idx[2]) - o[2])
        t.add(key, w * int(hist[idx]))
    return t


QUARTIC_MAX_Q = 3
QUARTIC_LONGRUN_MAX_Q = 5


def enumerate_quartics(q: int, opts: RunOptions | None = None, longrun: bool = False) -> CensusTable:
    """Census of smooth plane quartics over F_q, mass 1/|PGL_3(F_q)| per class."""
    bound = QUARTIC_LONGRUN_MAX_Q if longrun else QUARTIC_MAX_Q
    if q > bound:
        raise CensusError(f"quartic census for q={q} exceeds the configured bound {bound}")
    opts = opts or RunOptions()
    _context(q)
    blocks = [(q,) + b for b in quartic_blocks(q, opts.block_depth)]
    t = run_blocks(blocks, _quartic_work, lambda: CensusTable("quartic", q, 3), opts)
    t.meta.update({"enumeration": "projective classes, z^4 coefficient batched", "weight": f"1/{pgl3_order(q)}"})
    t.validate()
    return t
