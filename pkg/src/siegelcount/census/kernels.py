"""Compiled inner loops for the curve censuses.

Field elements are integer indices as in siegelcount.ff.  Several fields are
packed into flat arrays with per-level offsets (level = extension degree - 1).
"""
import numba as nb
import numpy as np


@nb.njit(cache=True, inline="always")
def _add(a, b, lev, char2, add_all, add_off, sizes):
    if char2:
        return a ^ b
    return add_all[add_off[lev] + a * sizes[lev] + b]


@nb.njit(cache=True, inline="always")
def _mul(a, b, lev, exp_all, log_all, exp_off, log_off):
    if a == 0 or b == 0:
        return 0
    return exp_all[exp_off[lev] + log_all[log_off[lev] + a] + log_all[log_off[lev] + b]]


@nb.njit(cache=True)
def quartic_block(
    lead, prefix, q, p, n,
    lev_of, deg_of, affine, mon, addvec,
    emb, neg_sub,
    exp_all, log_all, exp_off, log_off, add_all, add_off, sizes, char2,
    hist, off1, off2, off3,
):
    """Enumerate quartics with leading coefficient at position `lead`.

    Coefficients before `lead` are zero, coefficient `lead` is 1, the next
    len(prefix) coefficients are fixed by `prefix`, the remaining ones up to
    position 13 run through F_q, and the z^4 coefficient (position 14) is
    handled for all values at once.

    Points are Frobenius-orbit representatives living in the field of level
    lev_of[k] = degree - 1.  mon[0] holds monomial values, mon[1], mon[2] the
    values of the two partial derivatives tested at that point (x, y on the
    affine chart; F_z follows by Euler).  For each smooth curve the cell
    (a1, a2, a3) is counted in hist.  Returns the number of smooth curves.
    """
    npts = lev_of.shape[0]
    cvec = np.zeros(15, dtype=np.int64)
    cvec[lead] = 1
    for i in range(prefix.shape[0]):
        cvec[lead + 1 + i] = prefix[i]
    first_free = lead + 1 + prefix.shape[0]
    ndig = (14 - first_free) * n

    dig = np.zeros(max(ndig, 1), dtype=np.int64)
    val = np.zeros((3, npts), dtype=np.int64)
    for r in range(3):
        for k in range(npts):
            lev = lev_of[k]
            acc = 0
            for m in range(14):
                c = cvec[m]
                if c != 0:
                    t = _mul(emb[lev, c], mon[r, m, k], lev, exp_all, log_all, exp_off, log_off)
                    acc = _add(acc, t, lev, char2, add_all, add_off, sizes)
            val[r, k] = acc

    cnt = np.zeros((q, 3), dtype=np.int64)
    sing = np.zeros(q, dtype=np.bool_)
    smooth = 0
    while True:
        cnt[:, :] = 0
        sing[:] = False
        for k in range(npts):
            lev = lev_of[k]
            d = deg_of[k]
            v = val[0, k]
            crit = val[1, k] == 0 and val[2, k] == 0
            if affine[k]:
                c = neg_sub[lev, v]
                if c < 0:
                    continue
                if d == 1:
                    cnt[c, 0] += 1
                    cnt[c, 1] += 1
                    cnt[c, 2] += 1
                elif d <= 3:
                    cnt[c, d - 1] += d
                if crit:
                    sing[c] = True
            elif v == 0:
                for c in range(q):
                    if d == 1:
                        cnt[c, 0] += 1
                        cnt[c, 1] += 1
                        cnt[c, 2] += 1
                    elif d <= 3:
                        cnt[c, d - 1] += d
                    if crit:
                        sing[c] = True
        for c in range(q):
            if sing[c]:
                continue
            smooth += 1
            a1 = 1 + q - cnt[c, 0]
            a2 = 1 + q * q - cnt[c, 1]
            a3 = 1 + q * q * q - cnt[c, 2]
            hist[a1 + off1, a2 + off2, a3 + off3] += 1
        # odometer over the F_p digits of the free coefficients
        j = ndig - 1
        while j >= 0:
            pos = first_free + j // n
            d = j % n
            dig[j] += 1
            for r in range(3):
                for k in range(npts):
                    lev = lev_of[k]
                    val[r, k] = _add(val[r, k], addvec[r, pos, d, k], lev, char2, add_all, add_off, sizes)
            step = 1
            for _ in range(d):
                step *= p
            if dig[j] == p:
                dig[j] = 0
                cvec[pos] -= (p - 1) * step
                j -= 1
            else:
                cvec[pos] += step
                break
        if j < 0:
            break
    return smooth


@nb.njit(cache=True, inline="always")
def _inv(a, lev, exp_all, log_all, exp_off, log_off, sizes):
    qm1 = sizes[lev] - 1
    return exp_all[exp_off[lev] + (qm1 - log_all[log_off[lev] + a]) % qm1]


@nb.njit(cache=True, inline="always")
def _neg(a, lev, char2, neg_all, neg_off):
    if char2:
        return a
    return neg_all[neg_off[lev] + a]


@nb.njit(cache=True)
def _poly_is_coprime(a, da, b, db, p, char2, exp_all, log_all, exp_off, log_off,
                     add_all, add_off, sizes, neg_all, neg_off):
    """gcd(a, b) == 1 over the level-0 field; da, db are degrees (-1 for zero)."""
    x = a[: da + 1].copy()
    y = b[: db + 1].copy()
    dx, dy = da, db
    while dy >= 0:
        inv = _inv(y[dy], 0, exp_all, log_all, exp_off, log_off, sizes)
        while dx >= dy:
            t = _mul(x[dx], inv, 0, exp_all, log_all, exp_off, log_off)
            if t != 0:
                t = _neg(t, 0, char2, neg_all, neg_off)
                for j in range(dy + 1):
                    x[dx - dy + j] = _add(x[dx - dy + j], _mul(t, y[j], 0, exp_all, log_all, exp_off, log_off),
                                          0, char2, add_all, add_off, sizes)
            dx -= 1
            while dx >= 0 and x[dx] == 0:
                dx -= 1
        x, y = y, x
        dx, dy = dy, dx
    return dx == 0


@nb.njit(cache=True)
def hyper_odd_block(
    g, q, p, n, prefix,
    lev_of, deg_of, xpow, addvec, emb, chi_all, chi_off,
    exp_all, log_all, exp_off, log_off, add_all, add_off, sizes, neg_all, neg_off,
    hist, off1, off2, off3,
):
    """Census block for y^2 = f(x), deg f <= 2g+2, odd characteristic.

    f has coefficients f[0..2g+2]; the top len(prefix) coefficients are fixed,
    the middle ones run through F_q and the constant term is batched.  Points
    are Frobenius-orbit representatives x (lev_of, deg_of) of the affine line
    over F_{q^i}, i <= 3, and xpow[j, k] = x_k^j.  The prime-field element
    i mod p has index i mod p, which is how f' is formed.
    """
    N = 2 * g + 3
    npts = lev_of.shape[0]
    f = np.zeros(N, dtype=np.int64)
    for i in range(prefix.shape[0]):
        f[N - 1 - i] = prefix[i]
    top = N - 1 - prefix.shape[0]  # highest free coefficient index
    ndig = top * n  # free coefficients f[1..top]
    dig = np.zeros(max(ndig, 1), dtype=np.int64)
    val = np.zeros(npts, dtype=np.int64)
    for k in range(npts):
        lev = lev_of[k]
        acc = 0
        for j in range(N):
            if f[j] != 0:
                acc = _add(acc, _mul(emb[lev, f[j]], xpow[j, k], lev, exp_all, log_all, exp_off, log_off),
                           lev, False, add_all, add_off, sizes)
        val[k] = acc
    s = np.zeros((q, 3), dtype=np.int64)
    fd = np.zeros(N, dtype=np.int64)
    while True:
        s[:, :] = 0
        for k in range(npts):
            lev = lev_of[k]
            d = deg_of[k]
            v = val[k]
            for c in range(q):
                w = _add(v, emb[lev, c], lev, False, add_all, add_off, sizes)
                ch = chi_all[chi_off[lev] + w]
                if d == 1:
                    # a nonzero element of F_q is a square in F_{q^2}
                    s[c, 0] += ch
                    s[c, 1] += ch * ch
                    s[c, 2] += ch
                else:
                    s[c, d - 1] += d * ch
        lead = f[N - 1]
        dtop = N - 1
        while dtop >= 0 and f[dtop] == 0:
            dtop -= 1
        if dtop >= N - 2:
            dd = -1
            for i in range(1, dtop + 1):
                fd[i - 1] = _mul(f[i], i % p, 0, exp_all, log_all, exp_off, log_off)
                if fd[i - 1] != 0:
                    dd = i - 1
            for c in range(q):
                f[0] = c
                if dd < 0:
                    continue
                if not _poly_is_coprime(f, dtop, fd, dd, p, False, exp_all, log_all, exp_off, log_off,
                                        add_all, add_off, sizes, neg_all, neg_off):
                    continue
                a1 = -(s[c, 0] + chi_all[chi_off[0] + emb[0, lead]])
                a2 = -(s[c, 1] + chi_all[chi_off[1] + emb[1, lead]])
                a3 = -(s[c, 2] + chi_all[chi_off[2] + emb[2, lead]])
                hist[a1 + off1, a2 + off2, a3 + off3] += 1
            f[0] = 0
        j = ndig - 1
        while j >= 0:
            pos = 1 + j // n
            d = j % n
            dig[j] += 1
            for k in range(npts):
                lev = lev_of[k]
                val[k] = _add(val[k], addvec[pos, d, k], lev, False, add_all, add_off, sizes)
            step = 1
            for _ in range(d):
                step *= p
            if dig[j] == p:
                dig[j] = 0
                f[pos] -= (p - 1) * step
                j -= 1
            else:
                f[pos] += step
                break
        if j < 0:
            break


@nb.njit(cache=True)
def hyper_char2_block(
    g, q, h, hval, fbasis, fbasis_val,
    lev_of, deg_of, tr_all, tr_off,
    exp_all, log_all, exp_off, log_off, sizes,
    hist, off1, off2, off3,
):
    """Census block for y^2 + h(x) y = f(x) in characteristic 2 with h fixed.

    f runs over the F_2-span of the rows of fbasis (coefficient vectors of
    length 2g+3), in Gray-code order; fbasis_val[r, k] is row r evaluated at
    point k and hval[k] = h(x_k).  Returns nothing; fills hist.
    """
    N = 2 * g + 3
    H = g + 2
    npts = lev_of.shape[0]
    nb_ = fbasis.shape[0]
    f = np.zeros(N, dtype=np.int64)
    val = np.zeros(npts, dtype=np.int64)
    # h', h'^2 and the inverse squares of h at the points
    hd = np.zeros(H, dtype=np.int64)
    for i in range(1, H):
        if i % 2 == 1:
            hd[i - 1] = h[i]
    hd2 = np.zeros(2 * H, dtype=np.int64)
    for i in range(H):
        hd2[2 * i] = _mul(hd[i], hd[i], 0, exp_all, log_all, exp_off, log_off)
    dh = H - 1
    while dh >= 0 and h[dh] == 0:
        dh -= 1
    ihsq = np.zeros(npts, dtype=np.int64)
    for k in range(npts):
        if hval[k] != 0:
            lev = lev_of[k]
            hv = hval[k]
            ihsq[k] = _inv(_mul(hv, hv, lev, exp_all, log_all, exp_off, log_off), lev,
                           exp_all, log_all, exp_off, log_off, sizes)
    dummy_add = np.zeros(1, dtype=np.int64)
    dummy_off = np.zeros(1, dtype=np.int64)
    poly = np.zeros(2 * N + 2 * H, dtype=np.int64)
    fd = np.zeros(N, dtype=np.int64)
    total = 1 << nb_
    for it in range(total):
        if it > 0:
            # Gray code: flip the lowest set bit of it
            r = 0
            while not (it >> r) & 1:
                r += 1
            for j in range(N):
                f[j] ^= fbasis[r, j]
            for k in range(npts):
                val[k] ^= fbasis_val[r, k]
        # degree condition
        df = N - 1
        while df >= 0 and f[df] == 0:
            df -= 1
        if max(2 * dh, df) < 2 * g + 1:
            continue
        # nonsingular at infinity: not (h_{g+1} = 0 and f_{2g+1}^2 = h_g^2 f_{2g+2})
        if h[H - 1] == 0:
            lhs = _mul(f[N - 2], f[N - 2], 0, exp_all, log_all, exp_off, log_off)
            rhs = _mul(_mul(h[H - 2], h[H - 2], 0, exp_all, log_all, exp_off, log_off), f[N - 1],
                       0, exp_all, log_all, exp_off, log_off)
            if lhs == rhs:
                continue
        # affine chart: gcd(h, f'^2 + h'^2 f) constant
        for i in range(N):
            fd[i] = 0
        for i in range(1, N):
            if i % 2 == 1:
                fd[i - 1] = f[i]
        m = poly.shape[0]
        for i in range(m):
            poly[i] = 0
        for i in range(N):
            if fd[i] != 0:
                poly[2 * i] ^= _mul(fd[i], fd[i], 0, exp_all, log_all, exp_off, log_off)
        for i in range(2 * H):
            if hd2[i] != 0:
                for j in range(N):
                    if f[j] != 0:
                        poly[i + j] ^= _mul(hd2[i], f[j], 0, exp_all, log_all, exp_off, log_off)
        dp = m - 1
        while dp >= 0 and poly[dp] == 0:
            dp -= 1
        if dp < 0:
            if dh >= 1:
                continue
        elif dh >= 1:
            if not _poly_is_coprime(h, dh, poly, dp, 2, True, exp_all, log_all, exp_off, log_off,
                                    dummy_add, dummy_off, sizes, dummy_add, dummy_off):
                continue
        # point counts
        cnt0 = 0
        cnt1 = 0
        cnt2 = 0
        for k in range(npts):
            lev = lev_of[k]
            d = deg_of[k]
            if hval[k] == 0:
                c = 1
                t = -1
            else:
                w = _mul(val[k], ihsq[k], lev, exp_all, log_all, exp_off, log_off)
                t = tr_all[tr_off[lev] + w]
                c = 2 - 2 * t
            if d == 1:
                cnt0 += c
                if t < 0:
                    cnt1 += 1
                    cnt2 += 1
                else:
                    cnt1 += 2
                    cnt2 += c
            elif d == 2:
                cnt1 += 2 * c
            else:
                cnt2 += 3 * c
        # infinity: Tr over F_{q^e} of an element of F_q is e times its trace
        hinf = h[H - 1]
        tinf = 0
        if hinf != 0:
            w = _mul(f[N - 1], _inv(_mul(hinf, hinf, 0, exp_all, log_all, exp_off, log_off), 0,
                                    exp_all, log_all, exp_off, log_off, sizes),
                     0, exp_all, log_all, exp_off, log_off)
            tinf = tr_all[tr_off[0] + w]
        inf = np.zeros(3, dtype=np.int64)
        for e in range(1, 4):
            if hinf == 0:
                inf[e - 1] = 1
            else:
                inf[e - 1] = 2 - 2 * ((e * tinf) % 2)
        a1 = 1 + q - cnt0 - inf[0]
        a2 = 1 + q * q - cnt1 - inf[1]
        a3 = 1 + q * q * q - cnt2 - inf[2]
        hist[a1 + off1, a2 + off2, a3 + off3] += 1


# --- elliptic curves ----------------------------------------------------------
# These run on a single field given by its own exp/log tables.  Addition in
# odd characteristic is digit-wise, so fields without an add table work too.

@nb.njit(cache=True, inline="always")
def _addd(a, b, p, n):
    if n == 1:
        s = a + b
        return s - p if s >= p else s
    out = 0
    m = 1
    for _ in range(n):
        d = a % p + b % p
        if d >= p:
            d -= p
        out += d * m
        m *= p
        a //= p
        b //= p
    return out


@nb.njit(cache=True, inline="always")
def _m1(a, b, exp_t, log_t):
    if a == 0 or b == 0:
        return 0
    return exp_t[log_t[a] + log_t[b]]


@nb.njit(cache=True, inline="always")
def _k(a, k, p, exp_t, log_t):
    """a times the integer k."""
    return _m1(a, k % p, exp_t, log_t)


@nb.njit(cache=True)
def elliptic_cubic_block(q, p, n, a2, a4, exp_t, log_t, chi, hist, off):
    """y^2 = x^3 + a2 x^2 + a4 x + a6 for all a6, odd characteristic.

    Adds one to hist[a1 + off] per nonsingular model.
    """
    v = np.zeros(q, dtype=np.int64)
    for x in range(q):
        x2 = _m1(x, x, exp_t, log_t)
        t = _addd(_m1(x2, x, exp_t, log_t), _m1(a2, x2, exp_t, log_t), p, n)
        v[x] = _addd(t, _m1(a4, x, exp_t, log_t), p, n)
    # discriminant of x^3 + b x^2 + c x + d:
    # b^2c^2 - 4c^3 - 4b^3 d - 27 d^2 + 18 b c d
    b, c = a2, a4
    bb = _m1(b, b, exp_t, log_t)
    cc = _m1(c, c, exp_t, log_t)
    base = _addd(_m1(bb, cc, exp_t, log_t), _k(_m1(cc, c, exp_t, log_t), -4, p, exp_t, log_t), p, n)
    lin = _addd(_k(_m1(bb, b, exp_t, log_t), -4, p, exp_t, log_t),
                _k(_m1(b, c, exp_t, log_t), 18, p, exp_t, log_t), p, n)
    for d in range(q):
        disc = _addd(_addd(base, _m1(lin, d, exp_t, log_t), p, n),
                     _k(_m1(d, d, exp_t, log_t), -27, p, exp_t, log_t), p, n)
        if disc == 0:
            continue
        s = 0
        for x in range(q):
            s += chi[_addd(v[x], d, p, n)]
        hist[off - s] += 1


@nb.njit(cache=True)
def elliptic_long_odd_block(q, p, n, a1, a2, exp_t, log_t, chi, hist, off):
    """All long Weierstrass models with given a1, a2, odd characteristic.

    The point count uses #y = 1 + chi(u^2 + 4R), u = a1 x + a3 and
    R = x^3 + a2 x^2 + a4 x + a6; nonsingularity uses the discriminant.
    """
    w = np.zeros(q, dtype=np.int64)
    x3 = np.zeros(q, dtype=np.int64)
    for x in range(q):
        x2 = _m1(x, x, exp_t, log_t)
        x3[x] = _addd(_k(_m1(x2, x, exp_t, log_t), 4, p, exp_t, log_t),
                      _k(_m1(a2, x2, exp_t, log_t), 4, p, exp_t, log_t), p, n)
    a1s = _m1(a1, a1, exp_t, log_t)
    b2 = _addd(a1s, _k(a2, 4, p, exp_t, log_t), p, n)
    for a3 in range(q):
        a3s = _m1(a3, a3, exp_t, log_t)
        for a4 in range(q):
            b4 = _addd(_k(a4, 2, p, exp_t, log_t), _m1(a1, a3, exp_t, log_t), p, n)
            for x in range(q):
                u = _addd(_m1(a1, x, exp_t, log_t), a3, p, n)
                t = _addd(_m1(u, u, exp_t, log_t), x3[x], p, n)
                w[x] = _addd(t, _k(_m1(a4, x, exp_t, log_t), 4, p, exp_t, log_t), p, n)
            b4c = _m1(_m1(b4, b4, exp_t, log_t), b4, exp_t, log_t)
            # b8 without its a6 part: -a1 a3 a4 + a2 a3^2 - a4^2
            b8c = _addd(_addd(_k(_m1(_m1(a1, a3, exp_t, log_t), a4, exp_t, log_t), -1, p, exp_t, log_t),
                              _m1(a2, a3s, exp_t, log_t), p, n),
                        _k(_m1(a4, a4, exp_t, log_t), -1, p, exp_t, log_t), p, n)
            b8l = _addd(a1s, _k(a2, 4, p, exp_t, log_t), p, n)
            for a6 in range(q):
                b6 = _addd(a3s, _k(a6, 4, p, exp_t, log_t), p, n)
                b8 = _addd(b8c, _m1(b8l, a6, exp_t, log_t), p, n)
                # -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
                disc = _k(_m1(_m1(b2, b2, exp_t, log_t), b8, exp_t, log_t), -1, p, exp_t, log_t)
                disc = _addd(disc, _k(b4c, -8, p, exp_t, log_t), p, n)
                disc = _addd(disc, _k(_m1(b6, b6, exp_t, log_t), -27, p, exp_t, log_t), p, n)
                disc = _addd(disc, _k(_m1(_m1(b2, b4, exp_t, log_t), b6, exp_t, log_t), 9, p, exp_t, log_t), p, n)
                if disc == 0:
                    continue
                c = _k(a6, 4, p, exp_t, log_t)
                s = 0
                for x in range(q):
                    s += chi[_addd(w[x], c, p, n)]
                hist[off - s] += 1


@nb.njit(cache=True)
def elliptic_long_char2_block(q, a1, a2, exp_t, log_t, tr, tdual, hist, off):
    """All long Weierstrass models with given a1, a2 in characteristic 2.

    For fixed (a1..a4) the counts for every a6 come from one Walsh-Hadamard
    transform: with u = a1 x + a3 != 0 the fiber over x has
    1 + (-1)^Tr((R + a6)/u^2) points, and Tr(a6 b) = <a6, tdual[b]> as bit
    vectors.
    """
    c = np.zeros(q, dtype=np.int64)
    a1s = _m1(a1, a1, exp_t, log_t)
    b2 = a1s
    b2s = _m1(b2, b2, exp_t, log_t)
    for a3 in range(q):
        if a1 == 0 and a3 == 0:
            continue
        a3s = _m1(a3, a3, exp_t, log_t)
        b4 = _m1(a1, a3, exp_t, log_t)
        b6 = a3s
        for a4 in range(q):
            c[:] = 0
            zeros = 0
            for x in range(q):
                u = _m1(a1, x, exp_t, log_t) ^ a3
                x2 = _m1(x, x, exp_t, log_t)
                r = _m1(x2, x, exp_t, log_t) ^ _m1(a2, x2, exp_t, log_t) ^ _m1(a4, x, exp_t, log_t)
                if u == 0:
                    zeros += 1
                    continue
                iu2 = exp_t[(q - 1 - log_t[_m1(u, u, exp_t, log_t)]) % (q - 1)]
                sgn = 1 - 2 * tr[_m1(r, iu2, exp_t, log_t)]
                c[tdual[iu2]] += sgn
            # Walsh-Hadamard transform in place
            h = 1
            while h < q:
                for i in range(0, q, 2 * h):
                    for j in range(i, i + h):
                        s0 = c[j]
                        s1 = c[j + h]
                        c[j] = s0 + s1
                        c[j + h] = s0 - s1
                h *= 2
            # the discriminant b2^2 b8 + b6^2 + b2 b4 b6 is affine in a6 with
            # slope a1^6, so at most one a6 is singular
            b8c = _m1(_m1(a1, a3, exp_t, log_t), a4, exp_t, log_t) ^ _m1(a2, a3s, exp_t, log_t) \
                ^ _m1(a4, a4, exp_t, log_t)
            k0 = _m1(b2s, b8c, exp_t, log_t) ^ _m1(b6, b6, exp_t, log_t) \
                ^ _m1(_m1(b2, b4, exp_t, log_t), b6, exp_t, log_t)
            bad = -1
            if a1 != 0:
                slope = _m1(b2s, a1s, exp_t, log_t)
                bad = exp_t[(log_t[k0] - log_t[slope]) % (q - 1)] if k0 != 0 else 0
            for a6 in range(q):
                if a6 == bad:
                    continue
                npts = 1 + zeros + (q - zeros) + c[a6]
                hist[off + q + 1 - npts] += 1


@nb.njit(cache=True)
def elliptic_ordinary_char2(q, exp_t, log_t, tr, hist, off):
    """T(a6) = sum over x != 0 of (-1)^Tr(x + a6/x^2) for y^2+xy = x^3+a6.

    The twist by a trace-one a2 flips the sign, so hist[off +- T] gets one
    each per a6 != 0.
    """
    for a6 in range(1, q):
        t = 0
        for x in range(1, q):
            ix2 = exp_t[(q - 1 - log_t[_m1(x, x, exp_t, log_t)]) % (q - 1)]
            t += 1 - 2 * tr[x ^ _m1(a6, ix2, exp_t, log_t)]
        hist[off - t] += 1
        hist[off + t] += 1


@nb.njit(cache=True)
def elliptic_supersingular_char2(q, a3, exp_t, log_t, tr, hist, off):
    """y^2 + a3 y = x^3 + a4 x + a6 for all a4, a6 with a3 fixed.

    N = q + 1 + e S(a4) with e = (-1)^Tr(a6/a3^2) taking each sign for q/2
    values of a6.
    """
    ia = exp_t[(q - 1 - log_t[_m1(a3, a3, exp_t, log_t)]) % (q - 1)]
    for a4 in range(q):
        s = 0
        for x in range(q):
            r = _m1(_m1(x, x, exp_t, log_t), x, exp_t, log_t) ^ _m1(a4, x, exp_t, log_t)
            s += 1 - 2 * tr[_m1(r, ia, exp_t, log_t)]
        hist[off - s] += q // 2
        hist[off + s] += q // 2
