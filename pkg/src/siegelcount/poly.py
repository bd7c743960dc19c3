"""Dense polynomials over a FiniteField.

A univariate polynomial is a list of field indices, constant term first, with
no trailing zeros (the zero polynomial is []).  A polynomial in y over F[x]
is a list of univariate polynomials in x, again constant term first.
"""
from __future__ import annotations

from .ff import FiniteField


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def add(F: FiniteField, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(out)


def neg(F, a):
    return [F.neg(c) for c in a]


def sub(F, a, b):
    return add(F, a, neg(F, b))


def scale(F, c, a):
    if c == 0:
        return []
    return [F.mul(c, x) for x in a]


def mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    quo = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        t = F.mul(c, inv_lc)
        quo[i - db] = t
        for j in range(db + 1):
            a[i - db + j] = F.sub(a[i - db + j], F.mul(t, b[j]))
    return trim(quo), trim(a[:db])


def rem(F, a, b):
    return divmod_(F, a, b)[1]


def exact_div(F, a, b):
    q, r = divmod_(F, a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(F, a):
    if not a:
        return []
    return scale(F, F.inv(a[-1]), a)


def gcd(F, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def derivative(F, a):
    return trim([F.mul(F.from_int(i), c) for i, c in enumerate(a)][1:])


def evaluate(F, a, x):
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def is_squarefree(F, a):
    """True iff a has no repeated root over the algebraic closure."""
    a = trim(a)
    if len(a) <= 1:
        return bool(a)
    return len(gcd(F, a, derivative(F, a))) == 1


# --- polynomials in y over F[x] -------------------------------------------

def resultant_y(F, A, B):
    """Res_y(A, B) in F[x] via a fraction-free (Bareiss) Sylvester determinant."""
    A, B = trim_y(A), trim_y(B)
    if not A or not B:
        return []
    m, n = len(A) - 1, len(B) - 1
    if m == 0 and n == 0:
        return [1]
    if m == 0:
        return _pow(F, A[0], n)
    if n == 0:
        return _pow(F, B[0], m)
    size = m + n
    M = [[[] for _ in range(size)] for _ in range(size)]
    for r in range(n):
        for k, c in enumerate(reversed(A)):
            M[r][r + k] = c
    for r in range(m):
        for k, c in enumerate(reversed(B)):
            M[n + r][r + k] = c
    return _bareiss_det(F, M)


def _pow(F, a, e):
    out = [1]
    for _ in range(e):
        out = mul(F, out, a)
    return out


def _bareiss_det(F, M):
    n = len(M)
    M = [row[:] for row in M]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(F, mul(F, M[i][j], M[k][k]), mul(F, M[i][k], M[k][j]))
                M[i][j] = exact_div(F, num, prev)
            M[i][k] = []
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else neg(F, det)


def trim_y(A):
    A = [trim(c) for c in A]
    while A and not A[-1]:
        A.pop()
    return A


class _Split(Exception):
    def __init__(self, factor):
        self.factor = factor


def _reduce_y(F, A, g):
    return trim_y([rem(F, c, g) for c in A])


def _unit_inverse(F, a, g):
    """Inverse of a modulo g, raising _Split on a zero divisor."""
    d = gcd(F, a, g)
    if len(d) > 1:
        raise _Split(d)
    # extended Euclid
    r0, r1 = list(g), list(a)
    s0, s1 = [], [1]
    while len(r1) > 1:
        qt, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, qt, s1))
    return rem(F, scale(F, F.inv(r1[0]), s1), g)


def _gcd_y_mod(F, A, B, g):
    A, B = _reduce_y(F, A, g), _reduce_y(F, B, g)
    while B:
        inv = _unit_inverse(F, B[-1], g)
        # A <- A mod B in (F[x]/g)[y]
        A = list(A)
        db = len(B) - 1
        for i in range(len(A) - 1, db - 1, -1):
            c = A[i]
            if not c:
                continue
            t = rem(F, mul(F, c, inv), g)
            for j in range(db + 1):
                A[i - db + j] = rem(F, sub(F, A[i - db + j], mul(F, t, B[j])), g)
        A = trim_y(A[:db] if db else [])
        A, B = B, A
    return A


def common_root_over(F, g, polys):
    """Is there a root x0 of g with polys(x0, y) sharing a root y in the closure?

    Polynomials that vanish identically at x0 impose no condition.  The test
    runs Euclid over F[x]/g and splits g whenever a leading coefficient turns
    out to be a zero divisor.
    """
    g = monic(F, trim(g))
    if len(g) <= 1:
        return False
    try:
        G = []
        for P in polys:
            G = _gcd_y_mod(F, G, P, g) if G else _reduce_y(F, P, g)
        if G:
            _unit_inverse(F, G[-1], g)
        return not G or len(G) >= 2
    except _Split as s:
        d = monic(F, s.factor)
        return common_root_over(F, d, polys) or common_root_over(F, exact_div(F, g, d), polys)
