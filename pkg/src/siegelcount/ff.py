"""Finite fields F_{p^n} with table-driven arithmetic.

Elements are integer indices: the element sum c_i x^i (mod the modulus) has
index sum c_i p^i.  Index 0 is zero and index 1 is one.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

PRIMES = (2, 3, 5, 7, 11, 13, 17)
MAX_SIZE = 1 << 16
ADD_TABLE_MAX = 2187


class FieldError(ValueError):
    pass


def _poly_mod_p(a, b, p):
    """Remainder of a by monic b, coefficient lists low -> high, over F_p."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [c % p for c in a[:db]]


def _index_order(p, n):
    # modulus candidates x^n + c_{n-1}x^{n-1} + ... + c_0 ordered by sum c_i p^i
    for idx in range(p ** n):
        coeffs = []
        for _ in range(n):
            coeffs.append(idx % p)
            idx //= p
        yield coeffs + [1]


def is_irreducible_mod_p(f, p):
    """Exhaustive check: no monic factor of degree 1..deg/2."""
    n = len(f) - 1
    if n <= 0:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            if not any(_poly_mod_p(f, g, p)):
                return False
    return True


def least_irreducible(p, n):
    for f in _index_order(p, n):
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")


class FiniteField:
    """F_{p^n} = F_p[x]/(modulus) with log/antilog tables.

    Instances are cached by (p, n) through make_field and must be treated as
    immutable.
    """

    def __init__(self, p: int, n: int):
        if p not in PRIMES:
            raise FieldError(f"unsupported characteristic {p}")
        if n < 1:
            raise FieldError("extension degree must be >= 1")
        q = p ** n
        if q > MAX_SIZE:
            raise FieldError(f"field size {q} exceeds bound {MAX_SIZE}")
        self.p, self.n, self.q = p, n, q
        self.modulus = None if n == 1 else least_irreducible(p, n)
        self._build_tables()

    def _digits(self, a):
        d = []
        for _ in range(self.n):
            d.append(a % self.p)
            a //= self.p
        return d

    def _undigits(self, d):
        a = 0
        for c in reversed(d):
            a = a * self.p + c
        return a

    def _build_tables(self):
        p, n, q = self.p, self.n, self.q
        pw = p ** np.arange(n)
        idx = np.arange(q)
        digits = (idx[:, None] // pw[None, :]) % p
        self.digits = digits
        if p == 2 or q > ADD_TABLE_MAX:
            self.add_table = None
        else:
            s = (digits[:, None, :] + digits[None, :, :]) % p
            self.add_table = (s * pw).sum(axis=2).astype(np.int32)
        self.neg_table = (((p - digits) % p) * pw).sum(axis=1).astype(np.int32)

        # multiplication by x on the digit vector
        def mulx(d):
            if n == 1:
                return d
            top = d[-1]
            out = [0] + d[:-1]
            if top:
                m = self.modulus
                out = [(out[i] - top * m[i]) % p for i in range(n)]
            return out

        def mul_naive(a, b):
            if n == 1:
                return a * b % p
            da, db = self._digits(a), self._digits(b)
            acc = [0] * n
            cur = da
            for j in range(n):
                if db[j]:
                    acc = [(acc[i] + db[j] * cur[i]) % p for i in range(n)]
                cur = mulx(cur)
            return self._undigits(acc)

        # least primitive element
        for g in range(2, q) if q > 2 else [1]:
            exp = np.empty(2 * (q - 1), dtype=np.int64)
            x = 1
            ok = True
            seen = set()
            for k in range(q - 1):
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                exp[k] = x
                x = mul_naive(x, g)
            if ok and x == 1:
                break
        else:
            raise FieldError("no primitive element found")
        exp[q - 1:] = exp[: q - 1]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        self.exp_table, self.log_table = exp, log
        self.generator = int(exp[1]) if q > 2 else 1

    # scalar operations on indices
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return int(self.add_table[a, b])
        p, s, m = self.p, 0, 1
        while a or b:
            s += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return s

    def neg(self, a):
        return int(self.neg_table[a])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[self.log_table[a] + self.log_table[b]])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero in finite field")
        return int(self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inversion of zero in finite field")
            return 1 if e == 0 else 0
        return int(self.exp_table[(self.log_table[a] * e) % (self.q - 1)])

    def from_int(self, k):
        """Image of the integer k in the prime field."""
        return k % self.p

    def elements(self):
        return range(self.q)

    def __call__(self, a):
        return FieldElement(self, a)

    def __repr__(self):
        return f"GF({self.p}^{self.n})"

    # vector helpers used by the census kernels
    def sq_char_table(self):
        """quadratic character of each index (odd characteristic)."""
        if self.p == 2:
            raise FieldError("quadratic character needs odd characteristic")
        t = np.zeros(self.q, dtype=np.int8)
        t[self.exp_table[0 : self.q - 1 : 2]] = 1
        t[self.exp_table[1 : self.q - 1 : 2]] = -1
        return t

    def trace_table(self):
        """absolute trace of each index (characteristic 2)."""
        if self.p != 2:
            raise FieldError("absolute trace table is for characteristic 2")
        t = np.zeros(self.q, dtype=np.int8)
        for a in range(self.q):
            x, s = a, 0
            for _ in range(self.n):
                s ^= x
                x = self.mul(x, x)
            t[a] = s
        return t


@lru_cache(maxsize=None)
def make_field(p: int, n: int = 1) -> FiniteField:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise FieldError(f"{p} is not prime")
    return FiniteField(p, n)


def field_of_size(q: int) -> FiniteField:
    for p in PRIMES:
        n, r = 0, q
        while r % p == 0:
            r //= p
            n += 1
        if r == 1 and n:
            return make_field(p, n)
    raise FieldError(f"{q} is not a supported prime power")


class FieldElement:
    __slots__ = ("field", "index")

    def __init__(self, field: FiniteField, index: int):
        if not 0 <= index < field.q:
            raise FieldError(f"index {index} out of range for {field}")
        self.field, self.index = field, int(index)

    def _other(self, b):
        if isinstance(b, int):
            return self.field.from_int(b)
        if b.field is not self.field:
            raise FieldError("field mismatch")
        return b.index

    def __add__(self, b):
        return FieldElement(self.field, self.field.add(self.index, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return FieldElement(self.field, self.field.sub(self.index, self._other(b)))

    def __rsub__(self, b):
        return FieldElement(self.field, self.field.sub(self._other(b), self.index))

    def __mul__(self, b):
        return FieldElement(self.field, self.field.mul(self.index, self._other(b)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __truediv__(self, b):
        return FieldElement(self.field, self.field.div(self.index, self._other(b)))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.index))

    def __eq__(self, b):
        if isinstance(b, int):
            return self.index == self.field.from_int(b)
        return isinstance(b, FieldElement) and b.field is self.field and b.index == self.index

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.index))

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"{self.field}({self.index})"


@lru_cache(maxsize=None)
def embedding_table(p: int, n: int, k: int) -> np.ndarray:
    """Index map F_{p^n} -> F_{p^{nk}} sending x to the least root of the modulus."""
    if k not in (1, 2, 3, 4):
        raise FieldError(f"no embedding of degree {k}")
    small = make_field(p, n)
    big = make_field(p, n * k)
    if k == 1:
        return np.arange(small.q, dtype=np.int64)
    if n == 1:
        root = None
    else:
        m = small.modulus
        root = None
        for r in range(big.q):
            acc = 0
            for c in reversed(m):
                acc = big.add(big.mul(acc, r), c)
            if acc == 0:
                root = r
                break
        if root is None:
            raise FieldError("modulus has no root in the extension")
    table = np.empty(small.q, dtype=np.int64)
    for a in range(small.q):
        d = small._digits(a)
        acc = 0
        if n == 1:
            acc = d[0]
        else:
            for c in reversed(d):
                acc = big.add(big.mul(acc, root), c)
        table[a] = acc
    return table


def embed(a: FieldElement, k: int) -> FieldElement:
    f = a.field
    big = make_field(f.p, f.n * k)
    return FieldElement(big, int(embedding_table(f.p, f.n, k)[a.index]))


def quadratic_character(a: FieldElement) -> int:
    f = a.field
    if f.p == 2:
        raise FieldError("quadratic character needs odd characteristic")
    if a.index == 0:
        return 0
    return 1 if f.log_table[a.index] % 2 == 0 else -1


def absolute_trace(a: FieldElement) -> int:
    f = a.field
    if f.p != 2:
        raise FieldError("absolute trace is implemented for characteristic 2")
    x, s = a.index, 0
    for _ in range(f.n):
        s ^= x
        x = f.mul(x, x)
    if s not in (0, 1):
        raise FieldError("trace left the prime field")
    return s
