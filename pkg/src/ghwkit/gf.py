"""Arithmetic for finite fields GF(p^s) with an integer element encoding.

Elements are plain Python ints in ``[0, q)``.  The base-p digits of an index
are the coefficients (ascending degree) of the polynomial representing the
element, so index 0 is the additive identity and index 1 the multiplicative
identity.  For prime fields (s = 1) the encoding coincides with integers
mod p.

A :class:`FiniteField` is immutable after construction; all operations are
pure and the object can be shared freely between threads.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import BadArgs, DivisionByZero, NonPrime, ReducibleModulus, WrongDegree

MAX_Q = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# -- polynomial helpers over GF(p), coefficient tuples in ascending degree --
# Used to bootstrap extension fields before any lookup table exists.


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    a = list(_poly_trim(a))
    dm = len(m) - 1
    lead_inv = pow(m[dm], p - 2, p)
    while len(a) - 1 >= dm and a:
        factor = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = _decode_poly(enc, p, d) + (1,)
            if not _poly_mod(m, div, p):
                return False
    return True


def _decode_poly(enc: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(enc % p)
        enc //= p
    return tuple(out)


def default_modulus(p: int, s: int) -> tuple[int, ...]:
    """First irreducible monic polynomial of degree s over GF(p), scanning
    coefficient vectors in ascending base-p integer encoding."""
    for enc in range(p**s):
        cand = _decode_poly(enc, p, s) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _factorize(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """GF(p^s) with precomputed digit / discrete-log tables.

    Use :func:`build_field` rather than instantiating directly; it validates
    arguments and caches field objects.
    """

    def __init__(self, p: int, s: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.s = s
        self.q = p**s
        self.modulus = modulus  # None for s == 1

        q = self.q
        self.pow_p = np.array([p**t for t in range(s)], dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        digits = np.empty((q, s), dtype=np.int64)
        for t in range(s):
            digits[:, t] = idx % p
            idx = idx // p
        self.digits = digits

        if s > 1:
            # x^(s+t) mod modulus for t = 0..s-2, as digit vectors
            self._reduction = self._build_reduction()
            # structure tensor: digits of x^u * x^v mod modulus
            T = np.empty((s, s, s), dtype=np.int64)
            for u in range(s):
                for v in range(s):
                    T[u, v] = self.digits[self._mul_poly(p**u, p**v)]
            self._tensor = T
        else:
            self._reduction = None
            self._tensor = None

        self._build_log_tables()

        neg_digits = (p - self.digits) % p
        self.neg_table = (neg_digits @ self.pow_p).astype(np.int64)

        inv = np.zeros(q, dtype=np.int64)
        if q > 2:
            nz = np.arange(1, q)
            inv[1:] = self.exp_table[(self.q - 1 - self.log_table[nz]) % (q - 1)]
        elif q == 2:
            inv[1] = 1
        self.inv_table = inv

    # -- construction helpers -------------------------------------------

    def _build_reduction(self) -> np.ndarray:
        p, s, m = self.p, self.s, self.modulus
        red = np.zeros((s - 1, s), dtype=np.int64)
        # x^s = -(m_0 + m_1 x + ... + m_{s-1} x^{s-1})
        cur = [(-m[i]) % p for i in range(s)]
        red[0] = cur
        for t in range(1, s - 1):
            nxt = [0] + cur[:-1]
            hi = cur[-1]
            if hi:
                for i in range(s):
                    nxt[i] = (nxt[i] + hi * red[0][i]) % p
            red[t] = nxt
            cur = nxt
        return red

    def _mul_poly(self, a: int, b: int) -> int:
        """Polynomial-arithmetic product of two element indices; table-free."""
        p, s = self.p, self.s
        da = self.digits[a]
        db = self.digits[b]
        conv = [0] * (2 * s - 1)
        for i in range(s):
            if da[i]:
                for j in range(s):
                    conv[i + j] = (conv[i + j] + int(da[i]) * int(db[j])) % p
        out = conv[:s]
        for t in range(s - 1):
            hi = conv[s + t]
            if hi:
                for i in range(s):
                    out[i] = (out[i] + hi * int(self._reduction[t, i])) % p
        return int(np.dot(out, self.pow_p))

    def _pow_poly(self, a: int, e: int) -> int:
        res, base = 1, a
        while e:
            if e & 1:
                res = self._mul_poly(res, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return res

    def _build_log_tables(self) -> None:
        q = self.q
        order = q - 1
        gen = 1
        if order > 1:
            primes = _factorize(order)
            for cand in range(2, q):
                if all(self._pow_poly(cand, order // ell) != 1 for ell in primes):
                    gen = cand
                    break
        self.generator = gen
        exp = np.empty(order, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        cur = 1
        for i in range(order):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_poly(cur, gen)
        self.exp_table = exp
        self.log_table = log

    # -- scalar operations ------------------------------------------------

    def validate(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise BadArgs(f"element index {a} out of range for GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        d = (self.digits[a] + self.digits[b]) % self.p
        return int(d @ self.pow_p)

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("zero has no multiplicative inverse")
            return 0
        return int(self.exp_table[(int(self.log_table[a]) * e) % (self.q - 1)])

    def nonzero_elements(self) -> list[int]:
        """The q - 1 nonzero elements in ascending index order."""
        return list(range(1, self.q))

    # -- vectorized operations on index arrays -----------------------------

    def add_arrays(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.int64)
        Y = np.asarray(Y, dtype=np.int64)
        if self.s == 1:
            return (X + Y) % self.p
        if self.p == 2:
            return X ^ Y
        d = (self.digits[X] + self.digits[Y]) % self.p
        return d @ self.pow_p

    def neg_arrays(self, X: np.ndarray) -> np.ndarray:
        return self.neg_table[np.asarray(X, dtype=np.int64)]

    def mul_arrays(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        X, Y = np.broadcast_arrays(np.asarray(X, np.int64), np.asarray(Y, np.int64))
        if self.s == 1:
            return X * Y % self.p
        out = np.zeros(X.shape, dtype=np.int64)
        mask = (X != 0) & (Y != 0)
        out[mask] = self.exp_table[
            (self.log_table[X[mask]] + self.log_table[Y[mask]]) % (self.q - 1)
        ]
        return out

    @staticmethod
    def _int_matmul(A: np.ndarray, B: np.ndarray, bound: int) -> np.ndarray:
        # Exact float64 matmul rides BLAS (and releases the GIL) whenever the
        # largest possible accumulator stays below 2^53.
        if bound * bound * A.shape[-1] < (1 << 53):
            return (A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64)
        return A @ B

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Matrix product of two index-encoded arrays over this field."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[-1] != B.shape[0]:
            raise BadArgs(f"inner dimensions differ: {A.shape} x {B.shape}")
        if self.s == 1:
            return self._int_matmul(A, B, self.p - 1) % self.p
        # Multiplication is GF(p)-bilinear on digit vectors, so the product
        # decomposes into s^2 integer matmuls recombined via the structure
        # tensor of the basis monomials.
        s, p = self.s, self.p
        Ad = self.digits[A]  # (..., k, s)
        Bd = self.digits[B]  # (k, n, s)
        out_digits = np.zeros(A.shape[:-1] + (B.shape[1], s), dtype=np.int64)
        for u in range(s):
            Au = np.ascontiguousarray(Ad[..., u])
            for v in range(s):
                M = self._int_matmul(Au, np.ascontiguousarray(Bd[..., v]), p - 1)
                for t in range(s):
                    c = int(self._tensor[u, v, t])
                    if c:
                        out_digits[..., t] += c * M
        return (out_digits % p) @ self.pow_p

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.s == other.s
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus))

    def __repr__(self) -> str:
        if self.s == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.s}; modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def _cached_field(p: int, s: int, modulus: tuple[int, ...] | None) -> FiniteField:
    return FiniteField(p, s, modulus)


def build_field(p: int, s: int = 1, modulus=None) -> FiniteField:
    """Construct GF(p^s).

    If ``modulus`` (length s+1, ascending coefficients, monic) is omitted for
    s > 1, the default irreducible polynomial is chosen deterministically by
    scanning coefficient encodings in ascending order.
    """
    if s < 1:
        raise BadArgs(f"extension degree must be >= 1, got {s}")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if p**s > MAX_Q:
        raise ValueError(f"fields with q > {MAX_Q} are not supported")
    if s == 1:
        if modulus is not None:
            raise WrongDegree("prime fields take no modulus")
        return _cached_field(p, 1, None)
    if modulus is None:
        modulus = default_modulus(p, s)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != s + 1:
            raise WrongDegree(f"modulus must have length {s + 1}, got {len(modulus)}")
        if any(not 0 <= c < p for c in modulus):
            raise WrongDegree("modulus coefficients must lie in [0, p)")
        if modulus[s] != 1:
            raise WrongDegree("modulus must be monic")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return _cached_field(p, s, modulus)
