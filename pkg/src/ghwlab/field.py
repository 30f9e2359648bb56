"""Arithmetic in F_p and F_{p^m}.

Elements are stored as integers in ``[0, q)``: the element
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` has index ``c_0 + c_1 p + ... ``.
All table-backed operations accept either Python ints or integer numpy
arrays and broadcast like ufuncs.
"""
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product

import numpy as np

from ._nt import is_prime, prime_factors
from .errors import NotOddPrime, SizeGuardExceeded, ZeroHasNoLog

DEFAULT_MAX_Q = 10**6


# -- polynomials over F_p, coefficient lists low degree first ---------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, f, p):
    a = [c % p for c in a]
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _trim(a[:df]) if len(a) > df else _trim(a)


def _polymulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _polymod(out, f, p)


def _polypowmod(a, e, f, p):
    result, base = [1], _polymod(a, f, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def _polygcd(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def is_irreducible(f, p):
    """Irreducibility of a monic ``f`` (low-degree-first coefficients) over F_p.

    Degree <= 3 uses root checking; otherwise ``f`` is irreducible iff it is
    coprime to ``x^{p^i} - x`` for every ``1 <= i <= deg f / 2``.
    """
    m = len(f) - 1
    if m <= 1:
        return m == 1
    if m <= 3:
        return all(sum(c * pow(t, k, p) for k, c in enumerate(f)) % p for t in range(p))
    h = [0, 1]
    for _ in range(m // 2):
        h = _polypowmod(h, p, f, p)
        g = list(h) + [0] * max(0, 2 - len(h))
        g[1] = (g[1] - 1) % p
        if len(_polygcd(f, g, p)) > 1:
            return False
    return True


# -- field context ----------------------------------------------------------

@dataclass(frozen=True, eq=False, repr=False)
class FieldCtx:
    p: int
    m: int
    q: int
    modulus: tuple
    alpha: int
    exp_table: np.ndarray
    log_table: np.ndarray
    digits: np.ndarray = dc_field(compare=False)
    trace_basis: np.ndarray = dc_field(compare=False)
    trace_table: np.ndarray = dc_field(compare=False)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.modulus}, alpha={self.alpha})"

    # conversion
    @property
    def powers(self):
        return self.p ** np.arange(self.m, dtype=np.int64)

    def coeffs(self, x):
        return tuple(int(c) for c in self.digits[x])

    def from_coeffs(self, coeffs):
        """Index of the element with the given coordinate vector(s) (last axis)."""
        c = np.asarray(coeffs, dtype=np.int64) % self.p
        out = c @ self.powers
        return int(out) if np.ndim(out) == 0 else out

    def element(self, x):
        if isinstance(x, (tuple, list)):
            x = self.from_coeffs(x)
        return FieldElement(self, int(x))

    # arithmetic on indices
    def add(self, a, b):
        return self.from_coeffs(self.digits[a] + self.digits[b])

    def sub(self, a, b):
        return self.from_coeffs(self.digits[a] - self.digits[b])

    def neg(self, a):
        return self.from_coeffs(-self.digits[a])

    def scale(self, c, a):
        """Multiply by the prime-field scalar ``c``."""
        return self.from_coeffs(np.asarray(c)[..., None] * self.digits[a])

    def mul(self, a, b):
        a_arr, b_arr = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        la, lb = self.log_table[a_arr], self.log_table[b_arr]
        out = self.exp_table[(la + lb) % (self.q - 1)]
        out = np.where((a_arr == 0) | (b_arr == 0), 0, out)
        return int(out) if out.ndim == 0 else out

    def pow(self, a, e):
        a_arr = np.asarray(a, dtype=np.int64)
        la = self.log_table[a_arr]
        out = self.exp_table[(la * e) % (self.q - 1)]
        if e == 0:
            out = np.ones_like(out)
        else:
            out = np.where(a_arr == 0, 0, out)
        return int(out) if out.ndim == 0 else out

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, -1)

    def trace(self, x):
        out = self.trace_table[x]
        return int(out) if np.ndim(out) == 0 else out

    def trace_frobenius(self, x):
        """Trace as ``sum_i x^(p^i)``, computed with table arithmetic."""
        acc = 0
        for i in range(self.m):
            acc = self.add(acc, self.pow(x, self.p ** i))
        # the sum lies in the prime subfield, whose indices are 0..p-1
        return acc

    def log(self, x):
        x_arr = np.asarray(x, dtype=np.int64)
        if np.any(x_arr == 0):
            raise ZeroHasNoLog("discrete logarithm of 0 is undefined")
        out = self.log_table[x_arr]
        return int(out) if out.ndim == 0 else out

    def exp(self, i):
        out = self.exp_table[np.asarray(i, dtype=np.int64) % (self.q - 1)]
        return int(out) if np.ndim(out) == 0 else out

    def order(self, x):
        """Multiplicative order of a nonzero element."""
        from math import gcd

        return (self.q - 1) // gcd(self.log(x), self.q - 1)


@dataclass(frozen=True)
class FieldElement:
    """Convenience wrapper around an element index, with operator overloads."""

    ctx: FieldCtx
    index: int

    @property
    def coeffs(self):
        return self.ctx.coeffs(self.index)

    def _wrap(self, i):
        return FieldElement(self.ctx, int(i))

    def _idx(self, other):
        if isinstance(other, FieldElement):
            return other.index
        return int(other) % self.ctx.p  # prime-field constant

    def __add__(self, other):
        return self._wrap(self.ctx.add(self.index, self._idx(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.ctx.sub(self.index, self._idx(other)))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.index))

    def __mul__(self, other):
        return self._wrap(self.ctx.mul(self.index, self._idx(other)))

    __rmul__ = __mul__

    def __pow__(self, e):
        return self._wrap(self.ctx.pow(self.index, e))

    def __truediv__(self, other):
        return self * self._wrap(self.ctx.inv(self._idx(other)))

    def __bool__(self):
        return self.index != 0

    def trace(self):
        return self.ctx.trace(self.index)

    def log(self):
        return self.ctx.log(self.index)

    def __repr__(self):
        terms = [f"{c}" if k == 0 else f"{c}*x" if k == 1 else f"{c}*x^{k}"
                 for k, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(terms)) or "0"


def field_arith(a, b, op):
    """Apply ``op`` in {"add", "mul", "pow"}; ``b`` is an int exponent for pow."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown op {op!r}")


def trace(x):
    return x.trace()


def discrete_log(x):
    return x.log()


def _mul_matrix(c, f, p):
    """Matrix of y -> c*y on coefficient rows: (digits of y) @ M = digits of c*y."""
    m = len(f) - 1
    M = np.zeros((m, m), dtype=np.int64)
    for j in range(m):
        row = _polymulmod([0] * j + [1], c, f, p)
        M[j, :len(row)] = row
    return M


def _power_digits(a, count, f, p):
    """Coefficient rows of a^0, a^1, ..., a^(count-1), filled by doubling."""
    m = len(f) - 1
    out = np.zeros((count, m), dtype=np.int64)
    out[0, 0] = 1
    filled = 1
    while filled < count:
        step = min(filled, count - filled)
        M = _mul_matrix(_polypowmod(a, filled, f, p), f, p)
        out[filled:filled + step] = out[:step] @ M % p
        filled += step
    return out


def _smallest_irreducible(p, m):
    for low in product(range(p), repeat=m):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


@lru_cache(maxsize=64)
def build_field(p, m, max_q=DEFAULT_MAX_Q):
    """Construct F_{p^m} deterministically.

    The modulus is the monic irreducible whose low coefficients
    ``(c_0, ..., c_{m-1})`` are lexicographically smallest; the primitive
    element is the smallest index of multiplicative order ``q - 1``.
    """
    if not isinstance(p, (int, np.integer)) or p <= 2 or not is_prime(p):
        raise NotOddPrime(f"p={p} is not an odd prime")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    q = p**m
    if q > max_q:
        raise SizeGuardExceeded(f"q={q} exceeds the table guard {max_q}")
    f = _smallest_irreducible(p, m)

    def poly_of(index):
        return _trim([(index // p**k) % p for k in range(m)])

    cofactors = [(q - 1) // ell for ell in prime_factors(q - 1)]
    alpha = next(
        x for x in range(1, q)
        if all(_polypowmod(poly_of(x), e, f, p) != [1] for e in cofactors)
    )

    powers = [p**k for k in range(m)]
    exp_digits = _power_digits(poly_of(alpha), q - 1, f, p)
    exp_table = exp_digits @ np.array(powers, dtype=np.int64)
    log_table = np.full(q, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(q - 1, dtype=np.int64)

    digits = (np.arange(q, dtype=np.int64)[:, None] // np.array(powers, dtype=np.int64)) % p
    tb = []
    for k in range(m):
        xk = poly_of(p**k)
        acc = [0]
        for i in range(m):
            term = _polypowmod(xk, p**i, f, p)
            acc = [(u + v) % p for u, v in zip(acc + [0] * m, term + [0] * m)]
        acc = _trim(acc)
        assert len(acc) <= 1, "trace must land in the prime field"
        tb.append(acc[0] if acc else 0)
    trace_basis = np.array(tb, dtype=np.int64)
    trace_table = (digits @ trace_basis) % p

    for arr in (exp_table, log_table, digits, trace_basis, trace_table):
        arr.setflags(write=False)
    return FieldCtx(p, m, q, f, alpha, exp_table, log_table, digits, trace_basis, trace_table)
