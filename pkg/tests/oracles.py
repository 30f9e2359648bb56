"""Independent reference computations used to cross-check the package.

Nothing here imports ghwlab's arithmetic: elements are plain coefficient
tuples and every operation is schoolbook.
"""
import cmath
import itertools
from fractions import Fraction

import sympy


def sympy_irreducible(coeffs_low_first, p):
    x = sympy.symbols("x")
    poly = sympy.Poly(list(reversed(coeffs_low_first)), x, modulus=p)
    return poly.is_irreducible


class NaiveField:
    def __init__(self, p, modulus):
        self.p, self.f = p, tuple(modulus)
        self.m = len(modulus) - 1
        self.q = p**self.m
        self.elements = list(itertools.product(range(p), repeat=self.m))
        # reorder so that index c0 + c1 p + ... matches position
        self.elements = [tuple((i // p**k) % p for k in range(self.m)) for i in range(self.q)]

    def index(self, a):
        return sum(c * self.p**k for k, c in enumerate(a))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d] % p
            if c:
                for k in range(m + 1):
                    prod[d - m + k] -= c * self.f[k]
        return tuple(c % p for c in prod[:m])

    def one(self):
        return tuple([1] + [0] * (self.m - 1))

    def const(self, c):
        return tuple([c % self.p] + [0] * (self.m - 1))

    def power(self, a, e):
        out = self.one()
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def order(self, a):
        x, k = a, 1
        while x != self.one():
            x = self.mul(x, a)
            k += 1
        return k

    def trace(self, a):
        acc, y = self.const(0), a
        for _ in range(self.m):
            acc = self.add(acc, y)
            y = self.power(y, self.p)
        assert all(c == 0 for c in acc[1:])
        return acc[0]


def smallest_field(p, m):
    """Modulus and primitive element chosen by exhaustive search."""
    for low in itertools.product(range(p), repeat=m):
        f = tuple(low) + (1,)
        if m == 1 or sympy_irreducible(f, p):
            break
    F = NaiveField(p, f)
    for i in range(1, F.q):
        if F.order(F.elements[i]) == F.q - 1:
            return F, i
    raise AssertionError


def complex_period(F, alpha_idx, e, i):
    """sum over C_i^{(e,q)} of exp(2 pi i Tr(x)/p), via repeated multiplication."""
    alpha = F.elements[alpha_idx]
    x = F.power(alpha, i)
    step = F.power(alpha, e)
    total = 0j
    for _ in range((F.q - 1) // e):
        total += cmath.exp(2j * cmath.pi * F.trace(x) / F.p)
        x = F.mul(x, step)
    return total


def naive_ghw(codewords, p, r):
    """min |Supp(U)| over r-dim subcodes, from explicit spans of codeword subsets."""
    nonzero = [c for c in codewords if any(c)]
    best = None
    seen = set()
    for combo in itertools.combinations(nonzero, r):
        span = set()
        for coeffs in itertools.product(range(p), repeat=r):
            span.add(tuple(sum(a * c[i] for a, c in zip(coeffs, combo)) % p for i in range(len(combo[0]))))
        if len(span) != p**r:
            continue
        key = frozenset(span)
        if key in seen:
            continue
        seen.add(key)
        supp = sum(1 for i in range(len(combo[0])) if any(v[i] for v in span))
        best = supp if best is None else min(best, supp)
    return best


def naive_code(F, D):
    """All codewords (Tr(a d))_d for a in F_q, with D a list of coefficient tuples."""
    return [tuple(F.trace(F.mul(a, d)) for d in D) for a in F.elements]


def exact_rational(z, tol=1e-7):
    """Round a complex number known to be an integer."""
    assert abs(z.imag) < tol, z
    k = round(z.real)
    assert abs(z.real - k) < tol, z
    return Fraction(k)
