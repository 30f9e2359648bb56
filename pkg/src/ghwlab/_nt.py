"""Small integer helpers (trial division is plenty at q <= 10**6)."""
from math import gcd, isqrt


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n):
    """Distinct prime factors of ``n`` in increasing order."""
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


def divisors(n):
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def multiplicative_order(a, n):
    """Order of ``a`` modulo ``n``; by convention 1 when ``n == 1``."""
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def exact_root(n, k):
    """Integer ``k``-th root of ``n`` or ``None`` when ``n`` is not a perfect power."""
    if n < 0:
        return None
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == n:
            return c
    return None


def prime_power(q):
    """Return ``(p, m)`` with ``q = p**m`` or ``None``."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p, m = fs[0], 0
    while q > 1:
        q //= p
        m += 1
    return p, m


def odd_prime_powers(q_max, q_min=3):
    for q in range(q_min, q_max + 1, 2):
        pm = prime_power(q)
        if pm is not None:
            yield pm
