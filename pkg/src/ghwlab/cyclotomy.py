"""Cyclotomic classes and exact Gauss periods.

A Gauss period lives in Z[zeta_p].  We keep it as the vector of trace
counts ``a_t = #{x in C_i : Tr(x) = t}`` so that
``eta_i = sum_t a_t zeta_p^t`` exactly; no floating point is involved
anywhere except the generic modulus bound for irrational periods.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm, sqrt

import numpy as np

from ._nt import multiplicative_order
from .errors import (
    BoundViolated,
    LemmaConflict,
    MultisetMismatch,
    NDoesNotDivide,
    NoSolutionFound,
    NonIntegerCoefficient,
    PreconditionError,
)
from .field import FieldCtx


@dataclass(frozen=True)
class CyclotomyParams:
    ctx: FieldCtx
    N: int
    n1: int
    N1: int
    N2: int
    n2: int
    theta: int
    ord_ok: bool

    @property
    def p(self):
        return self.ctx.p

    @property
    def m(self):
        return self.ctx.m

    @property
    def q(self):
        return self.ctx.q

    def as_dict(self):
        return {"p": self.p, "m": self.m, "q": self.q, "N": self.N, "n1": self.n1,
                "N1": self.N1, "N2": self.N2, "n2": self.n2}


def cyclotomy_params(ctx, N):
    q, p = ctx.q, ctx.p
    if N < 1 or (q - 1) % N:
        raise NDoesNotDivide(f"N={N} does not divide q-1={q - 1}")
    proj = (q - 1) // (p - 1)
    n1 = (q - 1) // N
    N1, N2 = gcd(N, proj), lcm(N, proj)
    return CyclotomyParams(
        ctx=ctx, N=N, n1=n1, N1=N1, N2=N2, n2=N2 // N,
        theta=ctx.exp(N),
        ord_ok=multiplicative_order(p, n1) == ctx.m,
    )


def class_index(ctx, x, e):
    """Index i with x in C_i^{(e,q)} = alpha^i <alpha^e>."""
    return ctx.log(getattr(x, "index", x)) % e


def cyclotomic_class(ctx, e, i):
    """Elements of C_i^{(e,q)} as an index array, in order alpha^i, alpha^{i+e}, ..."""
    return ctx.exp_table[i::e]


# -- Z[zeta_p] ---------------------------------------------------------------

class CyclotomicInt:
    """Exact element ``sum_t a_t zeta_p^t`` of Z[zeta_p].

    Stored canonically with ``a_0 = 0``; the remaining p - 1 powers form a
    Z-basis, so equal values have equal coefficient vectors.  ``raw`` keeps
    the uncanonicalized vector when the value came from a trace count.
    """

    __slots__ = ("p", "coeffs", "raw")

    def __init__(self, coeffs, raw=None):
        c = [int(a) for a in coeffs]
        self.p = len(c)
        self.coeffs = tuple(a - c[0] for a in c)
        self.raw = tuple(int(a) for a in raw) if raw is not None else None

    @classmethod
    def from_counts(cls, counts):
        return cls(counts, raw=counts)

    @classmethod
    def from_int(cls, p, n):
        return cls([n] + [0] * (p - 1))

    def _coerce(self, other):
        if isinstance(other, CyclotomicInt):
            if other.p != self.p:
                raise ValueError("mismatched cyclotomic orders")
            return other
        if isinstance(other, (int, np.integer)):
            return CyclotomicInt.from_int(self.p, int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = [0] * p
        for s, a in enumerate(self.coeffs):
            if a:
                for t, b in enumerate(other.coeffs):
                    if b:
                        out[(s + t) % p] += a * b
        return CyclotomicInt(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def rational(self):
        """The value as a Fraction when it lies in Q, else ``None``."""
        tail = set(self.coeffs[1:])
        if len(tail) > 1:
            return None
        return Fraction(-tail.pop()) if tail else Fraction(0)

    @property
    def is_rational(self):
        return self.rational() is not None

    def to_complex(self):
        z = np.exp(2j * np.pi * np.arange(self.p) / self.p)
        return complex(np.dot(self.coeffs, z))

    def __repr__(self):
        r = self.rational()
        if r is not None:
            return f"CyclotomicInt({r})"
        return f"CyclotomicInt({list(self.coeffs)})"


def period_rational_value(c):
    """Rational value of a period (or raw count vector), or ``None``.

    For raw counts ``a`` with ``a_1 = ... = a_{p-1}`` the value is ``a_0 - a_1``.
    """
    if not isinstance(c, CyclotomicInt):
        c = CyclotomicInt.from_counts(c)
    return c.rational()


@lru_cache(maxsize=32)
def _trace_counts(ctx, e):
    x = np.arange(1, ctx.q)
    cls = ctx.log_table[x] % e
    counts = np.bincount(cls * ctx.p + ctx.trace_table[x], minlength=e * ctx.p)
    out = counts.reshape(e, ctx.p)
    out.setflags(write=False)
    return out


def _ctx_of(obj):
    return obj.ctx if isinstance(obj, CyclotomyParams) else obj


def trace_counts(ctx, e):
    """Array of shape (e, p): row i counts the trace values over C_i^{(e,q)}."""
    ctx = _ctx_of(ctx)
    if (ctx.q - 1) % e:
        raise NDoesNotDivide(f"e={e} does not divide q-1={ctx.q - 1}")
    return _trace_counts(ctx, e)


def gauss_period_exact(params, e, i):
    """eta_i^{(e,q)} as an exact cyclotomic integer (raw trace counts retained)."""
    counts = trace_counts(params, e)
    if not 0 <= i < e:
        raise PreconditionError(f"class index {i} out of range for e={e}")
    return CyclotomicInt.from_counts(counts[i])


def gauss_periods(params, e):
    return [CyclotomicInt.from_counts(row) for row in trace_counts(params, e)]


def rational_periods(params, e):
    """All periods of order e as Fractions, or ``None`` if any is irrational."""
    vals = [c.rational() for c in gauss_periods(params, e)]
    return None if any(v is None for v in vals) else vals


# -- Diophantine witnesses ---------------------------------------------------

@dataclass(frozen=True)
class DiophantineWitness:
    kind: str  # "c1d1" or "u1v1"
    first: int
    second_abs: int

    def astuple(self):
        return (self.first, self.second_abs)


def _unique(cands, what):
    if len(cands) != 1:
        raise NoSolutionFound(f"{what}: expected exactly one witness, found {sorted(cands)}")
    return cands.pop()


def solve_c1_d1(p, m):
    """(c1, |d1|) with 4 p^{m/3} = c1^2 + 27 d1^2, c1 = 1 mod 3, gcd(c1, p) = 1."""
    if p % 3 != 1 or m % 3:
        raise PreconditionError(f"need p = 1 mod 3 and 3 | m, got p={p}, m={m}")
    target = 4 * p ** (m // 3)
    cands = set()
    for d in range(isqrt(target // 27) + 1):
        rest = target - 27 * d * d
        c = isqrt(rest)
        if c * c != rest:
            continue
        for cc in {c, -c}:
            if cc % 3 == 1 and gcd(cc, p) == 1:
                cands.add((cc, d))
    c1, d1 = _unique(cands, f"c1/d1 for p={p}, m={m}")
    return DiophantineWitness("c1d1", c1, d1)


def solve_u1_v1(p, m):
    """(u1, |v1|) with p^{m/2} = u1^2 + 4 v1^2, u1 = 1 mod 4, gcd(u1, p) = 1."""
    if p % 4 != 1 or m % 2:
        raise PreconditionError(f"need p = 1 mod 4 and 2 | m, got p={p}, m={m}")
    target = p ** (m // 2)
    cands = set()
    for v in range(isqrt(target // 4) + 1):
        rest = target - 4 * v * v
        u = isqrt(rest)
        if u * u != rest:
            continue
        for uu in {u, -u}:
            if uu % 4 == 1 and gcd(uu, p) == 1:
                cands.add((uu, v))
    u1, v1 = _unique(cands, f"u1/v1 for p={p}, m={m}")
    return DiophantineWitness("u1v1", u1, v1)


# -- closed forms -------------------------------------------------------------

@dataclass(frozen=True)
class PeriodPrediction:
    label: str
    values: tuple  # sorted multiset of Fractions
    by_index: tuple = None  # eta_0..eta_{e-1} when the lemma pins indices
    witness: DiophantineWitness = None


@dataclass(frozen=True)
class SemiprimitiveData:
    j: int
    gamma: int
    case: str  # "a" or "b"


def semiprimitive_data(p, m, e):
    """(j, gamma, case) when e >= 3 is semiprimitive for q = p^m, else ``None``."""
    if e < 3:
        return None
    j = next((j for j in range(1, m + 1) if (p**j + 1) % e == 0), None)
    if j is None or m % (2 * j):
        return None
    gamma = m // (2 * j)
    odd = gamma % 2 and p % 2 and ((p**j + 1) // e) % 2
    return SemiprimitiveData(j, gamma, "a" if odd else "b")


def _ms(*pairs):
    out = []
    for value, mult in pairs:
        out.extend([Fraction(value)] * mult)
    return tuple(sorted(out))


def period_predictions(p, m, e, symbol="N"):
    """Every closed-form prediction that applies to the periods of order e."""
    q = p**m
    if (q - 1) % e:
        return []
    F = Fraction
    preds = []
    sq = p ** (m // 2) if m % 2 == 0 else None

    if e == 1:
        preds.append(PeriodPrediction(f"{symbol}=1 (whole group)", _ms((-1, 1)), (F(-1),)))

    if e == 2 and sq is not None:
        if p % 4 == 1:
            eta0 = F(-1 - sq, 2)
            label = f"{symbol}=2 lemma (p≡1 mod 4, m even)"
        else:
            eta0 = F(-1 - (-1) ** (m // 2) * sq, 2)
            label = f"{symbol}=2 lemma (p≡3 mod 4, m even)"
        idx = (eta0, -1 - eta0)
        preds.append(PeriodPrediction(label, tuple(sorted(idx)), idx))

    if e == 3 and p % 3 == 2:
        if m % 4 == 0:
            vals = _ms((F(-1 - 2 * sq, 3), 1), (F(-1 + sq, 3), 2))
        else:
            vals = _ms((F(-1 + 2 * sq, 3), 1), (F(-1 - sq, 3), 2))
        preds.append(PeriodPrediction(f"{symbol}=3 lemma (p≡2 mod 3, m≡{m % 4} mod 4)", vals))

    if e == 3 and p % 3 == 1 and m % 3 == 0:
        w = solve_c1_d1(p, m)
        c1, d1, t = w.first, w.second_abs, p ** (m // 3)
        vals = _ms(
            (F(-1 + c1 * t, 3), 1),
            (F(-1 - F(c1 + 9 * d1, 2) * t, 3), 1),
            (F(-1 - F(c1 - 9 * d1, 2) * t, 3), 1),
        )
        preds.append(PeriodPrediction(f"{symbol}=3 lemma (p≡1 mod 3, m≡0 mod 3)", vals, witness=w))

    if e == 4 and p % 4 == 3:
        if m % 4 == 0:
            vals = _ms((F(-1 - 3 * sq, 4), 1), (F(-1 + sq, 4), 3))
        else:
            vals = _ms((F(-1 + 3 * sq, 4), 1), (F(-1 - sq, 4), 3))
        preds.append(PeriodPrediction(f"{symbol}=4 lemma (p≡3 mod 4, m≡{m % 4} mod 4)", vals))

    if e == 4 and p % 4 == 1 and m % 4 == 0:
        w = solve_u1_v1(p, m)
        u1, v1, t = w.first, w.second_abs, p ** (m // 4)
        vals = _ms(
            (F(-1 - sq - 2 * t * u1, 4), 1),
            (F(-1 - sq + 2 * t * u1, 4), 1),
            (F(-1 + sq - 4 * t * v1, 4), 1),
            (F(-1 + sq + 4 * t * v1, 4), 1),
        )
        preds.append(PeriodPrediction(f"{symbol}=4 lemma (p≡1 mod 4, m≡0 mod 4)", vals, witness=w))

    sp = semiprimitive_data(p, m, e)
    if sp is not None:
        sq = p ** (m // 2)
        if sp.case == "a":
            rest = F(-(sq + 1), e)
            idx = tuple(sq + rest if i == e // 2 else rest for i in range(e))
        else:
            eta0 = F((-1) ** (sp.gamma + 1) * (e - 1) * sq - 1, e)
            rest = F((-1) ** sp.gamma * sq - 1, e)
            idx = (eta0,) + (rest,) * (e - 1)
        label = f"semiprimitive {symbol}={e} case ({sp.case}) j={sp.j} γ={sp.gamma}"
        preds.append(PeriodPrediction(label, tuple(sorted(idx)), idx))
    return preds


@dataclass(frozen=True)
class ClosedFormPeriods:
    e: int
    labels: tuple
    values: tuple
    predictions: tuple


def closed_form_periods(params, e=None):
    """Combined closed-form prediction for the periods of order e (default N1).

    Returns ``None`` when no lemma applies.  When several lemmas apply their
    multisets must coincide (and so must any pinned index assignments).
    """
    e = params.N1 if e is None else e
    symbol = "N1" if e == params.N1 else "N"
    preds = period_predictions(params.p, params.m, e, symbol=symbol)
    if not preds:
        return None
    first = preds[0]
    pinned = [pr.by_index for pr in preds if pr.by_index is not None]
    if any(pr.values != first.values for pr in preds) or any(b != pinned[0] for b in pinned):
        raise LemmaConflict(f"period lemmas disagree for q={params.q}, e={e}: {preds}")
    return ClosedFormPeriods(e, tuple(pr.label for pr in preds), first.values, tuple(preds))


def period_polynomial(params, e):
    """Integer coefficients (low degree first) of prod_i (X - eta_i^{(e,q)}).

    The product is expanded in Z[zeta_p][X]; every coefficient must come out
    rational (it is fixed by the Galois group) and integral.
    """
    p = _ctx_of(params).p
    poly = np.zeros((1, p), dtype=object)
    poly[0, 0] = 1
    for eta in gauss_periods(params, e):
        nxt = np.zeros((poly.shape[0] + 1, p), dtype=object)
        nxt[1:] = poly
        for t, a in enumerate(eta.coeffs):
            if a:
                nxt[:-1] -= a * np.roll(poly, t, axis=1)
        poly = nxt
    out = []
    for k, row in enumerate(poly):
        v = CyclotomicInt(row).rational()
        if v is None or v.denominator != 1:
            raise NonIntegerCoefficient(f"coefficient of X^{k} is not an integer: {list(row)}")
        out.append(int(v))
    return out


def period_polynomial_cost(p, e):
    return e * e * p * p


@dataclass
class BoundCheck:
    e: int
    rows: list  # (i, exact, lhs, rhs, ok)
    ok: bool


def period_bound_check(params, e, tol=1e-6):
    """Check |eta_i + 1/e| <= (e-1) sqrt(q) / e for every class i."""
    q = _ctx_of(params).q
    rows = []
    for i, eta in enumerate(gauss_periods(params, e)):
        r = eta.rational()
        if r is not None:
            lhs, rhs = (e * r + 1) ** 2, (e - 1) ** 2 * q
            rows.append((i, True, lhs, rhs, lhs <= rhs))
        else:
            lhs, rhs = abs(eta.to_complex() + 1 / e), (e - 1) * sqrt(q) / e
            rows.append((i, False, lhs, rhs, lhs <= rhs + tol))
    report = BoundCheck(e, rows, all(row[-1] for row in rows))
    if not report.ok:
        bad = [row for row in rows if not row[-1]]
        raise BoundViolated(f"modulus bound fails for e={e}: {bad}")
    return report


@dataclass
class MultisetReport:
    e: int
    i: int
    target_order: int
    multiplicity: int
    ok: bool


def verify_multiset_lemma(params, e, i):
    """{xy : y in F_p*, x in C_i^{(e,q)}} = mult * C_i^{(g,q)}, g = gcd((q-1)/(p-1), e)."""
    ctx = _ctx_of(params)
    q, p = ctx.q, ctx.p
    if (q - 1) % e:
        raise NDoesNotDivide(f"e={e} does not divide q-1={q - 1}")
    g = gcd((q - 1) // (p - 1), e)
    mult, rem = divmod((p - 1) * g, e)
    xs = cyclotomic_class(ctx, e, i)
    ys = np.arange(1, p)  # prime-subfield constants
    prods = ctx.mul(xs[:, None], ys[None, :]).ravel()
    hist = np.bincount(prods, minlength=q)
    expected = np.zeros(q, dtype=np.int64)
    expected[cyclotomic_class(ctx, g, i % g)] = mult
    ok = rem == 0 and np.array_equal(hist, expected)
    if not ok:
        raise MultisetMismatch(f"multiset lemma fails for q={q}, e={e}, i={i}")
    return MultisetReport(e, i, g, mult, ok)
