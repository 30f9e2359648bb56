"""Generalized Hamming weights of trace codes.

Brute force is the oracle of record: since the code map a -> c(a) is
injective, r-dimensional subcodes correspond to r-dimensional F_p-subspaces
H of F_q, and

    d_r = n - max_H #{i : Tr(a d_i) = 0 for all a in H}.

Subspaces are enumerated as reduced row-echelon bases, batch by batch, so the
zero counts for thousands of subspaces come out of a single matmul.
"""
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .codes import build_code, defining_set
from .cyclotomy import rational_periods, semiprimitive_data, solve_c1_d1, solve_u1_v1
from .errors import (
    CorollaryConflict,
    EnumerationBudgetExceeded,
    NonIntegerResult,
    NotInjective,
    PeriodsNotRational,
    PreconditionError,
)

DEFAULT_BUDGET = 10**7
_BATCH_ENTRIES = 1 << 20


def gaussian_binomial(m, r, p):
    """Number of r-dimensional subspaces of F_p^m."""
    if not 0 <= r <= m:
        return 0
    num = den = 1
    for i in range(r):
        num *= p ** (m - i) - 1
        den *= p ** (r - i) - 1
    return num // den


@dataclass(frozen=True)
class Subspace:
    r: int
    basis: tuple  # r rows of length m, reduced row-echelon form

    def as_array(self):
        return np.array(self.basis, dtype=np.int64).reshape(self.r, -1)


def _pattern_layout(m, pivots):
    pivset = set(pivots)
    return [(j, c) for j, pc in enumerate(pivots) for c in range(pc + 1, m) if c not in pivset]


def subspace_batches(m, r, p, batch_entries=_BATCH_ENTRIES):
    """Yield arrays of shape (S, r, m) holding RREF bases.

    Order: pivot patterns lexicographically, then free entries counted in
    base p with the last free position varying fastest.  Every
    r-dimensional subspace of F_p^m appears exactly once.
    """
    if r == 0:
        yield np.zeros((1, 0, m), dtype=np.int64)
        return
    per_batch = max(1, batch_entries // (r * m))
    for pivots in combinations(range(m), r):
        free = _pattern_layout(m, pivots)
        f = len(free)
        template = np.zeros((r, m), dtype=np.int64)
        template[np.arange(r), list(pivots)] = 1
        total = p**f
        if f:
            rows = np.array([j for j, _ in free])
            cols = np.array([c for _, c in free])
            place = p ** np.arange(f - 1, -1, -1, dtype=np.int64)
        for start in range(0, total, per_batch):
            idx = np.arange(start, min(total, start + per_batch), dtype=np.int64)
            bases = np.broadcast_to(template, (idx.size, r, m)).copy()
            if f:
                bases[:, rows, cols] = (idx[:, None] // place) % p
            yield bases


def subspace_iter(m, r, p):
    for batch in subspace_batches(m, r, p):
        for b in batch:
            yield Subspace(r, tuple(tuple(int(v) for v in row) for row in b))


# -- zero counts -------------------------------------------------------------

def zero_counts(bases, T, p):
    """For each basis (S, r, m): number of columns of T killed by every row."""
    S, r, _ = bases.shape
    if r == 0:
        return np.full(S, T.shape[1], dtype=np.int64)
    prod = np.matmul(bases.astype(np.float64), T.astype(np.float64))
    killed = np.all(np.fmod(prod, p) == 0, axis=1)
    return np.count_nonzero(killed, axis=1)


def n_zero_direct(code, sub):
    """N(U^r): coordinates vanishing on the subcode generated by ``sub``."""
    basis = sub.as_array() if isinstance(sub, Subspace) else np.asarray(sub)
    return int(zero_counts(basis[None], code.trace_matrix, code.p)[0])


def _nonzero_combos(p, r):
    combos = (np.arange(1, p**r)[:, None] // p ** np.arange(r)) % p
    return combos.astype(np.int64)


def class_profiles(ctx, bases, N1):
    """(S, N1) counts of nonzero subspace elements per cyclotomic class of order N1."""
    S, r, m = bases.shape
    if r == 0:
        return np.zeros((S, N1), dtype=np.int64)
    combos = _nonzero_combos(ctx.p, r)
    coords = np.einsum("kr,srm->skm", combos, bases) % ctx.p
    idx = coords @ ctx.powers
    cls = ctx.log_table[idx] % N1
    flat = (np.arange(S)[:, None] * N1 + cls).ravel()
    return np.bincount(flat, minlength=S * N1).reshape(S, N1)


def class_profile(ctx, sub, N1):
    basis = sub.as_array() if isinstance(sub, Subspace) else np.asarray(sub)
    return [int(v) for v in class_profiles(ctx, basis[None], N1)[0]]


def _period_vector(params):
    eta = rational_periods(params, params.N1)
    if eta is None:
        raise PeriodsNotRational(f"periods of order N1={params.N1} are not rational")
    if any(v.denominator != 1 for v in eta):
        raise NonIntegerResult(f"rational periods should be integers: {eta}")
    return np.array([int(v) for v in eta], dtype=np.int64)


def n_zero_via_periods_batch(profiles, params, family, r):
    """Vectorized period formula for N(U^r); returns exact integers."""
    p, q = params.p, params.q
    pr = p**r
    if family == "C":
        num, den = q - pr, 2 * pr
        if num % den:
            raise NonIntegerResult(f"(q - p^r)/(2 p^r) = {Fraction(num, den)} is not an integer")
        return np.full(len(profiles), num // den, dtype=np.int64)
    s = np.asarray(profiles, dtype=np.int64) @ _period_vector(params)
    if family == "A":
        num, den = params.n1 * params.N + params.N1 * s, pr * params.N
    elif family == "B":
        num, den = params.n2 * (p - 1) + s, pr * (p - 1)
    else:
        raise PreconditionError(f"unknown family {family!r}")
    if np.any(num % den) or np.any(num < 0):
        raise NonIntegerResult(f"period formula produced non-integer or negative zero counts")
    return num // den


def n_zero_via_periods(profile, params, family, r=None):
    """N(U^r) from the class profile (families A, B) or from r alone (family C)."""
    if r is None:
        total = sum(profile) + 1
        r = 0
        while params.p**r < total:
            r += 1
    prof = np.zeros((1, params.N1), dtype=np.int64) if profile is None else np.asarray([profile])
    return int(n_zero_via_periods_batch(prof, params, family, r)[0])


# -- bounds ------------------------------------------------------------------

@dataclass(frozen=True)
class Bounds:
    singleton_lo: int
    singleton_hi: int
    plotkin: int
    griesmer: int

    def check(self, d):
        return {
            "singleton": self.singleton_lo <= d <= self.singleton_hi,
            "plotkin": d <= self.plotkin,
            "griesmer": d >= self.griesmer,
        }


def ghw_bounds(n, k, p, d1, r):
    if not 1 <= r <= k:
        raise PreconditionError(f"need 1 <= r <= k, got r={r}, k={k}")
    return Bounds(
        singleton_lo=r,
        singleton_hi=n - k + r,
        plotkin=n * (p**r - 1) * p ** (k - r) // (p**k - 1),
        griesmer=sum(-(-d1 // p**i) for i in range(r)),
    )


# -- brute force -------------------------------------------------------------

@dataclass
class GhwRecord:
    r: int
    d_r: int
    n_zero_max: int
    subspaces: int
    argmax: Subspace = None
    profile: list = None
    closed: "ClosedForm" = None
    bounds: Bounds = None
    checks: dict = field(default_factory=dict)
    method: str = "brute"

    @property
    def ok(self):
        return all(self.checks.values())


def enumeration_cost(m, r, p, n):
    return gaussian_binomial(m, r, p) * n * r


def _default_workers():
    return os.cpu_count() or 1


def _scan(code, r, budget, workers, oracle=None):
    """Max zero count over all r-subspaces; optional per-batch oracle comparison."""
    ctx = code.ctx
    m, p, n = ctx.m, ctx.p, code.n
    if not code.injective:
        raise NotInjective(f"k={code.k} < m={m}: subspaces of F_q do not biject with subcodes")
    cost = enumeration_cost(m, r, p, n)
    if budget is not None and cost > budget:
        raise EnumerationBudgetExceeded(
            f"r={r}: {cost} column checks exceed budget {budget}")
    T = code.trace_matrix
    per_batch = max(1, 2 * _BATCH_ENTRIES // max(r * n, p**r * m))
    entries = per_batch * r * m

    def work(bases):
        z = zero_counts(bases, T, p)
        mism = oracle(bases, z) if oracle is not None else 0
        best = int(np.argmax(z))
        return int(z[best]), bases[best], len(z), mism

    batches = subspace_batches(m, r, p, batch_entries=entries)
    workers = workers or _default_workers()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(work, batches))
    else:
        results = [work(b) for b in batches]
    best, arg, seen, mism = -1, None, 0, 0
    for z, b, cnt, mm in results:  # enumeration order, strict > keeps the first maximizer
        if z > best:
            best, arg = z, b
        seen += cnt
        mism += mm
    return best, arg, seen, mism


def ghw_bruteforce(code, r, budget=DEFAULT_BUDGET, workers=None):
    """d_r by exhaustive enumeration of r-dimensional subspaces of F_q."""
    best, arg, seen, _ = _scan(code, r, budget, workers)
    sub = Subspace(r, tuple(tuple(int(v) for v in row) for row in arg))
    profile = None
    if code.dset.family in "AB":
        profile = class_profile(code.ctx, sub, code.dset.params.N1)
    return GhwRecord(r=r, d_r=code.n - best, n_zero_max=best, subspaces=seen,
                     argmax=sub, profile=profile)


# -- closed forms ------------------------------------------------------------

@dataclass(frozen=True)
class Corollary:
    label: str
    r_max: int
    eta_max: Fraction  # largest period of order N1 used by the formula
    numerator: Fraction  # d_r = (1 - p^-r) * numerator / N for family A
    note: str = ""


def _odd_part(n):
    while n % 2 == 0:
        n //= 2
    return n


def family_a_corollaries(p, m, N, N1):
    """Closed forms for d_r of family A, each with its range 1 <= r <= r_max."""
    q = p**m
    F = Fraction
    sq = p ** (m // 2) if m % 2 == 0 else None
    out = []
    if N1 == 1:
        out.append(Corollary("N1=1", m, F(-1), F(q)))
    if N1 == 2 and sq:
        out.append(Corollary("N1=2", m // 2, F(sq - 1, 2), F(q - sq)))
    if N1 == 3 and p % 3 == 2 and sq:
        if m % 4 == 2:
            out.append(Corollary("N1=3, p≡2 mod 3, m≡2 mod 4", m // 2, F(2 * sq - 1, 3), F(q - 2 * sq)))
        else:
            ell = _odd_part(m)
            out.append(Corollary(f"N1=3, p≡2 mod 3, 4l|m (l={ell})", ell, F(sq - 1, 3), F(q - sq),
                                 note=f"l={ell}"))
    if N1 == 3 and p % 3 == 1 and m % 3 == 0:
        w = solve_c1_d1(p, m)
        c1, d1, t = w.first, w.second_abs, p ** (m // 3)
        if c1 == 3 * d1:
            raise CorollaryConflict("c1 = 3|d1| contradicts c1 = 1 mod 3")
        if c1 > 3 * d1:
            out.append(Corollary("N1=3, p≡1 mod 3 (c1>3|d1|)", m // 3, F(c1 * t - 1, 3), F(q - c1 * t),
                                 note=f"c1={c1}, |d1|={d1}"))
        else:
            out.append(Corollary("N1=3, p≡1 mod 3 (c1<3|d1|)", m // 3,
                                 (-1 - F(c1 - 9 * d1, 2) * t) / 3, q + F(c1 - 9 * d1, 2) * t,
                                 note=f"c1={c1}, |d1|={d1}"))
    if N1 == 4 and p % 4 == 3 and sq:
        if m % 4 == 2:
            out.append(Corollary("N1=4, p≡3 mod 4, m≡2 mod 4", m // 2, F(3 * sq - 1, 4), F(q - 3 * sq)))
        else:
            out.append(Corollary("N1=4, p≡3 mod 4, m≡0 mod 4", m // 4, F(sq - 1, 4), F(q - sq)))
    if N1 == 4 and p % 4 == 1 and m % 4 == 0:
        w = solve_u1_v1(p, m)
        t, v1 = p ** (m // 4), w.second_abs
        out.append(Corollary("N1=4, p≡1 mod 4", m // 4, F(-1 + sq + 4 * t * v1, 4),
                             F(q - sq - 4 * t * v1), note=f"u1={w.first}, |v1|={v1}"))
    sp = semiprimitive_data(p, m, N1)
    if sp is not None:
        s = p ** (m // 2)
        if sp.gamma % 2 == 0:
            out.append(Corollary(f"semiprimitive (γ={sp.gamma} even, j={sp.j})", sp.j,
                                 F(s - 1, N1), F(q - s)))
        else:
            out.append(Corollary(f"semiprimitive (γ={sp.gamma} odd, j={sp.j})", sp.j,
                                 F((N1 - 1) * s - 1, N1), F(q - (N1 - 1) * s)))
    return out


@dataclass(frozen=True)
class ClosedForm:
    value: Fraction
    labels: tuple
    r_ranges: tuple
    derived: bool = False  # family B: analog of the family-A corollaries, not stated explicitly


def _closed_candidates(params, family, r):
    p, m, q = params.p, params.m, params.q
    shrink = 1 - Fraction(1, p**r)
    if family == "C":
        return [("skew-set theorem", m, shrink * Fraction(q, 2))], False
    if family == "B" and params.N1 ** 2 > q:
        return [], True
    cands = []
    for c in family_a_corollaries(p, m, params.N, params.N1):
        if family == "A":
            cands.append((c.label, c.r_max, shrink * c.numerator / params.N))
        else:
            value = shrink * (params.n2 - c.eta_max / (p - 1))
            cands.append((f"family B analog of {c.label}", c.r_max, value))
    return cands, family == "B"


def ghw_closed_form(params, family, r):
    """Closed-form d_r where some corollary covers r; ``None`` otherwise."""
    family = family.upper()
    cands, derived = _closed_candidates(params, family, r)
    live = [(lab, rm, v) for lab, rm, v in cands if 1 <= r <= rm]
    if not live:
        return None
    values = {v for _, _, v in live}
    if len(values) > 1:
        raise CorollaryConflict(f"corollaries disagree at r={r}: {live}")
    return ClosedForm(values.pop(), tuple(lab for lab, _, _ in live),
                      tuple((1, rm) for _, rm, _ in live), derived)


# -- orchestration -----------------------------------------------------------

@dataclass
class HierarchyReport:
    params: object
    family: str
    skew_spec: str
    n: int
    k: int
    records: list
    truncated_at: int = None
    discrepancies: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.discrepancies

    @property
    def hierarchy(self):
        return [rec.d_r for rec in self.records]


def _period_oracle(code, r, stride):
    params, family = code.dset.params, code.dset.family
    counter = {"checked": 0}

    def oracle(bases, z):
        sel = bases[::stride]
        zs = z[::stride]
        if family == "C":
            prof = np.zeros((len(sel), params.N1), dtype=np.int64)
        else:
            prof = class_profiles(code.ctx, sel, params.N1)
        via = n_zero_via_periods_batch(prof, params, family, r)
        counter["checked"] += len(sel)
        return int(np.count_nonzero(via != zs))

    return oracle, counter


def hierarchy_report(params, family, skew_spec="canonical", r_max=None, budget=DEFAULT_BUDGET,
                     workers=None, cross_check_limit=50_000):
    """Brute-force hierarchy with closed-form, period-formula, and bound checks."""
    family = family.upper()
    code = build_code(defining_set(params, family, skew_spec))
    ctx = code.ctx
    report = HierarchyReport(params, family, code.dset.skew_spec, code.n, code.k, [])
    if not code.injective:
        report.discrepancies.append(f"code map not injective: k={code.k} < m={ctx.m}")
        return report
    top = ctx.m if r_max is None else min(ctx.m, r_max)
    d1 = None
    for r in range(1, top + 1):
        count = gaussian_binomial(ctx.m, r, ctx.p)
        stride = max(1, -(-count // cross_check_limit))
        oracle, counter = _period_oracle(code, r, stride)
        try:
            best, arg, seen, mism = _scan(code, r, budget, workers, oracle)
        except EnumerationBudgetExceeded:
            report.truncated_at = r
            break
        sub = Subspace(r, tuple(tuple(int(v) for v in row) for row in arg))
        rec = GhwRecord(r=r, d_r=code.n - best, n_zero_max=best, subspaces=seen, argmax=sub)
        if family in "AB":
            rec.profile = class_profile(ctx, sub, params.N1)
        d1 = rec.d_r if r == 1 else d1
        rec.bounds = ghw_bounds(code.n, code.k, ctx.p, d1, r)
        rec.checks.update(rec.bounds.check(rec.d_r))
        rec.checks["enumeration_complete"] = seen == count
        rec.checks["period_formula"] = mism == 0
        rec.checks["period_formula_checked"] = counter["checked"] > 0
        rec.closed = ghw_closed_form(params, family, r)
        if rec.closed is not None:
            rec.checks["closed_form"] = rec.closed.value == rec.d_r
        if report.records:
            rec.checks["strictly_increasing"] = rec.d_r > report.records[-1].d_r
        for name, good in rec.checks.items():
            if not good:
                report.discrepancies.append(f"r={r}: check {name} failed")
        report.records.append(rec)
    return report
