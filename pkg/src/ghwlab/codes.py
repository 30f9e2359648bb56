"""Trace codes C_D = {(Tr(a d_1), ..., Tr(a d_n)) : a in F_q} for three families of D.

Family A: D = {theta^i : 0 <= i < n1}
Family B: D = {theta^i : 0 <= i < n2}
Family C: D a skew set, i.e. D, -D and {0} partition F_q
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._linalg import independent_rows
from .cyclotomy import CyclotomyParams, rational_periods
from .errors import (
    EnumerationBudgetExceeded,
    IsoPreconditionFailed,
    OrderAssumptionViolated,
    PeriodsNotRational,
    PreconditionError,
    SkewCanonicalUnavailable,
    WeightFormulaMismatch,
)

FAMILIES = ("A", "B", "C")
DEFAULT_WEIGHT_BUDGET = 10**7


@dataclass(frozen=True, eq=False)
class DefiningSet:
    family: str
    elements: np.ndarray
    params: CyclotomyParams
    skew_spec: str = None

    @property
    def ctx(self):
        return self.params.ctx

    @property
    def n(self):
        return len(self.elements)


def skew_representatives(ctx):
    """Pairs (x, -x) of nonzero elements, each pair listed once with x < -x."""
    x = np.arange(1, ctx.q)
    nx = ctx.neg(x)
    keep = x < nx
    return x[keep], nx[keep]


def defining_set(params, family, skew_spec="canonical"):
    """Build the defining set of the requested family.

    ``skew_spec`` only matters for family C: ``"canonical"`` gives the
    squares <alpha^2> (needs q = 3 mod 4); an int is a PRNG seed choosing one
    element from each pair {x, -x}.
    """
    ctx = params.ctx
    family = family.upper()
    if family not in FAMILIES:
        raise PreconditionError(f"unknown family {family!r}")
    if family in "AB":
        if not params.ord_ok:
            raise OrderAssumptionViolated(
                f"ord_{params.n1}({ctx.p}) != m={ctx.m}; families A/B need m minimal")
        if family == "A":
            count = params.n1
        else:
            if params.N1 ** 2 > ctx.q:
                raise IsoPreconditionFailed(
                    f"N1={params.N1} exceeds sqrt(q); the code map need not be injective")
            count = params.n2
        elements = ctx.exp((params.N * np.arange(count)) % (ctx.q - 1))
        elements = np.atleast_1d(np.asarray(elements, dtype=np.int64))
        return DefiningSet(family, elements, params)

    if skew_spec == "canonical" or skew_spec is None:
        if ctx.q % 4 != 3:
            raise SkewCanonicalUnavailable(f"<alpha^2> is not a skew set when q={ctx.q} = 1 mod 4")
        elements = np.asarray(ctx.exp_table[0::2], dtype=np.int64)
        return DefiningSet("C", elements, params, "canonical")
    seed = int(skew_spec)
    reps, negs = skew_representatives(ctx)
    pick = np.random.default_rng(seed).integers(0, 2, size=reps.size).astype(bool)
    return DefiningSet("C", np.where(pick, negs, reps), params, f"seeded({seed})")


def is_skew_set(ctx, elements):
    elements = np.asarray(elements)
    mark = np.zeros(ctx.q, dtype=np.int64)
    np.add.at(mark, elements, 1)
    np.add.at(mark, ctx.neg(elements), 1)
    return mark[0] == 0 and bool(np.all(mark[1:] == 1))


@dataclass(frozen=True, eq=False)
class LinearCode:
    dset: DefiningSet
    n: int
    k: int
    gen: np.ndarray
    trace_matrix: np.ndarray  # m x n, row j = (Tr(x^j d_i))_i
    message_basis: tuple

    @property
    def ctx(self):
        return self.dset.ctx

    @property
    def p(self):
        return self.ctx.p

    @property
    def injective(self):
        return self.k == self.ctx.m


def trace_matrix(ctx, elements):
    basis = np.array([ctx.p**j for j in range(ctx.m)], dtype=np.int64)  # x^j
    return ctx.trace(ctx.mul(basis[:, None], np.asarray(elements)[None, :]))


def build_code(dset):
    ctx = dset.ctx
    T = np.atleast_2d(trace_matrix(ctx, dset.elements))
    rows = independent_rows(T, ctx.p)
    gen = T[rows]
    for arr in (T, gen):
        arr.setflags(write=False)
    return LinearCode(dset, dset.n, len(rows), gen, T, tuple(ctx.p**j for j in rows))


@dataclass(frozen=True)
class Codeword:
    vector: np.ndarray
    weight: int


def codeword(code, a):
    ctx = code.ctx
    a = getattr(a, "index", a)
    vec = np.asarray(ctx.trace(ctx.mul(a, code.dset.elements)))
    return Codeword(vec, int(np.count_nonzero(vec)))


def message_weights(code, messages=None, chunk=1 << 20):
    """Weights of c(a) for every a in ``messages`` (default: all of F_q)."""
    ctx = code.ctx
    if messages is None:
        messages = np.arange(ctx.q)
    messages = np.asarray(messages, dtype=np.int64)
    out = np.empty(messages.size, dtype=np.int64)
    step = max(1, chunk // max(code.n, 1))
    for s in range(0, messages.size, step):
        block = messages[s:s + step]
        tr = ctx.trace(ctx.mul(block[:, None], code.dset.elements[None, :]))
        out[s:s + step] = np.count_nonzero(np.atleast_2d(tr), axis=1)
    return out


def weight_distribution(code, budget=DEFAULT_WEIGHT_BUDGET):
    """Map weight -> number of codewords."""
    ctx = code.ctx
    if code.injective:
        cost = ctx.q * code.n
        if cost > budget:
            raise EnumerationBudgetExceeded(f"{cost} coordinate evaluations exceed budget {budget}")
        weights = message_weights(code)
    else:
        count = ctx.p ** code.k
        if count * code.n > budget:
            raise EnumerationBudgetExceeded(
                f"{count * code.n} coordinate evaluations exceed budget {budget}")
        digits = (np.arange(count)[:, None] // ctx.p ** np.arange(code.k)) % ctx.p
        words = digits @ code.gen % ctx.p
        weights = np.count_nonzero(words, axis=1)
    return dict(sorted(Counter(int(w) for w in weights).items()))


def family_b_weight(params, eta, i):
    """Predicted weight q/(p N1) - (eta_i + 1/N1)/p of c(a) for a in C_i^{(N1,q)}."""
    q, p, N1 = params.q, params.p, params.N1
    return Fraction(q, p * N1) - (eta[i] + Fraction(1, N1)) / p


@dataclass
class FamilyBReport:
    predicted: dict  # class index -> weight
    observed: dict  # class index -> sorted set of weights seen
    min_weight: int
    ok: bool


def check_family_B_weights(code):
    """Compare every nonzero codeword weight with the per-class formula."""
    if code.dset.family != "B":
        raise PreconditionError("family-B weight check needs a family-B code")
    params, ctx = code.dset.params, code.ctx
    eta = rational_periods(params, params.N1)
    if eta is None:
        raise PeriodsNotRational(f"periods of order N1={params.N1} are not rational")
    a = np.arange(1, ctx.q)
    weights = message_weights(code, a)
    cls = ctx.log_table[a] % params.N1
    predicted = {i: family_b_weight(params, eta, i) for i in range(params.N1)}
    observed = {i: sorted({int(w) for w in weights[cls == i]}) for i in range(params.N1)}
    ok = all(observed[i] == [predicted[i]] for i in observed) and int(weights.min()) > 0
    report = FamilyBReport(predicted, observed, int(weights.min()), ok)
    if not ok:
        raise WeightFormulaMismatch(f"family-B weights disagree with the formula: {report}")
    return report
