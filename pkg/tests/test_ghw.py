import itertools
from fractions import Fraction

import numpy as np
import pytest

from ghwlab._linalg import rank
from ghwlab.codes import build_code, defining_set
from ghwlab.errors import EnumerationBudgetExceeded, NotInjective
from ghwlab.codes import DefiningSet
from ghwlab.ghw import (
    Subspace,
    class_profile,
    family_a_corollaries,
    gaussian_binomial,
    ghw_bounds,
    ghw_bruteforce,
    ghw_closed_form,
    hierarchy_report,
    n_zero_direct,
    n_zero_via_periods,
    subspace_batches,
    subspace_iter,
)

import oracles


def _code(params, p, m, N=1, family="A", skew="canonical"):
    return build_code(defining_set(params(p, m, N), family, skew))


@pytest.mark.parametrize("m,r,p,expected", [(3, 0, 3, 1), (2, 1, 3, 4), (4, 2, 3, 130), (3, 1, 5, 31),
                                            (4, 4, 7, 1), (3, 4, 3, 0)])
def test_gaussian_binomial(m, r, p, expected):
    assert gaussian_binomial(m, r, p) == expected


def test_subspace_iter_small():
    subs = [s.basis for s in subspace_iter(2, 1, 3)]
    assert subs == [((1, 0),), ((1, 1),), ((1, 2),), ((0, 1),)]
    assert [s.basis for s in subspace_iter(3, 3, 5)] == [((1, 0, 0), (0, 1, 0), (0, 0, 1))]


def _span(basis, p):
    B = np.array(basis).reshape(len(basis), -1)
    coeffs = np.array(list(itertools.product(range(p), repeat=len(basis))))
    return frozenset(map(tuple, (coeffs @ B % p).tolist()))


@pytest.mark.parametrize("m,r,p", [(4, 2, 3), (3, 1, 5), (3, 2, 5), (4, 3, 3), (2, 1, 7)])
def test_subspaces_distinct_and_complete(m, r, p):
    spans = [_span(s.basis, p) for s in subspace_iter(m, r, p)]
    assert len(spans) == gaussian_binomial(m, r, p)
    assert len(set(spans)) == len(spans)
    assert all(len(s) == p**r for s in spans)


def test_batches_respect_size():
    batches = list(subspace_batches(4, 2, 3, batch_entries=80))
    assert sum(len(b) for b in batches) == 130
    assert max(len(b) for b in batches) <= 10
    for b in batches:
        assert all(rank(x, 3) == 2 for x in b)


def test_n_zero_examples(params):
    code9 = _code(params, 3, 2)
    assert n_zero_direct(code9, Subspace(2, ((1, 0), (0, 1)))) == 0
    for s in subspace_iter(2, 1, 3):
        assert n_zero_direct(code9, s) == 2
    code7 = _code(params, 7, 1, family="C")
    assert n_zero_direct(code7, Subspace(1, ((1,),))) == 0


def test_class_profile_examples(params):
    P = params(5, 2, 2)
    c1 = P.ctx.exp(1)  # alpha lies in C_1
    line = Subspace(1, (P.ctx.coeffs(c1),))
    assert class_profile(P.ctx, line, 2) == [0, 4]
    P9 = params(3, 2)
    assert class_profile(P9.ctx, Subspace(1, ((1, 0),)), 2) == [2, 0]
    assert class_profile(P9.ctx, Subspace(1, ((1, 0),)), 1) == [2]


def test_via_periods_examples(params):
    assert n_zero_via_periods(None, params(7, 1), "C", r=1) == 0
    assert n_zero_via_periods([2], params(3, 2), "A", r=1) == 2
    assert n_zero_via_periods([0, 4], params(5, 2, 2), "B", r=1) == 1


@pytest.mark.parametrize("inst", [(3, 2, 1, "A", "canonical"), (5, 2, 2, "B", "canonical"), (3, 3, 2, "A", "canonical"),
                                  (5, 2, 3, "A", "canonical"), (3, 3, 1, "C", "canonical"), (5, 2, 1, "C", 4)])
def test_via_periods_matches_direct_everywhere(inst, params):
    p, m, N, fam, skew = inst
    P = params(p, m, N)
    code = build_code(defining_set(P, fam, skew))
    for r in range(1, m + 1):
        for s in subspace_iter(m, r, p):
            prof = class_profile(P.ctx, s, P.N1)
            assert n_zero_via_periods(prof, P, fam, r) == n_zero_direct(code, s)


@pytest.mark.parametrize("inst,expected", [((3, 2, 1, "A"), [6, 8]), ((5, 2, 2, "B"), [2, 3]),
                                           ((7, 1, 1, "C"), [3]), ((3, 2, 1, "B"), [3, 4])])
def test_bruteforce_matches_naive_oracle(inst, expected, params):
    p, m, N, fam = inst
    P = params(p, m, N)
    D = defining_set(P, fam)
    ref = oracles.NaiveField(p, P.ctx.modulus)
    words = oracles.naive_code(ref, [ref.elements[d] for d in D.elements])
    code = build_code(D)
    naive = [oracles.naive_ghw(words, p, r) for r in range(1, m + 1)]
    brute = [ghw_bruteforce(code, r).d_r for r in range(1, m + 1)]
    assert naive == brute == expected


def test_bruteforce_q27_matches_naive(params):
    P = params(3, 3, 2)
    D = defining_set(P, "A")
    ref = oracles.NaiveField(3, P.ctx.modulus)
    words = oracles.naive_code(ref, [ref.elements[d] for d in D.elements])
    code = build_code(D)
    assert [oracles.naive_ghw(words, 3, r) for r in (1, 2)] == [9, 12]
    assert [ghw_bruteforce(code, r).d_r for r in (1, 2, 3)] == [9, 12, 13]


def test_closed_form_examples(params):
    cf = ghw_closed_form(params(3, 3, 2), "A", 2)
    assert cf.value == 12 and cf.labels == ("N1=1",)
    assert ghw_closed_form(params(5, 2, 3), "A", 1).value == 4
    assert ghw_closed_form(params(3, 3), "C", 3).value == 13
    # the semiprimitive corollary covers only r <= j
    assert ghw_closed_form(params(5, 2, 3), "A", 2) is None


def test_family_b_closed_form_is_marked_derived(params):
    cf = ghw_closed_form(params(5, 2, 2), "B", 1)
    assert cf.derived
    assert cf.value == 2


def test_corollary_l_is_odd_part(params):
    cors = family_a_corollaries(5, 4, 3, 3)
    assert [c.r_max for c in cors if "4l" in c.label] == [1]
    assert family_a_corollaries(5, 8, 3, 3)[0].note == "l=1"


def test_bounds_examples():
    b = ghw_bounds(8, 2, 3, 6, 1)
    assert (b.plotkin, b.griesmer, b.singleton_lo, b.singleton_hi) == (6, 6, 1, 7)
    b = ghw_bounds(8, 2, 3, 6, 2)
    assert (b.singleton_hi, b.griesmer, b.plotkin) == (8, 8, 8)
    assert ghw_bounds(13, 3, 3, 9, 3).plotkin == 13


def test_hierarchy_report_q9(params):
    rep = hierarchy_report(params(3, 2), "A")
    assert rep.ok and rep.hierarchy == [6, 8]
    assert all(rec.closed.value == rec.d_r for rec in rep.records)


def test_hierarchy_report_q7_skew(params):
    rep = hierarchy_report(params(7, 1), "C")
    (rec,) = rep.records
    assert rec.d_r == 3
    assert rec.bounds.plotkin == 3 and rec.bounds.griesmer == 3


def test_hierarchy_report_q25_family_b(params):
    rep = hierarchy_report(params(5, 2, 2), "B")
    assert rep.hierarchy == [2, 3]
    assert rep.records[0].closed.value == 2
    assert rep.records[1].closed is None
    assert rep.ok


def test_hierarchy_truncation(params):
    rep = hierarchy_report(params(3, 4), "A", budget=5000)
    assert rep.truncated_at == 2
    assert rep.hierarchy == [54]


def test_budget_and_injectivity_errors(params):
    code = _code(params, 3, 4)
    with pytest.raises(EnumerationBudgetExceeded):
        ghw_bruteforce(code, 2, budget=10)
    bad = build_code(DefiningSet("A", np.array([1, 2]), params(3, 2)))
    with pytest.raises(NotInjective):
        ghw_bruteforce(bad, 1)


def test_results_independent_of_worker_count(params):
    code = _code(params, 3, 4, N=2, family="A")
    one = [ghw_bruteforce(code, r, workers=1) for r in (1, 2)]
    four = [ghw_bruteforce(code, r, workers=4) for r in (1, 2)]
    assert [(a.d_r, a.argmax) for a in one] == [(b.d_r, b.argmax) for b in four]


def test_argmax_is_first_maximizer(params):
    code = _code(params, 3, 2)
    rec = ghw_bruteforce(code, 1)
    assert rec.argmax == Subspace(1, ((1, 0),))


def test_argmax_attains_d_r(params):
    code = _code(params, 5, 2, N=3)
    rec = ghw_bruteforce(code, 1)
    assert code.n - n_zero_direct(code, rec.argmax) == rec.d_r == 4
    assert Fraction(rec.d_r) == ghw_closed_form(params(5, 2, 3), "A", 1).value
