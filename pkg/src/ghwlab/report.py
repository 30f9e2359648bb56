"""JSON-ready views of the library's result objects."""
from fractions import Fraction

from .cyclotomy import (
    closed_form_periods,
    gauss_periods,
    period_bound_check,
    period_polynomial,
    period_polynomial_cost,
)
from .errors import VerificationError

SCHEMA_VERSION = 1
POLY_COST_CAP = 4 * 10**6


def rational(x):
    if x is None:
        return None
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def cyclotomic(c):
    return {"raw": list(c.raw) if c.raw is not None else None,
            "canonical": list(c.coeffs), "value": rational(c.rational())}


def instance(params, family=None, skew=None):
    out = params.as_dict()
    out["ord_ok"] = params.ord_ok
    out["family"] = family
    out["skew"] = skew
    return out


def period_block(params, e):
    """Exact periods of order e with closed-form prediction, bound and polynomial checks."""
    periods = gauss_periods(params, e)
    block = {"order": e, "periods": [dict(index=i, **cyclotomic(c)) for i, c in enumerate(periods)]}
    checks = {}
    total = sum(periods[1:], periods[0])
    checks["sum_is_minus_one"] = total == -1
    try:
        block["closed_form"] = None
        pred = closed_form_periods(params, e)
        if pred is not None:
            vals = [c.rational() for c in periods]
            match = None not in vals and tuple(sorted(vals)) == pred.values
            block["closed_form"] = {"labels": list(pred.labels),
                                    "values": [rational(v) for v in pred.values],
                                    "match": match}
            checks["closed_form"] = match
    except VerificationError as exc:
        checks["closed_form"] = False
        block["error"] = str(exc)
    try:
        period_bound_check(params, e)
        checks["modulus_bound"] = True
    except VerificationError:
        checks["modulus_bound"] = False
    if period_polynomial_cost(params.p, e) <= POLY_COST_CAP:
        try:
            block["period_polynomial"] = period_polynomial(params, e)
            checks["integer_period_polynomial"] = True
        except VerificationError:
            checks["integer_period_polynomial"] = False
    block["checks"] = checks
    return block


def record(rec):
    closed = rec.closed
    return {
        "r": rec.r,
        "d_brute": rec.d_r,
        "d_closed": rational(closed.value) if closed else None,
        "corollary": list(closed.labels) if closed else None,
        "corollary_derived": closed.derived if closed else None,
        "n_zero_max": rec.n_zero_max,
        "subspaces": rec.subspaces,
        "argmax_basis": [list(row) for row in rec.argmax.basis] if rec.argmax else None,
        "profile": rec.profile,
        "bounds": vars(rec.bounds).copy() if rec.bounds else None,
        "checks": dict(rec.checks),
    }


def hierarchy(rep):
    return {
        "n": rep.n,
        "k": rep.k,
        "records": [record(r) for r in rep.records],
        "truncated_at": rep.truncated_at,
        "discrepancies": list(rep.discrepancies),
    }
