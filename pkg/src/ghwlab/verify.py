"""Whole-instance verification and parameter sweeps."""
import numpy as np

from . import report
from ._nt import divisors, odd_prime_powers
from .codes import (
    DEFAULT_WEIGHT_BUDGET,
    build_code,
    check_family_B_weights,
    defining_set,
    is_skew_set,
    message_weights,
)
from .cyclotomy import cyclotomy_params, verify_multiset_lemma
from .errors import PreconditionError, VerificationError
from .field import build_field
from .ghw import DEFAULT_BUDGET, hierarchy_report


def _code_checks(code, weight_budget):
    ctx, dset = code.ctx, code.dset
    checks = {"injective": code.injective}
    info = {"n": code.n, "k": code.k}
    if ctx.q * code.n * ctx.p > weight_budget:
        info["weights_skipped"] = True
        return checks, info
    a = np.arange(1, ctx.q)
    w = message_weights(code, a)
    checks["nonzero_weights_positive"] = bool(w.min() > 0) if code.injective else True
    checks["scalar_invariance"] = all(
        np.array_equal(message_weights(code, ctx.scale(z, a)), w) for z in range(2, ctx.p))
    if dset.family == "A":
        cls = ctx.log_table[a] % dset.params.N1
        checks["constant_on_classes"] = all(
            np.unique(w[cls == i]).size == 1 for i in range(dset.params.N1))
    if dset.family == "C":
        checks["skew_structure"] = is_skew_set(ctx, dset.elements)
    if dset.family == "B":
        try:
            fb = check_family_B_weights(code)
            checks["family_B_weight_formula"] = fb.ok
            info["family_B_weights"] = {str(i): report.rational(v) for i, v in fb.predicted.items()}
        except VerificationError:
            checks["family_B_weight_formula"] = False
    return checks, info


def verify_instance(params, family, skew="canonical", r_max=None, budget=DEFAULT_BUDGET,
                    workers=None, weight_budget=DEFAULT_WEIGHT_BUDGET):
    """Run every invariant for one (p, m, N, family) instance; returns a JSON-ready dict."""
    family = family.upper()
    code = build_code(defining_set(params, family, skew))
    orders = sorted({params.N, params.N1})
    out = {"schema_version": report.SCHEMA_VERSION, "command": "verify",
           "instance": report.instance(params, family, code.dset.skew_spec)}
    out["periods"] = [report.period_block(params, e) for e in orders]
    multiset = {}
    for e in orders:
        try:
            for i in range(e):
                verify_multiset_lemma(params, e, i)
            multiset[str(e)] = True
        except VerificationError:
            multiset[str(e)] = False
    out["multiset_lemma"] = multiset
    code_checks, code_info = _code_checks(code, weight_budget)
    out["code"] = dict(code_info, checks=code_checks)
    rep = hierarchy_report(params, family, skew, r_max=r_max, budget=budget, workers=workers)
    out["hierarchy"] = report.hierarchy(rep)

    failed = []
    for block in out["periods"]:
        failed += [f"periods[{block['order']}].{k}" for k, v in block["checks"].items() if not v]
    failed += [f"multiset_lemma[{e}]" for e, v in multiset.items() if not v]
    failed += [f"code.{k}" for k, v in code_checks.items() if not v]
    failed += rep.discrepancies
    out["failed"] = failed
    out["verdict"] = "pass" if not failed else "fail"
    return out


def sweep_instances(q_max, q_min=3):
    """Yield (params, family, skew) for every valid instance with q <= q_max."""
    for p, m in odd_prime_powers(q_max, q_min):
        ctx = build_field(p, m)
        for N in divisors(ctx.q - 1):
            params = cyclotomy_params(ctx, N)
            if not params.ord_ok:
                continue
            yield params, "A", None
            if params.N1 ** 2 <= ctx.q:
                yield params, "B", None
        skew = "canonical" if ctx.q % 4 == 3 else 0
        yield cyclotomy_params(ctx, 1), "C", skew


def sweep(q_max, q_min=3, budget=DEFAULT_BUDGET, workers=None):
    instances, totals = [], {"checked": 0, "passed": 0, "failed": 0, "truncated": 0}
    for params, family, skew in sweep_instances(q_max, q_min):
        try:
            res = verify_instance(params, family, skew if skew is not None else "canonical",
                                  budget=budget, workers=workers)
        except PreconditionError as exc:
            instances.append({"instance": report.instance(params, family, skew),
                              "verdict": "skipped", "reason": str(exc)})
            continue
        h = res["hierarchy"]
        entry = {"instance": res["instance"], "verdict": res["verdict"],
                 "hierarchy": [rec["d_brute"] for rec in h["records"]],
                 "truncated_at": h["truncated_at"], "failed": res["failed"]}
        instances.append(entry)
        totals["checked"] += 1
        totals["passed" if res["verdict"] == "pass" else "failed"] += 1
        totals["truncated"] += h["truncated_at"] is not None
    return {"schema_version": report.SCHEMA_VERSION, "command": "sweep", "q_max": q_max,
            "totals": totals, "instances": instances,
            "verdict": "pass" if totals["failed"] == 0 else "fail"}
