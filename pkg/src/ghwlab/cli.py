"""``ghwlab`` command line.

Exit status: 0 when every requested check passes, 1 on a mathematical
mismatch, 2 on usage or precondition errors.
"""
import argparse
import csv
import io
import json
import sys

from . import report
from .codes import build_code, defining_set, weight_distribution, check_family_B_weights
from .cyclotomy import cyclotomy_params
from .errors import EnumerationBudgetExceeded, PreconditionError, VerificationError
from .field import build_field
from .ghw import DEFAULT_BUDGET, hierarchy_report
from .verify import sweep, verify_instance


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max column checks per r (default 10^7)")
    common.add_argument("--threads", type=int, default=None, help="worker threads")

    inst = argparse.ArgumentParser(add_help=False)
    inst.add_argument("--p", type=int, required=True)
    inst.add_argument("--m", type=int, required=True)
    inst.add_argument("--N", type=int, default=1)

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", choices=("A", "B", "C", "a", "b", "c"), default="A")
    fam.add_argument("--skew", default="canonical",
                     help="family C: 'canonical', 'seeded' (with --seed) or 'seed=<n>'")
    fam.add_argument("--seed", type=int, default=None)
    fam.add_argument("--r-max", type=int, default=None)

    parser = argparse.ArgumentParser(prog="ghwlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("field", parents=[common, inst], help="field construction details")
    sub.add_parser("periods", parents=[common, inst], help="exact Gauss periods and closed forms")
    sub.add_parser("code", parents=[common, inst, fam], help="code parameters and weights")
    sub.add_parser("ghw", parents=[common, inst, fam], help="weight hierarchy report")
    sub.add_parser("verify", parents=[common, inst, fam], help="all invariants for one instance")
    sw = sub.add_parser("sweep", parents=[common], help="verify every instance with q <= Q")
    sw.add_argument("--q-max", type=int, required=True)
    sw.add_argument("--q-min", type=int, default=3)
    return parser


def _skew(args):
    s = args.skew
    if s.startswith("seed="):
        return int(s.split("=", 1)[1])
    if s == "seeded":
        if args.seed is None:
            raise PreconditionError("--skew seeded needs --seed")
        return args.seed
    if s != "canonical":
        raise PreconditionError(f"--skew: unknown value {s!r}")
    return "canonical"


def _params(args):
    return cyclotomy_params(build_field(args.p, args.m), args.N)


def cmd_field(args):
    ctx = build_field(args.p, args.m)
    out = {"instance": {"p": ctx.p, "m": ctx.m, "q": ctx.q},
           "modulus": list(ctx.modulus), "alpha": list(ctx.coeffs(ctx.alpha)),
           "trace_basis": [int(t) for t in ctx.trace_basis]}
    return out, True


def cmd_periods(args):
    params = _params(args)
    blocks = [report.period_block(params, e) for e in sorted({params.N, params.N1})]
    ok = all(all(b["checks"].values()) for b in blocks)
    return {"instance": report.instance(params), "periods": blocks}, ok


def cmd_code(args):
    params = _params(args)
    code = build_code(defining_set(params, args.family.upper(), _skew(args)))
    out = {"instance": report.instance(params, code.dset.family, code.dset.skew_spec),
           "code": {"n": code.n, "k": code.k, "generator": code.gen.tolist(),
                    "defining_set": [list(code.ctx.coeffs(x)) for x in code.dset.elements]}}
    ok = True
    try:
        out["code"]["weight_distribution"] = {str(w): c for w, c in weight_distribution(code, args.budget).items()}
    except EnumerationBudgetExceeded as exc:
        out["code"]["weight_distribution"] = None
        out["code"]["note"] = str(exc)
    if code.dset.family == "B":
        try:
            fb = check_family_B_weights(code)
            out["code"]["family_B_weights"] = {str(i): report.rational(v) for i, v in fb.predicted.items()}
        except VerificationError as exc:
            out["code"]["family_B_error"] = str(exc)
            ok = False
    return out, ok


def cmd_ghw(args):
    params = _params(args)
    rep = hierarchy_report(params, args.family, _skew(args), r_max=args.r_max,
                           budget=args.budget, workers=args.threads)
    out = {"instance": report.instance(params, rep.family, rep.skew_spec),
           "hierarchy": report.hierarchy(rep)}
    return out, rep.ok


def cmd_verify(args):
    res = verify_instance(_params(args), args.family, _skew(args), r_max=args.r_max,
                          budget=args.budget, workers=args.threads)
    return res, res["verdict"] == "pass"


def cmd_sweep(args):
    res = sweep(args.q_max, args.q_min, budget=args.budget, workers=args.threads)
    return res, res["verdict"] == "pass"


COMMANDS = {"field": cmd_field, "periods": cmd_periods, "code": cmd_code,
            "ghw": cmd_ghw, "verify": cmd_verify, "sweep": cmd_sweep}


# -- formatting ---------------------------------------------------------------

def _fmt_rat(v):
    if v is None:
        return "-"
    return str(v["num"]) if v["den"] == 1 else f"{v['num']}/{v['den']}"


def _hier_rows(h):
    for rec in h["records"]:
        b = rec["bounds"] or {}
        yield {"r": rec["r"], "d_brute": rec["d_brute"], "d_closed": _fmt_rat(rec["d_closed"]),
               "corollary": "; ".join(rec["corollary"] or []),
               "singleton_lo": b.get("singleton_lo"), "singleton_hi": b.get("singleton_hi"),
               "plotkin": b.get("plotkin"), "griesmer": b.get("griesmer"),
               "checks_ok": all(rec["checks"].values())}


def _period_rows(blocks):
    for blk in blocks:
        for per in blk["periods"]:
            yield {"order": blk["order"], "index": per["index"], "value": _fmt_rat(per["value"]),
                   "raw_counts": " ".join(map(str, per["raw"]))}


def to_csv(command, res):
    if command == "sweep":
        rows = [{"p": e["instance"]["p"], "m": e["instance"]["m"], "N": e["instance"]["N"],
                 "family": e["instance"]["family"], "verdict": e["verdict"],
                 "hierarchy": " ".join(map(str, e.get("hierarchy", [])))}
                for e in res["instances"]]
    elif "hierarchy" in res:
        rows = list(_hier_rows(res["hierarchy"]))
    elif "periods" in res:
        rows = list(_period_rows(res["periods"]))
    else:
        rows = [{k: v for k, v in res.get("instance", {}).items()}]
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return buf.getvalue()


def to_text(command, res):
    lines = []
    inst = res.get("instance")
    if inst:
        lines.append("instance: " + ", ".join(f"{k}={v}" for k, v in inst.items() if v is not None))
    if command == "field":
        lines.append(f"modulus (low degree first): {res['modulus']}")
        lines.append(f"alpha: {res['alpha']}")
    for blk in res.get("periods", []):
        lines.append(f"Gauss periods of order {blk['order']}:")
        for per in blk["periods"]:
            lines.append(f"  eta_{per['index']} = {_fmt_rat(per['value']) if per['value'] else per['canonical']}"
                         f"   trace counts {per['raw']}")
        cf = blk.get("closed_form")
        if cf:
            lines.append(f"  closed form: {' | '.join(cf['labels'])}  match={cf['match']}")
        lines.append("  checks: " + ", ".join(f"{k}={v}" for k, v in blk["checks"].items()))
    if "code" in res:
        c = res["code"]
        lines.append(f"code: n={c['n']} k={c['k']}")
        if c.get("weight_distribution"):
            lines.append(f"  weights: {c['weight_distribution']}")
        if c.get("checks"):
            lines.append("  checks: " + ", ".join(f"{k}={v}" for k, v in c["checks"].items()))
    if "hierarchy" in res:
        h = res["hierarchy"]
        lines.append(f"weight hierarchy ([n, k] = [{h['n']}, {h['k']}]):")
        lines.append(f"  {'r':>2} {'d_r':>6} {'closed':>8} {'griesmer':>8} {'plotkin':>7}  ok  corollary")
        for row in _hier_rows(h):
            lines.append(f"  {row['r']:>2} {row['d_brute']:>6} {row['d_closed']:>8} {row['griesmer']:>8}"
                         f" {row['plotkin']:>7}  {'y' if row['checks_ok'] else 'N'}   {row['corollary']}")
        if h["truncated_at"]:
            lines.append(f"  truncated by budget at r={h['truncated_at']}")
        for d in h["discrepancies"]:
            lines.append(f"  DISCREPANCY {d}")
    if command == "sweep":
        t = res["totals"]
        for e in res["instances"]:
            i = e["instance"]
            lines.append(f"q={i['q']:<5} N={i['N']:<4} {i['family']}  {e['verdict']:<7} {e.get('hierarchy', '')}")
        lines.append(f"checked={t['checked']} passed={t['passed']} failed={t['failed']} truncated={t['truncated']}")
    if res.get("failed"):
        lines.append("failed: " + "; ".join(res["failed"]))
    if "verdict" in res:
        lines.append(f"verdict: {res['verdict']}")
    return "\n".join(lines) + "\n"


def run(argv=None):
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        res, ok = COMMANDS[args.command](args)
    except PreconditionError as exc:
        print(f"ghwlab {args.command}: precondition failed: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"ghwlab {args.command}: verification failed: {exc}", file=sys.stderr)
        return 1
    res.setdefault("schema_version", report.SCHEMA_VERSION)
    res.setdefault("command", args.command)
    res.setdefault("verdict", "pass" if ok else "fail")
    if args.format == "json":
        text = json.dumps(res, indent=2, ensure_ascii=False) + "\n"
    elif args.format == "csv":
        text = to_csv(args.command, res)
    else:
        text = to_text(args.command, res)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main():
    sys.exit(run())
