"""Command-line driver: ``indepgen {sym,primes,zsigmondy,group,wreath} ...``

Exit codes: 0 all checks pass; 1 a non-soluble group with m > delta (an open
case, reported); 2 bad input; 3 budget exhausted; 4 a proven identity or
bound failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import ExitStack

from . import catalog, primes, symdelta, wreath, zsigmondy
from .errors import DEFAULT_BUDGET, Budget, BudgetExceeded, CheckFailed, InvalidInput, OutOfRange
from .invariants import GroupAnalysis, GroupProfile

OK, ANOMALY, BAD_INPUT, BUDGET, VIOLATION = 0, 1, 2, 3, 4
_PRECEDENCE = (VIOLATION, ANOMALY, BUDGET, BAD_INPUT)


def worst(codes) -> int:
    codes = set(codes)
    return next((c for c in _PRECEDENCE if c in codes), OK)


class Output:
    def __init__(self, stream):
        self.stream = stream

    def json(self, obj):
        self.stream.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")

    def csv(self, header, rows):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        self.stream.write(buf.getvalue())

    def line(self, text):
        self.stream.write(text + "\n")


def _violations(report: primes.BoundReport, limit: int = 20):
    return [{"check": v.check, "x": v.x, "lhs": v.lhs, "rhs": v.rhs} for v in report.violations[:limit]]


def _bound_summary(report: primes.BoundReport) -> dict:
    return {"name": report.name, "range": list(report.range_checked), "passed": report.passed,
            "violation_count": len(report.violations), "violations": _violations(report),
            "parts": {k: list(v) for k, v in report.parts.items()}}


def _flag(ok):
    return "" if ok is None else int(bool(ok))


# -- sym -----------------------------------------------------------------------------------

def cmd_sym(args, out: Output) -> int:
    if args.action == "delta":
        if not 1 <= args.start <= args.stop:
            raise InvalidInput("need 1 <= --from <= --to")
        sieve = primes.sieve_primes(args.stop)
        d = symdelta.delta_range(args.stop, sieve)
        rows, bad = [], False
        for n in range(args.start, args.stop + 1):
            flags = (None, None, None)
            if n >= 2:
                rec = symdelta.stop_bound_record(n, int(d[n]))
                flags = (rec.lower_ok, rec.tight_ok, rec.chain_ok)
                bad |= not all(flags)
            rows.append([n, int(d[n]), int(d[n]) - (n - 1)] + [_flag(f) for f in flags])
        out.csv(["n", "delta", "offset", "lower_ok", "tight_ok", "chain_ok"], rows)
        return VIOLATION if bad else OK
    if args.action == "classify":
        cls = symdelta.classify_range(args.max, primes.sieve_primes(args.max))
        out.json({"n_max": cls.n_max, "residual_count": cls.residual_count,
                  "anomalies": cls.anomalies,
                  **{f"offset_{k}": v for k, v in cls.lists.items()}})
        return OK if cls.ok else VIOLATION
    if args.action == "verify-stop":
        if args.max < 2:
            raise InvalidInput("--max must be at least 2")
        report = symdelta.verify_stop_bounds(2, args.max, primes.sieve_primes(args.max))
        out.json(_bound_summary(report))
        return OK if report.passed else VIOLATION
    raise InvalidInput(args.action)


# -- primes -----------------------------------------------------------------------------------

def cmd_primes(args, out: Output) -> int:
    if args.action == "rs":
        report = primes.verify_rs_bounds(args.max, primes.sieve_primes(max(args.max, 2)))
    elif args.action == "pk":
        if args.max < 1:
            raise InvalidInput("--max must be positive")
        report = primes.verify_pk_bounds(args.max, _sieve_for_primes(args.max))
    else:
        value, where = primes.stup_constant(args.eta, args.max, primes.sieve_primes(args.max))
        out.json({"eta": args.eta, "n_max": args.max, "constant": value, "argmax_n": where})
        return OK
    out.json(_bound_summary(report))
    return OK if report.passed else VIOLATION


def _sieve_for_primes(k: int) -> primes.PrimeSieve:
    limit = 16
    while True:
        sieve = primes.sieve_primes(limit)
        if len(sieve) >= k:
            return sieve
        limit *= 2


# -- zsigmondy -------------------------------------------------------------------------------

def cmd_zsigmondy(args, out: Output) -> int:
    if args.sweep:
        a_max, n_max = args.sweep
        if a_max < 2 or n_max < 2:
            raise InvalidInput("sweep bounds must be at least 2")
        rep = zsigmondy.zsigmondy_sweep(a_max, n_max)
        out.json({"a_max": a_max, "n_max": n_max, "checked": rep.checked, "passed": rep.passed,
                  "exceptions": [list(x) for x in rep.exceptions],
                  "missing": [list(x) for x in rep.missing],
                  "unexpected": [list(x) for x in rep.unexpected],
                  "residue_failures": [list(x) for x in rep.residue_failures]})
        return OK if rep.passed else VIOLATION
    if args.a is None or args.n is None:
        raise InvalidInput("give A and N, or --sweep AMAX NMAX")
    res = zsigmondy.primitive_prime_divisors(args.a, args.n)
    if res.primitive_primes:
        out.line(" ".join(map(str, sorted(res.primitive_primes))))
        residues_ok = all(p % args.n == 1 for p in res.primitive_primes)
        out.line("residues " + ("ok" if residues_ok else "FAILED"))
        return OK if residues_ok and zsigmondy.zsigmondy_exception(args.a, args.n) is None else VIOLATION
    if res.exception:
        out.line(f"none (exception: a={args.a}, n={args.n})")
        return OK
    out.line("none (not an exception case)")
    return VIOLATION


# -- group -------------------------------------------------------------------------------------

def profile_record(profile: GroupProfile) -> dict:
    return {"label": profile.label, "order": profile.order, "soluble": profile.soluble,
            "d": profile.d, "m": profile.m, "delta": profile.delta,
            "d_p": {str(p): v for p, v in sorted(profile.d_p.items())},
            "alpha_p": None if profile.alpha_p is None
            else {str(p): v for p, v in sorted(profile.alpha_p.items())}}


def sweep_record(analysis: GroupAnalysis) -> tuple[dict, int]:
    """Profile plus check flags for one group and the exit code it implies."""
    rec = profile_record(analysis.profile())
    dennis = analysis.dennis()
    lemmas = analysis.quotient_lemmas()
    rec.update({
        "m_le_delta": dennis.m_le_delta,
        "m_eq_alpha_sum": dennis.m_eq_alpha_sum,
        "alpha_agree": dennis.alpha_agree,
        "delta_quotient_ok": all(r.delta_ok is not False for r in lemmas),
        "frattini_dichotomy_ok": all(r.dichotomy_ok is not False for r in lemmas),
    })
    failed = (dennis.m_eq_alpha_sum is False or dennis.alpha_agree is False
              or not rec["delta_quotient_ok"] or not rec["frattini_dichotomy_ok"]
              or (dennis.soluble and not dennis.m_le_delta))
    code = VIOLATION if failed else ANOMALY if not dennis.m_le_delta else OK
    return rec, code


def cmd_group(args, out: Output, budget: Budget) -> int:
    if args.action in ("profile", "m"):
        group = catalog.load_group_file(args.path, budget)
        analysis = GroupAnalysis(group, group.label)
        if args.action == "m":
            m, witness = analysis.m_witness
            if args.format == "json":
                out.json({"label": analysis.label, "m": m, "witness": [str(w) for w in witness]})
            else:
                out.line(str(m))
            return OK
        rec, code = sweep_record(analysis)
        if args.format == "csv":
            out.csv(list(rec), [[_csv_cell(v) for v in rec.values()]])
        elif args.format == "text":
            for key, value in rec.items():
                out.line(f"{key}: {_csv_cell(value)}")
        else:
            out.json(rec)
        return code
    return _group_sweep(args, out, budget)


def _csv_cell(value):
    if isinstance(value, dict):
        return ";".join(f"{k}:{v}" for k, v in value.items())
    if value is None:
        return ""
    if isinstance(value, bool):
        return int(value)
    return value


def _group_sweep(args, out: Output, budget: Budget) -> int:
    with ExitStack() as stack:
        directory = args.path or catalog.bundled_catalog_dir(stack)
        entries = catalog.load_catalog(directory, budget)
    rows, skipped, codes = [], [], []
    max_ratio = {"m_over_delta": None, "m_over_delta_sq": None, "m_over_delta_eta": None}
    within_sigma = True
    for entry in sorted(entries, key=lambda e: e.label):
        if entry.group is None:
            skipped.append({"label": entry.label, "reason": entry.skipped})
            codes.append(BUDGET if entry.skipped.startswith("BudgetExceeded") else BAD_INPUT)
            continue
        try:
            rec, code = sweep_record(GroupAnalysis(entry.group, entry.label))
        except BudgetExceeded as exc:
            skipped.append({"label": entry.label, "reason": f"BudgetExceeded: {exc}"})
            codes.append(BUDGET)
            continue
        except CheckFailed as exc:
            skipped.append({"label": entry.label, "reason": f"CheckFailed: {exc}"})
            codes.append(VIOLATION)
            continue
        rows.append(rec)
        codes.append(code)
        if rec["delta"] > 0:
            for key, power in (("m_over_delta", 1), ("m_over_delta_sq", 2), ("m_over_delta_eta", args.eta)):
                ratio = rec["m"] / rec["delta"] ** power
                if max_ratio[key] is None or ratio > max_ratio[key]:
                    max_ratio[key] = ratio
            within_sigma &= rec["m"] <= args.sigma * rec["delta"] ** args.eta
    code = worst(codes)
    summary = {"groups": len(rows), "soluble": sum(r["soluble"] for r in rows),
               "sigma": args.sigma, "eta": args.eta, "max_ratios": max_ratio,
               "all_within_sigma_delta_eta": within_sigma, "skipped": skipped, "exit_code": code}
    if args.format == "csv":
        header = list(rows[0]) if rows else ["label"]
        out.csv(header, [[_csv_cell(r[k]) for k in header] for r in rows])
    else:
        out.json({"rows": rows, "summary": summary})
    return code


# -- wreath ---------------------------------------------------------------------------------------

def cmd_wreath(args, out: Output) -> int:
    if args.action == "verify":
        rows, bad = [], False
        for spec in wreath.standard_rank_matrix():
            rep = wreath.verify_wreath_rank(spec)
            bad |= not rep.ok
            rows.append([rep.q_label, rep.p_label, rep.prime, rep.order, rep.d_q, rep.d_p,
                         rep.orbits, rep.formula, rep.computed, int(rep.ok)])
        out.csv(["Q", "P", "p", "order", "d_Q", "d_P", "orbits_P", "formula", "computed", "ok"], rows)
        return VIOLATION if bad else OK
    s_group = wreath.alternating_group(5)
    datum = zsigmondy.pi_star(s_group.order, 2, "Alt(5)")
    reports = []
    for k_group in wreath.standard_sylow_instances():
        rep = wreath.sylow_sum_check(s_group, datum.pi_star, k_group)
        reports.append({
            "K": rep.k_label, "t": rep.t, "total": rep.total, "strict": rep.strict,
            "terms": [{"p": t.prime, "d_top": t.d_top, "orbits": t.orbits, "d_base": t.d_base,
                       "value": t.value, "direct": t.brute_force} for t in rep.terms]})
    out.json({"S": "Alt(5)", "pi_star": sorted(datum.pi_star), "instances": reports})
    return OK


# -- parser ---------------------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(BAD_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="indepgen", description=__doc__.split("\n")[0])
    p.add_argument("--max-order", type=int, default=DEFAULT_BUDGET.lattice_order,
                   help="largest group order for lattice and m(G) searches (default %(default)s)")
    p.add_argument("--time-budget-ms", type=float, default=None,
                   help="wall-clock cap for each m(G) search (default: none)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sym = sub.add_parser("sym", help="delta(Sym(n)) tables and bounds")
    sym_sub = sym.add_subparsers(dest="action", required=True, parser_class=_Parser)
    d = sym_sub.add_parser("delta", help="CSV of n, delta, offset and bound flags")
    d.add_argument("--from", dest="start", type=int, required=True)
    d.add_argument("--to", dest="stop", type=int, required=True)
    sym_sub.add_parser("classify", help="offset lists up to --max").add_argument("--max", type=int, required=True)
    sym_sub.add_parser("verify-stop", help="upper and lower bounds up to --max").add_argument(
        "--max", type=int, required=True)

    pr = sub.add_parser("primes", help="prime counting bounds")
    pr_sub = pr.add_subparsers(dest="action", required=True, parser_class=_Parser)
    pr_sub.add_parser("rs", help="pi(x) bounds up to --max").add_argument("--max", type=int, required=True)
    pr_sub.add_parser("pk", help="k-th prime bounds up to --max").add_argument("--max", type=int, required=True)
    st = pr_sub.add_parser("stup", help="max of n / pi(n)^eta up to --max")
    st.add_argument("--eta", type=float, required=True)
    st.add_argument("--max", type=int, required=True)

    z = sub.add_parser("zsigmondy", help="primitive prime divisors of a^n - 1")
    z.add_argument("a", type=int, nargs="?")
    z.add_argument("n", type=int, nargs="?")
    z.add_argument("--sweep", type=int, nargs=2, metavar=("AMAX", "NMAX"))

    g = sub.add_parser("group", help="invariants of permutation groups")
    g_sub = g.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, helptext in (("profile", "full profile of one group file"), ("m", "m(G) of one group file")):
        q = g_sub.add_parser(name, help=helptext)
        q.add_argument("path")
        q.add_argument("--format", choices=("json", "csv", "text"), default="json" if name == "profile" else "text")
    sw = g_sub.add_parser("sweep", help="checks over a directory of group files (default: bundled)")
    sw.add_argument("path", nargs="?")
    sw.add_argument("--sigma", type=float, default=1.0)
    sw.add_argument("--eta", type=float, default=1.0)
    sw.add_argument("--format", choices=("json", "csv"), default="json")

    w = sub.add_parser("wreath", help="wreath product rank checks")
    w_sub = w.add_subparsers(dest="action", required=True, parser_class=_Parser)
    w_sub.add_parser("verify", help="rank formula over the standard matrix")
    w_sub.add_parser("sylow-sum", help="Sylow rank sum against t(K) for S = Alt(5)")
    return p


def main(argv=None, stream=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(stream or sys.stdout)
    if args.max_order < 1 or (args.time_budget_ms is not None and args.time_budget_ms <= 0):
        print("indepgen: error: budgets must be positive", file=sys.stderr)
        return BAD_INPUT
    budget = DEFAULT_BUDGET.with_(lattice_order=args.max_order, time_ms=args.time_budget_ms,
                                  table_order=max(DEFAULT_BUDGET.table_order, args.max_order))
    try:
        if args.command == "sym":
            return cmd_sym(args, out)
        if args.command == "primes":
            return cmd_primes(args, out)
        if args.command == "zsigmondy":
            return cmd_zsigmondy(args, out)
        if args.command == "group":
            return cmd_group(args, out, budget)
        return cmd_wreath(args, out)
    except (InvalidInput, OutOfRange) as exc:
        print(f"indepgen: error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except BudgetExceeded as exc:
        print(f"indepgen: budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except CheckFailed as exc:
        print(f"indepgen: check failed: {exc}", file=sys.stderr)
        return VIOLATION


if __name__ == "__main__":
    sys.exit(main())
