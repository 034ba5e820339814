"""Command-line entry point: ``nfk <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 bound exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import automorphism as au
from . import catalog
from . import descriptor as desc
from . import dickson as dk
from . import group_table as gt
from . import nearfield as nf
from . import nvs
from .dickson import TableBoundError
from .report import Report
from .verify import run_verify

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3
ENV_BOUND = "NFK_MAX_TABLE_ORDER"


class UsageError(ValueError):
    pass


def default_bound(fallback: int) -> int:
    value = os.environ.get(ENV_BOUND)
    if value is None:
        return fallback
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{ENV_BOUND}={value!r} is not an integer") from None


def _bound(args, fallback: int) -> int:
    return args.max_order if args.max_order is not None else default_bound(fallback)


def cmd_params(args) -> Report:
    N = desc.parse(args.spec)
    if N.kind != "dickson":
        raise UsageError("params expects dickson:q,n with n >= 2")
    P = N.params
    r = Report("params", {"spec": args.spec})
    for key in ("q", "n", "p", "l", "m", "t", "q1", "q2", "g", "gcd_nt", "p_order_mod_n"):
        r.add(key, getattr(P, key), "formula")
    r.add("sylow2_cyclic", str(dk.sylow2_cyclic(P)).lower(), "formula")
    z, zorder = dk.center(P)
    r.add("center", f"<a^{z.a}> order {zorder}", "formula")
    r.add("inner_count", au.inner_count(P), "formula")
    if P.gcd_nt == 1:
        D = dk.metacyclic_decomposition(P)
        r.add("metacyclic", str(D), "formula")
        r.add("metacyclic.r_bar", D.r_bar, "formula")
        r.add("metacyclic.s_bar", D.s_bar, "formula")
    else:
        r.warn("gcd(n,t)=2: no split metacyclic decomposition")
    return r


def _aut_count_dickson(r: Report, P: dk.DicksonParams, method: str, bound: int) -> None:
    methods = ["formula", "enumerate", "brute"] if method == "all" else [method]
    values = {}
    if (P.q, P.n) == (3, 2):
        r.warn("formula excluded for (3,2); quaternion group counted by brute force")
        methods = ["brute"]
    if "formula" in methods:
        values["corrho"] = au.aut_count_corrho(P)
        r.add("mult_aut.corrho", values["corrho"], "formula")
        closed = au.aut_count_closed(P)
        r.add("mult_aut.closed_form", closed.value, "formula")
        if not closed.trusted:
            r.warn(f"expected discrepancy: closed form {closed.value} is not valid when gcd(n,t)=2")
        else:
            values["closed_form"] = closed.value
        if P.n == 2:
            values["n2_lemma"] = au.aut_count_n2(P)
            r.add("mult_aut.n2_lemma", values["n2_lemma"], "formula")
    if "enumerate" in methods:
        values["enumeration"] = au.count_S(P)
        r.add("mult_aut.enumeration", values["enumeration"], "enumeration")
    if "brute" in methods:
        G = dk.build_group_table(P, bound)
        values["brute_force"] = au.count_automorphisms(G, bound)
        r.add("mult_aut.brute_force", values["brute_force"], "brute-force")
    if method == "all" and "closed_form" not in values and "corrho" in values:
        if 2 * au.aut_count_closed(P).value != values["corrho"]:
            r.warn("unexpected: closed form is not half the corrho count")
    distinct = sorted(set(values.values()))
    if len(distinct) > 1:
        r.warn("methods disagree: " + ", ".join(f"{k}={v}" for k, v in sorted(values.items())))
    first = next(iter(values))
    r.add("mult_aut", values[first], r.provenance[f"mult_aut.{first}"])
    N = desc.dickson(P.q, P.n)
    nfa = nf.nearfield_aut_order(N)
    r.add("nf_aut", nfa, "formula")
    if values[first] % nfa:
        raise ArithmeticError(f"non-integer index {values[first]}/{nfa}")
    r.add("factor", values[first] // nfa, r.provenance["mult_aut"])


def cmd_aut_count(args) -> Report:
    N = desc.parse(args.spec)
    bound = _bound(args, au.DEFAULT_BRUTE_BOUND)
    r = Report("aut-count", {"spec": args.spec, "method": args.method})
    if N.kind == "dickson":
        _aut_count_dickson(r, N.params, args.method, bound)
    elif N.kind == "field":
        mult, nfa, factor = catalog.field_counts(N.p, N.l)
        q = N.p**N.l
        if args.method in ("formula", "all"):
            r.add("mult_aut.formula", mult, "formula")
        if args.method in ("enumerate", "all"):
            r.add("mult_aut.enumeration", au.count_S(dk.validate_dickson_pair(q, 1)), "enumeration")
        if args.method in ("brute", "all"):
            r.add("mult_aut.brute_force", au.count_automorphisms(gt.cyclic_group(q - 1), bound),
                  "brute-force")
        values = {r.results[k] for k in r.results}
        if len(values) > 1:
            r.warn("methods disagree")
        first = next(iter(r.results))
        r.add("mult_aut", r.results[first], r.provenance[first])
        r.add("nf_aut", nfa, "formula")
        r.add("factor", factor, "formula")
    else:
        rec = catalog.exceptional_record(N.label)
        r.add("mult_group", rec.mult_group_name, "table")
        r.add("mult_aut", rec.group_aut_order, "table")
        if args.method in ("brute", "all"):
            G = catalog.exceptional_group(N.label, bound)
            count = au.count_automorphisms(G, bound)
            r.add("mult_aut.brute_force", count, "brute-force")
            if count != rec.group_aut_order:
                r.warn(f"brute force {count} disagrees with table {rec.group_aut_order}")
        elif args.method in ("formula", "enumerate"):
            r.warn(f"method {args.method} not applicable to exceptional nearfields; table value used")
        r.add("nf_aut", rec.nf_aut_order, "table")
        r.add("factor", rec.factor, "table")
    return r


def cmd_nvs(args) -> Report:
    N = desc.parse(args.spec)
    if args.dim < 1:
        raise UsageError("--dim must be at least 1")
    r = Report("nvs", {"spec": args.spec, "dim": args.dim})
    details = catalog.factor_details(N)
    r.add("k", details.factor, details.provenance)
    r.add("count", nvs.count_nvs(N, args.dim), "formula")
    if args.list:
        bound = _bound(args, 10**5)
        for idx, rep in enumerate(nvs.enumerate_classes(N, args.dim, bound)):
            r.add(f"class.{idx + 1}", " ".join(map(str, rep.coset_seq)), "enumeration")
    return r


def cmd_verify(args) -> tuple[Report, int]:
    max_order = args.max_order if args.max_order is not None else default_bound(3000)
    return run_verify(max_order=max_order, suite=args.suite)


def cmd_catalog(args) -> str:
    if args.format == "json":
        return catalog.dump_json()
    return catalog.dump_csv(args.table)


def cmd_table(args) -> str:
    N = desc.parse(args.spec)
    bound = _bound(args, nf.DEFAULT_MAX_ORDER)
    if N.kind == "field":
        T = nf.field_as_nearfield(N.p, N.l, bound)
    elif N.kind == "dickson":
        T = nf.dickson_nearfield(N.params, bound)
    else:
        raise UsageError("addition tables of exceptional nearfields are not constructed")
    return nf.export_csv(T)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nfk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("spec", help="field:q | dickson:q,n | exceptional:I..VII")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--max-order", type=int, default=None,
                       help=f"size bound for tables/enumeration (default from {ENV_BOUND})")

    common(sub.add_parser("params", help="Dickson pair parameters"))
    p = sub.add_parser("aut-count", help="multiplicative automorphism counts")
    common(p)
    p.add_argument("--method", choices=["formula", "enumerate", "brute", "all"], default="formula")
    p = sub.add_parser("nvs", help="count near vector spaces")
    common(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list class representatives")
    p = sub.add_parser("verify", help="run every cross-check")
    common(p, spec=False)
    p.add_argument("--suite", choices=["core", "slow"], default="core")
    p = sub.add_parser("catalog", help="exceptional nearfield tables")
    p.add_argument("action", choices=["dump"])
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--table", choices=["counts", "groups"], default="counts",
                   help="csv only: count table or group-structure table")
    p = sub.add_parser("table", help="export a nearfield's addition and multiplication tables")
    p.add_argument("spec")
    p.add_argument("--max-order", type=int, default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "catalog":
            out.write(cmd_catalog(args))
            return EXIT_OK
        if args.command == "table":
            out.write(cmd_table(args))
            return EXIT_OK
        code = EXIT_OK
        if args.command == "verify":
            report, code = cmd_verify(args)
        else:
            report = {"params": cmd_params, "aut-count": cmd_aut_count, "nvs": cmd_nvs}[args.command](args)
        out.write(report.to_json() if args.format == "json" else report.to_text())
        if code == EXIT_VERIFY:
            print(f"verification failed: {report.results['summary.first_counterexample']}", file=sys.stderr)
        return code
    except TableBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (dk.DicksonPairError, desc.DescriptorError, UsageError, au.ExcludedPairError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
