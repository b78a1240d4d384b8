"""Command-line surface: generation verdicts, range scans, Stickelberger
basis/membership queries, norm-equation checks, and a reproduction report.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 2 for
usage or precondition problems, 1 for an internal invariant failure (a
certificate that did not re-verify, which indicates a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import class_data, group_ring, norm_solver, stickelberger
from .errors import CertificateError, CycloclassError
from .galois import CyclotomicModulus

HUMAN, JSON, TSV = "human", "json", "tsv"

VERDICT_TSV_HEADER = "ell\tf\tstatus\treason\tassumptions"
NORM_TSV_HEADER = "ell\ta\tstatus\trules\tassumptions"
BASIS_TSV_HEADER = "ell\tcolumn\tsupport"


def _add_format_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=(HUMAN, JSON, TSV), default=HUMAN, dest="format"
    )
    p.add_argument(
        "--json", action="store_const", const=JSON, dest="format",
        help="shorthand for --format json",
    )
    p.add_argument(
        "--tsv", action="store_const", const=TSV, dest="format",
        help="shorthand for --format tsv",
    )


def _add_table_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--table", default=None, metavar="PATH",
        help="class-number table file (default: shipped table, or the "
        f"{class_data.TABLE_ENV_VAR} env var)",
    )
    p.add_argument(
        "--assume-h-plus-one", action="store_true",
        help="proceed for ell >= 100 under the explicit hypothesis h+ = 1",
    )


def _load_table(args) -> dict[int, class_data.ClassNumberRecord]:
    if args.table:
        return class_data.load_table(args.table)
    return class_data.load_default_table()


def _verdict_human(d: dict) -> str:
    line = f"ell={d['ell']} f={d['f']}: {d['status']} ({d['reason']})"
    if d.get("detail"):
        line += f" -- {d['detail']}"
    if d.get("assumptions"):
        line += f" [assumes: {', '.join(d['assumptions'])}]"
    return line


def _verdict_tsv(d: dict) -> str:
    return "\t".join(
        (
            str(d["ell"]),
            str(d["f"]),
            d["status"],
            d["reason"],
            ",".join(d["assumptions"]),
        )
    )


def _emit_verdicts(dicts, fmt: str, out) -> None:
    if fmt == TSV:
        print(VERDICT_TSV_HEADER, file=out)
        for d in dicts:
            print(_verdict_tsv(d), file=out)
    elif fmt == JSON:
        for d in dicts:
            print(json.dumps(d), file=out)
    else:
        for d in dicts:
            print(_verdict_human(d), file=out)


def _generation_set_line(dicts) -> str:
    in_r = [str(d["f"]) for d in dicts if d["status"] == stickelberger.IN_R]
    open_f = [str(d["f"]) for d in dicts if d["status"] == stickelberger.INCONCLUSIVE]
    line = "R = {" + ", ".join(in_r) + "}"
    if open_f:
        line += f"  (inconclusive for f in {{{', '.join(open_f)}}})"
    return line


def cmd_resgen(args, out) -> int:
    modulus = CyclotomicModulus(args.ell)
    record = class_data.lookup(_load_table(args), args.ell)
    if args.f is not None:
        verdict = stickelberger.residue_generation_verdict(
            modulus, args.f, record, assume_h_plus_one=args.assume_h_plus_one
        )
        _emit_verdicts([verdict.to_dict()], args.format, out)
        return 0
    table = stickelberger.residue_generation_table(
        modulus, record, assume_h_plus_one=args.assume_h_plus_one
    )
    dicts = [v.to_dict() for v in table]
    _emit_verdicts(dicts, args.format, out)
    if args.format == HUMAN:
        print(_generation_set_line(dicts), file=out)
    return 0


def _scan_one(job) -> list[dict]:
    """Worker: verdicts for a single ell, as plain dicts (picklable)."""
    ell, table_path, assume = job
    table = (
        class_data.load_table(table_path)
        if table_path
        else class_data.load_default_table()
    )
    modulus = CyclotomicModulus(ell)
    record = class_data.lookup(table, ell)
    verdicts = stickelberger.residue_generation_table(
        modulus, record, assume_h_plus_one=assume
    )
    return [v.to_dict() for v in verdicts]


def cmd_scan(args, out) -> int:
    if args.ell_min > args.ell_max:
        ells: list[int] = []
    else:
        from .arith import is_prime_trial_division

        ells = [
            n
            for n in range(max(3, args.ell_min), args.ell_max + 1)
            if n % 2 == 1 and is_prime_trial_division(n)
        ]
    jobs = [(ell, args.table, args.assume_h_plus_one) for ell in ells]
    if args.parallel and jobs:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            per_ell = list(pool.map(_scan_one, jobs))
    else:
        per_ell = [_scan_one(job) for job in jobs]
    # Deterministic row order regardless of execution order.
    dicts = [d for group in sorted(per_ell, key=lambda g: g[0]["ell"]) for d in group]
    _emit_verdicts(dicts, args.format, out)
    return 0


def cmd_stickelberger(args, out) -> int:
    modulus = CyclotomicModulus(args.ell)
    basis = stickelberger.kummer_basis(modulus)
    if args.action == "basis":
        entries = [
            (f"f_{i}", elem.render())
            for i, elem in enumerate(basis.f_elements, start=1)
        ]
        entries.append(("N", basis.trace.render()))
        if args.format == JSON:
            print(
                json.dumps(
                    {
                        "ell": modulus.ell,
                        "columns": [
                            {"name": name, "support": text} for name, text in entries
                        ],
                    }
                ),
                file=out,
            )
        elif args.format == TSV:
            print(BASIS_TSV_HEADER, file=out)
            for name, text in entries:
                print(f"{modulus.ell}\t{name}\t{text}", file=out)
        else:
            for name, text in entries:
                print(f"{name:>4} = {text}", file=out)
        return 0
    element = group_ring.parse(args.element, modulus)
    result = stickelberger.membership(basis, element)
    if not stickelberger.verify_membership(modulus, element, result):
        raise CertificateError("membership certificate failed re-verification")
    payload = {
        "ell": modulus.ell,
        "element": element.render(),
        "membership": result.to_dict(),
    }
    if args.format == JSON:
        print(json.dumps(payload), file=out)
    elif args.format == TSV:
        print("ell\telement\tin_ideal", file=out)
        tag = "yes" if isinstance(result, stickelberger.InIdeal) else "no"
        print(f"{modulus.ell}\t{element.render()}\t{tag}", file=out)
    else:
        if isinstance(result, stickelberger.InIdeal):
            combo = " + ".join(
                f"{c}*f_{i}"
                for i, c in enumerate(result.f_coeffs, start=1)
                if c != 0
            )
            tail = f"{result.trace_coeff}*N" if result.trace_coeff else ""
            text = " + ".join(x for x in (combo, tail) if x) or "0"
            print(f"{element.render()} is in the Stickelberger ideal:", file=out)
            print(f"  element = {text}", file=out)
        else:
            print(
                f"{element.render()} is NOT in the Stickelberger ideal", file=out
            )
            print(f"  certificate: {result.certificate.to_dict()}", file=out)
    return 0


def cmd_norm_check(args, out) -> int:
    modulus = CyclotomicModulus(args.ell)
    record = class_data.lookup(_load_table(args), args.ell)
    value = norm_solver.parse_rational(args.a)
    verdict = norm_solver.norm_solvable(modulus, value, record)
    d = verdict.to_dict()
    if args.format == JSON:
        print(json.dumps(d), file=out)
    elif args.format == TSV:
        print(NORM_TSV_HEADER, file=out)
        rules = ",".join(
            f"{t['prime'] if t['prime'] is not None else '-'}={t['rule']}"
            for t in d["trace"]
        )
        print(
            f"{d['ell']}\t{value}\t{d['status']}\t{rules}\t"
            f"{','.join(d['assumptions'])}",
            file=out,
        )
    else:
        print(f"|N(x)| = {value} over ell={modulus.ell}: {d['status']}", file=out)
        for t in d["trace"]:
            where = f"p={t['prime']}" if t["prime"] is not None else "global"
            print(f"  [{t['rule']}] {where}: {t['detail']}", file=out)
        if d["assumptions"]:
            print(f"  assumes: {', '.join(d['assumptions'])}", file=out)
    return 0


def _report_norm_samples(modulus: CyclotomicModulus) -> list[Fraction]:
    ell = modulus.ell
    # Fixed instructive sample: zero, units, sign, ramified, inert-ish,
    # high-degree powers, and a reciprocal.
    samples = [
        Fraction(0),
        Fraction(1),
        Fraction(-4),
        Fraction(ell),
        Fraction(2),
        Fraction(2) ** 5,
        Fraction(2) ** 11,
        Fraction(2048 * 23),
        Fraction(1, 2048),
        Fraction(47),
        Fraction(23 * 47**3),
    ]
    seen = set()
    out = []
    for s in samples:
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def cmd_report(args, out) -> int:
    modulus = CyclotomicModulus(args.ell)
    table = _load_table(args)
    record = class_data.lookup(table, args.ell)
    ell = modulus.ell
    bar = "=" * 66
    print(bar, file=out)
    print(f"Residue-degree generation report for Q(zeta_{ell})", file=out)
    print(bar, file=out)
    print(file=out)
    print(
        f"degree = {ell - 1}, h = {record.h}, h+ = {record.h_plus}, "
        f"h- = {record.h_minus}",
        file=out,
    )
    oracle = class_data.maillet_h_minus(modulus)
    print(
        f"Maillet determinant cross-check: h- = {oracle} "
        f"({'consistent' if oracle == record.h_minus else 'INCONSISTENT'})",
        file=out,
    )
    print(file=out)
    print("Kummer basis of the Stickelberger ideal (supports):", file=out)
    basis = stickelberger.kummer_basis(modulus)
    for i, elem in enumerate(basis.f_elements, start=1):
        print(f"  f_{i:<2} = {elem.render()}", file=out)
    print(f"  N    = {basis.trace.render()}", file=out)
    print(file=out)
    print("Generation verdicts (one per divisor f of ell-1):", file=out)
    verdicts = stickelberger.residue_generation_table(
        modulus, record, assume_h_plus_one=args.assume_h_plus_one
    )
    for v in verdicts:
        print(f"  f = {v.f}: {v.status} ({v.reason})", file=out)
        print(f"      {v.detail}", file=out)
        if v.membership is not None:
            print(f"      tested element: {v.tested_element}", file=out)
            md = v.membership.to_dict()
            if md["tag"] == "in_ideal":
                print(
                    f"      combination: f-coefficients {md['f_coeffs']}, "
                    f"trace coefficient {md['trace_coeff']}",
                    file=out,
                )
            else:
                cert = md["certificate"]
                if cert["tag"] == "rational_infeasible":
                    print(
                        f"      certificate: dual vector u = {cert['dual']} "
                        f"with u*M = 0 and u*theta != 0",
                        file=out,
                    )
                else:
                    print(
                        f"      certificate: coordinate {cert['pivot']} is "
                        f"forced to {cert['value']['num']}/{cert['value']['den']}",
                        file=out,
                    )
        if v.assumptions:
            print(f"      assumes: {', '.join(v.assumptions)}", file=out)
    print(file=out)
    print(_generation_set_line([v.to_dict() for v in verdicts]), file=out)
    print(file=out)
    print("Norm values p^f, witness rule per residue degree f:", file=out)
    coverage = norm_solver.witness_coverage(modulus, record, r_table=verdicts)
    print(f"  f = 1 (ramified p = {ell}): {norm_solver.RULE_RAMIFIED}", file=out)
    for f, rule in coverage.items():
        print(f"  f = {f}: {rule if rule else 'no rule; verdicts are UNKNOWN'}", file=out)
    print(file=out)
    print("Norm-equation verdicts |N(x)| = a (sample values):", file=out)
    for a in _report_norm_samples(modulus):
        nv = norm_solver.norm_solvable(modulus, a, record, r_table=verdicts)
        print(f"  a = {a}: {nv.status}", file=out)
        for t in nv.trace:
            where = f"p={t.prime}" if t.prime is not None else "global"
            print(f"      [{t.rule}] {where}: {t.detail}", file=out)
    print(file=out)
    if all(coverage.values()):
        print(
            "Every residue degree is covered, so solvability over this field "
            "is equivalent to: a >= 0 and for every prime p the valuation "
            "v_p(a) is a multiple of the residue degree of p.  In "
            "particular the local-global principle for norms holds here: "
            "the knot number of this field is 1.",
            file=out,
        )
    else:
        gaps = [str(f) for f, rule in coverage.items() if rule is None]
        print(
            f"No witness rule covers residue degrees {{{', '.join(gaps)}}}; "
            f"norm verdicts for primes of those degrees are UNKNOWN.",
            file=out,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycloclass",
        description="Exact generation and norm-equation decisions for prime "
        "cyclotomic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "resgen",
        help="residue-degree generation verdicts for one conductor",
    )
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--f", type=int, default=None, help="single residue degree")
    _add_format_flags(p)
    _add_table_flags(p)
    p.set_defaults(func=cmd_resgen)

    p = sub.add_parser("scan", help="verdicts for every prime in a range")
    p.add_argument("--ell-min", type=int, required=True, dest="ell_min")
    p.add_argument("--ell-max", type=int, required=True, dest="ell_max")
    p.add_argument(
        "--parallel", type=int, nargs="?", const=4, default=0, metavar="N",
        help="fan out over a process pool (default 4 workers)",
    )
    _add_format_flags(p)
    _add_table_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser(
        "stickelberger", help="Kummer basis and ideal membership queries"
    )
    p.add_argument("--ell", type=int, required=True)
    psub = p.add_subparsers(dest="action", required=True)
    pb = psub.add_parser("basis", help="print the basis supports")
    _add_format_flags(pb)
    pm = psub.add_parser("member", help="decide membership of an element")
    pm.add_argument(
        "--element", required=True,
        help='group-ring element: "{1,5}", "1*s1+1*s5", or "N"',
    )
    _add_format_flags(pm)
    p.set_defaults(func=cmd_stickelberger)

    p = sub.add_parser("norm-check", help="decide solvability of |N(x)| = a")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--a", required=True, help='exact rational, e.g. "2048" or "1/2048"')
    _add_format_flags(p)
    _add_table_flags(p)
    p.set_defaults(func=cmd_norm_check)

    p = sub.add_parser(
        "report", help="full reproduction document for one conductor"
    )
    p.add_argument("--ell", type=int, default=23)
    _add_table_flags(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CertificateError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except CycloclassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
