"""Command-line front end.

Subcommands::

    suzuki-cd cd --f 1 --d 3 [--json] [--multiplicities] [--output PATH]
    suzuki-cd verify {lemmas,stabilizers,theorem-a,corollary-b,cyclotomic} [--f-max N]
    suzuki-cd orbits --f 1 --family X [--json]
    suzuki-cd gcd-table --f 1..8 [--output PATH]

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 oracle
budget violation, 4 I/O error.  All output is deterministic (ascending
degrees/divisors, fixed key order) and uses UTF-8 with LF line endings;
--output writes bytes identical to what stdout would receive.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .characters import Family
from .degrees import DegreeMultiset, ExtensionSpec, cd_closed_form, cd_oracle, degrees_json_payload
from .errors import BudgetExceededError
from .numtheory import gcd_verification_rows
from .params import divisors_of, make_params
from .stabilizers import ORACLE_F_MAX, orbit_report
from .verification import (
    DEFAULT_SEED,
    SweepReport,
    verify_class_counts,
    verify_degree_count_bounds,
    verify_degree_sets,
    verify_gcd_closed_forms,
    verify_quad_identity,
    verify_stabilizer_witnesses,
)

VERIFY_SCOPES = ("lemmas", "stabilizers", "theorem-a", "corollary-b", "cyclotomic")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suzuki-cd",
        description="Exact character degree sets of Sz(q^2) and its extensions.",
    )
    sub = parser.add_subparsers(required=True)

    p_cd = sub.add_parser("cd", help="degree set/multiset of one extension")
    p_cd.add_argument("--f", type=int, required=True, help="field parameter, q^2 = 2^(2f+1)")
    p_cd.add_argument("--d", default="1", help="index of G over S (divisor of 2f+1), or 'all'")
    p_cd.add_argument("--json", action="store_true", help="emit the JSON schema instead of a table")
    p_cd.add_argument(
        "--multiplicities",
        action="store_true",
        help="run the counting oracle and include multiplicities (needs f within budget)",
    )
    p_cd.add_argument(
        "--checked",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="cross-verify against the oracle when within budget (default: on for f <= 4)",
    )
    p_cd.add_argument("--output", help="write to this path instead of stdout")
    p_cd.set_defaults(func=_cmd_cd)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument("scope", choices=VERIFY_SCOPES)
    p_verify.add_argument("--f-max", type=int, default=None, dest="f_max")
    p_verify.add_argument("--n-max", type=int, default=200, dest="n_max")
    p_verify.add_argument("--samples", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--jobs", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_orbits = sub.add_parser("orbits", help="stabilizer-exponent histogram of one family")
    p_orbits.add_argument("--f", type=int, required=True)
    p_orbits.add_argument("--family", required=True, choices=[fam.value for fam in Family])
    p_orbits.add_argument("--json", action="store_true")
    p_orbits.add_argument("--output", help="write to this path instead of stdout")
    p_orbits.set_defaults(func=_cmd_orbits)

    p_table = sub.add_parser("gcd-table", help="closed form vs Euclid as CSV")
    p_table.add_argument("--f", default="1..8", help="single f or inclusive range like 1..8")
    p_table.add_argument("--output", help="write to this path instead of stdout")
    p_table.set_defaults(func=_cmd_gcd_table)

    return parser


def _cmd_cd(args: argparse.Namespace) -> int:
    p = make_params(args.f)
    checked = args.checked if args.checked is not None else p.f <= 4
    if args.d == "all":
        ds = divisors_of(p.out_order)
    else:
        ds = [int(args.d)]
    blocks: list[str] = []
    payloads: list[dict] = []
    for d in ds:
        spec = ExtensionSpec(p, d)
        multiset: DegreeMultiset | None = None
        if args.multiplicities:
            multiset = cd_oracle(spec)  # raises past the budget: exit 3
        elif checked and p.f <= ORACLE_F_MAX:
            multiset = cd_oracle(spec)
        if args.json:
            payloads.append(degrees_json_payload(spec, multiset))
        else:
            blocks.append(_cd_table(spec, multiset, args.multiplicities))
    if args.json:
        body = payloads[0] if args.d != "all" else payloads
        text = json.dumps(body, indent=2) + "\n"
    else:
        text = "\n".join(blocks)
    _emit(text, args.output)
    return 0


def _cd_table(
    spec: ExtensionSpec, multiset: DegreeMultiset | None, show_mult: bool
) -> str:
    p = spec.params
    lines = [f"# cd(G) for f={p.f}, d={spec.d} (q2={p.q2}, |G|={spec.order})"]
    closed = sorted(cd_closed_form(spec))
    if show_mult and multiset is not None:
        lines.append("degree multiplicity")
        for deg, mult in sorted(multiset.entries.items()):
            lines.append(f"{deg} {mult}")
    else:
        lines.extend(str(deg) for deg in closed)
    if multiset is not None:
        verdict = multiset.degree_set() == frozenset(closed)
        lines.append(f"verified_against_oracle: {'true' if verdict else 'false'}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args: argparse.Namespace) -> int:
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("SUZUKI_CD_JOBS", "1"))
    if jobs < 1:
        raise ValueError(f"--jobs must be >= 1, got {jobs}")
    reports: list[SweepReport] = []
    if args.scope == "lemmas":
        f_max = args.f_max if args.f_max is not None else 64
        reports.append(verify_gcd_closed_forms(f_max, jobs=jobs))
        reports.append(verify_class_counts(f_max))
    elif args.scope == "stabilizers":
        f_max = _budgeted_f_max(args.f_max, 8)
        reports.append(verify_stabilizer_witnesses(f_max, jobs=jobs))
    elif args.scope == "theorem-a":
        f_max = _budgeted_f_max(args.f_max, 8)
        reports.append(verify_degree_sets(f_max, jobs=jobs))
    elif args.scope == "corollary-b":
        f_max = args.f_max if args.f_max is not None else 16
        reports.append(verify_degree_count_bounds(f_max))
    else:
        reports.append(
            verify_quad_identity(args.n_max, args.samples, args.seed, jobs=jobs)
        )
    ok = True
    for report in reports:
        print(report.summary())
        if not report.passed:
            ok = False
            for failure in report.failures[:5]:
                print(f"  counterexample: {failure}")
    return 0 if ok else 1


def _budgeted_f_max(requested: int | None, default: int) -> int:
    f_max = requested if requested is not None else default
    if f_max > ORACLE_F_MAX:
        raise BudgetExceededError(
            f"this sweep enumerates orbits and needs --f-max <= {ORACLE_F_MAX}"
        )
    return f_max


def _cmd_orbits(args: argparse.Namespace) -> int:
    p = make_params(args.f)
    report = orbit_report(p, Family(args.family))
    if args.json:
        text = json.dumps(report, indent=2) + "\n"
    else:
        lines = [f"# orbits for f={p.f}, family={args.family}"]
        lines.append("stabilizer_exponent count")
        for row in report["orbits"]:
            lines.append(f"{row['stabilizer_exponent']} {row['count']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_gcd_table(args: argparse.Namespace) -> int:
    f_values = _parse_f_range(args.f)
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf,
        fieldnames=["f", "n", "torus", "sign", "closed_form", "euclid", "branch", "match"],
        lineterminator="\n",
    )
    writer.writeheader()
    for f in f_values:
        for row in gcd_verification_rows(make_params(f)):
            writer.writerow(row)
    _emit(buf.getvalue(), args.output)
    return 0


def _parse_f_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        return list(range(lo, hi + 1))
    return [int(text)]


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


if __name__ == "__main__":
    sys.exit(main())
