"""Command-line surface: construct, verify, propp.

Exit codes: 0 success, 1 usage or parse error, 2 precondition failure,
3 verification mismatch (a falsified identity; should never happen).
Outputs are deterministic; a timestamp enters the report only with
--stamp.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from . import fileio
from .constructions import (
    gold_auto_u,
    gold_family,
    kasami_auto_u,
    kasami_family,
    niho_auto_u,
    niho_family,
)
from .errors import BentvecError, ParseError, PreconditionError, VerificationError
from .gf2n import FieldSpec
from .redpoly import DefiningSet, ReducedPolynomial
from .propp import find_defining_sets, satisfies_p
from .vectorial import max_bent_components_bound

FAMILIES = {
    "kasami": (kasami_family, kasami_auto_u),
    "niho": (niho_family, niho_auto_u),
    "gold": (gold_family, gold_auto_u),
}


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1 (argparse defaults to 2, reserved here for
    # precondition failures)
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def build_parser():
    parser = _Parser(prog="bentvec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build a family instance and verify it")
    con.add_argument("--family", choices=sorted(FAMILIES), required=True)
    con.add_argument("--n", type=int, required=True)
    con.add_argument("--r", type=int, help="Niho exponent parameter")
    con.add_argument("--tau", type=int, help="defining-set size for the bent lift")
    con.add_argument("--t", type=int, default=0, help="appended plateaued coordinates")
    con.add_argument(
        "--poly",
        action="append",
        default=None,
        help="reduced polynomial; first use is the lift F, later uses are tail F_i",
    )
    con.add_argument("--u", help="comma-separated hex defining elements")
    con.add_argument("--auto-u", action="store_true", help="derive u from the built-in basis recipes")
    con.add_argument("--seed", type=int, default=0, help="seed for generated tail polynomials")
    con.add_argument("--out", required=True, help="output VF path (report goes to <out>.report.json)")
    con.add_argument("--stamp", action="store_true", help="include a timestamp in the report")
    _common_flags(con)

    ver = sub.add_parser("verify", help="classify a BF/VF file exhaustively")
    ver.add_argument("file")
    _common_flags(ver)

    pro = sub.add_parser("propp", help="second-derivative property checks")
    pro.add_argument("file", help="BF truth-table file")
    pro.add_argument("--u", help="comma-separated hex defining elements")
    pro.add_argument(
        "--search",
        type=_tau_value,
        metavar="TAU",
        help="search for defining sets of this size (accepts 2 or tau=2)",
    )
    pro.add_argument("--limit", type=int, help="cap the number of reported sets")
    pro.add_argument("--node-budget", type=int, help="cap on search nodes")
    _common_flags(pro)
    return parser


def _tau_value(text):
    if "=" in text:
        text = text.split("=", 1)[1]
    return int(text)


def _common_flags(cmd):
    cmd.add_argument("--field-modulus", help="hex override for the modulus table")
    cmd.add_argument("--jobs", type=int, default=1, help="worker threads for component verification")


def _field_for(n, args):
    if args.field_modulus:
        return fileio.field_from_modulus(n, int(args.field_modulus, 16))
    return FieldSpec.default(n)


def _file_field(args):
    if args.field_modulus is None:
        return None
    # degree comes from the file header; defer construction until known
    return int(args.field_modulus, 16)


def _parse_u_list(field, raw):
    values = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        values.append(field.check(int(part, 16)))
    return values


def cmd_construct(args):
    if args.family == "niho" and args.r is None:
        raise PreconditionError("--family niho requires --r")
    field = _field_for(args.n, args)
    build, auto_u = FAMILIES[args.family]
    if args.auto_u:
        u_values = auto_u(field)
    elif args.u:
        u_values = _parse_u_list(field, args.u)
    else:
        raise PreconditionError("supply --u or --auto-u")

    polys = args.poly if args.poly else ["0"]
    main_poly = ReducedPolynomial.parse(polys[0], tau=args.tau)
    explicit_tails = [
        ReducedPolynomial.parse(text, tau=len(u_values)) for text in polys[1:]
    ]
    tails = list(explicit_tails)
    while len(tails) < args.t:
        tails.append(
            ReducedPolynomial.random(
                len(u_values), len(u_values), seed=args.seed + len(tails)
            )
        )
    if args.t and len(tails) > args.t:
        raise PreconditionError(
            f"--t {args.t} but {len(tails)} tail polynomials supplied"
        )

    generated = len(tails) - len(explicit_tails)
    kwargs = dict(tail_polys=tuple(tails), seed=args.seed if generated else None)
    if args.family == "niho":
        result = build(field, args.r, u_values, main_poly, **kwargs)
    else:
        result = build(field, u_values, main_poly, **kwargs)

    report = result.report.to_json_dict()
    if args.stamp:
        report["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    out_obj = result.H_hat if result.H_hat is not None else result.H
    fileio.write_vf(args.out, out_obj)
    fileio.atomic_write_text(
        args.out + ".report.json", json.dumps(report, indent=2, sort_keys=True) + "\n"
    )
    print(f"wrote {args.out} and {args.out}.report.json")
    print(f"family={args.family} n={args.n} class: {result.report.verified_class}")
    print(f"dual formulas match: {result.report.dual_match}")
    if result.report.degree_match is not None:
        print(
            f"degree: predicted {result.report.degree_predicted}, "
            f"measured {result.report.degree_measured}"
        )
    if result.report.bent_components_measured is not None:
        print(
            f"bent components: {result.report.bent_components_measured}"
            + (
                f" (predicted {result.report.bent_components_predicted})"
                if result.report.bent_components_predicted is not None
                else ""
            )
        )
    if not result.report.ok:
        print("VERIFICATION MISMATCH", file=sys.stderr)
        return 3
    print("ok")
    return 0


def _classify_components(F, jobs):
    selectors = list(F.selectors())

    def job(sel):
        comp = F.component(*sel)
        return sel, comp.classification(), comp.degree()

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(job, selectors))
    return [job(sel) for sel in selectors]


def cmd_verify(args):
    override = _file_field(args)
    with open(args.file, "r") as handle:
        text = handle.read()
    tag = text.split(None, 1)[0] if text.split() else ""
    if tag == "BF":
        field = None
        if override is not None:
            n = fileio.parse_header(text.splitlines()[0], "BF", ("n", "field"))["n"]
            field = fileio.field_from_modulus(n, override)
        f = fileio.bf_from_text(text, field=field)
        spectrum = f.walsh()
        print(f"BF n={f.n} field={f.field.modulus:x}")
        print(f"class: {spectrum.classification}")
        print(f"degree: {f.degree()}")
        print(f"weight: {f.weight()} (balanced: {f.is_balanced()})")
        counts = Counter(abs(int(v)) for v in spectrum.values)
        print(
            "spectrum |W| counts: "
            + ", ".join(f"{v}: {c}" for v, c in sorted(counts.items()))
        )
        return 0
    if tag == "VF":
        field = None
        if override is not None:
            n = fileio.parse_header(
                text.splitlines()[0], "VF", ("n", "m", "t", "field")
            )["n"]
            field = fileio.field_from_modulus(n, override)
        F = fileio.vf_from_text(text, field=field)
        print(f"VF n={F.n} m={F.m} t={F.t} field={F.field.modulus:x}")
        rows = _classify_components(F, args.jobs)
        bent = sum(1 for _, cls, _ in rows if cls.kind == "bent")
        plateaued = all(cls.plateaued_family for _, cls, _ in rows)
        if F.n % 2 == 0 and bent == len(rows):
            klass = f"vectorial bent ({F.n},{F.out_bits})"
        elif plateaued:
            klass = f"vectorial plateaued ({F.n},{F.out_bits})"
        else:
            klass = f"not vectorial plateaued ({F.n},{F.out_bits})"
        print(f"class: {klass}")
        print(f"degree: {F.degree()}")
        if F.n % 2 == 0 and F.out_bits >= F.n // 2:
            bound = max_bent_components_bound(F.n, F.out_bits)
            print(f"bent components: {bent} (bound {bound})")
        else:
            print(f"bent components: {bent} (bound n/a)")
        for sel, cls, deg in rows:
            print(f"  component lambda={sel[0]:x} v={sel[1]:x}: {cls}, degree {deg}")
        return 0
    raise ParseError(f"unrecognized header tag {tag!r}", line=1, column=1)


def cmd_propp(args):
    override = _file_field(args)
    field = None
    if override is not None:
        with open(args.file, "r") as handle:
            first = handle.readline()
        n = fileio.parse_header(first.rstrip("\n"), "BF", ("n", "field"))["n"]
        field = fileio.field_from_modulus(n, override)
    f = fileio.read_bf(args.file, field=field)
    if args.search is not None:
        sets = find_defining_sets(
            f, args.search, limit=args.limit, node_budget=args.node_budget
        )
        for ds in sets:
            print(",".join(f"{u:x}" for u in ds.elements))
        truncated = args.limit is not None and len(sets) >= args.limit
        print(
            f"found {len(sets)} defining set(s) of size {args.search}"
            + (" (truncated at limit; more may exist)" if truncated else "")
        )
        return 0
    if not args.u:
        raise PreconditionError("supply --u or --search")
    us = _parse_u_list(f.field, args.u)
    check = satisfies_p(f, DefiningSet(f.field, tuple(us)))
    if check.holds:
        print(f"property (P_{len(us)}) holds for u = {args.u}")
        return 0
    i, j = check.pair
    print(
        f"property fails: D_u{i} D_u{j} g is 1 at x = {check.witness:x} "
        f"(u{i} = {us[i - 1]:x}, u{j} = {us[j - 1]:x})"
    )
    return 2


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    handlers = {
        "construct": cmd_construct,
        "verify": cmd_verify,
        "propp": cmd_propp,
    }
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return 3
    except (PreconditionError, BentvecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
