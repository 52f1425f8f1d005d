"""Command-line front end.

Subcommands: info, verify, c0, kw, export.  Exit codes: 0 on success,
1 on verification failure, 2 on usage or input errors.  Reports are
deterministic: the same configuration produces byte-identical JSON.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .algebra import check_algebra, export_table, import_table
from .catalog import family_algebra, family_setup
from .errors import InputError
from .grading import build_minimal_setup, kw_dimensions, kw_numbers
from .relations import RELATION_IDS, extract_c0, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _parser():
    p = argparse.ArgumentParser(
        prog="wsuper",
        description="Exact verification of minimal W-superalgebra structure.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name, doc in (
            ("info", "algebra and grading diagnostics"),
            ("verify", "run the relation suite"),
            ("c0", "extract the degree-1 commutator constant"),
            ("kw", "dimension-bound exponents"),
            ("export", "write the structure-constant table")):
        sp = sub.add_parser(name, help=doc)
        sp.add_argument("--family", choices=("gl", "sl", "osp", "psl22"))
        sp.add_argument("--m", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--table", help="structure-constant JSON document")
        sp.add_argument("--e", help="explicit nilpotent, comma-separated rationals")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write the report here instead of stdout")
        if name == "verify":
            sp.add_argument("--suite", help="comma-separated relation ids (%s)"
                            % ",".join(RELATION_IDS))
            sp.add_argument("--max-deg", type=int, default=4)
            sp.add_argument("--corrupt", choices=("theta-v-sign",),
                            help="negative control: corrupt a generator on purpose")
        if name == "kw":
            sp.add_argument("--prime", type=int)
    return p


def _load_algebra(args):
    if args.table and args.family:
        raise InputError("give either --family or --table, not both")
    if args.table:
        with open(args.table) as fh:
            doc = json.load(fh)
        return import_table(doc), None
    if not args.family:
        raise InputError("one algebra source required: --family or --table")
    if args.family in ("gl", "sl", "osp") and (args.m is None or args.n is None):
        raise InputError("--family %s needs --m and --n" % args.family)
    return None, args.family


def _parse_e(text, dim):
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != dim:
        raise InputError("--e needs %d comma-separated entries" % dim)
    return tuple(Fraction(t) for t in parts)


def _setup_from_args(args):
    alg, family = _load_algebra(args)
    if family is not None:
        e = None
        if args.e:
            fam_alg, _ = family_algebra(family, args.m, args.n)
            e = _parse_e(args.e, fam_alg.dim)
        return family_setup(family, args.m, args.n, e=e)
    if not args.e:
        raise InputError("--table requires --e (no catalog nilpotent for imports)")
    return build_minimal_setup(alg, _parse_e(args.e, alg.dim))


def _emit(args, text_lines, json_obj):
    if args.format == "json":
        payload = json.dumps(json_obj, indent=2) + "\n"
    else:
        payload = "\n".join(text_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def cmd_info(args):
    alg, family = _load_algebra(args)
    if family is None and not args.e:
        # table without a nilpotent: report the validation verdict only
        report = check_algebra(alg)
        obj = {
            "algebra": alg.name,
            "dim": alg.dim,
            "parity": list(alg.parity),
            "form_checks": {name: ok for name, ok, _ in report.checks},
            "valid": report.ok,
        }
        lines = ["%s: dim %d" % (alg.name, alg.dim)] + report.lines()
        _emit(args, lines, obj)
        return EXIT_OK if report.ok else EXIT_FAIL
    setup = _setup_from_args(args)
    report = check_algebra(setup.alg)
    summary = setup.summary()
    summary["form_checks"] = {name: ok for name, ok, _ in report.checks}
    lines = ["%s: dim %d" % (setup.alg.name, setup.dim)]
    lines += report.lines()
    lines.append("grading dims: " + " ".join(
        "g(%s)=%d" % (i, len(setup.grading[i])) for i in sorted(setup.grading)))
    lines.append("s=%d r=%d" % (setup.sdim, setup.rdim))
    d0, d1, ep, e2 = kw_numbers(setup)
    lines.append("d0=%d d1=%d" % (d0, d1))
    lines.append("bound exponents: p^%s * 2^%d (ceiling convention)" % (ep, e2))
    _emit(args, lines, summary)
    return EXIT_OK


def cmd_verify(args):
    setup = _setup_from_args(args)
    which = None
    if getattr(args, "suite", None):
        which = [t.strip() for t in args.suite.split(",") if t.strip()]
    result = run_suite(setup, which=which, corrupt=getattr(args, "corrupt", None),
                       max_deg=getattr(args, "max_deg", 4))
    _emit(args, result.lines(), result.as_json())
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_c0(args):
    setup = _setup_from_args(args)
    rep, res = extract_c0(setup)
    obj = {"algebra": setup.alg.name, "c0": res.as_json(),
           "status": "pass" if rep.ok else "fail"}
    lines = rep.lines()
    if res.value is not None:
        lines.append("c0 = %s" % res.value)
    _emit(args, lines, obj)
    return EXIT_OK if rep.ok else EXIT_FAIL


_P_RESTRICTIONS = {
    "gl": lambda m, n, p: p > 2,
    "sl": lambda m, n, p: p > 2 and (m - n) % p != 0,
    "osp": lambda m, n, p: p > 2,
    "psl22": lambda m, n, p: p > 2,
}


def cmd_kw(args):
    setup = _setup_from_args(args)
    data = kw_dimensions(setup)
    obj = {
        "algebra": setup.alg.name,
        "d0": data["d0"],
        "d1": data["d1"],
        "exponent_p": str(data["exponent_p"]),
        "exponent_two": data["exponent_two"],
        "parity_r": data["parity_r"],
    }
    lines = ["%s: d0=%d d1=%d" % (setup.alg.name, data["d0"], data["d1"]),
             "bound = p^%s * 2^%d (ceiling convention for the power of two)"
             % (data["exponent_p"], data["exponent_two"])]
    if args.prime:
        p = args.prime
        restrict = _P_RESTRICTIONS.get(args.family or "", lambda m, n, q: q > 2)
        if not restrict(args.m or 0, args.n or 0, p):
            lines.append("warning: p=%d violates the family restriction; "
                         "computing anyway" % p)
            obj["warning"] = "p violates family restriction"
        exp_p = data["exponent_p"]
        if exp_p.denominator != 1:
            raise InputError("d0 is odd; the bound is not an integer for this setup")
        value = p ** int(exp_p) * 2 ** data["exponent_two"]
        obj["prime"] = p
        obj["value"] = str(value)
        lines.append("value at p=%d: %d" % (p, value))
    _emit(args, lines, obj)
    return EXIT_OK


def cmd_export(args):
    alg, family = _load_algebra(args)
    if family is not None:
        setup = family_setup(family, args.m, args.n)
        alg = setup.alg
    doc = export_table(alg)
    lines = [json.dumps(doc, indent=2)]
    _emit(args, lines, doc)
    return EXIT_OK


def main(argv=None):
    args = _parser().parse_args(argv)
    threads = os.environ.get("WSUPER_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print("WSUPER_THREADS must be a positive integer", file=sys.stderr)
            return EXIT_USAGE
    handler = {
        "info": cmd_info,
        "verify": cmd_verify,
        "c0": cmd_c0,
        "kw": cmd_kw,
        "export": cmd_export,
    }[args.command]
    try:
        return handler(args)
    except (InputError, OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
