"""Command-line front end.

Subcommands build named monoids, analyze their Ehresmann structure, emit
egg-box DOT diagrams, dump the associated category, export the transform
matrices, and run the verification suites.  Outputs are deterministic:
JSON keys are sorted and files are written atomically (temp file plus
rename).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import algebra, ehresmann as eh, dotout, verify, zoo
from .errors import ResourceCapError, StateError, ValidationError
from .monoid import TABLE_CAP

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _write_out(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _json_text(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _monoid_and_semilattice(family, kind):
    zoo.FamilySpec.parse(family)  # reject bad names before building
    if kind not in zoo.SEMILATTICE_KINDS:
        raise ValidationError(f"unknown semilattice kind {kind!r}")
    return zoo.build(family), zoo.semilattice_for(kind, family)


def cmd_build(args):
    zoo.FamilySpec.parse(args.family)
    m = zoo.build(args.family)
    if m.table is None:
        raise ResourceCapError(
            f"{args.family} has {m.size} elements, above the Cayley-table "
            f"cap {TABLE_CAP}; no dump emitted",
            TABLE_CAP,
        )
    _write_out(_json_text(m.to_json()), args.out)
    return EXIT_OK


def cmd_analyze(args):
    s, e = _monoid_and_semilattice(args.family, args.semilattice)
    gens = None
    if s.size > eh.FULL_SWEEP_CAP and args.family.startswith("P"):
        spec = zoo.FamilySpec.parse(args.family)
        gens = [s.index[g] for g in zoo.partition_generators(spec.n)]
    report = eh.check_axioms(s, e, gens)
    data = report.to_json()
    data["size"] = s.size
    try:
        rest_l, rest_r, rest = eh.rest_subsemigroups(s, e)
        data["rest_sizes"] = {
            "left": len(rest_l),
            "right": len(rest_r),
            "two_sided": len(rest),
        }
    except StateError as exc:
        data["rest_sizes"] = None
        data["rest_error"] = str(exc)
    reg = eh.reg_e(s, e)
    data["regular_count"] = len(reg)
    data["regular_family"] = _identify(s, reg)
    _write_out(_json_text(data), args.out)
    return EXIT_OK


def _identify(s, indices):
    """Name a known family whose element set equals the given subset."""
    elements = frozenset(s.decode(i) for i in indices)
    sample = s.decode(0)
    n = sample.n
    candidates = ["I", "J", "T", "PT", "Pfd", "RR", "LL"]
    for fam in candidates:
        for deg in {n, n - 1}:
            if deg < 0 or deg > zoo.CAPS.get(fam, -1):
                continue
            name = f"{fam}{deg}"
            try:
                other = frozenset(zoo.build(name).elements)
            except (ValidationError, ResourceCapError):
                continue
            if other == elements:
                return name
    try:
        if n >= 1 and n - 1 <= zoo.CAPS["RJ"]:
            if elements == frozenset(zoo.build(f"RJ{n - 1}").elements):
                return f"RJ{n - 1}"
    except (ValidationError, ResourceCapError):
        pass
    return None


def cmd_eggbox(args):
    zoo.FamilySpec.parse(args.family)
    m = zoo.build(args.family)
    shade = None
    if args.shade:
        with open(args.shade) as fh:
            data = json.load(fh)
        decode = type(m.elements[0]).from_json
        shade = {m.index[decode(item)] for item in data}
    dot = dotout.emit_eggbox(m, shade=shade, title=args.family)
    _write_out(dot, args.out)
    return EXIT_OK


def cmd_category(args):
    s, e = _monoid_and_semilattice(args.family, args.semilattice)
    cat = algebra.build_category(s, e)
    flag, witness = algebra.is_ei(cat)
    data = {
        "objects": len(cat.objects()),
        "hom_sizes": {
            f"{a}->{b}": len(v) for (a, b), v in sorted(cat.hom.items())
        },
        "ei": flag,
        "ei_witness": witness,
    }
    _write_out(_json_text(data), args.out)
    return EXIT_OK


def cmd_stein(args):
    s, e = _monoid_and_semilattice(args.family, args.semilattice)
    z = algebra.stein_transform(s, e, args.side)
    below = algebra.natural_order(s, e, args.side)
    m = algebra.mobius_inverse(below)
    ok = algebra.verify_stein(s, e, args.side)
    data = {
        "side": args.side,
        "dimension": s.size,
        "multiplicative": ok,
        "zeta": algebra.matrix_to_json(z),
        "mobius": algebra.matrix_to_json(m),
    }
    _write_out(_json_text(data), args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify(args):
    results = verify.run_suite(args.section, args.nmax)
    lines = [r.line() for r in results]
    failed = sum(1 for r in results if not r.passed)
    lines.append(
        f"{len(results) - failed}/{len(results)} checks passed"
    )
    _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def make_parser():
    parser = argparse.ArgumentParser(
        prog="diagmon",
        description="Diagram-monoid construction and structural analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="output path (stdout when omitted)")

    p = sub.add_parser("build", help="dump a monoid's Cayley table")
    p.add_argument("family", help="family name, e.g. P3, B2, RR4, BX2")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="axiom report for (monoid, semilattice)")
    p.add_argument("family")
    p.add_argument("semilattice", choices=zoo.SEMILATTICE_KINDS)
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("eggbox", help="egg-box diagram as DOT")
    p.add_argument("family")
    p.add_argument("--shade", help="JSON file of elements to highlight")
    p.add_argument(
        "--format", choices=("dot",), default="dot", help="output format"
    )
    common(p)
    p.set_defaults(func=cmd_eggbox)

    p = sub.add_parser("category", help="hom-set structure and the EI check")
    p.add_argument("family")
    p.add_argument("semilattice", choices=zoo.SEMILATTICE_KINDS)
    common(p)
    p.set_defaults(func=cmd_category)

    p = sub.add_parser("stein", help="transform and Mobius matrices")
    p.add_argument("family")
    p.add_argument("semilattice", choices=zoo.SEMILATTICE_KINDS)
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument(
        "--format", choices=("json",), default="json", help="output format"
    )
    common(p)
    p.set_defaults(func=cmd_stein)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("section", choices=("2", "3", "4", "5", "all"))
    p.add_argument("--nmax", type=int, default=None, help="degree cap")
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: {exc} (cap {exc.cap})", file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, StateError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
