"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad arguments or malformed input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import gf2
from .chains import hn_filtration, mho_omega
from .checks import SUITES, run_suite
from .intervals import Module, format_module, parse_module
from .io import (
    FormatError,
    dumps,
    lattice_to_dot,
    lattice_to_json,
    load_chain,
    load_json,
    nerve_to_json,
    rational_str,
    wsc_from_json,
)
from .lattice import class_str, maximal_green_sequences, torsion_lattice
from .slices import compactness_report, distance, distance_filt_formula, nerve
from .stability import (
    check_weak_seesaw,
    cut_values,
    eta_pm,
    is_semistable,
    phase,
    tors_cuts,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="torslice", description="Torsion classes, chains and slicings of linear A_n.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("tors", help="enumerate the torsion classes")
    s.add_argument("--n", type=_positive, required=True)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--dot", action="store_true")

    s = sub.add_parser("hasse", help="Hasse diagram with brick labels")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--dot", action="store_true")

    s = sub.add_parser("mgs", help="maximal green sequences")
    s.add_argument("--n", type=_positive, required=True)

    s = sub.add_parser("hn", help="Harder-Narasimhan filtration of a module")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--chain", required=True, help="chain JSON file")
    s.add_argument("--module", required=True, help='e.g. "[1,2]+[2,2]*2"')

    s = sub.add_parser("dist", help="distance between two chains")
    s.add_argument("--chain1", required=True)
    s.add_argument("--chain2", required=True)
    s.add_argument("--filt-check", action="store_true", help="also evaluate the Filt form")

    s = sub.add_parser("nerve", help="nerve statistics and compactness report")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("wsc", help="queries on a weak stability condition")
    s.add_argument("--spec", required=True, help="condition JSON file")
    q = s.add_mutually_exclusive_group(required=True)
    q.add_argument("--etapm", action="store_true")
    q.add_argument("--seesaw", action="store_true")
    q.add_argument("--semistable", metavar="MODULE")
    s.add_argument("--dim-bound", type=_positive, default=6)

    s = sub.add_parser("check", help="run invariant suites")
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--n", type=_positive, default=2)
    s.add_argument("--dim-bound", type=_positive, default=6)
    return p


def _module(text: str, n: int) -> Module:
    try:
        m = parse_module(text, n)
    except ValueError as exc:
        raise FormatError("module", str(exc)) from exc
    if m.is_zero:
        raise FormatError("module", "need a nonzero module")
    return m


def _chain_lines(c, out: TextIO):
    for j, bits in enumerate(c.classes):
        at = "" if j == 0 else f"  from {rational_str(c.breakpoints[j - 1])}"
        out.write(f"  {class_str(bits, c.n)}{at}\n")


def cmd_tors(args, out: TextIO) -> int:
    lat = torsion_lattice(args.n)
    if args.json:
        out.write(dumps(lattice_to_json(lat)))
    elif args.dot:
        out.write(lattice_to_dot(lat))
    else:
        for k, bits in enumerate(lat.classes):
            out.write(f"{k}\t{class_str(bits, args.n)}\n")
        out.write(f"count {len(lat)}\n")
    return 0


def cmd_hasse(args, out: TextIO) -> int:
    lat = torsion_lattice(args.n)
    if args.dot:
        out.write(lattice_to_dot(lat))
        return 0
    for e in lat.hasse:
        out.write(f"{e.upper} -> {e.lower}\t{e.brick}\n")
    out.write(f"edges {len(lat.hasse)}\n")
    return 0


def cmd_mgs(args, out: TextIO) -> int:
    lat = torsion_lattice(args.n)
    seqs = maximal_green_sequences(lat)
    for s in seqs:
        out.write(" > ".join(str(i) for i in s) + "\n")
    out.write(f"count {len(seqs)}\n")
    return 0


def cmd_hn(args, out: TextIO) -> int:
    c = load_chain(args.chain)
    if c.n != args.n:
        raise FormatError("n", f"chain is for n={c.n}, not n={args.n}")
    m = _module(args.module, args.n)
    out.write("layer\tphase\tfactor\n")
    for layer in hn_filtration(c, m):
        out.write(f"{format_module(layer.sub)}\t{rational_str(layer.phase)}\t{format_module(layer.factor)}\n")
    mo, om = mho_omega(c, m)
    out.write(f"mho {rational_str(mo)}\nomega {rational_str(om)}\n")
    return 0


def cmd_dist(args, out: TextIO) -> int:
    c1, c2 = load_chain(args.chain1), load_chain(args.chain2)
    if c1.n != c2.n:
        raise FormatError("n", "chains live on different categories")
    d = distance(c1, c2)
    out.write(f"{rational_str(d)}\n")
    if args.filt_check:
        f = distance_filt_formula(c1, c2)
        out.write(f"filt {rational_str(f)}\n")
        if f != d:
            out.write("MISMATCH\n")
            return 1
    return 0


def cmd_nerve(args, out: TextIO) -> int:
    lat = torsion_lattice(args.n)
    cx = nerve(lat)
    if args.json:
        out.write(dumps(nerve_to_json(cx)))
        return 0
    rep = compactness_report(lat, cx)
    out.write(f"f_vector {' '.join(str(x) for x in cx.f_vector)}\n")
    out.write(f"facets {len(cx.facets)}\n")
    for f in cx.facets:
        out.write("  " + " > ".join(str(i) for i in f) + "\n")
    out.write(f"torsion_classes {rep.torsion_classes}\n{rep.verdict}\n")
    return 0


def cmd_wsc(args, out: TextIO) -> int:
    phi = wsc_from_json(load_json(args.spec))
    n = phi.n
    if args.etapm:
        plus, minus = eta_pm(phi)
        out.write("cut\tgeq\tgt\n")
        for p in (Fraction(0),) + cut_values(phi):
            geq, gt = tors_cuts(phi, p)
            out.write(f"{rational_str(p)}\t{class_str(geq, n)}\t{class_str(gt, n)}\n")
        out.write("eta_plus\n")
        _chain_lines(plus, out)
        flags = "".join("L" if f else "-" for f in minus.lower_at)
        out.write(f"eta_minus: same classes, lower_at {flags}\n")
        return 0
    if args.seesaw:
        v = check_weak_seesaw(phi, dim_bound=args.dim_bound)
        out.write(f"sequences {v.checked}\n")
        out.write(f"weak {'pass' if v.passed else 'fail'}\n")
        if v.witness:
            out.write("  witness " + " -> ".join(format_module(x) for x in v.witness) + "\n")
        out.write(f"strict {'pass' if v.strict else 'fail'}\n")
        if v.strict_witness:
            out.write("  witness " + " -> ".join(format_module(x) for x in v.strict_witness) + "\n")
        return 0 if v.passed else 1
    m = _module(args.semistable, n)
    bound = max(args.dim_bound, m.total_dim)
    if bound > gf2.DEFAULT_DIM_BOUND:
        raise FormatError("module", f"total dimension above {gf2.DEFAULT_DIM_BOUND}")
    semi = is_semistable(phi, m, bound)
    out.write(f"phase {rational_str(phase(phi, m))}\nsemistable {'yes' if semi else 'no'}\n")
    return 0


def cmd_check(args, out: TextIO) -> int:
    if args.dim_bound > gf2.DEFAULT_DIM_BOUND:
        raise FormatError("dim-bound", f"at most {gf2.DEFAULT_DIM_BOUND}")
    failed = 0
    for r in run_suite(args.suite, args.n, args.dim_bound):
        out.write(r.line() + "\n")
        out.flush()
        failed += not r.passed
    out.write(f"{'FAILED' if failed else 'OK'}: {failed} failing check(s)\n")
    return 1 if failed else 0


COMMANDS = {
    "tors": cmd_tors,
    "hasse": cmd_hasse,
    "mgs": cmd_mgs,
    "hn": cmd_hn,
    "dist": cmd_dist,
    "nerve": cmd_nerve,
    "wsc": cmd_wsc,
    "check": cmd_check,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        err.write(f"torslice: {exc}\n")
        return 2
    except FormatError as exc:
        err.write(f"torslice: malformed input: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
