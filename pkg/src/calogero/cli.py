"""Command-line front end.

Subcommands ``expand``, ``norms``, ``verify``, ``gram`` and ``orbit``.  Exit
codes: 0 success, 1 usage or invalid input, 2 verification failure,
3 singular parameter.  ``CALOGERO_PRECISION`` sets the default working
precision (decimal digits) for floating-point output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath

from . import construct, norms, oracle, weyl
from .errors import (
    CalogeroError,
    DegenerateEigenvalue,
    InvalidSector,
    PoleEncountered,
    SingularParameter,
)
from .exactpoly import Q, monomial
from .params import Params

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_SINGULAR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _rational(text):
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"expected an integer or 'p/q', got {text!r}") from None


def _composition(text):
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}") from None
    if not parts or min(parts) < 0:
        raise argparse.ArgumentTypeError(f"expected non-negative integers, got {text!r}")
    return tuple(parts)


def _sign(text):
    if text in ("+", "+1", "sym", "symmetric"):
        return 1
    if text in ("-", "-1", "anti", "antisymmetric"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def _add_params(p, a="3/7", b="2/5", omega="1/2"):
    p.add_argument("--family", choices=("A", "B"), default="A")
    p.add_argument("--N", type=int, default=None, help="number of variables")
    p.add_argument("--a", type=_rational, default=Q(a))
    p.add_argument("--b", type=_rational, default=Q(b))
    p.add_argument("--omega", type=_rational, default=Q(omega))


def build_parser():
    parser = _Parser(prog="calogero", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", help="monomial expansion of h_mu or H_mu^+-")
    _add_params(p)
    p.add_argument("--mu", type=_composition, required=True)
    p.add_argument("--sym", type=_sign, default=None, help="+ or - for the (anti)symmetric polynomial")
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("norms", help="exact squared-norm ratios <p,p>/<h_0,h_0>")
    _add_params(p)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--mu", type=_composition, default=None, help="a single label instead of a range")
    p.add_argument("--sym", type=_sign, default=None)
    p.add_argument("--absolute", action="store_true", help="add float absolute norms")
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="run the verification suite")
    _add_params(p)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--fault-c-mu", type=int, default=0, help=argparse.SUPPRESS)
    p.add_argument("--output", default=None)

    p = sub.add_parser("gram", help="quadrature Gram matrix (integer couplings)")
    _add_params(p, a="1", b="0", omega="1/2")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--basis", choices=("nonsym", "monomial"), default="nonsym")
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("orbit", help="Weyl orbit of a partition with shortest words")
    p.add_argument("--mu", type=_composition, required=True)
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    p.add_argument("--output", default=None)
    return parser


# ---------------------------------------------------------------------------
def _params(args):
    try:
        return Params(args.family, args.a, args.b, args.omega)
    except ValueError as exc:
        raise UsageError(f"rejected parameters: {exc}") from None


def _check_N(args, mu):
    if args.N is not None and args.N != len(mu):
        raise UsageError(f"--mu has {len(mu)} entries but --N is {args.N}")
    return len(mu)


def _sector_guard(family, mu, sign):
    try:
        construct.check_sector(family, mu, sign)
    except InvalidSector as exc:
        raise UsageError(
            f"{exc}. Admissible labels: A+: P+; A-: P+ + delta; "
            "B+: 2P+ or 2P+ + 1^N; B-: 2(P+ + delta) or 2(P+ + delta) + 1^N"
        ) from None


def _rat(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_expand(args):
    params = _params(args)
    _check_N(args, args.mu)
    if args.sym is not None:
        if not weyl.is_partition(args.mu):
            raise UsageError("--sym needs a partition label")
        _sector_guard(params.family, args.mu, args.sym)
        sp = construct.sym_poly(params, args.mu, args.sym)
        data = sp.to_dict()
        poly = sp.poly
    else:
        lp = construct.nonsym_poly(params, args.mu)
        data = lp.to_dict()
        poly = lp.poly
    data["text"] = str(poly)
    if args.format == "pretty":
        return str(poly) + "\n"
    return json.dumps(data, indent=2) + "\n"


def cmd_norms(args):
    params = _params(args)
    precision = args.precision or oracle.default_precision()
    if args.mu is not None:
        N = _check_N(args, args.mu)
        labels = [args.mu]
    else:
        if args.N is None:
            raise UsageError("give --N or --mu")
        N = args.N
        gen = weyl.partitions_upto if args.sym is not None else weyl.compositions_upto
        labels = list(gen(N, args.max_degree))
    rows = []
    for mu in labels:
        if args.sym is not None:
            if args.mu is not None:
                _sector_guard(params.family, mu, args.sym)
            else:
                try:
                    construct.check_sector(params.family, mu, args.sym)
                except InvalidSector:
                    continue
            r = norms.norm_ratio_sym(params, mu, args.sym)
        else:
            r = norms.norm_ratio_nonsym(params, mu)
        row = r.as_row()
        row["ratio"] = _rat(r.value)
        if args.absolute:
            row["absolute"] = mpmath.nstr(norms.absolute_norm_float(r, precision), precision)
        rows.append(row)
    if args.format == "json":
        return json.dumps(rows, indent=2) + "\n"
    fields = ["family", "N", "mu"] + (["sign"] if args.sym is not None else []) + ["ratio_num", "ratio_den"]
    if args.absolute:
        fields.append("absolute")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_verify(args):
    params = _params(args)
    if args.N is None:
        raise UsageError("verify needs --N")
    fault = {"c_mu_offset": args.fault_c_mu} if args.fault_c_mu else None
    report = oracle.verify_suite(params, args.N, args.max_degree, args.precision, fault=fault)
    text = json.dumps(report, indent=2) + "\n"
    return text, (EXIT_OK if oracle.report_ok(report) else EXIT_VERIFY)


def cmd_gram(args):
    params = _params(args)
    if args.N is None:
        raise UsageError("gram needs --N")
    mus = list(weyl.compositions_upto(args.N, args.degree))
    if args.basis == "nonsym":
        polys = [construct.nonsym_poly(params, mu).poly for mu in mus]
    else:
        polys = [monomial(mu) for mu in mus]
    G = oracle.quadrature_gram(params, polys, args.precision, labels=mus)
    data = G.to_dict()
    data["basis"] = args.basis
    data["max_offdiag_ratio"] = mpmath.nstr(G.max_offdiag_ratio(), 5)
    return json.dumps(data, indent=2) + "\n"


def cmd_orbit(args):
    mu_plus, _ = weyl.sort_to_partition(args.mu)
    entries = []
    for nu, word in weyl.weyl_orbit(mu_plus):
        entries.append({
            "composition": list(nu),
            "word": list(word.letters),
            "length": len(word),
            "inversions": [[i + 1, k + 1] for i, k in sorted(weyl.inversion_set(word))],
        })
    if args.format == "json":
        return json.dumps({"partition": list(mu_plus), "orbit": entries}, indent=2) + "\n"
    lines = [f"orbit of {tuple(mu_plus)}: {len(entries)} compositions"]
    for e in entries:
        inv = ", ".join(f"e{i}-e{k}" for i, k in e["inversions"]) or "-"
        lines.append(f"  {tuple(e['composition'])}  word={tuple(e['word'])}  R_w={{{inv}}}")
    return "\n".join(lines) + "\n"


COMMANDS = {
    "expand": cmd_expand,
    "norms": cmd_norms,
    "verify": cmd_verify,
    "gram": cmd_gram,
    "orbit": cmd_orbit,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"calogero: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularParameter, DegenerateEigenvalue, PoleEncountered) as exc:
        where = getattr(exc, "pairing", None)
        extra = f" (vanishing: {where})" if where else ""
        print(f"calogero: singular parameter: {exc}{extra}", file=sys.stderr)
        return EXIT_SINGULAR
    except (CalogeroError, ValueError) as exc:
        print(f"calogero: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
