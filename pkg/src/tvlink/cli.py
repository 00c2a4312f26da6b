#
# cli.py
#
# Command-line front end: quantum arithmetic probes, state sums on
# triangulation files, colored Jones evaluation, the color-sum form of
# TV, identity verification, and growth series.  Machine-readable
# output (plain numbers, JSON, CSV); exit code 0 on success, 1 on a
# computation error, 2 on a usage error.

import argparse
import json
import os
import sys

from . import asymptotics, bridge, jones, statesum, triangulate
from .qarith import Flavor, RootContext, quantum_int
from .skein import sixj


def _context(args):
    flavor = Flavor.SO3_2R if getattr(args, "so3", False) else Flavor.SU2_4R
    return RootContext(args.r, flavor, getattr(args, "s", 1))


def _threads(args):
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("SKEIN_THREADS")
    return int(env) if env else 1


def _int_list(text):
    return [int(p) for p in text.split(",") if p]


def _cmd_qint(args):
    print("%.15g" % quantum_int(_context(args), args.n))


def _cmd_sixj(args):
    norm = "section2" if args.normalization == "section2" else "appendix"
    print("%.15g" % sixj(_context(args), tuple(args.six), norm))


def _cmd_tv_statesum(args):
    with open(args.file) as fh:
        tri = triangulate.parse_triangulation(fh.read())
    ctx = _context(args)
    form = "appendixA1" if args.form.startswith("appendix") else "def27"
    fn = statesum.tv_prime if args.prime else statesum.tv
    result = fn(tri, ctx, form=form, threads=_threads(args))
    if args.json:
        print(result.to_json())
    else:
        print("%.15g" % result.value)


def _cmd_jones(args):
    link = jones.parse_link(args.expr)
    value = jones.jones_eval(_context(args), link, _int_list(args.colors))
    if isinstance(value, complex):
        if abs(value.imag) < 1e-12 * max(1.0, abs(value.real)):
            value = value.real
        else:
            print("%.15g%+.15gj" % (value.real, value.imag))
            return
    print("%.15g" % value)


def _cmd_tv_sum(args):
    link = jones.parse_link(args.expr)
    ctx = _context(args)
    if args.so3:
        value = bridge.tv_from_jones_so3(ctx, link)
    else:
        value = bridge.tv_from_jones_su2(ctx, link)
    print("%.15g" % value)


def _cmd_verify(args):
    link = jones.parse_link(args.expr)
    with open(args.file) as fh:
        tri = triangulate.parse_triangulation(fh.read())
    flavor = Flavor.SO3_2R if args.so3 else Flavor.SU2_4R
    reports = bridge.verify_identity(link, tri, _int_list(args.r_list),
                                     flavor=flavor, tolerance=args.tolerance)
    print(json.dumps([rep.to_dict() for rep in reports]))
    if not all(rep.passed for rep in reports):
        sys.exit(1)


def _cmd_growth(args):
    link = jones.parse_link(args.expr)
    r_list = list(range(args.r_min, args.r_max + 1, 2))
    series = asymptotics.growth_series(link, r_list, threads=_threads(args))
    sys.stdout.write(series.to_csv())
    if args.fit:
        print(series.fit_to_json())


def _add_root_args(sub, so3_only=False):
    sub.add_argument("--r", type=int, required=True, help="level r")
    if so3_only:
        sub.add_argument("--so3", action="store_true", default=True,
                         help=argparse.SUPPRESS)
    else:
        sub.add_argument("--so3", action="store_true",
                         help="use the 2r-th root (odd r); default is the 4r-th root")
    sub.add_argument("--s", type=int, default=1,
                     help="root exponent (default 1: principal root)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tvlink",
        description="Turaev-Viro state sums and colored Jones evaluations")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("qint", help="quantum integer [n]")
    p.add_argument("n", type=int)
    _add_root_args(p)
    p.set_defaults(fn=_cmd_qint)

    p = subs.add_parser("sixj", help="tetrahedral 6j coefficient")
    p.add_argument("six", type=int, nargs=6, metavar="c")
    p.add_argument("--normalization", choices=["section2", "appendix"],
                   default="appendix")
    _add_root_args(p)
    p.set_defaults(fn=_cmd_sixj)

    p = subs.add_parser("tv-statesum", help="state sum on a tvtri file")
    p.add_argument("file")
    p.add_argument("--form", choices=["def27", "appendix", "appendixA1"],
                   default="def27")
    p.add_argument("--prime", action="store_true",
                   help="even-palette sum TV' (needs --so3)")
    p.add_argument("--threads", type=int)
    p.add_argument("--json", action="store_true")
    _add_root_args(p)
    p.set_defaults(fn=_cmd_tv_statesum)

    p = subs.add_parser("jones", help="colored Jones value of a link expression")
    p.add_argument("expr")
    p.add_argument("--colors", required=True, help="comma-separated colors")
    _add_root_args(p)
    p.set_defaults(fn=_cmd_jones)

    p = subs.add_parser("tv-sum", help="TV of a link complement via the color sum")
    p.add_argument("expr")
    _add_root_args(p)
    p.set_defaults(fn=_cmd_tv_sum)

    p = subs.add_parser("verify", help="state sum vs color sum, one report per r")
    p.add_argument("expr")
    p.add_argument("file")
    p.add_argument("--r-list", required=True, help="comma-separated levels")
    p.add_argument("--su2", action="store_true",
                   help="verify at 4r-th roots instead of 2r-th")
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.set_defaults(fn=_cmd_verify, so3=None)
    p.set_defaults(so3_from_su2=True)

    p = subs.add_parser("growth", help="growth series y_r = (2 pi/r) log TV_r")
    p.add_argument("expr")
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--r-min", type=int, default=5)
    p.add_argument("--fit", action="store_true")
    p.add_argument("--threads", type=int)
    p.set_defaults(fn=_cmd_growth)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "so3_from_su2", False):
        args.so3 = not args.su2
    try:
        args.fn(args)
    except SystemExit:
        raise
    except (ValueError, OSError, triangulate.TriangulationError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        sys.exit(1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
