"""Command line interface: ``latpoly <command> ...``.

Exit status is 0 on success, 1 on a usage error and 2 when a computation
rejects its input.
"""

import argparse
import json
import sys
from collections import Counter

from . import cayley, classify, gauss, jets, seshadri
from .errors import LatPolyError
from .io import (
    dump_polytope,
    format_monomial,
    format_rational,
    parse_point,
    polytope_to_dict,
    read_configuration,
    read_polytope,
)

EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _index_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated indices, got {text!r}")


def _vec(v):
    return ",".join(str(x) for x in v)


def cmd_smooth2d(args, out):
    records = classify.list_smooth_2d(args.max_points, a_cap=args.a_cap)
    if args.tally:
        tally = Counter(r.lattice_point_count for r in records)
        print(" ".join(f"{k}:{tally[k]}" for k in sorted(tally)), file=out)
    else:
        print(json.dumps([polytope_to_dict(r.polytope) for r in records]), file=out)


def cmd_is_cayley(args, out):
    res = cayley.is_cayley(read_polytope(args.file))
    if res is None:
        print("false", file=out)
    else:
        print("true", file=out)
        print(f"functional {_vec(res.functional)} offset {res.offset}", file=out)


def cmd_cayley_sum(args, out):
    ps = [read_polytope(f) for f in args.files]
    print(dump_polytope(cayley.cayley_sum(ps, args.scale)), file=out)


def cmd_blowup(args, out):
    p = read_polytope(args.file)
    try:
        face = [p.vertices[i] for i in args.face_vertices]
    except IndexError:
        raise LatPolyError(f"face vertex index out of range 0..{len(p.vertices) - 1}") from None
    print(dump_polytope(cayley.toric_blow_up(p, face, args.k)), file=out)


def cmd_lattice_points(args, out):
    pts = read_polytope(args.file).lattice_points()
    print(json.dumps({"points": [list(q) for q in pts]}), file=out)


def cmd_is_smooth(args, out):
    print("true" if read_polytope(args.file).is_smooth() else "false", file=out)


def _point(args):
    return jets.GENERIC if args.generic else parse_point(args.point)


def cmd_jets(args, out):
    jm = jets.jet_matrix(read_configuration(args.file), args.order, _point(args))
    for u, row in zip(jm.rows, jm.entries):
        print(f"{_vec(u)}: " + " ".join(format_rational(x) for x in row), file=out)
    rk = jm.rank()
    print(f"rank {rk} target {jm.target_rank}", file=out)
    print(f"spanned {'true' if rk == jm.target_rank else 'false'}", file=out)


def cmd_jet_degree(args, out):
    print(jets.degree_of_jet_separation(read_configuration(args.file), _point(args)), file=out)


def cmd_epsilon(args, out):
    b = seshadri.epsilon_bounds(read_polytope(args.file), args.n, args.dcap)
    print(f"lower {format_rational(b.lower)}, upper {format_rational(b.upper)}", file=out)
    d, s = b.lower_witness
    print(f"lower witness: dilation {d} jet degree {s}", file=out)
    u, w = b.upper_witness
    print(f"upper witness: direction {_vec(u) if u is not None else '-'} width {w}", file=out)


def cmd_gauss(args, out):
    res = gauss.gauss_k_map(read_configuration(args.file), args.order)
    exps = res.image_exponents if args.image else res.fiber_exponents
    if args.json:
        print(json.dumps([list(e) for e in exps]), file=out)
    else:
        print(" ".join(format_monomial(e) for e in exps), file=out)


def cmd_normal_form(args, out):
    print(dump_polytope(read_polytope(args.file).normal_form()), file=out)


def cmd_load_3d(args, out):
    records = classify.load_classification_3d(args.file)
    if args.tally_cayley:
        tally = Counter("true" if r.is_cayley else "false" for r in records)
        print(" ".join(f"{k}:{tally[k]}" for k in sorted(tally)), file=out)
    else:
        print(json.dumps([
            dict(polytope_to_dict(r.polytope), lattice_points=r.lattice_point_count,
                 smooth=r.is_smooth, cayley=r.is_cayley)
            for r in records]), file=out)


def build_parser():
    parser = _Parser(prog="latpoly", description="Computations on lattice polytopes.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("smooth2d", help="enumerate smooth lattice polygons")
    p.add_argument("--max-points", type=int, default=12)
    p.add_argument("--a-cap", type=int, default=classify.DEFAULT_A_CAP)
    p.add_argument("--tally", action="store_true")
    p.set_defaults(func=cmd_smooth2d)

    p = sub.add_parser("is-cayley", help="test for a Cayley structure")
    p.add_argument("file")
    p.set_defaults(func=cmd_is_cayley)

    p = sub.add_parser("cayley-sum", help="Cayley sum of polytopes")
    p.add_argument("files", nargs="+")
    p.add_argument("--scale", type=int, default=1)
    p.set_defaults(func=cmd_cayley_sum)

    p = sub.add_parser("blowup", help="toric blow-up along a face")
    p.add_argument("file")
    p.add_argument("--face-vertices", type=_index_list, required=True)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("lattice-points", help="list lattice points")
    p.add_argument("file")
    p.set_defaults(func=cmd_lattice_points)

    p = sub.add_parser("is-smooth", help="smoothness test")
    p.add_argument("file")
    p.set_defaults(func=cmd_is_smooth)

    for name, func, help_ in (("jets", cmd_jets, "print the jet matrix"),
                              ("jet-degree", cmd_jet_degree, "degree of jet separation")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        if name == "jets":
            p.add_argument("--order", type=int, required=True)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--point")
        g.add_argument("--generic", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("epsilon", help="Seshadri constant bounds at a general point")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dcap", type=int, default=seshadri.DEFAULT_DCAP)
    p.set_defaults(func=cmd_epsilon)

    p = sub.add_parser("gauss", help="image or fiber of the order-k Gauss map")
    p.add_argument("file")
    p.add_argument("--order", type=int, default=1)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--image", action="store_true")
    g.add_argument("--fiber", action="store_true")
    p.add_argument("--json", action="store_true", help="print exponent vectors as JSON")
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("normal-form", help="unimodular normal form")
    p.add_argument("file")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("load-3d", help="load a 3D smooth classification file")
    p.add_argument("file")
    p.add_argument("--tally-cayley", action="store_true")
    p.set_defaults(func=cmd_load_3d)
    return parser


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except LatPolyError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
