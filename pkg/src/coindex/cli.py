"""``coindex`` command line.

Scalar results go to stdout with six decimals; tables and fields go to CSV
files. Exit status is 0 on success, 1 on usage errors and 2 on data errors.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys

import numpy as np

from . import geometry, joint_stats, mfields, multiway, set_core
from .io import (
    DataError,
    read_collection,
    read_env,
    read_function,
    read_matrix,
    read_pairs,
    read_pgm,
    read_points,
    write_pgm,
    write_rows,
)
from .set_core import SimilarityError

USAGE_ERROR = 1
DATA_ERROR = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n\n{self.format_help()}")


def threads() -> int | None:
    """Worker cap from ``COINDEX_THREADS`` (0 or unset means automatic)."""
    raw = os.environ.get("COINDEX_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"COINDEX_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise UsageError("COINDEX_THREADS must be >= 0")
    return n or os.cpu_count()


def fmt(value: float) -> str:
    return f"{value:.6f}"


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


# -- subcommands -----------------------------------------------------------

_SET_KINDS = {
    "jaccard": set_core.jaccard,
    "distance": set_core.jaccard_distance,
    "interiority": set_core.interiority,
    "coincidence": set_core.coincidence,
    "multiset": set_core.multiset_jaccard,
    "additive": set_core.additive_multiset_jaccard,
}


def _cmd_index(args, out):
    if args.kind == "matrix":
        value = set_core.matrix_jaccard(read_matrix(args.a), read_matrix(args.b))
    else:
        ka, a = read_collection(args.a)
        kb, b = read_collection(args.b)
        if args.kind == "weighted":
            if ka != "weighted" or kb != "weighted":
                raise DataError(args.a if ka != "weighted" else args.b, "weighted index needs two weighted documents")
            value = set_core.weighted_jaccard(a, b)
        elif args.kind == "power":
            value = set_core.jaccard_power(a, b, args.p)
        else:
            value = _SET_KINDS[args.kind](a, b)
    print(fmt(value), file=out)


def _cmd_expr(args, out):
    env = read_env(args.env)
    print(fmt(multiway.composite_jaccard(args.expr_a, args.expr_b, env)), file=out)


def _read_sets(paths):
    sets = []
    for p in paths:
        kind, value = read_collection(p)
        sets.append(frozenset(value) if kind == "set" else frozenset(k for k, v in value.items() if v > 0))
    return sets


def _cmd_chain(args, out):
    a, b, c = _read_sets([args.a, args.b, args.c])
    print(fmt(multiway.chaining(a, b, c, tau=args.tau)), file=out)


def _cmd_nary(args, out):
    sets = _read_sets(args.sets)
    fn = {"j3": multiway.jaccard_n, "i3": multiway.interiority_n, "c3": multiway.coincidence_n}[args.kind]
    print(fmt(fn(sets)), file=out)


def _cmd_grid(args, out):
    f = geometry.field(args.a, args.nx, args.nr, args.index)
    rows = ((x, r, f.values[i, j]) for i, r in enumerate(f.r_axis) for j, x in enumerate(f.x_axis))
    write_rows(args.out, "x,r,value", rows)


def _cmd_slices(args, out):
    xs, profiles = geometry.slices(args.a, args.b_values, args.nx, args.index)
    write_rows(args.out, "b,x,value", ((b, x, v) for b, vals in profiles for x, v in zip(xs, vals)))


def _cmd_density(args, out):
    f, g = read_function(args.f), read_function(args.g)
    print(fmt(mfields.field_jaccard(f, g)), file=out)
    if args.scatter:
        sp = mfields.scatter_pairs(f, g)
        write_rows(args.scatter, "mA,mB,region", zip(sp.m_a, sp.m_b, sp.region))


def _cmd_mconv(args, out):
    f, g = read_function(args.f), read_function(args.g)
    lo, hi = args.lags
    n = int(round((hi - lo) / f.dx)) + 1
    if n < 1:
        raise UsageError("--lags needs MIN <= MAX")
    lags = lo + f.dx * np.arange(n)
    res = mfields.mconvolution(f, g, lags, workers=threads())
    write_rows(args.out, "lag,value", zip(lags, res.samples))
    print(fmt(float(lags[int(np.argmax(res.samples))])), file=out)


def _cmd_image(args, out):
    img = read_pgm(args.pgm) if args.pgm else mfields.synthetic_image()
    noisy, j = mfields.noisy_image_experiment(img, args.amplitude, args.seed)
    if args.out:
        write_pgm(args.out, noisy)
    if args.scatter:
        sp = mfields.scatter_pairs(img, noisy)
        write_rows(args.scatter, "mA,mB,region", zip(sp.m_a, sp.m_b, sp.region))
    print(fmt(j), file=out)


def _cmd_sweep(args, out):
    rows = joint_stats.gaussian_sweep(args.rhos, args.n, args.seed, workers=threads())
    write_rows(args.out, "rho,pearson,jaccard", ((r.rho, r.pearson, r.jaccard) for r in rows))


def _cmd_corr(args, out):
    xs, ys = read_pairs(args.pairs)
    print(fmt(joint_stats.pearson(xs, ys)), fmt(joint_stats.jaccard_correlation(xs, ys)), file=out)


def _cmd_clustersep(args, out):
    a, b = read_points(args.a), read_points(args.b)
    print(fmt(mfields.cluster_separation(a, b, bandwidth=args.bandwidth)), file=out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coindex", description="Jaccard, interiority and coincidence indices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("index", help="pairwise index of two JSON collections (or CSV matrices)")
    s.add_argument("--kind", required=True, choices=[*_SET_KINDS, "power", "weighted", "matrix"])
    s.add_argument("--p", type=float, default=2.0, help="exponent for --kind power")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=_cmd_index)

    s = sub.add_parser("expr", help="Jaccard index of two set expressions")
    s.add_argument("expr_a")
    s.add_argument("expr_b")
    s.add_argument("--env", required=True, help="JSON object of named sets")
    s.set_defaults(func=_cmd_expr)

    s = sub.add_parser("chain", help="chaining index of A, B, C with B as the bridge")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("c")
    s.add_argument("--tau", type=float, default=0.0, help="minimum J(A,B) and J(B,C)")
    s.set_defaults(func=_cmd_chain)

    s = sub.add_parser("nary", help="index over three or more sets")
    s.add_argument("--kind", required=True, choices=["j3", "i3", "c3"])
    s.add_argument("sets", nargs="+")
    s.set_defaults(func=_cmd_nary)

    s = sub.add_parser("grid", help="sliding-squares index field as CSV x,r,value")
    s.add_argument("--index", default="jaccard", choices=geometry.INDEX_KINDS)
    s.add_argument("--a", type=float, default=50.0)
    s.add_argument("--nx", type=int, default=200)
    s.add_argument("--nr", type=int, default=200)
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_grid)

    s = sub.add_parser("slices", help="sliding-squares profiles as CSV b,x,value")
    s.add_argument("--index", default="jaccard", choices=geometry.INDEX_KINDS)
    s.add_argument("--a", type=float, default=50.0)
    s.add_argument("--b", dest="b_values", type=_floats, default=[10, 20, 30, 40, 50])
    s.add_argument("--nx", type=int, default=200)
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_slices)

    s = sub.add_parser("density", help="signed Jaccard index of two sampled functions")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--scatter", help="write mA,mB,region CSV")
    s.set_defaults(func=_cmd_density)

    s = sub.add_parser("mconv", help="multiset convolution over a lag range; prints the peak lag")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--lags", type=_floats, required=True, metavar="MIN,MAX", help="write as --lags=MIN,MAX when MIN < 0")
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_mconv)

    s = sub.add_parser("image", help="Jaccard index between an image and a noisy copy")
    s.add_argument("pgm", nargs="?", help="plain PGM (default: built-in synthetic image)")
    s.add_argument("--amplitude", type=float, default=0.5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="write the noisy image as PGM")
    s.add_argument("--scatter", help="write mA,mB,region CSV")
    s.set_defaults(func=_cmd_image)

    s = sub.add_parser("sweep", help="Pearson vs Jaccard correlation on correlated normals")
    s.add_argument("--rhos", type=_floats, default=[0, 0.25, 0.5, 0.75, 0.95])
    s.add_argument("--n", type=int, default=5000)
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_sweep)

    s = sub.add_parser("corr", help="Pearson and Jaccard correlation of a two-column CSV")
    s.add_argument("pairs")
    s.set_defaults(func=_cmd_corr)

    s = sub.add_parser("clustersep", help="density-overlap separation of two 2-D point clusters")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--bandwidth", type=float, default=None)
    s.set_defaults(func=_cmd_clustersep)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
        if args.command == "mconv" and len(args.lags) != 2:
            raise UsageError("--lags expects MIN,MAX")
        args.func(args, out)
    except UsageError as e:
        print(e, file=err)
        return USAGE_ERROR
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except (DataError, SimilarityError, OSError) as e:
        print(f"coindex: {e}", file=err)
        return DATA_ERROR
    except ValueError as e:
        print(f"coindex: {e}", file=err)
        return DATA_ERROR
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
