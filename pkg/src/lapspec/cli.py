"""``lapspec`` command line.

Exit codes: 0 pass, 1 violation or falsification, 2 usage or bad input,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    ExactOverflow,
    GraphError,
    InvariantViolation,
    LapspecError,
    NoConvergence,
    NotAnEigenvalue,
    OutsidePolygon,
    ParseError,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


def _cmd_spectrum(args) -> int:
    from .io import read_matrix, spectrum_json
    from .laplacian import make_standardized
    from .linalg import eigenvalues

    m = read_matrix(args.matrix)
    if args.validate:
        make_standardized(m, provenance=args.matrix)
    spec = eigenvalues(m)
    if args.json:
        print(spectrum_json(spec))
    else:
        for z, r, c in zip(spec.eigenvalues, spec.residuals, spec.clusters):
            print(f"{z.real: .12f} {z.imag:+.12f}i  residual={r:.2e}  cluster={c}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .explorer import run_verify_suite

    rep = run_verify_suite(args.input, exact=args.exact)
    print(json.dumps(rep.to_dict(), indent=2) if args.json else rep.summary())
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def _cmd_region(args) -> int:
    from .explorer import emit_figure
    from .region import region_r, region_r_is_hexagon

    reg = region_r(args.n)
    print(f"n={args.n} disk centers={reg.centers} radius={reg.radius:.12f} "
          f"half_angle={reg.half_angle:.12f} band={reg.band:.12f} hexagon={region_r_is_hexagon(args.n)}")
    if args.svg:
        emit_figure(args.kind, args.n, args.svg, samples=args.samples)
        print(f"wrote {args.svg}")
    return EXIT_OK


def _cmd_polygon(args) -> int:
    from .region import polygon_s, z_bounds

    poly = polygon_s(args.n)
    zb = z_bounds(args.n)
    if args.json:
        print(json.dumps({
            "n": args.n,
            "vertices": [{"k": k, "re": z.real, "im": z.imag} for k, z in enumerate(poly.upper)],
            "z_bounds": {"band": zb.band, "vertex_max": zb.vertex_max, "z_exact": zb.z_exact},
        }, indent=2))
    else:
        for k, z in enumerate(poly.upper):
            print(f"lambda_{k} = {z.real:.15f} {z.imag:+.15f}i")
        print(f"band={zb.band:.15f} vertex_max={zb.vertex_max:.15f}"
              + (f" z={zb.z_exact:.15f}" if zb.z_exact is not None else " z=unknown (even n)"))
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    from .explorer import TrialConfig, run_conjecture

    cfg = TrialConfig(n=args.n, trials=args.trials, seed=args.seed, density=args.density,
                      mode=args.mode)
    rep = run_conjecture(cfg, threads=args.threads, out_dir=args.violations_dir)
    text = rep.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"n={cfg.n} trials={cfg.trials} eigenvalues={rep.eigenvalues_tested} "
          f"violations={rep.violation_count} region_r_failures={rep.region_r_failures} "
          f"no_convergence={rep.no_convergence} runtime={rep.runtime:.1f}s", file=sys.stderr)
    if not rep.clean:
        return EXIT_VIOLATION
    return EXIT_NUMERIC if rep.no_convergence else EXIT_OK


def _cmd_witness(args) -> int:
    from .io import format_matrix
    from .region import witness_matrix

    w = witness_matrix(args.n, complex(args.re, args.im))
    print(f"# k={w.k} weights(0, L_k, L_k+1)=({w.a:.15g}, {w.b:.15g}, {w.c:.15g}) "
          f"conjugated={w.conjugated} residual={w.residual:.2e}")
    sys.stdout.write(format_matrix(w.matrix))
    return EXIT_OK


def _cmd_cycloid(args) -> int:
    from .explorer import emit_figure
    from .region import cycloid_gap

    print(f"n={args.n} cycloid_gap={cycloid_gap(args.n):.6e}")
    if args.svg:
        emit_figure("cycloid", args.n, args.svg)
        print(f"wrote {args.svg}")
    return EXIT_OK


def _order(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be >= 2, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lapspec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="eigenvalues of a matrix CSV")
    s.add_argument("matrix")
    s.add_argument("--json", action="store_true")
    s.add_argument("--no-validate", dest="validate", action="store_false",
                   help="accept matrices that are not standardized Laplacians")
    s.set_defaults(func=_cmd_spectrum)

    s = sub.add_parser("verify", help="run every verifier on a digraph TSV or matrix CSV")
    s.add_argument("input")
    s.add_argument("--exact", action="store_true", help="rational arithmetic where possible")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("region", help="region R constants and figure")
    s.add_argument("--n", type=_order, required=True)
    s.add_argument("--svg")
    s.add_argument("--kind", choices=("region", "polygon", "overlay"), default="region")
    s.add_argument("--samples", type=int)
    s.set_defaults(func=_cmd_region)

    s = sub.add_parser("polygon", help="vertices of the polygon S")
    s.add_argument("--n", type=_order, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_polygon)

    s = sub.add_parser("conjecture", help="random search for eigenvalues outside S")
    s.add_argument("--n", type=_order, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--density", type=float, default=1.0)
    s.add_argument("--mode", choices=("dense-uniform", "sparse-digraph"), default=None,
                   help="default: dense-uniform, or sparse-digraph when --density < 1")
    s.add_argument("--out")
    s.add_argument("--threads", type=int)
    s.add_argument("--violations-dir", default="lapspec_violations")
    s.set_defaults(func=_cmd_conjecture)

    s = sub.add_parser("witness", help="a matrix with a prescribed eigenvalue in S")
    s.add_argument("--n", type=_order, required=True)
    s.add_argument("--re", type=float, required=True)
    s.add_argument("--im", type=float, required=True)
    s.set_defaults(func=_cmd_witness)

    s = sub.add_parser("cycloid", help="distance of S to the limit cycloid, and figure")
    s.add_argument("--n", type=_order, required=True)
    s.add_argument("--svg")
    s.set_defaults(func=_cmd_cycloid)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "mode", "unset") is None:
        args.mode = "dense-uniform" if args.density >= 1.0 else "sparse-digraph"
    try:
        return args.func(args)
    except OutsidePolygon as exc:
        print(f"lapspec: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (NoConvergence, NotAnEigenvalue, ExactOverflow) as exc:
        print(f"lapspec: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ParseError, GraphError, InvariantViolation, ValueError, OSError) as exc:
        print(f"lapspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LapspecError as exc:
        print(f"lapspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
