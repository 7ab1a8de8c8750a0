"""Command line interface.

Subcommands: ``bound`` (eigenvalue bounds for a split Hermitian matrix),
``svbound`` (singular value bounds for a 2x2-blocked rectangular
matrix), ``fuzz`` (oracle harness), ``certify`` (a-posteriori Ritz
bounds for a matrix + subspace pair) and ``lanczos-demo`` (end-to-end
demonstration on a diagonal matrix with detached extreme eigenvalues).

Exit codes: 0 success, 1 fuzz found a bound violation, 2 input or usage
error.  Randomness is controlled by ``--seed``, falling back to the
SPECBOUND_SEED environment variable, then 0.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import report as report_mod
from .bounds import eigen_bound_report, split_hermitian, sv_bound_report
from .certification import CertificationError, certify
from .fuzz import run_fuzz
from .krylov import lanczos, ritz_subspace
from .linalg import JacobiConvergenceError, hermitianize
from .mmio import read_matrix_market


def _add_common(sub):
    sub.add_argument("--format", choices=("table", "csv", "json"),
                     default="table", help="report rendering (default table)")
    sub.add_argument("--seed", type=int, default=None,
                     help="random seed (default: $SPECBOUND_SEED or 0)")
    sub.add_argument("--no-timestamp", action="store_true",
                     help="omit the timestamp for reproducible output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specbound",
        description="Gap-aware eigenvalue/singular-value perturbation "
                    "bounds and Ritz value certification.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("bound", help="eigenvalue bounds for a block split")
    p.add_argument("--matrix", required=True, help="Hermitian .mtx file")
    p.add_argument("--split", type=int, required=True,
                   help="first SPLIT rows/columns form the leading block")
    p.add_argument("--oracle", action="store_true",
                   help="also eigensolve the full matrix and record "
                        "observed shifts")
    _add_common(p)

    p = subs.add_parser("svbound",
                        help="singular value bounds for a 2x2 block split")
    p.add_argument("--matrix", required=True, help=".mtx file (rectangular)")
    p.add_argument("--row-split", type=int, required=True,
                   help="rows in the top blocks")
    p.add_argument("--col-split", type=int, required=True,
                   help="columns in the left blocks")
    p.add_argument("--oracle", action="store_true")
    _add_common(p)

    p = subs.add_parser("fuzz", help="run the oracle fuzz harness")
    p.add_argument("--trials", type=int, default=10_000,
                   help="eigenvalue-family trials; the singular value and "
                        "one-sided families run trials/2 and trials/10")
    p.add_argument("--max-dim", type=int, default=12,
                   help="assembled dimension cap for the eigenvalue family")
    _add_common(p)

    p = subs.add_parser("certify",
                        help="certify Ritz values of a subspace")
    p.add_argument("--matrix", required=True, help="Hermitian .mtx file")
    p.add_argument("--subspace", required=True,
                   help=".mtx file with orthonormal basis columns")
    p.add_argument("--oracle", action="store_true")
    _add_common(p)

    p = subs.add_parser("lanczos-demo",
                        help="Lanczos + certification on a diagonal demo "
                             "matrix with separated extreme eigenvalues")
    p.add_argument("--dim", type=int, default=100)
    p.add_argument("--steps", type=int, default=15)
    p.add_argument("--select", type=int, default=2,
                   help="how many extreme Ritz values to compare against "
                        "the interior (default 2)")
    p.add_argument("--oracle", action="store_true")
    _add_common(p)

    return parser


def _seed_of(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SPECBOUND_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"SPECBOUND_SEED={env!r} is not an integer")
    return 0


def _emit(doc, fmt, out):
    out.write(report_mod.render(doc, fmt))


def _cmd_bound(args, out) -> int:
    a = hermitianize(read_matrix_market(args.matrix), strict=True)
    rep = eigen_bound_report(split_hermitian(a, args.split),
                             run_oracle=args.oracle)
    _emit(report_mod.document(rep, source=args.matrix,
                              timestamp=not args.no_timestamp),
          args.format, out)
    return 0


def _cmd_svbound(args, out) -> int:
    b = np.asarray(read_matrix_market(args.matrix))
    rows, cols = b.shape
    m, k = args.row_split, args.col_split
    if not (1 <= m < rows and 1 <= k < cols):
        raise ValueError(
            f"splits must satisfy 1 <= row-split < {rows} and "
            f"1 <= col-split < {cols}")
    rep = sv_bound_report(b[:m, :k], b[:m, k:], b[m:, :k], b[m:, k:],
                          run_oracle=args.oracle)
    _emit(report_mod.document(rep, source=args.matrix,
                              timestamp=not args.no_timestamp),
          args.format, out)
    return 0


def _cmd_fuzz(args, out) -> int:
    res = run_fuzz(trials=args.trials, max_dim=args.max_dim,
                   seed=_seed_of(args))
    _emit(report_mod.document(res, seed=res.seed,
                              timestamp=not args.no_timestamp),
          args.format, out)
    return 0 if res.ok else 1


def _cmd_certify(args, out) -> int:
    a = hermitianize(read_matrix_market(args.matrix), strict=True)
    x1 = np.asarray(read_matrix_market(args.subspace))
    rep = certify(a, x1, run_oracle=args.oracle)
    _emit(report_mod.document(rep, source=args.matrix,
                              timestamp=not args.no_timestamp),
          args.format, out)
    return 0


def demo_matrix(dim: int) -> np.ndarray:
    """Diagonal demo matrix: eigenvalues 0 and ``dim`` at the edges and
    the rest evenly spread over the middle 40% of [0, dim].  The wide
    edge gaps make a short Lanczos run converge the extreme Ritz pairs
    far ahead of the interior ones — the regime where per-column
    certificates beat the whole-residual one."""
    if dim < 2:
        raise ValueError("demo needs dim >= 2")
    interior = np.linspace(0.3 * dim, 0.7 * dim, dim - 2)
    return np.diag(np.concatenate([[0.0], interior, [float(dim)]]))


def _cmd_lanczos_demo(args, out) -> int:
    if not 2 <= args.steps < args.dim:
        raise ValueError("demo needs 2 <= steps < dim")
    if not 1 <= args.select <= args.steps:
        raise ValueError("select must lie in [1, steps]")
    seed = _seed_of(args)
    a = demo_matrix(args.dim)
    state = lanczos(a, args.steps, seed=seed)
    sub = ritz_subspace(state, state.steps)
    rep = certify(sub.a, sub.x1, run_oracle=args.oracle)

    hi = (args.select + 1) // 2
    lo = args.select - hi
    extreme = list(range(hi)) + list(range(rep.m - lo, rep.m))
    interior = [i for i in range(rep.m) if i not in extreme]
    doc = report_mod.document(rep, seed=seed,
                              timestamp=not args.no_timestamp)
    demo = {
        "steps": state.steps,
        "extreme_count": len(extreme),
        "extreme_max_bound": float(
            np.max(rep.per_column_bounds[extreme])),
        "residual_norm": float(rep.residual_norm),
    }
    if interior:
        demo["interior_median_bound"] = float(
            np.median(rep.per_column_bounds[interior]))
        demo["interior_extreme_ratio"] = (
            demo["interior_median_bound"] / demo["extreme_max_bound"]
            if demo["extreme_max_bound"] > 0 else float("inf"))
    doc["summary"].update(demo)
    _emit(doc, args.format, out)
    return 0


_COMMANDS = {
    "bound": _cmd_bound,
    "svbound": _cmd_svbound,
    "fuzz": _cmd_fuzz,
    "certify": _cmd_certify,
    "lanczos-demo": _cmd_lanczos_demo,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except (OSError, ValueError, JacobiConvergenceError,
            CertificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
