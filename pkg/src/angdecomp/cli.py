"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 transform domain error (divergent / not integrable).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from angdecomp.decomposition import all_components, component
from angdecomp.errors import DomainError, TransformDomainError, ValidationError
from angdecomp.fourier import (
    derivative_identity_delta,
    derivative_identity_onebyr,
    fourier_transform,
)
from angdecomp.oracle import DEFAULT_SEED
from angdecomp import render, verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TRANSFORM_DOMAIN = 3

FORMATS = ("text", "json", "latex")


class UsageError(Exception):
    pass


def cmd_decompose(rank: int, ell: int | None = None, fmt: str = "text",
                  expand: bool = False, with_counts: bool = False) -> str:
    if rank < 0:
        raise UsageError(f"--rank must be >= 0 (got {rank})")
    if ell is not None:
        if ell < 0 or ell > rank or (rank - ell) % 2:
            raise UsageError(f"--ell must satisfy 0 <= ell <= rank with rank - ell even "
                             f"(got rank={rank}, ell={ell})")
        pairs = [(ell, component(rank, ell))]
    else:
        pairs = all_components(rank)
    if expand and (fmt != "latex" or rank > render.EXPAND_MAX_RANK):
        raise UsageError(f"--expand needs --format latex and rank <= {render.EXPAND_MAX_RANK}")
    if fmt == "json":
        comps = [render.RenderedComponent.from_combo(e, c) for e, c in pairs]
        return render.decompose_json(rank, comps, with_counts)
    if fmt == "latex":
        return "\n".join(render.component_latex(e, c, expand) for e, c in pairs)
    return "\n".join(render.component_text(e, c) for e, c in pairs)


def cmd_transform(power: int, rank: int, fmt: str = "text") -> str:
    if rank < 0:
        raise UsageError(f"--rank must be >= 0 (got {rank})")
    result = fourier_transform(power, rank)
    if fmt == "json":
        return render.transform_json(result)
    if fmt == "latex":
        return render.transform_latex(result)
    return render.transform_text(result)


def cmd_identity(kind: str, k: int, fmt: str = "text") -> str:
    if k < 1:
        raise UsageError(f"--k must be >= 1 (got {k})")
    ident = derivative_identity_onebyr(k) if kind == "onebyr" else derivative_identity_delta(k)
    if fmt == "json":
        return render.identity_json(ident)
    if fmt == "latex":
        return render.identity_latex(ident)
    return render.identity_text(ident)


def cmd_verify(suite: str, max_rank: int, seed: int = DEFAULT_SEED, tol: float = 1e-10,
               fmt: str = "json") -> tuple[str, bool]:
    if max_rank < 0:
        raise UsageError(f"--max-rank must be >= 0 (got {max_rank})")
    if not tol > 0:
        raise UsageError(f"--tol must be positive (got {tol})")
    report = verify.run(suite, max_rank, seed, tol)
    if fmt == "json":
        return json.dumps(report, indent=2), report["passed"]
    lines = []
    for s in report["suites"]:
        lines.append(f"[{s['name']}] {'PASS' if s['passed'] else 'FAIL'} ({s['seconds']} s)")
        for c in s["checks"]:
            lines.append(f"  {'PASS' if c['passed'] else 'FAIL'}  {c['name']}  "
                         f"error={c['error']:.3g} bound={c['bound']:.3g}")
    lines.append(f"overall: {'PASS' if report['passed'] else 'FAIL'} (seed {seed})")
    return "\n".join(lines), report["passed"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="angdecomp",
        description="Angular-momentum decomposition of unit-vector tensor powers "
                    "and Fourier transforms of p^n times them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="components (p^...p^)_ell of the rank-L monomial")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--expand", action="store_true",
                   help=f"write every term in LaTeX (rank <= {render.EXPAND_MAX_RANK})")
    p.add_argument("--with-counts", action="store_true", help="add term_counts to JSON output")

    p = sub.add_parser("transform", help="3D Fourier transform of p^n p^_{i1}...p^_{iL}")
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser(
        "identity", help="traceless derivative identities",
        epilog="For k=2 the full identity at the origin adds -(4 pi/3) delta_ij delta3(r) "
               "to the onebyr result; it follows from the rank-2 transform of 1/p^2.")
    p.add_argument("--kind", choices=("onebyr", "delta"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), required=True)
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "decompose":
            out = cmd_decompose(args.rank, args.ell, args.format, args.expand, args.with_counts)
        elif args.command == "transform":
            out = cmd_transform(args.power, args.rank, args.format)
        elif args.command == "identity":
            out = cmd_identity(args.kind, args.k, args.format)
        else:
            out, passed = cmd_verify(args.suite, args.max_rank, args.seed, args.tol, args.format)
            print(out)
            return EXIT_OK if passed else EXIT_VERIFY_FAILED
    except TransformDomainError as exc:
        print(f"angdecomp: {exc}", file=sys.stderr)
        return EXIT_TRANSFORM_DOMAIN
    except (UsageError, DomainError, ValidationError) as exc:
        print(f"angdecomp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
