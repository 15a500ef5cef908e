"""Command line interface.

    equistrat lattice   <spec> [--format json|md|dot] [--out DIR]
    equistrat equivariants <spec> [--degree D] ...
    equistrat analyze   <spec> [--seed N] [--samples N] ...
    equistrat probe     <spec> [--seed N] [--samples N] ...

<spec> is a spec file path or builtin:<name>.  Options in the spec file are
defaults; command line flags win.  EQUISTRAT_THREADS caps the BLAS thread
pools.  Exit codes: 0 success, 1 bad input, 2 computation failure, 3 probe
found mismatches.
"""

from __future__ import annotations

import argparse
import json
import os
import sys


def _apply_thread_cap() -> None:
    cap = os.environ.get("EQUISTRAT_THREADS")
    if not cap:
        return
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS",
                "MKL_NUM_THREADS", "NUMEXPR_NUM_THREADS"):
        os.environ.setdefault(var, cap)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equistrat",
        description="equivariant zero-set stratification toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd, desc in (
        ("lattice", "isotropy lattice with indices"),
        ("equivariants", "homogeneous equivariant generator basis"),
        ("analyze", "zero-set structure prediction"),
        ("probe", "numeric zero-branch verification"),
    ):
        p = sub.add_parser(cmd, help=desc)
        p.add_argument("spec", help="spec file path or builtin:<name>")
        p.add_argument("--degree", type=int, default=None,
                       help="polynomial degree (equivariants) or cap (analyze)")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--samples", type=int, default=None,
                       help="coefficient samples (analyze) or draws (probe)")
        p.add_argument("--out", default=None, help="directory for output files")
        p.add_argument("--format", default=None, choices=["json", "md", "dot"])
    return parser


def _load(spec_arg: str):
    from .problems import load_builtin
    from .specfile import load_spec
    if spec_arg.startswith("builtin:"):
        return load_builtin(spec_arg[len("builtin:"):])
    return load_spec(spec_arg)


def _emit(text: str, out_dir: str | None, filename: str) -> None:
    if out_dir is None:
        sys.stdout.write(text)
    else:
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, filename)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {path}")


def _cmd_lattice(problem, args) -> int:
    from .isotropy import build_lattice, lattice_table, lattice_to_dot
    lattice = build_lattice(problem.v, problem.w)
    fmt = args.format or "md"
    if fmt == "dot":
        _emit(lattice_to_dot(lattice), args.out, "lattice.dot")
    elif fmt == "json":
        rows = [{"name": n.name, "order": n.subgroup.order,
                 "dim_fix_V": n.dim_fix_v, "dim_fix_W": n.dim_fix_w,
                 "index_s": n.index_s, "maximal": n.is_maximal}
                for n in lattice.nodes]
        _emit(json.dumps(rows, sort_keys=True, indent=2) + "\n",
              args.out, "lattice.json")
    else:
        _emit(lattice_table(lattice), args.out, "lattice.md")
    return 0


def _cmd_equivariants(problem, args) -> int:
    from .equivariants import (basis_to_text, equivariant_basis,
                               equivariant_dimension, lowest_degree,
                               module_generator_dimension)
    d = args.degree
    if d is None:
        d = lowest_degree(problem.v, problem.w,
                          problem.options.get("degree_max", 5))
    dim = equivariant_dimension(problem.v, problem.w, d)
    if dim == 0:
        payload = {"degree": d, "dim": 0, "new_generators": 0, "maps": []}
        if (args.format or "md") == "json":
            _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n",
                  args.out, f"equivariants_d{d}.json")
        else:
            _emit(f"# degree {d}: none (trace-formula dimension 0)\n",
                  args.out, f"equivariants_d{d}.md")
        return 0
    basis = equivariant_basis(problem.v, problem.w, d)
    new_gens = module_generator_dimension(problem.v, problem.w, d)
    fmt = args.format or "md"
    if fmt == "json":
        payload = {
            "degree": d,
            "dim": basis.dim,
            "new_generators": new_gens,
            "maps": [f.coeffs.tolist() for f in basis.maps],
            "monomial_order": "graded colex over variable combinations",
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n",
              args.out, f"equivariants_d{d}.json")
    else:
        header = (f"# module generators new at degree {d}: {new_gens}\n")
        _emit(header + basis_to_text(basis), args.out, f"equivariants_d{d}.md")
    return 0


def _options_for_analyze(problem, args):
    from .analysis import AnalyzeOptions
    opts = AnalyzeOptions()
    opts.seed = problem.options.get("seed", opts.seed)
    opts.degree_max = problem.options.get("degree_max", opts.degree_max)
    opts.n_samples = problem.options.get("samples", opts.n_samples)
    opts.n_starts = problem.options.get("starts", opts.n_starts)
    if args.seed is not None:
        opts.seed = args.seed
    if args.degree is not None:
        opts.degree_max = args.degree
    if args.samples is not None:
        opts.n_samples = args.samples
    return opts


def _cmd_analyze(problem, args) -> int:
    from .analysis import analyze
    report = analyze(problem.v, problem.w, _options_for_analyze(problem, args))
    fmt = args.format or "json"
    if fmt == "md":
        _emit(report.to_markdown(), args.out, "analysis.md")
    else:
        _emit(report.to_json(), args.out, "analysis.json")
    return 0


def _cmd_probe(problem, args) -> int:
    from .probe import ProbeOptions, probe_to_csv, verify_predictions
    opts = ProbeOptions()
    opts.seed = problem.options.get("seed", opts.seed)
    opts.n_draws = problem.options.get("draws", opts.n_draws)
    opts.n_starts = problem.options.get("starts", opts.n_starts)
    if args.seed is not None:
        opts.seed = args.seed
    if args.samples is not None:
        opts.n_draws = args.samples
    result = verify_predictions(problem.v, problem.w, opts=opts)
    summary = {
        "draws": opts.n_draws,
        "failed": result.n_failed,
        "flagged": result.n_flagged,
        "passed": result.passed,
    }
    if args.format == "md":
        lines = ["# Probe summary", ""]
        lines += [f"- {k}: {v}" for k, v in summary.items()]
        _emit("\n".join(lines) + "\n", args.out, "probe.md")
    else:
        _emit(json.dumps(summary, sort_keys=True, indent=2) + "\n",
              args.out, "probe.json")
    if args.out is not None:
        _emit(probe_to_csv(result), args.out, "probe.csv")
    return 0 if result.passed else 3


def main(argv: list[str] | None = None) -> int:
    _apply_thread_cap()
    args = _build_parser().parse_args(argv)
    from .errors import EquistratError, SpecError
    try:
        problem = _load(args.spec)
    except (SpecError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    handlers = {
        "lattice": _cmd_lattice,
        "equivariants": _cmd_equivariants,
        "analyze": _cmd_analyze,
        "probe": _cmd_probe,
    }
    try:
        return handlers[args.command](problem, args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EquistratError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
