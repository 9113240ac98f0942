"""Command-line harness: single runs, timing tables, group comparisons.

Subcommands:

* ``run``      one optimizer run with progress lines every 10 generations
* ``bench``    timing table for one entropy backend over several sample sizes
* ``compare``  two run groups reduced to scalars and tested against each other
* ``selftest`` quick invariant checks of the numerical machinery
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .de import DEConfig
from .harness import (FORMATS, METRICS, SAMPLE_SIZES, ExperimentConfig,
                      compare_groups, run_group, timing_table)
from .objectives import OBJECTIVE_NAMES, make_objective
from .report import emit_results
from .rng import SOURCE_KINDS, make_source
from .stats import ACCEPTANCE_REGION, DegenerateDataError


def _format_solution(x) -> str:
    return "[" + " ".join(f"{v:.6f}" for v in x) + "]"


def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--function", default="rastrigin", choices=OBJECTIVE_NAMES,
                   help="objective to minimize")
    p.add_argument("--rng", default="classical", choices=SOURCE_KINDS,
                   help="entropy backend")
    p.add_argument("--dim", type=int, default=3, help="solution dimension")
    p.add_argument("--pop-size", type=int, default=50, help="population size")
    p.add_argument("--weight-f", type=float, default=0.5,
                   help="mutation weight on the donor difference")
    p.add_argument("--cr", type=float, default=0.7, help="crossover rate")
    p.add_argument("--max-gen", type=int, default=200,
                   help="number of generations")
    p.add_argument("--mode", default="classic", choices=("classic", "paper"),
                   help="update scheme: classic = full rand/1/bin sweep per "
                        "generation; paper = one mutant per generation "
                        "replacing its base vector")
    p.add_argument("--seed", type=int, default=0, help="base seed")
    p.add_argument("--bits", type=int, default=32,
                   help="bits per uniform sample (qsim backend)")
    p.add_argument("--epsilon", type=float, default=1e-4,
                   help="convergence tolerance on best error")


def _add_output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=None,
                   help="directory for result files (omit to print only)")
    p.add_argument("--format", default=",".join(FORMATS),
                   help=f"comma-separated subset of {','.join(FORMATS)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdebench",
        description="Differential-evolution benchmarks with interchangeable "
                    "classical and quantum-simulated random sources.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute one optimizer run")
    _add_run_options(p_run)
    _add_output_options(p_run)

    p_bench = sub.add_parser("bench", help="time the sampling operation")
    p_bench.add_argument("--rng", default="classical", choices=SOURCE_KINDS)
    p_bench.add_argument("--sizes", default=",".join(map(str, SAMPLE_SIZES)),
                         help="comma-separated sample sizes")
    p_bench.add_argument("--repeats", type=int, default=3,
                         help="timed trials per sample size")
    p_bench.add_argument("--dim", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--bits", type=int, default=32)
    _add_output_options(p_bench)

    p_cmp = sub.add_parser("compare", help="compare two run groups")
    _add_run_options(p_cmp)
    p_cmp.add_argument("--function2", default=None, choices=OBJECTIVE_NAMES,
                       help="group 2 objective (default: same as group 1)")
    p_cmp.add_argument("--rng2", default=None, choices=SOURCE_KINDS,
                       help="group 2 backend (default: the other backend)")
    p_cmp.add_argument("--seed2", type=int, default=None,
                       help="group 2 base seed (default: --seed)")
    p_cmp.add_argument("--runs", type=int, default=7, help="runs per group")
    p_cmp.add_argument("--metric", default="generations_to_epsilon",
                       choices=METRICS, help="per-run comparison scalar")
    _add_output_options(p_cmp)

    sub.add_parser("selftest", help="run quick invariant checks")
    return parser


def _parse_formats(spec: str) -> tuple[str, ...]:
    formats = tuple(s.strip() for s in spec.split(",") if s.strip())
    unknown = set(formats) - set(FORMATS)
    if unknown:
        raise ValueError(f"unknown formats {sorted(unknown)}; "
                         f"expected a subset of {FORMATS}")
    return formats


def _de_config(args) -> DEConfig:
    return DEConfig(dim=args.dim, pop_size=args.pop_size, F=args.weight_f,
                    cr=args.cr, max_gen=args.max_gen, mode=args.mode,
                    epsilon=args.epsilon)


def cmd_run(args) -> int:
    cfg = _de_config(args)
    f = make_objective(args.function, cfg.dim)
    source = make_source(args.rng, args.seed, bits_per_sample=args.bits)

    def progress(record):
        if record.generation % 10 == 0:
            print(f"Generation = {record.generation} | "
                  f"best error = {record.best_error:.4f} | "
                  f"best_soln = {_format_solution(record.best_solution)}")

    from .de import run as de_run
    trace = de_run(cfg, f, source, progress=progress)
    best = trace.final_best
    print(f"Final best error = {best.best_error:.4f} "
          f"best_soln = {_format_solution(best.best_solution)}")
    if trace.convergence_point is not None:
        g, i = trace.convergence_point
        print(f"Convergence point (generation, index): ({g},{i})")
    else:
        print(f"No generation reached epsilon = {cfg.epsilon}")

    if args.out is not None:
        label = f"{args.function}-{args.rng}"
        written = emit_results(args.out, _parse_formats(args.format),
                               traces_by_label={label: [trace]})
        for path in written:
            print(f"wrote {path}")
    return 0


def cmd_bench(args) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(","))
    records = timing_table(args.rng, sample_sizes=sizes, repeats=args.repeats,
                           dim=args.dim, seed=args.seed,
                           bits_per_sample=args.bits)
    print(f"backend: {args.rng} (seconds per {args.dim}-dim sample batch, "
          f"{args.repeats} trials)")
    print(" ".join(f"{'size ' + str(s):>22}" for s in sizes))
    for trial in range(args.repeats):
        row = [r.seconds for r in records if r.trial == trial]
        print(" ".join(f"{s:>22.9f}" for s in row))

    if args.out is not None:
        written = emit_results(args.out, _parse_formats(args.format),
                               timings=records)
        for path in written:
            print(f"wrote {path}")
    return 0


def cmd_compare(args) -> int:
    de_cfg = _de_config(args)
    cfg1 = ExperimentConfig(objective=args.function, rng_kind=args.rng,
                            de=de_cfg, runs_per_group=args.runs,
                            base_seed=args.seed, bits_per_sample=args.bits)
    rng2 = args.rng2
    if rng2 is None:  # default: compare against the other backend
        rng2 = "classical" if args.rng == "qsim" else "qsim"
    cfg2 = ExperimentConfig(objective=args.function2 or args.function,
                            rng_kind=rng2, de=de_cfg,
                            runs_per_group=args.runs,
                            base_seed=args.seed if args.seed2 is None
                            else args.seed2,
                            bits_per_sample=args.bits)

    traces1 = run_group(cfg1)
    traces2 = run_group(cfg2)
    report = compare_groups(traces1, traces2, metric=args.metric,
                            label1=cfg1.label(), label2=cfg2.label())
    u = report.utest
    print(f"group1: {report.label1}  group2: {report.label2}  "
          f"metric: {report.metric}")
    print(f"values1: {report.values1}")
    print(f"values2: {report.values2}")
    print(f"U1 = {u.U1:g}  U2 = {u.U2:g}  mu = {u.mu:g}  sigma = {u.sigma:.4f}")
    print(f"Z = {u.Z:.4f}  p (two-tailed) = {u.p_two_tailed:.5f}")
    print(f"Z acceptance region (95%): [{ACCEPTANCE_REGION[0]}, "
          f"{ACCEPTANCE_REGION[1]}]")
    print(f"standardized effect = {u.r_effect:.4f}  "
          f"common-language effect = {u.cl_effect:.4f}")

    if args.out is not None:
        written = emit_results(
            args.out, _parse_formats(args.format),
            traces_by_label={report.label1: traces1, report.label2: traces2},
            comparison=report)
        for path in written:
            print(f"wrote {path}")
    return 0


def cmd_selftest(args) -> int:
    import numpy as np

    from . import qsim
    from .de import run as de_run
    from .objectives import rastrigin, rosenbrock
    from .rng import ClassicalSource
    from .stats import run_utest, two_tailed_p, z_with_continuity

    checks: list[tuple[str, bool]] = []

    def check(name, fn):
        try:
            checks.append((name, bool(fn())))
        except Exception:
            checks.append((name, False))

    check("classical stream matches pinned first word",
          lambda: ClassicalSource(42)._gen.next_u32() == 0xA15C02B7)
    check("uniforms stay in [0, 1)",
          lambda: all(0.0 <= ClassicalSource(7).next_uniform() < 1.0
                      for _ in range(100)))

    def involution():
        reg = qsim.init_register(3)
        for q in range(3):
            qsim.apply_hadamard(reg, q)
        before = reg.amplitudes.copy()
        qsim.apply_hadamard(qsim.apply_hadamard(reg, 1), 1)
        return np.allclose(reg.amplitudes, before, atol=1e-12)

    check("Hadamard applied twice is the identity", involution)

    def superposition():
        reg = qsim.init_register(6)
        for q in range(6):
            qsim.apply_hadamard(reg, q)
        return np.allclose(reg.amplitudes, 2 ** -3.0, atol=1e-12)

    check("H on every qubit gives the uniform superposition", superposition)
    check("objective minima evaluate to zero",
          lambda: rastrigin([0, 0, 0]) == 0.0 and rosenbrock([1, 1, 1]) == 0.0)

    def u_identity():
        res = run_utest([1.0, 2.0, 3.0], [4.0, 5.0, 6.0, 7.0])
        return res.U1 + res.U2 == 12.0

    check("U statistics sum to n1*n2", u_identity)
    check("pinned Z and p fixtures reproduce",
          lambda: abs(z_with_continuity(10, 24.5, 7.766) + 1.8028) < 5e-4
          and abs(two_tailed_p(-1.8028) - 0.07142) < 1e-4)

    def elitism():
        cfg = DEConfig(max_gen=30)
        trace = de_run(cfg, make_objective("rastrigin", 3), ClassicalSource(3))
        errs = [r.best_error for r in trace.records]
        return all(b <= a for a, b in zip(errs, errs[1:]))

    check("generational best error never increases", elitism)

    failed = 0
    for name, ok in checks:
        print(("ok   - " if ok else "FAIL - ") + name)
        failed += 0 if ok else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"run": cmd_run, "bench": cmd_bench,
                "compare": cmd_compare, "selftest": cmd_selftest}
    try:
        return handlers[args.command](args)
    except DegenerateDataError as e:
        print(f"degenerate comparison: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
