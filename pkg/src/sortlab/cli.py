"""sortlab command line: benchmark driver, exhaustive enumeration, and the
invariant suite.

    sortlab bench --algo quickmergesort --n 1024..65536 --trials 100 --seed 42
    sortlab exhaustive --algo mergeinsertion --n 8
    sortlab verify

Exit codes: 0 success, 1 configuration error, 2 invariant violation.
"""
from __future__ import annotations

import argparse
import sys

from .harness import (ALGORITHMS, ConfigError, ExperimentConfig,
                      InvariantViolation, exhaustive_stats, run_experiment,
                      write_csv)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits 2 by default; usage problems are config errors here
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def _parse_sizes(spec: str) -> list:
    """Comma list of sizes; `a..b` doubles from a to b inclusive; `2^k`
    exponents are accepted anywhere a number is."""
    def num(tok: str) -> int:
        tok = tok.strip()
        if "^" in tok:
            b, e = tok.split("^")
            return int(b) ** int(e)
        return int(tok)

    out = []
    for part in spec.split(","):
        if ".." in part:
            a, b = part.split("..")
            n = num(a)
            stop = num(b)
            while n <= stop:
                out.append(n)
                n *= 2
        else:
            out.append(num(part))
    if not out:
        raise ConfigError("empty size list")
    return out


def _parse_base(tok):
    if tok is None or tok == "grow":
        return tok
    return int(tok)


def _render_plot(records: list, path: str) -> None:
    """kappa versus n, one line per algorithm, written to ``path``.

    Figures are a convenience on top of the CSV contract; nothing reads
    them back.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    by_algo = {}
    for r in records:
        by_algo.setdefault(r.algorithm, []).append(r)
    for algo, recs in by_algo.items():
        recs = sorted(recs, key=lambda r: r.n)
        ax.plot([r.n for r in recs], [r.mean_kappa for r in recs],
                marker="o", label=algo)
    ax.set_xscale("log", base=2)
    ax.set_xlabel("n")
    ax.set_ylabel(r"$\kappa$  (comparisons $= n\log_2 n + \kappa n$)")
    ax.axhline(-1.44, color="gray", lw=0.8, ls="--", label="lower bound")
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _cmd_bench(args) -> int:
    sizes = _parse_sizes(args.n)
    records = []
    for algo in args.algo.split(","):
        algo = algo.strip()
        cfg = ExperimentConfig(
            algorithm=algo, n_schedule=sizes, trials=args.trials,
            seed=args.seed, pivot=args.pivot,
            base_threshold=_parse_base(args.base), engine=args.engine,
            threads=args.threads, dup_factor=args.dup_factor)
        records.extend(run_experiment(cfg))
    header = f"{'algo':24s} {'n':>9s} {'trials':>6s} {'mean_cmps':>14s} " \
             f"{'kappa':>9s} {'mean_swaps':>12s} {'mean_ms':>9s}"
    print(header)
    for r in records:
        print(f"{r.algorithm:24s} {r.n:9d} {r.trials:6d} "
              f"{r.mean_comparisons:14.1f} {r.mean_kappa:9.4f} "
              f"{r.mean_swaps:12.1f} {r.mean_elapsed_ns / 1e6:9.3f}")
    if args.csv:
        write_csv(args.csv, records)
        print(f"wrote {args.csv}")
    if args.plot:
        _render_plot(records, args.plot)
        print(f"wrote {args.plot}")
    return 0


def _cmd_exhaustive(args) -> int:
    st = exhaustive_stats(args.algo, args.n, engine=args.engine)
    print(f"algorithm:   {st.algorithm}")
    print(f"n:           {st.n}  ({sum(st.counts.values())} permutations)")
    print(f"comparisons: min={st.min} max={st.max} mean={st.mean} "
          f"(~{float(st.mean):.4f})")
    print("multiset:    " + ", ".join(
        f"{c}x{st.counts[c]}" for c in sorted(st.counts)))
    return 0


def _cmd_verify(args) -> int:
    from .verify import verify
    results = verify(verbose=True)
    bad = [r for r in results if not r.ok]
    if bad:
        print(f"{len(bad)} invariant check(s) failed")
        return 2
    print(f"all {len(results)} invariant checks passed")
    return 0


def main(argv=None) -> int:
    parser = _Parser(prog="sortlab",
                     description="comparison-counting sorting laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="run seeded experiments")
    b.add_argument("--algo", required=True,
                   help="algorithm id (comma list allowed): "
                        + ", ".join(ALGORITHMS))
    b.add_argument("--n", required=True,
                   help="sizes: '1024,4096' or doubling range '2^10..2^16'")
    b.add_argument("--trials", type=int, default=100)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--pivot", choices=["sqrt", "median3"], default="sqrt")
    b.add_argument("--base", default=None,
                   help="base-case threshold (integer) or 'grow'")
    b.add_argument("--csv", default=None, help="write records to this path")
    b.add_argument("--plot", default=None,
                   help="render a kappa-vs-n figure to this path")
    b.add_argument("--engine", choices=["kernel", "pure"], default="kernel")
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--dup-factor", type=int, default=None,
                   help="generate duplicate keys (robustness runs only)")
    b.set_defaults(fn=_cmd_bench)

    e = sub.add_parser("exhaustive", help="enumerate all n! permutations")
    e.add_argument("--algo", required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--engine", choices=["kernel", "pure"], default="kernel")
    e.set_defaults(fn=_cmd_exhaustive)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.set_defaults(fn=_cmd_verify)

    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
