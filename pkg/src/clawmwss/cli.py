"""Command-line front end: solve, check, gen, verify, bench.

Result lines are machine-parseable and stable:

    OPTIMAL weight=<int> set=<comma ids>
    ALPHA_GE_4 witness=<comma ids>
    NOT_CLAW_FREE center=<id> leaves=<comma ids>
    CLAW_FREE alpha=<k> | CLAW_FREE alpha>=4

Node ids are printed 1-based ascending, matching the instance file format.
Exit codes: 0 optimal / success, 1 input error, 2 alpha >= 4, 3 not claw-free.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from math import log2
from typing import Callable, Sequence

from .errors import ClawWitnessError, InstanceFormatError
from .gen import GenSpec, KINDS, SplitMix64, generate, sample_spec, verify_certificate
from .graph import Graph, induced_subgraph, total_weight
from .instances import read_instance, write_instance
from .oracles import brute_alpha_min4, brute_mwss, is_stable_set
from .cardinality import stable_set_min_alpha4
from .structure import find_claw
from .weighted import AlphaAtLeast4, Optimal, SolveOutcome, mwss_alpha3

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_ALPHA_GE_4 = 2
EXIT_NOT_CLAW_FREE = 3


def _ids(nodes: Sequence[int]) -> str:
    return ",".join(str(v + 1) for v in sorted(nodes))


def _load(path: str) -> tuple[Graph, list[int]]:
    with open(path, "r", encoding="ascii") as fh:
        return read_instance(fh)


_INPUT_ERRORS = (OSError, InstanceFormatError, UnicodeDecodeError)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        g, weights = _load(args.input)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        outcome = mwss_alpha3(g, weights, validate=args.validate)
    except ClawWitnessError as exc:
        print(f"NOT_CLAW_FREE center={exc.center + 1} leaves={_ids(exc.leaves)}")
        return EXIT_NOT_CLAW_FREE
    if isinstance(outcome, AlphaAtLeast4):
        print(f"ALPHA_GE_4 witness={_ids(outcome.witness)}")
        return EXIT_ALPHA_GE_4
    print(f"OPTIMAL weight={outcome.weight} set={_ids(outcome.nodes)}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    try:
        g, _ = _load(args.input)
    except (OSError, InstanceFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    claw = find_claw(g)
    if claw is not None:
        print(f"NOT_CLAW_FREE center={claw.center + 1} leaves={_ids(claw.leaves)}")
        return EXIT_NOT_CLAW_FREE
    report = stable_set_min_alpha4(g)
    if report.alpha_at_least_4:
        print("CLAW_FREE alpha>=4")
    else:
        print(f"CLAW_FREE alpha={report.exact_alpha}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(
        kind=args.kind,
        size=args.size,
        weight_lo=args.wlo,
        weight_hi=args.whi,
        seed=args.seed,
    )
    try:
        g, weights, cert = generate(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.certify:
        try:
            verify_certificate(g, cert)
        except ValueError as exc:
            print(f"error: certification failed: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    text = write_instance(g, weights, comments=cert.comment_lines())
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(text)
    return EXIT_OK


@dataclass
class VerifyFailure:
    index: int
    spec: GenSpec
    reason: str
    instance_text: str


@dataclass
class VerifySummary:
    total: int
    passed: int
    failures: list[VerifyFailure]


def verify_instances(
    count: int,
    seed: int,
    max_n: int,
    solver: Callable[..., SolveOutcome] | None = None,
) -> VerifySummary:
    """Generate instances and compare solver results against the oracles.

    Checks, per instance: the cardinality report size equals min(alpha, 4)
    and is stable; an alpha >= 4 outcome carries a stable 4-set; an optimal
    outcome is stable, self-consistent, and matches the brute-force optimum
    exactly.  The solver is injectable so the harness can be self-tested
    against a deliberately broken implementation.
    """
    solve = solver if solver is not None else mwss_alpha3
    rng = SplitMix64(seed)
    failures: list[VerifyFailure] = []
    for index in range(count):
        spec = sample_spec(rng, max_n, negative_weights=bool(rng.below(2)))
        g, weights, _ = generate(spec)
        reason = _check_one(g, weights, solve)
        if reason is not None:
            failures.append(
                VerifyFailure(index, spec, reason, write_instance(g, weights))
            )
    return VerifySummary(count, count - len(failures), failures)


def _check_one(g: Graph, weights: list[int], solve: Callable[..., SolveOutcome]) -> str | None:
    alpha = brute_alpha_min4(g)
    report = stable_set_min_alpha4(g.with_counter())
    if len(report.nodes) != alpha:
        return f"cardinality report size {len(report.nodes)}, oracle alpha {alpha}"
    if not is_stable_set(g, report.nodes):
        return "cardinality report is not stable"

    outcome = solve(g.with_counter(), weights)
    if isinstance(outcome, AlphaAtLeast4):
        w = outcome.witness
        if alpha != 4:
            return f"solver claims alpha >= 4 but oracle alpha is {alpha}"
        if len(set(w)) != 4 or not is_stable_set(g, w):
            return f"witness {w} is not a stable 4-set"
        return None
    if not isinstance(outcome, Optimal):
        return f"unexpected outcome type {type(outcome).__name__}"
    if not is_stable_set(g, outcome.nodes):
        return f"optimal set {outcome.nodes} is not stable"
    if total_weight(weights, outcome.nodes) != outcome.weight:
        return "reported weight does not match the reported set"
    if alpha <= 3:
        _, expected = brute_mwss(g, weights)
    else:
        # Optimal despite alpha(G) >= 4: all large stable sets used dropped
        # negative nodes, so the optimum lives in the nonnegative subgraph.
        keep = [v for v in range(g.n) if weights[v] >= 0]
        sub, _ = induced_subgraph(g, keep)
        if brute_alpha_min4(sub) > 3:
            return "solver returned Optimal but nonnegative subgraph has alpha >= 4"
        _, expected = brute_mwss(sub, [weights[v] for v in keep])
    if outcome.weight != expected:
        return f"optimal weight {outcome.weight}, oracle weight {expected}"
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    summary = verify_instances(args.count, args.seed, args.max_n)
    print(
        f"VERIFY total={summary.total} pass={summary.passed} "
        f"fail={len(summary.failures)}"
    )
    if summary.failures:
        first = summary.failures[0]
        with open(args.dump, "w", encoding="ascii") as fh:
            fh.write(f"c verify failure #{first.index}: {first.reason}\n")
            fh.write(first.instance_text)
        print(f"first failure dumped to {args.dump}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return EXIT_OK


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    m: int
    queries: int
    ns: int
    ratio: float


def run_bench(sizes: Sequence[int], seed: int) -> list[BenchRecord]:
    """Solve the pinned scaling family, recording adjacency-query counts."""
    rng = SplitMix64(seed)
    records = []
    for target in sizes:
        spec = GenSpec(kind="line_graph_cover3", size=target, seed=rng.next_u64())
        g, weights, _ = generate(spec)
        view = g.with_counter()
        t0 = time.perf_counter_ns()
        mwss_alpha3(view, weights)
        elapsed = time.perf_counter_ns() - t0
        queries = view.counter.count
        ratio = queries / (max(g.m, 1) * log2(g.n + 2))
        records.append(
            BenchRecord(
                instance=f"line_graph_cover3-{target}",
                n=g.n,
                m=g.m,
                queries=queries,
                ns=elapsed,
                ratio=ratio,
            )
        )
    return records


def render_csv(records: Sequence[BenchRecord]) -> str:
    lines = ["instance,n,m,queries,ns,ratio"]
    for r in records:
        lines.append(f"{r.instance},{r.n},{r.m},{r.queries},{r.ns},{r.ratio:.6f}")
    return "\n".join(lines) + "\n"


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    records = run_bench(sizes, args.seed)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(render_csv(records))
    if records:
        ratios = [r.ratio for r in records]
        lo, hi = min(ratios), max(ratios)
        spread = hi / lo if lo > 0 else float("inf")
        print(f"RATIO min={lo:.6f} max={hi:.6f} spread={spread:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clawmwss",
        description="Exact maximum-weight stable set solver for claw-free "
        "graphs with independence number at most 3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance file")
    p.add_argument("--input", required=True, help="instance file path")
    p.add_argument("--validate", action="store_true", help="check claw-freeness first")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="report claw-freeness and min(alpha, 4)")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a certified random instance")
    p.add_argument("--kind", choices=KINDS, default="line_graph_cover3")
    p.add_argument("--size", type=int, default=24, help="kind-specific size parameter")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wlo", type=int, default=1, help="minimum node weight")
    p.add_argument("--whi", type=int, default=100, help="maximum node weight")
    p.add_argument("--out", required=True)
    p.add_argument("--certify", action="store_true", help="re-verify the certificate")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="fuzz solver against brute-force oracles")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", dest="max_n", type=int, default=60)
    p.add_argument("--dump", default="verify-failure.instance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="query-count scaling benchmark, CSV output")
    p.add_argument("--sizes", default="1024,4096,16384,65536,262144",
                   help="comma-separated target edge counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
