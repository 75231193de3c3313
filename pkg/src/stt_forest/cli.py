"""Command line: ``bench``, ``msf`` and ``verify``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from . import msf as msf_mod
from .bench import run, make_script, write_tsv
from .engine import UNROOTED, WEIGHT_MODES, resolve
from .workloads import WORKLOADS, gen_lca, gen_urc

MSF_HEADER = ("impl", "n", "m", "us_per_edge", "total_weight")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=1000, help="number of vertices")
    p.add_argument("--m", type=int, default=None, help="number of queries")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stt-forest", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="time implementations on a generated workload")
    b.add_argument("workload", choices=sorted(WORKLOADS))
    b.add_argument("--impl", default="all", help="name, comma list, or 'all'")
    _add_common(b)
    b.add_argument("--p-path", type=float, default=0.5)
    b.add_argument("--sigma", type=float, default=0.0)
    b.add_argument("--evert", action="store_true")
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--out", default=None, help="write the TSV here instead of stdout")
    b.add_argument("--weights", choices=sorted(WEIGHT_MODES), default="unit")
    b.add_argument("--engine", choices=("compiled", "python"), default="compiled")
    b.add_argument("--parallel", action="store_true", help="one thread per implementation")

    s = sub.add_parser("msf", help="incremental minimum spanning forest")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="collaboration file: author_a author_b year")
    src.add_argument("--random", action="store_true", help="random insert/decrease stream")
    src.add_argument("--synthetic", action="store_true", help="synthetic collaboration rows")
    _add_common(s)
    s.add_argument("--impl", default="all")

    v = sub.add_parser("verify", help="cross-check every implementation against the oracle")
    _add_common(v)
    v.add_argument("--seeds", type=int, default=1, help="check seeds seed .. seed+seeds-1")
    v.add_argument("--weights", choices=sorted(WEIGHT_MODES), default="unit")
    v.add_argument("--rooted", action="store_true", help="also check rooted LCA workloads")
    return parser


def cmd_bench(args) -> int:
    script = make_script(
        args.workload, args.n, args.m, args.seed,
        p_path=args.p_path, sigma=args.sigma, evert=args.evert,
    )
    impls = resolve(args.impl, script.rooted, script.n)

    def one(impl):
        return run(script, impl, args.repeats, weight=args.weights, engine=args.engine)

    if args.parallel:
        with ThreadPoolExecutor(max_workers=len(impls)) as pool:
            reports = list(pool.map(one, impls))
    else:
        reports = [one(i) for i in impls]
    if args.out:
        with open(args.out, "w") as fh:
            write_tsv(reports, fh)
    else:
        write_tsv(reports)
    return 0


def cmd_msf(args) -> int:
    if args.input:
        stream = msf_mod.ingest_collab(args.input)
    elif args.synthetic:
        m = args.m if args.m is not None else 5 * args.n
        stream = msf_mod.parse_collab(msf_mod.synthetic_collab(args.n, m, args.seed))
    else:
        m = args.m if args.m is not None else 8 * args.n
        stream = msf_mod.random_stream(args.n, m, args.seed)
    names = [i for i in resolve(args.impl, False, stream.n) if i.family != "oracle"]
    results = []
    for impl in names:
        msf_mod.warm_up(impl)
        results.append(msf_mod.run_compiled(stream, impl))
    results.append(msf_mod.run_kruskal(stream))
    print("\t".join(MSF_HEADER))
    for r in results:
        print(f"{r.impl}\t{r.n}\t{r.m}\t{r.us_per_edge:.4f}\t{r.total}")
    totals = {r.total for r in results}
    if len(totals) != 1:
        print("error: implementations disagree on the total weight", file=sys.stderr)
        return 1
    return 0


def verify(n: int, m: int, seeds: range, weight: str = "unit", rooted: bool = False, log=None):
    """Return a list of ``(seed, workload, impl, expected, got)`` mismatches."""
    bad = []
    for seed in seeds:
        script = gen_urc(n, m, seed)
        truth = run(script, UNROOTED["oracle"], weight=weight, warmup=False).checksum
        for impl in resolve("all", False, 0):
            got = run(script, impl, weight=weight, warmup=False).checksum
            if got != truth:
                bad.append((seed, "urc", impl.name, truth, got))
        if rooted:
            for ev in (False, True):
                s = gen_lca(n, m, seed, ev, 0.1)
                reps = {i.name: run(s, i, warmup=False).checksum for i in resolve("all", True, n)}
                for name, got in reps.items():
                    if got != reps["simple"]:
                        bad.append((seed, s.name, name, reps["simple"], got))
        if log:
            log(f"seed {seed}: {'ok' if not bad else f'{len(bad)} mismatches so far'}")
    return bad


def cmd_verify(args) -> int:
    m = args.m if args.m is not None else 5000
    seeds = range(args.seed, args.seed + args.seeds)
    bad = verify(args.n, m, seeds, args.weights, args.rooted, log=print)
    for seed, wl, name, want, got in bad:
        print(f"MISMATCH seed={seed} {wl} {name}: {got:016x} != {want:016x}")
    print("verify:", "FAILED" if bad else "all implementations match the oracle")
    return 1 if bad else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"bench": cmd_bench, "msf": cmd_msf, "verify": cmd_verify}[args.command]
    try:
        return handler(args)
    except (KeyError, ValueError, msf_mod.CollabFormatError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"{parser.prog}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
