"""Run the benchmark experiments and write one TSV per experiment.

Usage:
    python scripts/run_experiments.py --out results/ [--quick] [--only urc,lca]

``--quick`` shrinks every size so the whole run finishes in seconds.
"""

from __future__ import annotations

import argparse
import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

from stt_forest import msf as msf_mod
from stt_forest.bench import RunReport, run, write_tsv
from stt_forest.engine import resolve
from stt_forest.workloads import gen_degenerate, gen_lca, gen_urc

log = logging.getLogger("experiments")


@dataclass
class ExperimentConfig:
    urc_sizes: list[int] = field(default_factory=lambda: [1000, 2000, 4000, 8000])
    urc_factor: int = 100
    degenerate_sizes: list[int] = field(default_factory=lambda: [2500, 5000, 10_000])
    noisy_n: int = 5000
    noisy_sigmas: list[float] = field(default_factory=lambda: [0, 10, 30, 100, 300, 1000])
    msf_sizes: list[int] = field(default_factory=lambda: [1000, 4000, 10_000])
    msf_factor: int = 8
    collab_authors: int = 50_000
    collab_rows: int = 250_000
    lca_sizes: list[int] = field(default_factory=lambda: [1000, 4000, 16_000])
    repeats: int = 3
    seed: int = 0

    @classmethod
    def quick(cls) -> "ExperimentConfig":
        return cls(
            urc_sizes=[500, 1000, 2000],
            urc_factor=20,
            degenerate_sizes=[1000, 2000],
            noisy_n=1000,
            noisy_sigmas=[0, 30, 300],
            msf_sizes=[1000, 2000],
            collab_authors=5000,
            collab_rows=20_000,
            lca_sizes=[500, 2000],
            repeats=1,
        )


def urc(cfg: ExperimentConfig) -> list[RunReport]:
    out = []
    for n in cfg.urc_sizes:
        script = gen_urc(n, cfg.urc_factor * n, cfg.seed)
        for impl in resolve("all", False, n):
            out.append(run(script, impl, cfg.repeats))
            log.info("urc n=%d %s %.3f us", n, impl.name, out[-1].us_per_query)
    return out


def degenerate(cfg: ExperimentConfig) -> list[RunReport]:
    out = []
    for n in cfg.degenerate_sizes:
        script = gen_degenerate(n)
        for impl in resolve("all", False, n):
            out.append(run(script, impl, cfg.repeats))
    return out


def noisy(cfg: ExperimentConfig) -> list[RunReport]:
    out = []
    names = "greedy,stable-greedy,2p,l2p,mtr,link-cut"
    for sigma in cfg.noisy_sigmas:
        script = gen_degenerate(cfg.noisy_n, float(sigma), cfg.seed)
        for impl in resolve(names, False, cfg.noisy_n):
            rep = run(script, impl, cfg.repeats)
            rep.workload = f"noisy-sigma{sigma:g}"
            out.append(rep)
    return out


def lca(cfg: ExperimentConfig) -> list[RunReport]:
    out = []
    for evert in (False, True):
        for n in cfg.lca_sizes:
            script = gen_lca(n, 10 * n, cfg.seed, evert)
            names = "all" if n <= 4000 else "greedy,2p,l2p,mtr,link-cut"
            for impl in resolve(names, True, n):
                out.append(run(script, impl, cfg.repeats))
    return out


def msf(cfg: ExperimentConfig) -> list[str]:
    rows = ["\t".join(("impl", "stream", "n", "m", "us_per_edge", "total_weight"))]
    streams = [
        (f"random-n{n}", msf_mod.random_stream(n, cfg.msf_factor * n, cfg.seed))
        for n in cfg.msf_sizes
    ]
    lines = msf_mod.synthetic_collab(cfg.collab_authors, cfg.collab_rows, cfg.seed)
    streams.append(("synthetic-collab", msf_mod.parse_collab(lines)))
    impls = [i for i in resolve("all", False, math.inf) if i.family != "oracle"]
    for impl in impls:
        msf_mod.warm_up(impl)
    for label, stream in streams:
        results = [msf_mod.run_compiled(stream, i) for i in impls]
        results.append(msf_mod.run_kruskal(stream))
        if len({r.total for r in results}) != 1:
            raise RuntimeError(f"{label}: totals disagree")
        for r in results:
            rows.append(f"{r.impl}\t{label}\t{r.n}\t{r.m}\t{r.us_per_edge:.4f}\t{r.total}")
    return rows


EXPERIMENTS = {"urc": urc, "degenerate": degenerate, "noisy": noisy, "lca": lca, "msf": msf}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--out", default="results", help="output directory")
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--only", default=",".join(EXPERIMENTS))
    parser.add_argument("--repeats", type=int, default=None)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    cfg = ExperimentConfig.quick() if args.quick else ExperimentConfig()
    if args.repeats is not None:
        cfg.repeats = args.repeats
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name in args.only.split(","):
        t0 = time.perf_counter()
        result = EXPERIMENTS[name](cfg)
        path = out_dir / f"{name}.tsv"
        with open(path, "w") as fh:
            if result and isinstance(result[0], str):
                fh.write("\n".join(result) + "\n")
            else:
                write_tsv(result, fh)
        log.info("%s done in %.1fs -> %s", name, time.perf_counter() - t0, path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
