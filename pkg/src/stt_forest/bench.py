"""Benchmark runner: replay a script on fresh forests and report timings."""

from __future__ import annotations

import statistics
import sys
import time
from dataclasses import dataclass
from typing import IO, Iterable

from .engine import Impl, catalog, prepare, resolve
from .workloads import QueryScript, gen_degenerate, gen_lca, gen_urc

TSV_HEADER = ("impl", "workload", "n", "m", "us_per_query", "rotations", "checksum")


@dataclass
class RunReport:
    impl: str
    workload: str
    n: int
    m: int
    us_per_query: float
    rotations: int
    checksum: int

    def row(self) -> str:
        vals = (
            self.impl,
            self.workload,
            self.n,
            self.m,
            f"{self.us_per_query:.4f}",
            self.rotations,
            f"{self.checksum:016x}",
        )
        return "\t".join(str(v) for v in vals)


def run(
    script: QueryScript,
    impl: Impl | str,
    repeats: int = 1,
    *,
    weight: str = "unit",
    engine: str = "compiled",
    warmup: bool = True,
) -> RunReport:
    """Median time per query over ``repeats`` fresh replays.

    One extra warm-up replay is discarded so JIT compilation is never timed.
    """
    if isinstance(impl, str):
        impl = catalog(script.rooted)[impl]
    if repeats < 1:
        raise ValueError("repeats must be positive")
    times = []
    result = None
    for i in range(repeats + int(warmup)):
        runner = prepare(impl, script, weight, engine)
        t0 = time.perf_counter()
        rep = runner()
        dt = time.perf_counter() - t0
        if warmup and i == 0:
            continue
        times.append(dt)
        if result is None:
            result = rep
        elif rep.checksum != result.checksum:
            raise RuntimeError(f"{impl.name}: checksum changed between repeats")
    m = len(script)
    return RunReport(
        impl.name,
        script.name,
        script.n,
        m,
        1e6 * statistics.median(times) / max(m, 1),
        result.rotations,
        result.checksum,
    )


def make_script(
    workload: str,
    n: int,
    m: int | None,
    seed: int,
    *,
    p_path: float = 0.5,
    sigma: float = 0.0,
    evert: bool = False,
) -> QueryScript:
    if workload == "urc":
        return gen_urc(n, m if m is not None else 100 * n, seed, p_path)
    if workload == "degenerate":
        return gen_degenerate(n, 0.0, seed)
    if workload == "noisy":
        return gen_degenerate(n, sigma if sigma else 300.0, seed)
    if workload in ("lca", "lca-evert"):
        return gen_lca(n, m, seed, evert or workload == "lca-evert")
    raise KeyError(f"unknown workload {workload!r}")


def run_all(
    script: QueryScript,
    impls: str | list[str] = "all",
    repeats: int = 1,
    *,
    weight: str = "unit",
    engine: str = "compiled",
) -> list[RunReport]:
    return [
        run(script, impl, repeats, weight=weight, engine=engine)
        for impl in resolve(impls, script.rooted, script.n)
    ]


def write_tsv(reports: Iterable[RunReport], out: IO[str] | None = None, header: bool = True) -> None:
    out = sys.stdout if out is None else out
    if header:
        out.write("\t".join(TSV_HEADER) + "\n")
    for r in reports:
        out.write(r.row() + "\n")
    out.flush()
