"""The compiled kernels must mirror the reference classes exactly."""

from __future__ import annotations

import numpy as np
import pytest

from stt_forest._jit import stt as jstt
from stt_forest._jit.common import MODE_MAX, MODE_ROOTED, MODE_SUM, MODE_UNIT, QUERY_OPS
from stt_forest.engine import (
    ROOTED,
    UNROOTED,
    catalog,
    prepare,
    prepare_python,
    query_results,
    replay,
    resolve,
)
from stt_forest.weights import MaxEdge
from stt_forest.workloads import fnv1a, gen_degenerate, gen_lca, gen_urc

WEIGHTS = ["unit", "sum", "max"]


@pytest.mark.parametrize("weight", WEIGHTS)
@pytest.mark.parametrize("name", sorted(UNROOTED))
def test_unrooted_engines_agree(name, weight):
    for seed in range(3):
        script = gen_urc(48, 2500, seed)
        a = replay(name, script, weight, "compiled")
        b = replay(name, script, weight, "python")
        np.testing.assert_array_equal(a.out, b.out)
        assert a.rotations == b.rotations
        assert a.checksum == b.checksum


@pytest.mark.parametrize("evert", [False, True])
@pytest.mark.parametrize("name", sorted(ROOTED))
def test_rooted_engines_agree(name, evert):
    for seed in range(3):
        script = gen_lca(64, 640, seed, evert, p_find_root=0.1)
        a = replay(name, script, engine="compiled")
        b = replay(name, script, engine="python")
        np.testing.assert_array_equal(a.out, b.out)
        assert a.rotations == b.rotations


@pytest.mark.parametrize("weight", WEIGHTS)
def test_all_unrooted_checksums_match_oracle(weight):
    script = gen_urc(64, 4000, 21)
    sums = {i.name: replay(i, script, weight).checksum for i in resolve("all", False, 64)}
    assert len(set(sums.values())) == 1, sums


def test_degenerate_answers():
    script = gen_degenerate(50)
    ref = replay("oracle", script, "sum")
    for name in ("stable-greedy", "l2p", "mtr", "link-cut", "1-cut"):
        assert replay(name, script, "sum").checksum == ref.checksum
    res = query_results(script, ref.out)
    # path of unit edges: the distance from j to n-1
    assert res.tolist() == [49 - j for j in range(50)]


@pytest.mark.parametrize("mode", [MODE_UNIT, MODE_SUM, MODE_MAX])
@pytest.mark.parametrize("strategy,stable", [("greedy", True), ("2p", False), ("l2p", True), ("mtr", False)])
def test_compiled_state_mirrors_reference(strategy, stable, mode):
    weight = {MODE_UNIT: "unit", MODE_SUM: "sum", MODE_MAX: "max"}[mode]
    script = gen_urc(40, 2000, 4)
    st = jstt.new_state(40, mode)
    cnt = np.zeros(2, dtype=np.int64)
    out = np.full(len(script), -1, dtype=np.int64)
    jstt.run(script.ops, st, cnt, stable, jstt.STRATEGY_IDS[strategy], mode, out)
    impl = UNROOTED[("stable-" if stable else "") + strategy]
    runner = prepare_python(impl, script, weight)
    runner()
    f = runner.forest
    none = lambda xs: [-1 if x is None else x for x in xs]  # noqa: E731
    assert st[jstt.PAR].tolist() == none(f.stt.parent)
    assert st[jstt.DSEP].tolist() == none(f.stt.dsep)
    assert st[jstt.ISEP].tolist() == none(f.stt.isep)
    assert cnt[1] == f.stt.counter.splay_steps
    if mode == MODE_SUM:
        for v in range(40):
            if f.stt.parent[v] is not None:
                assert st[jstt.PW, v] == f.data.pdist[v]
    if mode == MODE_MAX:
        for v in range(40):
            if f.stt.parent[v] is not None:
                pd = f.data.pdist[v]
                assert isinstance(pd, MaxEdge)
                assert st[jstt.PW, v] == pd.weight
                assert st[jstt.PWIT, v] == pd.witness


def test_rooted_compiled_droot():
    script = gen_lca(50, 2000, 2, True)
    st = jstt.new_state(50, MODE_ROOTED)
    cnt = np.zeros(2, dtype=np.int64)
    out = np.full(len(script), -1, dtype=np.int64)
    jstt.run(script.ops, st, cnt, False, jstt.GREEDY, MODE_ROOTED, out)
    runner = prepare_python(ROOTED["greedy"], script)
    runner()
    f = runner.forest
    assert st[jstt.DROOT].tolist() == [-1 if x is None else x for x in f.data.droot]


def test_checksum_definition():
    script = gen_urc(20, 500, 1)
    rep = replay("oracle", script)
    assert rep.checksum == fnv1a(query_results(script, rep.out).tolist())
    assert fnv1a([]) == 1469598103934665603
    assert set(QUERY_OPS) == {2, 5, 7}


def test_catalog_and_resolve():
    assert len([i for i in UNROOTED.values() if i.family == "stt"]) == 8
    assert len([i for i in ROOTED.values() if i.family == "stt"]) == 4
    assert "oracle" in [i.name for i in resolve("all", False, 1000)]
    assert "oracle" not in [i.name for i in resolve("all", False, 1001)]
    assert [i.name for i in resolve("greedy, mtr", False, 5)] == ["greedy", "mtr"]
    assert catalog(True) is ROOTED
    with pytest.raises(KeyError):
        resolve("nope", False, 5)
    with pytest.raises(KeyError):
        resolve("stable-greedy", True, 5)


def test_arity_mismatch():
    with pytest.raises(ValueError):
        prepare(UNROOTED["1-cut"], gen_lca(8, 20, 0))
    with pytest.raises(ValueError):
        prepare(ROOTED["simple"], gen_urc(8, 20, 0))
    with pytest.raises(ValueError):
        prepare(UNROOTED["greedy"], gen_urc(8, 20, 0), engine="gpu")
