"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py``.
"""
import time
import timeit

import numpy as np
import pytest

from hgmorph import correspondence as K
from hgmorph.cli import main
from hgmorph.formats import parse_hypergraph, serialize_hypergraph
from hgmorph.grid import gen_grid
from hgmorph.hypergraph import EdgeSet, VertexSet
from hgmorph.instances import canonical, random_hypergraphs
from hgmorph.laws import check_laws

CANONICAL = canonical()
RANDOM = {f"R{k:02d}": h for k, h in enumerate(random_hypergraphs(50))}
EVERYTHING = {**CANONICAL, **RANDOM}


def _report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'} {detail}")


def _run(instances, names):
    failures, checked = [], 0
    for inst, h in instances.items():
        for report in check_laws(h, names, instance=inst):
            checked += report.checked
            if not report.ok:
                failures.append(f"{inst}:{report}")
    return checked, failures


def test_criterion_1_adjunctions(capsys):
    names = ["adjunction-ex-dv", "adjunction-ev-dx", "adjunction-vertex", "adjunction-edge", "adjunction-hg"]
    start = time.perf_counter()
    checked, failures = _run(EVERYTHING, names)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    _report(capsys, 1, ok, f"adjunctions: {checked} pairs on {len(EVERYTHING)} instances, "
                           f"{len(failures)} failing laws, {elapsed:.2f}s (< 60s)")
    assert not failures, failures
    assert elapsed < 60


def test_criterion_2_duality(capsys):
    names = ["duality-ex-dx", "duality-ev-dv", "duality-vertex", "duality-edge"]
    checked, failures = _run(EVERYTHING, names)
    _report(capsys, 2, not failures, f"duality: {checked} inputs, {len(failures)} failing laws")
    assert not failures, failures


def test_criterion_3_oracle_equivalence(capsys):
    names = [
        "oracle-from-vertices", "oracle-from-edges", "oracle-vertex-ops", "oracle-edge-ops",
        "closed-forms-vertex", "closed-forms-edge", "half-closed-forms-vertex", "half-closed-forms-edge",
    ]
    checked, failures = _run(EVERYTHING, names)
    hg_checked, hg_failures = _run(CANONICAL, ["oracle-hg-ops"])
    failures += hg_failures
    _report(capsys, 3, not failures, f"oracle equivalence: {checked + hg_checked} inputs, {len(failures)} mismatching laws")
    assert not failures, failures


def test_criterion_4_filter_axioms(capsys):
    names = [f"filter-{d}-{k}-{s}" for d in ("v", "e", "hg") for k in ("open", "close") for s in ("1", "half")]
    checked, failures = _run(CANONICAL, names + ["closedness-hg"])
    _report(capsys, 4, not failures, f"filter axioms: 12 filters + closedness, {checked} inputs, {len(failures)} failing")
    assert not failures, failures


def test_criterion_5_ordering_chains(capsys):
    names = ["chain-property6-vertex", "chain-property6-edge", "chain-property6-hg"]
    checked, failures = _run(CANONICAL, names)
    _report(capsys, 5, not failures, f"ordering chains: {checked} inputs, {len(failures)} violations")
    assert not failures, failures


def test_criterion_6_granulometry(capsys):
    names = ["granulometry-open-nesting", "granulometry-close-nesting",
             "granulometry-open-increasing", "granulometry-close-increasing"]
    checked, failures = _run({k: CANONICAL[k] for k in ("H0", "H2")}, names)
    _report(capsys, 6, not failures, f"granulometries lambda 0..6: {checked} inputs, {len(failures)} violations")
    assert not failures, failures


def test_criterion_7_asf(capsys):
    checked, failures = _run(CANONICAL, ["asf-filter", "asf-increasing"])
    _report(capsys, 7, not failures, f"ASF lambda 0..4: {checked} inputs, {len(failures)} violations")
    assert not failures, failures


GRID_SIZES = (100, 250, 500, 750, 1000)
OPERATORS = {
    "vdelta": (K.vertex_dilate_from_edges, "e"),
    "edelta": (K.edge_dilate_from_vertices, "v"),
    "veps": (K.vertex_erode_from_edges, "e"),
    "eeps": (K.edge_erode_from_vertices, "v"),
}


def _per_call(fn, arg):
    number = 1
    while timeit.timeit(lambda: fn(arg), number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(lambda: fn(arg), number=number, repeat=5)) / number


@pytest.mark.slow
def test_criterion_8_linear_time(capsys):
    rng = np.random.default_rng(8)
    incidences, times = [], {name: [] for name in OPERATORS}
    for size in GRID_SIZES:
        g = gen_grid(size, size)
        incidences.append(g.n_incidences)
        args = {
            "v": VertexSet.from_array(g, rng.random(g.n_vertices) < 0.5),
            "e": EdgeSet.from_array(g, rng.random(g.n_edges) < 0.5),
        }
        for name, (fn, dom) in OPERATORS.items():
            times[name].append(_per_call(fn, args[dom]))
        del g, args
    worst, violations = 0.0, []
    for name, ts in times.items():
        for k in range(1, len(GRID_SIZES)):
            growth = (ts[k] / ts[k - 1]) / (incidences[k] / incidences[k - 1])
            worst = max(worst, growth)
            if growth > 3:
                violations.append(f"{name} {GRID_SIZES[k - 1]}->{GRID_SIZES[k]}: {growth:.2f}x")
    detail = ", ".join(f"{n} {ts[-1] * 1e3:.1f}ms" for n, ts in times.items())
    _report(capsys, 8, not violations,
            f"linear time: worst time/incidence growth {worst:.2f} (<= 3) at 1000x1000 {detail}")
    assert not violations, violations


RUN_GOLDENS = [
    ("vset 3\n", "edelta; veps", "vset 2 3 4\n"),
    ("vset\n", "vertex-dilate", "vset\n"),
    ("vset 0 1 2 3 4\neset e0 e1 e2\n", "hg-open:1", "vset 0 1 2 3 4\neset e0 e1 e2\n"),
]


def test_criterion_9_cli_regression(capsys, tmp_path):
    problems = []
    for name, h in CANONICAL.items():
        text = serialize_hypergraph(h)
        if serialize_hypergraph(parse_hypergraph(text)) != text or parse_hypergraph(text) != h:
            problems.append(f"round-trip {name}")
    graph = tmp_path / "h0.hg"
    graph.write_text(serialize_hypergraph(CANONICAL["H0"]))
    for k, (subset, pipeline, expected) in enumerate(RUN_GOLDENS):
        src, out = tmp_path / f"in{k}.txt", tmp_path / f"out{k}.txt"
        src.write_text(subset)
        code = main(["run", "--graph", str(graph), "--input", str(src), "--pipeline", pipeline, "--out", str(out)])
        if code != 0 or out.read_bytes() != expected.encode():
            problems.append(f"run {pipeline!r}")
    _report(capsys, 9, not problems,
            f"CLI: {len(CANONICAL)} round-trips, {len(RUN_GOLDENS)} run goldens, {len(problems)} mismatches")
    assert not problems, problems
