"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are also repeated in the pytest terminal summary (see conftest).
"""

import time

import networkx as nx
import pytest

from cubicdom.generators import CorpusSpec, enumerate_cubic_connected, named_graph, random_cubic
from cubicdom.graph6 import to_graph6
from cubicdom.harness.findings import RunConfig
from cubicdom.harness.report import verify_finding
from cubicdom.harness.sweep import run_sweep
from cubicdom.machinery import check_fact_T_dset, claim_decompose
from cubicdom.solvers import (brute_force_gamma, brute_force_i, gamma_exact, i_exact,
                              min_internal_edge_dsets, reed_bound)
from cubicdom.verdict import Status

from conftest import from_nx
from test_generators import _classes, _labelled_cubic_nx

RESULTS: dict[int, str] = {}
UNCAPPED = 10 ** 6


def record(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[k] = line
    print(line)
    assert ok, line


def _violated(res, prop):
    return [f for f in res.findings if f.property_id == prop and f.verdict == "Violated"]


def _count(res, prop, verdict):
    return sum(1 for f in res.findings if f.property_id == prop and f.verdict == verdict)


@pytest.fixture(scope="module")
def atlas_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("atlas") / "atlas.g6"
    path.write_text("".join(to_graph6(from_nx(h)) + "\n" for h in nx.graph_atlas_g()[1:]))
    return str(path)


@pytest.fixture(scope="module")
def main_sweep(atlas_file):
    """Atlas (all graphs on 1..7 vertices) plus the cubic corpus, every d-set."""
    corpus = (
        CorpusSpec("file", path=atlas_file),
        CorpusSpec("exhaustive", n_min=4, n_max=12),
        CorpusSpec("named", names=("petersen", "mobius_kantor", "cube", "prism", "k33")),
        CorpusSpec("gadget_chain", k_values=(1, 2)),
        CorpusSpec("random", n_min=14, n_max=20, count=20, seed=11),
    )
    props = ("peel_safety", "fact_2_2", "fact_2_3", "independentize", "prop_a", "prop_b")
    return run_sweep(RunConfig(corpus=corpus, properties=props, max_dsets=UNCAPPED))


@pytest.fixture(scope="module")
def bound_sweep():
    corpus = (CorpusSpec("exhaustive", n_min=4, n_max=14),
              CorpusSpec("random", n_min=16, n_max=20, count=500, seed=2024))
    return run_sweep(RunConfig(corpus=corpus, properties=("reed_bound", "theorem_2_1")))


def test_criterion_01_oracle_agreement():
    start = time.perf_counter()
    graphs = [g for n in (4, 6, 8, 10) for g in enumerate_cubic_connected(n)]
    graphs += [random_cubic(4 + 2 * (j % 7), seed=j) for j in range(200)]
    mismatches = sum(1 for g in graphs
                     if gamma_exact(g).size != brute_force_gamma(g).size
                     or i_exact(g).size != brute_force_i(g).size)
    elapsed = time.perf_counter() - start
    record(1, mismatches == 0 and elapsed < 300 and len(graphs) == 227,
           f"{len(graphs)} graphs, {mismatches} mismatches, {elapsed:.1f}s")


def test_criterion_02_enumeration_counts():
    counts = [len(list(enumerate_cubic_connected(n))) for n in (4, 6, 8, 10)]
    brute = [len(_classes(_labelled_cubic_nx(n))) for n in (4, 6, 8)]
    n12 = len(list(enumerate_cubic_connected(12)))
    ok = counts == [1, 2, 5, 19] and brute == counts[:3] and n12 == 85
    record(2, ok, f"counts {counts}, brute-force {brute}, n=12 {n12}")


def test_criterion_03_reed_bound(bound_sweep):
    bad = _violated(bound_sweep, "reed_bound")
    for f in bad:
        verify_finding(f)
    graphs = bound_sweep.summary["reed_bound"]
    arithmetic = reed_bound(60) == 20 < 21
    total = 621 + 500 - bound_sweep.duplicates
    record(3, not bad and arithmetic and graphs["Holds"] == total,
           f"{graphs['Holds']} graphs Holds ({bound_sweep.duplicates} random duplicates), "
           f"{len(bad)} Violated; reed_bound(60) = {reed_bound(60)} < 21")


def test_criterion_04_theorem(bound_sweep):
    bad = _violated(bound_sweep, "theorem_2_1")
    for f in bad:
        verify_finding(f)
    branches = {}
    for f in bound_sweep.findings:
        if f.property_id == "theorem_2_1":
            branches[f.certificates["branch"]] = branches.get(f.certificates["branch"], 0) + 1
    record(4, not bad, f"{len(bad)} Violated; branches {dict(sorted(branches.items()))}")


def test_criterion_05_peel_safety(main_sweep):
    bad = _violated(main_sweep, "peel_safety")
    holds = _count(main_sweep, "peel_safety", "Holds")
    record(5, not bad and holds == len(main_sweep.findings) // 6,
           f"{holds} graphs x all minimum d-sets, {len(bad)} Violated")


def test_criterion_06_fact_u_literal_c4():
    cfg = RunConfig(corpus=(CorpusSpec("named", names=("c4",)),), properties=("fact_u_literal",),
                    fact_u_injection={"x": [0, 2], "u_subset": [[0, 1], [1, 2]]})
    (f,) = run_sweep(cfg).findings
    verify_finding(f)
    ok = f.verdict == "Violated" and f.certificates["undominated"] == [1]
    record(6, ok, f"C4 X={{0,2}} U'={{01,12}} -> {f.verdict}, undominated {f.certificates.get('undominated')}")


def test_criterion_07_fact_2_2(main_sweep):
    bad = _violated(main_sweep, "fact_2_2")
    holds = _count(main_sweep, "fact_2_2", "Holds")
    na = _count(main_sweep, "fact_2_2", "NotApplicable")
    instances = sum(f.certificates.get("instances", 0) for f in main_sweep.findings
                    if f.property_id == "fact_2_2")
    record(7, not bad, f"{holds} graphs Holds ({instances} instances), {na} with empty T(Y), "
                       f"{len(bad)} Violated")


def test_criterion_08_fact_2_3(main_sweep):
    v = check_fact_T_dset(named_graph("p5"), [1, 4], [2])
    p5_ok = v.status == Status.HOLDS and v.witness["gamma"] == v.witness["size"] == 3
    held = sum(f.certificates.get("holds", 0) for f in main_sweep.findings if f.property_id == "fact_2_3")
    failed = sum(f.certificates.get("violated", 0) for f in main_sweep.findings
                 if f.property_id == "fact_2_3")
    for f in _violated(main_sweep, "fact_2_3")[:25]:
        verify_finding(f)
    rate = held / (held + failed) if held + failed else 0.0
    record(8, p5_ok, f"P5 example Holds={p5_ok}; instances meeting precondition: {held} Holds, "
                     f"{failed} Violated (holds rate {rate:.1%}, non-blocking)")


def test_criterion_09_claim_pipeline():
    runs = accounting = maxdeg = holds = 0
    for n in (4, 6, 8, 10):
        for g in enumerate_cubic_connected(n):
            gamma = gamma_exact(g).size
            graph_maxdeg = True
            for x in min_internal_edge_dsets(g):
                d = claim_decompose(g, x, "deg3", gamma=gamma)
                runs += 1
                assert d.trace().replay() == d.g_double_prime
                accounting += d.vertex_accounting_ok and d.edge_accounting_ok and d.y_dominates
                holds += d.claim_holds
                graph_maxdeg &= d.max_degree_le_2
            maxdeg += graph_maxdeg
    record(9, runs > 0 and accounting == runs,
           f"{runs} runs on 27 graphs, accounting {accounting}/{runs}; "
           f"max-degree<=2 on {maxdeg}/27 graphs; Claim-holds {holds}/{runs}")


def test_criterion_10_independentize(main_sweep):
    bad = _violated(main_sweep, "independentize")
    star_free = [f for f in main_sweep.findings
                 if f.property_id == "independentize" and f.certificates["double_star_free"]]
    equal = all(f.certificates["gamma"]["size"] == f.certificates["i"]["size"] for f in star_free)
    stuck_local = sum(f.certificates["stuck_star_free_non_optimal"] for f in star_free)
    record(10, not bad and equal and star_free,
           f"{len(star_free)} double-star-free graphs, {len(bad)} Violated; "
           f"{stuck_local} stuck runs from non-minimum-||X|| d-sets (witnessed)")


def test_criterion_11_prop_a(main_sweep):
    bad = _violated(main_sweep, "prop_a")
    for f in bad:
        verify_finding(f)
    holds = _count(main_sweep, "prop_a", "Holds")
    record(11, not bad and holds > 0, f"{holds} claw-free graphs with gamma = i, {len(bad)} Violated")


def test_criterion_12_determinism():
    corpus = (CorpusSpec("exhaustive", n_min=4, n_max=10),
              CorpusSpec("named", names=("petersen", "p5", "c4", "k13")),
              CorpusSpec("random", n=14, count=4, seed=5))
    outputs = []
    for workers in (1, 3, 1):
        res = run_sweep(RunConfig(corpus=corpus, workers=workers))
        outputs.append("".join(f.to_line() + "\n" for f in res.findings).encode())
    same = outputs[0] == outputs[1] == outputs[2]
    record(12, same, f"{len(outputs[0])} bytes, identical across workers 1/3/1: {same}")
