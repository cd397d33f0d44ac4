"""Acceptance suite: each test checks one criterion at its stated tolerance and
records a one-line verdict, printed in the terminal summary."""

import random
from pathlib import Path

import numpy as np
import pytest

from interlock.centrality import (
    betweenness_centrality,
    betweenness_centralization,
    competition_ranks,
    degree_centralization,
)
from interlock.cli import main, random_graph as random_graph_n
from interlock.cohesion import components, m_slice, slice_census
from interlock.concordance import centrality_concordance
from interlock.core import AffiliationNetwork
from interlock.ingest import read_pajek_net, write_pajek_net
from interlock.project import density_from_counts, mean_degree_from_counts, project
from interlock.validate import load_fixtures, report_from_fixture

from conftest import ACCEPTANCE_LINES
from oracles import board_intersections, brute_betweenness, random_graph, transitive_closure

GOLDEN = Path(__file__).parent / "golden"


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def fx():
    return load_fixtures()


def test_criterion_01_journal_table_consistency(fx):
    rows = fx.a1
    n = len(rows)
    worst = max(abs(r.normalized_degree - r.degree / 745) for r in rows)
    mismatches = {}
    for column, values, printed in (
        ("degree", [r.degree for r in rows], [r.rank_degree for r in rows]),
        ("closeness", [r.closeness for r in rows], [r.rank_closeness for r in rows]),
        ("betweenness", [r.betweenness_x100 for r in rows], [r.rank_betweenness for r in rows]),
    ):
        ranks = competition_ranks(values)
        mismatches[column] = int(np.sum(ranks != np.asarray(printed)))
    pacific = next(r for r in rows if r.journal == "Pacific Economic Review")
    anchor = (pacific.rank_degree, pacific.rank_closeness, pacific.rank_betweenness) == (1, 1, 1)
    zero = [r for r in rows if r.degree == 0]
    zero_ok = len(zero) == 74 and all(r.rank_degree == 673 for r in zero)
    ok = n == 746 and worst <= 0.0005 and anchor and zero_ok and not any(mismatches.values())
    record(
        1,
        ok,
        f"n={n}; max |norm - deg/745| = {worst:.5f}; rank mismatches {mismatches}; "
        f"anchor 1/1/1 {anchor}; 74 degree-0 rows at 673 {zero_ok}",
    )


def test_criterion_02_degree_centralization(fx):
    value = degree_centralization([r.degree for r in fx.a1])
    counts = (746 * 124 - 2 * 6407) / (745 * 744)
    ok = abs(value - 0.14) <= 0.005 and abs(counts - 0.14) <= 0.005
    record(2, ok, f"degree centralization {value:.5f}, from counts {counts:.5f} (0.14 +/- 0.005)")


def test_criterion_03_betweenness_centralization(fx):
    value = betweenness_centralization([r.betweenness_x100 / 100 for r in fx.a1])
    record(3, abs(value - 0.04) <= 0.005, f"betweenness centralization {value:.5f} (0.04 +/- 0.005)")


def test_criterion_04_kendall_w(fx):
    c = centrality_concordance(report_from_fixture(fx.a1))
    record(
        4,
        abs(c.w - 0.95) <= 0.01,
        f"W {c.w:.4f} (0.95 +/- 0.01); uncorrected {c.w_uncorrected:.4f}; "
        f"competition ranks {c.w_competition:.4f}",
    )


def test_criterion_05_density_mean_degree_table1(fx):
    density = density_from_counts(6407, 746)
    mean = mean_degree_from_counts(6407, 746)
    t = fx.table1
    off = [v for v, f, pct in t.rows if abs(100 * f / t.total - pct) > 0.05]
    zero_pct = 100 * t.counts[0] / t.total
    ok = (
        abs(density - 0.023) <= 0.0005
        and abs(mean - 17.18) <= 0.005
        and not off
        and t.counts[0] == 74
        and abs(zero_pct - 9.9) <= 0.05
    )
    record(
        5,
        ok,
        f"density {density:.5f}; mean degree {mean:.4f}; degree distribution rows off {len(off)}; "
        f"degree 0: {t.counts[0]} journals {zero_pct:.2f}%",
    )


def test_criterion_06_table3(fx):
    t = fx.table3
    share = 100 * t.counts[1] / t.total
    ok = t.total == 6407 and abs(share - 74.61) <= 0.05 and max(t.counts) == 40
    record(6, ok, f"sum {t.total}; value-1 share {share:.3f}%; max value {max(t.counts)}")


def random_affiliation(rng: random.Random) -> AffiliationNetwork:
    a = AffiliationNetwork()
    for j in range(rng.randint(1, 12)):
        a.add_event(f"J{j}")
    for e in range(rng.randint(0, 15)):
        for j in rng.sample(range(a.n_events), rng.randint(1, a.n_events)):
            a.add_seat(f"e{e}", f"J{j}")
    return a


def test_criterion_07_oracle_equivalence():
    rng = random.Random(20240607)
    graphs = 0
    worst = 0.0
    comp_bad = proj_bad = 0
    for _ in range(250):
        g = random_graph(rng, max_n=12)
        graphs += 1
        if g.n >= 3:
            diff = np.abs(betweenness_centrality(g) - np.array(brute_betweenness(g)))
            worst = max(worst, float(diff.max()))
        p = components(g)
        closure = transitive_closure(g)
        same = [[p.assignment[i] == p.assignment[j] for j in range(g.n)] for i in range(g.n)]
        comp_bad += same != closure

        a = random_affiliation(rng)
        h = project(a)
        boards = {a.events[e]: {a.actors[x] for x in members} for e, members in enumerate(a.boards)}
        got = {tuple(sorted((h.label(u), h.label(v)))): val for u, v, val in h.edges()}
        proj_bad += got != board_intersections(boards)
    ok = graphs >= 200 and worst < 1e-12 and comp_bad == 0 and proj_bad == 0
    record(
        7,
        ok,
        f"{graphs} graphs; max betweenness |delta| {worst:.1e}; "
        f"component mismatches {comp_bad}; projection mismatches {proj_bad}",
    )


def test_criterion_08_slice_monotonicity():
    rng = random.Random(8)
    violations = 0
    m1_equal = True
    for _ in range(200):
        g = random_graph(rng, max_n=15, max_value=8)
        m1_equal &= m_slice(g, 1) == g
        top = max((v for _, _, v in g.edges()), default=0)
        censuses = [slice_census(g, m) for m in range(1, top + 2)]
        for a, b in zip(censuses, censuses[1:]):
            violations += b.isolated < a.isolated or b.giant_size > a.giant_size
        if censuses[-1].isolated != g.n:
            violations += 1
    ok = violations == 0 and m1_equal
    record(8, ok, f"200 graphs; monotonicity violations {violations}; m=1 slice equals input {m1_equal}")


def test_criterion_09_pajek_round_trip():
    rng = random.Random(9)
    bad = 0
    for _ in range(50):
        g = random_graph(rng, max_n=40, max_value=40)
        bad += read_pajek_net(write_pajek_net(g)) != g
    golden = sorted(GOLDEN.glob("*.net"))
    golden_bad = [p.name for p in golden if write_pajek_net(read_pajek_net(p.read_bytes())) != p.read_bytes()]
    ok = bad == 0 and golden and not golden_bad
    record(9, bool(ok), f"50 random graphs, {bad} failures; {len(golden)} golden files, byte mismatches {golden_bad}")


def test_criterion_10_determinism(tmp_path):
    g = random_graph_n(2000, 0.005, 5, seed=10)
    net = tmp_path / "g.net"
    net.write_bytes(write_pajek_net(g))
    out = {}
    for workers in (1, 8):
        d = tmp_path / f"w{workers}"
        assert main(["analyze", "-i", str(net), "-o", str(d), "--workers", str(workers)]) == 0
        out[workers] = (d / "centrality.csv").read_bytes()
    same = out[1] == out[8]
    record(
        10,
        same,
        f"n={g.n}, lines={g.n_edges}; centrality.csv identical for 1 and 8 workers: {same} "
        f"({len(out[1])} bytes)",
    )
