"""Replay the published tables: recompute every quantity derivable from the
fixture CSVs and compare with the printed values.

The raw board data was never released, so these checks work from the
tables alone (per-journal centralities, the degree distribution and the
line-value distribution) plus the headline counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .centrality import (
    CentralityReport,
    betweenness_centralization,
    competition_ranks,
    degree_centralization,
)
from .concordance import centrality_concordance
from .errors import InterlockError
from .ingest import (
    FixtureDistribution,
    FixtureRowA1,
    read_fixture_a1,
    read_fixture_distribution,
)
from .project import density_from_counts, lower_median, mean_degree_from_counts

# headline figures of the published network
JOURNALS = 746
LINES = 6407
MAX_DEGREE = 124
ISOLATED = 74
DEGREE_CENTRALIZATION = 0.14
BETWEENNESS_CENTRALIZATION = 0.04
KENDALL_W = 0.95
DENSITY = 0.023
MEAN_DEGREE = 17.18
MEDIAN_DEGREE = 11
VALUE_ONE_SHARE = 74.61
MAX_LINE_VALUE = 40

FIXTURE_FILES = ("table_a1.csv", "table_1.csv", "table_3.csv")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


@dataclass(frozen=True)
class Fixtures:
    a1: list[FixtureRowA1]
    table1: FixtureDistribution
    table3: FixtureDistribution


def default_fixture_dir() -> Path:
    return Path(str(resources.files("interlock") / "data"))


def load_fixtures(directory: Path | str | None = None) -> Fixtures:
    d = Path(directory) if directory is not None else default_fixture_dir()
    for name in FIXTURE_FILES:
        if not (d / name).is_file():
            raise FileNotFoundError(f"missing fixture file {d / name}")

    def read(name, fn, *args):
        try:
            with open(d / name, "rb") as fh:
                return fn(fh, *args)
        except InterlockError as exc:
            raise InterlockError(f"{name}: {exc}") from exc

    return Fixtures(
        a1=read("table_a1.csv", read_fixture_a1),
        table1=read("table_1.csv", read_fixture_distribution, "degree"),
        table3=read("table_3.csv", read_fixture_distribution, "line_value"),
    )


def report_from_fixture(rows: list[FixtureRowA1]) -> CentralityReport:
    """Centrality report holding the printed values (betweenness back to [0, 1])."""
    return CentralityReport.from_values(
        [r.journal for r in rows],
        [r.degree for r in rows],
        [r.closeness for r in rows],
        [r.betweenness_x100 / 100 for r in rows],
        normalized_degree=[r.normalized_degree for r in rows],
    )


def _within(name, value, target, tol) -> Check:
    ok = abs(value - target) <= tol
    return Check(name, ok, f"{value:.6g} vs {target} (tol {tol})")


def rank_mismatches(values, printed_ranks) -> list[int]:
    """Rows whose printed rank differs from the competition rank of the values."""
    ranks = competition_ranks(values)
    return [i for i, (a, b) in enumerate(zip(ranks, printed_ranks)) if a != b]


def rank_block_violations(values, printed_ranks) -> list[int]:
    """Rows whose printed rank cannot come from any tie-break of the rounded values.

    A value tied with t-1 others at print precision can legitimately carry any
    rank in ``[r, r + t - 1]`` where r is its competition rank; ranks must
    also never invert the order of distinct printed values.
    """
    v = np.asarray(values, dtype=np.float64)
    ranks = competition_ranks(v)
    tied = Counter(v.tolist())
    bad = [
        i
        for i, (value, rank, printed) in enumerate(zip(v, ranks, printed_ranks))
        if not rank <= printed <= rank + tied[float(value)] - 1
    ]
    order = np.argsort(-v, kind="stable")
    printed_sorted = np.asarray(printed_ranks)[order]
    if np.any(np.diff(printed_sorted)[np.diff(v[order]) < 0] < 0):
        bad.append(-1)
    return bad


def check_a1(rows: list[FixtureRowA1]) -> list[Check]:
    n = len(rows)
    deg = [r.degree for r in rows]
    checks = [Check("journal table row count", n == JOURNALS, f"{n} rows, expected {JOURNALS}")]

    off = [r.journal for r in rows if abs(r.normalized_degree - r.degree / (n - 1)) > 0.0005]
    checks.append(
        Check(
            "normalized degree = degree/(n-1)",
            not off,
            f"{len(off)} rows off by more than 0.0005" + (f" (first: {off[0]})" if off else ""),
        )
    )
    bad = rank_mismatches(deg, [r.rank_degree for r in rows])
    checks.append(Check("degree ranks (competition, exact)", not bad, f"{len(bad)} mismatches"))
    for column, values, printed in (
        ("closeness", [r.closeness for r in rows], [r.rank_closeness for r in rows]),
        ("betweenness", [r.betweenness_x100 for r in rows], [r.rank_betweenness for r in rows]),
    ):
        viol = rank_block_violations(values, printed)
        checks.append(
            Check(
                f"{column} ranks consistent with 3-decimal values",
                not viol,
                f"{len(viol)} rows outside their tie block",
            )
        )
    zero = [r for r in rows if r.degree == 0]
    checks.append(
        Check(
            "degree-0 journals: closeness 0, betweenness 0, rank 673",
            len(zero) == ISOLATED
            and all(r.closeness == 0 and r.betweenness_x100 == 0 for r in zero)
            and all(r.rank_degree == n - ISOLATED + 1 for r in zero),
            f"{len(zero)} isolated journals",
        )
    )
    checks.append(
        _within("degree centralization", degree_centralization(deg), DEGREE_CENTRALIZATION, 0.005)
    )
    from_counts = (JOURNALS * MAX_DEGREE - 2 * LINES) / ((JOURNALS - 1) * (JOURNALS - 2))
    checks.append(
        _within("degree centralization from counts", from_counts, DEGREE_CENTRALIZATION, 0.005)
    )
    checks.append(
        _within(
            "betweenness centralization",
            betweenness_centralization([r.betweenness_x100 / 100 for r in rows]),
            BETWEENNESS_CENTRALIZATION,
            0.005,
        )
    )
    conc = centrality_concordance(report_from_fixture(rows))
    c = _within("Kendall W (mid-ranks, tie-corrected)", conc.w, KENDALL_W, 0.01)
    checks.append(
        Check(
            c.name,
            c.passed,
            c.detail
            + f"; uncorrected {conc.w_uncorrected:.4f}; competition ranks {conc.w_competition:.4f}",
        )
    )
    checks.append(
        Check(
            "degree sum = 2 x lines",
            sum(deg) == 2 * LINES,
            f"{sum(deg)} vs {2 * LINES}",
        )
    )
    checks.append(
        Check("median degree (lower middle)", lower_median(deg) == MEDIAN_DEGREE,
              f"{lower_median(deg)} vs {MEDIAN_DEGREE}")
    )
    return checks


def check_counts() -> list[Check]:
    return [
        _within("density from counts", density_from_counts(LINES, JOURNALS), DENSITY, 0.0005),
        _within("mean degree from counts", mean_degree_from_counts(LINES, JOURNALS), MEAN_DEGREE, 0.005),
    ]


def check_table1(t: FixtureDistribution, a1: list[FixtureRowA1] | None = None) -> list[Check]:
    total = t.total
    off = [
        (v, pct) for v, f, pct in t.rows if pct is not None and abs(100 * f / total - pct) > 0.05
    ]
    checks = [
        Check("degree distribution total", total == JOURNALS, f"{total} journals"),
        Check("degree distribution percentages", not off, f"{len(off)} rows off by more than 0.05"),
        Check(
            "degree distribution degree-0 row",
            t.counts.get(0) == ISOLATED and abs(100 * ISOLATED / total - 9.9) <= 0.05,
            f"{t.counts.get(0)} journals, {100 * t.counts.get(0, 0) / total:.2f}%",
        ),
    ]
    if a1 is not None:
        from_a1 = Counter(r.degree for r in a1)
        checks.append(
            Check("degree distribution matches journal table", dict(from_a1) == t.counts, "per-degree counts")
        )
    return checks


def check_table3(t: FixtureDistribution) -> list[Check]:
    total = t.total
    share = 100 * t.counts.get(1, 0) / total if total else 0.0
    off = [v for v, f, pct in t.rows if pct is not None and abs(100 * f / total - pct) > 0.005]
    return [
        Check("line-value distribution total = lines", total == LINES, f"{total} vs {LINES}"),
        _within("line-value distribution value-1 share %", share, VALUE_ONE_SHARE, 0.05),
        Check("line-value distribution max value", max(t.counts) == MAX_LINE_VALUE, f"{max(t.counts)}"),
        Check("line-value distribution percentages", not off, f"{len(off)} rows off by more than 0.005"),
    ]


def run_checks(directory: Path | str | None = None) -> list[Check]:
    fx = load_fixtures(directory)
    return (
        check_a1(fx.a1)
        + check_counts()
        + check_table1(fx.table1, fx.a1)
        + check_table3(fx.table3)
    )
