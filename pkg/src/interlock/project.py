"""Two-mode to one-mode projection and whole-network descriptive statistics."""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable
from dataclasses import asdict, dataclass
from itertools import combinations

import numpy as np

from .core import AffiliationNetwork, JournalGraph
from .errors import DegenerateNetwork


def project(a: AffiliationNetwork) -> JournalGraph:
    """Journal graph where each edge value counts the editors both boards share.

    Every journal becomes a vertex (in first-seen order), so journals whose
    editors sit on no other board stay in as isolated vertices.
    """
    shared: Counter[tuple[int, int]] = Counter()
    for events in a.memberships:
        for pair in combinations(sorted(events), 2):
            shared[pair] += 1
    return JournalGraph.from_edges(a.events, ((u, v, k) for (u, v), k in sorted(shared.items())))


@dataclass(frozen=True)
class DistributionRow:
    value: int
    freq: int
    freq_pct: float


@dataclass(frozen=True)
class DistributionTable:
    rows: tuple[DistributionRow, ...]

    @property
    def total(self) -> int:
        return sum(r.freq for r in self.rows)

    def freq(self, value: int) -> int:
        for r in self.rows:
            if r.value == value:
                return r.freq
        return 0

    def as_dict(self) -> dict[int, int]:
        return {r.value: r.freq for r in self.rows}

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def distribution(values: Iterable[int]) -> DistributionTable:
    return distribution_from_counts(Counter(int(v) for v in values))


def distribution_from_counts(counts: dict[int, int]) -> DistributionTable:
    """Build a table from value -> frequency; percentages are of the total."""
    total = sum(counts.values())
    rows = tuple(
        DistributionRow(v, f, 100.0 * f / total) for v, f in sorted(counts.items()) if f
    )
    return DistributionTable(rows)


def degree_distribution(g: JournalGraph) -> DistributionTable:
    return distribution(g.degrees())


def line_value_distribution(g: JournalGraph) -> DistributionTable:
    return distribution(g.edge_values())


def density_from_counts(lines: int, n: int) -> float:
    if n < 2:
        raise DegenerateNetwork(f"density needs at least 2 vertices, got {n}")
    return lines / (n * (n - 1) / 2)


def mean_degree_from_counts(lines: int, n: int) -> float:
    return 2 * lines / n


def lower_median(values: Iterable[int]) -> int:
    s = sorted(values)
    if not s:
        raise DegenerateNetwork("median of an empty list")
    return s[(len(s) - 1) // 2]


@dataclass(frozen=True)
class NetworkSummary:
    """Editor/seat fields are None when only the one-mode graph is known."""

    journals: int
    editors: int | None
    seats: int | None
    mean_seats_per_journal: float | None
    mean_participation: float | None
    lines: int
    density: float
    mean_degree: float
    median_degree: int
    degree_sd: float

    def as_dict(self) -> dict:
        return asdict(self)


def summarize(a: AffiliationNetwork | None, g: JournalGraph) -> NetworkSummary:
    n = g.n
    if n < 2:
        raise DegenerateNetwork(f"summary needs at least 2 journals, got {n}")
    deg = g.degrees().astype(np.float64)
    mean = float(deg.mean())
    sd = math.sqrt(float(((deg - mean) ** 2).mean()))
    if a is not None:
        editors, seats = a.n_actors, a.seats
        per_journal = seats / a.n_events if a.n_events else 0.0
        participation = a.participation
    else:
        editors = seats = per_journal = participation = None
    return NetworkSummary(
        journals=n,
        editors=editors,
        seats=seats,
        mean_seats_per_journal=per_journal,
        mean_participation=participation,
        lines=g.n_edges,
        density=density_from_counts(g.n_edges, n),
        mean_degree=mean_degree_from_counts(g.n_edges, n),
        median_degree=lower_median(g.degrees().tolist()),
        degree_sd=sd,
    )
