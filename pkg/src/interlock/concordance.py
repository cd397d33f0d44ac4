"""Rank agreement between centrality rankings: Kendall's tau-b for pairs and
Kendall's coefficient of concordance W for the whole set."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .centrality import CentralityReport, competition_ranks
from .errors import ShapeError, UndefinedStatistic

RankMethod = Literal["mid", "competition"]


def midranks(values: Sequence[float], descending: bool = True) -> np.ndarray:
    """Ranks 1..n where tied values share the mean of the positions they span."""
    v = np.asarray(values, dtype=np.float64)
    key = -v if descending else v
    order = np.argsort(key, kind="stable")
    sorted_key = key[order]
    ranks = np.empty(len(v), dtype=np.float64)
    i = 0
    while i < len(v):
        j = i
        while j + 1 < len(v) and sorted_key[j + 1] == sorted_key[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def tie_groups(values: Sequence[float]) -> list[int]:
    """Sizes of the groups of equal values that have more than one member."""
    _, counts = np.unique(np.asarray(values, dtype=np.float64), return_counts=True)
    return [int(c) for c in counts if c > 1]


def kendall_tau_b(x: Sequence[float], y: Sequence[float]) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ShapeError(f"tau needs two equal-length lists, got {x.shape} and {y.shape}")
    n = len(x)
    if n < 2:
        raise ShapeError("tau needs at least 2 observations")
    s = 0
    tied_x = tied_y = 0
    # one row of the pair matrix at a time keeps memory at O(n)
    for i in range(n - 1):
        dx = np.sign(x[i + 1 :] - x[i]).astype(np.int64)
        dy = np.sign(y[i + 1 :] - y[i]).astype(np.int64)
        s += int((dx * dy).sum())
        tied_x += int((dx == 0).sum())
        tied_y += int((dy == 0).sum())
    pairs = n * (n - 1) // 2
    denom = (pairs - tied_x) * (pairs - tied_y)
    if denom == 0:
        raise UndefinedStatistic("tau-b undefined: a list is entirely tied")
    return s / float(np.sqrt(float(denom)))


@dataclass(frozen=True)
class RankMatrix:
    """``ranks[j, i]``: rank given to item i by judge j."""

    ranks: np.ndarray
    tie_groups: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def m(self) -> int:
        return self.ranks.shape[0]

    @property
    def n(self) -> int:
        return self.ranks.shape[1]

    @classmethod
    def from_values(
        cls, columns: Sequence[Sequence[float]], method: RankMethod = "mid"
    ) -> RankMatrix:
        """Rank each value list in descending order (largest value gets rank 1)."""
        lengths = {len(c) for c in columns}
        if len(lengths) != 1:
            raise ShapeError(f"judges rank different numbers of items: {sorted(lengths)}")
        if method == "mid":
            ranks = np.array([midranks(c) for c in columns])
        elif method == "competition":
            ranks = np.array([competition_ranks(c) for c in columns], dtype=np.float64)
        else:
            raise ValueError(f"unknown rank method {method!r}")
        return cls(ranks, tuple(tuple(tie_groups(c)) for c in columns))


def kendall_w(r: RankMatrix, tie_correction: bool = True) -> float:
    m, n = r.ranks.shape
    if m < 2 or n < 2:
        raise ShapeError(f"W needs at least 2 judges and 2 items, got {m}x{n}")
    totals = r.ranks.sum(axis=0)
    s = float(((totals - m * (n + 1) / 2) ** 2).sum())
    ties = sum(t**3 - t for groups in r.tie_groups for t in groups) if tie_correction else 0
    denom = m * m * (n**3 - n) - m * ties
    if denom <= 0:
        raise UndefinedStatistic("W undefined: every judge ties all items")
    return 12 * s / denom


@dataclass(frozen=True)
class ConcordanceResult:
    w: float
    w_uncorrected: float
    w_competition: float
    tau: np.ndarray  # 3x3, order degree / closeness / betweenness
    n: int
    tie_groups: dict[str, int]

    MEASURES = ("degree", "closeness", "betweenness")

    def as_dict(self) -> dict:
        pairs = {}
        for i in range(3):
            for j in range(i + 1, 3):
                pairs[f"{self.MEASURES[i]}~{self.MEASURES[j]}"] = round(float(self.tau[i, j]), 6)
        return {
            "n": self.n,
            "kendall_w": round(self.w, 6),
            "kendall_w_uncorrected": round(self.w_uncorrected, 6),
            "kendall_w_competition_ranks": round(self.w_competition, 6),
            "tau_b": pairs,
            "tie_groups": self.tie_groups,
        }


def centrality_concordance(report: CentralityReport) -> ConcordanceResult:
    """W and pairwise tau-b over the degree, closeness and betweenness values."""
    if report.n < 2:
        raise ShapeError("concordance needs at least 2 vertices")
    columns = [report.degree, report.closeness, report.betweenness]
    mid = RankMatrix.from_values(columns, "mid")
    w = kendall_w(mid)
    tau = np.eye(3)
    for i in range(3):
        for j in range(i + 1, 3):
            tau[i, j] = tau[j, i] = kendall_tau_b(columns[i], columns[j])
    return ConcordanceResult(
        w=w,
        w_uncorrected=kendall_w(mid, tie_correction=False),
        w_competition=kendall_w(RankMatrix.from_values(columns, "competition")),
        tau=tau,
        n=report.n,
        tie_groups={
            name: len(groups) for name, groups in zip(ConcordanceResult.MEASURES, mid.tie_groups)
        },
    )
