"""Degree, closeness and betweenness centrality, competition ranks and
Freeman centralization indices.

All distances are geodesic lengths counted in lines; edge values are
ignored.  Shortest-path work is done by breadth-first search run from a batch
of sources at once: each BFS level is one sparse-matrix product, and
betweenness uses the usual dependency accumulation over the levels in
reverse.  Batches have a fixed width and their partial sums are reduced in
batch order, so results are bit-identical for any number of workers.
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy import sparse

from .core import JournalGraph
from .errors import DegenerateNetwork

BATCH = 64

ClosenessVariant = Literal["verbal", "corrected"]


def _bfs_levels(adj: sparse.csr_matrix, sources: np.ndarray):
    """Distances (-1 = unreachable) and geodesic counts from each source.

    Returns ``(dist, sigma)`` of shape ``(n, len(sources))``.
    """
    n = adj.shape[0]
    k = len(sources)
    cols = np.arange(k)
    dist = np.full((n, k), -1, dtype=np.int64)
    sigma = np.zeros((n, k), dtype=np.float64)
    dist[sources, cols] = 0
    sigma[sources, cols] = 1.0
    frontier = sigma.copy()
    level = 0
    while True:
        incoming = adj @ frontier
        new = (incoming > 0) & (dist < 0)
        if not new.any():
            break
        level += 1
        dist[new] = level
        sigma[new] = incoming[new]
        frontier = np.where(new, sigma, 0.0)
    return dist, sigma


def _dependency_batch(adj: sparse.csr_matrix, sources: np.ndarray) -> np.ndarray:
    """Summed pair dependencies over the batch of sources (one value per vertex)."""
    dist, sigma = _bfs_levels(adj, sources)
    delta = np.zeros_like(sigma)
    depth = int(dist.max())
    safe_sigma = np.where(sigma > 0, sigma, 1.0)
    for level in range(depth, 0, -1):
        at = dist == level
        coeff = np.where(at, (1.0 + delta) / safe_sigma, 0.0)
        pulled = adj @ coeff
        parent = dist == level - 1
        delta += np.where(parent, sigma * pulled, 0.0)
    delta[sources, np.arange(len(sources))] = 0.0
    return delta.sum(axis=1)


def _closeness_batch(adj: sparse.csr_matrix, sources: np.ndarray):
    dist, _ = _bfs_levels(adj, sources)
    reached = dist > 0
    return reached.sum(axis=0), np.where(reached, dist, 0).sum(axis=0)


def _batches(n: int) -> list[np.ndarray]:
    return [np.arange(i, min(i + BATCH, n)) for i in range(0, n, BATCH)]


def _map_batches(fn, adj, n: int, workers: int):
    batches = _batches(n)
    if workers <= 1 or len(batches) <= 1:
        return [fn(adj, b) for b in batches]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, [adj] * len(batches), batches))


# ---------------------------------------------------------------- geodesics


@dataclass(frozen=True)
class Geodesics:
    """``dist[s, t]`` (inf when unreachable) and ``sigma[s, t]`` geodesic counts."""

    dist: np.ndarray
    sigma: np.ndarray

    def distance(self, s: int, t: int) -> float:
        return float(self.dist[s, t])

    def count(self, s: int, t: int) -> int:
        return int(self.sigma[s, t])


def all_pairs_geodesics(g: JournalGraph) -> Geodesics:
    n = g.n
    dist = np.full((n, n), np.inf)
    sigma = np.zeros((n, n))
    adj = g.to_csr()
    for b in _batches(n):
        d, s = _bfs_levels(adj, b)
        dist[b] = np.where(d >= 0, d, np.inf).T
        sigma[b] = s.T
    return Geodesics(dist, sigma)


# ---------------------------------------------------------------- measures


def degree_centrality(g: JournalGraph) -> tuple[np.ndarray, np.ndarray]:
    """Degrees (distinct neighbours) and degrees divided by ``n - 1``."""
    if g.n < 2:
        raise DegenerateNetwork(f"degree centrality needs n >= 2, got {g.n}")
    deg = g.degrees()
    return deg, deg / (g.n - 1)


def closeness_from_counts(
    reached: np.ndarray, total: np.ndarray, n: int, variant: ClosenessVariant = "corrected"
) -> np.ndarray:
    reached = np.asarray(reached, dtype=np.float64)
    total = np.asarray(total, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        verbal = np.where(reached > 0, reached / np.where(total > 0, total, 1.0), 0.0)
    if variant == "verbal":
        return verbal
    if variant == "corrected":
        return verbal * (reached / (n - 1)) if n > 1 else np.zeros_like(verbal)
    raise ValueError(f"unknown closeness variant {variant!r}")


def closeness_centrality(
    g: JournalGraph, variant: ClosenessVariant = "corrected", workers: int = 1
) -> np.ndarray:
    """Reachable count over summed distance, per vertex.

    ``verbal`` uses only the vertex's own component; ``corrected`` multiplies
    by the reachable fraction ``r / (n - 1)`` so small components score low.
    Isolated vertices get 0 under both.
    """
    if variant not in ("verbal", "corrected"):
        raise ValueError(f"unknown closeness variant {variant!r}")
    n = g.n
    if n == 0:
        return np.zeros(0)
    parts = _map_batches(_closeness_batch, g.to_csr(), n, workers)
    reached = np.concatenate([p[0] for p in parts])
    total = np.concatenate([p[1] for p in parts])
    return closeness_from_counts(reached, total, n, variant)


def raw_betweenness(g: JournalGraph, workers: int = 1) -> np.ndarray:
    """Unnormalized betweenness: sum over unordered pairs of sigma_st(v)/sigma_st."""
    n = g.n
    total = np.zeros(n)
    if n == 0:
        return total
    for part in _map_batches(_dependency_batch, g.to_csr(), n, workers):
        total += part
    return total / 2.0


def betweenness_centrality(g: JournalGraph, workers: int = 1) -> np.ndarray:
    """Betweenness divided by ``(n-1)(n-2)/2``, unreachable pairs included."""
    n = g.n
    if n < 3:
        raise DegenerateNetwork(f"betweenness needs n >= 3, got {n}")
    return raw_betweenness(g, workers) / ((n - 1) * (n - 2) / 2)


def competition_ranks(values: Sequence[float], descending: bool = True) -> np.ndarray:
    """1 + number of strictly better values; ties share the smallest rank."""
    v = np.asarray(values, dtype=np.float64)
    if not descending:
        v = -v
    s = np.sort(v)
    # count of values strictly greater than each v
    greater = len(s) - np.searchsorted(s, v, side="right")
    return greater + 1


# ------------------------------------------------------------ centralization


def degree_centralization(degrees: Sequence[int]) -> float:
    d = np.asarray(degrees, dtype=np.float64)
    n = len(d)
    if n < 3:
        raise DegenerateNetwork(f"degree centralization needs n >= 3, got {n}")
    return float((d.max() - d).sum() / ((n - 1) * (n - 2)))


def closeness_centralization(closeness: Sequence[float]) -> float:
    """Freeman index for closeness values of a connected graph."""
    c = np.asarray(closeness, dtype=np.float64)
    n = len(c)
    if n < 3:
        raise DegenerateNetwork(f"closeness centralization needs n >= 3, got {n}")
    return float((c.max() - c).sum() / ((n - 2) * (n - 1) / (2 * n - 3)))


def betweenness_centralization(betweenness: Sequence[float]) -> float:
    """Freeman index for betweenness already normalized to [0, 1]."""
    b = np.asarray(betweenness, dtype=np.float64)
    n = len(b)
    if n < 3:
        raise DegenerateNetwork(f"betweenness centralization needs n >= 3, got {n}")
    return float((b.max() - b).sum() / (n - 1))


@dataclass(frozen=True)
class CentralizationIndices:
    degree_centralization: float
    closeness_centralization: float
    betweenness_centralization: float
    closeness_subnetwork_size: int


def centralization(
    g: JournalGraph, betweenness: np.ndarray | None = None, workers: int = 1
) -> CentralizationIndices:
    """Closeness centralization uses the largest connected component only."""
    from .cohesion import components

    n = g.n
    if n < 3:
        raise DegenerateNetwork(f"centralization needs n >= 3, got {n}")
    if betweenness is None:
        betweenness = betweenness_centrality(g, workers)
    giant = components(g).members(0)
    if len(giant) >= 3:
        sub, _ = g.induced_subgraph(giant)
        c_close = closeness_centralization(closeness_centrality(sub, "verbal", workers))
    else:
        c_close = 0.0
    return CentralizationIndices(
        degree_centralization=degree_centralization(g.degrees()),
        closeness_centralization=c_close,
        betweenness_centralization=betweenness_centralization(betweenness),
        closeness_subnetwork_size=len(giant),
    )


# ------------------------------------------------------------------ report

RANK_DECIMALS = 12


def _rank_key(values: np.ndarray) -> np.ndarray:
    # float noise from summation order must not split genuine ties
    return np.round(values, RANK_DECIMALS)


@dataclass(frozen=True)
class CentralityReport:
    labels: tuple[str, ...]
    degree: np.ndarray
    normalized_degree: np.ndarray
    closeness: np.ndarray
    betweenness: np.ndarray
    rank_degree: np.ndarray
    rank_closeness: np.ndarray
    rank_betweenness: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def from_values(cls, labels, degree, closeness, betweenness, normalized_degree=None):
        degree = np.asarray(degree, dtype=np.int64)
        closeness = np.asarray(closeness, dtype=np.float64)
        betweenness = np.asarray(betweenness, dtype=np.float64)
        n = len(degree)
        if normalized_degree is None:
            normalized_degree = degree / (n - 1) if n > 1 else np.zeros(n)
        return cls(
            labels=tuple(labels),
            degree=degree,
            normalized_degree=np.asarray(normalized_degree, dtype=np.float64),
            closeness=closeness,
            betweenness=betweenness,
            rank_degree=competition_ranks(degree),
            rank_closeness=competition_ranks(_rank_key(closeness)),
            rank_betweenness=competition_ranks(_rank_key(betweenness)),
        )

    def rows(self):
        """Rows in fixture column order, betweenness x100, 3 decimals."""
        for i, label in enumerate(self.labels):
            yield (
                label,
                int(self.degree[i]),
                f"{self.normalized_degree[i]:.3f}",
                int(self.rank_degree[i]),
                f"{self.closeness[i]:.3f}",
                int(self.rank_closeness[i]),
                f"{100 * self.betweenness[i]:.3f}",
                int(self.rank_betweenness[i]),
            )


def centrality_report(
    g: JournalGraph, variant: ClosenessVariant = "corrected", workers: int = 1
) -> CentralityReport:
    deg, norm = degree_centrality(g)
    return CentralityReport.from_values(
        g.labels,
        deg,
        closeness_centrality(g, variant, workers),
        betweenness_centrality(g, workers),
        normalized_degree=norm,
    )

