"""Connected components, m-slices and per-threshold component census.

Components of an undirected graph are the "weak components" of Pajek
terminology; edge values are ignored when deciding connectivity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .core import JournalGraph
from .project import DistributionTable, distribution_from_counts


@dataclass(frozen=True)
class ComponentPartition:
    """``assignment[v]`` is the component id of vertex v.

    Ids run ``0..k-1`` by decreasing size, ties broken by smallest member id,
    so component 0 is always a largest one.
    """

    assignment: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def giant(self) -> int:
        return 0

    @property
    def n(self) -> int:
        return len(self.assignment)

    def __len__(self) -> int:
        return len(self.sizes)

    def members(self, component: int) -> list[int]:
        return [v for v, c in enumerate(self.assignment) if c == component]

    def groups(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.sizes]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out


def _find(parent: list[int], v: int) -> int:
    root = v
    while parent[root] != root:
        root = parent[root]
    while parent[v] != root:
        parent[v], v = root, parent[v]
    return root


def components(g: JournalGraph) -> ComponentPartition:
    parent = list(range(g.n))
    for u, v, _ in g.edges():
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            # smaller root wins, so every root is its component's minimum id
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    roots = [_find(parent, v) for v in range(g.n)]
    size = Counter(roots)
    order = sorted(size, key=lambda r: (-size[r], r))
    cid = {r: i for i, r in enumerate(order)}
    return ComponentPartition(
        assignment=tuple(cid[r] for r in roots),
        sizes=tuple(size[r] for r in order),
    )


def m_slice(g: JournalGraph, m: int) -> JournalGraph:
    """Keep only the lines whose value is at least *m*; all vertices stay."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return g.subgraph_by_edges(lambda u, v, value: value >= m)


@dataclass(frozen=True)
class SliceCensus:
    m: int
    component_count_nontrivial: int
    journals_in_nontrivial: int
    isolated: int
    giant_size: int
    size_histogram: DistributionTable

    @property
    def component_count_all(self) -> int:
        return self.component_count_nontrivial + self.isolated


def census(p: ComponentPartition, m: int = 1) -> SliceCensus:
    nontrivial = [s for s in p.sizes if s >= 2]
    return SliceCensus(
        m=m,
        component_count_nontrivial=len(nontrivial),
        journals_in_nontrivial=sum(nontrivial),
        isolated=sum(1 for s in p.sizes if s == 1),
        giant_size=p.sizes[0] if p.sizes else 0,
        size_histogram=distribution_from_counts(Counter(p.sizes)),
    )


def slice_census(g: JournalGraph, m: int) -> SliceCensus:
    return census(components(m_slice(g, m)), m)


@dataclass(frozen=True)
class ComponentListing:
    component: int
    members: tuple[str, ...]  # sorted labels
    edges: tuple[tuple[str, str, int], ...]
    betweenness: dict[str, float]  # measured on the full network


def component_members(
    g: JournalGraph,
    m: int,
    min_size: int = 2,
    betweenness: np.ndarray | None = None,
) -> list[ComponentListing]:
    """Components of the m-slice with at least *min_size* journals.

    *betweenness* must be per-vertex values of the unsliced graph; it is
    computed when not supplied.
    """
    if min_size < 2:
        raise ValueError(f"min_size must be >= 2, got {min_size}")
    sliced = m_slice(g, m)
    p = components(sliced)
    if betweenness is None:
        from .centrality import betweenness_centrality

        betweenness = betweenness_centrality(g) if g.n >= 3 else np.zeros(g.n)
    out = []
    for cid, verts in enumerate(p.groups()):
        if len(verts) < min_size:
            continue
        vset = set(verts)
        edges = [
            (g.label(u), g.label(v), value)
            for u, v, value in sliced.edges()
            if u in vset
        ]
        edges.sort()
        out.append(
            ComponentListing(
                component=cid,
                members=tuple(sorted(g.label(v) for v in verts)),
                edges=tuple(edges),
                betweenness={g.label(v): float(betweenness[v]) for v in verts},
            )
        )
    return out
