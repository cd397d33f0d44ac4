"""Graph data model: label interning, the valued journal graph and the
two-mode editor/journal affiliation structure.

Vertices are dense integer ids ``0..n-1``; labels are kept alongside and are
unique within a graph.  Edge values are exact integers (shared-editor counts).
A graph is built by a single writer and treated as read-only afterwards.
"""

from __future__ import annotations

import unicodedata
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .errors import DuplicateEdge, DuplicateVertex, SelfLoop, UnknownVertex

EdgePredicate = Callable[[int, int, int], bool]


def normalize_label(label: str) -> str:
    """NFC-normalize and trim surrounding whitespace."""
    return unicodedata.normalize("NFC", label).strip()


class LabelIndex:
    """Injective label -> dense id mapping."""

    def __init__(self, labels: Iterable[str] = ()):
        self._labels: list[str] = []
        self._ids: dict[str, int] = {}
        for label in labels:
            self.add(label)

    def add(self, label: str) -> int:
        key = normalize_label(label)
        if key in self._ids:
            raise DuplicateVertex(f"duplicate label {key!r}")
        self._ids[key] = len(self._labels)
        self._labels.append(key)
        return self._ids[key]

    def intern(self, label: str) -> int:
        """Return the id for *label*, adding it if unseen."""
        key = normalize_label(label)
        found = self._ids.get(key)
        if found is not None:
            return found
        return self.add(key)

    def get(self, label: str) -> int | None:
        return self._ids.get(normalize_label(label))

    def __getitem__(self, i: int) -> str:
        return self._labels[i]

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def __contains__(self, label: object) -> bool:
        return isinstance(label, str) and normalize_label(label) in self._ids


class JournalGraph:
    """Undirected graph with positive integer edge values.

    No self-loops, no parallel edges.  ``adj[u]`` maps each neighbour of
    ``u`` to the value of the connecting edge.
    """

    def __init__(self) -> None:
        self._index = LabelIndex()
        self._adj: list[dict[int, int]] = []
        self._n_edges = 0
        self._csr: sparse.csr_matrix | None = None

    @classmethod
    def from_edges(
        cls, labels: Iterable[str], edges: Iterable[tuple[int, int, int]]
    ) -> JournalGraph:
        g = cls()
        for label in labels:
            g.add_vertex(label)
        for u, v, value in edges:
            g.add_edge(u, v, value)
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def n_edges(self) -> int:
        return self._n_edges

    @property
    def labels(self) -> list[str]:
        return list(self._index)

    def label(self, v: int) -> str:
        return self._index[v]

    def vertex_id(self, label: str) -> int:
        v = self._index.get(label)
        if v is None:
            raise UnknownVertex(f"no vertex labelled {label!r}")
        return v

    def add_vertex(self, label: str) -> int:
        v = self._index.add(label)
        self._adj.append({})
        self._csr = None
        return v

    def _check(self, v: int) -> None:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.n):
            raise UnknownVertex(f"unknown vertex {v!r}")

    def add_edge(self, u: int, v: int, value: int = 1) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u}")
        if v in self._adj[u]:
            raise DuplicateEdge(f"edge {{{u},{v}}} already present")
        value = int(value)
        if value < 1:
            raise ValueError(f"edge value must be a positive integer, got {value}")
        self._adj[u][v] = value
        self._adj[v][u] = value
        self._n_edges += 1
        self._csr = None

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def adjacency(self, v: int) -> dict[int, int]:
        """Neighbour -> edge value (a copy)."""
        return dict(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self._adj), dtype=np.int64, count=self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def value(self, u: int, v: int) -> int:
        try:
            return self._adj[u][v]
        except (KeyError, IndexError):
            raise UnknownVertex(f"no edge {{{u},{v}}}") from None

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, value)`` with ``u < v``, sorted by ``(u, v)``."""
        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v, nbrs[v]

    def edge_values(self) -> list[int]:
        return [value for _, _, value in self.edges()]

    def subgraph_by_edges(self, keep: EdgePredicate) -> JournalGraph:
        """Same vertices (ids and labels), only the edges where ``keep(u, v, value)``."""
        return JournalGraph.from_edges(
            self._index, (e for e in self.edges() if keep(*e))
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[JournalGraph, list[int]]:
        """Subgraph on *vertices* (renumbered in ascending id order) and the old ids."""
        keep = sorted(set(vertices))
        new_id = {old: i for i, old in enumerate(keep)}
        edges = [
            (new_id[u], new_id[v], value)
            for u, v, value in self.edges()
            if u in new_id and v in new_id
        ]
        return JournalGraph.from_edges((self._index[v] for v in keep), edges), keep

    def to_csr(self) -> sparse.csr_matrix:
        """Binary symmetric adjacency matrix (float64, edge values dropped)."""
        if self._csr is None:
            rows = [u for u, nbrs in enumerate(self._adj) for _ in nbrs]
            cols = [v for nbrs in self._adj for v in nbrs]
            data = np.ones(len(rows), dtype=np.float64)
            mat = sparse.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))
            mat.sort_indices()
            self._csr = mat
        return self._csr

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JournalGraph):
            return NotImplemented
        return self.labels == other.labels and list(self.edges()) == list(other.edges())

    def __repr__(self) -> str:
        return f"JournalGraph(n={self.n}, edges={self.n_edges})"


@dataclass
class AffiliationNetwork:
    """Two-mode network: editors (actors) hold seats on journal boards (events)."""

    actors: LabelIndex = field(default_factory=LabelIndex)
    events: LabelIndex = field(default_factory=LabelIndex)
    boards: list[set[int]] = field(default_factory=list)  # event -> actor ids
    memberships: list[set[int]] = field(default_factory=list)  # actor -> event ids
    duplicates: int = 0

    def add_actor(self, label: str) -> int:
        a = self.actors.intern(label)
        if a == len(self.memberships):
            self.memberships.append(set())
        return a

    def add_event(self, label: str) -> int:
        e = self.events.intern(label)
        if e == len(self.boards):
            self.boards.append(set())
        return e

    def add_seat(self, editor: str, journal: str) -> bool:
        """Record a seat; returns False (and counts a duplicate) if already held."""
        a = self.add_actor(editor)
        e = self.add_event(journal)
        if e in self.memberships[a]:
            self.duplicates += 1
            return False
        self.memberships[a].add(e)
        self.boards[e].add(a)
        return True

    def incidences(self) -> Iterator[tuple[int, int]]:
        for a, events in enumerate(self.memberships):
            for e in sorted(events):
                yield a, e

    @property
    def n_actors(self) -> int:
        return len(self.actors)

    @property
    def n_events(self) -> int:
        return len(self.events)

    @property
    def seats(self) -> int:
        return sum(len(m) for m in self.memberships)

    @property
    def participation(self) -> float:
        return self.seats / self.n_actors if self.n_actors else 0.0
