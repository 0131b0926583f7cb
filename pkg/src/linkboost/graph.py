"""Undirected social graph: SNAP edge-list parsing, reciprocity filtering, snowball subsampling.

Node ids are remapped to a dense ``0..n-1`` range at construction; the
original input ids are kept in a side mapping so reports and the CLI can
speak the dataset's own vocabulary.
"""

from __future__ import annotations

import gzip
import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .errors import DataError, ParseError

_GZIP_MAGIC = b"\x1f\x8b"


@dataclass(frozen=True)
class EdgeList:
    """Directed node pairs as read from input, in input order.

    Self-loops and exact duplicate pairs are dropped at parse time and
    counted rather than kept.
    """

    pairs: tuple[tuple[int, int], ...]
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0


@dataclass(frozen=True)
class DatasetMeta:
    """Node/edge counts of a dataset before and after preprocessing."""

    name: str
    nodes_before: int
    edges_before: int
    nodes_after: int
    edges_after: int
    mutualize_mode: str = "auto"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "nodes_before": self.nodes_before,
            "edges_before": self.edges_before,
            "nodes_after": self.nodes_after,
            "edges_after": self.edges_after,
            "mutualize_mode": self.mutualize_mode,
        }


class Graph:
    """Immutable undirected simple graph with adjacency sets.

    Instances are safe to share across worker processes/threads; nothing
    mutates after construction.
    """

    __slots__ = ("_neighbor_sets", "_sorted_neighbors", "_original_ids", "_edge_count")

    def __init__(
        self,
        neighbor_sets: tuple[frozenset[int], ...],
        original_ids: tuple[int, ...],
        edge_count: int,
    ):
        self._neighbor_sets = neighbor_sets
        self._sorted_neighbors = tuple(tuple(sorted(s)) for s in neighbor_sets)
        self._original_ids = original_ids
        self._edge_count = edge_count

    @classmethod
    def from_undirected_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        nodes: Iterable[int] | None = None,
    ) -> "Graph":
        """Build a graph from undirected edges over arbitrary (hashable-int) ids.

        ``nodes`` may add ids beyond the edge endpoints (isolated nodes are
        kept here; dropping them is a preprocessing decision, see
        :func:`mutualize`). Dense ids follow sorted original-id order, so an
        input already labelled ``0..n-1`` keeps its labels.
        """
        edge_set = set()
        node_set = set(nodes) if nodes is not None else set()
        for u, v in edges:
            if u == v:
                continue
            edge_set.add((u, v) if u < v else (v, u))
            node_set.add(u)
            node_set.add(v)
        original = tuple(sorted(node_set))
        dense = {orig: i for i, orig in enumerate(original)}
        adj: list[set[int]] = [set() for _ in original]
        for u, v in edge_set:
            adj[dense[u]].add(dense[v])
            adj[dense[v]].add(dense[u])
        return cls(tuple(frozenset(s) for s in adj), original, len(edge_set))

    @property
    def node_count(self) -> int:
        return len(self._neighbor_sets)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def nodes(self) -> range:
        return range(len(self._neighbor_sets))

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self._neighbor_sets):
            raise ValueError(f"unknown node {v} (graph has {self.node_count} nodes)")

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._neighbor_sets[v]

    def sorted_neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._sorted_neighbors[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._neighbor_sets[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All undirected edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in self.nodes for v in self._sorted_neighbors[u] if u < v]

    def original_id(self, v: int) -> int:
        self._check(v)
        return self._original_ids[v]

    def dense_id(self, original: int) -> int:
        try:
            # original ids are sorted, so bisect would work too; a dict is
            # not worth the memory at this scale
            i = _index_sorted(self._original_ids, original)
        except ValueError:
            raise ValueError(f"node id {original} not present in graph") from None
        return i

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def _index_sorted(seq: tuple[int, ...], x: int) -> int:
    import bisect

    i = bisect.bisect_left(seq, x)
    if i == len(seq) or seq[i] != x:
        raise ValueError(x)
    return i


def parse_edge_list(stream: Iterable[str] | str) -> EdgeList:
    """Parse SNAP-style edge-list lines into directed pairs.

    Lines starting with '#' are comments. Each remaining line must hold two
    whitespace-separated integers. Self-loops and exact duplicates are
    dropped and counted.
    """
    if isinstance(stream, str):
        stream = stream.splitlines()
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    self_loops = 0
    duplicates = 0
    any_line = False
    for lineno, raw in enumerate(stream, start=1):
        any_line = True
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two tokens, got {len(parts)}: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer node id in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative node id in {line!r}")
        if u == v:
            self_loops += 1
            continue
        if (u, v) in seen:
            duplicates += 1
            continue
        seen.add((u, v))
        pairs.append((u, v))
    if not any_line:
        raise ParseError("empty edge-list input")
    return EdgeList(tuple(pairs), self_loops, duplicates)


def load_edge_list(path: str | Path) -> EdgeList:
    """Read an edge-list file, transparently decompressing gzip (by magic bytes)."""
    path = Path(path)
    if not path.exists():
        raise DataError(f"edge-list file not found: {path}")
    with open(path, "rb") as fh:
        magic = fh.read(2)
    opener = gzip.open if magic == _GZIP_MAGIC else open
    with opener(path, "rt", encoding="utf-8") as fh:  # type: ignore[operator]
        return parse_edge_list(fh)


def mutualize(edges: EdgeList, mode: str = "auto") -> Graph:
    """Keep only two-way communications, yielding an undirected graph.

    ``strict``: an undirected edge {u, v} exists iff both (u, v) and (v, u)
    appear in the input; nodes left without any edge are dropped.

    ``undirected``: the input is a single listing of undirected edges (each
    pair implies its reverse), so every pair becomes an edge.

    ``auto`` (default): ``strict`` when the input contains at least one
    reciprocated pair, else ``undirected``. SNAP publishes both conventions
    (directed listings and one-line-per-edge combined files) and the two-way
    filter only makes sense for the former.
    """
    if mode not in ("auto", "strict", "undirected"):
        raise ValueError(f"unknown mutualize mode {mode!r}")
    pair_set = set(edges.pairs)
    if mode == "auto":
        has_reciprocal = any((v, u) in pair_set for u, v in edges.pairs)
        mode = "strict" if has_reciprocal else "undirected"
    if mode == "strict":
        kept = [(u, v) for u, v in edges.pairs if u < v and (v, u) in pair_set]
    else:
        kept = [(min(u, v), max(u, v)) for u, v in edges.pairs]
    # isolated nodes (no surviving edge) are dropped so the node count
    # reflects the mutualized graph
    return Graph.from_undirected_edges(kept)


def resolved_mutualize_mode(edges: EdgeList, mode: str = "auto") -> str:
    """The concrete mode ``mutualize`` would apply (resolves ``auto``)."""
    if mode != "auto":
        return mode
    pair_set = set(edges.pairs)
    return "strict" if any((v, u) in pair_set for u, v in edges.pairs) else "undirected"


def preprocess(path: str | Path, name: str | None = None, mode: str = "auto") -> tuple[Graph, DatasetMeta]:
    """Load, mutualize, and describe a dataset file."""
    path = Path(path)
    edges = load_edge_list(path)
    resolved = resolved_mutualize_mode(edges, mode)
    g = mutualize(edges, mode)
    nodes_before = len({n for pair in edges.pairs for n in pair})
    meta = DatasetMeta(
        name=name or path.stem,
        nodes_before=nodes_before,
        edges_before=len(edges.pairs),
        nodes_after=g.node_count,
        edges_after=g.edge_count,
        mutualize_mode=resolved,
    )
    return g, meta


def subsample(g: Graph, k: int, seed: int) -> Graph:
    """Induced subgraph on k nodes chosen by seeded breadth-first snowball.

    Starts from a seeded-random node and grows breadth-first (neighbors in
    sorted order); when a component is exhausted before k nodes are
    collected, growth restarts from a new random unvisited node.
    Deterministic for a fixed seed.
    """
    n = g.node_count
    if not 1 <= k <= n:
        raise ValueError(f"subsample size k={k} out of range [1, {n}]")
    if k == n:
        return g
    rng = random.Random(seed)
    visited = [False] * n
    selected: list[int] = []
    remaining = sorted(g.nodes)
    queue: deque[int] = deque()
    while len(selected) < k:
        if not queue:
            remaining = [v for v in remaining if not visited[v]]
            start = remaining[rng.randrange(len(remaining))]
            visited[start] = True
            queue.append(start)
        u = queue.popleft()
        selected.append(u)
        if len(selected) == k:
            break
        for w in g.sorted_neighbors(u):
            if not visited[w]:
                visited[w] = True
                queue.append(w)
    chosen = set(selected)
    induced = [(u, v) for u, v in g.edges() if u in chosen and v in chosen]
    # relabel through original ids so the subgraph still reports dataset ids
    return Graph.from_undirected_edges(
        [(g.original_id(u), g.original_id(v)) for u, v in induced],
        nodes=[g.original_id(v) for v in selected],
    )
