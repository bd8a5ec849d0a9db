"""
Immutable undirected simple graph in compressed adjacency (CSR) form,
plus the neighborhood queries and domination check every algorithm relies on.
"""

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import InputError
from core.logging_config import log_diagnostic
from core.models import VertexSet

# Largest vertex count whose pair keys (u * n + v) still fit in int64.
MAX_VERTICES = 3_000_000_000


@dataclass(frozen=True)
class BuildStats:
    """What build_graph normalized away."""
    self_loops: int = 0
    duplicates: int = 0


class Graph:
    """
    Undirected simple graph on vertices 0..n-1.

    offsets has n + 1 entries; the sorted neighbors of v are
    targets[offsets[v]:offsets[v + 1]]. Both arrays are read-only.
    labels optionally maps dense ids back to the tokens of an ingested file.
    """

    def __init__(self, offsets: np.ndarray, targets: np.ndarray,
                 labels: Optional[Tuple[str, ...]] = None,
                 stats: BuildStats = BuildStats()):
        self.offsets = offsets
        self.targets = targets
        self.offsets.setflags(write=False)
        self.targets.setflags(write=False)
        self.labels = labels
        self.stats = stats

    @property
    def n(self) -> int:
        return len(self.offsets) - 1

    @property
    def m(self) -> int:
        return len(self.targets) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    @cached_property
    def sources(self) -> np.ndarray:
        """Row index of every adjacency entry (the COO companion of targets)."""
        return np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)

    @cached_property
    def neighbor_lists(self) -> List[List[int]]:
        """Plain Python neighbor lists for the pure-Python inner loops."""
        flat = self.targets.tolist()
        bounds = self.offsets.tolist()
        return [flat[bounds[v]:bounds[v + 1]] for v in range(self.n)]

    @property
    def max_degree(self) -> int:
        """Δ(G); 0 for the empty and edgeless graphs."""
        return int(self.degrees.max()) if self.n > 0 else 0

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors(self, v: int) -> np.ndarray:
        """N(v) as a sorted array view."""
        return self.targets[self.offsets[v]:self.offsets[v + 1]]

    def closed_neighborhood(self, v: int) -> List[int]:
        """N[v] in ascending order."""
        nbrs = self.neighbor_lists[v]
        pos = bisect_left(nbrs, v)
        return nbrs[:pos] + [v] + nbrs[pos:]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        idx = np.searchsorted(row, v)
        return bool(idx < len(row) and row[idx] == v)

    def edge_list(self) -> List[Tuple[int, int]]:
        """Each unordered edge once as (u, v) with u < v, lexicographically sorted."""
        mask = self.sources < self.targets
        return list(zip(self.sources[mask].tolist(), self.targets[mask].tolist()))

    def label_of(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (np.array_equal(self.offsets, other.offsets)
                and np.array_equal(self.targets, other.targets))

    def __hash__(self):
        return hash((self.n, self.m, self.targets[:64].tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]],
                labels: Optional[Sequence[str]] = None) -> Graph:
    """
    Build a simple undirected graph from an edge list.

    Self-loops are dropped and duplicate edges (in either orientation) are
    collapsed; both counts are kept on graph.stats and reported on the
    diagnostics channel.

    Args:
        n: Number of vertices; ids are 0..n-1
        edges: Iterable of (u, v) pairs
        labels: Optional original label per vertex id

    Returns:
        The Graph, with deterministic adjacency layout for identical inputs

    Raises:
        InputError: if n is negative or too large, or an endpoint is out of range
    """
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise InputError(f"vertex count {n} exceeds the supported maximum {MAX_VERTICES}")
    if labels is not None and len(labels) != n:
        raise InputError(f"expected {n} labels, got {len(labels)}")

    pairs = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if pairs.size == 0:
        pairs = pairs.reshape(0, 2)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise InputError("edges must be (u, v) pairs")

    bad = np.nonzero((pairs < 0).any(axis=1) | (pairs >= n).any(axis=1))[0]
    if len(bad):
        u, v = pairs[bad[0]].tolist()
        raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")

    loops = pairs[:, 0] == pairs[:, 1]
    self_loops = int(loops.sum())
    pairs = pairs[~loops]

    lo = np.minimum(pairs[:, 0], pairs[:, 1])
    hi = np.maximum(pairs[:, 0], pairs[:, 1])
    keys = np.unique(lo * n + hi) if n else np.empty(0, dtype=np.int64)
    duplicates = len(pairs) - len(keys)
    lo, hi = keys // max(n, 1), keys % max(n, 1)

    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    targets = dst[order].astype(np.int64)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])

    stats = BuildStats(self_loops=self_loops, duplicates=duplicates)
    if self_loops or duplicates:
        log_diagnostic("build_graph", f"dropped {self_loops} self-loop(s) and {duplicates} duplicate edge(s)")
    return Graph(offsets, targets, tuple(labels) if labels is not None else None, stats)


def _membership(g: Graph, s: Iterable[int]) -> np.ndarray:
    mask = np.zeros(g.n, dtype=bool)
    members = np.fromiter(s, dtype=np.int64)
    if members.size:
        if members.min() < 0 or members.max() >= g.n:
            bad = members[(members < 0) | (members >= g.n)][0]
            raise InputError(f"vertex {int(bad)} is not in 0..{g.n - 1}")
        mask[members] = True
    return mask


def dominated_mask(g: Graph, s: Iterable[int]) -> np.ndarray:
    """Boolean mask of vertices in s or adjacent to a member of s."""
    in_s = _membership(g, s)
    dominated = in_s.copy()
    dominated[g.targets[in_s[g.sources]]] = True
    return dominated


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex is in s or adjacent to a member of s."""
    return bool(dominated_mask(g, s).all())


def first_undominated(g: Graph, s: Iterable[int]) -> Optional[int]:
    """Lowest-id vertex that s fails to dominate, or None."""
    missing = np.flatnonzero(~dominated_mask(g, s))
    return int(missing[0]) if len(missing) else None


def open_neighborhood_of_set(g: Graph, s: Iterable[int]) -> VertexSet:
    """N(S) minus S: vertices outside s with at least one neighbor in s."""
    in_s = _membership(g, s)
    reached = np.zeros(g.n, dtype=bool)
    reached[g.targets[in_s[g.sources]]] = True
    reached &= ~in_s
    return frozenset(np.flatnonzero(reached).tolist())
