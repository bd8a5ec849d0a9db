"""
Synthetic graph families: hypercubes, k-Queens boards, random k-trees and the
two greedy-trap constructions.

Vertex numbering is fixed per family:
  - hypercube: vertex id is its binary code
  - queens: row-major squares, id = row * k + col
  - random k-tree: base clique 0..k, then vertices in attachment order
  - trap_stars: stars S_1..S_p in order (root first, then leaves), then t_1, t_2
  - trap_clique: V_2 blocks W_1..W_p in order, then s_1..s_p, then t_1, t_2
"""

import random
from typing import List, Tuple

import numpy as np

from core.errors import InputError
from core.graph import Graph, MAX_VERTICES, build_graph
from core.logging_config import get_logger
from core.models import Family, FamilyParams

logger = get_logger(__name__)

MAX_HYPERCUBE_DIMENSION = 30


def hypercube(d: int) -> Graph:
    """Q_d: 2^d vertices, adjacent iff their binary labels differ in one bit."""
    if d < 1:
        raise InputError(f"hypercube dimension must be >= 1, got {d}")
    if d > MAX_HYPERCUBE_DIMENSION:
        raise InputError(f"hypercube dimension {d} overflows the vertex count (max {MAX_HYPERCUBE_DIMENSION})")
    n = 1 << d
    ids = np.arange(n, dtype=np.int64)
    parts = []
    for bit in range(d):
        low = ids[(ids >> bit) & 1 == 0]
        parts.append(np.column_stack([low, low | (1 << bit)]))
    return build_graph(n, np.concatenate(parts))


def queens(k: int) -> Graph:
    """k-Queens graph: squares of a k x k board joined by any queen move."""
    if k < 1:
        raise InputError(f"board side must be >= 1, got {k}")
    if k * k > MAX_VERTICES:
        raise InputError(f"board side {k} overflows the vertex count")
    rows, cols = np.divmod(np.arange(k * k, dtype=np.int64), k)
    parts = []
    # Each square's vertex list along a line; every pair on a line is an edge
    for key in (rows, cols, rows - cols, rows + cols):
        order = np.lexsort((np.arange(k * k), key))
        sorted_keys = key[order]
        starts = np.flatnonzero(np.r_[True, sorted_keys[1:] != sorted_keys[:-1]])
        ends = np.r_[starts[1:], len(order)]
        for start, end in zip(starts.tolist(), ends.tolist()):
            line = order[start:end]
            if len(line) < 2:
                continue
            i, j = np.triu_indices(len(line), 1)
            parts.append(np.column_stack([line[i], line[j]]))
    edges = np.concatenate(parts) if parts else np.empty((0, 2), dtype=np.int64)
    return build_graph(k * k, edges)


def random_ktree(n: int, k: int, seed: int = 0) -> Graph:
    """
    Random k-tree on n vertices.

    Starts from a (k+1)-clique; each new vertex joins a k-clique chosen
    uniformly among all k-cliques materialized so far. Every attachment
    creates k new k-cliques (the new vertex with each k-1 subset of its host).
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if n < k + 1:
        raise InputError(f"a k-tree needs n >= k+1 vertices (n={n}, k={k})")
    rng = random.Random(seed)

    base = list(range(k + 1))
    edges: List[Tuple[int, int]] = [(u, v) for i, u in enumerate(base) for v in base[i + 1:]]
    cliques: List[Tuple[int, ...]] = [tuple(c for c in base if c != drop) for drop in base]

    for v in range(k + 1, n):
        host = cliques[rng.randrange(len(cliques))]
        edges.extend((u, v) for u in host)
        for drop in range(k):
            cliques.append(host[:drop] + host[drop + 1:] + (v,))

    g = build_graph(n, edges)
    logger.debug(f"random_ktree(n={n}, k={k}, seed={seed}): m={g.m}")
    return g


def dense_ktree_k(n: int) -> int:
    """k = floor(n^0.25), the dense k-tree setting."""
    k = int(round(n ** 0.25))
    while k ** 4 > n:
        k -= 1
    while (k + 1) ** 4 <= n:
        k += 1
    return max(k, 1)


def trap_stars(p: int) -> Graph:
    """
    Sparse greedy trap on n = 2^(p+1) vertices.

    Stars S_i on 2^i vertices (i = 1..p), root first; t_1 is joined to the
    first half of every star, t_2 to the second half. {t_1, t_2} dominates.
    """
    if p < 2:
        raise InputError(f"trap scale p must be >= 2, got {p}")
    n = 1 << (p + 1)
    t1, t2 = n - 2, n - 1
    edges: List[Tuple[int, int]] = []
    start = 0
    for i in range(1, p + 1):
        size = 1 << i
        root = start
        edges.extend((root, leaf) for leaf in range(start + 1, start + size))
        half = size // 2
        edges.extend((t1, v) for v in range(start, start + half))
        edges.extend((t2, v) for v in range(start + half, start + size))
        start += size
    return build_graph(n, edges)


def trap_clique(p: int) -> Graph:
    """
    Dense greedy trap on n = 2^(p+1) + p vertices.

    V_1 = {s_1..s_p, t_1, t_2} is a clique and V_2 (2^(p+1) - 2 vertices) is
    independent, cut into consecutive blocks W_i of size 2^i. s_i sees all of
    W_i, t_1 the first half of each block, t_2 the second half.
    """
    if p < 2:
        raise InputError(f"trap scale p must be >= 2, got {p}")
    independent = (1 << (p + 1)) - 2
    s = [independent + i for i in range(p)]
    t1, t2 = independent + p, independent + p + 1
    clique = s + [t1, t2]
    n = independent + p + 2

    edges: List[Tuple[int, int]] = [(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]]
    start = 0
    for i in range(1, p + 1):
        size = 1 << i
        block = range(start, start + size)
        edges.extend((s[i - 1], w) for w in block)
        half = size // 2
        edges.extend((t1, w) for w in block[:half])
        edges.extend((t2, w) for w in block[half:])
        start += size
    return build_graph(n, edges)


def trap_terminals(g: Graph) -> Tuple[int, int]:
    """(t_1, t_2) of either trap family: always the last two ids."""
    return g.n - 2, g.n - 1


def generate(params: FamilyParams) -> Graph:
    """Dispatch on a FamilyParams record."""
    family = params.family
    if family == Family.HYPERCUBE:
        return hypercube(_required(params, "d"))
    if family == Family.QUEENS:
        return queens(_required(params, "k"))
    if family == Family.KTREE:
        return random_ktree(_required(params, "n"), _required(params, "k"), params.seed)
    if family == Family.TRAP_STARS:
        return trap_stars(_required(params, "p"))
    if family == Family.TRAP_CLIQUE:
        return trap_clique(_required(params, "p"))
    raise InputError(f"family '{family.value}' has no generator; ingest such graphs from files")


def _required(params: FamilyParams, name: str) -> int:
    value = getattr(params, name)
    if value is None:
        raise InputError(f"family '{params.family.value}' needs parameter '{name}'")
    return value
