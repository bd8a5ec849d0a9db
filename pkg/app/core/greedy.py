"""
Linear-time greedy dominating set with gain buckets.

Each step picks an unselected vertex covering the most uncovered vertices of
its closed neighborhood; ties go to the lowest (or highest) id.
"""

import math
import time
from typing import List, Optional, Tuple

from core.errors import InputError
from core.graph import Graph
from core.logging_config import get_logger, log_performance
from core.models import GreedyResult, TiePolicy

logger = get_logger(__name__)


def greedy_dominating_set(g: Graph, tie: TiePolicy = TiePolicy.MIN_ID) -> GreedyResult:
    """
    Run the bucket greedy.

    gain[v] = |uncovered ∩ N[v]|. Gains only ever decrease, so once bucket b
    becomes the highest non-empty bucket nothing new can enter it; it is
    ordered by id once and scanned with a single moving pointer. Stale
    entries (gain changed or already selected) are skipped. Every covered
    vertex charges one decrement to each member of its closed neighborhood,
    so bucket traffic is O(n + m).

    Args:
        g: Input graph (the empty graph gives an empty selection)
        tie: MIN_ID or MAX_ID among vertices of equal gain

    Returns:
        GreedyResult with the selection order and the gain of each pick
    """
    start = time.perf_counter()
    n = g.n
    nbrs = g.neighbor_lists
    gain = [len(nbrs[v]) + 1 for v in range(n)]
    covered = [False] * n
    selected = [False] * n
    uncovered = n

    top = max(gain) if n else 0
    buckets: List[Optional[List[int]]] = [[] for _ in range(top + 1)]
    for v in range(n):
        buckets[gain[v]].append(v)

    descending = tie == TiePolicy.MAX_ID
    order: List[int] = []
    gains: List[int] = []
    current: List[int] = []
    pos = 0
    current_level = -1

    while uncovered > 0:
        pick = -1
        while pick < 0:
            if current_level != top:
                current = sorted(set(buckets[top]), reverse=descending)
                buckets[top] = None
                current_level, pos = top, 0
            while pos < len(current):
                v = current[pos]
                pos += 1
                if not selected[v] and gain[v] == top:
                    pick = v
                    break
            if pick < 0:
                top -= 1
                if top < 1:
                    raise RuntimeError("greedy ran out of positive-gain vertices with vertices uncovered")

        selected[pick] = True
        order.append(pick)
        gains.append(top)

        for u in _closed(nbrs, pick):
            if covered[u]:
                continue
            covered[u] = True
            uncovered -= 1
            for w in _closed(nbrs, u):
                gain[w] -= 1
                if not selected[w] and gain[w] > 0:
                    buckets[gain[w]].append(w)

    elapsed = time.perf_counter() - start
    log_performance("greedy", elapsed * 1000, f"n={n}, m={g.m}, size={len(order)}, tie={tie.value}")
    return GreedyResult(tuple(order), tuple(gains), elapsed, tie)


def _closed(nbrs: List[List[int]], v: int):
    yield v
    yield from nbrs[v]


def prefix_length(d: int, fraction: float) -> int:
    """ceil(fraction * d), clamped to 0..d."""
    if not 0.0 <= fraction <= 1.0:
        raise InputError(f"fraction must lie in [0, 1], got {fraction}")
    return min(d, max(0, math.ceil(fraction * d - 1e-9)))


def greedy_prefix(result: GreedyResult, fraction: float) -> Tuple[int, ...]:
    """The first ceil(fraction * d) greedy selections."""
    return result.ordered_selection[:prefix_length(result.size, fraction)]
