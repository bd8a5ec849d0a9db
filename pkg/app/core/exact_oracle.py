"""
Exact domination number for tiny graphs.

Vertex sets are bitmasks over at most OracleLimits.max_vertices ids. The
first phase finds gamma by branch and bound, branching on the closed
neighborhood of the lowest undominated vertex. The second phase walks
increasing-id combinations of that size and returns the first one that
dominates, which is the lexicographically smallest minimum set.
"""

import itertools
import math
import time
from typing import List, Optional, Tuple

from core.errors import OracleLimitError, InputError
from core.graph import Graph
from core.greedy import greedy_dominating_set
from core.logging_config import get_logger, log_performance
from core.models import OracleLimits, OracleResult, VertexSet

logger = get_logger(__name__)

NAIVE_MAX_VERTICES = 20


class _OutOfTime(Exception):
    pass


class _Search:
    """Shared state of one oracle run."""

    def __init__(self, g: Graph, deadline: float):
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.closed = [self._mask(g.closed_neighborhood(v)) for v in range(g.n)]
        self.reach = g.max_degree + 1
        # Highest id able to dominate v: every branch that passes it leaves v undominated
        self.last_cover = [max(g.closed_neighborhood(v)) for v in range(g.n)]
        self.deadline = deadline
        self.nodes = 0

    @staticmethod
    def _mask(vertices) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return mask

    def tick(self):
        self.nodes += 1
        if self.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
            raise _OutOfTime()

    def lower(self, dominated: int) -> int:
        missing = bin(self.full & ~dominated).count("1")
        return -(-missing // self.reach)

    # Phase 1
    def branch(self, dominated: int, chosen: List[int], best: List[int], floor: int) -> List[int]:
        self.tick()
        if dominated == self.full:
            return list(chosen) if len(chosen) < len(best) else best
        if len(chosen) + self.lower(dominated) >= len(best):
            return best
        free = self.full & ~dominated
        u = (free & -free).bit_length() - 1
        candidates = [w for w in range(self.n) if self.closed[u] >> w & 1]
        for w in candidates:
            chosen.append(w)
            best = self.branch(dominated | self.closed[w], chosen, best, floor)
            chosen.pop()
            if len(best) <= floor:
                break
        return best

    # Phase 2
    def first_of_size(self, start: int, k: int, dominated: int, chosen: List[int]) -> bool:
        self.tick()
        if dominated == self.full:
            return True
        if k == 0 or self.lower(dominated) > k:
            return False
        free = self.full & ~dominated
        stop = self.n - 1
        while free:
            low = free & -free
            stop = min(stop, self.last_cover[low.bit_length() - 1])
            free ^= low
        for v in range(start, stop + 1):
            chosen.append(v)
            if self.first_of_size(v + 1, k - 1, dominated | self.closed[v], chosen):
                return True
            chosen.pop()
        return False


def exact_gamma(g: Graph, limits: OracleLimits = OracleLimits(),
                lp_bound: Optional[float] = None) -> OracleResult:
    """
    Minimum dominating set of a tiny graph.

    Args:
        g: Graph with at most limits.max_vertices vertices
        limits: Vertex cap and time budget in seconds
        lp_bound: L*, when known; ceil(L*) stops the search early

    Returns:
        OracleResult; complete is False when the time budget ran out, in which
        case the set is the best one found

    Raises:
        OracleLimitError: n above the cap
    """
    if limits.max_vertices < 1:
        raise InputError(f"max_vertices must be >= 1, got {limits.max_vertices}")
    if g.n > limits.max_vertices:
        raise OracleLimitError(
            f"exact oracle refuses n={g.n} (cap is {limits.max_vertices}; raise it with --max-n)"
        )
    start = time.perf_counter()
    if g.n == 0:
        return OracleResult(0, frozenset(), True, 0, 0.0)

    search = _Search(g, start + limits.time_budget)
    floor = max(1, math.ceil(lp_bound - 1e-6)) if lp_bound is not None else 1
    best = sorted(greedy_dominating_set(g).ordered_selection)
    complete = True
    try:
        if len(best) > floor:
            best = search.branch(0, [], best, floor)
        chosen: List[int] = []
        if search.first_of_size(0, len(best), 0, chosen):
            best = chosen
        else:
            raise RuntimeError(f"no dominating set of size {len(best)} found in the ordered pass")
    except _OutOfTime:
        complete = False
        logger.warning(f"exact oracle hit its {limits.time_budget}s budget on n={g.n}; "
                       f"returning a set of size {len(best)}")

    elapsed = time.perf_counter() - start
    log_performance("exact_gamma", elapsed * 1000,
                    f"n={g.n}, gamma={len(best)}, nodes={search.nodes}, complete={complete}")
    return OracleResult(len(best), frozenset(best), complete, search.nodes, elapsed)


def enumerate_gamma(g: Graph, max_vertices: int = NAIVE_MAX_VERTICES) -> Tuple[int, VertexSet]:
    """Plain subset enumeration by size, then by increasing-id combination."""
    if g.n > max_vertices:
        raise OracleLimitError(f"subset enumeration refuses n={g.n} (cap is {max_vertices})")
    full = (1 << g.n) - 1
    closed = [_Search._mask(g.closed_neighborhood(v)) for v in range(g.n)]
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            dominated = 0
            for v in combo:
                dominated |= closed[v]
            if dominated == full:
                return k, frozenset(combo)
    return 0, frozenset()
