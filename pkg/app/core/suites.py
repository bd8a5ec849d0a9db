"""
Benchmark suites and published reference values.

A suite expands to one GraphSource per size; generator suites are
deterministic for a fixed seed. PUBLISHED holds the reference numbers
`bench --compare` prints next to computed ones.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from core.errors import InputError
from core.generators import dense_ktree_k
from core.models import (
    AlgorithmName, AlgorithmSpec, Family, FamilyParams, GraphFormat, GraphSource, VariantTag
)

GENERATOR_ALGORITHMS = (
    AlgorithmSpec(AlgorithmName.GREEDY),
    AlgorithmSpec(AlgorithmName.A1),
    AlgorithmSpec(AlgorithmName.HYBRID, VariantTag.A1),
    AlgorithmSpec(AlgorithmName.A2),
    AlgorithmSpec(AlgorithmName.HYBRID, VariantTag.A2),
)

DENSITY_ALGORITHMS = (
    AlgorithmSpec(AlgorithmName.GREEDY),
    AlgorithmSpec(AlgorithmName.A1_PRIME),
    AlgorithmSpec(AlgorithmName.A2_PRIME),
    AlgorithmSpec(AlgorithmName.A3),
    AlgorithmSpec(AlgorithmName.HYBRID, VariantTag.A1_PRIME),
    AlgorithmSpec(AlgorithmName.HYBRID, VariantTag.A2_PRIME),
    AlgorithmSpec(AlgorithmName.HYBRID, VariantTag.A3),
)

GRAPH_SUFFIXES = {
    ".el": GraphFormat.EDGE_LIST,
    ".edges": GraphFormat.EDGE_LIST,
    ".txt": GraphFormat.SNAP_EDGE_LIST,
    ".graph": GraphFormat.METIS,
    ".metis": GraphFormat.METIS,
}


@dataclass(frozen=True)
class Suite:
    name: str
    title: str
    default_sizes: Tuple[int, ...]
    make_sources: Callable[[int, int], List[GraphSource]]
    algorithms: Tuple[AlgorithmSpec, ...] = GENERATOR_ALGORITHMS

    def sources(self, sizes: Optional[Sequence[int]] = None, seed: int = 0) -> List[GraphSource]:
        result: List[GraphSource] = []
        for size in (sizes if sizes else self.default_sizes):
            result.extend(self.make_sources(size, seed))
        return result


def _family_source(params: FamilyParams) -> GraphSource:
    return GraphSource(family_params=params, graph_id=params.describe())


def _hypercube(d: int, seed: int) -> List[GraphSource]:
    return [_family_source(FamilyParams(Family.HYPERCUBE, d=d))]


def _queens(k: int, seed: int) -> List[GraphSource]:
    return [_family_source(FamilyParams(Family.QUEENS, k=k))]


def _ktree(n: int, seed: int) -> List[GraphSource]:
    return [_family_source(FamilyParams(Family.KTREE, n=n, k=5, seed=seed))]


def _dense_ktree(n: int, seed: int) -> List[GraphSource]:
    return [_family_source(FamilyParams(Family.KTREE, n=n, k=dense_ktree_k(n), seed=seed))]


def _traps(p: int, seed: int) -> List[GraphSource]:
    return [_family_source(FamilyParams(Family.TRAP_STARS, p=p)),
            _family_source(FamilyParams(Family.TRAP_CLIQUE, p=p))]


SUITES: Dict[str, Suite] = {
    suite.name: suite for suite in (
        Suite("hypercubes", "Results for Hypercubes", tuple(range(5, 13)), _hypercube),
        Suite("queens", "Results for k-Queens Graphs", tuple(range(15, 31)), _queens),
        Suite("ktrees", "Results for k-Trees where k=5", tuple(range(2000, 20001, 2000)), _ktree),
        Suite("ktrees-dense", "Results for k-Trees where k=floor(n^0.25)",
              tuple(range(2000, 20001, 2000)), _dense_ktree),
        Suite("traps", "Greedy Trap Graphs", tuple(range(2, 11)), _traps),
    )
}

FILES_SUITE = "files"


def get_suite(name: str) -> Suite:
    if name not in SUITES:
        known = ", ".join(sorted(SUITES) + [FILES_SUITE])
        raise InputError(f"unknown suite '{name}' (expected one of {known})")
    return SUITES[name]


def parse_declared_family(text: Optional[str], k: Optional[int] = None) -> Optional[FamilyParams]:
    """'planar', 'tree', 'kplanar:5' or 'ktree:5' (or a separate k) for ingested graphs."""
    if not text:
        return None
    name, _, param = text.partition(":")
    try:
        family = Family(name.strip().lower())
    except ValueError:
        raise InputError(f"unknown family '{name}'") from None
    if param:
        try:
            k = int(param)
        except ValueError:
            raise InputError(f"family parameter must be an integer, got '{param}'") from None
    return FamilyParams(family, k=k)


def file_sources(directory: Path, declared: Optional[FamilyParams] = None) -> List[GraphSource]:
    """One source per recognized graph file in a directory, in name order."""
    if not directory.is_dir():
        raise InputError(f"'{directory}' is not a directory")
    sources = []
    for path in sorted(directory.iterdir()):
        fmt = GRAPH_SUFFIXES.get(path.suffix.lower())
        if fmt is None or not path.is_file():
            continue
        sources.append(GraphSource(path=str(path), format=fmt, declared_family=declared,
                                   graph_id=path.stem))
    if not sources:
        raise InputError(f"no graph files ({', '.join(sorted(GRAPH_SUFFIXES))}) in '{directory}'")
    return sources


# Published values: ratios to L* for generated families, sizes for social graphs.
def _ratios(labels: Sequence[str], rows: Dict[str, Sequence[float]]) -> Dict[str, Dict[str, float]]:
    return {graph_id: dict(zip(labels, values)) for graph_id, values in rows.items()}


_TABLE_COLUMNS = ("n", "m", "L*", "Greedy", "A1", "A1 Hybrid", "A2", "A2 Hybrid")
_SIZE_COLUMNS = ("n", "m", "L*", "Greedy", "A1'", "A2'", "A3", "A1' Hybrid", "A2' Hybrid", "A3 Hybrid")

PUBLISHED: Dict[str, Dict[str, float]] = {}

PUBLISHED.update(_ratios(_TABLE_COLUMNS, {
    f"hypercube d={d}": (2 ** d, d * 2 ** (d - 1)) + values
    for d, values in {
        5: (5.33, 1.50, 3.00, 1.50, 3.00, 1.50),
        6: (9.14, 1.75, 7.00, 1.75, 7.00, 1.75),
        7: (16.00, 1.00, 1.00, 1.00, 1.00, 1.00),
        8: (28.44, 1.13, 9.00, 1.13, 9.00, 1.13),
        9: (51.20, 1.25, 7.07, 2.99, 7.07, 2.99),
        10: (93.09, 1.38, 11.00, 2.70, 11.00, 2.70),
        11: (170.67, 1.50, 6.59, 2.85, 6.59, 2.85),
        12: (315.08, 1.63, 13.00, 3.14, 13.00, 3.14),
    }.items()
}))

PUBLISHED.update(_ratios(_TABLE_COLUMNS, {
    f"queens k={k}": (k * k,) + values
    for k, values in {
        15: (5180, 4.89, 2.05, 38.45, 6.75, 36.40, 6.75),
        16: (6320, 5.19, 1.93, 46.98, 7.70, 43.90, 7.12),
        17: (7616, 5.50, 1.82, 45.84, 8.91, 44.03, 8.91),
        18: (9078, 5.80, 1.90, 50.34, 9.83, 48.27, 9.83),
        19: (10716, 6.10, 1.97, 52.42, 9.67, 50.78, 9.67),
        20: (12540, 6.41, 2.03, 56.81, 10.14, 53.06, 9.68),
        21: (14560, 6.71, 1.94, 59.89, 11.32, 56.91, 11.17),
        22: (16786, 7.02, 2.00, 63.86, 9.55, 59.29, 9.12),
        23: (19228, 7.32, 1.91, 65.83, 10.38, 62.83, 10.11),
        24: (21896, 7.62, 1.97, 70.82, 11.93, 64.00, 11.67),
        25: (24800, 7.93, 2.02, 74.15, 10.47, 69.61, 10.34),
        26: (27950, 8.23, 1.94, 76.27, 11.78, 68.50, 11.30),
        27: (31356, 8.54, 1.87, 80.80, 11.83, 74.48, 11.13),
        28: (35028, 8.84, 1.92, 80.07, 14.82, 74.64, 14.25),
        29: (38976, 9.15, 1.97, 85.81, 12.02, 78.81, 11.70),
        30: (43210, 9.45, 2.01, 87.18, 12.91, 81.26, 12.38),
    }.items()
}))

# Random k-trees differ per seed; only n and m are reproducible exactly.
PUBLISHED.update(_ratios(_TABLE_COLUMNS, {
    f"ktree k=5 n={n}": (n,) + values
    for n, values in {
        2000: (9985, 39.00, 1.05, 1.08, 1.05, 1.08, 1.05),
        4000: (19985, 70.50, 1.04, 1.06, 1.04, 1.06, 1.04),
        6000: (29985, 90.83, 1.03, 1.17, 1.03, 1.17, 1.03),
        8000: (39985, 132.25, 1.03, 1.07, 1.03, 1.07, 1.03),
        10000: (49985, 158.00, 1.03, 1.03, 1.03, 1.03, 1.03),
        12000: (59985, 209.67, 1.02, 1.08, 1.02, 1.08, 1.02),
        14000: (69985, 225.58, 1.04, 1.09, 1.04, 1.09, 1.04),
        16000: (79985, 270.25, 1.02, 1.09, 1.02, 1.09, 1.02),
        18000: (89985, 291.83, 1.02, 1.06, 1.02, 1.06, 1.02),
        20000: (99985, 339.58, 1.04, 1.08, 1.04, 1.08, 1.04),
    }.items()
}))

PUBLISHED.update(_ratios(_SIZE_COLUMNS, {
    "gplus-500": (500, 1006, 42, 42, 42, 42, 42, 42, 42, 42),
    "gplus-2000": (2000, 5343, 170, 176, 170, 170, 170, 176, 176, 176),
    "gplus-10000": (10000, 33954, 860, 900, 864, 864, 864, 893, 893, 893),
    "gplus-20000": (20000, 81352, 1715, 1817, 1730, 1730, 1716, 1800, 1800, 1800),
    "gplus-50000": (50000, 231583, 4565, 4849, 4651, 4607, 4585, 4790, 4790, 4790),
    "pokec-500": (500, 993, 16, 16, 16, 16, 16, 16, 16, 16),
    "pokec-2000": (2000, 5893, 75, 75, 75, 75, 75, 75, 75, 75),
    "pokec-10000": (10000, 44745, 413, 413, 413, 413, 413, 413, 413, 413),
    "pokec-20000": (20000, 102826, 921, 928, 921, 921, 921, 923, 923, 923),
    "pokec-50000": (50000, 281726, 2706, 2773, 2712, 2712, 2712, 2757, 2757, 2743),
}))

# Documentation only: far beyond desk scale.
PUBLISHED["great-britain-streets"] = {
    "n": 7733822, "m": 8156517, "M*": 1314133, "N*": 1357189, "max{M*,N*}": 1357189,
    "Greedy": 2732935, "A1 Hybrid": 2724608, "A2 Hybrid": 2724608, "alpha": 0.75,
}


@dataclass(frozen=True)
class RealWorldFixture:
    """A published social-network graph expected under the datasets directory."""
    graph_id: str
    filename: str
    format: GraphFormat = GraphFormat.SNAP_EDGE_LIST
    expected: Dict[str, float] = field(default_factory=dict)

    def path(self, datasets_dir: Path) -> Path:
        return datasets_dir / self.filename


REAL_WORLD_FIXTURES: Dict[str, RealWorldFixture] = {
    graph_id: RealWorldFixture(graph_id, f"{graph_id}.txt", expected=PUBLISHED[graph_id])
    for graph_id in ("gplus-500", "pokec-500")
}
