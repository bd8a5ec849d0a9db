"""
Data models for the domination benchmark toolkit.
Enumerations for every closed choice plus the result and configuration records
passed between the algorithm modules and the harness.
"""

import enum
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple


# A vertex set is an immutable Python set of dense vertex ids.
VertexSet = FrozenSet[int]


# Enums
class GraphFormat(enum.Enum):
    EDGE_LIST = "edge-list"
    METIS = "metis"
    SNAP_EDGE_LIST = "snap-edge-list"

    @classmethod
    def parse(cls, text: str) -> "GraphFormat":
        aliases = {"snap": cls.SNAP_EDGE_LIST, "el": cls.EDGE_LIST, "edgelist": cls.EDGE_LIST}
        key = text.strip().lower()
        if key in aliases:
            return aliases[key]
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown graph format '{text}' (expected edge-list, metis or snap)")


class TiePolicy(enum.Enum):
    MIN_ID = "min-id"
    MAX_ID = "max-id"


class Family(enum.Enum):
    HYPERCUBE = "hypercube"
    QUEENS = "queens"
    KTREE = "ktree"
    TRAP_STARS = "trap-stars"
    TRAP_CLIQUE = "trap-clique"
    PLANAR = "planar"
    KPLANAR = "kplanar"
    TREE = "tree"


class ArboricityKind(enum.Enum):
    DENSITY_LOWER_BOUND = "density-lower-bound"
    FAMILY_UPPER_BOUND = "family-upper-bound"
    USER_SUPPLIED = "user-supplied"


class VariantTag(enum.Enum):
    A1 = "a1"
    A2 = "a2"
    A1_PRIME = "a1p"
    A2_PRIME = "a2p"
    A3 = "a3"
    CUSTOM = "custom"

    @property
    def label(self) -> str:
        return {
            "a1": "A1", "a2": "A2", "a1p": "A1'", "a2p": "A2'",
            "a3": "A3", "custom": "custom",
        }[self.value]

    @property
    def uses_density(self) -> bool:
        """Primed variants and A3 are defined on the density bound a'."""
        return self in (VariantTag.A1_PRIME, VariantTag.A2_PRIME, VariantTag.A3)


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    ERROR = "error"


class LowerBoundMode(enum.Enum):
    LP1 = "lp1"
    DECOMPOSITION = "decomposition"


class OutputFormat(enum.Enum):
    CSV = "csv"
    MARKDOWN = "markdown"


# Graph families and arboricity
@dataclass(frozen=True)
class FamilyParams:
    """Parameters of a generated (or declared) graph family."""
    family: Family
    d: Optional[int] = None
    k: Optional[int] = None
    n: Optional[int] = None
    p: Optional[int] = None
    seed: int = 0

    def describe(self) -> str:
        parts = [self.family.value]
        for name in ("d", "k", "n", "p"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        return " ".join(parts)


@dataclass(frozen=True)
class ArboricityEstimate:
    value: int
    kind: ArboricityKind
    family: Optional[Family] = None

    def describe(self) -> str:
        return f"{self.value} ({self.kind.value})"


# Algorithm results
@dataclass(frozen=True)
class DominatingSetResult:
    """Common output of greedy, rounding, hybrid and the exact oracle."""
    vertices: VertexSet
    algorithm: str
    elapsed: float
    details: Dict[str, object] = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class GreedyResult:
    """Greedy output; ordered_selection is D = (x_1, ..., x_d) in pick order."""
    ordered_selection: Tuple[int, ...]
    gains: Tuple[int, ...]
    elapsed: float
    tie: TiePolicy

    @property
    def vertices(self) -> VertexSet:
        return frozenset(self.ordered_selection)

    @property
    def size(self) -> int:
        return len(self.ordered_selection)

    def as_result(self) -> DominatingSetResult:
        return DominatingSetResult(
            vertices=self.vertices,
            algorithm="greedy",
            elapsed=self.elapsed,
            details={"tie": self.tie.value},
        )


# Linear programs
@dataclass(frozen=True)
class LpModel:
    """
    Sparse covering LP: minimize the sum of all variables subject to one
    row per constraint vertex, every variable bounded to [0, 1].

    rows[i] lists, in ascending id order, the variable vertices appearing in
    the closed-neighborhood constraint of constraint_vertices[i].
    """
    variable_vertices: Tuple[int, ...]
    constraint_vertices: Tuple[int, ...]
    rows: Tuple[Tuple[int, ...], ...]
    name: str = field(default="LP", compare=False)

    @property
    def num_variables(self) -> int:
        return len(self.variable_vertices)

    @property
    def num_constraints(self) -> int:
        return len(self.constraint_vertices)

    @property
    def num_terms(self) -> int:
        return sum(len(row) for row in self.rows)


@dataclass(frozen=True)
class FractionalSolution:
    weights: Dict[int, float]
    objective: float
    status: LpStatus
    message: str = ""
    elapsed: float = 0.0

    @property
    def is_optimal(self) -> bool:
        return self.status == LpStatus.OPTIMAL

    def weight_of(self, vertices) -> float:
        """X(V'): total weight on the given vertices (vertices without a variable count 0)."""
        return float(sum(self.weights.get(v, 0.0) for v in vertices))


@dataclass(frozen=True)
class Separation:
    """A partition A ∪ B ∪ C of V with no A–C edge; B is the separator."""
    a: VertexSet
    b: VertexSet
    c: VertexSet


@dataclass(frozen=True)
class DecompositionBound:
    value: float
    m_star: float
    n_star: float
    separation: Separation
    prefix_fraction: Optional[float] = None


# Rounding and hybrid configuration
@dataclass(frozen=True)
class RoundingVariant:
    tag: VariantTag
    arboricity: Optional[int] = None
    threshold: Optional[float] = None
    arboricity_kind: Optional[ArboricityKind] = None

    @property
    def label(self) -> str:
        return self.tag.label


@dataclass(frozen=True)
class HybridConfig:
    alpha: float = 0.5
    variant: RoundingVariant = RoundingVariant(VariantTag.A1)
    tie: TiePolicy = TiePolicy.MIN_ID


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 32
    time_budget: float = 60.0


@dataclass(frozen=True)
class OracleResult:
    size: int
    vertices: VertexSet
    complete: bool
    nodes: int
    elapsed: float


# Experiments
class AlgorithmName(enum.Enum):
    GREEDY = "greedy"
    A1 = "a1"
    A2 = "a2"
    A1_PRIME = "a1p"
    A2_PRIME = "a2p"
    A3 = "a3"
    HYBRID = "hybrid"
    LP_ONLY = "lp-only"
    EXACT = "exact"


@dataclass(frozen=True)
class AlgorithmSpec:
    """One algorithm column of an experiment."""
    name: AlgorithmName
    variant: Optional[VariantTag] = None
    alpha: float = 0.5
    tie: TiePolicy = TiePolicy.MIN_ID

    @property
    def label(self) -> str:
        if self.name == AlgorithmName.HYBRID:
            tag = self.variant or VariantTag.A1
            return f"{tag.label} Hybrid"
        if self.name == AlgorithmName.GREEDY:
            return "Greedy"
        if self.name == AlgorithmName.EXACT:
            return "Exact"
        if self.name == AlgorithmName.LP_ONLY:
            return "L*"
        return VariantTag(self.name.value).label


@dataclass(frozen=True)
class GraphSource:
    """Where a row's graph comes from: generator params or a file."""
    family_params: Optional[FamilyParams] = None
    path: Optional[str] = None
    format: GraphFormat = GraphFormat.EDGE_LIST
    declared_family: Optional[FamilyParams] = None
    graph_id: str = ""

    @property
    def family_context(self) -> Optional[FamilyParams]:
        return self.family_params or self.declared_family


@dataclass
class ExperimentSpec:
    sources: List[GraphSource]
    algorithms: List[AlgorithmSpec]
    arboricity: Optional[int] = None
    threshold: Optional[float] = None
    lower_bound: LowerBoundMode = LowerBoundMode.LP1
    prefix_fraction: Optional[float] = None
    output: OutputFormat = OutputFormat.CSV
    seed: int = 0
    timings: bool = False
    jobs: int = 1
    lp_method: str = "highs"
    lp_time_limit: Optional[float] = None
    lp_max_vertices: Optional[int] = None
    tie: TiePolicy = TiePolicy.MIN_ID
    oracle_max_vertices: int = 32
    title: str = "Experiment"
    compare: bool = False


@dataclass(frozen=True)
class AlgorithmOutcome:
    label: str
    size: int
    ratio: Optional[str]
    elapsed: float
    valid: bool
    details: Dict[str, object] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class ExperimentRow:
    graph_id: str
    n: int
    m: int
    bound_kind: str
    bound: float
    arboricity: Optional[ArboricityEstimate]
    outcomes: Tuple[AlgorithmOutcome, ...]
    m_star: Optional[float] = None
    n_star: Optional[float] = None


@dataclass
class ExperimentReport:
    rows: List[ExperimentRow]
    title: str = "Experiment"
    timings: bool = False
    published: Dict[str, Dict[str, float]] = field(default_factory=dict)

    @property
    def algorithm_labels(self) -> List[str]:
        labels: List[str] = []
        for row in self.rows:
            for outcome in row.outcomes:
                if outcome.label not in labels:
                    labels.append(outcome.label)
        return labels
