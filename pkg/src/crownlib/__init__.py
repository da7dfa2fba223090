"""Crown-free linear 3-graphs.

A crown is an edge (the base) together with three pairwise disjoint edges that
each meet the base in a different vertex. The package covers linear 3-graph
primitives, colored link graphs and rainbow matchings, the catalog of
<4,4,4> link graphs, extremal constructions, audits of the 3n/2 counting
argument, the G6 exclusion scan, and exact search for ex(n, crown).
"""

from .analysis import (
    AuditReport,
    ExclusionReport,
    audit_theorem2,
    check_642_free,
    find_critical_configurations,
    g6_exclusion_scan,
    g6_verify,
    saturated_g6_host,
)
from .catalog import NAMES, builtin, classify_444, color_iso, enumerate_444, verify_catalog
from .constructions import (
    ConstructionSpec,
    fano,
    lower_bound_construction,
    minimal_host,
    random_linear,
    random_min_degree,
    sts9,
)
from .core import (
    DegreeVector,
    LinearThreeGraph,
    canonical_code,
    degree_vector,
    dominates,
    is_linear,
    min_degree,
    parse,
    serialize,
    triple,
)
from .errors import (
    CrownlibError,
    LinearityViolation,
    DuplicateEdge,
    EdgeNotPresent,
    InvalidTriple,
    VertexOutOfRange,
    EmptyVertexSet,
    ParseError,
    TargetNotDominated,
    PreconditionViolated,
    UnknownName,
    TooFewVertices,
    InfeasibleRequest,
    Reducible,
    BudgetExceeded,
)
from .kernels import IMPLEMENTATION as KERNELS
from .links import (
    Color,
    ColoredLinkGraph,
    Crown,
    crown_from_quintuple,
    crown_with_base,
    find_crown,
    good_quintuples,
    has_rainbow_matching,
    is_crown,
    link_graph,
    quintuple_starters,
    trim_to_degree_vector,
)
from .search import SearchConfig, SearchResult, ex_crown, ex_restricted, verify_bounds

__version__ = "0.1.0"
