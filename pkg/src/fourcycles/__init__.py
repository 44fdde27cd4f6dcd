"""List, count and detect 4-cycles in simple undirected graphs."""

from .diagnostics import (
    CensusReport,
    LHHTheoremCheck,
    RegularPartition,
    census_report,
    check_lhh_theorem,
    closed_4_walks,
    find_regular_partition,
    spectral_floor_check,
    trace_count,
)
from .generators import (
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_erdos_renyi,
    gen_grid,
    gen_lhh_adversary,
    gen_star,
    generate,
)
from .graph import (
    DegreePartition,
    Graph,
    GraphError,
    SelfLoopError,
    build_graph,
    common_neighbors,
    degree_partition,
)
from .listing import (
    CanonicalCycle,
    ListingStats,
    canonical_cycle,
    count,
    count_codegree,
    detect,
    list_m43,
    list_n2,
)
from .oracle import OracleLimitError, brute_force_list, brute_force_two_paths
from .two_paths import (
    PathCensus,
    PathClass,
    TwoPath,
    enum_hhh_paths,
    enum_lcenter_paths,
    enum_oriented_lhh_paths,
    two_path_census,
)

__version__ = "0.1.0"
