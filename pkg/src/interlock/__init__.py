"""Interlocking-editorship journal networks: projection of editor/journal
affiliations, centrality and centralization, m-slice cohesive subgroups and
rank concordance."""

from .centrality import (
    CentralityReport,
    CentralizationIndices,
    all_pairs_geodesics,
    betweenness_centrality,
    centrality_report,
    centralization,
    closeness_centrality,
    competition_ranks,
    degree_centrality,
)
from .cohesion import (
    ComponentPartition,
    SliceCensus,
    component_members,
    components,
    m_slice,
    slice_census,
)
from .concordance import (
    RankMatrix,
    centrality_concordance,
    kendall_tau_b,
    kendall_w,
    midranks,
)
from .core import AffiliationNetwork, JournalGraph
from .errors import (
    DegenerateNetwork,
    DuplicateEdge,
    DuplicateVertex,
    InterlockError,
    ParseError,
    SelfLoop,
    ShapeError,
    UndefinedStatistic,
    UnknownVertex,
    UnsupportedDirected,
)
from .ingest import (
    read_affiliation_csv,
    read_fixture_a1,
    read_pajek_net,
    write_pajek_clu,
    write_pajek_net,
)
from .project import (
    DistributionTable,
    NetworkSummary,
    degree_distribution,
    line_value_distribution,
    project,
    summarize,
)

__version__ = "0.1.0"
