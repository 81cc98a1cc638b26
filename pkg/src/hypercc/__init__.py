"""Hypergraph clustering coefficients, order-3 motif censuses and dataset tooling.

The package centers on four per-node local clustering coefficient
definitions for simple hypergraphs: a weighted-projection definition
(``proposed``), the bipartite 4-path definition (``opsahl``), the
extra-overlap definition (``zhou``) and the clique-expansion baseline.
Hot counting kernels run on a compiled extension when available, with a
pure-Python fallback selected at import (see ``hypercc._kernels.BACKEND``).
"""

from ._kernels import BACKEND, available_backends
from .analysis import (
    CorrelationReport,
    HistogramSpec,
    correlation_report,
    histogram_counts,
    pearson,
)
from .coefficients import (
    DEFINITIONS,
    CCRecord,
    CCReport,
    OpsahlPathCount,
    cc_all,
    cc_baseline,
    cc_opsahl,
    cc_proposed,
    cc_zhou,
    opsahl_path_counts,
)
from .core import (
    Hypergraph,
    SummaryStats,
    build,
    connected_components,
    largest_connected_component,
    neighbors,
    summary_stats,
)
from .io import (
    ParseError,
    PreprocessError,
    PreprocessOptions,
    Provenance,
    RawEdgeList,
    parse_benson,
    parse_edgelist,
    preprocess,
    write_benson,
    write_edgelist,
)
from .motifs import (
    MotifCensus,
    MotifClass,
    RootedPattern,
    Table1,
    canonical_fixtures,
    census_order3,
    classify_triple,
    table1_matrix,
)
from .oracle import RandomHypergraphSpec, random_hypergraph
from .projection import (
    PairCoverage,
    SimpleAdjacency,
    WeightedProjection,
    clique_expansion,
    pair_coverage,
    weighted_projection,
    write_projection_csv,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFINITIONS",
    "CCRecord",
    "CCReport",
    "CorrelationReport",
    "HistogramSpec",
    "Hypergraph",
    "MotifCensus",
    "MotifClass",
    "OpsahlPathCount",
    "PairCoverage",
    "ParseError",
    "PreprocessError",
    "PreprocessOptions",
    "Provenance",
    "RandomHypergraphSpec",
    "RawEdgeList",
    "RootedPattern",
    "SimpleAdjacency",
    "SummaryStats",
    "Table1",
    "WeightedProjection",
    "available_backends",
    "build",
    "canonical_fixtures",
    "cc_all",
    "cc_baseline",
    "cc_opsahl",
    "cc_proposed",
    "cc_zhou",
    "census_order3",
    "classify_triple",
    "clique_expansion",
    "connected_components",
    "correlation_report",
    "histogram_counts",
    "largest_connected_component",
    "neighbors",
    "opsahl_path_counts",
    "pair_coverage",
    "parse_benson",
    "parse_edgelist",
    "pearson",
    "preprocess",
    "random_hypergraph",
    "summary_stats",
    "table1_matrix",
    "weighted_projection",
    "write_benson",
    "write_edgelist",
    "write_projection_csv",
]
