"""Deciders, certificates and extremal constructions for 3-uniform hypergraphs
with vanishing uniform Turán density."""

from .core import (
    GoodPartition,
    Graph,
    Labeling,
    Partition21,
    ThreeGraph,
    codegree,
    induced,
    induced_labeling,
    is_21_type,
    is_good_partition,
    labeling_sum,
    link_graph,
    make_good_partition,
    make_graph,
    make_partition21,
    make_threegraph,
    min_codegree,
    read_3g,
    shadow,
    write_3g,
)
from .decider import (
    POSITIVE,
    ZERO,
    Decision,
    SearchCapExceeded,
    ZeroCertificate,
    decide_21,
    decide_uniform_turan_zero,
    extract_connected_witness,
    forced_coloring,
    gamma_graph,
    tripartite_reduction,
    validate_certificate,
)
from .containment import (
    BUDGET_EXHAUSTED,
    FOUND,
    NONE,
    ContainsResult,
    Embedding,
    contains,
    count_embeddings,
    validate_embedding,
)
from .constructions import (
    BipartiteConstruction,
    BipartiteHost,
    CodegreeReport,
    DensityReport,
    MemoryCapExceeded,
    build_bipartite,
    build_tripartite,
    codegree_one_witness,
    erdos_hajnal,
    h_edge,
    random_zero_instance,
    realize,
    uniform_density_report,
    verify_codegrees,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
