"""Graph resilience toolkit: centrality, community detection, attack simulation."""

from ._core import (
    AttackKind,
    AttackOutcome,
    AttackScenario,
    CentralityKind,
    Dendrogram,
    FragmentationMetrics,
    Graph,
    GraphError,
    LabelMap,
    MeasureOptions,
    ParsedEdgeList,
    Partition,
    RandomTrial,
    ReportMeta,
    ResilienceReport,
    ScenarioComparison,
    Snapshot,
    SplitMix64,
    TargetingMode,
    apply_removal,
    attack_size,
    average_path_length,
    average_path_length_sampled,
    barabasi_albert,
    best_partition_by_modularity,
    betweenness_centrality,
    bfs_distances,
    build_report,
    closeness_centrality,
    compare_scenarios,
    compute_centrality,
    connected_components,
    degree_centrality,
    edge_betweenness,
    emit_report,
    erdos_renyi,
    export_dot,
    girvan_newman,
    largest_component_subgraph,
    louvain,
    measure,
    modularity,
    parse_edge_list,
    run_scenario,
    select_targets_random,
    select_targets_targeted,
    write_edge_list,
)

__version__ = "1.0.0"

__all__ = [
    "AttackKind",
    "AttackOutcome",
    "AttackScenario",
    "CentralityKind",
    "Dendrogram",
    "FragmentationMetrics",
    "Graph",
    "GraphError",
    "LabelMap",
    "MeasureOptions",
    "ParsedEdgeList",
    "Partition",
    "RandomTrial",
    "ReportMeta",
    "ResilienceReport",
    "ScenarioComparison",
    "Snapshot",
    "SplitMix64",
    "TargetingMode",
    "apply_removal",
    "attack_size",
    "average_path_length",
    "average_path_length_sampled",
    "barabasi_albert",
    "best_partition_by_modularity",
    "betweenness_centrality",
    "bfs_distances",
    "build_report",
    "closeness_centrality",
    "compare_scenarios",
    "compute_centrality",
    "connected_components",
    "degree_centrality",
    "edge_betweenness",
    "emit_report",
    "erdos_renyi",
    "export_dot",
    "girvan_newman",
    "largest_component_subgraph",
    "louvain",
    "measure",
    "modularity",
    "parse_edge_list",
    "run_scenario",
    "select_targets_random",
    "select_targets_targeted",
    "write_edge_list",
]
