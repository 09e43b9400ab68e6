// Python bindings for the netresil core library.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "netresil/attack.hpp"
#include "netresil/centrality.hpp"
#include "netresil/community.hpp"
#include "netresil/generators.hpp"
#include "netresil/graph.hpp"
#include "netresil/prng.hpp"
#include "netresil/report.hpp"

namespace py = pybind11;
using namespace netresil;

namespace {

using EdgePair = std::pair<NodeId, NodeId>;

Graph make_graph(const std::vector<EdgePair>& edges, const std::vector<NodeId>& isolated) {
    return Graph::from_edges(edges, isolated);
}

std::vector<EdgePair> edge_pairs(const Graph& g) {
    std::vector<EdgePair> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

py::dict scores_dict(const CentralityScores& s) {
    py::dict d;
    for (std::size_t i = 0; i < s.nodes.size(); ++i) d[py::int_(s.nodes[i])] = s.scores[i];
    return d;
}

py::dict edge_betweenness_dict(const Graph& g) {
    py::dict d;
    for (const auto& [edge, score] : edge_betweenness(g)) {
        d[py::make_tuple(edge.u, edge.v)] = score;
    }
    return d;
}

py::dict partition_dict(const Partition& p) {
    py::dict d;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) d[py::int_(p.nodes[i])] = p.labels[i];
    return d;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw BadParamsError("unknown report format: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graph resilience toolkit: centrality, communities, attack simulation";

    py::register_exception<GraphError>(m, "GraphError");

    py::enum_<CentralityKind>(m, "CentralityKind")
        .value("Degree", CentralityKind::Degree)
        .value("Closeness", CentralityKind::Closeness)
        .value("Betweenness", CentralityKind::Betweenness);

    py::enum_<AttackKind>(m, "AttackKind")
        .value("Targeted", AttackKind::Targeted)
        .value("Random", AttackKind::Random);

    py::enum_<TargetingMode>(m, "TargetingMode")
        .value("Static", TargetingMode::Static)
        .value("Adaptive", TargetingMode::Adaptive);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("edges"),
             py::arg("isolated") = std::vector<NodeId>{})
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("nodes", [](const Graph& g) { return g.nodes(); })
        .def("edges", &edge_pairs)
        .def("has_node", &Graph::has_node, py::arg("node"))
        .def("neighbors", &Graph::neighbors, py::arg("node"))
        .def("degree", &Graph::degree, py::arg("node"))
        .def(
            "induced_subgraph",
            [](const Graph& g, const std::vector<NodeId>& keep) {
                return g.induced_subgraph(keep);
            },
            py::arg("keep"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.node_count() << ", m=" << g.edge_count() << ")";
            return os.str();
        });

    m.def(
        "connected_components",
        [](const Graph& g) { return connected_components(g).components; }, py::arg("g"));
    m.def("largest_component_subgraph", &largest_component_subgraph, py::arg("g"));
    m.def("bfs_distances", &bfs_distances, py::arg("g"), py::arg("source"));
    m.def("average_path_length", &average_path_length, py::arg("g"));
    m.def("average_path_length_sampled", &average_path_length_sampled, py::arg("g"),
          py::arg("sources"), py::arg("seed"));

    m.def(
        "degree_centrality", [](const Graph& g) { return scores_dict(degree_centrality(g)); },
        py::arg("g"));
    m.def(
        "closeness_centrality",
        [](const Graph& g) { return scores_dict(closeness_centrality(g)); }, py::arg("g"));
    m.def(
        "betweenness_centrality",
        [](const Graph& g, bool normalized) {
            return scores_dict(betweenness_centrality(g, normalized));
        },
        py::arg("g"), py::arg("normalized") = true);
    m.def("edge_betweenness", &edge_betweenness_dict, py::arg("g"));
    m.def(
        "compute_centrality",
        [](const Graph& g, CentralityKind kind, bool normalized) {
            return scores_dict(compute_centrality(g, kind, normalized));
        },
        py::arg("g"), py::arg("kind"), py::arg("normalized") = true);

    py::class_<Partition>(m, "Partition")
        .def_readonly("nodes", &Partition::nodes)
        .def_readonly("labels", &Partition::labels)
        .def_readonly("community_count", &Partition::community_count)
        .def_readonly("q", &Partition::q)
        .def("label_of", &Partition::label_of, py::arg("node"))
        .def("communities", &Partition::communities)
        .def("as_dict", &partition_dict)
        .def("__repr__", [](const Partition& p) {
            std::ostringstream os;
            os << "Partition(communities=" << p.community_count << ", q=" << p.q << ")";
            return os.str();
        });

    m.def(
        "modularity",
        [](const Graph& g, const std::map<NodeId, std::uint32_t>& assignment) {
            return modularity(g, assignment);
        },
        py::arg("g"), py::arg("assignment"));

    py::class_<Dendrogram::Snapshot>(m, "Snapshot")
        .def_property_readonly("removed_edge",
                               [](const Dendrogram::Snapshot& s) {
                                   return py::make_tuple(s.removed_edge.u, s.removed_edge.v);
                               })
        .def_readonly("partition", &Dendrogram::Snapshot::partition);

    py::class_<Dendrogram>(m, "Dendrogram")
        .def_property_readonly("removed_edges",
                               [](const Dendrogram& d) {
                                   std::vector<EdgePair> out;
                                   out.reserve(d.removed_edges.size());
                                   for (const Edge& e : d.removed_edges) out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def_readonly("snapshots", &Dendrogram::snapshots);

    m.def("girvan_newman", &girvan_newman, py::arg("g"),
          py::arg("max_splits") = std::nullopt);
    m.def("best_partition_by_modularity", &best_partition_by_modularity, py::arg("g"),
          py::arg("dendrogram"));
    m.def("louvain", &louvain, py::arg("g"), py::arg("seed") = 0,
          py::arg("shuffle") = false);

    py::class_<AttackScenario>(m, "AttackScenario")
        .def_readonly("kind", &AttackScenario::kind)
        .def_readonly("fraction", &AttackScenario::fraction)
        .def_readonly("centrality", &AttackScenario::centrality)
        .def_readonly("mode", &AttackScenario::mode)
        .def_readonly("seed", &AttackScenario::seed)
        .def_static("targeted", &AttackScenario::targeted, py::arg("fraction") = 1.0 / 3.0,
                    py::arg("centrality") = CentralityKind::Betweenness,
                    py::arg("mode") = TargetingMode::Static)
        .def_static("random", &AttackScenario::random, py::arg("fraction"), py::arg("seed"));

    py::class_<FragmentationMetrics>(m, "FragmentationMetrics")
        .def_readonly("component_count", &FragmentationMetrics::component_count)
        .def_readonly("largest_component_size", &FragmentationMetrics::largest_component_size)
        .def_readonly("avg_path_length_largest",
                      &FragmentationMetrics::avg_path_length_largest)
        .def("__eq__",
             [](const FragmentationMetrics& a, const FragmentationMetrics& b) { return a == b; })
        .def("__repr__", [](const FragmentationMetrics& f) {
            std::ostringstream os;
            os << "FragmentationMetrics(components=" << f.component_count
               << ", largest=" << f.largest_component_size
               << ", apl=" << f.avg_path_length_largest << ")";
            return os.str();
        });

    py::class_<MeasureOptions>(m, "MeasureOptions")
        .def(py::init([](std::size_t threshold, std::size_t sources, std::uint64_t seed) {
                 MeasureOptions o;
                 o.sample_threshold = threshold;
                 o.sample_sources = sources;
                 o.sample_seed = seed;
                 return o;
             }),
             py::arg("sample_threshold") = MeasureOptions{}.sample_threshold,
             py::arg("sample_sources") = MeasureOptions{}.sample_sources,
             py::arg("sample_seed") = MeasureOptions{}.sample_seed)
        .def_readwrite("sample_threshold", &MeasureOptions::sample_threshold)
        .def_readwrite("sample_sources", &MeasureOptions::sample_sources)
        .def_readwrite("sample_seed", &MeasureOptions::sample_seed);

    py::class_<AttackOutcome>(m, "AttackOutcome")
        .def_readonly("scenario", &AttackOutcome::scenario)
        .def_readonly("removed", &AttackOutcome::removed)
        .def_readonly("before", &AttackOutcome::before)
        .def_readonly("after", &AttackOutcome::after);

    py::class_<ScenarioComparison>(m, "ScenarioComparison")
        .def_readonly("targeted", &ScenarioComparison::targeted)
        .def_readonly("random", &ScenarioComparison::random);

    m.def("attack_size", &attack_size, py::arg("fraction"), py::arg("n"));
    m.def("select_targets_targeted", &select_targets_targeted, py::arg("g"),
          py::arg("centrality"), py::arg("k"), py::arg("mode") = TargetingMode::Static);
    m.def("select_targets_random", &select_targets_random, py::arg("g"), py::arg("k"),
          py::arg("seed"));
    m.def(
        "apply_removal",
        [](const Graph& g, const std::vector<NodeId>& victims) {
            return apply_removal(g, victims);
        },
        py::arg("g"), py::arg("victims"));
    m.def("measure", &measure, py::arg("g"), py::arg("opts") = MeasureOptions{});
    m.def("run_scenario", &run_scenario, py::arg("g"), py::arg("scenario"),
          py::arg("opts") = MeasureOptions{});
    m.def("compare_scenarios", &compare_scenarios, py::arg("g"), py::arg("targeted"),
          py::arg("random"), py::arg("opts") = MeasureOptions{});

    m.def("barabasi_albert", &barabasi_albert, py::arg("n"), py::arg("m_attach"),
          py::arg("seed"));
    m.def("erdos_renyi", &erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));

    py::class_<SplitMix64>(m, "SplitMix64")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next", &SplitMix64::next)
        .def("next_double", &SplitMix64::next_double);

    py::class_<LabelMap>(m, "LabelMap")
        .def_readonly("id_to_label", &LabelMap::id_to_label)
        .def_readonly("label_to_id", &LabelMap::label_to_id)
        .def("label", &LabelMap::label, py::arg("node"));

    py::class_<ParsedEdgeList>(m, "ParsedEdgeList")
        .def_readonly("graph", &ParsedEdgeList::graph)
        .def_readonly("labels", &ParsedEdgeList::labels);

    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));

    py::class_<ReportMeta>(m, "ReportMeta")
        .def_readonly("n", &ReportMeta::n)
        .def_readonly("m", &ReportMeta::m)
        .def_readonly("fraction", &ReportMeta::fraction)
        .def_readonly("centrality", &ReportMeta::centrality)
        .def_readonly("mode", &ReportMeta::mode)
        .def_readonly("seed", &ReportMeta::seed)
        .def_readonly("trials", &ReportMeta::trials);

    py::class_<RandomTrial>(m, "RandomTrial")
        .def_readonly("seed", &RandomTrial::seed)
        .def_readonly("after", &RandomTrial::after)
        .def_readonly("removed", &RandomTrial::removed);

    py::class_<ResilienceReport>(m, "ResilienceReport")
        .def_readonly("meta", &ResilienceReport::meta)
        .def_readonly("before", &ResilienceReport::before)
        .def_readonly("after_targeted", &ResilienceReport::after_targeted)
        .def_readonly("removed_targeted", &ResilienceReport::removed_targeted)
        .def_readonly("random_trials", &ResilienceReport::random_trials);

    m.def("build_report", &build_report, py::arg("g"), py::arg("fraction"), py::arg("seed"),
          py::arg("centrality") = CentralityKind::Betweenness,
          py::arg("mode") = TargetingMode::Static, py::arg("trials") = 1,
          py::arg("opts") = MeasureOptions{});
    m.def(
        "emit_report",
        [](const ResilienceReport& report, const std::string& format, const LabelMap* labels) {
            return emit_report(report, parse_format(format), labels);
        },
        py::arg("report"), py::arg("format") = "json",
        py::arg("labels") = static_cast<const LabelMap*>(nullptr));
    m.def("write_edge_list", &write_edge_list, py::arg("g"),
          py::arg("labels") = static_cast<const LabelMap*>(nullptr));
    m.def("export_dot", &export_dot, py::arg("g"),
          py::arg("partition") = static_cast<const Partition*>(nullptr));
}
