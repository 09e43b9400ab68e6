// netresil command-line front end.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "netresil/attack.hpp"
#include "netresil/centrality.hpp"
#include "netresil/community.hpp"
#include "netresil/generators.hpp"
#include "netresil/graph.hpp"
#include "netresil/report.hpp"

namespace {

using namespace netresil;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << bytes;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

CentralityKind parse_centrality(const std::string& name) {
    if (name == "degree") return CentralityKind::Degree;
    if (name == "closeness") return CentralityKind::Closeness;
    return CentralityKind::Betweenness;
}

Partition detect_communities(const Graph& g, const std::string& algorithm) {
    if (algorithm == "girvan-newman") {
        return best_partition_by_modularity(g, girvan_newman(g));
    }
    return louvain(g);
}

std::string score_map_json(const CentralityScores& scores, const LabelMap& labels,
                           const std::string& indent) {
    std::string out = "{";
    for (std::size_t i = 0; i < scores.nodes.size(); ++i) {
        if (i) out += ',';
        out += '\n' + indent + "  \"" + json_escape(labels.label(scores.nodes[i])) +
               "\": " + format_fixed(scores.scores[i], 4);
    }
    out += '\n' + indent + "}";
    return out;
}

struct AnalyzeResult {
    FragmentationMetrics metrics;
    CentralityScores degree;
    CentralityScores closeness;
    CentralityScores betweenness;
    Partition partition;
};

std::string analyze_json(const Graph& g, const AnalyzeResult& r, const LabelMap& labels,
                         const std::string& algorithm) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"meta\": {\"tool\": \"" << kToolName << "\", \"version\": \"" << kToolVersion
       << "\", \"n\": " << g.node_count() << ", \"m\": " << g.edge_count()
       << ", \"algorithm\": \"" << algorithm << "\"},\n";
    os << "  \"metrics\": {\"component_count\": " << r.metrics.component_count
       << ", \"largest_component_size\": " << r.metrics.largest_component_size
       << ", \"avg_path_length_largest\": "
       << format_fixed(r.metrics.avg_path_length_largest, 4) << "},\n";
    os << "  \"centrality\": {\n";
    os << "    \"degree\": " << score_map_json(r.degree, labels, "    ") << ",\n";
    os << "    \"closeness\": " << score_map_json(r.closeness, labels, "    ") << ",\n";
    os << "    \"betweenness\": " << score_map_json(r.betweenness, labels, "    ") << "\n";
    os << "  },\n";
    os << "  \"communities\": {\"q\": " << format_fixed(r.partition.q, 4)
       << ", \"count\": " << r.partition.community_count << ", \"assignment\": {";
    for (std::size_t i = 0; i < r.partition.nodes.size(); ++i) {
        if (i) os << ", ";
        os << '"' << json_escape(labels.label(r.partition.nodes[i])) << "\": "
           << r.partition.labels[i];
    }
    os << "}}\n";
    os << "}\n";
    return os.str();
}

std::string analyze_csv(const Graph& g, const AnalyzeResult& r, const LabelMap& labels) {
    std::ostringstream os;
    os << "metric,value\n";
    os << "n," << g.node_count() << '\n';
    os << "m," << g.edge_count() << '\n';
    os << "component_count," << r.metrics.component_count << '\n';
    os << "largest_component_size," << r.metrics.largest_component_size << '\n';
    os << "avg_path_length_largest," << format_fixed(r.metrics.avg_path_length_largest, 4)
       << '\n';
    os << "modularity," << format_fixed(r.partition.q, 4) << '\n';
    os << "community_count," << r.partition.community_count << '\n';
    os << '\n';
    os << "node,degree,closeness,betweenness,community\n";
    for (std::size_t i = 0; i < r.degree.nodes.size(); ++i) {
        os << labels.label(r.degree.nodes[i]) << ',' << format_fixed(r.degree.scores[i], 4)
           << ',' << format_fixed(r.closeness.scores[i], 4) << ','
           << format_fixed(r.betweenness.scores[i], 4) << ','
           << r.partition.label_of(r.degree.nodes[i]) << '\n';
    }
    return os.str();
}

std::string communities_json(const Graph& g, const Partition& p, const LabelMap& labels,
                             const std::string& algorithm) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"meta\": {\"tool\": \"" << kToolName << "\", \"version\": \"" << kToolVersion
       << "\", \"n\": " << g.node_count() << ", \"m\": " << g.edge_count()
       << ", \"algorithm\": \"" << algorithm << "\"},\n";
    os << "  \"q\": " << format_fixed(p.q, 4) << ",\n";
    os << "  \"community_count\": " << p.community_count << ",\n";
    os << "  \"communities\": [";
    const auto groups = p.communities();
    for (std::size_t c = 0; c < groups.size(); ++c) {
        if (c) os << ", ";
        os << '[';
        for (std::size_t i = 0; i < groups[c].size(); ++i) {
            if (i) os << ", ";
            os << '"' << json_escape(labels.label(groups[c][i])) << '"';
        }
        os << ']';
    }
    os << "],\n";
    os << "  \"assignment\": {";
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (i) os << ", ";
        os << '"' << json_escape(labels.label(p.nodes[i])) << "\": " << p.labels[i];
    }
    os << "}\n";
    os << "}\n";
    return os.str();
}

std::string communities_csv(const Partition& p, const LabelMap& labels) {
    std::ostringstream os;
    os << "node,community\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        os << labels.label(p.nodes[i]) << ',' << p.labels[i] << '\n';
    }
    return os.str();
}

std::string generate_json(const Graph& g, const std::string& model, std::uint32_t m_attach,
                          double p, std::uint64_t seed) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"meta\": {\"tool\": \"" << kToolName << "\", \"version\": \"" << kToolVersion
       << "\", \"model\": \"" << model << "\", ";
    if (model == "ba") {
        os << "\"m_attach\": " << m_attach << ", ";
    } else {
        os << "\"p\": " << format_fixed(p, 4) << ", ";
    }
    os << "\"seed\": " << seed << ", \"n\": " << g.node_count() << ", \"m\": " << g.edge_count()
       << "},\n";
    os << "  \"edges\": [";
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ", ";
        os << '[' << edges[i].u << ", " << edges[i].v << ']';
    }
    os << "]\n";
    os << "}\n";
    return os.str();
}

std::string generate_csv(const Graph& g) {
    std::ostringstream os;
    os << "source,target\n";
    for (const Edge& e : g.edges()) os << e.u << ',' << e.v << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"network resilience toolkit: centrality, communities, attack simulation"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string format = "json";
    std::string algorithm = "louvain";
    std::string centrality_name = "betweenness";
    std::string dot_path;
    std::string model;
    double fraction = 1.0 / 3.0;
    double edge_prob = 0.0;
    std::uint64_t seed = 0;
    std::uint32_t gen_n = 0;
    std::uint32_t gen_m = 0;
    std::size_t trials = 1;
    bool adaptive = false;

    const auto format_check = CLI::IsMember({"json", "csv"});
    const auto algorithm_check = CLI::IsMember({"louvain", "girvan-newman"});

    auto* analyze = app.add_subcommand("analyze", "centralities, communities and fragmentation metrics");
    analyze->add_option("edgelist", input, "edge-list file ('-' for stdin)")->required();
    analyze->add_option("--algorithm", algorithm, "community algorithm")->check(algorithm_check);
    analyze->add_option("--format", format, "output format")->check(format_check);
    analyze->add_option("--output", output, "output path (default stdout)");
    analyze->add_option("--dot", dot_path, "also write a DOT file colored by community");

    auto* attack = app.add_subcommand("attack", "compare targeted vs random node removal");
    attack->add_option("edgelist", input, "edge-list file ('-' for stdin)")->required();
    attack->add_option("--fraction", fraction, "fraction of nodes to remove, in (0,1)");
    attack->add_option("--seed", seed, "PRNG seed for the random scenario");
    attack->add_flag("--adaptive", adaptive, "recompute centrality after each removal");
    attack->add_option("--centrality", centrality_name, "targeting centrality")
        ->check(CLI::IsMember({"degree", "closeness", "betweenness"}));
    attack->add_option("--trials", trials, "number of random-attack trials")
        ->check(CLI::PositiveNumber);
    attack->add_option("--format", format, "output format")->check(format_check);
    attack->add_option("--output", output, "output path (default stdout)");

    auto* communities = app.add_subcommand("communities", "detect community structure");
    communities->add_option("edgelist", input, "edge-list file ('-' for stdin)")->required();
    communities->add_option("--algorithm", algorithm, "community algorithm")->check(algorithm_check);
    communities->add_option("--format", format, "output format")->check(format_check);
    communities->add_option("--output", output, "output path (default stdout)");
    communities->add_option("--dot", dot_path, "also write a DOT file colored by community");

    auto* generate = app.add_subcommand("generate", "produce a synthetic graph as an edge list");
    generate->add_option("--model", model, "graph model")
        ->required()
        ->check(CLI::IsMember({"ba", "er"}));
    generate->add_option("--n", gen_n, "node count")->required();
    auto* m_opt = generate->add_option("--m", gen_m, "edges added per node (ba)");
    auto* p_opt = generate->add_option("--p", edge_prob, "edge probability (er)");
    generate->add_option("--seed", seed, "PRNG seed");
    auto* gen_format_opt = generate->add_option("--format", format, "output format (default edgelist)")
                               ->check(CLI::IsMember({"edgelist", "json", "csv"}));
    generate->add_option("--output", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*generate) {
            if (model == "ba") {
                if (!*m_opt || *p_opt) {
                    std::cerr << "model 'ba' requires --m and forbids --p\n";
                    return 2;
                }
            } else {
                if (!*p_opt || *m_opt) {
                    std::cerr << "model 'er' requires --p and forbids --m\n";
                    return 2;
                }
            }
            const Graph g = model == "ba" ? barabasi_albert(gen_n, gen_m, seed)
                                          : erdos_renyi(gen_n, edge_prob, seed);
            if (gen_format_opt->count() == 0) format = "edgelist";
            std::string bytes;
            if (format == "json") {
                bytes = generate_json(g, model, gen_m, edge_prob, seed);
            } else if (format == "csv") {
                bytes = generate_csv(g);
            } else {
                bytes = write_edge_list(g);
            }
            write_output(output, bytes);
            return 0;
        }

        const ParsedEdgeList parsed = parse_edge_list(read_input(input));
        const Graph& g = parsed.graph;

        if (*attack) {
            const auto mode = adaptive ? TargetingMode::Adaptive : TargetingMode::Static;
            const ResilienceReport report = build_report(
                g, fraction, seed, parse_centrality(centrality_name), mode, trials);
            const auto fmt = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
            write_output(output, emit_report(report, fmt, &parsed.labels));
            return 0;
        }

        if (*analyze) {
            AnalyzeResult r{measure(g),
                            degree_centrality(g),
                            closeness_centrality(g),
                            betweenness_centrality(g),
                            detect_communities(g, algorithm)};
            const std::string bytes = format == "csv" ? analyze_csv(g, r, parsed.labels)
                                                      : analyze_json(g, r, parsed.labels, algorithm);
            write_output(output, bytes);
            if (!dot_path.empty()) write_output(dot_path, export_dot(g, &r.partition));
            return 0;
        }

        // communities
        const Partition p = detect_communities(g, algorithm);
        const std::string bytes = format == "csv" ? communities_csv(p, parsed.labels)
                                                  : communities_json(g, p, parsed.labels, algorithm);
        write_output(output, bytes);
        if (!dot_path.empty()) write_output(dot_path, export_dot(g, &p));
        return 0;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
