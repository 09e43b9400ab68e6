#include "netresil/report.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace netresil {

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

bool is_comment(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t");
    return pos != std::string_view::npos && line[pos] == '#';
}

}  // namespace

ParsedEdgeList parse_edge_list(std::string_view text) {
    ParsedEdgeList out;
    std::vector<std::pair<NodeId, NodeId>> edges;

    auto intern = [&](const std::string& label) -> NodeId {
        auto it = out.labels.label_to_id.find(label);
        if (it != out.labels.label_to_id.end()) return it->second;
        const auto id = static_cast<NodeId>(out.labels.id_to_label.size());
        out.labels.id_to_label.push_back(label);
        out.labels.label_to_id.emplace(label, id);
        return id;
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (is_blank(line) || is_comment(line)) {
            if (end == text.size()) break;
            continue;
        }

        std::istringstream tokens{std::string(line)};
        std::string a, b, extra;
        if (!(tokens >> a >> b) || (tokens >> extra)) throw MalformedLineError(line_no);
        if (a == b) throw SelfLoopError(a);
        const NodeId ua = intern(a);  // sequenced: first appearance wins the lower id
        const NodeId ub = intern(b);
        edges.emplace_back(ua, ub);
        if (end == text.size()) break;
    }

    out.graph = Graph::from_edges(edges);
    return out;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

namespace {

std::string node_token(NodeId id, const LabelMap* labels) {
    return labels ? labels->label(id) : std::to_string(id);
}

std::string node_array_json(const std::vector<NodeId>& ids, const LabelMap* labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += '"' + json_escape(node_token(ids[i], labels)) + '"';
    }
    out += "]";
    return out;
}

struct RandomColumn {
    double component_count;
    double largest_component_size;
    double avg_path_length;
};

RandomColumn random_mean(const ResilienceReport& r) {
    RandomColumn mean{0.0, 0.0, 0.0};
    for (const auto& trial : r.random_trials) {
        mean.component_count += static_cast<double>(trial.after.component_count);
        mean.largest_component_size += static_cast<double>(trial.after.largest_component_size);
        mean.avg_path_length += trial.after.avg_path_length_largest;
    }
    const auto t = static_cast<double>(r.random_trials.size());
    mean.component_count /= t;
    mean.largest_component_size /= t;
    mean.avg_path_length /= t;
    return mean;
}

std::string emit_json(const ResilienceReport& r, const LabelMap* labels) {
    const bool single = r.random_trials.size() == 1;
    const RandomColumn rnd = random_mean(r);
    std::ostringstream os;
    os << "{\n";
    os << "  \"meta\": {\n";
    os << "    \"tool\": \"" << kToolName << "\",\n";
    os << "    \"version\": \"" << kToolVersion << "\",\n";
    os << "    \"n\": " << r.meta.n << ",\n";
    os << "    \"m\": " << r.meta.m << ",\n";
    os << "    \"f\": " << format_fixed(r.meta.fraction, 4) << ",\n";
    os << "    \"centrality\": \"" << to_string(r.meta.centrality) << "\",\n";
    os << "    \"mode\": \"" << to_string(r.meta.mode) << "\",\n";
    os << "    \"seed\": " << r.meta.seed << ",\n";
    os << "    \"trials\": " << r.meta.trials << "\n";
    os << "  },\n";
    os << "  \"rows\": [\n";
    os << "    {\"metric\": \"component_count\", \"before\": " << r.before.component_count
       << ", \"after_targeted\": " << r.after_targeted.component_count
       << ", \"after_random\": "
       << (single ? std::to_string(r.random_trials[0].after.component_count)
                  : format_fixed(rnd.component_count, 4))
       << "},\n";
    os << "    {\"metric\": \"largest_component_size\", \"before\": "
       << r.before.largest_component_size
       << ", \"after_targeted\": " << r.after_targeted.largest_component_size
       << ", \"after_random\": "
       << (single ? std::to_string(r.random_trials[0].after.largest_component_size)
                  : format_fixed(rnd.largest_component_size, 4))
       << "},\n";
    os << "    {\"metric\": \"avg_path_length_largest\", \"before\": "
       << format_fixed(r.before.avg_path_length_largest, 4)
       << ", \"after_targeted\": " << format_fixed(r.after_targeted.avg_path_length_largest, 4)
       << ", \"after_random\": " << format_fixed(rnd.avg_path_length, 4) << "}\n";
    os << "  ],\n";
    os << "  \"removed\": {\n";
    os << "    \"targeted\": " << node_array_json(r.removed_targeted, labels) << ",\n";
    os << "    \"random\": " << node_array_json(r.random_trials[0].removed, labels) << "\n";
    os << "  }";
    if (!single) {
        os << ",\n  \"trials\": [\n";
        for (std::size_t t = 0; t < r.random_trials.size(); ++t) {
            const auto& trial = r.random_trials[t];
            os << "    {\"seed\": " << trial.seed
               << ", \"component_count\": " << trial.after.component_count
               << ", \"largest_component_size\": " << trial.after.largest_component_size
               << ", \"avg_path_length_largest\": "
               << format_fixed(trial.after.avg_path_length_largest, 4) << "}"
               << (t + 1 < r.random_trials.size() ? "," : "") << "\n";
        }
        os << "  ]";
    }
    os << "\n}\n";
    return os.str();
}

std::string emit_csv(const ResilienceReport& r) {
    const bool single = r.random_trials.size() == 1;
    const RandomColumn rnd = random_mean(r);
    std::ostringstream os;
    os << "metric,before,after_targeted,after_random\n";
    os << "component_count," << r.before.component_count << ','
       << r.after_targeted.component_count << ','
       << (single ? std::to_string(r.random_trials[0].after.component_count)
                  : format_fixed(rnd.component_count, 4))
       << '\n';
    os << "largest_component_size," << r.before.largest_component_size << ','
       << r.after_targeted.largest_component_size << ','
       << (single ? std::to_string(r.random_trials[0].after.largest_component_size)
                  : format_fixed(rnd.largest_component_size, 4))
       << '\n';
    os << "avg_path_length_largest," << format_fixed(r.before.avg_path_length_largest, 4)
       << ',' << format_fixed(r.after_targeted.avg_path_length_largest, 4) << ','
       << format_fixed(rnd.avg_path_length, 4) << '\n';
    if (!single) {
        for (std::size_t t = 0; t < r.random_trials.size(); ++t) {
            const auto& trial = r.random_trials[t];
            os << "component_count_trial" << t << ',' << r.before.component_count << ','
               << r.after_targeted.component_count << ',' << trial.after.component_count
               << '\n';
            os << "largest_component_size_trial" << t << ',' << r.before.largest_component_size
               << ',' << r.after_targeted.largest_component_size << ','
               << trial.after.largest_component_size << '\n';
            os << "avg_path_length_largest_trial" << t << ','
               << format_fixed(r.before.avg_path_length_largest, 4) << ','
               << format_fixed(r.after_targeted.avg_path_length_largest, 4) << ','
               << format_fixed(trial.after.avg_path_length_largest, 4) << '\n';
        }
    }
    return os.str();
}

}  // namespace

ResilienceReport build_report(const Graph& g, double fraction, std::uint64_t seed,
                              CentralityKind centrality, TargetingMode mode,
                              std::size_t trials, const MeasureOptions& opts) {
    if (trials < 1) throw BadParamsError("trials must be >= 1");

    ResilienceReport report;
    report.meta.n = g.node_count();
    report.meta.m = g.edge_count();
    report.meta.fraction = fraction;
    report.meta.centrality = centrality;
    report.meta.mode = mode;
    report.meta.seed = seed;
    report.meta.trials = trials;

    auto comparison = compare_scenarios(g, AttackScenario::targeted(fraction, centrality, mode),
                                        AttackScenario::random(fraction, seed), opts);
    report.before = comparison.targeted.before;
    report.after_targeted = comparison.targeted.after;
    report.removed_targeted = comparison.targeted.removed;
    report.random_trials.push_back(
        RandomTrial{seed, comparison.random.after, comparison.random.removed});
    for (std::size_t t = 1; t < trials; ++t) {
        auto outcome = run_scenario(g, AttackScenario::random(fraction, seed + t), opts);
        report.random_trials.push_back(RandomTrial{seed + t, outcome.after, outcome.removed});
    }
    return report;
}

std::string emit_report(const ResilienceReport& report, ReportFormat format,
                        const LabelMap* labels) {
    return format == ReportFormat::Json ? emit_json(report, labels) : emit_csv(report);
}

std::string write_edge_list(const Graph& g, const LabelMap* labels) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += node_token(e.u, labels);
        out += ' ';
        out += node_token(e.v, labels);
        out += '\n';
    }
    return out;
}

std::string export_dot(const Graph& g, const Partition* partition) {
    static constexpr std::array<std::string_view, 12> kPalette = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
        "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};

    std::ostringstream os;
    os << "graph G {\n";
    for (NodeId id : g.nodes()) {
        os << "  " << id;
        if (partition) {
            const auto label = partition->label_of(id);
            os << " [color=\"" << kPalette[label % kPalette.size()] << "\", style=filled]";
        }
        os << ";\n";
    }
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace netresil
