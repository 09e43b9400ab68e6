#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netresil/attack.hpp"
#include "netresil/community.hpp"
#include "netresil/graph.hpp"

namespace netresil {

inline constexpr std::string_view kToolName = "netresil";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Bidirectional node label <-> id mapping produced by edge-list ingestion.
/// Ids are assigned in first-appearance order, starting at 0.
struct LabelMap {
    std::vector<std::string> id_to_label;
    std::unordered_map<std::string, NodeId> label_to_id;

    const std::string& label(NodeId id) const { return id_to_label[id]; }
};

struct ParsedEdgeList {
    Graph graph;
    LabelMap labels;
};

/// Parses "label_a <ws> label_b" lines. Blank lines and lines whose first
/// non-space character is '#' are ignored; CRLF is accepted. Duplicate lines
/// collapse. Throws MalformedLineError (1-based line number) or
/// SelfLoopError (with the offending label).
ParsedEdgeList parse_edge_list(std::string_view text);

enum class ReportFormat { Json, Csv };

struct ReportMeta {
    std::size_t n = 0;
    std::size_t m = 0;
    double fraction = 0.0;
    CentralityKind centrality = CentralityKind::Betweenness;
    TargetingMode mode = TargetingMode::Static;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
};

struct RandomTrial {
    std::uint64_t seed = 0;
    FragmentationMetrics after;
    std::vector<NodeId> removed;
};

/// Before/after fragmentation table mirroring a three-column layout:
/// metric x {before, after_targeted, after_random}. With trials > 1 the
/// random column reports the mean over trials (trial t is seeded seed + t)
/// and the per-trial triples are carried alongside.
struct ResilienceReport {
    ReportMeta meta;
    FragmentationMetrics before;
    FragmentationMetrics after_targeted;
    std::vector<NodeId> removed_targeted;
    std::vector<RandomTrial> random_trials;  // size >= 1
};

/// Runs the targeted scenario once and the random scenario `trials` times
/// (seeds seed, seed+1, ...) against the same pristine graph.
ResilienceReport build_report(const Graph& g, double fraction, std::uint64_t seed,
                              CentralityKind centrality = CentralityKind::Betweenness,
                              TargetingMode mode = TargetingMode::Static,
                              std::size_t trials = 1, const MeasureOptions& opts = {});

/// Canonical serialization: fixed key order {meta, rows, removed}, exactly
/// three metric rows, path lengths with 4 decimal places, LF line endings.
/// Removed-node lists print labels when a LabelMap is given, decimal ids
/// otherwise. Byte-identical output for identical inputs.
std::string emit_report(const ResilienceReport& report, ReportFormat format,
                        const LabelMap* labels = nullptr);

/// Edge lines "u v\n" in ascending (u, v) order; labels applied when given.
std::string write_edge_list(const Graph& g, const LabelMap* labels = nullptr);

/// Graphviz DOT text; nodes listed ascending by id. With a partition, each
/// node carries a fill color indexed by community label (12-color palette,
/// cycling).
std::string export_dot(const Graph& g, const Partition* partition = nullptr);

// Formatting helpers shared with the CLI.
std::string json_escape(std::string_view s);
std::string format_fixed(double value, int decimals);

}  // namespace netresil
