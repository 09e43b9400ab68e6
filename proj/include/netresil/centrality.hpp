#pragma once

#include <map>
#include <string>
#include <vector>

#include "netresil/graph.hpp"

namespace netresil {

enum class CentralityKind { Degree, Closeness, Betweenness };

std::string to_string(CentralityKind kind);

/// Scores for one centrality kind, parallel to Graph::nodes().
struct CentralityScores {
    CentralityKind kind;
    bool normalized;
    std::vector<NodeId> nodes;   // ascending, same order as the source graph
    std::vector<double> scores;  // parallel to nodes

    double score_of(NodeId id) const;
};

/// deg(v) / (n-1); 0.0 for a single-node graph.
CentralityScores degree_centrality(const Graph& g);

/// Component-scaled closeness: with r(v) reachable nodes (excluding v) and
/// S(v) their distance sum, score = (r/(n-1)) * (r/S); 0.0 when r = 0.
/// Finite on disconnected graphs, which post-attack inputs usually are.
CentralityScores closeness_centrality(const Graph& g);

/// Shortest-path betweenness over unordered pairs, endpoints excluded,
/// computed by per-source BFS path counting with reverse dependency
/// accumulation (Brandes). Normalization divides by (n-1)(n-2)/2; graphs
/// with n < 3 score all zeros. Sources are accumulated in ascending id
/// order so results are bit-reproducible.
CentralityScores betweenness_centrality(const Graph& g, bool normalized = true);

/// Edge betweenness over unordered pairs, same accumulation scheme with
/// edge-level dependencies. Throws NoEdgesError on edgeless graphs.
std::map<Edge, double> edge_betweenness(const Graph& g);

/// Dispatch by kind; betweenness honors `normalized`, degree/closeness are
/// inherently normalized.
CentralityScores compute_centrality(const Graph& g, CentralityKind kind,
                                    bool normalized = true);

}  // namespace netresil
