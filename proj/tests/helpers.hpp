// Shared graph fixtures for the test binaries.
#pragma once

#include <utility>
#include <vector>

#include "netresil/graph.hpp"

namespace testutil {

using netresil::Graph;
using netresil::NodeId;

inline Graph path_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(edges, n == 1 ? std::vector<NodeId>{0} : std::vector<NodeId>{});
}

inline Graph cycle_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(edges);
}

inline Graph complete_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(edges);
}

// Star K_{1,leaves}: center 0, leaves 1..leaves.
inline Graph star_graph(NodeId leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(edges);
}

// Triangles {0,1,2} and {3,4,5} joined by the bridge (2,3).
inline Graph two_triangles_bridge() {
    return Graph::from_edges({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

inline Graph two_disjoint_triangles() {
    return Graph::from_edges({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

// K5 on 0..4 and K5 on 5..9 joined by the bridge (4,5).
inline Graph two_k5_bridge() {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < 5; ++i)
        for (NodeId j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    for (NodeId i = 5; i < 10; ++i)
        for (NodeId j = i + 1; j < 10; ++j) edges.emplace_back(i, j);
    edges.emplace_back(4, 5);
    return Graph::from_edges(edges);
}

}  // namespace testutil
