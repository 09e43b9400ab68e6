#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "netresil/errors.hpp"

namespace netresil {

/// Node identifier. Ids are opaque non-negative integers; they may be sparse
/// (subgraphs keep the ids of the parent graph). Ascending id order is the
/// tie-break everywhere.
using NodeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
    NodeId u;
    NodeId v;

    static Edge normalized(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph: no self-loops, no duplicate edges. Immutable
/// after construction; all read operations are safe to call concurrently.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list plus optional degree-0 nodes.
    /// Duplicate edges (either orientation) collapse; self-loops throw
    /// SelfLoopError.
    static Graph from_edges(std::span<const std::pair<NodeId, NodeId>> edges,
                            std::span<const NodeId> isolated = {});
    static Graph from_edges(std::initializer_list<std::pair<NodeId, NodeId>> edges,
                            std::initializer_list<NodeId> isolated = {});

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return m_; }

    /// Node ids in ascending order.
    const std::vector<NodeId>& nodes() const { return ids_; }

    /// Edges as normalized (u < v) pairs, ascending.
    std::vector<Edge> edges() const;

    bool has_node(NodeId id) const;

    /// Adjacent node ids in ascending order. Throws UnknownNodeError.
    std::vector<NodeId> neighbors(NodeId id) const;

    std::size_t degree(NodeId id) const;

    /// Induced subgraph on `keep` (all of which must be nodes). Ids are
    /// preserved.
    Graph induced_subgraph(std::span<const NodeId> keep) const;

    // Index-based access for algorithms: nodes are densely numbered
    // 0..n-1 in ascending id order.
    std::size_t index_of(NodeId id) const;  // throws UnknownNodeError
    NodeId id_at(std::size_t index) const { return ids_[index]; }
    std::span<const std::uint32_t> neighbor_indexes(std::size_t index) const {
        return adj_[index];
    }
    std::size_t degree_at(std::size_t index) const { return adj_[index].size(); }

private:
    std::vector<NodeId> ids_;                     // ascending
    std::vector<std::vector<std::uint32_t>> adj_; // per index, ascending
    std::size_t m_ = 0;
};

/// Connected components ordered by (size descending, smallest contained id
/// ascending); nodes within a component are ascending.
struct ComponentDecomposition {
    std::vector<std::vector<NodeId>> components;

    std::size_t count() const { return components.size(); }
};

ComponentDecomposition connected_components(const Graph& g);

/// Induced subgraph on the first component of the decomposition. Throws
/// EmptyGraphError on an empty graph.
Graph largest_component_subgraph(const Graph& g);

/// Unweighted shortest-path hop counts from `source`; unreachable nodes are
/// absent. Throws UnknownNodeError.
std::map<NodeId, std::uint32_t> bfs_distances(const Graph& g, NodeId source);

/// Mean shortest-path distance over all unordered node pairs, via all-sources
/// BFS with exact integer accumulation. Requires a connected graph (callers
/// pass the largest-component subgraph); a single node yields 0.0.
double average_path_length(const Graph& g);

/// Estimates the same mean from `sources` pseudo-randomly chosen BFS sources
/// (splitmix64 + partial Fisher-Yates over ascending ids). Falls back to the
/// exact mean when sources >= n.
double average_path_length_sampled(const Graph& g, std::size_t sources, std::uint64_t seed);

}  // namespace netresil
