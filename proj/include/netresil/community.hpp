#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "netresil/graph.hpp"

namespace netresil {

/// A full assignment of nodes to communities. Labels are canonical:
/// communities are numbered 0..k-1 in order of their smallest member id.
struct Partition {
    std::vector<NodeId> nodes;           // ascending, same order as the source graph
    std::vector<std::uint32_t> labels;   // parallel to nodes
    std::uint32_t community_count = 0;
    double q = 0.0;                      // modularity on the source graph

    std::uint32_t label_of(NodeId id) const;
    std::vector<std::vector<NodeId>> communities() const;
};

/// Newman-Girvan modularity: Q = sum_c [ L_c/m - (d_c/2m)^2 ] with L_c the
/// intra-community edge count and d_c the total degree of community c.
/// `labels` is parallel to g.nodes(); throws IncompleteAssignmentError on a
/// size mismatch and NoEdgesError when m = 0.
double modularity(const Graph& g, std::span<const std::uint32_t> labels);

/// Same, keyed by node id; every node must be present.
double modularity(const Graph& g, const std::map<NodeId, std::uint32_t>& assignment);

/// Canonicalizes labels and attaches the modularity of the partition on g.
Partition make_partition(const Graph& g, std::span<const std::uint32_t> labels);

/// Divisive clustering trace: the full edge-removal sequence plus a partition
/// snapshot for every removal that increased the component count. Snapshot
/// community counts are strictly increasing; snapshot Q is measured on the
/// original graph.
struct Dendrogram {
    struct Snapshot {
        Edge removed_edge;   // the removal that caused the split
        Partition partition;
    };

    std::vector<Edge> removed_edges;
    std::vector<Snapshot> snapshots;
};

/// Repeatedly removes the single highest edge-betweenness edge from a working
/// copy (ties: lexicographically smallest edge), recomputing betweenness on
/// the residual graph each round. Stops when no edges remain or after
/// `max_splits` component-count increases.
Dendrogram girvan_newman(const Graph& g, std::optional<std::size_t> max_splits = {});

/// Snapshot with maximal Q; ties broken by fewest communities, then earliest.
Partition best_partition_by_modularity(const Graph& g, const Dendrogram& d);

/// Louvain: greedy local moving over nodes (ascending id order; ties by
/// smallest community label) followed by community aggregation, repeated
/// until a level makes no move. The returned Q is recomputed on the original
/// graph. With shuffle = true the scan order is a seeded splitmix64 shuffle
/// instead of ascending ids.
Partition louvain(const Graph& g, std::uint64_t seed = 0, bool shuffle = false);

}  // namespace netresil
