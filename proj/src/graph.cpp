#include "netresil/graph.hpp"

#include <algorithm>
#include <queue>

#include "netresil/prng.hpp"

namespace netresil {

Graph Graph::from_edges(std::span<const std::pair<NodeId, NodeId>> edges,
                        std::span<const NodeId> isolated) {
    for (const auto& [a, b] : edges) {
        if (a == b) throw SelfLoopError(std::to_string(a));
    }

    std::vector<NodeId> ids;
    ids.reserve(edges.size() * 2 + isolated.size());
    for (const auto& [a, b] : edges) {
        ids.push_back(a);
        ids.push_back(b);
    }
    ids.insert(ids.end(), isolated.begin(), isolated.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    Graph g;
    g.ids_ = std::move(ids);
    g.adj_.resize(g.ids_.size());

    std::vector<std::pair<std::uint32_t, std::uint32_t>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = static_cast<std::uint32_t>(g.index_of(a));
        auto ib = static_cast<std::uint32_t>(g.index_of(b));
        if (ia > ib) std::swap(ia, ib);
        idx_edges.emplace_back(ia, ib);
    }
    std::sort(idx_edges.begin(), idx_edges.end());
    idx_edges.erase(std::unique(idx_edges.begin(), idx_edges.end()), idx_edges.end());

    for (const auto& [ia, ib] : idx_edges) {
        g.adj_[ia].push_back(ib);
        g.adj_[ib].push_back(ia);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    g.m_ = idx_edges.size();
    return g;
}

Graph Graph::from_edges(std::initializer_list<std::pair<NodeId, NodeId>> edges,
                        std::initializer_list<NodeId> isolated) {
    std::vector<std::pair<NodeId, NodeId>> e(edges);
    std::vector<NodeId> iso(isolated);
    return from_edges(std::span<const std::pair<NodeId, NodeId>>(e),
                      std::span<const NodeId>(iso));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        for (std::uint32_t j : adj_[i]) {
            if (j > i) out.push_back(Edge{ids_[i], ids_[j]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::has_node(NodeId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t Graph::index_of(NodeId id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw UnknownNodeError(id);
    return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<NodeId> Graph::neighbors(NodeId id) const {
    const auto& row = adj_[index_of(id)];
    std::vector<NodeId> out;
    out.reserve(row.size());
    for (std::uint32_t j : row) out.push_back(ids_[j]);
    return out;
}

std::size_t Graph::degree(NodeId id) const { return adj_[index_of(id)].size(); }

Graph Graph::induced_subgraph(std::span<const NodeId> keep) const {
    std::vector<NodeId> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

    std::vector<char> in_keep(ids_.size(), 0);
    for (NodeId id : kept) in_keep[index_of(id)] = 1;

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        if (!in_keep[i]) continue;
        for (std::uint32_t j : adj_[i]) {
            if (j > i && in_keep[j]) edges.emplace_back(ids_[i], ids_[j]);
        }
    }
    return from_edges(edges, kept);
}

namespace {

// BFS over internal indexes; dist must be sized n and filled with -1.
// Returns visited indexes in discovery order.
std::vector<std::uint32_t> bfs_from(const Graph& g, std::uint32_t source,
                                    std::vector<std::int64_t>& dist) {
    std::vector<std::uint32_t> order;
    std::queue<std::uint32_t> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        std::uint32_t u = q.front();
        q.pop();
        order.push_back(u);
        for (std::uint32_t w : g.neighbor_indexes(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return order;
}

}  // namespace

ComponentDecomposition connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<char> seen(n, 0);
    ComponentDecomposition out;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp;
        std::queue<std::uint32_t> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            comp.push_back(g.id_at(u));
            for (std::uint32_t w : g.neighbor_indexes(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    std::stable_sort(out.components.begin(), out.components.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a.front() < b.front();
                     });
    return out;
}

Graph largest_component_subgraph(const Graph& g) {
    if (g.node_count() == 0) throw EmptyGraphError();
    auto decomposition = connected_components(g);
    return g.induced_subgraph(decomposition.components.front());
}

std::map<NodeId, std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
    const auto s = static_cast<std::uint32_t>(g.index_of(source));
    std::vector<std::int64_t> dist(g.node_count(), -1);
    auto order = bfs_from(g, s, dist);
    std::map<NodeId, std::uint32_t> out;
    for (std::uint32_t u : order) out[g.id_at(u)] = static_cast<std::uint32_t>(dist[u]);
    return out;
}

double average_path_length(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw EmptyGraphError();
    if (n == 1) return 0.0;

    // Ordered-pair distance sum accumulated exactly in integers; every BFS
    // must reach all n nodes or the graph is disconnected.
    std::uint64_t total = 0;
    std::vector<std::int64_t> dist(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), std::int64_t{-1});
        auto order = bfs_from(g, s, dist);
        if (order.size() != n) throw DisconnectedError();
        for (std::uint32_t u : order) total += static_cast<std::uint64_t>(dist[u]);
    }
    const std::uint64_t pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    return static_cast<double>(total / 2) / static_cast<double>(pair_count);
}

double average_path_length_sampled(const Graph& g, std::size_t sources, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    if (n == 0) throw EmptyGraphError();
    if (n == 1) return 0.0;
    if (sources >= n) return average_path_length(g);
    if (sources == 0) throw BadParamsError("sampled path length needs at least one source");

    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    SplitMix64 rng(seed);
    partial_shuffle(pool, sources, rng);

    std::uint64_t total = 0;
    std::vector<std::int64_t> dist(n);
    for (std::size_t i = 0; i < sources; ++i) {
        std::fill(dist.begin(), dist.end(), std::int64_t{-1});
        auto order = bfs_from(g, pool[i], dist);
        if (order.size() != n) throw DisconnectedError();
        for (std::uint32_t u : order) total += static_cast<std::uint64_t>(dist[u]);
    }
    return static_cast<double>(total) /
           (static_cast<double>(sources) * static_cast<double>(n - 1));
}

}  // namespace netresil
