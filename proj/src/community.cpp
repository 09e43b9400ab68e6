#include "netresil/community.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "netresil/centrality.hpp"
#include "netresil/prng.hpp"

namespace netresil {

std::uint32_t Partition::label_of(NodeId id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) throw UnknownNodeError(id);
    return labels[static_cast<std::size_t>(it - nodes.begin())];
}

std::vector<std::vector<NodeId>> Partition::communities() const {
    std::vector<std::vector<NodeId>> out(community_count);
    for (std::size_t i = 0; i < nodes.size(); ++i) out[labels[i]].push_back(nodes[i]);
    return out;
}

double modularity(const Graph& g, std::span<const std::uint32_t> labels) {
    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();
    if (m == 0) throw NoEdgesError();
    if (labels.size() != n) throw IncompleteAssignmentError();

    // Per-community intra-edge count and degree sum, accumulated in integers
    // and combined in ascending label order.
    std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> acc;
    for (std::size_t i = 0; i < n; ++i) acc[labels[i]].second += g.degree_at(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t j : g.neighbor_indexes(i)) {
            if (j > i && labels[i] == labels[j]) acc[labels[i]].first += 1;
        }
    }

    const double md = static_cast<double>(m);
    double q = 0.0;
    for (const auto& [label, ld] : acc) {
        const double intra = static_cast<double>(ld.first) / md;
        const double deg = static_cast<double>(ld.second) / (2.0 * md);
        q += intra - deg * deg;
    }
    return q;
}

double modularity(const Graph& g, const std::map<NodeId, std::uint32_t>& assignment) {
    std::vector<std::uint32_t> labels;
    labels.reserve(g.node_count());
    for (NodeId id : g.nodes()) {
        auto it = assignment.find(id);
        if (it == assignment.end()) throw IncompleteAssignmentError();
        labels.push_back(it->second);
    }
    return modularity(g, labels);
}

Partition make_partition(const Graph& g, std::span<const std::uint32_t> labels) {
    if (labels.size() != g.node_count()) throw IncompleteAssignmentError();

    // Nodes are scanned in ascending id order, so first appearance of a raw
    // label happens at the community's smallest member.
    Partition p;
    p.nodes = g.nodes();
    p.labels.reserve(labels.size());
    std::unordered_map<std::uint32_t, std::uint32_t> relabel;
    for (std::uint32_t raw : labels) {
        auto [it, inserted] = relabel.emplace(raw, static_cast<std::uint32_t>(relabel.size()));
        p.labels.push_back(it->second);
    }
    p.community_count = static_cast<std::uint32_t>(relabel.size());
    p.q = g.edge_count() > 0 ? modularity(g, p.labels) : 0.0;
    return p;
}

namespace {

std::vector<std::uint32_t> component_labels(const Graph& g,
                                            const std::vector<std::pair<NodeId, NodeId>>& edges) {
    Graph residual = Graph::from_edges(edges, g.nodes());
    std::vector<std::uint32_t> labels(g.node_count(), 0);
    auto decomposition = connected_components(residual);
    std::uint32_t next = 0;
    for (const auto& comp : decomposition.components) {
        for (NodeId id : comp) labels[g.index_of(id)] = next;
        ++next;
    }
    return labels;
}

}  // namespace

Dendrogram girvan_newman(const Graph& g, std::optional<std::size_t> max_splits) {
    if (g.edge_count() == 0) throw NoEdgesError();

    Dendrogram out;
    std::vector<std::pair<NodeId, NodeId>> remaining;
    for (const Edge& e : g.edges()) remaining.emplace_back(e.u, e.v);
    std::size_t last_count = connected_components(g).count();

    while (!remaining.empty()) {
        if (max_splits && out.snapshots.size() >= *max_splits) break;

        Graph residual = Graph::from_edges(remaining, g.nodes());
        auto scores = edge_betweenness(residual);

        // Ascending map order plus strict comparison: ties resolve to the
        // lexicographically smallest edge.
        Edge target = scores.begin()->first;
        double best = scores.begin()->second;
        for (const auto& [edge, score] : scores) {
            if (score > best) {
                best = score;
                target = edge;
            }
        }

        std::erase(remaining, std::make_pair(target.u, target.v));
        out.removed_edges.push_back(target);

        Graph next = Graph::from_edges(remaining, g.nodes());
        const std::size_t count = connected_components(next).count();
        if (count > last_count) {
            auto labels = component_labels(g, remaining);
            out.snapshots.push_back({target, make_partition(g, labels)});
            last_count = count;
        }
    }
    return out;
}

Partition best_partition_by_modularity(const Graph& g, const Dendrogram& d) {
    (void)g;
    if (d.snapshots.empty()) throw EmptyDendrogramError();
    const Partition* best = &d.snapshots.front().partition;
    for (const auto& snapshot : d.snapshots) {
        const Partition& p = snapshot.partition;
        if (p.q > best->q ||
            (p.q == best->q && p.community_count < best->community_count)) {
            best = &p;
        }
    }
    return *best;
}

namespace {

// Aggregated working graph for Louvain. Weights are integer edge
// multiplicities; a self-loop of weight w contributes w to the total weight
// and 2w to its node's degree.
struct WeightedGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> adj;  // no self entries
    std::vector<std::int64_t> self_loop;
    std::vector<std::int64_t> degree;
    std::int64_t total_weight = 0;
};

WeightedGraph lift(const Graph& g) {
    WeightedGraph w;
    w.n = g.node_count();
    w.adj.resize(w.n);
    w.self_loop.assign(w.n, 0);
    w.degree.assign(w.n, 0);
    for (std::size_t i = 0; i < w.n; ++i) {
        for (std::uint32_t j : g.neighbor_indexes(i)) w.adj[i].emplace_back(j, 1);
        w.degree[i] = static_cast<std::int64_t>(g.degree_at(i));
    }
    w.total_weight = static_cast<std::int64_t>(g.edge_count());
    return w;
}

// One full local-moving phase; returns true if any node changed community.
bool local_moving(const WeightedGraph& wg, std::vector<std::uint32_t>& comm,
                  const std::vector<std::uint32_t>& scan_order) {
    const double m = static_cast<double>(wg.total_weight);
    std::vector<std::int64_t> sum_tot(wg.n, 0);
    for (std::size_t i = 0; i < wg.n; ++i) sum_tot[comm[i]] += wg.degree[i];

    std::vector<std::int64_t> weight_to(wg.n, 0);
    std::vector<std::uint32_t> touched;
    bool any_move = false;
    bool moved_this_pass = true;
    while (moved_this_pass) {
        moved_this_pass = false;
        for (std::uint32_t i : scan_order) {
            const std::uint32_t c_old = comm[i];
            const double k_i = static_cast<double>(wg.degree[i]);

            touched.clear();
            for (const auto& [j, wt] : wg.adj[i]) {
                const std::uint32_t c = comm[j];
                if (weight_to[c] == 0) touched.push_back(c);
                weight_to[c] += wt;
            }
            if (weight_to[c_old] == 0) touched.push_back(c_old);
            std::sort(touched.begin(), touched.end());

            sum_tot[c_old] -= wg.degree[i];

            // Gain of inserting i (detached) into community c:
            //   k_{i,c}/m - sum_tot(c) * k_i / (2 m^2).
            // Reinsertion into c_old is the baseline; a move needs a strictly
            // larger gain, and ascending candidate order makes ties resolve
            // to the smallest label.
            auto gain_of = [&](std::uint32_t c) {
                return static_cast<double>(weight_to[c]) / m -
                       static_cast<double>(sum_tot[c]) * k_i / (2.0 * m * m);
            };
            std::uint32_t best_c = c_old;
            double best_gain = gain_of(c_old);
            for (std::uint32_t c : touched) {
                if (c == c_old) continue;
                const double gain = gain_of(c);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = c;
                }
            }

            sum_tot[best_c] += wg.degree[i];
            comm[i] = best_c;
            if (best_c != c_old) {
                moved_this_pass = true;
                any_move = true;
            }
            for (std::uint32_t c : touched) weight_to[c] = 0;
        }
    }
    return any_move;
}

// Renumbers communities compactly (ascending old label -> 0..k-1) and builds
// the aggregated super-node graph.
WeightedGraph aggregate(const WeightedGraph& wg, std::vector<std::uint32_t>& comm) {
    std::vector<std::int64_t> remap(wg.n, -1);
    std::uint32_t next = 0;
    {
        std::vector<std::uint32_t> labels(comm);
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        for (std::uint32_t label : labels) remap[label] = next++;
    }
    for (auto& c : comm) c = static_cast<std::uint32_t>(remap[c]);

    WeightedGraph out;
    out.n = next;
    out.adj.resize(out.n);
    out.self_loop.assign(out.n, 0);
    out.degree.assign(out.n, 0);
    out.total_weight = wg.total_weight;

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> inter;
    for (std::size_t i = 0; i < wg.n; ++i) {
        const std::uint32_t ci = comm[i];
        out.self_loop[ci] += wg.self_loop[i];
        for (const auto& [j, wt] : wg.adj[i]) {
            const std::uint32_t cj = comm[j];
            if (ci == cj) {
                if (j > i) out.self_loop[ci] += wt;
            } else if (ci < cj) {
                inter[{ci, cj}] += wt;
            }
        }
    }
    for (const auto& [key, wt] : inter) {
        out.adj[key.first].emplace_back(key.second, wt);
        out.adj[key.second].emplace_back(key.first, wt);
    }
    for (auto& row : out.adj) std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < out.n; ++i) {
        out.degree[i] = 2 * out.self_loop[i];
        for (const auto& [j, wt] : out.adj[i]) out.degree[i] += wt;
    }
    return out;
}

}  // namespace

Partition louvain(const Graph& g, std::uint64_t seed, bool shuffle) {
    if (g.edge_count() == 0) throw NoEdgesError();

    WeightedGraph wg = lift(g);
    // node_to_final[i]: community of original node i in the current level's
    // label space.
    std::vector<std::uint32_t> node_to_final(g.node_count());
    for (std::uint32_t i = 0; i < node_to_final.size(); ++i) node_to_final[i] = i;

    SplitMix64 rng(seed);
    while (true) {
        std::vector<std::uint32_t> scan_order(wg.n);
        for (std::uint32_t i = 0; i < wg.n; ++i) scan_order[i] = i;
        if (shuffle) partial_shuffle(scan_order, scan_order.size(), rng);

        std::vector<std::uint32_t> comm(wg.n);
        for (std::uint32_t i = 0; i < wg.n; ++i) comm[i] = i;
        if (!local_moving(wg, comm, scan_order)) break;

        wg = aggregate(wg, comm);
        for (auto& c : node_to_final) c = comm[c];
    }
    return make_partition(g, node_to_final);
}

}  // namespace netresil
