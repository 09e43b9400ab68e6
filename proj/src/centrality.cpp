#include "netresil/centrality.hpp"

#include <algorithm>
#include <queue>

namespace netresil {

std::string to_string(CentralityKind kind) {
    switch (kind) {
        case CentralityKind::Degree: return "degree";
        case CentralityKind::Closeness: return "closeness";
        case CentralityKind::Betweenness: return "betweenness";
    }
    return "betweenness";
}

double CentralityScores::score_of(NodeId id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) throw UnknownNodeError(id);
    return scores[static_cast<std::size_t>(it - nodes.begin())];
}

CentralityScores degree_centrality(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw EmptyGraphError();
    CentralityScores out{CentralityKind::Degree, true, g.nodes(), {}};
    out.scores.resize(n, 0.0);
    if (n >= 2) {
        for (std::size_t i = 0; i < n; ++i)
            out.scores[i] = static_cast<double>(g.degree_at(i)) / static_cast<double>(n - 1);
    }
    return out;
}

CentralityScores closeness_centrality(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw EmptyGraphError();
    CentralityScores out{CentralityKind::Closeness, true, g.nodes(), {}};
    out.scores.resize(n, 0.0);

    std::vector<std::int64_t> dist(n);
    std::queue<std::uint32_t> q;
    for (std::uint32_t v = 0; v < n; ++v) {
        std::fill(dist.begin(), dist.end(), std::int64_t{-1});
        dist[v] = 0;
        q.push(v);
        std::uint64_t reached = 0;
        std::uint64_t dist_sum = 0;
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            for (std::uint32_t w : g.neighbor_indexes(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    dist_sum += static_cast<std::uint64_t>(dist[w]);
                    ++reached;
                    q.push(w);
                }
            }
        }
        if (reached == 0) continue;  // isolated node scores 0
        const double r = static_cast<double>(reached);
        out.scores[v] = (r / static_cast<double>(n - 1)) * (r / static_cast<double>(dist_sum));
    }
    return out;
}

namespace {

// Single-source stage of the betweenness accumulation: BFS with path counts,
// returning nodes in discovery order for the reverse sweep.
struct BrandesState {
    std::vector<std::uint32_t> order;
    std::vector<std::vector<std::uint32_t>> preds;
    std::vector<double> sigma;
    std::vector<std::int64_t> dist;
    std::vector<double> delta;

    explicit BrandesState(std::size_t n) : preds(n), sigma(n), dist(n), delta(n) {}

    void run(const Graph& g, std::uint32_t s) {
        const std::size_t n = g.node_count();
        order.clear();
        for (std::size_t i = 0; i < n; ++i) {
            preds[i].clear();
            sigma[i] = 0.0;
            dist[i] = -1;
            delta[i] = 0.0;
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<std::uint32_t> q;
        q.push(s);
        while (!q.empty()) {
            std::uint32_t v = q.front();
            q.pop();
            order.push_back(v);
            for (std::uint32_t w : g.neighbor_indexes(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
    }
};

}  // namespace

CentralityScores betweenness_centrality(const Graph& g, bool normalized) {
    const std::size_t n = g.node_count();
    if (n == 0) throw EmptyGraphError();
    CentralityScores out{CentralityKind::Betweenness, normalized, g.nodes(), {}};
    out.scores.resize(n, 0.0);
    if (n < 3) return out;

    // Sources in ascending id order keeps the floating-point accumulation
    // bit-reproducible.
    BrandesState st(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        st.run(g, s);
        for (auto it = st.order.rbegin(); it != st.order.rend(); ++it) {
            const std::uint32_t w = *it;
            for (std::uint32_t v : st.preds[w])
                st.delta[v] += st.sigma[v] / st.sigma[w] * (1.0 + st.delta[w]);
            if (w != s) out.scores[w] += st.delta[w];
        }
    }

    // Each unordered pair was visited from both endpoints.
    double scale = 0.5;
    if (normalized)
        scale /= static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (double& s : out.scores) s *= scale;
    return out;
}

std::map<Edge, double> edge_betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) throw NoEdgesError();

    const auto edge_list = g.edges();
    std::map<Edge, std::size_t> edge_index;
    for (std::size_t i = 0; i < edge_list.size(); ++i) edge_index[edge_list[i]] = i;
    std::vector<double> acc(edge_list.size(), 0.0);

    BrandesState st(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        st.run(g, s);
        for (auto it = st.order.rbegin(); it != st.order.rend(); ++it) {
            const std::uint32_t w = *it;
            for (std::uint32_t v : st.preds[w]) {
                const double c = st.sigma[v] / st.sigma[w] * (1.0 + st.delta[w]);
                st.delta[v] += c;
                const Edge e = Edge::normalized(g.id_at(v), g.id_at(w));
                acc[edge_index.find(e)->second] += c;
            }
        }
    }

    std::map<Edge, double> out;
    for (std::size_t i = 0; i < edge_list.size(); ++i) out[edge_list[i]] = acc[i] * 0.5;
    return out;
}

CentralityScores compute_centrality(const Graph& g, CentralityKind kind, bool normalized) {
    switch (kind) {
        case CentralityKind::Degree: return degree_centrality(g);
        case CentralityKind::Closeness: return closeness_centrality(g);
        case CentralityKind::Betweenness: return betweenness_centrality(g, normalized);
    }
    throw BadParamsError("unknown centrality kind");
}

}  // namespace netresil
