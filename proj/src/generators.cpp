#include "netresil/generators.hpp"

#include <algorithm>
#include <cmath>

#include "netresil/prng.hpp"

namespace netresil {

Graph barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
    if (m_attach < 1 || m_attach >= n)
        throw BadParamsError("barabasi_albert requires 1 <= m_attach < n");

    SplitMix64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m_attach + (n - m_attach - 1) * m_attach);

    // One urn entry per unit of degree; endpoints pushed in edge order.
    std::vector<NodeId> urn;
    urn.reserve(edges.capacity() * 2);
    for (NodeId leaf = 1; leaf <= m_attach; ++leaf) {
        edges.emplace_back(0, leaf);
        urn.push_back(0);
        urn.push_back(leaf);
    }

    std::vector<NodeId> chosen;
    chosen.reserve(m_attach);
    for (NodeId arrival = static_cast<NodeId>(m_attach + 1); arrival < n; ++arrival) {
        chosen.clear();
        while (chosen.size() < m_attach) {
            const NodeId cand = urn[rng.next() % urn.size()];
            if (std::find(chosen.begin(), chosen.end(), cand) == chosen.end())
                chosen.push_back(cand);
        }
        for (NodeId c : chosen) {
            edges.emplace_back(std::min(arrival, c), std::max(arrival, c));
            urn.push_back(c);
            urn.push_back(arrival);
        }
    }
    return Graph::from_edges(edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw BadParamsError("erdos_renyi requires 0 <= p <= 1");

    SplitMix64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> all_nodes(n);
    for (std::size_t i = 0; i < n; ++i) all_nodes[i] = static_cast<NodeId>(i);

    // One uniform draw per pair, in lexicographic pair order.
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng.next_double() < p)
                edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
    }
    return Graph::from_edges(edges, all_nodes);
}

}  // namespace netresil
