#pragma once

#include <cstdint>

#include "netresil/graph.hpp"

namespace netresil {

/// Barabasi-Albert preferential attachment. Seed graph is a star on
/// m_attach + 1 nodes (center 0), so every node has nonzero degree before the
/// first arrival. Each new node draws m_attach distinct targets from a
/// repeated-endpoint urn (one urn entry per unit of degree), resampling on
/// duplicates; the urn is extended only after the arrival's targets are all
/// chosen. Edge count is exactly m_attach + (n - m_attach - 1) * m_attach.
/// Throws BadParamsError unless 1 <= m_attach < n.
Graph barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed);

/// Erdos-Renyi G(n, p): every unordered pair, visited in lexicographic order,
/// becomes an edge iff the next splitmix64 uniform is < p.
/// Throws BadParamsError unless 0 <= p <= 1.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

}  // namespace netresil
