#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "helpers.hpp"
#include "netresil/centrality.hpp"
#include "netresil/errors.hpp"
#include "netresil/generators.hpp"
#include "netresil/graph.hpp"
#include "oracle.hpp"

using namespace netresil;
using testutil::brute_betweenness;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::path_graph;
using testutil::star_graph;

TEST_CASE("degree centrality fixtures") {
    const auto star = degree_centrality(star_graph(4));
    CHECK(star.score_of(0) == 1.0);
    CHECK(star.score_of(1) == 0.25);

    const Graph c5g = cycle_graph(5);
    const auto c5 = degree_centrality(c5g);
    for (NodeId v : c5g.nodes()) CHECK(c5.score_of(v) == 0.5);

    const auto iso = degree_centrality(Graph::from_edges({{0, 1}}, {7}));
    CHECK(iso.score_of(7) == 0.0);

    const auto single = degree_centrality(Graph::from_edges({}, {3}));
    CHECK(single.score_of(3) == 0.0);
}

TEST_CASE("closeness centrality fixtures") {
    const auto p3 = closeness_centrality(path_graph(3));
    CHECK(p3.score_of(1) == 1.0);
    CHECK(p3.score_of(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    // Two disjoint edges: r=1, S=1, n=4 -> (1/3)*(1/1) per node.
    const auto pairs = closeness_centrality(Graph::from_edges({{0, 1}, {2, 3}}));
    for (NodeId v : {0u, 1u, 2u, 3u}) CHECK(pairs.score_of(v) == doctest::Approx(1.0 / 3.0));

    const auto iso = closeness_centrality(Graph::from_edges({{0, 1}}, {5}));
    CHECK(iso.score_of(5) == 0.0);

    // Complete graph: every node at distance 1 from all others.
    const Graph k4g = complete_graph(4);
    const auto k4 = closeness_centrality(k4g);
    for (NodeId v : k4g.nodes()) CHECK(k4.score_of(v) == 1.0);
}

TEST_CASE("betweenness analytic fixtures") {
    const auto p3 = betweenness_centrality(path_graph(3));
    CHECK(p3.score_of(1) == 1.0);
    CHECK(p3.score_of(0) == 0.0);

    const auto star_raw = betweenness_centrality(star_graph(4), false);
    CHECK(star_raw.score_of(0) == 6.0);
    CHECK(star_raw.score_of(2) == 0.0);

    const Graph c4g = cycle_graph(4);
    const auto c4_raw = betweenness_centrality(c4g, false);
    for (NodeId v : c4g.nodes()) CHECK(c4_raw.score_of(v) == 0.5);

    // Normalization divides by (n-1)(n-2)/2 = 3 on n=4.
    const auto c4 = betweenness_centrality(c4g);
    for (NodeId v : c4g.nodes()) CHECK(c4.score_of(v) == 0.5 / 3.0);

    // n < 3: all zeros, no error.
    const auto tiny = betweenness_centrality(Graph::from_edges({{0, 1}}));
    CHECK(tiny.score_of(0) == 0.0);
    CHECK(tiny.score_of(1) == 0.0);
}

TEST_CASE("path-interior identity on P4") {
    // On a path, raw betweenness of node i counts pairs it separates.
    const auto p4 = betweenness_centrality(path_graph(4), false);
    CHECK(p4.score_of(0) == 0.0);
    CHECK(p4.score_of(1) == 2.0);
    CHECK(p4.score_of(2) == 2.0);
    CHECK(p4.score_of(3) == 0.0);
}

TEST_CASE("edge betweenness fixtures") {
    const auto p3 = edge_betweenness(path_graph(3));
    CHECK(p3.at(Edge{0, 1}) == 2.0);
    CHECK(p3.at(Edge{1, 2}) == 2.0);

    const auto bridge = edge_betweenness(testutil::two_triangles_bridge());
    CHECK(bridge.at(Edge{2, 3}) == 9.0);  // {0,1,2} x {3,4,5}
    CHECK(bridge.at(Edge{0, 1}) == 1.0);
    CHECK(bridge.at(Edge{0, 2}) == 4.0);  // (0,2),(0,3),(0,4),(0,5)

    // A cut edge separating parts of size a and b carries a*b.
    const Graph p5 = path_graph(5);
    const auto eb = edge_betweenness(p5);
    CHECK(eb.at(Edge{1, 2}) == 6.0);  // {0,1} x {2,3,4}

    CHECK_THROWS_AS(edge_betweenness(Graph::from_edges({}, {0})), NoEdgesError);
}

TEST_CASE("betweenness matches brute-force enumeration on seeded graphs") {
    const double ps[] = {0.2, 0.4, 0.6};
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto n = static_cast<NodeId>(8 + seed % 5);
        const double p = ps[seed % 3];
        const Graph g = erdos_renyi(n, p, seed);
        const auto oracle = brute_betweenness(g);

        const auto raw = betweenness_centrality(g, false);
        for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
            CHECK(std::abs(raw.scores[i] - oracle.node.at(raw.nodes[i])) < 1e-9);
        }
        if (g.edge_count() > 0) {
            const auto eb = edge_betweenness(g);
            REQUIRE(eb.size() == oracle.edge.size());
            for (const auto& [edge, score] : eb) {
                CHECK(std::abs(score - oracle.edge.at(edge)) < 1e-9);
            }
        }
    }
}

TEST_CASE("betweenness is equivariant under node relabeling") {
    const Graph g = erdos_renyi(10, 0.4, 9);
    // Relabel v -> 3v + 1 (order-preserving, so index structure shifts).
    std::vector<std::pair<NodeId, NodeId>> relabeled;
    for (const Edge& e : g.edges()) relabeled.emplace_back(3 * e.u + 1, 3 * e.v + 1);
    const Graph h = Graph::from_edges(relabeled);

    const auto sg = betweenness_centrality(g, false);
    const auto sh = betweenness_centrality(h, false);
    for (NodeId v : g.nodes()) {
        CHECK(sg.score_of(v) == doctest::Approx(sh.score_of(3 * v + 1)).epsilon(1e-12));
    }
}

TEST_CASE("normalized scores stay within [0, 1]") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = erdos_renyi(15, 0.3, seed);
        for (auto kind : {CentralityKind::Degree, CentralityKind::Closeness,
                          CentralityKind::Betweenness}) {
            const auto scores = compute_centrality(g, kind);
            CHECK(scores.kind == kind);
            for (double s : scores.scores) {
                CHECK(s >= 0.0);
                CHECK(s <= 1.0);
            }
        }
    }
}

TEST_CASE("centrality kinds render stable names") {
    CHECK(to_string(CentralityKind::Degree) == "degree");
    CHECK(to_string(CentralityKind::Closeness) == "closeness");
    CHECK(to_string(CentralityKind::Betweenness) == "betweenness");
}

TEST_CASE("score_of rejects unknown nodes") {
    const auto scores = degree_centrality(path_graph(3));
    CHECK_THROWS_AS(scores.score_of(42), UnknownNodeError);
}
