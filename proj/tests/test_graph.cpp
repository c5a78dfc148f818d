#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nutgraph/generate.hpp>
#include <nutgraph/graph.hpp>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using nutgraph::CirculantSpec;
using nutgraph::Graph;
using nutgraph::RewireMove;

namespace {

Graph path3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

CirculantSpec random_spec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> order(3, 40);
    CirculantSpec spec;
    spec.n = order(rng);
    const int max_jump = spec.n / 2;
    std::uniform_int_distribution<int> coin(0, 1);
    while (spec.jumps.empty())
        for (int a = 1; a <= max_jump; ++a)
            if (coin(rng))
                spec.jumps.push_back(a);
    return spec;
}

}  // namespace

TEST_CASE("graph stores edges symmetrically without self-loops") {
    Graph g(4);
    g.add_edge(0, 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(g.has_edge(-1, 0), std::out_of_range);
    g.remove_edge(0, 2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("edges come out sorted") {
    Graph g(5);
    g.add_edge(3, 4);
    g.add_edge(0, 2);
    g.add_edge(0, 1);
    const std::vector<std::pair<int, int>> want{{0, 1}, {0, 2}, {3, 4}};
    CHECK(g.edges() == want);
}

TEST_CASE("degree_profile on small graphs") {
    const auto k13 = nutgraph::degree_profile(complete(13));
    CHECK(k13.is_regular);
    CHECK(k13.degree == 12);
    CHECK(k13.is_connected);

    Graph triangles(6);
    for (int base : {0, 3}) {
        triangles.add_edge(base, base + 1);
        triangles.add_edge(base + 1, base + 2);
        triangles.add_edge(base, base + 2);
    }
    const auto two = nutgraph::degree_profile(triangles);
    CHECK(two.is_regular);
    CHECK(two.degree == 2);
    CHECK_FALSE(two.is_connected);

    const auto p3 = nutgraph::degree_profile(path3());
    CHECK_FALSE(p3.is_regular);
    CHECK_FALSE(p3.degree.has_value());
    CHECK(p3.is_connected);
}

TEST_CASE("adjacency_matrix matches the edge set") {
    const auto zero = nutgraph::adjacency_matrix(Graph(3));
    CHECK(zero.isZero());

    const auto k3 = nutgraph::adjacency_matrix(complete(3));
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j)
            CHECK(k3(i, j) == (i == j ? 0 : 1));

    const auto c4 =
        nutgraph::adjacency_matrix(nutgraph::circulant({4, {1}}));
    for (Eigen::Index i = 0; i < 4; ++i) {
        nutgraph::Int row_sum = 0;
        for (Eigen::Index j = 0; j < 4; ++j)
            row_sum += c4(i, j);
        CHECK(row_sum == 2);
    }
}

TEST_CASE("circulant examples") {
    CHECK(nutgraph::circulant({4, {1, 2}}) == complete(4));

    const Graph c6 = nutgraph::circulant({6, {1, 3}});
    const auto profile = nutgraph::degree_profile(c6);
    CHECK(profile.is_regular);
    CHECK(profile.degree == 3);

    const Graph big = nutgraph::circulant({16, {1, 2, 3, 4, 5, 6}});
    const auto big_profile = nutgraph::degree_profile(big);
    CHECK(big_profile.degree == 12);
    CHECK(big.edge_count() == 96);
}

TEST_CASE("circulant rejects bad specs") {
    CHECK_THROWS_AS(nutgraph::circulant({2, {1}}), nutgraph::SpecError);
    CHECK_THROWS_AS(nutgraph::circulant({8, {}}), nutgraph::SpecError);
    CHECK_THROWS_AS(nutgraph::circulant({8, {1, 5}}), nutgraph::SpecError);
    CHECK_THROWS_AS(nutgraph::circulant({8, {2, 2}}), nutgraph::SpecError);
    CHECK_THROWS_AS(nutgraph::circulant({8, {3, 1}}), nutgraph::SpecError);
}

TEST_CASE("rotation is an automorphism of every circulant") {
    std::mt19937_64 rng(0x0C17CULL);
    for (int trial = 0; trial < 500; ++trial) {
        const CirculantSpec spec = random_spec(rng);
        const Graph g = nutgraph::circulant(spec);
        const auto profile = nutgraph::degree_profile(g);
        REQUIRE(profile.is_regular);
        CHECK(profile.degree == nutgraph::circulant_degree(spec));
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j)
                CHECK(g.has_edge(i, j) ==
                      g.has_edge((i + 1) % spec.n, (j + 1) % spec.n));
    }
}

TEST_CASE("rewire swaps two edges and preserves degrees") {
    const Graph c6 = nutgraph::circulant({6, {1}});
    const Graph swapped = nutgraph::rewire(c6, {{0, 1}, {3, 4}});
    CHECK_FALSE(swapped.has_edge(0, 1));
    CHECK_FALSE(swapped.has_edge(3, 4));
    CHECK(swapped.has_edge(0, 4));
    CHECK(swapped.has_edge(3, 1));
    const auto profile = nutgraph::degree_profile(swapped);
    CHECK(profile.is_regular);
    CHECK(profile.degree == 2);
}

TEST_CASE("rewire followed by the inverse move restores the graph") {
    const Graph g = nutgraph::circulant({9, {1, 2}});
    const RewireMove move{{0, 1}, {4, 5}};
    const Graph once = nutgraph::rewire(g, move);
    const Graph back = nutgraph::rewire(once, {{0, 5}, {4, 1}});
    CHECK(back == g);
}

TEST_CASE("rewire rejects bad moves and names the failing pair") {
    const Graph c6 = nutgraph::circulant({6, {1}});

    CHECK_THROWS_WITH_AS(nutgraph::rewire(c6, {{0, 1}, {1, 2}}),
                         "rewire: vertex 1 appears twice in the move",
                         nutgraph::RewireError);

    try {
        nutgraph::rewire(c6, {{0, 2}, {3, 4}});
        FAIL("missing edge accepted");
    } catch (const nutgraph::RewireError& e) {
        CHECK(e.pair == std::pair<int, int>{0, 2});
    }

    try {
        nutgraph::rewire(c6, {{0, 1}, {2, 3}});
        FAIL("chord creation accepted");
    } catch (const nutgraph::RewireError& e) {
        CHECK(e.pair == std::pair<int, int>{2, 1});
    }
}

TEST_CASE("cycles_complement removes a 2-factor from the complete graph") {
    const Graph single = nutgraph::cycles_complement(15, {15});
    auto profile = nutgraph::degree_profile(single);
    CHECK(profile.degree == 12);

    const Graph five = nutgraph::cycles_complement(15, {3, 3, 3, 3, 3});
    profile = nutgraph::degree_profile(five);
    CHECK(profile.degree == 12);

    const Graph mixed = nutgraph::cycles_complement(7, {4, 3});
    profile = nutgraph::degree_profile(mixed);
    CHECK(profile.degree == 4);
    CHECK(mixed.order() == 7);
}

TEST_CASE("cycles_complement validates the partition") {
    CHECK_THROWS_AS(nutgraph::cycles_complement(5, {2, 3}),
                    nutgraph::PartitionError);
    CHECK_THROWS_AS(nutgraph::cycles_complement(10, {3, 3}),
                    nutgraph::PartitionError);
    CHECK_THROWS_AS(nutgraph::cycles_complement(0, {}),
                    nutgraph::PartitionError);
}

TEST_CASE("cycles_complement degree is n minus 3 for random partitions") {
    std::mt19937_64 rng(0xFAC702ULL);
    std::uniform_int_distribution<int> part(3, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> parts;
        int n = 0;
        const int count = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < count; ++k) {
            parts.push_back(part(rng));
            n += parts.back();
        }
        const Graph g = nutgraph::cycles_complement(n, parts);
        const auto profile = nutgraph::degree_profile(g);
        CHECK(profile.is_regular);
        CHECK(profile.degree == n - 3);
    }
}
