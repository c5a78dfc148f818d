#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nutgraph/generate.hpp>
#include <nutgraph/graph.hpp>
#include <nutgraph/kernel.hpp>
#include <nutgraph/nutcheck.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using nutgraph::Graph;
using nutgraph::Int;
using nutgraph::IntVector;
using nutgraph::NutOutcome;
using nutgraph::VTBranch;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph path3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

}  // namespace

TEST_CASE("complete graph of order 13 is nonsingular") {
    const auto v = nutgraph::is_nut(complete(13));
    CHECK(v.outcome == NutOutcome::Nonsingular);
    CHECK(v.nullity == 0);
    CHECK_FALSE(v.is_nut());
}

TEST_CASE("path on three vertices fails on the zero entry") {
    const auto v = nutgraph::is_nut(path3());
    CHECK(v.outcome == NutOutcome::KernelHasZeroEntry);
    CHECK(v.nullity == 1);
    REQUIRE(v.zero_positions.size() == 1);
    CHECK(v.zero_positions[0] == 1);
    CHECK(v.kernel[0] == 1);
    CHECK(v.kernel[2] == -1);
}

TEST_CASE("four-cycle has nullity two") {
    const auto v = nutgraph::is_nut(nutgraph::circulant({4, {1}}));
    CHECK(v.outcome == NutOutcome::NullityAtLeastTwo);
    CHECK(v.nullity == 2);
    CHECK(v.zero_positions.empty());
}

TEST_CASE("circulant of order 16 with jumps 1..6 is a nut graph") {
    const Graph g = nutgraph::circulant({16, {1, 2, 3, 4, 5, 6}});
    const auto v = nutgraph::is_nut(g);
    REQUIRE(v.is_nut());
    CHECK(nutgraph::vectors_equal(v.kernel, nutgraph::alternating_vector(16)));
}

TEST_CASE("zero positions are collected across components") {
    // triangle plus a disjoint path: nullity 1, kernel supported on the path
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    const auto v = nutgraph::is_nut(g);
    CHECK(v.outcome == NutOutcome::KernelHasZeroEntry);
    CHECK(v.zero_positions == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("empty graph is nonsingular by convention") {
    const auto v = nutgraph::is_nut(Graph(0));
    CHECK(v.outcome == NutOutcome::Nonsingular);
}

TEST_CASE("a nut verdict implies connectivity") {
    // the definition never admits a disconnected graph: nullity 1 with full
    // support would need both components singular, giving nullity at least 2
    std::mt19937_64 rng(0x090909ULL);
    std::uniform_int_distribution<int> size(2, 8);
    std::bernoulli_distribution edge(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = size(rng);
        const int b = size(rng);
        Graph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = u + 1; v < a; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        for (int u = a; u < a + b; ++u)
            for (int v = u + 1; v < a + b; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        CHECK_FALSE(nutgraph::is_nut(g).is_nut());
    }

    const Graph nut = nutgraph::circulant({16, {1, 2, 3, 4, 5, 6}});
    REQUIRE(nutgraph::is_nut(nut).is_nut());
    CHECK(nutgraph::is_connected(nut));
}

TEST_CASE("verify_stated_kernel absorbs scale and sign") {
    const Graph g = nutgraph::circulant({16, {1, 2, 3, 4, 5, 6}});
    const IntVector c = nutgraph::alternating_vector(16);
    CHECK(nutgraph::verify_stated_kernel(g, c));

    IntVector scaled = c;
    for (Eigen::Index i = 0; i < scaled.size(); ++i)
        scaled[i] *= Int(-2);
    CHECK(nutgraph::verify_stated_kernel(g, scaled));

    IntVector altered = c;
    altered[3] = 5;
    CHECK_FALSE(nutgraph::verify_stated_kernel(g, altered));

    IntVector wrong_length(15);
    CHECK_THROWS_AS(nutgraph::verify_stated_kernel(g, wrong_length),
                    std::invalid_argument);
}

TEST_CASE("verify_stated_kernel is false for non-nut graphs") {
    IntVector c(13);
    for (int i = 0; i < 13; ++i)
        c[i] = 1;
    CHECK_FALSE(nutgraph::verify_stated_kernel(complete(13), c));
}

TEST_CASE("vertex-transitive feasibility branches") {
    auto f = nutgraph::vt_feasible(16, 12);
    CHECK(f.feasible);
    CHECK(f.branch == VTBranch::clause1);

    f = nutgraph::vt_feasible(14, 12);
    CHECK_FALSE(f.feasible);
    CHECK(f.branch == VTBranch::none);

    f = nutgraph::vt_feasible(12, 6);
    CHECK(f.feasible);
    CHECK(f.branch == VTBranch::clause2);

    f = nutgraph::vt_feasible(20, 12);
    CHECK(f.feasible);
    CHECK(f.branch == VTBranch::both);
}

TEST_CASE("kernel entries of a regular singular graph sum to zero") {
    const Graph c4 = nutgraph::circulant({4, {1}});
    const auto kd = nutgraph::kernel_basis(nutgraph::adjacency_matrix(c4));
    REQUIRE(kd.nullity == 2);
    for (const auto& vec : kd.basis)
        CHECK(nutgraph::kernel_sum_check(c4, vec));

    const Graph g16 = nutgraph::circulant({16, {1, 2, 3, 4, 5, 6}});
    CHECK(nutgraph::kernel_sum_check(g16, nutgraph::is_nut(g16).kernel));
}

TEST_CASE("kernel_sum_check rejects bad preconditions distinctly") {
    IntVector ones(3);
    ones << 1, 1, 1;
    CHECK_THROWS_AS(nutgraph::kernel_sum_check(complete(3), ones),
                    nutgraph::NotInKernelError);
    CHECK_THROWS_AS(nutgraph::kernel_sum_check(path3(), ones),
                    nutgraph::NotRegularError);
    IntVector zeros3 = IntVector::Zero(3);
    CHECK_THROWS_AS(nutgraph::kernel_sum_check(Graph(3), zeros3),
                    nutgraph::NotRegularError);
}

TEST_CASE("singular regular graphs satisfy the zero-sum property") {
    std::mt19937_64 rng(0x3A3A3AULL);
    std::uniform_int_distribution<int> order(3, 24);
    std::uniform_int_distribution<int> coin(0, 1);
    int singular_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        nutgraph::CirculantSpec spec;
        spec.n = order(rng);
        for (int a = 1; 2 * a <= spec.n; ++a)
            if (coin(rng))
                spec.jumps.push_back(a);
        if (spec.jumps.empty())
            continue;
        const Graph g = nutgraph::circulant(spec);
        const auto kd = nutgraph::kernel_basis(nutgraph::adjacency_matrix(g));
        for (const auto& vec : kd.basis) {
            ++singular_seen;
            CHECK(nutgraph::kernel_sum_check(g, vec));
        }
    }
    CHECK(singular_seen > 0);
}

TEST_CASE("alternating_vector basics") {
    const IntVector v4 = nutgraph::alternating_vector(4);
    CHECK(v4[0] == 1);
    CHECK(v4[1] == -1);
    CHECK(v4[2] == 1);
    CHECK(v4[3] == -1);
    CHECK_THROWS_AS(nutgraph::alternating_vector(7), std::invalid_argument);
    CHECK_THROWS_AS(nutgraph::alternating_vector(0), std::invalid_argument);
}

TEST_CASE("verdict outcomes are mutually exclusive and exhaustive") {
    std::mt19937_64 rng(0xE4C1ULL);
    std::uniform_int_distribution<int> size(1, 11);
    std::bernoulli_distribution edge(0.5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = size(rng);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        const auto v = nutgraph::is_nut(g);
        switch (v.outcome) {
        case NutOutcome::IsNut:
            CHECK(v.nullity == 1);
            CHECK(v.zero_positions.empty());
            break;
        case NutOutcome::Nonsingular:
            CHECK(v.nullity == 0);
            break;
        case NutOutcome::NullityAtLeastTwo:
            CHECK(v.nullity >= 2);
            break;
        case NutOutcome::KernelHasZeroEntry:
            CHECK(v.nullity == 1);
            CHECK_FALSE(v.zero_positions.empty());
            break;
        }
    }
}
