// Acceptance suite: every release-gating claim in one binary, one line of
// output per criterion.  Each criterion pins its own tolerance (exact
// integer equality throughout) and wall-clock limit; a criterion fails on
// a wrong result or an overrun.  Criterion 11 is a report on open
// territory, so misses are findings to log, never failures.

#include <nutgraph/catalog.hpp>
#include <nutgraph/construct.hpp>
#include <nutgraph/cyclotomic.hpp>
#include <nutgraph/generate.hpp>
#include <nutgraph/graph.hpp>
#include <nutgraph/kernel.hpp>
#include <nutgraph/nutcheck.hpp>
#include <nutgraph/search.hpp>

#include "oracle_rational.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace {

using nutgraph::CirculantSpec;
using nutgraph::Graph;
using nutgraph::Int;
using nutgraph::IntVector;

constexpr double kLimitAppendix = 10.0;          // criterion 1
constexpr double kLimitSmallOrders = 10.0;       // criterion 2
constexpr double kLimitClassifier = 60.0;        // criterion 3
constexpr double kLimitCatalogList1 = 10.0;      // criterion 4
constexpr double kLimitCatalogList2 = 10.0;      // criterion 5
constexpr double kLimitWitnesses = 10.0;         // criterion 6
constexpr double kLimitDegree2Mod4 = 300.0;      // criterion 7
constexpr double kLimitKernelInvariants = 60.0;  // criterion 8
constexpr double kLimitInduction = 60.0;         // criterion 9
constexpr double kLimitRewired21 = 10.0;         // criterion 10
constexpr double kLimitSweep = 1800.0;           // criterion 11
constexpr double kLimitOracle = 60.0;            // criterion 12

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void run(int id, const char* label, double limit, bool report_only,
         const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::string verdict;
    if (report_only) {
        verdict = "REPORT";
        if (!outcome.ok)
            ++failures;  // only an exception can fail a report
    } else if (outcome.ok && elapsed <= limit) {
        verdict = "PASS";
    } else {
        verdict = "FAIL";
        ++failures;
        if (outcome.ok)
            outcome.detail += (outcome.detail.empty() ? "" : "; ") +
                              std::string("time limit exceeded");
    }
    std::printf("%2d %-6s %s: %s (%.1fs, limit %.0fs)\n", id, verdict.c_str(),
                label, outcome.detail.c_str(), elapsed, limit);
    std::fflush(stdout);
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph k14_minus_matching() {
    Graph g = complete_graph(14);
    for (int i = 0; i < 14; i += 2)
        g.remove_edge(i, i + 1);
    return g;
}

std::vector<int> dense_jumps(int t) {
    std::vector<int> jumps(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i)
        jumps[static_cast<size_t>(i)] = i + 1;
    return jumps;
}

}  // namespace

int main() {
    // Circulants confirmed as nuts by criteria 3, 5 and 7; criterion 8
    // replays the kernel invariants over all of them.
    std::vector<CirculantSpec> confirmed_nuts;

    run(1, "appendix reproduction", kLimitAppendix, false, [] {
        const auto checks = nutgraph::verify_appendix();
        int passed = 0;
        for (const auto& check : checks)
            if (check.pass())
                ++passed;
        Outcome out;
        out.ok = checks.size() == 12 && passed == 12;
        out.detail = std::to_string(passed) + "/12 fixtures verified exactly";
        return out;
    });

    run(2, "orders 13-15 negative", kLimitSmallOrders, false, [] {
        Outcome out;
        const auto k13 = nutgraph::is_nut(complete_graph(13));
        const bool k13_ok =
            k13.outcome == nutgraph::NutOutcome::Nonsingular;
        const bool k14_ok = !nutgraph::is_nut(k14_minus_matching()).is_nut();
        const auto candidates = nutgraph::enumerate_order15();
        int not_nut = 0;
        for (const auto& g : candidates)
            if (!nutgraph::is_nut(g).is_nut())
                ++not_nut;
        const bool k15_ok =
            candidates.size() == 17 && not_nut == 17;
        out.ok = k13_ok && k14_ok && k15_ok;
        out.detail = "K13 nonsingular=" + std::string(k13_ok ? "yes" : "NO") +
                     ", K14-matching nut=no, order-15 candidates=" +
                     std::to_string(candidates.size()) + " all non-nut=" +
                     std::to_string(not_nut);
        return out;
    });

    run(3, "parity classifier vs kernel", kLimitClassifier, false, [&] {
        int compared = 0;
        int mismatches = 0;
        for (int d : {4, 8, 12}) {
            for (int n = d + 2; n <= 48; n += 2) {
                const auto jumps = dense_jumps(d / 2);
                const bool predicted = nutgraph::classify_consecutive_circulant(n, d).is_nut;
                const bool actual =
                    nutgraph::is_nut(nutgraph::circulant({n, jumps})).is_nut();
                ++compared;
                if (predicted != actual)
                    ++mismatches;
                else if (actual)
                    confirmed_nuts.push_back({n, jumps});
            }
        }
        Outcome out;
        out.ok = mismatches == 0;
        out.detail = std::to_string(compared) + " (n,d) pairs compared, " +
                     std::to_string(mismatches) + " mismatches";
        return out;
    });

    run(4, "catalog list 1", kLimitCatalogList1, false, [] {
        std::set<int> found;
        for (int n = 16; n <= 38; n += 2)
            if (nutgraph::classify_consecutive_circulant(n, 12).is_nut)
                found.insert(n);
        const std::set<int> expected{16, 20, 22, 26, 32, 34, 38};
        Outcome out;
        out.ok = found == expected;
        out.detail = "degree-12 consecutive-jump orders in [16,38]: {";
        bool first = true;
        for (int n : found) {
            if (!first)
                out.detail += ",";
            out.detail += std::to_string(n);
            first = false;
        }
        out.detail += "}";
        return out;
    });

    run(5, "catalog list 2", kLimitCatalogList2, false, [&] {
        const std::vector<CirculantSpec> specs{
            {18, {1, 2, 3, 4, 5, 8}},  {24, {1, 2, 3, 4, 5, 8}},
            {28, {1, 2, 3, 4, 5, 10}}, {30, {1, 2, 3, 4, 5, 8}},
            {36, {1, 2, 3, 4, 5, 8}}};
        int nuts = 0;
        for (const auto& spec : specs)
            if (nutgraph::is_nut(nutgraph::circulant(spec)).is_nut()) {
                ++nuts;
                confirmed_nuts.push_back(spec);
            }
        Outcome out;
        out.ok = nuts == 5;
        out.detail = std::to_string(nuts) + "/5 alternative circulants are nuts";
        return out;
    });

    run(6, "null-space witnesses", kLimitWitnesses, false, [] {
        struct Case {
            IntVector b;
            int n;
            int t;
        };
        const std::vector<Case> cases{
            {nutgraph::null_witness_shift(14, 6), 14, 6},
            {nutgraph::null_witness_shift(28, 6), 28, 6},
            {nutgraph::null_witness_blocks(18, 6, 3), 18, 6},
            {nutgraph::null_witness_blocks(24, 6, 3), 24, 6},
            {nutgraph::null_witness_blocks(12, 4, 2), 12, 4}};
        int good = 0;
        for (const auto& c : cases) {
            const Graph g = nutgraph::circulant({c.n, dense_jumps(c.t)});
            const bool annihilates = nutgraph::is_zero_vector(
                nutgraph::mat_vec_mul(nutgraph::adjacency_matrix(g), c.b));
            bool has_zero = false;
            for (Eigen::Index i = 0; i < c.b.size(); ++i)
                if (c.b[i] == 0)
                    has_zero = true;
            if (annihilates && has_zero)
                ++good;
        }
        Outcome out;
        out.ok = good == 5;
        out.detail = std::to_string(good) +
                     "/5 witnesses annihilate A with a zero entry";
        return out;
    });

    run(7, "degree 2 mod 4 exclusion", kLimitDegree2Mod4, false, [&] {
        // Elimination method on purpose: this sweep must not lean on the
        // spectral shortcut it corroborates.
        long long examined = 0;
        long long hits = 0;
        const nutgraph::ScanOptions options{1,
                                            nutgraph::ScanMethod::elimination};
        const auto sweep = [&](int n, int d) {
            const auto result = nutgraph::scan_circulants(n, d, options);
            examined += result.examined;
            hits += static_cast<long long>(result.hits.size());
            for (const auto& spec : result.hits)
                confirmed_nuts.push_back(spec);
        };
        for (int n = 8; n <= 28; n += 2)
            sweep(n, 6);
        for (int n = 12; n <= 24; n += 2)
            sweep(n, 10);
        Outcome out;
        out.ok = hits == 0;
        out.detail = std::to_string(examined) +
                     " degree-6/10 circulants scanned, " +
                     std::to_string(hits) + " nuts";
        return out;
    });

    run(8, "kernel invariant suite", kLimitKernelInvariants, false, [&] {
        int violations = 0;
        for (const auto& spec : confirmed_nuts) {
            const Graph g = nutgraph::circulant(spec);
            const auto verdict = nutgraph::is_nut(g);
            const int degree = nutgraph::circulant_degree(spec);
            const bool alternating = nutgraph::vectors_equal(
                verdict.kernel, nutgraph::alternating_vector(spec.n));
            const bool zero_sum = nutgraph::kernel_sum_check(g, verdict.kernel);
            const bool even_order = spec.n % 2 == 0;
            const bool feasible =
                nutgraph::vt_feasible(spec.n, degree).feasible;
            if (!(verdict.is_nut() && alternating && zero_sum && even_order &&
                  feasible))
                ++violations;
        }
        Outcome out;
        out.ok = violations == 0 && !confirmed_nuts.empty();
        out.detail = std::to_string(confirmed_nuts.size()) +
                     " confirmed nuts checked, " + std::to_string(violations) +
                     " invariant violations";
        return out;
    });

    run(9, "vertex extension induction", kLimitInduction, false, [] {
        const Graph base = nutgraph::circulant({16, {1, 2, 3, 4, 5, 6}});
        const auto extended = nutgraph::fowler_extend(base, 0);
        const auto profile = nutgraph::degree_profile(extended.graph);
        const auto verdict = nutgraph::is_nut(extended.graph);
        const bool graph_ok = extended.graph.order() == 40 &&
                              profile.is_regular && profile.degree == 12 &&
                              verdict.is_nut();
        const bool kernel_ok = nutgraph::vectors_equal(
            nutgraph::normalize_primitive(extended.predicted_kernel),
            verdict.kernel);
        const auto rows = nutgraph::survey(12, 40, 63);
        int exists = 0;
        for (const auto& row : rows)
            if (row.exists)
                ++exists;
        Outcome out;
        out.ok = graph_ok && kernel_ok && exists == 24;
        out.detail = "order-40 extension nut=" +
                     std::string(graph_ok ? "yes" : "NO") +
                     ", predicted kernel proportional=" +
                     std::string(kernel_ok ? "yes" : "NO") + ", survey EXISTS " +
                     std::to_string(exists) + "/24 on [40,63]";
        return out;
    });

    run(10, "published rewiring", kLimitRewired21, false, [] {
        const Graph g = nutgraph::published_rewired_21();
        const auto verdict = nutgraph::is_nut(g);
        const auto fixtures = nutgraph::load_appendix();
        const auto& order21 = fixtures[2];
        bool entries_ok = verdict.is_nut();
        if (entries_ok)
            for (Eigen::Index i = 0; i < verdict.kernel.size(); ++i)
                if (verdict.kernel[i] != 1 && verdict.kernel[i] != -2)
                    entries_ok = false;
        const bool kernel_match =
            verdict.is_nut() && order21.order == 21 &&
            nutgraph::vectors_equal(
                verdict.kernel,
                nutgraph::normalize_primitive(order21.stated_kernel));
        Outcome out;
        out.ok = verdict.is_nut() && kernel_match && entries_ok;
        out.detail = std::string("rewired order-21 nut=") +
                     (verdict.is_nut() ? "yes" : "NO") +
                     ", kernel equals published order-21 vector=" +
                     (kernel_match ? "yes" : "NO") + ", entries in {1,-2}=" +
                     (entries_ok ? "yes" : "NO");
        return out;
    });

    run(11, "degree-12 circulant sweep", kLimitSweep, true, [] {
        std::vector<int> misses;
        long long examined = 0;
        int orders = 0;
        for (int n = 16; n <= 60; n += 2) {
            const auto result = nutgraph::scan_circulants(n, 12);
            examined += result.examined;
            ++orders;
            if (result.hits.empty())
                misses.push_back(n);
        }
        Outcome out;
        out.detail = "hits at " + std::to_string(orders - misses.size()) + "/" +
                     std::to_string(orders) + " even orders in [16,60], " +
                     std::to_string(examined) + " candidates";
        if (!misses.empty()) {
            out.detail += "; FINDING: no hit at n=";
            for (size_t i = 0; i < misses.size(); ++i) {
                if (i)
                    out.detail += ",";
                out.detail += std::to_string(misses[i]);
            }
        }
        return out;
    });

    run(12, "rational oracle equivalence", kLimitOracle, false, [] {
        std::mt19937_64 rng(0xACCE97EDULL);
        int disagreements = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 12);
            nutgraph::IntMatrix m(n, n);
            oracle::Mat rational(static_cast<size_t>(n),
                                 std::vector<oracle::Rat>(static_cast<size_t>(n)));
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    const int bit = static_cast<int>(rng() & 1);
                    m(i, j) = bit;
                    m(j, i) = bit;
                    rational[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        bit;
                    rational[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                        bit;
                }
            const auto lib = nutgraph::kernel_basis<Int>(m);
            const auto ref = oracle::nullspace(rational);
            bool same = lib.rank == ref.rank && lib.nullity == ref.nullity;
            if (same && lib.nullity > 0) {
                // Equal span: stacking both bases must not raise the rank
                // above the common nullity.
                oracle::Mat stacked = ref.basis;
                for (const auto& v : lib.basis) {
                    std::vector<oracle::Rat> row(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i)
                        row[static_cast<size_t>(i)] = oracle::Rat(v[i]);
                    stacked.push_back(std::move(row));
                }
                same = oracle::rank_of(stacked) == ref.nullity;
            }
            if (!same)
                ++disagreements;
        }
        Outcome out;
        out.ok = disagreements == 0;
        out.detail = "200 random symmetric 0/1 matrices (order <= 12), " +
                     std::to_string(disagreements) + " disagreements";
        return out;
    });

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
