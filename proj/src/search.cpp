#include <nutgraph/search.hpp>

#include <nutgraph/catalog.hpp>
#include <nutgraph/construct.hpp>
#include <nutgraph/cyclotomic.hpp>
#include <nutgraph/kernel.hpp>
#include <nutgraph/nutcheck.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace nutgraph {

namespace {

// Visits the t-subsets of {1, …, limit} in lexicographic order.
void for_each_combination(int limit, int t,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (t == 0) {
        visit({});
        return;
    }
    if (t > limit)
        return;
    std::vector<int> combo(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i)
        combo[static_cast<size_t>(i)] = i + 1;
    for (;;) {
        visit(combo);
        int i = t - 1;
        while (i >= 0 && combo[static_cast<size_t>(i)] == limit - (t - 1 - i))
            --i;
        if (i < 0)
            break;
        ++combo[static_cast<size_t>(i)];
        for (int k = i + 1; k < t; ++k)
            combo[static_cast<size_t>(k)] = combo[static_cast<size_t>(k - 1)] + 1;
    }
}

struct ScanPlan {
    int limit = 0;       // free jumps are chosen from {1, …, limit}
    int free_count = 0;  // how many free jumps to choose
    bool add_half = false;
    bool empty = false;  // no candidate has this degree on this order
};

ScanPlan plan_scan(int n, int d) {
    ScanPlan plan;
    if (d % 2 == 0) {
        plan.limit = (n - 1) / 2;  // excludes n/2 on even orders
        plan.free_count = d / 2;
    } else if (n % 2 == 0) {
        plan.limit = n / 2 - 1;
        plan.free_count = (d - 1) / 2;
        plan.add_half = true;
    } else {
        plan.empty = true;  // odd degree needs the diameter jump n/2
    }
    return plan;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

using Score = std::pair<long long, long long>;

Score score_of(const NutVerdict& verdict) {
    const long long distance =
        verdict.nullity >= 1 ? verdict.nullity - 1 : 1 - verdict.nullity;
    if (verdict.nullity == 1)
        return {distance, static_cast<long long>(verdict.zero_positions.size())};
    return {distance, std::numeric_limits<long long>::max()};
}

void partitions_min3(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 3; --part) {
        const int rest = remaining - part;
        if (rest != 0 && rest < 3)
            continue;
        acc.push_back(part);
        partitions_min3(rest, part, acc, out);
        acc.pop_back();
    }
}

std::string circulant_note(const CirculantSpec& spec) {
    std::string note = "circulant(" + std::to_string(spec.n) + ";";
    for (size_t i = 0; i < spec.jumps.size(); ++i) {
        if (i > 0)
            note += ",";
        note += std::to_string(spec.jumps[i]);
    }
    note += ")";
    return note;
}

bool verified_nut12(const Graph& g, int n) {
    const auto profile = degree_profile(g);
    return g.order() == n && profile.is_regular && profile.degree == 12 &&
           is_nut(g).is_nut();
}

}  // namespace

ScanResult scan_circulants(int n, int d, const ScanOptions& options) {
    if (n < 3)
        throw std::invalid_argument("scan_circulants: order must be at least 3");
    if (d < 1 || d >= n)
        throw std::invalid_argument(
            "scan_circulants: degree must satisfy 1 <= d < n");
    if (options.jobs < 1)
        throw std::invalid_argument("scan_circulants: jobs must be positive");

    const auto start = std::chrono::steady_clock::now();
    ScanResult result;
    result.n = n;
    result.d = d;

    const ScanPlan plan = plan_scan(n, d);
    if (!plan.empty) {
        ScanMethod method = options.method;
        if (method == ScanMethod::automatic)
            method = n <= 104 ? ScanMethod::spectral : ScanMethod::elimination;
        // Built before any worker starts so a bad order throws here, and
        // shared read-only across workers afterwards.
        std::optional<CirculantNullity> table;
        if (method == ScanMethod::spectral)
            table.emplace(n);

        const int jobs = options.jobs;
        std::vector<std::vector<std::pair<long long, std::vector<int>>>> found(
            static_cast<size_t>(jobs));
        std::vector<long long> counted(static_cast<size_t>(jobs), 0);

        const auto worker = [&](int w) {
            long long index = -1;
            for_each_combination(plan.limit, plan.free_count,
                                 [&](const std::vector<int>& combo) {
                ++index;
                if (index % jobs != w)
                    return;
                ++counted[static_cast<size_t>(w)];
                std::vector<int> jumps = combo;
                if (plan.add_half)
                    jumps.push_back(n / 2);
                const bool hit =
                    table ? table->is_nut(jumps)
                          : is_nut(circulant({n, jumps})).is_nut();
                if (hit)
                    found[static_cast<size_t>(w)].emplace_back(index,
                                                               std::move(jumps));
            });
        };

        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(jobs));
            for (int w = 0; w < jobs; ++w)
                pool.emplace_back(worker, w);
            for (auto& t : pool)
                t.join();
        }

        std::vector<std::pair<long long, std::vector<int>>> merged;
        for (auto& part : found)
            for (auto& item : part)
                merged.push_back(std::move(item));
        std::sort(merged.begin(), merged.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& item : merged)
            result.hits.push_back({n, std::move(item.second)});
        for (long long c : counted)
            result.examined += c;
    }

    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

RewiringResult rewiring_search(const Graph& seed, const SearchConfig& config) {
    const auto profile = degree_profile(seed);
    if (!profile.is_regular)
        throw NotRegularError("rewiring_search: seed graph is not regular");
    if (config.budget < 1)
        throw std::invalid_argument("rewiring_search: budget must be at least 1");
    if (config.restarts < 1)
        throw std::invalid_argument(
            "rewiring_search: restarts must be at least 1");

    RewiringResult result;
    const long long n = seed.order();
    const bool complete = 2 * static_cast<long long>(seed.edge_count()) ==
                          n * (n - 1);

    for (int restart = 0; restart < config.restarts; ++restart) {
        ++result.restarts_used;
        std::mt19937_64 rng(splitmix64(config.seed +
                                       static_cast<std::uint64_t>(restart)));
        Graph current = seed;
        auto verdict = is_nut(current);
        if (verdict.is_nut()) {
            result.graph = std::move(current);
            return result;
        }
        Score current_score = score_of(verdict);
        auto edges = current.edges();
        if (complete || edges.empty())
            continue;  // a rewire move needs a missing edge and two edges

        for (long long step = 0; step < config.budget; ++step) {
            ++result.proposals;
            const size_t i = rng() % edges.size();
            const size_t j = rng() % edges.size();
            if (i == j)
                continue;
            auto e1 = edges[i];
            auto e2 = edges[j];
            if (rng() & 1)
                std::swap(e1.first, e1.second);
            if (rng() & 1)
                std::swap(e2.first, e2.second);
            Graph candidate;
            try {
                candidate = rewire(current, {e1, e2});
            } catch (const RewireError&) {
                continue;
            }
            if (!is_connected(candidate))
                continue;
            const auto candidate_verdict = is_nut(candidate);
            if (candidate_verdict.is_nut()) {
                result.graph = std::move(candidate);
                return result;
            }
            const Score candidate_score = score_of(candidate_verdict);
            if (candidate_score <= current_score) {
                current = std::move(candidate);
                current_score = candidate_score;
                edges = current.edges();
            }
        }
    }
    return result;
}

std::vector<Graph> enumerate_order15() {
    std::vector<std::vector<int>> partitions;
    std::vector<int> acc;
    partitions_min3(15, 15, acc, partitions);
    std::vector<Graph> out;
    out.reserve(partitions.size());
    for (const auto& parts : partitions)
        out.push_back(cycles_complement(15, parts));
    return out;
}

std::vector<SurveyRow> survey(int d, int from, int to) {
    if (d != 12)
        throw std::invalid_argument("survey: only degree 12 is supported");
    if (from < 13 || to > 64 || from > to)
        throw std::invalid_argument("survey: order range must lie within 13..64");

    std::vector<CatalogEntry> fixtures;
    std::vector<CirculantSpec> circulants;
    std::map<int, std::pair<Graph, std::string>> memo;

    std::function<const std::pair<Graph, std::string>&(int)> witness =
        [&](int n) -> const std::pair<Graph, std::string>& {
        const auto it = memo.find(n);
        if (it != memo.end())
            return it->second;
        Graph g;
        std::string note;
        if (n % 2 == 0 && n <= 38) {
            if (circulants.empty())
                circulants = published_circulant_catalog();
            for (const auto& spec : circulants)
                if (spec.n == n) {
                    g = circulant(spec);
                    note = circulant_note(spec);
                }
        } else if (n % 2 == 1 && n <= 39) {
            if (fixtures.empty())
                fixtures = load_appendix();
            for (const auto& entry : fixtures)
                if (entry.order == n) {
                    g = entry.graph;
                    note = "fixture(" + std::to_string(n) + ")";
                }
        } else {
            const auto& base = witness(n - 24);
            g = fowler_extend(base.first, 0).graph;
            note = "extend(" + std::to_string(n - 24) + ")";
        }
        if (!verified_nut12(g, n))
            throw std::logic_error("survey: witness for order " +
                                   std::to_string(n) + " failed verification");
        return memo.emplace(n, std::make_pair(std::move(g), std::move(note)))
            .first->second;
    };

    std::vector<SurveyRow> rows;
    for (int n = from; n <= to; ++n) {
        SurveyRow row;
        row.n = n;
        if (n >= 16) {
            const auto& w = witness(n);
            row.exists = true;
            row.witness = w.first;
            row.note = w.second;
        } else if (n == 13) {
            // The only 12-regular graph on 13 vertices is K13.
            Graph k13(13);
            for (int u = 0; u < 13; ++u)
                for (int v = u + 1; v < 13; ++v)
                    k13.add_edge(u, v);
            if (is_nut(k13).is_nut())
                throw std::logic_error("survey: K13 verdict changed");
            row.note = "only-candidate-K13-is-nonsingular";
        } else if (n == 14) {
            // The complement of a 12-regular graph on 14 vertices is a
            // perfect matching, so there is a single candidate.
            Graph g(14);
            for (int u = 0; u < 14; ++u)
                for (int v = u + 1; v < 14; ++v)
                    if (!(v == u + 1 && u % 2 == 0))
                        g.add_edge(u, v);
            if (is_nut(g).is_nut())
                throw std::logic_error("survey: order-14 verdict changed");
            row.note = "only-candidate-K14-minus-matching-not-nut";
        } else {
            for (const Graph& g : enumerate_order15())
                if (is_nut(g).is_nut())
                    throw std::logic_error("survey: order-15 verdict changed");
            row.note = "all-17-candidates-fail";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace nutgraph
