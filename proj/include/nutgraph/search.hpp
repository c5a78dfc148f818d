#pragma once

#include <nutgraph/generate.hpp>
#include <nutgraph/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nutgraph {

/// How a circulant scan decides each candidate.  `spectral` factors the
/// symbol polynomial against the cyclotomic table (orders up to 104);
/// `elimination` builds the graph and runs the dense kernel computation.
/// Both give identical verdicts; `automatic` picks spectral whenever the
/// order allows it.
enum class ScanMethod { automatic, spectral, elimination };

struct ScanOptions {
    int jobs = 1;
    ScanMethod method = ScanMethod::automatic;
};

/// Outcome of an exhaustive circulant scan at one (order, degree) pair.
/// `hits` are exactly the connection sets whose circulant is a nut graph,
/// in lexicographic order; `examined` counts every candidate connection
/// set of that degree.
struct ScanResult {
    int n = 0;
    int d = 0;
    std::vector<CirculantSpec> hits;
    long long examined = 0;
    std::chrono::duration<double> elapsed{0};
};

/// Scans every connection set on n vertices yielding degree exactly d:
/// all (d/2)-subsets of the jumps below n/2 for even d, and for odd d the
/// sets containing the diameter jump n/2 (so odd d on odd n has nothing
/// to scan).  The result is independent of `jobs`.
ScanResult scan_circulants(int n, int d, const ScanOptions& options = {});

/// Randomized rewiring search control.  `budget` caps proposed moves per
/// restart, so at most budget × restarts proposals happen overall; `seed`
/// makes the whole run reproducible.
struct SearchConfig {
    long long budget = 1000;
    int restarts = 1;
    std::uint64_t seed = 0;
};

struct RewiringResult {
    std::optional<Graph> graph;
    long long proposals = 0;
    int restarts_used = 0;

    bool found() const { return graph.has_value(); }
};

/// Hill search over rewiring moves from a regular seed graph.  Candidates
/// are scored by (|nullity − 1|, number of zero kernel entries at nullity
/// one) and a move is accepted when it does not worsen that score; the
/// score reaches (0, 0) exactly at a nut graph.  Each restart begins from
/// the seed with a seed-derived generator, so identical configs give
/// identical runs.  Throws NotRegularError when the seed is not regular.
RewiringResult rewiring_search(const Graph& seed, const SearchConfig& config);

/// The 12-regular graphs of order 15: complements of the 2-factors of
/// K15, one per partition of 15 into parts of size at least 3.  Exactly
/// 17 graphs, in decreasing lexicographic partition order.
std::vector<Graph> enumerate_order15();

/// One order in an existence survey: either a verified witness graph or a
/// note explaining why none exists.
struct SurveyRow {
    int n = 0;
    bool exists = false;
    std::optional<Graph> witness;
    std::string note;
};

/// Existence of 12-regular nut graphs for every order in [from, to] ⊆
/// [13, 64].  Witnesses come from the published fixtures (odd orders 17
/// to 39), the cataloged circulants (even orders 16 to 38), and vertex
/// extension of the order n−24 witness beyond that; each is re-verified
/// before being reported, and a verification failure is a logic error.
/// Only d = 12 is supported.
std::vector<SurveyRow> survey(int d, int from, int to);

}  // namespace nutgraph
