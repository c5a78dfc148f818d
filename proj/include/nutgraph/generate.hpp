#pragma once

#include <nutgraph/graph.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace nutgraph {

/// Connection set of a circulant graph on n vertices: jumps a_1 < … < a_t
/// with 1 ≤ a_i ≤ n/2.  Vertices i and j are adjacent iff the circular
/// difference (i−j) mod n equals some a_k or n−a_k.
struct CirculantSpec {
    int n = 0;
    std::vector<int> jumps;
};

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws SpecError unless n ≥ 3 and the jumps are strictly increasing
/// within [1, n/2].
void validate(const CirculantSpec& spec);

/// The circulant graph C(n, {a_1,…,a_t}).  Regular of degree 2t−1 when
/// a_t = n/2 (that jump contributes a single neighbor), else 2t.
Graph circulant(const CirculantSpec& spec);

int circulant_degree(const CirculantSpec& spec);

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Complement of a disjoint union of cycles with the given lengths, i.e. the
/// graph left after removing a 2-factor of cycle type `parts` from K_n.
/// Every part must be at least 3 and the parts must sum to n; the result is
/// (n−3)-regular.
Graph cycles_complement(int n, const std::vector<int>& parts);

}  // namespace nutgraph
