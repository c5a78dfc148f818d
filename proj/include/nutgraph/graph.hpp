#pragma once

#include <nutgraph/numeric.hpp>

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nutgraph {

/// Simple undirected graph on vertex set {0,…,n−1}.  Adjacency is kept as one
/// dense bit row per vertex, so edge tests and neighborhood scans are cheap
/// at the orders this library works with.  Self-loops are rejected; the
/// relation is kept symmetric by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return static_cast<int>(rows_.size()); }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const;
    long edge_count() const;
    const boost::dynamic_bitset<>& neighbors(int v) const;

    /// All edges as pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return rows_ == other.rows_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const;

    std::vector<boost::dynamic_bitset<>> rows_;
};

struct DegreeProfile {
    bool is_regular = false;
    std::optional<int> degree;
    bool is_connected = false;
};

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

/// Symmetric 0/1 matrix with zero diagonal.
IntMatrix adjacency_matrix(const Graph& g);

/// Two-switch move: remove edges u1v1 and u2v2, add u1v2 and u2v1.
struct RewireMove {
    std::pair<int, int> e1;
    std::pair<int, int> e2;
};

/// A two-switch move that violates its preconditions.  `pair` holds the
/// vertex pair that failed: a repeated vertex, a missing edge, or a pair
/// that is already an edge.
class RewireError : public std::invalid_argument {
public:
    RewireError(const std::string& what, std::pair<int, int> failing)
        : std::invalid_argument(what), pair(failing) {}

    std::pair<int, int> pair;
};

/// Degree-preserving edge exchange.  Requires the four vertices pairwise
/// distinct, both removed pairs present, both added pairs absent.
Graph rewire(const Graph& g, const RewireMove& m);

}  // namespace nutgraph
