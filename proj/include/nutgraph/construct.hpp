#pragma once

#include <nutgraph/generate.hpp>
#include <nutgraph/graph.hpp>
#include <nutgraph/numeric.hpp>

#include <stdexcept>
#include <vector>

namespace nutgraph {

/// Result of the degree-preserving vertex expansion.  The graph gains 2d
/// vertices (d = degree of the expanded vertex): first the d x-vertices,
/// then the d y-vertices, indices appended after the original range in
/// `new_vertices`.  When the input adjacency has a one-dimensional kernel
/// with generator c, `predicted_kernel` carries the extension of c that the
/// construction preserves (empty otherwise).
struct FowlerResult {
    Graph graph;
    std::vector<int> new_vertices;
    IntVector predicted_kernel;
};

class UnsupportedVertexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Expands vertex u of degree d ≥ 2 into a gadget that adds 2d vertices and
/// keeps every original degree: the edges u–v_i are replaced by u–x_i,
/// x_i–y_j for i ≠ j, and y_i–v_i, where v_1 < … < v_d are the neighbors
/// of u.  A kernel vector c of the input extends by x_i ↦ c(v_i),
/// y_i ↦ c(u), and u ↦ −(d−1)·c(u); the extension is annihilated by the
/// new adjacency whenever A·c = 0.
FowlerResult fowler_extend(const Graph& g, int u);

/// Classification of C(n, {1,…,d/2}) for d ≡ 0 (mod 4), n even, n > d: a
/// nut graph exactly when gcd(d/2+1, n) = 1 and gcd(d/4, n/2) = 1.  When
/// not a nut, the failing condition(s) are recorded; `k` is the common
/// divisor witnessing the block condition.
struct ConsecutiveCirculantCase {
    int n = 0;
    int d = 0;
    int t = 0;
    bool is_nut = false;
    bool shift_divisor = false;
    bool block_divisor = false;
    int k = 0;
};

ConsecutiveCirculantCase classify_consecutive_circulant(int n, int d);

/// Kernel vector of C(n, {1,…,t}) with zero entries, defined when
/// gcd(t+1, n) > 1 (t even, n even): entries (−1)^j at positions
/// j·(t+1) mod n for j = 0,…,k−1, where k = n / gcd(t+1, n), zeros
/// elsewhere.
IntVector null_witness_shift(int n, int t);

/// Kernel vector of C(n, {1,…,t}) with zero entries, defined for k > 1
/// dividing both t/2 and n/2: even positions repeat the block
/// (1,…,1,−(k−1)) of length k, odd positions stay zero.
IntVector null_witness_blocks(int n, int t, int k);

/// The twelve published 12-regular circulant nut specs: seven consecutive
/// jump sets {1,…,6} and five alternatives with a replacement top jump.
std::vector<CirculantSpec> published_circulant_catalog();

/// The published rewiring of C(21, {1,…,6}): edges (0,16) and (2,7)
/// replaced by (0,7) and (2,16).
Graph published_rewired_21();

}  // namespace nutgraph
