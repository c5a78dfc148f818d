#include <nutgraph/construct.hpp>

#include <nutgraph/kernel.hpp>

#include <numeric>
#include <string>

namespace nutgraph {

FowlerResult fowler_extend(const Graph& g, int u) {
    const int d = g.degree(u);
    if (d < 2)
        throw UnsupportedVertexError("fowler_extend: vertex " +
                                     std::to_string(u) + " has degree " +
                                     std::to_string(d) + ", need at least 2");

    const int n = g.order();
    std::vector<int> nbrs;
    nbrs.reserve(static_cast<size_t>(d));
    const auto& row = g.neighbors(u);
    for (size_t v = row.find_first(); v != boost::dynamic_bitset<>::npos;
         v = row.find_next(v))
        nbrs.push_back(static_cast<int>(v));

    FowlerResult out;
    out.graph = Graph(n + 2 * d);
    for (const auto& [a, b] : g.edges())
        if (a != u && b != u)
            out.graph.add_edge(a, b);

    const auto x = [n](int i) { return n + i; };
    const auto y = [n, d](int i) { return n + d + i; };
    for (int i = 0; i < d; ++i) {
        out.graph.add_edge(u, x(i));
        out.graph.add_edge(y(i), nbrs[static_cast<size_t>(i)]);
        for (int j = 0; j < d; ++j)
            if (i != j)
                out.graph.add_edge(x(i), y(j));
        out.new_vertices.push_back(x(i));
    }
    for (int i = 0; i < d; ++i)
        out.new_vertices.push_back(y(i));

    const auto kd = kernel_basis(adjacency_matrix(g));
    if (kd.nullity == 1) {
        const IntVector& c = kd.basis[0];
        IntVector pred = IntVector::Zero(n + 2 * d);
        for (int v = 0; v < n; ++v)
            pred[v] = c[v];
        pred[u] = Int(-(d - 1)) * c[u];
        for (int i = 0; i < d; ++i) {
            pred[x(i)] = c[nbrs[static_cast<size_t>(i)]];
            pred[y(i)] = c[u];
        }
        out.predicted_kernel = pred;
    }
    return out;
}

ConsecutiveCirculantCase classify_consecutive_circulant(int n, int d) {
    if (d < 4 || d % 4 != 0)
        throw SpecError("classify_consecutive_circulant: degree " + std::to_string(d) +
                        " is not a positive multiple of 4");
    if (n % 2 != 0 || n <= d)
        throw SpecError("classify_consecutive_circulant: order " + std::to_string(n) +
                        " must be even and exceed the degree");

    ConsecutiveCirculantCase out;
    out.n = n;
    out.d = d;
    out.t = d / 2;
    out.shift_divisor = std::gcd(out.t + 1, n) > 1;
    const int block_gcd = std::gcd(out.t / 2, n / 2);
    out.block_divisor = block_gcd > 1;
    if (out.block_divisor)
        out.k = block_gcd;
    out.is_nut = !out.shift_divisor && !out.block_divisor;
    return out;
}

IntVector null_witness_shift(int n, int t) {
    if (t < 2 || t % 2 != 0 || n % 2 != 0 || n <= 2 * t)
        throw SpecError("null_witness_shift: need even t >= 2 and even n > 2t");
    const int g = std::gcd(t + 1, n);
    if (g == 1)
        throw SpecError("null_witness_shift: " + std::to_string(t + 1) +
                        " is coprime to " + std::to_string(n) +
                        ", no witness exists");
    const int k = n / g;
    IntVector b = IntVector::Zero(n);
    for (int j = 0; j < k; ++j)
        b[(static_cast<long>(j) * (t + 1)) % n] = (j % 2 == 0) ? 1 : -1;
    return b;
}

IntVector null_witness_blocks(int n, int t, int k) {
    if (t < 2 || t % 2 != 0 || n % 2 != 0 || n <= 2 * t)
        throw SpecError(
            "null_witness_blocks: need even t >= 2 and even n > 2t");
    if (k <= 1 || (t / 2) % k != 0 || (n / 2) % k != 0)
        throw SpecError("null_witness_blocks: k = " + std::to_string(k) +
                        " must exceed 1 and divide both t/2 and n/2");
    IntVector b = IntVector::Zero(n);
    const int repeats = n / (2 * k);
    for (int m = 0; m < repeats; ++m)
        for (int r = 0; r < k; ++r)
            b[2 * (m * k + r)] = (r < k - 1) ? Int(1) : Int(-(k - 1));
    return b;
}

std::vector<CirculantSpec> published_circulant_catalog() {
    std::vector<CirculantSpec> out;
    for (int n : {16, 20, 22, 26, 32, 34, 38})
        out.push_back({n, {1, 2, 3, 4, 5, 6}});
    out.push_back({18, {1, 2, 3, 4, 5, 8}});
    out.push_back({24, {1, 2, 3, 4, 5, 8}});
    out.push_back({28, {1, 2, 3, 4, 5, 10}});
    out.push_back({30, {1, 2, 3, 4, 5, 8}});
    out.push_back({36, {1, 2, 3, 4, 5, 8}});
    return out;
}

Graph published_rewired_21() {
    const Graph base = circulant({21, {1, 2, 3, 4, 5, 6}});
    return rewire(base, {{0, 16}, {2, 7}});
}

}  // namespace nutgraph
