#include <nutgraph/generate.hpp>

#include <numeric>
#include <string>

namespace nutgraph {

void validate(const CirculantSpec& spec) {
    if (spec.n < 3)
        throw SpecError("circulant: order " + std::to_string(spec.n) +
                        " is below 3");
    if (spec.jumps.empty())
        throw SpecError("circulant: empty jump set");
    int prev = 0;
    for (int a : spec.jumps) {
        if (a <= prev)
            throw SpecError("circulant: jumps not strictly increasing at " +
                            std::to_string(a));
        if (2 * a > spec.n)
            throw SpecError("circulant: jump " + std::to_string(a) +
                            " exceeds n/2 for n = " + std::to_string(spec.n));
        prev = a;
    }
}

Graph circulant(const CirculantSpec& spec) {
    validate(spec);
    Graph g(spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int a : spec.jumps)
            g.add_edge(i, (i + a) % spec.n);
    return g;
}

int circulant_degree(const CirculantSpec& spec) {
    validate(spec);
    const int t = static_cast<int>(spec.jumps.size());
    return 2 * spec.jumps.back() == spec.n ? 2 * t - 1 : 2 * t;
}

Graph cycles_complement(int n, const std::vector<int>& parts) {
    if (parts.empty())
        throw PartitionError("cycles_complement: empty partition");
    for (int p : parts)
        if (p < 3)
            throw PartitionError("cycles_complement: part " +
                                 std::to_string(p) + " is below 3");
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    if (total != n)
        throw PartitionError("cycles_complement: parts sum to " +
                             std::to_string(total) + ", expected " +
                             std::to_string(n));

    Graph two_factor(n);
    int base = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i)
            two_factor.add_edge(base + i, base + (i + 1) % p);
        base += p;
    }

    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!two_factor.has_edge(u, v))
                g.add_edge(u, v);
    return g;
}

}  // namespace nutgraph
