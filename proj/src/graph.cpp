#include <nutgraph/graph.hpp>

#include <string>
#include <vector>

namespace nutgraph {

Graph::Graph(int n) {
    if (n < 0)
        throw std::invalid_argument("Graph: negative order");
    rows_.assign(static_cast<size_t>(n),
                 boost::dynamic_bitset<>(static_cast<size_t>(n)));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                " outside 0.." + std::to_string(order() - 1));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[static_cast<size_t>(u)].test(static_cast<size_t>(v));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("Graph: self-loop at vertex " +
                                    std::to_string(u));
    rows_[static_cast<size_t>(u)].set(static_cast<size_t>(v));
    rows_[static_cast<size_t>(v)].set(static_cast<size_t>(u));
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[static_cast<size_t>(u)].reset(static_cast<size_t>(v));
    rows_[static_cast<size_t>(v)].reset(static_cast<size_t>(u));
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(rows_[static_cast<size_t>(v)].count());
}

long Graph::edge_count() const {
    long twice = 0;
    for (const auto& row : rows_)
        twice += static_cast<long>(row.count());
    return twice / 2;
}

const boost::dynamic_bitset<>& Graph::neighbors(int v) const {
    check_vertex(v);
    return rows_[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < order(); ++u) {
        const auto& row = rows_[static_cast<size_t>(u)];
        for (size_t v = row.find_next(static_cast<size_t>(u));
             v != boost::dynamic_bitset<>::npos; v = row.find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    }
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0)
        return true;
    boost::dynamic_bitset<> seen(static_cast<size_t>(n));
    std::vector<int> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        const auto& row = g.neighbors(u);
        for (size_t v = row.find_first(); v != boost::dynamic_bitset<>::npos;
             v = row.find_next(v)) {
            if (!seen.test(v)) {
                seen.set(v);
                stack.push_back(static_cast<int>(v));
            }
        }
    }
    return seen.count() == static_cast<size_t>(n);
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile out;
    out.is_connected = is_connected(g);
    if (g.order() == 0) {
        out.is_regular = true;
        return out;
    }
    const int d = g.degree(0);
    out.is_regular = true;
    for (int v = 1; v < g.order(); ++v) {
        if (g.degree(v) != d) {
            out.is_regular = false;
            break;
        }
    }
    if (out.is_regular)
        out.degree = d;
    return out;
}

IntMatrix adjacency_matrix(const Graph& g) {
    const Eigen::Index n = g.order();
    IntMatrix m = IntMatrix::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        m(u, v) = 1;
        m(v, u) = 1;
    }
    return m;
}

namespace {

std::string pair_text(std::pair<int, int> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) +
           ")";
}

}  // namespace

Graph rewire(const Graph& g, const RewireMove& m) {
    const auto [u1, v1] = m.e1;
    const auto [u2, v2] = m.e2;

    const int vertices[4] = {u1, v1, u2, v2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vertices[i] == vertices[j])
                throw RewireError("rewire: vertex " +
                                      std::to_string(vertices[i]) +
                                      " appears twice in the move",
                                  {vertices[i], vertices[j]});

    if (!g.has_edge(u1, v1))
        throw RewireError("rewire: " + pair_text(m.e1) + " is not an edge",
                          m.e1);
    if (!g.has_edge(u2, v2))
        throw RewireError("rewire: " + pair_text(m.e2) + " is not an edge",
                          m.e2);
    if (g.has_edge(u1, v2))
        throw RewireError("rewire: " + pair_text({u1, v2}) +
                              " is already an edge",
                          {u1, v2});
    if (g.has_edge(u2, v1))
        throw RewireError("rewire: " + pair_text({u2, v1}) +
                              " is already an edge",
                          {u2, v1});

    Graph out = g;
    out.remove_edge(u1, v1);
    out.remove_edge(u2, v2);
    out.add_edge(u1, v2);
    out.add_edge(u2, v1);
    return out;
}

}  // namespace nutgraph
