#include <nutgraph/format.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nutgraph {

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw std::invalid_argument(
            "encode_graph6: order above 62 needs the long form");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) {
        acc <<= 6 - nbits;
        out.push_back(static_cast<char>(63 + acc));
    }
    return out;
}

Graph decode_graph6(const std::string& line) {
    if (line.empty())
        throw ParseError("graph6: empty line", 0);
    const unsigned char head = static_cast<unsigned char>(line[0]);
    if (head == 126)
        throw ParseError("graph6: long form (order above 62) not supported",
                         0);
    if (head < 63 || head > 125)
        throw ParseError("graph6: order byte outside '?'..'}'", 0);
    const int n = head - 63;
    const long nbits = static_cast<long>(n) * (n - 1) / 2;
    const size_t expected = 1 + static_cast<size_t>((nbits + 5) / 6);
    if (line.size() < expected)
        throw ParseError("graph6: line ends early, expected " +
                             std::to_string(expected) + " bytes for order " +
                             std::to_string(n),
                         static_cast<std::ptrdiff_t>(line.size()));
    if (line.size() > expected)
        throw ParseError("graph6: trailing bytes after the edge data",
                         static_cast<std::ptrdiff_t>(expected));

    Graph g(n);
    long remaining = nbits;
    int i = 0;
    int j = 1;
    for (size_t k = 1; k < line.size(); ++k) {
        const unsigned char c = static_cast<unsigned char>(line[k]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside the printable range",
                             static_cast<std::ptrdiff_t>(k));
        const int group = c - 63;
        for (int b = 5; b >= 0; --b) {
            const bool set = (group >> b) & 1;
            if (remaining > 0) {
                if (set)
                    g.add_edge(i, j);
                --remaining;
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (set) {
                throw ParseError("graph6: nonzero padding bit",
                                 static_cast<std::ptrdiff_t>(k));
            }
        }
    }
    return g;
}

namespace {

// Minimal scanner for the dictionary and edge-list grammars.  Positions are
// byte offsets into the original text, reported in parse errors.
class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool eat(char c) {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c, const std::string& where) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(where + ": expected '" + std::string(1, c) + "'",
                             static_cast<std::ptrdiff_t>(pos_));
        ++pos_;
    }

    int integer(const std::string& where) {
        skip_ws();
        const size_t start = pos_;
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(where + ": expected an unsigned integer",
                             static_cast<std::ptrdiff_t>(pos_));
        long value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 100000000)
                throw ParseError(where + ": integer too large",
                                 static_cast<std::ptrdiff_t>(start));
            ++pos_;
        }
        return static_cast<int>(value);
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    size_t pos() const { return pos_; }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

Graph parse_adjacency_dict(const std::string& text) {
    static const std::string where = "adjacency dict";
    Cursor cur(text);
    cur.expect('{', where);

    std::map<int, std::vector<int>> lists;
    if (!cur.peek('}')) {
        do {
            const size_t key_pos = cur.pos();
            const int key = cur.integer(where);
            if (lists.count(key))
                throw ParseError(where + ": duplicate key " +
                                     std::to_string(key),
                                 static_cast<std::ptrdiff_t>(key_pos), key);
            cur.expect(':', where);
            cur.expect('[', where);
            std::vector<int> nbrs;
            if (!cur.peek(']')) {
                do {
                    nbrs.push_back(cur.integer(where));
                } while (cur.eat(','));
            }
            cur.expect(']', where);
            lists.emplace(key, std::move(nbrs));
        } while (cur.eat(','));
    }
    cur.expect('}', where);
    if (!cur.at_end())
        throw ParseError(where + ": trailing characters",
                         static_cast<std::ptrdiff_t>(cur.pos()));

    const int n = static_cast<int>(lists.size());
    for (int v = 0; v < n; ++v)
        if (!lists.count(v))
            throw ParseError(where + ": missing key " + std::to_string(v), -1,
                             v);

    std::vector<boost::dynamic_bitset<>> listed(
        static_cast<size_t>(n), boost::dynamic_bitset<>(static_cast<size_t>(n)));
    for (const auto& [u, nbrs] : lists) {
        for (int v : nbrs) {
            if (v < 0 || v >= n)
                throw ParseError(where + ": vertex " + std::to_string(u) +
                                     " lists neighbor " + std::to_string(v) +
                                     " which has no key",
                                 -1, v);
            if (v == u)
                throw ParseError(where + ": self-loop at vertex " +
                                     std::to_string(u),
                                 -1, u);
            if (listed[static_cast<size_t>(u)].test(static_cast<size_t>(v)))
                throw ParseError(where + ": vertex " + std::to_string(u) +
                                     " lists neighbor " + std::to_string(v) +
                                     " twice",
                                 -1, u);
            listed[static_cast<size_t>(u)].set(static_cast<size_t>(v));
        }
    }

    Graph g(n);
    for (int u = 0; u < n; ++u) {
        const auto& row = listed[static_cast<size_t>(u)];
        for (size_t v = row.find_first(); v != boost::dynamic_bitset<>::npos;
             v = row.find_next(v)) {
            if (!listed[v].test(static_cast<size_t>(u)))
                throw ParseError(where + ": vertex " + std::to_string(v) +
                                     " does not list " + std::to_string(u) +
                                     " back",
                                 -1, static_cast<int>(v));
            g.add_edge(u, static_cast<int>(v));
        }
    }
    return g;
}

std::string format_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.order(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_edge_list(const std::string& text) {
    static const std::string where = "edge list";
    Cursor cur(text);
    const int n = cur.integer(where);
    Graph g(n);
    while (!cur.at_end()) {
        const size_t at = cur.pos();
        const int u = cur.integer(where);
        const int v = cur.integer(where);
        if (u >= n || v >= n)
            throw ParseError(where + ": vertex outside 0.." +
                                 std::to_string(n - 1),
                             static_cast<std::ptrdiff_t>(at),
                             u >= n ? u : v);
        if (u == v)
            throw ParseError(where + ": self-loop at vertex " +
                                 std::to_string(u),
                             static_cast<std::ptrdiff_t>(at), u);
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace nutgraph
