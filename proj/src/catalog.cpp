#include <nutgraph/catalog.hpp>

#include <nutgraph/format.hpp>
#include <nutgraph/nutcheck.hpp>

#include "catalog_data.hpp"

#include <cctype>
#include <cstddef>
#include <string>

namespace nutgraph {

IntVector parse_kernel_line(const std::string& text) {
    std::vector<Int> values;
    size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    const auto read_entry = [&] {
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        if (pos >= text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("kernel line: expected an integer",
                             static_cast<std::ptrdiff_t>(pos));
        Int value = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        values.push_back(negative ? -value : value);
    };
    skip_ws();
    if (pos >= text.size())
        throw ParseError("kernel line: no entries", 0);
    read_entry();
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != ',')
            throw ParseError("kernel line: expected ','",
                             static_cast<std::ptrdiff_t>(pos));
        ++pos;
        skip_ws();
        read_entry();
        skip_ws();
    }
    IntVector out(static_cast<Eigen::Index>(values.size()));
    for (size_t i = 0; i < values.size(); ++i)
        out[static_cast<Eigen::Index>(i)] = values[i];
    return out;
}

std::vector<CatalogEntry> load_appendix() {
    std::vector<CatalogEntry> out;
    out.reserve(12);
    for (const auto& raw : detail::appendix_raw) {
        CatalogEntry entry;
        entry.order = raw.order;
        try {
            entry.graph = parse_adjacency_dict(raw.dict);
            entry.stated_kernel = parse_kernel_line(raw.kernel);
        } catch (const ParseError& e) {
            throw IntegrityError("appendix fixture of order " +
                                 std::to_string(raw.order) +
                                 " is corrupted: " + e.what());
        }
        if (entry.graph.order() != entry.order)
            throw IntegrityError("appendix fixture of order " +
                                 std::to_string(raw.order) + " parsed to " +
                                 std::to_string(entry.graph.order()) +
                                 " vertices");
        if (entry.stated_kernel.size() != entry.order)
            throw IntegrityError(
                "appendix fixture of order " + std::to_string(raw.order) +
                " has a kernel line of length " +
                std::to_string(entry.stated_kernel.size()));
        out.push_back(std::move(entry));
    }
    return out;
}

AppendixCheck verify_entry(const CatalogEntry& entry) {
    AppendixCheck check;
    check.order = entry.order;
    const auto profile = degree_profile(entry.graph);
    check.regular12 = entry.graph.order() == entry.order &&
                      profile.is_regular && profile.degree == 12;
    const auto verdict = is_nut(entry.graph);
    check.nut = verdict.is_nut();
    check.kernel_match =
        check.nut &&
        vectors_equal(normalize_primitive(entry.stated_kernel),
                      verdict.kernel);
    return check;
}

std::vector<AppendixCheck> verify_appendix() {
    std::vector<AppendixCheck> out;
    for (const auto& entry : load_appendix())
        out.push_back(verify_entry(entry));
    return out;
}

CatalogEntry parse_fixture(const std::string& text) {
    const size_t open = text.find('{');
    const size_t close = text.find('}');
    if (open == std::string::npos || close == std::string::npos ||
        close < open)
        throw ParseError("fixture: no adjacency dictionary found",
                         static_cast<std::ptrdiff_t>(
                             open == std::string::npos ? text.size() : open));
    CatalogEntry entry;
    entry.graph = parse_adjacency_dict(text.substr(open, close - open + 1));
    entry.stated_kernel = parse_kernel_line(text.substr(close + 1));
    entry.order = entry.graph.order();
    if (entry.stated_kernel.size() != entry.order)
        throw ParseError("fixture: kernel length " +
                         std::to_string(entry.stated_kernel.size()) +
                         " does not match graph order " +
                         std::to_string(entry.order));
    return entry;
}

std::string format_fixture(const CatalogEntry& entry) {
    std::string out = "{";
    for (int v = 0; v < entry.graph.order(); ++v) {
        if (v > 0)
            out += ", ";
        out += std::to_string(v) + ": [";
        const auto& row = entry.graph.neighbors(v);
        bool first = true;
        for (size_t u = row.find_first(); u != boost::dynamic_bitset<>::npos;
             u = row.find_next(u)) {
            if (!first)
                out += ", ";
            out += std::to_string(u);
            first = false;
        }
        out += "]";
    }
    out += "}\n";
    for (Eigen::Index i = 0; i < entry.stated_kernel.size(); ++i) {
        if (i > 0)
            out += ",";
        out += entry.stated_kernel[i].str();
    }
    out += "\n";
    return out;
}

}  // namespace nutgraph
