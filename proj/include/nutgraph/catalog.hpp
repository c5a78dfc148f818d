#pragma once

#include <nutgraph/graph.hpp>
#include <nutgraph/numeric.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace nutgraph {

/// Embedded fixture data failed to parse or disagrees with its stated
/// order.  This is a defect in the build, not in user input, so it is a
/// logic error rather than a runtime one.
class IntegrityError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// One published fixture: a 12-regular nut graph of odd order together with
/// its stated kernel eigenvector.
struct CatalogEntry {
    int order = 0;
    Graph graph;
    IntVector stated_kernel;
};

/// The twelve published fixtures, orders 17, 19, …, 39, parsed from the
/// embedded adjacency dictionaries.  Throws a fatal integrity error if the
/// embedded data fails to parse or disagrees with its stated order.
std::vector<CatalogEntry> load_appendix();

/// Per-fixture verification row: the stated order and 12-regularity, the
/// nut verdict, and exact equality of the computed canonical kernel with
/// the published vector.
struct AppendixCheck {
    int order = 0;
    bool regular12 = false;
    bool nut = false;
    bool kernel_match = false;

    bool pass() const { return regular12 && nut && kernel_match; }
};

AppendixCheck verify_entry(const CatalogEntry& entry);

std::vector<AppendixCheck> verify_appendix();

/// Comma-separated integers, optional whitespace, e.g. "1,-2,1".
IntVector parse_kernel_line(const std::string& text);

/// One fixture kept in a file: the adjacency dictionary followed by a
/// kernel line of comma-separated integers.
CatalogEntry parse_fixture(const std::string& text);

std::string format_fixture(const CatalogEntry& entry);

}  // namespace nutgraph
