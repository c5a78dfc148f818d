#pragma once

namespace nutgraph::detail {

struct RawCatalogEntry {
    int order;
    const char* dict;
    const char* kernel;
};

extern const RawCatalogEntry appendix_raw[12];

}  // namespace nutgraph::detail
