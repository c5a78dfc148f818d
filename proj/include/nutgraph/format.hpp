#pragma once

#include <nutgraph/graph.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nutgraph {

/// Malformed textual graph input.  `byte_offset` locates lexical problems
/// (−1 when not applicable); `vertex` names the vertex at fault for
/// semantic problems in adjacency data (−1 when not applicable).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::ptrdiff_t byte_offset = -1,
                        int vertex = -1)
        : std::runtime_error(what), byte_offset(byte_offset), vertex(vertex) {}

    std::ptrdiff_t byte_offset;
    int vertex;
};

/// graph6 line for a graph of order at most 62 (short form): the order as
/// one printable byte, then the upper triangle in column order packed six
/// bits per byte, all offset by 63.
std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6.  Rejects the long form, characters outside the
/// printable graph6 range, wrong line length, and nonzero padding bits,
/// reporting the byte offset of the first offending byte.
Graph decode_graph6(const std::string& line);

/// Adjacency lists written as a Python-style dictionary
/// `{0: [1, 2], 1: [0], …}`.  Whitespace-insensitive.  Every vertex
/// 0..n−1 must appear as a key and every edge must be listed from both
/// endpoints; violations name the offending vertex.
Graph parse_adjacency_dict(const std::string& text);

/// DOT text for visualization: every vertex as a node labeled by its index,
/// every edge once, no layout attributes.
std::string format_dot(const Graph& g);

/// Plain edge list: first line the order, then one "u v" line per edge with
/// u < v, sorted.
std::string format_edge_list(const Graph& g);

Graph parse_edge_list(const std::string& text);

}  // namespace nutgraph
