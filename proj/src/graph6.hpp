#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "multigraph.hpp"

namespace hc {

// Parse error with the byte offset of the offending character.
struct parse_error : std::runtime_error {
    int offset;
    parse_error(const std::string& what, int off)
        : std::runtime_error(what + " (byte offset " + std::to_string(off) + ")"), offset(off) {}
};

// Short-form graph6 (n <= 62): header byte 63+n, then the upper-triangle
// adjacency bits in column order (0,1),(0,2),(1,2),(0,3),... packed big-endian
// into 6-bit groups, each offset by 63.  Padding bits must be zero.
MultiGraph parse_graph6(const std::string& line);
std::string write_graph6(const MultiGraph& g);

// Multigraph edge-list dialect: "n; u-v u-v ..." where a repeated pair means
// multiplicity 2.  graph6 cannot carry multiplicities, this can.
MultiGraph parse_multi_edge_list(const std::string& line);
std::string write_multi_edge_list(const MultiGraph& g);

// One graph per line, '#' comments and blank lines skipped; lines containing
// ';' are edge-list records, anything else is graph6.
MultiGraph parse_graph_line(const std::string& line);
std::vector<MultiGraph> read_graph_stream(std::istream& in);

}  // namespace hc
