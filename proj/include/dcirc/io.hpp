#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dcirc/bigraph.hpp"
#include "dcirc/matrix.hpp"

namespace dcirc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense: "k l" then k lines of l characters over {0,1}; whitespace inside a line is ignored.
// Sparse: "k l sparse" then lines "i: c1 c2 ..."; rows not listed are all-zero.
BinMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BinMatrix& m, bool sparse = false);

struct GraphInput {
  Graph graph;
  std::optional<Bipartition> split;  // present when the file lists X: and Y:
};

// "X: names", "Y: names", then one edge "u v" per line. Without the X/Y lines
// the file is a plain edge list and the sides are found by 2-colouring.
GraphInput parse_graph(std::string_view text);
std::string format_bigraph(const Bigraph& g);

// A matrix file is read as its bigraph, anything else as a graph file.
Bigraph parse_bigraph(std::string_view text);
bool looks_like_matrix(std::string_view text);

}  // namespace dcirc
