#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "dcirc/catalog.hpp"
#include "dcirc/cons_circ.hpp"
#include "dcirc/matrix.hpp"

namespace dcirc {

using Rational = boost::rational<long long>;

// Simple undirected graph; vertices are 0-based, adj lists sorted.
struct Graph {
  std::vector<std::string> names;
  std::vector<std::vector<int>> adj;

  int n() const { return static_cast<int>(names.size()); }
  bool has_edge(int u, int v) const;
  std::size_t n_edges() const;
};

// Throws std::invalid_argument on loops, unknown endpoints or repeated names.
Graph make_graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);
// Vertices named in order of first appearance.
Graph graph_from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

struct Bipartition {
  std::vector<int> x;  // ascending vertex indices
  std::vector<int> y;
};

struct OddCycleError : std::invalid_argument {
  std::vector<int> cycle;  // vertex indices around an odd cycle
  explicit OddCycleError(std::vector<int> c);
};

// BFS 2-coloring; the lowest vertex of every component goes to x.
Bipartition bipartition(const Graph& g);

struct Bigraph {
  std::vector<std::string> side_x;
  std::vector<std::string> side_y;
  std::vector<Row> adj;  // adj[i]: 1-based side_y indices adjacent to side_x[i]
  bool operator==(const Bigraph& o) const = default;
};

// Throws std::invalid_argument if b is not a bipartition of g.
Bigraph to_bigraph(const Graph& g, const Bipartition& b);
Bigraph to_bigraph(const Graph& g);
// side_x first, then side_y.
Graph as_graph(const Bigraph& g);
// Rows named r1.., columns c1...
Bigraph bigraph_of(const BinMatrix& m);
BinMatrix biadjacency(const Bigraph& g);

// Closed clockwise arc from start to end; start == end is a point.
struct Arc {
  Rational start;
  Rational end;
  bool operator==(const Arc& o) const = default;
};

struct Bimodel {
  std::vector<Arc> family1;  // side_x
  std::vector<Arc> family2;  // side_y
  Rational circumference{1};
};

struct Interval {
  Rational lo;
  Rational hi;
  bool operator==(const Interval& o) const = default;
};

struct IntervalBimodel {
  std::vector<Interval> family1;
  std::vector<Interval> family2;
};

Rational arc_length(const Arc& a, const Rational& c);
bool arc_has_point(const Arc& a, const Rational& x, const Rational& c);
bool arcs_intersect(const Arc& a, const Arc& b, const Rational& c);
bool arc_within(const Arc& inner, const Arc& outer, const Rational& c);

// Forbidden induced subgraph: the bipartite graph of generate(id), rows on side_x.
struct SubgraphCertificate {
  CatalogId id;
  std::string name;
  Embedding emb;                        // rows -> side_x, columns -> side_y, 1-based
  std::vector<std::string> vertex_map;  // images of the rows, then of the columns
};

std::string forbidden_graph_name(const CatalogId& id);
Graph forbidden_graph(const CatalogId& id);
SubgraphCertificate subgraph_certificate(const Bigraph& g, const NegCertificate& c);

// m without trivial rows, ord a D-circular order of m. Throws std::logic_error if
// two nested arcs share no endpoint or the result fails verify_bimodel.
Bimodel build_bimodel(const BinMatrix& m, const ColumnOrder& ord);
// ord a D-interval order of m; all-zero rows become points past the last column.
IntervalBimodel build_interval_bimodel(const BinMatrix& m, const ColumnOrder& ord);

using PcabResult = std::variant<Bimodel, SubgraphCertificate>;
using PibResult = std::variant<IntervalBimodel, SubgraphCertificate>;

PcabResult recognize_pcab(const Bigraph& g);
PcabResult recognize_pcab(const Graph& g);
PibResult recognize_pib(const Bigraph& g);
PibResult recognize_pib(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
// iso[v] is the image in b of vertex v of a. Degree refinement, then backtracking.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace dcirc
