#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "dcirc/cons_circ.hpp"
#include "dcirc/matrix.hpp"

namespace dcirc {

// Minimal and maximal rows (1-based) and nested pairs (f, g), f minimal inside maximal g.
// When some maximal row properly contains three minimal rows the scan stops and
// `triple` holds (g, f1, f2, f3); the other fields are then incomplete.
struct ExtremalInfo {
  std::vector<int> minimal;
  std::vector<int> maximal;
  std::vector<std::pair<int, int>> containment_pairs;
  std::optional<std::array<int, 4>> triple;
};

struct DCircResult {
  std::optional<ColumnOrder> order;
  std::optional<NegCertificate> cert;
  bool ok() const { return order.has_value(); }
};

// E_k rows with the insertion step (1-based row of the input) that created each.
struct AnnotatedMatrix {
  BinMatrix m;
  std::vector<int> origin;
};

using PrefixOutcome = std::variant<ColumnOrder, NegCertificate, int>;

// Appends s - r for every pair of nontrivial rows with r properly inside s, pairs sorted by (s, r).
BinMatrix d_operator(const BinMatrix& m);
// Appends g - f for minimal f properly inside maximal g, pairs sorted by (g, f).
BinMatrix delta_operator(const BinMatrix& m);

// Requires every row to be a nontrivial circular interval of ord and rows pairwise distinct.
ExtremalInfo extremal_rows(const BinMatrix& m, const ColumnOrder& ord);
// Z1* or coZ4* from a row g properly containing pairwise incomparable rows f1, f2, f3.
NegCertificate triple_containment_cert(const BinMatrix& m, const ColumnOrder& ord, int g, int f1, int f2, int f3);
// Requires the same preconditions as extremal_rows plus a complete ExtremalInfo.
AnnotatedMatrix e_matrix(const BinMatrix& m, int q, const ExtremalInfo& ext);

// m must be q-sorted and have the circular-ones property.
PrefixOutcome recognize_prefix_d_circular(const BinMatrix& m, int q);
// Rows (i, 1, 2, ..., i-1).
BinMatrix cut_and_antishift(const BinMatrix& m, int i);

DCircResult d_circular(const BinMatrix& m);
bool has_d_circular(const BinMatrix& m);

// Member of F_DCircR^inf inside a ForbRow member embedded in host.
NegCertificate forbrow_to_dcirc_cert(const CatalogId& id, const Embedding& emb, const BinMatrix& host);

}  // namespace dcirc
