#pragma once

#include <optional>
#include <vector>

#include "dcirc/cons_circ.hpp"
#include "dcirc/matrix.hpp"

namespace dcirc {

// row_order[p] is the row at position p+1; col_order as everywhere else.
struct Biorder {
  std::vector<int> row_order;
  ColumnOrder col_order;
  bool operator==(const Biorder& o) const = default;
};

struct DIntResult {
  std::optional<ColumnOrder> order;
  std::optional<NegCertificate> cert;  // id in F_DIntR^inf
  bool ok() const { return order.has_value(); }
};

struct BiorderResult {
  std::optional<Biorder> biorder;
  std::optional<NegCertificate> cert;
  // Column-order rotation needed to satisfy the alignment condition (0 when none).
  int rotation = 0;
  bool ok() const { return biorder.has_value(); }
};

using CCOResult = BiorderResult;

DIntResult d_interval(const BinMatrix& m);
// Linearly compatible ones biorder, or the D-interval certificate.
BiorderResult lco(const BinMatrix& m);

// m has no trivial rows, ord is a D-circular order of m. Throws std::logic_error
// if no rotation of ord yields a biorder passing the monotone-circular check.
Biorder monotone_circular_biorder(const BinMatrix& m, const ColumnOrder& ord, int* rotation = nullptr);

// Circularly compatible ones biorder, or a certificate with id in F_CCO^inf.
CCOResult cco(const BinMatrix& m);

// nullopt when m and its transpose are D-circular; otherwise a certificate in m's
// frame (a member of F_DCircR^inf or the transpose of one).
std::optional<NegCertificate> doubly_d_circular(const BinMatrix& m);

// Catalog name of the transposed matrix ("Z6" <-> "Z6T").
CatalogId transpose_id(const CatalogId& id);

}  // namespace dcirc
