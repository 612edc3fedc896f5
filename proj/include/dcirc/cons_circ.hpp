#pragma once

#include <optional>
#include <string>

#include "dcirc/catalog.hpp"
#include "dcirc/matrix.hpp"

namespace dcirc {

// Either an order or the least i such that rows 1..i lack the property.
struct PrefixResult {
  std::optional<ColumnOrder> order;
  int fail_index = 0;
  bool ok() const { return order.has_value(); }
};

// Catalog matrix embedded in a host: submatrix(host, emb) == generate(id).
struct NegCertificate {
  CatalogId id;
  Embedding emb;
  std::string note;
};

PrefixResult consecutive_ones(const BinMatrix& m);
PrefixResult circular_ones(const BinMatrix& m);
bool has_consecutive_ones(const BinMatrix& m);
bool has_circular_ones(const BinMatrix& m);

// Column with the fewest ones, lowest index on ties (0 when there are no columns).
int cut_column(const BinMatrix& m);

// ForbRow member contained in m. Throws std::invalid_argument if m has circular-ones.
NegCertificate circular_ones_certificate(const BinMatrix& m);

// True if submatrix(host, c.emb) == generate(c.id).
bool certificate_holds(const BinMatrix& host, const NegCertificate& c);

}  // namespace dcirc
