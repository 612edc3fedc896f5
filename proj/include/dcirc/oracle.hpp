#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "dcirc/bigraph.hpp"
#include "dcirc/compatible.hpp"
#include "dcirc/cons_circ.hpp"
#include "dcirc/matrix.hpp"

namespace dcirc {

enum class Property { consecutive_ones, circular_ones, d_interval, d_circular };

std::string_view to_string(Property p);
std::optional<Property> property_from_string(std::string_view s);

struct OracleVerdict {
  bool holds = false;
  std::optional<std::variant<ColumnOrder, Biorder>> witness;
};

// Thrown when an input exceeds an enumeration guard.
struct SizeGuardError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr int kMaxOracleCols = 9;
constexpr int kMaxCcoRows = 7;
constexpr int kMaxCcoCols = 7;

// Exhaustive search over column orders. Serial reference and OpenMP version
// return the same verdict and the same (first in lexicographic order) witness.
OracleVerdict brute_property(const BinMatrix& m, Property p);
OracleVerdict brute_property_serial(const BinMatrix& m, Property p);
OracleVerdict brute_cco(const BinMatrix& m);

bool verify_order(const BinMatrix& m, const ColumnOrder& ord, Property p);
bool verify_circular_ones_order(const BinMatrix& m, const ColumnOrder& ord);
bool verify_d_circular_order(const BinMatrix& m, const ColumnOrder& ord);
// Rows circular intervals of the column order, columns circular intervals of
// the row order, and the rows (trivial rows as arcs of length 0 or n placed
// freely) read as arcs whose starts and unwrapped ends are non-decreasing after
// some rotation of the row order, with the last end at most one turn past the first.
bool verify_cco_biorder(const BinMatrix& m, const Biorder& b);
// Conditions in their classical wording: trivial rows skipped, start and
// end sequences each with at most one cyclic descent. Weaker than the above.
bool verify_cco_biorder_literal(const BinMatrix& m, const Biorder& b);
// Linear version; full rows take part in the monotone endpoint condition.
bool verify_lco_biorder(const BinMatrix& m, const Biorder& b);
// Linear version with trivial rows skipped.
bool verify_lco_biorder_literal(const BinMatrix& m, const Biorder& b);
// Throws std::invalid_argument if m has a trivial row.
bool verify_monotone_circular_biorder(const BinMatrix& m, const Biorder& b);

// Sequence of positions with at most one cyclic descent.
bool circularly_monotone(const std::vector<int>& seq);
// arcs[i] = (start position or -1 for a free row, length); see verify_cco_biorder.
bool synchronized_arcs(const std::vector<std::pair<int, int>>& arcs, int n);

// Exact intersection graph equals g and neither family has a proper containment.
bool verify_bimodel(const Bigraph& g, const Bimodel& bm);
bool verify_interval_bimodel(const Bigraph& g, const IntervalBimodel& bm);

// False only if the oracle finds that generate(id) has the property the family
// forbids (ForbRow: circular-ones, F_DCircR: D-circular, F_DIntR: D-interval,
// F_CCO: CCO). Members beyond the size guards are taken on trust.
bool member_fails_property(const CatalogId& id, std::string_view family);

// id belongs to family, the embedding reproduces generate(id), and (within the
// size guards) the oracle confirms that generate(id) fails the property.
bool verify_certificate(const BinMatrix& host, const NegCertificate& c, std::string_view family);
// Same for a bigraph, plus the vertex map and an isomorphism check of the
// induced subgraph against the named forbidden graph.
bool verify_certificate(const Bigraph& host, const SubgraphCertificate& c, std::string_view family);

}  // namespace dcirc
