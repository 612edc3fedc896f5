#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "dcirc/bigraph.hpp"
#include "dcirc/compatible.hpp"
#include "dcirc/cons_circ.hpp"
#include "dcirc/matrix.hpp"

namespace dcirc {

using nlohmann::json;

// Result of one recognition run. holds => witness set, !holds => certificate set.
struct RunReport {
  std::string property;  // c1 circ1 dint dcirc lco cco pcab pib
  bool holds = false;
  json witness;      // null or {"type": "order"|"biorder"|"bimodel", ...}
  json certificate;  // null or {"id": ..., "rho": [...], "sigma": [...], ...}
  double millis = 0;
  std::string digest;  // hex SHA-256 of the input bytes
};

std::string sha256_hex(std::string_view bytes);

json id_to_json(const CatalogId& id);
CatalogId id_from_json(const json& j);
std::string fraction(const Rational& r);
Rational parse_fraction(const std::string& s);

json order_json(const ColumnOrder& ord);
json biorder_json(const Biorder& b);
json bimodel_json(const Bigraph& g, const Bimodel& bm);
json bimodel_json(const Bigraph& g, const IntervalBimodel& bm);
json certificate_json(const NegCertificate& c);
json certificate_json(const SubgraphCertificate& c);

// Rows and columns (1-based) of a row- and column-minimal submatrix without
// the consecutive-ones property; m must lack it.
Embedding minimal_non_c1(const BinMatrix& m);

bool is_matrix_property(std::string_view p);
bool is_bigraph_property(std::string_view p);
// Catalog family the certificates of a property come from ("" for c1).
std::string certificate_family(std::string_view p);

// Throws std::invalid_argument on an unknown property.
RunReport recognize(const BinMatrix& m, std::string_view property);
RunReport recognize(const Bigraph& g, std::string_view property);
// Brute-force verdict; c1 circ1 dint dcirc cco. Throws SizeGuardError beyond the guards.
RunReport run_oracle(const BinMatrix& m, std::string_view property);

json to_json(const RunReport& r);
std::string to_text(const RunReport& r);

// Re-checks a report against the input it claims to describe. On failure
// returns false and sets *why.
bool check_report(const json& report, std::string_view input, std::string* why = nullptr);

}  // namespace dcirc
