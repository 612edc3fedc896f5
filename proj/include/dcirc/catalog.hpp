#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcirc/matrix.hpp"

namespace dcirc {

// Named forbidden matrix. A family tag ending in 'T' names the transpose of
// the tag without it (e.g. "Z5T", "Z2*T", "M_I*T").
struct CatalogId {
  std::string family;
  int k = 0;   // size parameter, 0 when the family has none
  Bits a{};    // bracelet, only for "aM_I*"
  bool operator==(const CatalogId& o) const = default;
};

std::string to_string(const CatalogId& id);
BinMatrix generate(const CatalogId& id);
bool has_size_parameter(std::string_view family);

// All binary bracelets of length k, ascending.
std::vector<Bits> bracelets(int k);
// A_3 = {000, 111}; A_k = bracelets(k) for k >= 4.
std::vector<Bits> a_set(int k);
// Lexicographically least rotation/reversal of a.
Bits canonical_bracelet(const Bits& a);

using Member = std::pair<CatalogId, BinMatrix>;

// name in {ForbRow, F_DCircR, F_DCircR_inf, F_CCO, F_CCO_inf, F_DIntR, F_DIntR_inf}
std::vector<Member> family(std::string_view name, int k_max);
bool in_family(const CatalogId& id, std::string_view name);

// Named member representing the same configuration as f.
std::optional<CatalogId> classify(const BinMatrix& f, int k_max = 8);
// Same, restricted to one family, also returning e with submatrix(f, e) == generate(id).
std::optional<std::pair<CatalogId, Embedding>> classify_in(const BinMatrix& f, std::string_view name, int k_max = 8);
// First member of the family (in family order) contained in host, with its embedding.
std::optional<std::pair<CatalogId, Embedding>> find_member(const BinMatrix& host, std::string_view name, int k_max);

// Cycle normalizations. Every way of reading f as a(.)M_I*(k) (a canonicalized to
// its bracelet), with e such that submatrix(f, e) == row_complement(a, M_I*(k)).
std::vector<std::pair<Bits, Embedding>> match_cycle_star(const BinMatrix& f);
// f as M_I(k) (k x k chordless cycle pattern).
std::optional<Embedding> match_cycle(const BinMatrix& f);

// Senary sequences and the R, W, X, Y constructions.
std::string senary_complement(const std::string& lambda);
BinMatrix q_matrix(int j, int i, int k);
BinMatrix r_of(const std::string& lambda);
BinMatrix u_matrix(int j, int i);
BinMatrix w_of(const std::string& lambda);
bool w_legal(const std::string& lambda);
BinMatrix x_of(int i, const Bits& alpha);
BinMatrix y_of(const Bits& gamma);

}  // namespace dcirc
