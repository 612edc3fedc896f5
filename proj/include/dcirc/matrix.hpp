#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dcirc {

// Sorted, duplicate-free list of 1-based column indices.
using Row = std::vector<int>;

// Sparse binary matrix. Rows and columns are 1-based in every public call.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(int n_rows, int n_cols);
  BinMatrix(int n_cols, std::vector<Row> rows);

  // Dense construction from strings of '0'/'1'; all strings must share a length.
  static BinMatrix from_strings(const std::vector<std::string>& lines);

  int n_rows() const { return static_cast<int>(rows_.size()); }
  int n_cols() const { return n_cols_; }
  const Row& row(int i) const { return rows_.at(i - 1); }
  const std::vector<Row>& rows() const { return rows_; }
  bool at(int i, int j) const;

  // Number of ones.
  std::size_t ones() const;
  // size(M) as used for linear-time bounds: rows + columns + ones.
  std::size_t size() const { return rows_.size() + n_cols_ + ones(); }

  bool is_trivial_row(int i) const;
  std::vector<std::string> to_strings() const;

  bool operator==(const BinMatrix& o) const = default;

 private:
  int n_cols_ = 0;
  std::vector<Row> rows_;
};

// Row map rho and column map sigma, both 1-based and injective.
struct Embedding {
  std::vector<int> rho;
  std::vector<int> sigma;
  bool operator==(const Embedding& o) const = default;
};

// perm[p] is the column at position p+1 of the order.
struct ColumnOrder {
  std::vector<int> perm;
  bool operator==(const ColumnOrder& o) const = default;
};

struct CircInterval {
  enum class Kind { empty, full, arc };
  Kind kind = Kind::empty;
  int left = 0;
  int right = 0;
  bool operator==(const CircInterval& o) const = default;
};

using Bits = std::string;  // binary sequence over '0'/'1'

ColumnOrder identity_order(int n);
bool is_permutation(const std::vector<int>& perm, int n);
// pos[c] = 0-based position of column c (index 0 unused).
std::vector<int> positions(const ColumnOrder& ord);

BinMatrix complement(const BinMatrix& m);
BinMatrix transpose(const BinMatrix& m);
BinMatrix row_complement(const Bits& a, const BinMatrix& m);
BinMatrix star(const BinMatrix& m);
BinMatrix pad_trivial(const BinMatrix& m, int u);
BinMatrix submatrix(const BinMatrix& m, const Embedding& e);
BinMatrix select_rows(const BinMatrix& m, const std::vector<int>& rho);
BinMatrix select_cols(const BinMatrix& m, const std::vector<int>& sigma);
BinMatrix permute_columns(const BinMatrix& m, const ColumnOrder& ord);
BinMatrix vstack(const BinMatrix& a, const BinMatrix& b);

// Composition: submatrix(submatrix(m, outer), inner) == submatrix(m, compose(outer, inner)).
Embedding compose(const Embedding& outer, const Embedding& inner);
bool embedding_valid(const BinMatrix& host, const Embedding& e);

// Lexicographically least (rho, then sigma) embedding with submatrix(m, e) == f.
std::optional<Embedding> find_configuration(const BinMatrix& m, const BinMatrix& f);
bool same_configuration(const BinMatrix& a, const BinMatrix& b);

// Each row as a circular interval of ord, or the 1-based index of the first row that is not one.
using IntervalsOrFail = std::variant<std::vector<CircInterval>, int>;
IntervalsOrFail rows_as_circular_intervals(const BinMatrix& m, const ColumnOrder& ord);
Row expand(const CircInterval& iv, const ColumnOrder& ord);

// Row tests under a position map (see positions()).
bool is_circular_interval(const Row& r, const std::vector<int>& pos, int n_cols);
bool is_linear_interval(const Row& r, const std::vector<int>& pos);

Row set_difference(const Row& s, const Row& r);
bool is_subset(const Row& r, const Row& s);

}  // namespace dcirc
