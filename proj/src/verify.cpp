#include <algorithm>

#include "dcirc/d_circular.hpp"
#include "dcirc/oracle.hpp"

namespace dcirc {

namespace {

bool rows_pass(const BinMatrix& m, const ColumnOrder& ord, bool circular) {
  if (!is_permutation(ord.perm, m.n_cols())) return false;
  auto pos = positions(ord);
  for (const Row& r : m.rows())
    if (circular ? !is_circular_interval(r, pos, m.n_cols()) : !is_linear_interval(r, pos)) return false;
  return true;
}

// Positions (0-based) of the left and right endpoint of a nontrivial row.
struct Ends {
  int d, e;
};

Ends ends_of(const Row& r, const std::vector<int>& pos, int n) {
  std::vector<int> ps;
  ps.reserve(r.size());
  for (int c : r) ps.push_back(pos[c]);
  std::sort(ps.begin(), ps.end());
  // the left endpoint is the occupied position whose predecessor is free
  int d = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i)
    if (ps[i] != ps[i - 1] + 1) d = ps[i];
  return {d, (d + static_cast<int>(r.size()) - 1) % n};
}

bool nontrivial(const Row& r, int n) { return !r.empty() && static_cast<int>(r.size()) < n; }

bool row_order_valid(const BinMatrix& m, const Biorder& b) {
  return is_permutation(b.row_order, m.n_rows()) && is_permutation(b.col_order.perm, m.n_cols());
}

bool columns_pass(const BinMatrix& m, const Biorder& b, bool circular) {
  BinMatrix t = transpose(m);
  return rows_pass(t, ColumnOrder{b.row_order}, circular);
}

}  // namespace

bool circularly_monotone(const std::vector<int>& seq) {
  int desc = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[(i + 1) % seq.size()] < seq[i]) ++desc;
  return desc <= 1;
}

bool verify_circular_ones_order(const BinMatrix& m, const ColumnOrder& ord) { return rows_pass(m, ord, true); }

bool verify_d_circular_order(const BinMatrix& m, const ColumnOrder& ord) {
  return rows_pass(m, ord, true) && rows_pass(d_operator(m), ord, true);
}

bool verify_order(const BinMatrix& m, const ColumnOrder& ord, Property p) {
  switch (p) {
    case Property::consecutive_ones:
      return rows_pass(m, ord, false);
    case Property::circular_ones:
      return rows_pass(m, ord, true);
    case Property::d_interval: {
      if (!rows_pass(m, ord, false)) return false;
      // differences over every nested pair, trivial rows included
      auto pos = positions(ord);
      for (const Row& s : m.rows())
        for (const Row& r : m.rows())
          if (r.size() < s.size() && is_subset(r, s) && !is_linear_interval(set_difference(s, r), pos)) return false;
      return true;
    }
    case Property::d_circular:
      return verify_d_circular_order(m, ord);
  }
  return false;
}

// Rows in row order as arcs: start d (0-based position, -1 when free) and length.
// Free rows (empty or full) may start anywhere. True if some rotation of the
// sequence has non-decreasing starts in [0, n), non-decreasing unwrapped ends
// and last end <= first end + n.
bool synchronized_arcs(const std::vector<std::pair<int, int>>& arcs, int n) {
  const int p = static_cast<int>(arcs.size());
  if (p == 0) return true;
  std::vector<int> fixed;
  for (int i = 0; i < p; ++i)
    if (arcs[i].first >= 0) fixed.push_back(i);
  std::vector<int> starts;
  int descents = 0, after = -1;
  for (std::size_t t = 0; t < fixed.size(); ++t) {
    int a = fixed[t], b = fixed[(t + 1) % fixed.size()];
    if (arcs[b].first < arcs[a].first) {
      ++descents;
      after = static_cast<int>((t + 1) % fixed.size());
    }
  }
  if (descents > 1) return false;
  if (descents == 1) {
    int j = fixed[after];
    starts.push_back(j);
    for (int i = (j + p - 1) % p; arcs[i].first < 0 && i != j; i = (i + p - 1) % p) starts.push_back(i);
  } else {
    for (int i = 0; i < p; ++i) starts.push_back(i);
  }
  for (int s : starts) {
    auto [d0, len0] = arcs[s];
    int lo = d0 >= 0 ? d0 : 0, hi = d0 >= 0 ? d0 : n - 1;
    for (int d1 = lo; d1 <= hi; ++d1) {
      int ld = d1, lf = d1 + len0 - 1, f1 = lf;
      bool ok = true;
      for (int t = 1; t < p && ok; ++t) {
        auto [d, len] = arcs[(s + t) % p];
        if (d < 0) d = std::max(ld, lf - len + 1);
        int f = d + len - 1;
        ok = d >= ld && d < n && f >= lf;
        ld = d;
        lf = f;
      }
      if (ok && lf <= f1 + n) return true;
    }
  }
  return false;
}

bool verify_cco_biorder(const BinMatrix& m, const Biorder& b) {
  if (!row_order_valid(m, b) || !rows_pass(m, b.col_order, true) || !columns_pass(m, b, true)) return false;
  auto pos = positions(b.col_order);
  const int n = m.n_cols();
  std::vector<std::pair<int, int>> arcs;
  for (int i : b.row_order) {
    const Row& r = m.row(i);
    int len = static_cast<int>(r.size());
    arcs.emplace_back(nontrivial(r, n) ? ends_of(r, pos, n).d : -1, len);
  }
  return synchronized_arcs(arcs, n);
}

bool verify_cco_biorder_literal(const BinMatrix& m, const Biorder& b) {
  if (!row_order_valid(m, b) || !rows_pass(m, b.col_order, true) || !columns_pass(m, b, true)) return false;
  auto pos = positions(b.col_order);
  std::vector<int> ds, es;
  for (int i : b.row_order) {
    const Row& r = m.row(i);
    if (!nontrivial(r, m.n_cols())) continue;
    Ends x = ends_of(r, pos, m.n_cols());
    ds.push_back(x.d);
    es.push_back(x.e);
  }
  return circularly_monotone(ds) && circularly_monotone(es);
}

namespace {

bool lco_check(const BinMatrix& m, const Biorder& b, bool with_full_rows) {
  if (!row_order_valid(m, b) || !rows_pass(m, b.col_order, false) || !columns_pass(m, b, false)) return false;
  auto pos = positions(b.col_order);
  const int n = m.n_cols();
  int last_d = -1, last_e = -1;
  for (int i : b.row_order) {
    const Row& r = m.row(i);
    if (r.empty() || (!with_full_rows && static_cast<int>(r.size()) == n)) continue;
    int d = n, e = -1;
    for (int c : r) {
      d = std::min(d, pos[c]);
      e = std::max(e, pos[c]);
    }
    if (d < last_d || e < last_e) return false;
    last_d = d;
    last_e = e;
  }
  return true;
}

}  // namespace

bool verify_lco_biorder(const BinMatrix& m, const Biorder& b) { return lco_check(m, b, true); }
bool verify_lco_biorder_literal(const BinMatrix& m, const Biorder& b) { return lco_check(m, b, false); }

bool verify_monotone_circular_biorder(const BinMatrix& m, const Biorder& b) {
  const int n = m.n_cols();
  for (const Row& r : m.rows())
    if (!nontrivial(r, n)) throw std::invalid_argument("monotone circular biorder needs a matrix without trivial rows");
  if (!row_order_valid(m, b) || !rows_pass(m, b.col_order, true)) return false;
  auto pos = positions(b.col_order);
  std::vector<int> f;
  int last_d = -1;
  for (int i : b.row_order) {
    Ends x = ends_of(m.row(i), pos, n);
    if (x.d < last_d) return false;
    last_d = x.d;
    f.push_back(x.e >= x.d ? x.e : x.e + n);
  }
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] < f[i - 1]) return false;
  // alignment: f_1 = e_1^+, or f_1 = e_1 and f_p <= e_1^+
  return f.empty() || f.back() <= f.front() + n;
}

}  // namespace dcirc
