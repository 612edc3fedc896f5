#pragma once
// Exhaustive reference checks used to freeze expected values in tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dcirc/matrix.hpp"

namespace brute {

using dcirc::BinMatrix;
using dcirc::Row;

// Rows joined with '/', for test diagnostics.
inline std::string show(const BinMatrix& m) {
  std::string out;
  for (const auto& line : m.to_strings()) out += (out.empty() ? "" : "/") + line;
  return out + " (" + std::to_string(m.n_rows()) + "x" + std::to_string(m.n_cols()) + ")";
}

inline bool row_linear(const Row& r, const std::vector<int>& pos) {
  if (r.empty()) return true;
  int lo = 1 << 30, hi = -1;
  for (int c : r) {
    lo = std::min(lo, pos[c]);
    hi = std::max(hi, pos[c]);
  }
  return hi - lo + 1 == static_cast<int>(r.size());
}

inline bool row_circular(const Row& r, const std::vector<int>& pos, int n) {
  if (r.empty() || static_cast<int>(r.size()) == n) return true;
  std::vector<char> in(n, 0);
  for (int c : r) in[pos[c]] = 1;
  int starts = 0;
  for (int p = 0; p < n; ++p)
    if (in[p] && !in[(p + n - 1) % n]) ++starts;
  return starts == 1;
}

template <class F>
bool any_order(int n, F&& ok) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> pos(n + 1);
    for (int p = 0; p < n; ++p) pos[perm[p]] = p;
    if (ok(pos)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool consecutive(const BinMatrix& m) {
  return any_order(m.n_cols(), [&](const std::vector<int>& pos) {
    for (const Row& r : m.rows())
      if (!row_linear(r, pos)) return false;
    return true;
  });
}

inline bool circular(const BinMatrix& m) {
  return any_order(m.n_cols(), [&](const std::vector<int>& pos) {
    for (const Row& r : m.rows())
      if (!row_circular(r, pos, m.n_cols())) return false;
    return true;
  });
}

inline Row diff(const Row& s, const Row& r) {
  Row out;
  std::set_difference(s.begin(), s.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

inline bool subset(const Row& r, const Row& s) { return std::includes(s.begin(), s.end(), r.begin(), r.end()); }

// Every row and every difference s - r with r a proper subset of s is circular (linear for dint).
inline bool d_property(const BinMatrix& m, bool circ) {
  const int n = m.n_cols();
  std::vector<Row> all = m.rows();
  for (const Row& s : m.rows())
    for (const Row& r : m.rows())
      if (r.size() < s.size() && subset(r, s)) all.push_back(diff(s, r));
  return any_order(n, [&](const std::vector<int>& pos) {
    for (const Row& r : all)
      if (circ ? !row_circular(r, pos, n) : !row_linear(r, pos)) return false;
    return true;
  });
}

inline bool circ_monotone(const std::vector<int>& a) {
  int desc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[(i + 1) % a.size()] < a[i]) ++desc;
  return desc <= 1;
}

// Rows as arcs (start or -1 when free, length) in row order: some rotation has
// non-decreasing starts in [0, n), non-decreasing ends, last end <= first end + n.
inline bool sync_arcs(const std::vector<std::pair<int, int>>& arcs, int n) {
  const int q = static_cast<int>(arcs.size());
  if (q == 0) return true;
  for (int rot = 0; rot < q; ++rot)
    for (int d1 = 0; d1 < n; ++d1) {
      auto [fd, flen] = arcs[rot];
      if (fd >= 0 && fd != d1) continue;
      int ld = d1, lf = d1 + flen - 1, f1 = lf;
      bool ok = true;
      for (int j = 1; j < q && ok; ++j) {
        auto [d, len] = arcs[(rot + j) % q];
        if (d < 0) d = std::max(ld, lf - len + 1);
        ok = d >= ld && d < n && d + len - 1 >= lf;
        ld = d;
        lf = d + len - 1;
      }
      if (ok && lf <= f1 + n) return true;
    }
  return false;
}

// Compatible ones property by enumerating every biorder. Circular: rows as
// synchronized arcs (trivial rows free). Linear: every nonempty row takes part
// in the monotone endpoint condition. literal=true checks the classical wording
// instead (trivial rows skipped, each endpoint sequence on its own).
inline bool compatible(const BinMatrix& m, bool circ, bool literal = false) {
  const int k = m.n_rows(), n = m.n_cols();
  BinMatrix t = dcirc::transpose(m);
  auto row_ok = [&](const Row& r, const std::vector<int>& pos, int len) {
    return circ ? row_circular(r, pos, len) : row_linear(r, pos);
  };
  return any_order(n, [&](const std::vector<int>& cpos) {
    for (const Row& r : m.rows())
      if (!row_ok(r, cpos, n)) return false;
    std::vector<int> d(k + 1, -1), e(k + 1, -1);
    for (int i = 1; i <= k; ++i) {
      const Row& r = m.row(i);
      if (r.empty()) continue;
      if (static_cast<int>(r.size()) == n) {
        if (!circ) {
          d[i] = 0;
          e[i] = n - 1;
        }
        continue;
      }
      std::vector<char> in(n, 0);
      for (int c : r) in[cpos[c]] = 1;
      for (int p = 0; p < n; ++p)
        if (in[p] && !in[(p + n - 1) % n] && (circ || p == 0 || !in[p - 1])) d[i] = p;
      e[i] = (d[i] + static_cast<int>(r.size()) - 1) % n;
    }
    return any_order(k, [&](const std::vector<int>& rpos) {
      for (const Row& c : t.rows())
        if (!row_ok(c, rpos, k)) return false;
      std::vector<int> rows(k);
      for (int i = 1; i <= k; ++i) rows[rpos[i]] = i;
      std::vector<int> ds, es;
      std::vector<std::pair<int, int>> arcs;
      for (int i : rows) {
        const int len = static_cast<int>(m.row(i).size());
        bool trivial = len == 0 || len == n;
        if (literal && trivial) continue;
        if (circ) {
          arcs.emplace_back(trivial ? -1 : d[i], len);
          if (!trivial) {
            ds.push_back(d[i]);
            es.push_back(e[i]);
          }
        } else if (d[i] >= 0) {
          ds.push_back(d[i]);
          es.push_back(e[i]);
        }
      }
      if (circ) return literal ? circ_monotone(ds) && circ_monotone(es) : sync_arcs(arcs, n);
      return std::is_sorted(ds.begin(), ds.end()) && std::is_sorted(es.begin(), es.end());
    });
  });
}

inline BinMatrix random_matrix(std::mt19937& rng, int k, int l, double p = 0.5) {
  std::bernoulli_distribution bit(p);
  std::vector<Row> rows(k);
  for (auto& r : rows)
    for (int c = 1; c <= l; ++c)
      if (bit(rng)) r.push_back(c);
  return BinMatrix(l, rows);
}

// Least i such that rows 1..i fail pred, 0 if all rows pass.
template <class P>
int least_failing_prefix(const BinMatrix& m, P&& pred) {
  for (int i = 1; i <= m.n_rows(); ++i) {
    std::vector<int> rho(i);
    std::iota(rho.begin(), rho.end(), 1);
    if (!pred(dcirc::select_rows(m, rho))) return i;
  }
  return 0;
}

}  // namespace brute
