#include "dcirc/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dcirc {

namespace {

void check_row(const Row& r, int n_cols) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 1 || r[i] > n_cols) throw std::invalid_argument("column index out of range");
    if (i > 0 && r[i] <= r[i - 1]) throw std::invalid_argument("row not strictly increasing");
  }
}

void check_bits(const Bits& a) {
  for (char c : a)
    if (c != '0' && c != '1') throw std::invalid_argument("binary sequence expected");
}

}  // namespace

BinMatrix::BinMatrix(int n_rows, int n_cols) : n_cols_(n_cols), rows_(n_rows) {
  if (n_rows < 0 || n_cols < 0) throw std::invalid_argument("negative dimension");
}

BinMatrix::BinMatrix(int n_cols, std::vector<Row> rows) : n_cols_(n_cols), rows_(std::move(rows)) {
  if (n_cols < 0) throw std::invalid_argument("negative dimension");
  for (const Row& r : rows_) check_row(r, n_cols_);
}

BinMatrix BinMatrix::from_strings(const std::vector<std::string>& lines) {
  int n_cols = lines.empty() ? 0 : static_cast<int>(lines[0].size());
  std::vector<Row> rows;
  rows.reserve(lines.size());
  for (const auto& s : lines) {
    if (static_cast<int>(s.size()) != n_cols) throw std::invalid_argument("ragged dense matrix");
    Row r;
    for (int j = 0; j < n_cols; ++j) {
      if (s[j] == '1') r.push_back(j + 1);
      else if (s[j] != '0') throw std::invalid_argument("dense matrix entries must be 0 or 1");
    }
    rows.push_back(std::move(r));
  }
  return BinMatrix(n_cols, std::move(rows));
}

bool BinMatrix::at(int i, int j) const {
  const Row& r = row(i);
  return std::binary_search(r.begin(), r.end(), j);
}

std::size_t BinMatrix::ones() const {
  std::size_t s = 0;
  for (const Row& r : rows_) s += r.size();
  return s;
}

bool BinMatrix::is_trivial_row(int i) const {
  auto n = row(i).size();
  return n == 0 || static_cast<int>(n) == n_cols_;
}

std::vector<std::string> BinMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) {
    std::string s(n_cols_, '0');
    for (int c : r) s[c - 1] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

ColumnOrder identity_order(int n) {
  ColumnOrder o;
  o.perm.resize(n);
  std::iota(o.perm.begin(), o.perm.end(), 1);
  return o;
}

bool is_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n + 1, 0);
  for (int c : perm) {
    if (c < 1 || c > n || seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

std::vector<int> positions(const ColumnOrder& ord) {
  std::vector<int> pos(ord.perm.size() + 1, -1);
  for (std::size_t p = 0; p < ord.perm.size(); ++p) pos[ord.perm[p]] = static_cast<int>(p);
  return pos;
}

Row set_difference(const Row& s, const Row& r) {
  Row out;
  std::set_difference(s.begin(), s.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const Row& r, const Row& s) { return std::includes(s.begin(), s.end(), r.begin(), r.end()); }

BinMatrix complement(const BinMatrix& m) {
  std::vector<Row> rows;
  rows.reserve(m.n_rows());
  Row all(m.n_cols());
  std::iota(all.begin(), all.end(), 1);
  for (const Row& r : m.rows()) rows.push_back(set_difference(all, r));
  return BinMatrix(m.n_cols(), std::move(rows));
}

BinMatrix transpose(const BinMatrix& m) {
  std::vector<Row> rows(m.n_cols());
  for (int i = 1; i <= m.n_rows(); ++i)
    for (int c : m.row(i)) rows[c - 1].push_back(i);
  return BinMatrix(m.n_rows(), std::move(rows));
}

BinMatrix row_complement(const Bits& a, const BinMatrix& m) {
  check_bits(a);
  if (static_cast<int>(a.size()) != m.n_rows()) throw std::invalid_argument("mask length differs from row count");
  BinMatrix co = complement(m);
  std::vector<Row> rows;
  rows.reserve(m.n_rows());
  for (int i = 1; i <= m.n_rows(); ++i) rows.push_back(a[i - 1] == '1' ? co.row(i) : m.row(i));
  return BinMatrix(m.n_cols(), std::move(rows));
}

BinMatrix star(const BinMatrix& m) { return BinMatrix(m.n_cols() + 1, m.rows()); }

BinMatrix pad_trivial(const BinMatrix& m, int u) {
  if (u != 0 && u != 1) throw std::invalid_argument("u must be 0 or 1");
  bool found = false;
  std::vector<Row> rows;
  rows.reserve(m.n_rows());
  int extra = m.n_cols() + 1;
  for (int i = 1; i <= m.n_rows(); ++i) {
    const Row& r = m.row(i);
    bool all_u = u == 0 ? r.empty() : static_cast<int>(r.size()) == m.n_cols();
    found = found || all_u;
    Row nr = r;
    // new column holds 1-u on all-u rows and u elsewhere
    if ((all_u ? 1 - u : u) == 1) nr.push_back(extra);
    rows.push_back(std::move(nr));
  }
  if (!found) throw std::invalid_argument("pad_trivial: no row with all entries equal to u");
  return BinMatrix(extra, std::move(rows));
}

bool embedding_valid(const BinMatrix& host, const Embedding& e) {
  auto ok = [](const std::vector<int>& v, int n) {
    std::vector<char> seen(n + 1, 0);
    for (int x : v) {
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  };
  return ok(e.rho, host.n_rows()) && ok(e.sigma, host.n_cols());
}

BinMatrix submatrix(const BinMatrix& m, const Embedding& e) {
  if (!embedding_valid(m, e)) throw std::invalid_argument("embedding out of range or not injective");
  // target index of each host column, 0 when not selected
  std::vector<int> target(m.n_cols() + 1, 0);
  for (std::size_t j = 0; j < e.sigma.size(); ++j) target[e.sigma[j]] = static_cast<int>(j) + 1;
  std::vector<Row> rows;
  rows.reserve(e.rho.size());
  for (int i : e.rho) {
    Row r;
    for (int c : m.row(i))
      if (target[c]) r.push_back(target[c]);
    std::sort(r.begin(), r.end());
    rows.push_back(std::move(r));
  }
  return BinMatrix(static_cast<int>(e.sigma.size()), std::move(rows));
}

BinMatrix select_rows(const BinMatrix& m, const std::vector<int>& rho) {
  std::vector<Row> rows;
  rows.reserve(rho.size());
  for (int i : rho) rows.push_back(m.row(i));
  return BinMatrix(m.n_cols(), std::move(rows));
}

BinMatrix select_cols(const BinMatrix& m, const std::vector<int>& sigma) {
  std::vector<int> rho(m.n_rows());
  std::iota(rho.begin(), rho.end(), 1);
  return submatrix(m, {rho, sigma});
}

BinMatrix permute_columns(const BinMatrix& m, const ColumnOrder& ord) { return select_cols(m, ord.perm); }

BinMatrix vstack(const BinMatrix& a, const BinMatrix& b) {
  if (a.n_cols() != b.n_cols()) throw std::invalid_argument("vstack: column counts differ");
  std::vector<Row> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return BinMatrix(a.n_cols(), std::move(rows));
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
  Embedding e;
  e.rho.reserve(inner.rho.size());
  e.sigma.reserve(inner.sigma.size());
  for (int i : inner.rho) e.rho.push_back(outer.rho.at(i - 1));
  for (int j : inner.sigma) e.sigma.push_back(outer.sigma.at(j - 1));
  return e;
}

namespace {

struct ConfigSearch {
  const BinMatrix& m;
  const BinMatrix& f;
  int k, l, kf, lf;
  std::vector<std::vector<char>> host;          // dense host rows
  std::vector<std::vector<std::uint64_t>> fkeys;  // fkeys[t][j]: pattern of f column j over rows < t
  std::vector<std::vector<std::uint64_t>> fsorted;
  std::vector<int> rho;
  std::vector<char> used;
  std::vector<std::uint64_t> hkey;  // host column patterns over chosen rows
  std::optional<Embedding> found;

  ConfigSearch(const BinMatrix& m_, const BinMatrix& f_)
      : m(m_), f(f_), k(m_.n_rows()), l(m_.n_cols()), kf(f_.n_rows()), lf(f_.n_cols()) {
    host.assign(k, std::vector<char>(l, 0));
    for (int i = 1; i <= k; ++i)
      for (int c : m.row(i)) host[i - 1][c - 1] = 1;
    fkeys.assign(kf + 1, std::vector<std::uint64_t>(lf, 0));
    for (int t = 1; t <= kf; ++t) {
      fkeys[t] = fkeys[t - 1];
      for (int c : f.row(t)) fkeys[t][c - 1] |= std::uint64_t{1} << (t - 1);
    }
    fsorted = fkeys;
    for (auto& v : fsorted) std::sort(v.begin(), v.end());
    used.assign(k, 0);
    hkey.assign(l, 0);
  }

  // multiset of f patterns at depth t must fit inside the host patterns
  bool feasible(int t) const {
    std::vector<std::uint64_t> h = hkey;
    std::sort(h.begin(), h.end());
    const auto& need = fsorted[t];
    std::size_t a = 0;
    for (std::uint64_t x : need) {
      while (a < h.size() && h[a] < x) ++a;
      if (a == h.size() || h[a] != x) return false;
      ++a;
    }
    return true;
  }

  bool assign_columns() {
    std::vector<int> sigma(lf, 0);
    std::vector<char> taken(l, 0);
    for (int j = 0; j < lf; ++j) {
      int pick = -1;
      for (int c = 0; c < l; ++c)
        if (!taken[c] && hkey[c] == fkeys[kf][j]) {
          pick = c;
          break;
        }
      if (pick < 0) return false;
      taken[pick] = 1;
      sigma[j] = pick + 1;
    }
    Embedding e;
    e.rho = rho;
    e.sigma = std::move(sigma);
    found = std::move(e);
    return true;
  }

  bool dfs(int t) {
    if (t == kf) return assign_columns();
    for (int i = 0; i < k; ++i) {
      if (used[i]) continue;
      std::vector<std::uint64_t> saved = hkey;
      for (int c = 0; c < l; ++c)
        if (host[i][c]) hkey[c] |= std::uint64_t{1} << t;
      if (feasible(t + 1)) {
        used[i] = 1;
        rho.push_back(i + 1);
        if (dfs(t + 1)) return true;
        rho.pop_back();
        used[i] = 0;
      }
      hkey = std::move(saved);
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_configuration(const BinMatrix& m, const BinMatrix& f) {
  if (f.n_rows() > m.n_rows() || f.n_cols() > m.n_cols()) return std::nullopt;
  if (f.n_rows() > 64) throw std::invalid_argument("configuration search limited to 64 pattern rows");
  ConfigSearch s(m, f);
  if (!s.feasible(0)) return std::nullopt;
  if (s.dfs(0)) return s.found;
  return std::nullopt;
}

bool same_configuration(const BinMatrix& a, const BinMatrix& b) {
  if (a.n_rows() != b.n_rows() || a.n_cols() != b.n_cols()) return false;
  if (a.ones() != b.ones()) return false;
  return find_configuration(a, b).has_value();
}

bool is_circular_interval(const Row& r, const std::vector<int>& pos, int n_cols) {
  int m = static_cast<int>(r.size());
  if (m == 0 || m == n_cols) return true;
  std::vector<int> p;
  p.reserve(m);
  for (int c : r) p.push_back(pos[c]);
  std::sort(p.begin(), p.end());
  int breaks = 0;
  for (int i = 0; i < m; ++i) {
    int next = i + 1 < m ? p[i + 1] : p[0] + n_cols;
    if (next != p[i] + 1) ++breaks;
  }
  return breaks == 1;
}

bool is_linear_interval(const Row& r, const std::vector<int>& pos) {
  if (r.empty()) return true;
  int lo = pos[r[0]], hi = lo;
  for (int c : r) {
    lo = std::min(lo, pos[c]);
    hi = std::max(hi, pos[c]);
  }
  return hi - lo + 1 == static_cast<int>(r.size());
}

IntervalsOrFail rows_as_circular_intervals(const BinMatrix& m, const ColumnOrder& ord) {
  if (!is_permutation(ord.perm, m.n_cols())) throw std::invalid_argument("order is not a permutation of the columns");
  const int l = m.n_cols();
  std::vector<int> pos = positions(ord);
  std::vector<CircInterval> out;
  out.reserve(m.n_rows());
  std::vector<int> p;
  for (int i = 1; i <= m.n_rows(); ++i) {
    const Row& r = m.row(i);
    int sz = static_cast<int>(r.size());
    if (sz == 0) {
      out.push_back({CircInterval::Kind::empty, 0, 0});
      continue;
    }
    if (sz == l) {
      out.push_back({CircInterval::Kind::full, 0, 0});
      continue;
    }
    p.clear();
    for (int c : r) p.push_back(pos[c]);
    std::sort(p.begin(), p.end());
    int breaks = 0, left = -1, right = -1;
    for (int a = 0; a < sz; ++a) {
      int next = a + 1 < sz ? p[a + 1] : p[0] + l;
      if (next != p[a] + 1) {
        ++breaks;
        right = p[a];
        left = next % l;
      }
    }
    if (breaks != 1) return i;
    out.push_back({CircInterval::Kind::arc, ord.perm[left], ord.perm[right]});
  }
  return out;
}

Row expand(const CircInterval& iv, const ColumnOrder& ord) {
  int l = static_cast<int>(ord.perm.size());
  Row r;
  if (iv.kind == CircInterval::Kind::empty) return r;
  if (iv.kind == CircInterval::Kind::full) {
    r = ord.perm;
  } else {
    std::vector<int> pos = positions(ord);
    int p = pos[iv.left];
    while (true) {
      r.push_back(ord.perm[p]);
      if (ord.perm[p] == iv.right) break;
      p = (p + 1) % l;
    }
  }
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace dcirc
