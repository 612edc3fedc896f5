#include "dcirc/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace dcirc {

namespace {

const std::map<std::string, std::vector<std::string>, std::less<>>& fixed_table() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> t = {
      {"M_IV", {"110000", "001100", "000011", "010101"}},
      {"M_V", {"11000", "11110", "00110", "10011"}},
      {"Z1", {"111", "100", "010", "001"}},
      {"Z2", {"100", "110", "111", "010"}},
      {"Z3", {"100", "110", "111", "101"}},
      {"Z4", {"1110", "0111", "0010"}},
      {"Z5", {"1001", "1100", "1110", "0100"}},
      {"Z6", {"1110", "1001", "0100", "0010"}},
      {"Z7", {"1110", "1001", "0101", "0010"}},
      {"Z8", {"11101", "01111", "00100", "00001"}},
  };
  return t;
}

bool is_bits(const Bits& a) {
  return std::all_of(a.begin(), a.end(), [](char c) { return c == '0' || c == '1'; });
}

BinMatrix cycle(int k) {
  std::vector<Row> rows;
  for (int i = 1; i < k; ++i) rows.push_back({i, i + 1});
  rows.push_back({1, k});
  return BinMatrix(k, std::move(rows));
}

// Derived names: a "co" prefix complements everything after it, a trailing '*' stars the rest.
std::optional<BinMatrix> derived(std::string_view name) {
  const auto& t = fixed_table();
  if (auto it = t.find(name); it != t.end()) return BinMatrix::from_strings(it->second);
  if (name.rfind("co", 0) == 0) {
    std::size_t skip = name.rfind("co_", 0) == 0 ? 3 : 2;
    auto base = derived(name.substr(skip));
    if (base) return complement(*base);
    return std::nullopt;
  }
  if (name.size() > 1 && name.back() == '*') {
    auto base = derived(name.substr(0, name.size() - 1));
    if (base) return star(*base);
  }
  return std::nullopt;
}

const std::vector<std::string>& fixed_names() {
  // Members without a size parameter, in the order classify tries them.
  static const std::vector<std::string> v = {
      "Z1",  "Z2",  "Z3",    "Z4",    "Z5",    "Z6",   "Z7",     "Z8",     "Z1*",    "Z2*",   "Z3*",
      "Z4*", "coZ1*", "coZ2*", "coZ4*", "coZ6", "Z5T", "M_IV", "co_M_IV", "M_V", "M_V*", "co_M_V*",
      "Z1T", "Z2T", "Z3T", "Z2*T", "Z3*T", "Z4*T", "coZ2*T", "coZ4*T"};
  return v;
}

bool param_family(std::string_view f) {
  return f == "M_I" || f == "M_I*" || f == "co_M_I*" || f == "aM_I*" || f == "M_I*T" || f == "co_M_I*T";
}

bool in_a_set(const Bits& a, int k) {
  if (static_cast<int>(a.size()) != k || k < 3 || !is_bits(a)) return false;
  if (k == 3) return a == "000" || a == "111";
  return canonical_bracelet(a) == a;
}

Bits ones(int k) { return Bits(k, '1'); }
Bits zeros(int k) { return Bits(k, '0'); }

}  // namespace

bool has_size_parameter(std::string_view family) { return param_family(family); }

std::string to_string(const CatalogId& id) {
  if (id.family == "aM_I*") return id.a + ".M_I*(" + std::to_string(id.k) + ")";
  if (id.family == "M_I*T") return "M_I*(" + std::to_string(id.k) + ")T";
  if (id.family == "co_M_I*T") return "co_M_I*(" + std::to_string(id.k) + ")T";
  if (param_family(id.family)) return id.family + "(" + std::to_string(id.k) + ")";
  return id.family;
}

BinMatrix generate(const CatalogId& id) {
  const std::string& f = id.family;
  if (param_family(f)) {
    if (id.k < 3) throw std::invalid_argument("size parameter must be at least 3");
    if (f == "M_I") return cycle(id.k);
    if (f == "M_I*") return star(cycle(id.k));
    if (f == "co_M_I*") return complement(star(cycle(id.k)));
    if (f == "M_I*T") return transpose(star(cycle(id.k)));
    if (f == "co_M_I*T") return transpose(complement(star(cycle(id.k))));
    // aM_I*
    if (!in_a_set(id.a, id.k))
      throw std::invalid_argument("a must belong to A_k: " + id.a);
    return row_complement(id.a, star(cycle(id.k)));
  }
  if (auto m = derived(f)) return *m;
  if (f.size() > 1 && f.back() == 'T') {
    if (auto m = derived(std::string_view(f).substr(0, f.size() - 1))) return transpose(*m);
  }
  throw std::invalid_argument("unknown catalog family: " + f);
}

Bits canonical_bracelet(const Bits& a) {
  Bits best = a;
  Bits r(a.rbegin(), a.rend());
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    Bits x = a.substr(s) + a.substr(0, s);
    Bits y = r.substr(s) + r.substr(0, s);
    best = std::min({best, x, y});
  }
  return best;
}

std::vector<Bits> bracelets(int k) {
  if (k < 1) throw std::invalid_argument("bracelet length must be positive");
  if (k > 24) throw std::invalid_argument("bracelet length too large");
  std::vector<Bits> out;
  for (unsigned long x = 0; x < (1ul << k); ++x) {
    Bits a(k, '0');
    for (int i = 0; i < k; ++i)
      if (x >> (k - 1 - i) & 1) a[i] = '1';
    if (canonical_bracelet(a) == a) out.push_back(a);
  }
  return out;
}

std::vector<Bits> a_set(int k) {
  if (k < 3) throw std::invalid_argument("A_k defined for k >= 3");
  if (k == 3) return {"000", "111"};
  return bracelets(k);
}

std::vector<Member> family(std::string_view name, int k_max) {
  if (k_max < 3) throw std::invalid_argument("k_max must be at least 3");
  std::vector<Member> out;
  auto add = [&](const std::string& f, int k = 0, const Bits& a = {}) {
    CatalogId id{f, k, a};
    out.emplace_back(id, generate(id));
  };
  auto add_fixed = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) add(n);
  };
  if (name == "ForbRow") {
    for (int k = 3; k <= k_max; ++k)
      for (const Bits& a : a_set(k)) add("aM_I*", k, a);
    add_fixed({"M_IV", "co_M_IV", "M_V*", "co_M_V*"});
  } else if (name == "F_DCircR" || name == "F_DCircR_inf") {
    add_fixed({"Z1*", "Z2*", "Z3*", "Z4*", "Z5", "Z5T", "Z6", "Z7", "Z8", "coZ1*", "coZ2*", "coZ4*", "coZ6"});
    if (name == "F_DCircR_inf")
      for (int k = 3; k <= k_max; ++k) {
        add("M_I*", k);
        add("co_M_I*", k);
      }
  } else if (name == "F_CCO" || name == "F_CCO_inf") {
    add_fixed({"Z2*", "Z3*", "Z4*", "Z5", "coZ2*", "coZ4*", "Z2*T", "Z3*T", "Z4*T", "Z5T", "coZ2*T", "coZ4*T"});
    if (name == "F_CCO_inf")
      for (int k = 3; k <= k_max; ++k) {
        add("M_I*", k);
        add("co_M_I*", k);
        add("M_I*T", k);
        add("co_M_I*T", k);
      }
  } else if (name == "F_DIntR" || name == "F_DIntR_inf") {
    add_fixed({"Z1", "Z2", "Z3", "Z2T", "Z3T"});
    if (name == "F_DIntR_inf") {
      add("Z1T");
      for (int k = 3; k <= k_max; ++k) add("M_I", k);
    }
  } else {
    throw std::invalid_argument("unknown family: " + std::string(name));
  }
  return out;
}

bool in_family(const CatalogId& id, std::string_view name) {
  auto one_of = [&](std::initializer_list<const char*> names) {
    return std::any_of(names.begin(), names.end(), [&](const char* n) { return id.family == n; });
  };
  bool param_ok = id.k >= 3;
  if (name == "ForbRow") {
    if (id.family == "aM_I*") {
      return param_ok && in_a_set(id.a, id.k);
    }
    return one_of({"M_IV", "co_M_IV", "M_V*", "co_M_V*"});
  }
  if (name == "F_DCircR" || name == "F_DCircR_inf") {
    if (one_of({"Z1*", "Z2*", "Z3*", "Z4*", "Z5", "Z5T", "Z6", "Z7", "Z8", "coZ1*", "coZ2*", "coZ4*", "coZ6"}))
      return true;
    return name == "F_DCircR_inf" && param_ok && one_of({"M_I*", "co_M_I*"});
  }
  if (name == "F_CCO" || name == "F_CCO_inf") {
    if (one_of({"Z2*", "Z3*", "Z4*", "Z5", "coZ2*", "coZ4*", "Z2*T", "Z3*T", "Z4*T", "Z5T", "coZ2*T", "coZ4*T"}))
      return true;
    return name == "F_CCO_inf" && param_ok && one_of({"M_I*", "co_M_I*", "M_I*T", "co_M_I*T"});
  }
  if (name == "F_DIntR" || name == "F_DIntR_inf") {
    if (one_of({"Z1", "Z2", "Z3", "Z2T", "Z3T"})) return true;
    return name == "F_DIntR_inf" && (id.family == "Z1T" || (param_ok && id.family == "M_I"));
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

namespace {

// Walk f (k x k, rows and columns of degree 2) as one chordless cycle: rows r and
// columns c with row r_i holding columns c_i and c_{i+1} (indices mod k).
bool walk_cycle(const std::vector<Row>& rows, const std::vector<int>& col_ids, std::vector<int>& r,
                std::vector<int>& c) {
  const int k = static_cast<int>(rows.size());
  if (k < 3 || static_cast<int>(col_ids.size()) != k) return false;
  std::map<int, std::vector<int>> col_rows;
  for (int i = 0; i < k; ++i) {
    if (rows[i].size() != 2) return false;
    for (int x : rows[i]) col_rows[x].push_back(i);
  }
  if (static_cast<int>(col_rows.size()) != k) return false;
  for (auto& [x, v] : col_rows)
    if (v.size() != 2) return false;
  r.assign(1, 0);
  c.assign({rows[0][0], rows[0][1]});
  std::vector<char> seen(k, 0);
  seen[0] = 1;
  for (int step = 1; step < k; ++step) {
    int col = c.back();
    const auto& v = col_rows[col];
    int nxt = v[0] == r.back() ? v[1] : v[0];
    if (seen[nxt]) return false;
    seen[nxt] = 1;
    r.push_back(nxt);
    int other = rows[nxt][0] == col ? rows[nxt][1] : rows[nxt][0];
    c.push_back(other);
  }
  // closing column must be the first one
  if (c.back() != c.front()) return false;
  c.pop_back();
  return true;
}

}  // namespace

std::vector<std::pair<Bits, Embedding>> match_cycle_star(const BinMatrix& f) {
  std::vector<std::pair<Bits, Embedding>> out;
  const int k = f.n_rows();
  if (k < 3 || f.n_cols() != k + 1) return out;
  for (int cut = 1; cut <= k + 1; ++cut) {
    std::vector<int> col_ids;
    for (int j = 1; j <= k + 1; ++j)
      if (j != cut) col_ids.push_back(j);
    Bits mask(k, '0');
    std::vector<Row> rows(k);
    for (int i = 1; i <= k; ++i) {
      bool flip = f.at(i, cut);
      mask[i - 1] = flip ? '1' : '0';
      for (int j : col_ids)
        if (f.at(i, j) != flip) rows[i - 1].push_back(j);
    }
    std::vector<int> r, c;
    if (!walk_cycle(rows, col_ids, r, c)) continue;
    // best dihedral relabeling: lexicographically least (a, rho, sigma)
    std::tuple<Bits, std::vector<int>, std::vector<int>> best;
    bool have = false;
    for (int refl = 0; refl < 2; ++refl) {
      for (int s = 0; s < k; ++s) {
        std::vector<int> rho(k), sigma(k + 1);
        Bits a(k, '0');
        for (int i = 0; i < k; ++i) {
          int ri, ci;
          if (!refl) {
            ri = (i + s) % k;
            ci = (i + s) % k;
          } else {
            int base = (k - 1 - i + k) % k;  // r'_i = r_{k+1-i}, c'_i = c_{k+2-i}
            ri = (base + s) % k;
            ci = (base + 1 + s) % k;
          }
          rho[i] = r[ri] + 1;
          sigma[i] = c[ci];
          a[i] = mask[r[ri]];
        }
        sigma[k] = cut;
        auto cand = std::make_tuple(a, rho, sigma);
        if (!have || cand < best) {
          best = cand;
          have = true;
        }
      }
    }
    Embedding e{std::get<1>(best), std::get<2>(best)};
    out.emplace_back(std::get<0>(best), std::move(e));
  }
  return out;
}

std::optional<Embedding> match_cycle(const BinMatrix& f) {
  const int k = f.n_rows();
  if (k < 3 || f.n_cols() != k) return std::nullopt;
  std::vector<int> col_ids(k);
  for (int j = 0; j < k; ++j) col_ids[j] = j + 1;
  std::vector<int> r, c;
  if (!walk_cycle(f.rows(), col_ids, r, c)) return std::nullopt;
  Embedding e;
  for (int i = 0; i < k; ++i) {
    e.rho.push_back(r[i] + 1);
    e.sigma.push_back(c[i]);
  }
  return e;
}

namespace {

Embedding swap(const Embedding& e) { return {e.sigma, e.rho}; }

// Parameterized members of one family matching f exactly up to configuration.
std::optional<std::pair<CatalogId, Embedding>> classify_param(const BinMatrix& f, std::string_view fam, int k_max) {
  auto within = [&](int k) { return k_max <= 0 || k <= k_max; };
  if (fam == "M_I") {
    if (!within(f.n_rows())) return std::nullopt;
    if (auto e = match_cycle(f)) return std::make_pair(CatalogId{"M_I", f.n_rows(), {}}, *e);
    return std::nullopt;
  }
  bool transposed = fam.back() == 'T';
  BinMatrix g = transposed ? transpose(f) : f;
  int k = g.n_rows();
  if (k < 3 || g.n_cols() != k + 1 || !within(k)) return std::nullopt;
  auto cands = match_cycle_star(g);
  std::string base(transposed ? fam.substr(0, fam.size() - 1) : fam);
  for (auto& [a, e] : cands) {
    bool ok = false;
    CatalogId id{std::string(fam), k, {}};
    if (base == "aM_I*") {
      ok = in_a_set(a, k);
      id.a = a;
    } else if (base == "M_I*") {
      ok = a == zeros(k);
    } else if (base == "co_M_I*") {
      ok = a == ones(k);
    }
    if (ok) return std::make_pair(id, transposed ? swap(e) : e);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<CatalogId, Embedding>> classify_in(const BinMatrix& f, std::string_view name, int k_max) {
  std::vector<std::string> fixed;
  std::vector<std::string> params;
  if (name == "ForbRow") {
    fixed = {"M_IV", "co_M_IV", "M_V*", "co_M_V*"};
    params = {"aM_I*"};
  } else if (name == "F_DCircR" || name == "F_DCircR_inf") {
    fixed = {"Z1*", "Z2*", "Z3*", "Z4*", "Z5", "Z5T", "Z6", "Z7", "Z8", "coZ1*", "coZ2*", "coZ4*", "coZ6"};
    if (name == "F_DCircR_inf") params = {"M_I*", "co_M_I*"};
  } else if (name == "F_CCO" || name == "F_CCO_inf") {
    fixed = {"Z2*", "Z3*", "Z4*", "Z5", "coZ2*", "coZ4*", "Z2*T", "Z3*T", "Z4*T", "Z5T", "coZ2*T", "coZ4*T"};
    if (name == "F_CCO_inf") params = {"M_I*", "co_M_I*", "M_I*T", "co_M_I*T"};
  } else if (name == "F_DIntR" || name == "F_DIntR_inf") {
    fixed = {"Z1", "Z2", "Z3", "Z2T", "Z3T"};
    if (name == "F_DIntR_inf") {
      fixed.push_back("Z1T");
      params = {"M_I"};
    }
  } else {
    throw std::invalid_argument("unknown family: " + std::string(name));
  }
  for (const auto& n : fixed) {
    BinMatrix g = generate({n, 0, {}});
    if (g.n_rows() != f.n_rows() || g.n_cols() != f.n_cols() || g.ones() != f.ones()) continue;
    if (auto e = find_configuration(f, g)) return std::make_pair(CatalogId{n, 0, {}}, *e);
  }
  for (const auto& p : params)
    if (auto r = classify_param(f, p, k_max)) return r;
  return std::nullopt;
}

std::optional<CatalogId> classify(const BinMatrix& f, int k_max) {
  for (const auto& n : fixed_names()) {
    BinMatrix g = generate({n, 0, {}});
    if (g.n_rows() != f.n_rows() || g.n_cols() != f.n_cols() || g.ones() != f.ones()) continue;
    if (find_configuration(f, g)) return CatalogId{n, 0, {}};
  }
  for (const char* p : {"M_I", "aM_I*", "M_I*T", "co_M_I*T"})
    if (auto r = classify_param(f, p, k_max)) return r->first;
  return std::nullopt;
}

std::optional<std::pair<CatalogId, Embedding>> find_member(const BinMatrix& host, std::string_view name, int k_max) {
  for (const auto& [id, g] : family(name, k_max))
    if (auto e = find_configuration(host, g)) return std::make_pair(id, *e);
  return std::nullopt;
}

std::string senary_complement(const std::string& lambda) {
  std::string out = lambda;
  for (char& d : out) {
    if (d < '0' || d > '5') throw std::invalid_argument("senary digit expected");
    int v = d - '0';
    d = static_cast<char>('0' + (v ^ 1));
  }
  return out;
}

BinMatrix q_matrix(int j, int i, int k) {
  if (k < 3 || i < 1 || i > k || j < 0 || j > 5) throw std::invalid_argument("bad Q parameters");
  int ip1 = i % k + 1;
  int n = k + 1;
  auto all_but = [&](std::initializer_list<int> skip) {
    Row r;
    for (int c = 1; c <= n; ++c)
      if (std::find(skip.begin(), skip.end(), c) == skip.end()) r.push_back(c);
    return r;
  };
  auto sorted = [](Row r) {
    std::sort(r.begin(), r.end());
    return r;
  };
  BinMatrix base;
  switch (j / 2) {
    case 0: base = BinMatrix(n, {sorted({i, ip1})}); break;
    case 1: base = BinMatrix(n, {all_but({n}), all_but({i, ip1, n})}); break;
    default: base = BinMatrix(n, {all_but({ip1}), Row{i}}); break;
  }
  return j % 2 ? complement(base) : base;
}

BinMatrix r_of(const std::string& lambda) {
  const int k = static_cast<int>(lambda.size());
  if (k < 3) throw std::invalid_argument("R(lambda) needs |lambda| >= 3");
  BinMatrix out(0, k + 1);
  for (int i = 1; i <= k; ++i) {
    char d = lambda[i - 1];
    if (d < '0' || d > '5') throw std::invalid_argument("senary digit expected");
    out = vstack(out, q_matrix(d - '0', i, k));
  }
  return out;
}

BinMatrix u_matrix(int j, int i) {
  BinMatrix miv = generate({"M_IV", 0, {}});
  auto row_of = [&](int r) { return select_rows(miv, {r}); };
  if (j == 0 || j == 1) {
    if (i < 1 || i > 4) throw std::invalid_argument("U_0/U_1 need i in [4]");
    BinMatrix b = row_of(i);
    return j ? complement(b) : b;
  }
  if (j == 2 || j == 3) {
    if (i < 1 || i > 3) throw std::invalid_argument("U_2/U_3 need i in [3]");
    int a = i % 3 + 1;
    int b = (i + 1) % 3 + 1;
    BinMatrix m = vstack(complement(row_of(a)), row_of(b));
    return j == 3 ? complement(m) : m;
  }
  if (j == 4 || j == 5) {
    if (i != 3) throw std::invalid_argument("U_4/U_5 defined only for i = 3");
    BinMatrix m = BinMatrix::from_strings({"111110", "000010"});
    return j == 5 ? complement(m) : m;
  }
  throw std::invalid_argument("bad U parameters");
}

bool w_legal(const std::string& lambda) {
  if (lambda.size() != 4) return false;
  for (char d : lambda)
    if (d < '0' || d > '5') return false;
  return lambda[0] <= '3' && lambda[1] <= '3' && lambda[3] <= '1';
}

BinMatrix w_of(const std::string& lambda) {
  if (!w_legal(lambda)) throw std::invalid_argument("illegal W parameter: " + lambda);
  BinMatrix out(0, 6);
  for (int i = 1; i <= 4; ++i) out = vstack(out, u_matrix(lambda[i - 1] - '0', i));
  return out;
}

BinMatrix x_of(int i, const Bits& alpha) {
  if (i < 1 || i > 3 || alpha.size() != 4 || !is_bits(alpha)) throw std::invalid_argument("bad X parameters");
  std::string r5(6, '0'), r6(6, '0');
  r5[2 * i - 2] = r5[2 * i - 1] = '1';
  for (int t = 0; t < 4; ++t) {
    int col = (2 * i + t) % 6;  // 0-based index of column 2i+1+t (mod 6)
    r5[col] = r6[col] = alpha[t];
  }
  auto m = fixed_table().at("M_IV");
  m.push_back(r5);
  m.push_back(r6);
  return BinMatrix::from_strings(m);
}

BinMatrix y_of(const Bits& gamma) {
  if (gamma.size() != 3 || !is_bits(gamma)) throw std::invalid_argument("bad Y parameter");
  std::string r5 = {gamma[0], '1', gamma[1], '1', gamma[2], '1'};
  std::string r6 = {gamma[0], '0', gamma[1], '0', gamma[2], '0'};
  auto m = fixed_table().at("M_IV");
  m.push_back(r5);
  m.push_back(r6);
  return BinMatrix::from_strings(m);
}

}  // namespace dcirc
