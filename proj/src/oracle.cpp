#include <algorithm>
#include <atomic>
#include <numeric>

#include "dcirc/oracle.hpp"

namespace dcirc {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::consecutive_ones:
      return "consecutive_ones";
    case Property::circular_ones:
      return "circular_ones";
    case Property::d_interval:
      return "d_interval";
    case Property::d_circular:
      return "d_circular";
  }
  return "?";
}

std::optional<Property> property_from_string(std::string_view s) {
  if (s == "consecutive_ones" || s == "c1") return Property::consecutive_ones;
  if (s == "circular_ones" || s == "circ1") return Property::circular_ones;
  if (s == "d_interval" || s == "dint") return Property::d_interval;
  if (s == "d_circular" || s == "dcirc") return Property::d_circular;
  return std::nullopt;
}

namespace {

bool circular_property(Property p) { return p == Property::circular_ones || p == Property::d_circular; }

void check_guard(const BinMatrix& m) {
  if (m.n_cols() > kMaxOracleCols)
    throw SizeGuardError("oracle: " + std::to_string(m.n_cols()) + " columns exceed the guard of " +
                         std::to_string(kMaxOracleCols));
}

// Column orders are split into blocks by their first two entries, blocks in
// lexicographic order. Circular properties are invariant under rotation, so
// only orders starting with column 1 are tried; the lexicographically first
// witness always starts with column 1 anyway.
std::vector<std::vector<int>> prefixes(int n, bool circular) {
  std::vector<std::vector<int>> out;
  if (n <= 1) {
    out.push_back(n == 1 ? std::vector<int>{1} : std::vector<int>{});
    return out;
  }
  for (int a = 1; a <= (circular ? 1 : n); ++a)
    for (int b = 1; b <= n; ++b)
      if (b != a) out.push_back({a, b});
  return out;
}

std::optional<ColumnOrder> first_in_block(const BinMatrix& m, Property p, const std::vector<int>& prefix) {
  const int n = m.n_cols();
  std::vector<int> rest;
  for (int c = 1; c <= n; ++c)
    if (std::find(prefix.begin(), prefix.end(), c) == prefix.end()) rest.push_back(c);
  ColumnOrder ord;
  do {
    ord.perm = prefix;
    ord.perm.insert(ord.perm.end(), rest.begin(), rest.end());
    if (verify_order(m, ord, p)) return ord;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

OracleVerdict verdict_of(std::optional<ColumnOrder> ord) {
  OracleVerdict v;
  v.holds = ord.has_value();
  if (ord) v.witness = *ord;
  return v;
}

}  // namespace

OracleVerdict brute_property_serial(const BinMatrix& m, Property p) {
  check_guard(m);
  for (const auto& pre : prefixes(m.n_cols(), circular_property(p)))
    if (auto ord = first_in_block(m, p, pre)) return verdict_of(ord);
  return verdict_of(std::nullopt);
}

OracleVerdict brute_property(const BinMatrix& m, Property p) {
  check_guard(m);
  const auto pre = prefixes(m.n_cols(), circular_property(p));
  const int blocks = static_cast<int>(pre.size());
  std::vector<std::optional<ColumnOrder>> found(blocks);
  std::atomic<int> best{blocks};
#pragma omp parallel for schedule(dynamic) if (m.n_cols() >= 7)
  for (int b = 0; b < blocks; ++b) {
    if (b > best.load()) continue;
    found[b] = first_in_block(m, p, pre[b]);
    if (found[b]) {
      int cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
    }
  }
  return verdict_of(best.load() < blocks ? found[best.load()] : std::nullopt);
}

OracleVerdict brute_cco(const BinMatrix& m) {
  if (m.n_rows() > kMaxCcoRows || m.n_cols() > kMaxCcoCols)
    throw SizeGuardError("brute_cco: " + std::to_string(m.n_rows()) + "x" + std::to_string(m.n_cols()) +
                         " exceeds the guard of " + std::to_string(kMaxCcoRows) + "x" + std::to_string(kMaxCcoCols));
  // column orders making every row a circular interval, in lexicographic order
  std::vector<ColumnOrder> cols;
  ColumnOrder ord = identity_order(m.n_cols());
  do {
    if (verify_circular_ones_order(m, ord)) cols.push_back(ord);
  } while (std::next_permutation(ord.perm.begin(), ord.perm.end()));

  const int blocks = static_cast<int>(cols.size());
  std::vector<std::optional<Biorder>> found(blocks);
  std::atomic<int> best{blocks};
#pragma omp parallel for schedule(dynamic) if (blocks >= 64)
  for (int b = 0; b < blocks; ++b) {
    if (b > best.load()) continue;
    // every condition is invariant under rotating the row order, so row 1 stays first
    std::vector<int> rest(std::max(m.n_rows() - 1, 0));
    std::iota(rest.begin(), rest.end(), 2);
    do {
      Biorder bo;
      if (m.n_rows() > 0) bo.row_order.push_back(1);
      bo.row_order.insert(bo.row_order.end(), rest.begin(), rest.end());
      bo.col_order = cols[b];
      if (verify_cco_biorder(m, bo)) {
        found[b] = bo;
        break;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (found[b]) {
      int cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
    }
  }
  OracleVerdict v;
  v.holds = best.load() < blocks;
  if (v.holds) v.witness = *found[best.load()];
  return v;
}

bool verify_bimodel(const Bigraph& g, const Bimodel& bm) {
  const Rational& c = bm.circumference;
  if (c <= 0 || bm.family1.size() != g.side_x.size() || bm.family2.size() != g.side_y.size()) return false;
  auto in_range = [&](const std::vector<Arc>& f) {
    return std::all_of(f.begin(), f.end(), [&](const Arc& a) {
      return a.start >= 0 && a.start < c && a.end >= 0 && a.end < c;
    });
  };
  if (!in_range(bm.family1) || !in_range(bm.family2)) return false;
  for (std::size_t i = 0; i < bm.family1.size(); ++i) {
    const Row& nb = g.adj[i];
    for (std::size_t j = 0; j < bm.family2.size(); ++j) {
      bool edge = std::binary_search(nb.begin(), nb.end(), static_cast<int>(j) + 1);
      if (edge != arcs_intersect(bm.family1[i], bm.family2[j], c)) return false;
    }
  }
  auto proper = [&](const std::vector<Arc>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j)
        if (i != j && !(f[i] == f[j]) && arc_within(f[i], f[j], c)) return false;
    return true;
  };
  return proper(bm.family1) && proper(bm.family2);
}

bool verify_interval_bimodel(const Bigraph& g, const IntervalBimodel& bm) {
  if (bm.family1.size() != g.side_x.size() || bm.family2.size() != g.side_y.size()) return false;
  auto ordered = [](const std::vector<Interval>& f) {
    return std::all_of(f.begin(), f.end(), [](const Interval& v) { return v.lo <= v.hi; });
  };
  if (!ordered(bm.family1) || !ordered(bm.family2)) return false;
  for (std::size_t i = 0; i < bm.family1.size(); ++i) {
    const Row& nb = g.adj[i];
    const Interval& a = bm.family1[i];
    for (std::size_t j = 0; j < bm.family2.size(); ++j) {
      const Interval& b = bm.family2[j];
      bool edge = std::binary_search(nb.begin(), nb.end(), static_cast<int>(j) + 1);
      if (edge != (a.lo <= b.hi && b.lo <= a.hi)) return false;
    }
  }
  auto proper = [](const std::vector<Interval>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j)
        if (i != j && !(f[i] == f[j]) && f[j].lo <= f[i].lo && f[i].hi <= f[j].hi) return false;
    return true;
  };
  return proper(bm.family1) && proper(bm.family2);
}

bool member_fails_property(const CatalogId& id, std::string_view family) {
  BinMatrix f = generate(id);
  if (family == "F_CCO" || family == "F_CCO_inf") {
    if (f.n_rows() > kMaxCcoRows || f.n_cols() > kMaxCcoCols) return true;
    return !brute_cco(f).holds;
  }
  Property p;
  if (family == "ForbRow")
    p = Property::circular_ones;
  else if (family == "F_DCircR" || family == "F_DCircR_inf")
    p = Property::d_circular;
  else if (family == "F_DIntR" || family == "F_DIntR_inf")
    p = Property::d_interval;
  else
    return false;
  if (f.n_cols() > kMaxOracleCols) return true;
  return !brute_property(f, p).holds;
}

bool verify_certificate(const BinMatrix& host, const NegCertificate& c, std::string_view family) {
  try {
    if (!in_family(c.id, family)) return false;
    if (!certificate_holds(host, c)) return false;
    return member_fails_property(c.id, family);
  } catch (const std::exception&) {
    return false;
  }
}

bool verify_certificate(const Bigraph& host, const SubgraphCertificate& c, std::string_view family) {
  try {
    BinMatrix m = biadjacency(host);
    if (!verify_certificate(m, NegCertificate{c.id, c.emb, {}}, family)) return false;
    if (c.name != forbidden_graph_name(c.id)) return false;
    std::vector<std::string> expect;
    for (int r : c.emb.rho) expect.push_back(host.side_x.at(r - 1));
    for (int col : c.emb.sigma) expect.push_back(host.side_y.at(col - 1));
    if (expect != c.vertex_map) return false;
    // structural check on the graph itself, independent of the matrix round-trip
    Graph g = as_graph(host);
    std::vector<int> image;
    for (int r : c.emb.rho) image.push_back(r - 1);
    for (int col : c.emb.sigma) image.push_back(static_cast<int>(host.side_x.size()) + col - 1);
    return find_isomorphism(forbidden_graph(c.id), induced_subgraph(g, image)).has_value();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace dcirc
