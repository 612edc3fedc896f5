#include "dcirc/bigraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "dcirc/compatible.hpp"
#include "dcirc/d_circular.hpp"
#include "dcirc/oracle.hpp"

namespace dcirc {

bool Graph::has_edge(int u, int v) const { return std::binary_search(adj.at(u).begin(), adj.at(u).end(), v); }

std::size_t Graph::n_edges() const {
  std::size_t s = 0;
  for (const auto& a : adj) s += a.size();
  return s / 2;
}

Graph make_graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges) {
  std::unordered_set<std::string> seen;
  for (const auto& s : names)
    if (!seen.insert(s).second) throw std::invalid_argument("repeated vertex name: " + s);
  Graph g;
  g.names = std::move(names);
  g.adj.assign(g.names.size(), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at " + g.names[u]);
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

Graph graph_from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> id;
  auto vertex = [&](const std::string& s) {
    auto [it, fresh] = id.emplace(s, static_cast<int>(names.size()));
    if (fresh) names.push_back(s);
    return it->second;
  };
  std::vector<std::pair<int, int>> e;
  for (const auto& [a, b] : edges) {
    int u = vertex(a);
    e.emplace_back(u, vertex(b));
  }
  return make_graph(std::move(names), e);
}

OddCycleError::OddCycleError(std::vector<int> c)
    : std::invalid_argument("graph is not bipartite (odd cycle of length " + std::to_string(c.size()) + ")"),
      cycle(std::move(c)) {}

Bipartition bipartition(const Graph& g) {
  std::vector<int> color(g.n(), -1), parent(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // both tree paths up to their last common ancestor, plus the edge uv
          std::vector<int> up_u{u};
          while (parent[up_u.back()] != -1) up_u.push_back(parent[up_u.back()]);
          std::set<int> on_u(up_u.begin(), up_u.end());
          std::vector<int> up_v{v};
          while (!on_u.count(up_v.back())) up_v.push_back(parent[up_v.back()]);
          int lca = up_v.back();
          std::vector<int> cycle;
          for (int x : up_u) {
            cycle.push_back(x);
            if (x == lca) break;
          }
          for (int i = static_cast<int>(up_v.size()) - 2; i >= 0; --i) cycle.push_back(up_v[i]);
          throw OddCycleError(std::move(cycle));
        }
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? b.x : b.y).push_back(v);
  return b;
}

Bigraph to_bigraph(const Graph& g, const Bipartition& b) {
  std::vector<int> side(g.n(), -1), index(g.n(), 0);
  auto place = [&](const std::vector<int>& vs, int s) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      int v = vs[i];
      if (v < 0 || v >= g.n() || side[v] != -1) throw std::invalid_argument("invalid bipartition");
      side[v] = s;
      index[v] = static_cast<int>(i);
    }
  };
  place(b.x, 0);
  place(b.y, 1);
  if (std::count(side.begin(), side.end(), -1)) throw std::invalid_argument("bipartition misses a vertex");
  Bigraph out;
  for (int v : b.x) out.side_x.push_back(g.names[v]);
  for (int v : b.y) out.side_y.push_back(g.names[v]);
  out.adj.resize(b.x.size());
  for (std::size_t i = 0; i < b.x.size(); ++i) {
    for (int w : g.adj[b.x[i]]) {
      if (side[w] == 0) throw std::invalid_argument("edge inside a side of the bipartition");
      out.adj[i].push_back(index[w] + 1);
    }
    std::sort(out.adj[i].begin(), out.adj[i].end());
  }
  for (int v : b.y)
    for (int w : g.adj[v])
      if (side[w] == 1) throw std::invalid_argument("edge inside a side of the bipartition");
  return out;
}

Bigraph to_bigraph(const Graph& g) { return to_bigraph(g, bipartition(g)); }

Graph as_graph(const Bigraph& g) {
  std::vector<std::string> names = g.side_x;
  names.insert(names.end(), g.side_y.begin(), g.side_y.end());
  std::vector<std::pair<int, int>> edges;
  const int nx = static_cast<int>(g.side_x.size());
  for (int i = 0; i < nx; ++i)
    for (int j : g.adj[i]) edges.emplace_back(i, nx + j - 1);
  return make_graph(std::move(names), edges);
}

Bigraph bigraph_of(const BinMatrix& m) {
  Bigraph g;
  for (int i = 1; i <= m.n_rows(); ++i) g.side_x.push_back("r" + std::to_string(i));
  for (int j = 1; j <= m.n_cols(); ++j) g.side_y.push_back("c" + std::to_string(j));
  g.adj = m.rows();
  return g;
}

BinMatrix biadjacency(const Bigraph& g) {
  if (g.adj.size() != g.side_x.size()) throw std::invalid_argument("adjacency does not match side_x");
  return BinMatrix(static_cast<int>(g.side_y.size()), g.adj);
}

namespace {

Rational wrap(Rational x, const Rational& c) {
  while (x < 0) x += c;
  while (x >= c) x -= c;
  return x;
}

// Offsets t/den for rank t = 1, 2, ... of the distinct keys, largest key first.
std::vector<int> ranks_desc(const std::vector<int>& group_of, const std::vector<int>& key) {
  std::map<int, std::set<int, std::greater<>>> keys;
  for (std::size_t i = 0; i < key.size(); ++i) keys[group_of[i]].insert(key[i]);
  std::vector<int> out(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    const auto& s = keys[group_of[i]];
    out[i] = static_cast<int>(std::distance(s.begin(), s.find(key[i]))) + 1;
  }
  return out;
}

}  // namespace

Rational arc_length(const Arc& a, const Rational& c) { return wrap(a.end - a.start, c); }

bool arc_has_point(const Arc& a, const Rational& x, const Rational& c) {
  return wrap(x - a.start, c) <= arc_length(a, c);
}

bool arcs_intersect(const Arc& a, const Arc& b, const Rational& c) {
  return arc_has_point(a, b.start, c) || arc_has_point(b, a.start, c);
}

bool arc_within(const Arc& inner, const Arc& outer, const Rational& c) {
  return wrap(inner.start - outer.start, c) + arc_length(inner, c) <= arc_length(outer, c);
}

Bimodel build_bimodel(const BinMatrix& m, const ColumnOrder& ord) {
  const int n = m.n_cols(), p = m.n_rows();
  for (int i = 1; i <= p; ++i)
    if (m.is_trivial_row(i)) throw std::invalid_argument("build_bimodel: trivial row " + std::to_string(i));
  auto ivs = rows_as_circular_intervals(m, ord);
  if (std::holds_alternative<int>(ivs)) throw std::invalid_argument("build_bimodel: order is not circular-ones");
  const auto& iv = std::get<std::vector<CircInterval>>(ivs);
  const std::vector<int> pos = positions(ord);
  std::vector<int> a(p), b(p), len(p);
  for (int i = 0; i < p; ++i) {
    a[i] = pos[iv[i].left];
    b[i] = pos[iv[i].right];
    len[i] = (b[i] - a[i] + n) % n;
  }
  // nested arcs of a D-circular order share an endpoint
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (i == j || (a[i] == a[j] && b[i] == b[j])) continue;
      bool within = (a[i] - a[j] + n) % n + len[i] <= len[j];
      if (within && a[i] != a[j] && b[i] != b[j])
        throw std::logic_error("build_bimodel: nested rows " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " share no endpoint");
    }
  const long long den = 2LL * (p + 2);
  std::vector<int> dl = ranks_desc(a, len), dr = ranks_desc(b, len);
  Bimodel bm;
  bm.circumference = Rational(std::max(n, 1));
  for (int i = 0; i < p; ++i)
    bm.family1.push_back({wrap(Rational(a[i]) - Rational(dl[i], den), bm.circumference),
                          wrap(Rational(b[i]) + Rational(dr[i], den), bm.circumference)});
  for (int j = 1; j <= n; ++j) bm.family2.push_back({Rational(pos[j]), Rational(pos[j])});
  if (!verify_bimodel(bigraph_of(m), bm)) throw std::logic_error("build_bimodel: model fails verification");
  return bm;
}

IntervalBimodel build_interval_bimodel(const BinMatrix& m, const ColumnOrder& ord) {
  const int n = m.n_cols(), p = m.n_rows();
  if (!is_permutation(ord.perm, n)) throw std::invalid_argument("build_interval_bimodel: bad order");
  const std::vector<int> pos = positions(ord);
  std::vector<int> lo(p, n), hi(p, n);
  std::vector<int> nonempty;
  for (int i = 0; i < p; ++i) {
    const Row& r = m.row(i + 1);
    if (r.empty()) continue;
    if (!is_linear_interval(r, pos)) throw std::invalid_argument("build_interval_bimodel: row not an interval");
    lo[i] = n;
    hi[i] = -1;
    for (int c : r) {
      lo[i] = std::min(lo[i], pos[c]);
      hi[i] = std::max(hi[i], pos[c]);
    }
    nonempty.push_back(i);
  }
  for (int i : nonempty)
    for (int j : nonempty) {
      bool within = lo[j] <= lo[i] && hi[i] <= hi[j] && (lo[i] != lo[j] || hi[i] != hi[j]);
      if (within && lo[i] != lo[j] && hi[i] != hi[j])
        throw std::logic_error("build_interval_bimodel: nested rows share no endpoint");
    }
  std::vector<int> len(p);
  for (int i = 0; i < p; ++i) len[i] = hi[i] - lo[i];
  const long long den = 2LL * (p + 2);
  std::vector<int> dl = ranks_desc(lo, len), dr = ranks_desc(hi, len);
  IntervalBimodel bm;
  for (int i = 0; i < p; ++i) {
    if (m.row(i + 1).empty())
      bm.family1.push_back({Rational(n), Rational(n)});
    else
      bm.family1.push_back({Rational(lo[i]) - Rational(dl[i], den), Rational(hi[i]) + Rational(dr[i], den)});
  }
  for (int j = 1; j <= n; ++j) bm.family2.push_back({Rational(pos[j]), Rational(pos[j])});
  if (!verify_interval_bimodel(bigraph_of(m), bm))
    throw std::logic_error("build_interval_bimodel: model fails verification");
  return bm;
}

std::string forbidden_graph_name(const CatalogId& id) {
  const std::string& f = id.family;
  const std::string cyc = "C_" + std::to_string(2 * id.k);
  if (f == "Z1" || f == "Z1T") return "bipartite claw";
  if (f == "Z2" || f == "Z2T") return "bipartite net";
  if (f == "Z3" || f == "Z3T") return "bipartite tent";
  if (f == "M_I") return cyc;
  if (f == "M_I*" || f == "M_I*T") return cyc + " plus an isolated vertex";
  if (f == "co_M_I*" || f == "co_M_I*T") return "bipartite complement of " + cyc + " plus an isolated vertex";
  return "bipartite graph of " + to_string(id);
}

Graph forbidden_graph(const CatalogId& id) { return as_graph(bigraph_of(generate(id))); }

SubgraphCertificate subgraph_certificate(const Bigraph& g, const NegCertificate& c) {
  SubgraphCertificate s{c.id, forbidden_graph_name(c.id), c.emb, {}};
  for (int r : c.emb.rho) s.vertex_map.push_back(g.side_x.at(r - 1));
  for (int col : c.emb.sigma) s.vertex_map.push_back(g.side_y.at(col - 1));
  return s;
}

PcabResult recognize_pcab(const Bigraph& g) {
  const BinMatrix m = biadjacency(g);
  CCOResult r = cco(m);
  if (!r.ok()) return subgraph_certificate(g, *r.cert);
  if (m.n_cols() == 0) {
    // no side_y vertices: any family of equal points will do
    Bimodel bm;
    bm.family1.assign(m.n_rows(), Arc{Rational(0), Rational(0)});
    return bm;
  }
  bool zero = false, full = false;
  for (const Row& row : m.rows()) {
    zero = zero || row.empty();
    full = full || static_cast<int>(row.size()) == m.n_cols();
  }
  // trivial rows go through M^[u]; the arc of the added column is dropped afterwards
  const bool padded = zero || full;
  const BinMatrix w = padded ? pad_trivial(m, zero ? 0 : 1) : m;
  DCircResult d = d_circular(w);
  if (!d.ok()) throw std::logic_error("recognize_pcab: compatible matrix without a D-circular order");
  Bimodel bm = build_bimodel(w, *d.order);
  if (padded) bm.family2.pop_back();
  if (!verify_bimodel(g, bm)) throw std::logic_error("recognize_pcab: model fails verification");
  return bm;
}

PcabResult recognize_pcab(const Graph& g) { return recognize_pcab(to_bigraph(g)); }

PibResult recognize_pib(const Bigraph& g) {
  const BinMatrix m = biadjacency(g);
  DIntResult r = d_interval(m);
  if (!r.ok()) return subgraph_certificate(g, *r.cert);
  IntervalBimodel bm = build_interval_bimodel(m, *r.order);
  if (!verify_interval_bimodel(g, bm)) throw std::logic_error("recognize_pib: model fails verification");
  return bm;
}

PibResult recognize_pib(const Graph& g) { return recognize_pib(to_bigraph(g)); }

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    names.push_back(g.names.at(vertices[i]));
    for (std::size_t j = 0; j < i; ++j)
      if (g.has_edge(vertices[i], vertices[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return make_graph(std::move(names), edges);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  const int n = a.n();
  if (b.n() != n || a.n_edges() != b.n_edges()) return std::nullopt;
  // joint colour refinement so colours are comparable across the two graphs
  std::vector<int> ca(n), cb(n);
  for (int v = 0; v < n; ++v) {
    ca[v] = static_cast<int>(a.adj[v].size());
    cb[v] = static_cast<int>(b.adj[v].size());
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> code;
    auto sig = [&](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> s;
      for (int w : g.adj[v]) s.push_back(c[w]);
      std::sort(s.begin(), s.end());
      return std::make_pair(c[v], s);
    };
    std::vector<int> na(n), nb(n);
    for (int v = 0; v < n; ++v) na[v] = code.try_emplace(sig(a, ca, v), static_cast<int>(code.size())).first->second;
    for (int v = 0; v < n; ++v) nb[v] = code.try_emplace(sig(b, cb, v), static_cast<int>(code.size())).first->second;
    bool stable = std::set<int>(na.begin(), na.end()).size() == std::set<int>(ca.begin(), ca.end()).size();
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  std::vector<int> sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  std::vector<int> iso(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(iso[u], w);
      if (!ok) continue;
      iso[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    iso[v] = -1;
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return iso;
}

}  // namespace dcirc
