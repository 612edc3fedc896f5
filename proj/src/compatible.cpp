#include "dcirc/compatible.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dcirc/catalog.hpp"
#include "dcirc/d_circular.hpp"
#include "dcirc/oracle.hpp"

namespace dcirc {

namespace {

std::vector<int> iota_from1(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

bool nontrivial(const Row& r, int n) { return !r.empty() && static_cast<int>(r.size()) < n; }

NegCertificate make_cert(const CatalogId& id, const Embedding& emb, std::string note) {
  return NegCertificate{id, emb, std::move(note)};
}

// Certificate for a small matrix x embedded at emb: x itself when it is a family
// member, else the preferred member inside it, else any member inside it.
std::optional<NegCertificate> search_inside(const BinMatrix& x, const Embedding& emb, std::string_view fam,
                                            const std::optional<CatalogId>& preferred, const std::string& note) {
  if (auto hit = classify_in(x, fam, 0)) return make_cert(hit->first, compose(emb, hit->second), note);
  if (preferred) {
    if (auto e = find_configuration(x, generate(*preferred))) return make_cert(*preferred, compose(emb, *e), note);
  }
  if (auto hit = find_member(x, fam, std::max(3, std::min(x.n_rows(), x.n_cols())))) {
    return make_cert(hit->first, compose(emb, hit->second), note + " (searched)");
  }
  return std::nullopt;
}

// D-circular certificate (in F_DCircR^inf) to one in F_DIntR^inf, embeddings in host.
NegCertificate dcirc_to_dint(const NegCertificate& c, const BinMatrix& host) {
  BinMatrix f = generate(c.id);
  const int k = c.id.k;
  if (c.id.family == "M_I*") {
    Embedding e{iota_from1(k), iota_from1(k)};
    return make_cert({"M_I", k}, compose(c.emb, e), "M_I*(k) without its empty column");
  }
  if (c.id.family == "co_M_I*" && k >= 4) {
    Embedding e{{1, 2, 3, k}, {k + 1, 1, 2}};
    if (submatrix(f, e) == generate({"Z3"})) return make_cert({"Z3"}, compose(c.emb, e), "co M_I*(k) window");
  }
  auto r = search_inside(submatrix(host, c.emb), c.emb, "F_DIntR_inf", std::nullopt, "inside " + to_string(c.id));
  if (!r) throw std::logic_error("no D-interval obstruction inside " + to_string(c.id));
  return *r;
}

// D-circular certificate to one in F_CCO^inf (members of both pass unchanged).
NegCertificate dcirc_to_cco(const NegCertificate& c, const BinMatrix& host) {
  if (in_family(c.id, "F_CCO_inf")) return c;
  std::optional<CatalogId> pref;
  const std::string& fam = c.id.family;
  if (fam == "Z1*" || fam == "Z6" || fam == "Z7") pref = CatalogId{"co_M_I*T", 3};
  if (fam == "coZ1*" || fam == "coZ6") pref = CatalogId{"M_I*T", 3};
  if (fam == "Z8") pref = CatalogId{"Z2*T"};
  auto r = search_inside(submatrix(host, c.emb), c.emb, "F_CCO_inf", pref, "inside " + to_string(c.id));
  if (!r) throw std::logic_error("no CCO obstruction inside " + to_string(c.id));
  return *r;
}

// CCO on a matrix without all-1 rows unless it also has an all-0 row.
CCOResult cco_core(const BinMatrix& m) {
  CCOResult out;
  const int n = m.n_cols();
  int zero_row = 0;
  bool trivial = false;
  for (int i = 1; i <= m.n_rows(); ++i) {
    if (m.row(i).empty() && !zero_row) zero_row = i;
    trivial = trivial || !nontrivial(m.row(i), n);
  }
  BinMatrix w = trivial ? pad_trivial(m, 0) : m;
  DCircResult d = d_circular(w);
  if (d.ok()) {
    Biorder b = monotone_circular_biorder(w, *d.order, &out.rotation);
    if (trivial) {
      auto& p = b.col_order.perm;
      p.erase(std::find(p.begin(), p.end(), n + 1));
    }
    out.biorder = b;
    return out;
  }
  const NegCertificate& c = *d.cert;
  auto j = std::find(c.emb.sigma.begin(), c.emb.sigma.end(), n + 1);
  if (!trivial || j == c.emb.sigma.end()) {
    out.cert = dcirc_to_cco(c, m);
    return out;
  }
  // drop the padding column and add an all-0 row of m
  Embedding e = c.emb;
  std::size_t jj = j - c.emb.sigma.begin();
  e.sigma.erase(e.sigma.begin() + jj);
  e.rho.push_back(zero_row);
  std::optional<CatalogId> pref;
  const std::string& fam = c.id.family;
  if (fam == "Z1*" && jj == 3) pref = CatalogId{"co_M_I*T", 3};
  if (fam == "Z2*" && jj == 3) pref = CatalogId{"Z4*T"};
  if (fam == "Z3*" && jj == 3) pref = CatalogId{"coZ4*T"};
  if (fam == "Z4*" && jj == 4) pref = CatalogId{"Z2*T"};
  if (fam == "coZ4*" && jj == 2) pref = CatalogId{"Z3*T"};
  if (fam == "M_I*") pref = CatalogId{"M_I*T", c.id.k};
  auto r = search_inside(submatrix(m, e), e, "F_CCO_inf", pref, "from " + to_string(c.id) + " through the padding column");
  if (!r) throw std::logic_error("padding case without a CCO obstruction: " + to_string(c.id));
  out.cert = *r;
  return out;
}

}  // namespace

CatalogId transpose_id(const CatalogId& id) {
  CatalogId t = id;
  if (!t.family.empty() && t.family.back() == 'T')
    t.family.pop_back();
  else
    t.family.push_back('T');
  return t;
}

DIntResult d_interval(const BinMatrix& m) {
  DIntResult out;
  const int n = m.n_cols();
  DCircResult d = d_circular(star(m));
  if (d.ok()) {
    // rotate the empty column to the end, then drop it
    auto p = d.order->perm;
    std::rotate(p.begin(), std::find(p.begin(), p.end(), n + 1) + 1, p.end());
    p.pop_back();
    out.order = ColumnOrder{p};
    return out;
  }
  const NegCertificate& c = *d.cert;
  auto j = std::find(c.emb.sigma.begin(), c.emb.sigma.end(), n + 1);
  if (j == c.emb.sigma.end()) {
    out.cert = dcirc_to_dint(c, m);
    return out;
  }
  Embedding e = c.emb;
  e.sigma.erase(e.sigma.begin() + (j - c.emb.sigma.begin()));
  std::optional<CatalogId> pref;
  const std::string& fam = c.id.family;
  if (fam == "Z1*") pref = CatalogId{"Z1"};
  if (fam == "Z2*") pref = CatalogId{"Z2"};
  if (fam == "Z3*") pref = CatalogId{"Z3"};
  if (fam == "Z4*") pref = CatalogId{"Z2T"};
  if (fam == "coZ4*") pref = CatalogId{"Z3T"};
  if (fam == "M_I*") pref = CatalogId{"M_I", c.id.k};
  auto r = search_inside(submatrix(m, e), e, "F_DIntR_inf", pref, "from " + to_string(c.id) + " without the added column");
  if (!r) throw std::logic_error("no D-interval obstruction: " + to_string(c.id));
  out.cert = *r;
  return out;
}

BiorderResult lco(const BinMatrix& m) {
  BiorderResult out;
  DIntResult d = d_interval(m);
  if (!d.ok()) {
    out.cert = d.cert;
    return out;
  }
  const int n = m.n_cols();
  auto pos = positions(*d.order);
  struct Key {
    int d, e, row;
  };
  std::vector<Key> keys;
  std::vector<int> full, empty;
  for (int i = 1; i <= m.n_rows(); ++i) {
    const Row& r = m.row(i);
    if (r.empty()) {
      empty.push_back(i);
    } else if (static_cast<int>(r.size()) == n) {
      full.push_back(i);
    } else {
      int lo = n, hi = -1;
      for (int c : r) {
        lo = std::min(lo, pos[c]);
        hi = std::max(hi, pos[c]);
      }
      keys.push_back({lo, hi, i});
    }
  }
  std::stable_sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    return a.d != b.d ? a.d < b.d : a.e < b.e;
  });
  // Full rows force every nontrivial row to be a prefix or a suffix; they go
  // between the two blocks so each column stays an interval of the row order.
  Biorder b;
  b.col_order = *d.order;
  std::size_t t = 0;
  while (t < keys.size() && keys[t].d == 0) b.row_order.push_back(keys[t++].row);
  b.row_order.insert(b.row_order.end(), full.begin(), full.end());
  for (; t < keys.size(); ++t) b.row_order.push_back(keys[t].row);
  b.row_order.insert(b.row_order.end(), empty.begin(), empty.end());
  if (!verify_lco_biorder(m, b)) throw std::logic_error("lco: constructed biorder fails the check");
  out.biorder = b;
  return out;
}

Biorder monotone_circular_biorder(const BinMatrix& m, const ColumnOrder& ord, int* rotation) {
  const int n = m.n_cols();
  for (int i = 1; i <= m.n_rows(); ++i)
    if (!nontrivial(m.row(i), n)) throw std::invalid_argument("monotone_circular_biorder: trivial row " + std::to_string(i));
  auto ivs = rows_as_circular_intervals(m, ord);
  if (std::holds_alternative<int>(ivs)) throw std::invalid_argument("monotone_circular_biorder: order is not circular-ones");
  const auto& iv = std::get<std::vector<CircInterval>>(ivs);
  for (int t = 0; t < std::max(n, 1); ++t) {
    ColumnOrder o = ord;
    std::rotate(o.perm.begin(), o.perm.begin() + t, o.perm.end());
    auto pos = positions(o);
    struct Key {
      int d, f, row;
    };
    std::vector<Key> keys;
    for (int i = 1; i <= m.n_rows(); ++i) {
      int d = pos[iv[i - 1].left], e = pos[iv[i - 1].right];
      keys.push_back({d, e >= d ? e : e + n, i});
    }
    std::stable_sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      return a.d != b.d ? a.d < b.d : a.f < b.f;
    });
    Biorder b;
    b.col_order = o;
    for (const Key& k : keys) b.row_order.push_back(k.row);
    if (verify_monotone_circular_biorder(m, b)) {
      if (rotation) *rotation = t;
      return b;
    }
  }
  throw std::logic_error("monotone_circular_biorder: alignment fails for every rotation");
}

CCOResult cco(const BinMatrix& m) {
  const int n = m.n_cols();
  if (n == 0 || m.n_rows() == 0) {
    CCOResult out;
    out.biorder = Biorder{iota_from1(m.n_rows()), identity_order(n)};
    return out;
  }
  bool has_zero = false, has_one = false;
  for (const Row& r : m.rows()) {
    has_zero = has_zero || r.empty();
    has_one = has_one || static_cast<int>(r.size()) == n;
  }
  CCOResult out;
  if (has_zero || !has_one) {
    out = cco_core(m);
  } else {
    // only all-1 rows: work on the complement, whose biorders are the same
    BinMatrix mc = complement(m);
    out = cco_core(mc);
    if (out.cert) {
      BinMatrix x = submatrix(m, out.cert->emb);
      auto hit = classify_in(x, "F_CCO_inf", 0);
      if (!hit) throw std::logic_error("complemented certificate left F_CCO^inf");
      out.cert = make_cert(hit->first, compose(out.cert->emb, hit->second), "complement of " + to_string(out.cert->id));
    }
  }
  if (out.biorder && !verify_cco_biorder(m, *out.biorder)) throw std::logic_error("cco: constructed biorder fails the check");
  return out;
}

std::optional<NegCertificate> doubly_d_circular(const BinMatrix& m) {
  DCircResult a = d_circular(m);
  if (!a.ok()) return a.cert;
  DCircResult b = d_circular(transpose(m));
  if (b.ok()) return std::nullopt;
  NegCertificate c = *b.cert;
  return make_cert(transpose_id(c.id), Embedding{c.emb.sigma, c.emb.rho}, "from the transpose");
}

}  // namespace dcirc
