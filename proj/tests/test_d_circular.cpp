#include <algorithm>
#include <random>

#include "brute.hpp"
#include "dcirc/d_circular.hpp"
#include "doctest.h"

using namespace dcirc;

namespace {
BinMatrix m_of(std::initializer_list<const char*> rows) {
  std::vector<std::string> v(rows.begin(), rows.end());
  return BinMatrix::from_strings(v);
}

bool d_order_holds(const BinMatrix& m, const ColumnOrder& o) {
  if (!is_permutation(o.perm, m.n_cols())) return false;
  auto pos = positions(o);
  BinMatrix d = d_operator(m);
  for (const Row& r : d.rows())
    if (!is_circular_interval(r, pos, m.n_cols())) return false;
  return true;
}

bool dcirc_cert_holds(const BinMatrix& m, const NegCertificate& c) {
  return in_family(c.id, "F_DCircR_inf") && certificate_holds(m, c);
}

void check_result(const BinMatrix& m) {
  DCircResult r = d_circular(m);
  bool expect = brute::d_property(m, true);
  INFO(brute::show(m));
  REQUIRE(r.ok() == expect);
  if (r.ok())
    CHECK(d_order_holds(m, *r.order));
  else
    CHECK(dcirc_cert_holds(m, *r.cert));
}

// Rows whose set is minimal or maximal among nontrivial rows first, stable.
BinMatrix zero_sort(const BinMatrix& m) {
  const int n = m.n_cols();
  auto nontriv = [&](const Row& r) { return !r.empty() && static_cast<int>(r.size()) < n; };
  std::vector<int> head, tail;
  for (int i = 1; i <= m.n_rows(); ++i) {
    const Row& r = m.row(i);
    bool mn = nontriv(r), mx = nontriv(r);
    for (const Row& s : m.rows()) {
      if (!nontriv(r) || !nontriv(s)) continue;
      if (s.size() < r.size() && brute::subset(s, r)) mn = false;
      if (r.size() < s.size() && brute::subset(r, s)) mx = false;
    }
    (mn || mx ? head : tail).push_back(i);
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return select_rows(m, head);
}

BinMatrix random_circular(std::mt19937& rng, int k, int n) {
  std::uniform_int_distribution<int> st(0, n - 1), ln(0, n);
  std::vector<int> perm(n);
  for (int c = 0; c < n; ++c) perm[c] = c + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Row> rows;
  for (int i = 0; i < k; ++i) {
    int s = st(rng), len = ln(rng);
    Row r;
    for (int t = 0; t < len; ++t) r.push_back(perm[(s + t) % n]);
    std::sort(r.begin(), r.end());
    rows.push_back(r);
  }
  return BinMatrix(n, rows);
}
}  // namespace

TEST_CASE("d and delta operator examples") {
  CHECK(d_operator(m_of({"100", "110"})) == m_of({"100", "110", "010"}));
  CHECK(find_configuration(d_operator(generate({"Z1*"})), generate({"M_I*", 3})).has_value());
  CHECK(d_operator(generate({"M_I", 3})) == generate({"M_I", 3}));
  CHECK(delta_operator(m_of({"100", "110", "111", "000"})) == m_of({"100", "110", "111", "000", "010"}));
  BinMatrix nest = m_of({"1000", "1100", "1110"});
  CHECK(delta_operator(nest) == m_of({"1000", "1100", "1110", "0110"}));
  CHECK(delta_operator(generate({"M_I", 3})) == generate({"M_I", 3}));
}

TEST_CASE("delta rows are d rows") {
  std::mt19937 rng(11);
  for (int t = 0; t < 400; ++t) {
    BinMatrix m = brute::random_matrix(rng, 2 + t % 5, 3 + t % 4);
    auto d = d_operator(m).rows();
    auto dl = delta_operator(m).rows();
    std::sort(d.begin(), d.end());
    std::sort(dl.begin(), dl.end());
    CHECK(std::includes(d.begin(), d.end(), dl.begin(), dl.end()));
  }
}

TEST_CASE("extremal rows") {
  auto id = identity_order(4);
  ExtremalInfo e = extremal_rows(m_of({"1000", "1100", "1110"}), id);
  CHECK(e.minimal == std::vector<int>{1});
  CHECK(e.maximal == std::vector<int>{3});
  CHECK(e.containment_pairs == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(!e.triple);
  e = extremal_rows(generate({"M_I", 3}), identity_order(3));
  CHECK(e.minimal == std::vector<int>{1, 2, 3});
  CHECK(e.maximal == std::vector<int>{1, 2, 3});
  CHECK(e.containment_pairs.empty());
  e = extremal_rows(m_of({"10000", "01000", "00100", "11110"}), identity_order(5));
  REQUIRE(e.triple);
  CHECK((*e.triple)[0] == 4);
  CHECK_THROWS(extremal_rows(m_of({"1100", "1100"}), id));
  CHECK_THROWS(extremal_rows(m_of({"1111"}), id));
}

TEST_CASE("extremal rows against brute force") {
  std::mt19937 rng(5);
  for (int t = 0; t < 600; ++t) {
    int n = 3 + t % 6;
    BinMatrix raw = random_circular(rng, 2 + t % 7, n);
    std::vector<Row> rows;
    for (const Row& r : raw.rows())
      if (!r.empty() && static_cast<int>(r.size()) < n && std::find(rows.begin(), rows.end(), r) == rows.end())
        rows.push_back(r);
    if (rows.empty()) continue;
    BinMatrix m(n, rows);
    auto ord = circular_ones(m);
    REQUIRE(ord.ok());
    ExtremalInfo e = extremal_rows(m, *ord.order);
    std::vector<int> mn, mx;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m.n_rows(); ++i) {
      bool a = true, b = true;
      for (int j = 1; j <= m.n_rows(); ++j) {
        if (j == i) continue;
        if (brute::subset(m.row(j), m.row(i))) a = false;
        if (brute::subset(m.row(i), m.row(j))) b = false;
      }
      if (a) mn.push_back(i);
      if (b) mx.push_back(i);
    }
    CHECK(e.minimal == mn);
    CHECK(e.maximal == mx);
    bool three = false;
    for (int g : mx) {
      int inside = 0;
      for (int f : mn)
        if (f != g && brute::subset(m.row(f), m.row(g))) {
          ++inside;
          pairs.emplace_back(f, g);
        }
      three = three || inside >= 3;
    }
    CHECK(e.triple.has_value() == three);
    if (!three) {
      auto got = e.containment_pairs;
      std::sort(got.begin(), got.end());
      std::sort(pairs.begin(), pairs.end());
      CHECK(got == pairs);
    }
  }
}

TEST_CASE("triple containment certificates") {
  BinMatrix a = m_of({"1110", "1000", "0100", "0010"});
  NegCertificate c = triple_containment_cert(a, identity_order(4), 1, 2, 3, 4);
  CHECK(c.id.family == "Z1*");
  CHECK(c.emb.sigma == std::vector<int>{1, 2, 3, 4});
  CHECK(certificate_holds(a, c));
  BinMatrix b = m_of({"11110", "11000", "01100", "00110"});
  c = triple_containment_cert(b, identity_order(5), 1, 2, 3, 4);
  CHECK(c.id.family == "coZ4*");
  CHECK(c.emb.sigma == std::vector<int>{3, 4, 5, 1, 2});
  CHECK(certificate_holds(b, c));
  CHECK_THROWS(triple_containment_cert(b, identity_order(5), 2, 1, 3, 4));
}

TEST_CASE("e matrix") {
  ExtremalInfo ext = extremal_rows(m_of({"100", "110"}), identity_order(3));
  AnnotatedMatrix e = e_matrix(m_of({"100", "110"}), 0, ext);
  CHECK(e.m == m_of({"100", "110", "010"}));
  CHECK(e.origin == std::vector<int>{1, 2, 2});
  BinMatrix mi = generate({"M_I", 4});
  CHECK(e_matrix(mi, 0, extremal_rows(mi, identity_order(4))).m == mi);
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    int n = 4 + t % 5;
    BinMatrix raw = random_circular(rng, 3 + t % 6, n);
    std::vector<Row> rows;
    for (const Row& r : raw.rows())
      if (!r.empty() && static_cast<int>(r.size()) < n && std::find(rows.begin(), rows.end(), r) == rows.end())
        rows.push_back(r);
    if (rows.empty()) continue;
    BinMatrix m(n, rows);
    auto ord = circular_ones(m);
    ExtremalInfo x = extremal_rows(m, *ord.order);
    if (x.triple) continue;
    for (int q : {0, 4}) CHECK(e_matrix(m, q, x).m.n_rows() <= (2 * q + 5) * m.n_rows());
  }
}

TEST_CASE("prefix recognizer") {
  auto r = recognize_prefix_d_circular(generate({"M_I", 3}), 0);
  REQUIRE(std::holds_alternative<ColumnOrder>(r));
  CHECK(d_order_holds(generate({"M_I", 3}), std::get<ColumnOrder>(r)));
  BinMatrix z = zero_sort(generate({"Z1*"}));
  r = recognize_prefix_d_circular(z, 0);
  REQUIRE(std::holds_alternative<NegCertificate>(r));
  auto fam = std::get<NegCertificate>(r).id.family;
  CHECK((fam == "Z1*" || fam == "coZ4*"));
  CHECK(certificate_holds(z, std::get<NegCertificate>(r)));
  BinMatrix small = m_of({"100", "110", "010"});
  CHECK(std::holds_alternative<ColumnOrder>(recognize_prefix_d_circular(small, 0)));
}

TEST_CASE("prefix recognizer fail index is least") {
  std::mt19937 rng(21);
  int fails = 0;
  for (int t = 0; t < 1500; ++t) {
    int n = 3 + t % 4;
    BinMatrix m = zero_sort(random_circular(rng, 2 + t % 6, n));
    auto r = recognize_prefix_d_circular(m, 0);
    int least = brute::least_failing_prefix(m, [](const BinMatrix& p) { return brute::d_property(p, true); });
    INFO(brute::show(m));
    if (auto* o = std::get_if<ColumnOrder>(&r)) {
      CHECK(least == 0);
      CHECK(d_order_holds(m, *o));
    } else if (auto* c = std::get_if<NegCertificate>(&r)) {
      CHECK(least > 0);
      CHECK(dcirc_cert_holds(m, *c));
    } else {
      ++fails;
      CHECK(std::get<int>(r) == least);
    }
  }
  CHECK(fails > 0);
}

TEST_CASE("cut and antishift") {
  BinMatrix m = m_of({"100", "010", "001"});
  CHECK(cut_and_antishift(m, 1) == m_of({"100"}));
  CHECK(cut_and_antishift(m, 3) == m_of({"001", "100", "010"}));
  CHECK_THROWS(cut_and_antishift(m, 4));
  std::mt19937 rng(8);
  for (int t = 0; t < 400; ++t) {
    BinMatrix x = brute::random_matrix(rng, 3 + t % 4, 4 + t % 3);
    auto pred = [](const BinMatrix& p) { return brute::d_property(p, true); };
    int i = brute::least_failing_prefix(x, pred);
    if (i == 0) continue;
    BinMatrix c = cut_and_antishift(x, i);
    CHECK(!pred(c));
    std::vector<int> rest;
    for (int j = 2; j <= c.n_rows(); ++j) rest.push_back(j);
    CHECK(pred(select_rows(c, rest)));
  }
}

TEST_CASE("d_circular examples") {
  auto r = d_circular(m_of({"100", "010", "001"}));
  REQUIRE(r.ok());
  CHECK(r.order->perm == std::vector<int>{1, 2, 3});
  r = d_circular(generate({"Z2*"}));
  REQUIRE(!r.ok());
  CHECK(r.cert->id.family == "Z2*");
  CHECK(r.cert->emb.rho == std::vector<int>{1, 2, 3, 4});
  CHECK(certificate_holds(generate({"Z2*"}), *r.cert));
  CHECK(d_circular(BinMatrix(0, 0)).ok());
  CHECK(d_circular(BinMatrix(3, 0)).ok());
}

TEST_CASE("d_circular against brute force, exhaustive 3x4") {
  for (int bits = 0; bits < (1 << 12); ++bits) {
    std::vector<Row> rows(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j)
        if (bits >> (i * 4 + j) & 1) rows[i].push_back(j + 1);
    check_result(BinMatrix(4, rows));
  }
}

TEST_CASE("d_circular against brute force, random") {
  std::mt19937 rng(17);
  int cut_path = 0;
  for (int t = 0; t < 2500; ++t) {
    int k = 2 + t % 6, n = 3 + t % 5;
    double p = 0.25 + 0.1 * (t % 5);
    BinMatrix m = t % 2 ? brute::random_matrix(rng, k, n, p) : random_circular(rng, k + 2, n);
    check_result(m);
    DCircResult r = d_circular(m);
    if (!r.ok() && r.cert->note == "cut-and-antishift") ++cut_path;
  }
  CHECK(cut_path > 0);
}

TEST_CASE("D(M) and Delta(M) lemmas") {
  std::mt19937 rng(23);
  for (int t = 0; t < 800; ++t) {
    BinMatrix m = brute::random_matrix(rng, 2 + t % 3, 3 + t % 3);
    CHECK(brute::d_property(m, true) == brute::circular(d_operator(m)));
    BinMatrix d = d_operator(m), dl = delta_operator(m);
    brute::any_order(m.n_cols(), [&](const std::vector<int>& pos) {
      auto all = [&](const BinMatrix& x) {
        for (const Row& r : x.rows())
          if (!brute::row_circular(r, pos, m.n_cols())) return false;
        return true;
      };
      CHECK(all(d) == all(dl));
      return false;
    });
  }
}

TEST_CASE("complement invariance") {
  std::mt19937 rng(29);
  for (int t = 0; t < 600; ++t) {
    BinMatrix m = brute::random_matrix(rng, 2 + t % 5, 3 + t % 4);
    CHECK(has_d_circular(m) == has_d_circular(complement(m)));
  }
}

TEST_CASE("forbrow to d-circular certificate") {
  BinMatrix iv = generate({"M_IV"});
  Embedding idn{{1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}};
  NegCertificate c = forbrow_to_dcirc_cert({"M_IV"}, idn, iv);
  CHECK(c.id.family == "Z6");
  CHECK(c.emb == Embedding{{4, 1, 2, 3}, {2, 4, 6, 1}});
  c = forbrow_to_dcirc_cert({"M_V*"}, {{1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}}, generate({"M_V*"}));
  CHECK(c.id.family == "Z2*");
  CHECK(c.emb == Embedding{{1, 2, 4, 3}, {1, 4, 5, 6}});
  CatalogId a4{"aM_I*", 4, "0011"};
  c = forbrow_to_dcirc_cert(a4, {{1, 2, 3, 4}, {1, 2, 3, 4, 5}}, generate(a4));
  CHECK(c.id.family == "Z3*");
  CHECK(c.emb == compose({{1, 2, 3, 4}, {2, 3, 4, 5}}, {{1, 3, 4, 2}, {1, 4, 2, 3}}));
  CHECK_THROWS(forbrow_to_dcirc_cert({"Z1"}, {}, generate({"Z1"})));
  for (const auto& [id, f] : family("ForbRow", 7)) {
    Embedding e;
    for (int i = 1; i <= f.n_rows(); ++i) e.rho.push_back(i);
    for (int j = 1; j <= f.n_cols(); ++j) e.sigma.push_back(j);
    INFO(to_string(id));
    NegCertificate x = forbrow_to_dcirc_cert(id, e, f);
    CHECK(dcirc_cert_holds(f, x));
    CHECK(x.note.find("searched") == std::string::npos);
  }
}

TEST_CASE("catalog members fail and are minimal") {
  for (const auto& [id, f] : family("F_DCircR_inf", 6)) {
    INFO(to_string(id));
    DCircResult r = d_circular(f);
    REQUIRE(!r.ok());
    CHECK(dcirc_cert_holds(f, *r.cert));
    if (f.n_cols() > 8) continue;
    for (int i = 1; i <= f.n_rows(); ++i) {
      std::vector<int> rho;
      for (int j = 1; j <= f.n_rows(); ++j)
        if (j != i) rho.push_back(j);
      CHECK(has_d_circular(select_rows(f, rho)));
    }
    for (int i = 1; i <= f.n_cols(); ++i) {
      std::vector<int> sg;
      for (int j = 1; j <= f.n_cols(); ++j)
        if (j != i) sg.push_back(j);
      CHECK(has_d_circular(select_cols(f, sg)));
    }
  }
}

TEST_CASE("long cycles and shuffled hosts") {
  for (int k : {10, 60, 300}) {
    BinMatrix m = generate({"M_I*", k});
    DCircResult r = d_circular(m);
    REQUIRE(!r.ok());
    CHECK(dcirc_cert_holds(m, *r.cert));
  }
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto fam = family("F_DCircR", 3);
    const auto& f = fam[t % fam.size()].second;
    int extra = t % 4;
    BinMatrix host = vstack(f, brute::random_matrix(rng, extra, f.n_cols()));
    std::vector<int> rho(host.n_rows()), sigma(host.n_cols());
    for (int i = 0; i < host.n_rows(); ++i) rho[i] = i + 1;
    for (int j = 0; j < host.n_cols(); ++j) sigma[j] = j + 1;
    std::shuffle(rho.begin(), rho.end(), rng);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    host = submatrix(host, {rho, sigma});
    DCircResult r = d_circular(host);
    REQUIRE(!r.ok());
    CHECK(dcirc_cert_holds(host, *r.cert));
  }
}
