#include <random>

#include "brute.hpp"
#include "dcirc/compatible.hpp"
#include "dcirc/d_circular.hpp"
#include "dcirc/oracle.hpp"
#include "doctest.h"

using namespace dcirc;

namespace {
BinMatrix m_of(std::initializer_list<const char*> rows) {
  std::vector<std::string> v(rows.begin(), rows.end());
  return BinMatrix::from_strings(v);
}

BinMatrix alignment_matrix() { return m_of({"1000", "1110", "0011", "1101"}); }

void check_dint(const BinMatrix& m) {
  INFO(brute::show(m));
  DIntResult r = d_interval(m);
  REQUIRE(r.ok() == brute::d_property(m, false));
  if (r.ok()) {
    CHECK(verify_order(m, *r.order, Property::d_interval));
  } else {
    CHECK(in_family(r.cert->id, "F_DIntR_inf"));
    CHECK(certificate_holds(m, *r.cert));
  }
}

void check_cco(const BinMatrix& m) {
  INFO(brute::show(m));
  CCOResult r = cco(m);
  bool expect = brute::compatible(m, true);
  REQUIRE(r.ok() == expect);
  CHECK(!doubly_d_circular(m).has_value() == expect);
  if (r.ok()) {
    CHECK(verify_cco_biorder(m, *r.biorder));
  } else {
    CHECK(in_family(r.cert->id, "F_CCO_inf"));
    CHECK(certificate_holds(m, *r.cert));
  }
}

BinMatrix all_bits(int k, int n, int bits) {
  std::vector<Row> rows(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      if (bits >> (i * n + j) & 1) rows[i].push_back(j + 1);
  return BinMatrix(n, rows);
}
}  // namespace

TEST_CASE("d_interval examples") {
  BinMatrix st = m_of({"100", "110", "111"});
  auto r = d_interval(st);
  REQUIRE(r.ok());
  CHECK(verify_order(st, identity_order(3), Property::d_interval));
  CHECK(verify_order(st, *r.order, Property::d_interval));
  r = d_interval(generate({"M_I", 3}));
  REQUIRE(!r.ok());
  CHECK(r.cert->id == CatalogId{"M_I", 3});
  r = d_interval(generate({"Z1"}));
  REQUIRE(!r.ok());
  CHECK(r.cert->id.family == "Z1");
  for (const auto& [id, f] : family("F_DIntR_inf", 6)) {
    INFO(to_string(id));
    auto x = d_interval(f);
    REQUIRE(!x.ok());
    CHECK(certificate_holds(f, *x.cert));
  }
}

TEST_CASE("d_interval against brute force") {
  for (int bits = 0; bits < (1 << 12); ++bits) check_dint(all_bits(3, 4, bits));
  std::mt19937 rng(41);
  for (int t = 0; t < 1500; ++t) check_dint(brute::random_matrix(rng, 2 + t % 5, 3 + t % 4, 0.3 + 0.1 * (t % 4)));
  for (int k : {8, 40}) {
    auto r = d_interval(generate({"M_I", k}));
    REQUIRE(!r.ok());
    CHECK(r.cert->id == CatalogId{"M_I", k});
    auto c = d_interval(generate({"co_M_I*", k}));
    REQUIRE(!c.ok());
    CHECK(certificate_holds(generate({"co_M_I*", k}), *c.cert));
  }
}

TEST_CASE("lco") {
  BinMatrix st = m_of({"100", "110", "011"});
  auto r = lco(st);
  REQUIRE(r.ok());
  CHECK(r.biorder->row_order == std::vector<int>{1, 2, 3});
  CHECK(r.biorder->col_order == identity_order(3));
  CHECK(!lco(generate({"M_I", 3})).ok());
  CHECK(lco(m_of({"0110"})).ok());
  // full rows sit between prefix rows and suffix rows
  BinMatrix pf = m_of({"111", "100", "011", "000"});
  r = lco(pf);
  REQUIRE(r.ok());
  CHECK(verify_lco_biorder(pf, *r.biorder));
  std::mt19937 rng(43);
  for (int t = 0; t < 1500; ++t) {
    BinMatrix m = brute::random_matrix(rng, 2 + t % 4, 2 + t % 4, 0.3 + 0.1 * (t % 5));
    INFO(brute::show(m));
    auto x = lco(m);
    REQUIRE(x.ok() == brute::compatible(m, false));
    if (x.ok()) CHECK(verify_lco_biorder(m, *x.biorder));
  }
}

TEST_CASE("monotone circular biorder") {
  BinMatrix mi = generate({"M_I", 3});
  auto ord = d_circular(mi).order;
  REQUIRE(ord);
  Biorder b = monotone_circular_biorder(mi, identity_order(3));
  CHECK(verify_monotone_circular_biorder(mi, b));
  BinMatrix nest = m_of({"110", "100"});
  b = monotone_circular_biorder(nest, identity_order(3));
  CHECK(b.row_order == std::vector<int>{2, 1});
  BinMatrix one = m_of({"0110"});
  CHECK(verify_monotone_circular_biorder(one, monotone_circular_biorder(one, identity_order(4))));
  BinMatrix fm = alignment_matrix();
  Biorder canon{{1, 2, 3, 4}, identity_order(4)};
  CHECK(!verify_monotone_circular_biorder(fm, canon));
  CHECK(!verify_cco_biorder(fm, canon));
  CHECK_THROWS(monotone_circular_biorder(m_of({"111", "100"}), identity_order(3)));
  CHECK_THROWS(verify_monotone_circular_biorder(m_of({"000"}), Biorder{{1}, identity_order(3)}));
  int rotated = 0;
  std::mt19937 rng(47);
  for (int t = 0; t < 800; ++t) {
    BinMatrix m = brute::random_matrix(rng, 2 + t % 6, 3 + t % 5, 0.4);
    bool triv = false;
    for (const Row& r : m.rows()) triv = triv || r.empty() || static_cast<int>(r.size()) == m.n_cols();
    if (triv) continue;
    auto d = d_circular(m);
    if (!d.ok()) continue;
    int rot = 0;
    Biorder x = monotone_circular_biorder(m, *d.order, &rot);
    rotated += rot != 0;
    CHECK(verify_monotone_circular_biorder(m, x));
    CHECK(verify_cco_biorder(m, x));
  }
  MESSAGE("alignment repairs: " << rotated);
}

TEST_CASE("cco examples") {
  auto r = cco(generate({"M_I", 3}));
  REQUIRE(r.ok());
  CHECK(verify_cco_biorder(generate({"M_I", 3}), *r.biorder));
  r = cco(generate({"Z1*"}));
  REQUIRE(!r.ok());
  CHECK(r.cert->id == CatalogId{"co_M_I*T", 3});
  CHECK(certificate_holds(generate({"Z1*"}), *r.cert));
  BinMatrix padded = m_of({"00", "10", "01"});
  r = cco(padded);
  REQUIRE(r.ok());
  CHECK(verify_cco_biorder(padded, *r.biorder));
  CHECK(cco(BinMatrix(0, 0)).ok());
  CHECK(cco(m_of({"111", "111"})).ok());
  CHECK(cco(m_of({"000", "111"})).ok());
  CHECK(!doubly_d_circular(m_of({"10", "01"})));
  auto z8 = doubly_d_circular(generate({"Z8"}));
  REQUIRE(z8);
  CHECK(certificate_holds(generate({"Z8"}), *z8));
}

TEST_CASE("cco against brute force") {
  for (int bits = 0; bits < (1 << 9); ++bits) check_cco(all_bits(3, 3, bits));
  for (int bits = 0; bits < (1 << 12); bits += 3) check_cco(all_bits(3, 4, bits));
  std::mt19937 rng(53);
  for (int t = 0; t < 700; ++t) {
    BinMatrix m = brute::random_matrix(rng, 4, 4, 0.3 + 0.1 * (t % 5));
    // force trivial rows into some samples
    if (t % 3 == 0) m = vstack(m, BinMatrix(4, std::vector<Row>{Row{}}));
    if (t % 5 == 0) m = vstack(m, BinMatrix(4, std::vector<Row>{Row{1, 2, 3, 4}}));
    check_cco(m);
  }
}

TEST_CASE("cco symmetry properties") {
  std::mt19937 rng(59);
  for (int t = 0; t < 600; ++t) {
    BinMatrix m = brute::random_matrix(rng, 2 + t % 5, 2 + t % 6, 0.4);
    bool a = cco(m).ok();
    CHECK(a == cco(transpose(m)).ok());
    CHECK(a == cco(complement(m)).ok());
    CHECK(a == !doubly_d_circular(m).has_value());
  }
  // symmetric matrices with a 1-diagonal
  for (int t = 0; t < 400; ++t) {
    int n = 3 + t % 5;
    std::vector<Row> rows(n);
    std::bernoulli_distribution bit(0.4);
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      a[i][i] = 1;
      for (int j = i + 1; j < n; ++j) a[i][j] = a[j][i] = bit(rng);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[i][j]) rows[i].push_back(j + 1);
    BinMatrix m(n, rows);
    CHECK(cco(m).ok() == has_d_circular(m));
  }
}

TEST_CASE("F_CCO members fail and D-circular no-trivial matrices pass") {
  for (const auto& [id, f] : family("F_CCO_inf", 5)) {
    INFO(to_string(id));
    auto r = cco(f);
    REQUIRE(!r.ok());
    CHECK(certificate_holds(f, *r.cert));
  }
  for (const auto& [id, f] : family("F_DCircR_inf", 5)) {
    INFO(to_string(id));
    auto r = cco(f);
    REQUIRE(!r.ok());
    CHECK(in_family(r.cert->id, "F_CCO_inf"));
    CHECK(certificate_holds(f, *r.cert));
  }
}

TEST_CASE("padding lemma") {
  std::mt19937 rng(61);
  for (int t = 0; t < 500; ++t) {
    BinMatrix m = vstack(brute::random_matrix(rng, 2 + t % 3, 3 + t % 3, 0.5), BinMatrix(3 + t % 3, std::vector<Row>{Row{}}));
    if (doubly_d_circular(m)) continue;
    CHECK(!doubly_d_circular(pad_trivial(m, 0)));
  }
}

TEST_CASE("classical wording of the compatible ones conditions is weaker") {
  // Z2* has no trivial rows, yet this biorder meets the conditions as worded.
  BinMatrix z = generate({"Z2*"});
  Biorder b{{1, 2, 4, 3}, identity_order(4)};
  CHECK(verify_cco_biorder_literal(z, b));
  CHECK(!verify_cco_biorder(z, b));
  CHECK(brute::compatible(z, true, true));
  CHECK(!brute::compatible(z, true));
  // same for the linear version once full rows are skipped
  BinMatrix z3t = generate({"Z3T"});
  Biorder l{{2, 1, 3}, identity_order(4)};
  CHECK(verify_lco_biorder_literal(z3t, l));
  CHECK(!verify_lco_biorder(z3t, l));
  CHECK(!brute::compatible(z3t, false));
}
