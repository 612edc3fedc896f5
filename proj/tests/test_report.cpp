#include <random>

#include "dcirc/catalog.hpp"
#include "dcirc/generate.hpp"
#include "dcirc/io.hpp"
#include "dcirc/oracle.hpp"
#include "dcirc/report.hpp"
#include "doctest.h"

using namespace dcirc;

TEST_CASE("matrix text round trip") {
  BinMatrix m = BinMatrix::from_strings({"0110", "1001", "0000"});
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK(parse_matrix(format_matrix(m, true)) == m);
  CHECK(parse_matrix("2 3\n1 0 1\n011\n") == BinMatrix::from_strings({"101", "011"}));
  CHECK(parse_matrix("3 4 sparse\n2: 1 4\n") == BinMatrix::from_strings({"0000", "1001", "0000"}));
  CHECK(parse_matrix("0 0\n").n_rows() == 0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    BinMatrix r = gen_random(7, 9, 0.3, seed);
    CHECK(parse_matrix(format_matrix(r, seed % 2)) == r);
  }
}

TEST_CASE("matrix parse errors") {
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n01\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 3\n012\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 3\n01\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 3 sparse\n3: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 3 sparse\n1: 4\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("-1 3\n"), ParseError);
}

TEST_CASE("graph files") {
  GraphInput in = parse_graph("X: a b\nY: c d\na c\nb c\nb d\n");
  REQUIRE(in.split.has_value());
  CHECK(in.graph.n() == 4);
  CHECK(in.graph.n_edges() == 3);
  GraphInput plain = parse_graph("a b\nb c\n");
  CHECK_FALSE(plain.split.has_value());
  CHECK(plain.graph.n_edges() == 2);
  CHECK_THROWS_AS(parse_graph("X: a\nY: b\na a\n"), ParseError);
  CHECK(looks_like_matrix("2 2\n01\n10\n"));
  CHECK_FALSE(looks_like_matrix("a b\n"));
  Bigraph g = parse_bigraph("2 2\n01\n10\n");
  CHECK(biadjacency(g) == BinMatrix::from_strings({"01", "10"}));
  Bigraph back = parse_bigraph(format_bigraph(g));
  CHECK(biadjacency(back) == biadjacency(g));
}

TEST_CASE("catalog ids as json") {
  for (const CatalogId& id : {CatalogId{"Z5"}, CatalogId{"M_I*T", 4}, CatalogId{"aM_I*", 5, "00101"}})
    CHECK(id_from_json(id_to_json(id)) == id);
  CHECK(fraction(Rational(3, 4)) == "3/4");
  CHECK(fraction(Rational(2)) == "2/1");
  CHECK(parse_fraction("2") == Rational(2));
  CHECK(parse_fraction("6/8") == Rational(3, 4));
}

TEST_CASE("minimal non-c1 submatrix") {
  BinMatrix m = BinMatrix::from_strings({"1100", "0110", "1010", "0001"});
  Embedding e = minimal_non_c1(m);
  BinMatrix s = submatrix(m, e);
  CHECK_FALSE(has_consecutive_ones(s));
  for (std::size_t i = 0; i < e.rho.size(); ++i) {
    Embedding d = e;
    d.rho.erase(d.rho.begin() + i);
    CHECK(has_consecutive_ones(submatrix(m, d)));
  }
  for (std::size_t j = 0; j < e.sigma.size(); ++j) {
    Embedding d = e;
    d.sigma.erase(d.sigma.begin() + j);
    CHECK(has_consecutive_ones(submatrix(m, d)));
  }
}

TEST_CASE("reports verify and detect tampering") {
  std::mt19937 rng(12);
  for (const char* prop : {"c1", "circ1", "dint", "dcirc", "lco", "cco"}) {
    for (int t = 0; t < 40; ++t) {
      BinMatrix m = gen_random(2 + t % 5, 3 + t % 4, 0.5, rng());
      std::string text = format_matrix(m);
      RunReport r = recognize(m, prop);
      r.digest = sha256_hex(text);
      json j = to_json(r);
      std::string why;
      CHECK_MESSAGE(check_report(j, text, &why), prop, " ", why);
      json bad = j;
      bad["verdict"] = r.holds ? "no" : "yes";
      CHECK_FALSE(check_report(bad, text));
      bad = j;
      bad["input_digest"] = sha256_hex(text + "\n");
      CHECK_FALSE(check_report(bad, text));
      if (!r.holds) {
        bad = j;
        bad["certificate"] = nullptr;
        CHECK_FALSE(check_report(bad, text));
      }
    }
  }
}

TEST_CASE("bigraph reports") {
  std::string c6 = format_matrix(generate({"M_I", 3}));
  for (const char* cls : {"pcab", "pib"}) {
    RunReport r = recognize(parse_bigraph(c6), cls);
    r.digest = sha256_hex(c6);
    std::string why;
    CHECK_MESSAGE(check_report(to_json(r), c6, &why), why);
  }
  std::string claw = format_matrix(generate({"Z1"}));
  RunReport r = recognize(parse_bigraph(claw), "pib");
  CHECK_FALSE(r.holds);
  json j = to_json(r);
  CHECK(j["certificate"]["name"] == "bipartite claw");
  CHECK(check_report(j, claw));
  j["certificate"]["name"] = "bipartite net";
  CHECK_FALSE(check_report(j, claw));
}

TEST_CASE("oracle reports") {
  BinMatrix m = generate({"M_I*", 3});
  CHECK_FALSE(run_oracle(m, "dcirc").holds);
  CHECK(run_oracle(BinMatrix::from_strings({"0110"}), "dcirc").holds);
  CHECK_THROWS_AS(run_oracle(BinMatrix(2, std::vector<Row>(1, Row{})), "bogus"), std::invalid_argument);
  CHECK_THROWS_AS(run_oracle(gen_random(3, 12, 0.5, 1), "circ1"), SizeGuardError);
}
