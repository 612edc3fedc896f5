#include "dcirc/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "dcirc/d_circular.hpp"
#include "dcirc/io.hpp"
#include "dcirc/oracle.hpp"

namespace dcirc {

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

json id_to_json(const CatalogId& id) {
  json j{{"family", id.family}};
  if (id.k) j["k"] = id.k;
  if (!id.a.empty()) j["a"] = id.a;
  return j;
}

CatalogId id_from_json(const json& j) {
  CatalogId id;
  id.family = j.at("family").get<std::string>();
  if (j.contains("k")) id.k = j["k"].get<int>();
  if (j.contains("a")) id.a = j["a"].get<std::string>();
  return id;
}

std::string fraction(const Rational& r) { return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()); }

Rational parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  std::size_t used = 0;
  long long num = std::stoll(s.substr(0, slash), &used);
  if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument("bad fraction: " + s);
  long long den = 1;
  if (slash != std::string::npos) {
    den = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1 || den == 0) throw std::invalid_argument("bad fraction: " + s);
  }
  return Rational(num, den);
}

json order_json(const ColumnOrder& ord) { return {{"type", "order"}, {"order", ord.perm}}; }

json biorder_json(const Biorder& b) {
  return {{"type", "biorder"}, {"row_order", b.row_order}, {"col_order", b.col_order.perm}};
}

json bimodel_json(const Bigraph& g, const Bimodel& bm) {
  auto fam = [](const std::vector<std::string>& names, const std::vector<Arc>& arcs) {
    json a = json::array();
    for (std::size_t i = 0; i < arcs.size(); ++i)
      a.push_back({{"vertex", names[i]}, {"start", fraction(arcs[i].start)}, {"end", fraction(arcs[i].end)}});
    return a;
  };
  return {{"type", "bimodel"},
          {"kind", "circular"},
          {"circumference", fraction(bm.circumference)},
          {"family1", fam(g.side_x, bm.family1)},
          {"family2", fam(g.side_y, bm.family2)}};
}

json bimodel_json(const Bigraph& g, const IntervalBimodel& bm) {
  auto fam = [](const std::vector<std::string>& names, const std::vector<Interval>& ivs) {
    json a = json::array();
    for (std::size_t i = 0; i < ivs.size(); ++i)
      a.push_back({{"vertex", names[i]}, {"lo", fraction(ivs[i].lo)}, {"hi", fraction(ivs[i].hi)}});
    return a;
  };
  return {{"type", "bimodel"},
          {"kind", "interval"},
          {"family1", fam(g.side_x, bm.family1)},
          {"family2", fam(g.side_y, bm.family2)}};
}

json certificate_json(const NegCertificate& c) {
  json j{{"id", id_to_json(c.id)}, {"name", to_string(c.id)}, {"rho", c.emb.rho}, {"sigma", c.emb.sigma}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json certificate_json(const SubgraphCertificate& c) {
  return {{"id", id_to_json(c.id)},   {"name", c.name},
          {"rho", c.emb.rho},         {"sigma", c.emb.sigma},
          {"vertex_map", c.vertex_map}};
}

Embedding minimal_non_c1(const BinMatrix& m) {
  PrefixResult pr = consecutive_ones(m);
  if (pr.ok()) throw std::invalid_argument("minimal_non_c1: matrix has the consecutive-ones property");
  Embedding e;
  for (int i = 1; i <= pr.fail_index; ++i) e.rho.push_back(i);
  for (int j = 1; j <= m.n_cols(); ++j) e.sigma.push_back(j);
  auto fails = [&](const Embedding& x) { return !consecutive_ones(submatrix(m, x)).ok(); };
  // the last prefix row is needed; try dropping the others from the top
  for (std::size_t i = 0; i + 1 < e.rho.size();) {
    Embedding t = e;
    t.rho.erase(t.rho.begin() + i);
    if (fails(t))
      e = std::move(t);
    else
      ++i;
  }
  for (std::size_t j = 0; j < e.sigma.size();) {
    Embedding t = e;
    t.sigma.erase(t.sigma.begin() + j);
    if (fails(t))
      e = std::move(t);
    else
      ++j;
  }
  return e;
}

namespace {

bool minimal_non_c1_holds(const BinMatrix& m, const Embedding& e) {
  if (!embedding_valid(m, e)) return false;
  BinMatrix s = submatrix(m, e);
  if (consecutive_ones(s).ok()) return false;
  for (int i = 1; i <= s.n_rows(); ++i) {
    std::vector<int> rho;
    for (int r = 1; r <= s.n_rows(); ++r)
      if (r != i) rho.push_back(r);
    if (!consecutive_ones(select_rows(s, rho)).ok()) return false;
  }
  for (int j = 1; j <= s.n_cols(); ++j) {
    std::vector<int> sigma;
    for (int c = 1; c <= s.n_cols(); ++c)
      if (c != j) sigma.push_back(c);
    if (!consecutive_ones(select_cols(s, sigma)).ok()) return false;
  }
  return true;
}

const std::map<std::string, Property, std::less<>> kOrderProps = {{"c1", Property::consecutive_ones},
                                                                    {"circ1", Property::circular_ones},
                                                                    {"dint", Property::d_interval},
                                                                    {"dcirc", Property::d_circular}};

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

}  // namespace

bool is_matrix_property(std::string_view p) { return kOrderProps.count(p) || p == "lco" || p == "cco"; }
bool is_bigraph_property(std::string_view p) { return p == "pcab" || p == "pib"; }

std::string certificate_family(std::string_view p) {
  if (p == "circ1") return "ForbRow";
  if (p == "dcirc") return "F_DCircR_inf";
  if (p == "dint" || p == "lco" || p == "pib") return "F_DIntR_inf";
  if (p == "cco" || p == "pcab") return "F_CCO_inf";
  return "";
}

RunReport recognize(const BinMatrix& m, std::string_view property) {
  RunReport r;
  r.property = std::string(property);
  auto set_cert = [&](const std::optional<NegCertificate>& c) { r.certificate = certificate_json(*c); };
  if (property == "c1") {
    r.millis = timed([&] {
      PrefixResult pr = consecutive_ones(m);
      r.holds = pr.ok();
      if (pr.ok()) {
        r.witness = order_json(*pr.order);
      } else {
        Embedding e = minimal_non_c1(m);
        r.certificate = {{"id", {{"family", "minimal_non_c1"}}},
                         {"name", "row- and column-minimal submatrix without consecutive ones"},
                         {"rho", e.rho},
                         {"sigma", e.sigma},
                         {"fail_index", pr.fail_index}};
      }
    });
  } else if (property == "circ1") {
    r.millis = timed([&] {
      PrefixResult pr = circular_ones(m);
      r.holds = pr.ok();
      if (pr.ok())
        r.witness = order_json(*pr.order);
      else
        set_cert(circular_ones_certificate(m));
    });
  } else if (property == "dint") {
    r.millis = timed([&] {
      DIntResult d = d_interval(m);
      r.holds = d.ok();
      if (d.ok())
        r.witness = order_json(*d.order);
      else
        set_cert(d.cert);
    });
  } else if (property == "dcirc") {
    r.millis = timed([&] {
      DCircResult d = d_circular(m);
      r.holds = d.ok();
      if (d.ok())
        r.witness = order_json(*d.order);
      else
        set_cert(d.cert);
    });
  } else if (property == "lco" || property == "cco") {
    r.millis = timed([&] {
      BiorderResult b = property == "lco" ? lco(m) : cco(m);
      r.holds = b.ok();
      if (b.ok())
        r.witness = biorder_json(*b.biorder);
      else
        set_cert(b.cert);
    });
  } else {
    throw std::invalid_argument("unknown matrix property: " + std::string(property));
  }
  return r;
}

RunReport recognize(const Bigraph& g, std::string_view property) {
  RunReport r;
  r.property = std::string(property);
  if (property == "pcab") {
    r.millis = timed([&] {
      PcabResult res = recognize_pcab(g);
      r.holds = std::holds_alternative<Bimodel>(res);
      if (r.holds)
        r.witness = bimodel_json(g, std::get<Bimodel>(res));
      else
        r.certificate = certificate_json(std::get<SubgraphCertificate>(res));
    });
  } else if (property == "pib") {
    r.millis = timed([&] {
      PibResult res = recognize_pib(g);
      r.holds = std::holds_alternative<IntervalBimodel>(res);
      if (r.holds)
        r.witness = bimodel_json(g, std::get<IntervalBimodel>(res));
      else
        r.certificate = certificate_json(std::get<SubgraphCertificate>(res));
    });
  } else {
    throw std::invalid_argument("unknown bigraph class: " + std::string(property));
  }
  return r;
}

RunReport run_oracle(const BinMatrix& m, std::string_view property) {
  RunReport r;
  r.property = std::string(property);
  r.millis = timed([&] {
    if (property == "cco") {
      OracleVerdict v = brute_cco(m);
      r.holds = v.holds;
      if (v.holds) r.witness = biorder_json(std::get<Biorder>(*v.witness));
      return;
    }
    auto it = kOrderProps.find(property);
    if (it == kOrderProps.end()) throw std::invalid_argument("unknown oracle property: " + std::string(property));
    OracleVerdict v = brute_property(m, it->second);
    r.holds = v.holds;
    if (v.holds) r.witness = order_json(std::get<ColumnOrder>(*v.witness));
  });
  return r;
}

json to_json(const RunReport& r) {
  return {{"property", r.property},
          {"verdict", r.holds ? "yes" : "no"},
          {"witness", r.witness},
          {"certificate", r.certificate},
          {"timing_ms", r.millis},
          {"input_digest", r.digest}};
}

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << "property: " << r.property << "\nverdict: " << (r.holds ? "yes" : "no") << "\n";
  const json& w = r.witness;
  if (!w.is_null()) {
    std::string type = w["type"];
    if (type == "order") {
      out << "order: " << join(w["order"].get<std::vector<int>>()) << "\n";
    } else if (type == "biorder") {
      out << "row order: " << join(w["row_order"].get<std::vector<int>>()) << "\n";
      out << "column order: " << join(w["col_order"].get<std::vector<int>>()) << "\n";
    } else {
      bool circ = w["kind"] == "circular";
      out << "bimodel (" << w["kind"].get<std::string>();
      if (circ) out << ", circumference " << w["circumference"].get<std::string>();
      out << ")\n";
      for (const char* fam : {"family1", "family2"})
        for (const auto& a : w[fam])
          out << "  " << a["vertex"].get<std::string>() << " ["
              << a[circ ? "start" : "lo"].get<std::string>() << ", " << a[circ ? "end" : "hi"].get<std::string>()
              << "]\n";
    }
  }
  const json& c = r.certificate;
  if (!c.is_null()) {
    out << "certificate: " << c["name"].get<std::string>();
    if (c.contains("vertex_map")) {
      out << " (" << to_string(id_from_json(c["id"])) << ")\n";
      std::string vs;
      for (const auto& v : c["vertex_map"]) vs += (vs.empty() ? "" : " ") + v.get<std::string>();
      out << "  vertices: " << vs << "\n";
    } else {
      out << "\n";
    }
    out << "  rows: " << join(c["rho"].get<std::vector<int>>()) << "\n";
    out << "  columns: " << join(c["sigma"].get<std::vector<int>>()) << "\n";
    if (c.contains("note")) out << "  note: " << c["note"].get<std::string>() << "\n";
  }
  if (!r.digest.empty()) out << "input sha256: " << r.digest << "\n";
  out << "time: " << r.millis << " ms\n";
  return out.str();
}

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

Embedding emb_of(const json& c) {
  return {c.at("rho").get<std::vector<int>>(), c.at("sigma").get<std::vector<int>>()};
}

}  // namespace

bool check_report(const json& report, std::string_view input, std::string* why) {
  try {
    const std::string prop = report.at("property");
    const std::string verdict = report.at("verdict");
    if (verdict != "yes" && verdict != "no") return fail(why, "verdict must be yes or no");
    const bool yes = verdict == "yes";
    if (report.contains("input_digest")) {
      std::string d = report["input_digest"];
      if (!d.empty() && d != sha256_hex(input)) return fail(why, "input digest does not match the file");
    }
    const json& w = report.contains("witness") ? report["witness"] : json();
    const json& c = report.contains("certificate") ? report["certificate"] : json();
    if (yes && w.is_null()) return fail(why, "verdict yes without a witness");
    if (!yes && c.is_null()) return fail(why, "verdict no without a certificate");

    if (is_matrix_property(prop)) {
      BinMatrix m = parse_matrix(input);
      if (yes) {
        auto it = kOrderProps.find(prop);
        if (it != kOrderProps.end()) {
          if (w.at("type") != "order") return fail(why, "expected an order witness");
          ColumnOrder ord{w.at("order").get<std::vector<int>>()};
          return verify_order(m, ord, it->second) || fail(why, "order fails the " + prop + " check");
        }
        if (w.at("type") != "biorder") return fail(why, "expected a biorder witness");
        Biorder b{w.at("row_order").get<std::vector<int>>(), ColumnOrder{w.at("col_order").get<std::vector<int>>()}};
        bool ok = prop == "lco" ? verify_lco_biorder(m, b) : verify_cco_biorder(m, b);
        return ok || fail(why, "biorder fails the " + prop + " check");
      }
      if (prop == "c1") {
        if (c.at("id").at("family") != "minimal_non_c1") return fail(why, "unexpected certificate kind");
        return minimal_non_c1_holds(m, emb_of(c)) || fail(why, "submatrix is not a minimal non-c1 matrix");
      }
      NegCertificate nc{id_from_json(c.at("id")), emb_of(c), {}};
      return verify_certificate(m, nc, certificate_family(prop)) || fail(why, "certificate does not check out");
    }

    if (is_bigraph_property(prop)) {
      Bigraph g = parse_bigraph(input);
      if (yes) {
        if (w.at("type") != "bimodel") return fail(why, "expected a bimodel witness");
        bool circ = prop == "pcab";
        if (w.at("kind") != (circ ? "circular" : "interval")) return fail(why, "wrong bimodel kind");
        auto index = [](const std::vector<std::string>& names) {
          std::map<std::string, int> ix;
          for (std::size_t i = 0; i < names.size(); ++i) ix[names[i]] = static_cast<int>(i);
          return ix;
        };
        auto ix = index(g.side_x), iy = index(g.side_y);
        const json& f1 = w.at("family1");
        const json& f2 = w.at("family2");
        auto covers = [](const json& f, const std::vector<std::string>& names) {
          std::vector<std::string> got;
          for (const auto& a : f) got.push_back(a.at("vertex").get<std::string>());
          std::vector<std::string> want = names;
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          return got == want;
        };
        if (!covers(f1, g.side_x) || !covers(f2, g.side_y)) return fail(why, "bimodel does not cover every vertex once");
        auto slot = [](const std::map<std::string, int>& ix, const json& a) {
          auto it = ix.find(a.at("vertex").get<std::string>());
          if (it == ix.end()) throw std::invalid_argument("bimodel names an unknown vertex");
          return it->second;
        };
        if (circ) {
          Bimodel bm;
          bm.circumference = parse_fraction(w.at("circumference"));
          bm.family1.resize(f1.size());
          bm.family2.resize(f2.size());
          for (const auto& a : f1) bm.family1[slot(ix, a)] = {parse_fraction(a.at("start")), parse_fraction(a.at("end"))};
          for (const auto& a : f2) bm.family2[slot(iy, a)] = {parse_fraction(a.at("start")), parse_fraction(a.at("end"))};
          return verify_bimodel(g, bm) || fail(why, "bimodel fails verification");
        }
        IntervalBimodel bm;
        bm.family1.resize(f1.size());
        bm.family2.resize(f2.size());
        for (const auto& a : f1) bm.family1[slot(ix, a)] = {parse_fraction(a.at("lo")), parse_fraction(a.at("hi"))};
        for (const auto& a : f2) bm.family2[slot(iy, a)] = {parse_fraction(a.at("lo")), parse_fraction(a.at("hi"))};
        return verify_interval_bimodel(g, bm) || fail(why, "bimodel fails verification");
      }
      SubgraphCertificate sc{id_from_json(c.at("id")), c.at("name"), emb_of(c),
                             c.at("vertex_map").get<std::vector<std::string>>()};
      return verify_certificate(g, sc, certificate_family(prop)) || fail(why, "certificate does not check out");
    }
    return fail(why, "unknown property " + prop);
  } catch (const std::exception& e) {
    return fail(why, e.what());
  }
}

}  // namespace dcirc
