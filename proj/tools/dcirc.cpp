// Command-line front end: recognition, bigraph models, catalog, oracle, verification, generators.

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "dcirc/catalog.hpp"
#include "dcirc/generate.hpp"
#include "dcirc/io.hpp"
#include "dcirc/oracle.hpp"
#include "dcirc/report.hpp"

using namespace dcirc;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kBadInput = 2;
constexpr int kUnverified = 3;
constexpr int kInternal = 4;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Unverified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Options {
  bool json = false;
  bool verify = false;
  int jobs = 1;
};

// One input file through one property. Parse problems surface as BadInput.
RunReport run_one(const std::string& path, const std::string& property, bool oracle) {
  std::string text = read_file(path);
  RunReport r;
  try {
    if (is_bigraph_property(property))
      r = recognize(parse_bigraph(text), property);
    else if (oracle)
      r = run_oracle(parse_matrix(text), property);
    else
      r = recognize(parse_matrix(text), property);
  } catch (const ParseError& e) {
    throw BadInput(path + ": " + e.what());
  } catch (const SizeGuardError& e) {
    throw BadInput(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    // odd cycles and invalid bipartitions
    throw BadInput(path + ": " + e.what());
  }
  r.digest = sha256_hex(text);
  return r;
}

void self_check(const RunReport& r, const std::string& path, bool oracle) {
  std::string text = read_file(path);
  std::string why;
  if (oracle && !r.holds) return;  // the oracle has no certificate to check
  if (!check_report(to_json(r), text, &why)) throw Unverified(path + ": " + why);
}

int run_batch(const std::vector<std::string>& files, const std::string& property, bool oracle, const Options& o) {
  std::vector<RunReport> reports(files.size());
  auto work = [&](std::size_t i) {
    reports[i] = run_one(files[i], property, oracle);
    if (o.verify) self_check(reports[i], files[i], oracle);
  };
  if (o.jobs <= 1 || files.size() <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) work(i);
  } else {
    // independent recognitions, o.jobs at a time
    for (std::size_t base = 0; base < files.size(); base += o.jobs) {
      std::vector<std::future<void>> running;
      for (std::size_t i = base; i < std::min(files.size(), base + o.jobs); ++i)
        running.push_back(std::async(std::launch::async, work, i));
      for (auto& f : running) f.get();
    }
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.holds;
  if (o.json) {
    if (files.size() == 1) {
      std::cout << to_json(reports[0]).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (std::size_t i = 0; i < files.size(); ++i) {
        json j = to_json(reports[i]);
        j["file"] = files[i];
        arr.push_back(j);
      }
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (files.size() > 1) std::cout << "file: " << files[i] << "\n";
      std::cout << to_text(reports[i]);
    }
  }
  return all ? kHolds : kFails;
}

int run_catalog(const std::string& name, int k, const std::string& a, bool emit, const Options& o) {
  std::vector<Member> members;
  static const std::vector<std::string> families = {"ForbRow", "F_DCircR", "F_DCircR_inf", "F_CCO",
                                                    "F_CCO_inf", "F_DIntR", "F_DIntR_inf"};
  try {
    if (std::find(families.begin(), families.end(), name) != families.end()) {
      members = family(name, k > 0 ? k : 6);
    } else {
      CatalogId id{name, has_size_parameter(name) ? k : 0, a};
      members.emplace_back(id, generate(id));
    }
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  if (o.json) {
    json arr = json::array();
    for (const auto& [id, m] : members) {
      json j{{"id", id_to_json(id)}, {"name", to_string(id)}};
      if (emit) j["matrix"] = m.to_strings();
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
    return kHolds;
  }
  for (const auto& [id, m] : members) {
    if (!emit) {
      std::cout << to_string(id) << "\n";
      continue;
    }
    std::cout << "# " << to_string(id) << "\n" << format_matrix(m);
  }
  return kHolds;
}

int run_verify(const std::string& cert_path, const std::string& input_path) {
  json report;
  try {
    report = json::parse(read_file(cert_path));
  } catch (const json::exception& e) {
    throw BadInput(cert_path + ": " + e.what());
  }
  std::string why;
  auto check = [&](const json& r) {
    if (!check_report(r, read_file(input_path), &why)) throw Unverified(why);
  };
  if (report.is_array()) {
    for (const auto& r : report) check(r);
  } else {
    check(report);
  }
  std::cout << "certificate verified\n";
  return kHolds;
}

int run_gen(const std::string& kind, int rows, int cols, std::uint64_t seed, double density, bool sparse) {
  BinMatrix m;
  try {
    if (kind == "random")
      m = gen_random(rows, cols, density, seed);
    else if (kind == "circular")
      m = gen_circular(rows, cols, seed);
    else if (kind == "planted")
      m = gen_planted(rows, cols, seed);
    else
      throw BadInput("unknown generator kind: " + kind);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  std::cout << format_matrix(m, sparse);
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifying recognition of D-circular, compatible ones and related matrix properties"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--verify", o.verify, "Re-check every witness and certificate before printing (exit 3 on failure)");
  app.add_option("--jobs", o.jobs, "Parallel recognitions over several input files")->check(CLI::PositiveNumber);

  std::string property, cls, fam, a, kind;
  std::vector<std::string> files;
  std::string cert_path, input_path;
  int k = 0, rows = 0, cols = 0;
  std::uint64_t seed = 1;
  double density = 0.5;
  bool emit = false, sparse = false;

  auto* rec = app.add_subcommand("recognize", "Decide a matrix property");
  rec->add_option("--property", property, "c1, circ1, dint, dcirc, lco or cco")
      ->required()
      ->check(CLI::IsMember({"c1", "circ1", "dint", "dcirc", "lco", "cco"}));
  rec->add_option("files", files, "Matrix files ('-' for stdin)")->required();

  auto* big = app.add_subcommand("bigraph", "Proper circular-arc or proper interval bigraph recognition");
  big->add_option("--class", cls, "pcab or pib")->required()->check(CLI::IsMember({"pcab", "pib"}));
  big->add_option("files", files, "Graph or matrix files")->required();

  auto* cat = app.add_subcommand("catalog", "List or emit forbidden matrices");
  cat->add_option("--family", fam, "Family (ForbRow, F_DCircR, F_CCO_inf, ...) or member (Z5, M_I*, aM_I*, ...)")
      ->required();
  cat->add_option("--k", k, "Size parameter (maximum size for families, default 6)");
  cat->add_option("--a", a, "Bracelet for aM_I*");
  cat->add_flag("--emit", emit, "Print the matrices");

  auto* orc = app.add_subcommand("oracle", "Brute-force decision (small inputs only)");
  orc->add_option("--property", property, "c1, circ1, dint, dcirc or cco")
      ->required()
      ->check(CLI::IsMember({"c1", "circ1", "dint", "dcirc", "cco"}));
  orc->add_option("files", files, "Matrix files")->required();

  auto* ver = app.add_subcommand("verify", "Check a JSON report against its input");
  ver->add_option("cert", cert_path, "Report written with --json")->required();
  ver->add_option("file", input_path, "Input the report describes")->required();

  auto* gen = app.add_subcommand("gen", "Generate a matrix");
  gen->add_option("--kind", kind, "circular, random or planted")
      ->required()
      ->check(CLI::IsMember({"circular", "random", "planted"}));
  gen->add_option("--rows", rows)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--cols", cols)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed);
  gen->add_option("--density", density, "Probability of a 1 (random kind)");
  gen->add_flag("--sparse", sparse, "Sparse output format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (*rec) return run_batch(files, property, false, o);
    if (*big) return run_batch(files, cls, false, o);
    if (*orc) return run_batch(files, property, true, o);
    if (*cat) return run_catalog(fam, k, a, emit, o);
    if (*ver) return run_verify(cert_path, input_path);
    if (*gen) return run_gen(kind, rows, cols, seed, density, sparse);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Unverified& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kUnverified;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kBadInput;
}
