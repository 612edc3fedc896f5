#include "dcirc/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace dcirc {

namespace {

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string at_line(std::size_t i) { return " (line " + std::to_string(i + 1) + ")"; }

}  // namespace

bool looks_like_matrix(std::string_view text) {
  for (const auto& line : lines_of(text)) {
    if (blank(line)) continue;
    auto t = tokens(line);
    return (t.size() == 2 || (t.size() == 3 && t[2] == "sparse")) && to_int(t[0]) && to_int(t[1]);
  }
  return false;
}

BinMatrix parse_matrix(std::string_view text) {
  auto lines = lines_of(text);
  std::size_t i = 0;
  while (i < lines.size() && blank(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("empty matrix file");
  auto head = tokens(lines[i]);
  bool sparse = head.size() == 3 && head[2] == "sparse";
  if (head.size() != 2 && !sparse) throw ParseError("expected header \"k l\" or \"k l sparse\"" + at_line(i));
  auto k = to_int(head[0]), l = to_int(head[1]);
  if (!k || !l || *k < 0 || *l < 0) throw ParseError("bad matrix dimensions" + at_line(i));
  ++i;
  std::vector<Row> rows(*k);
  if (sparse) {
    std::vector<char> seen(*k + 1, 0);
    for (; i < lines.size(); ++i) {
      if (blank(lines[i])) continue;
      auto colon = lines[i].find(':');
      if (colon == std::string::npos) throw ParseError("expected \"i: c1 c2 ...\"" + at_line(i));
      auto idx = tokens(lines[i].substr(0, colon));
      auto r = idx.size() == 1 ? to_int(idx[0]) : std::nullopt;
      if (!r || *r < 1 || *r > *k) throw ParseError("row index out of range" + at_line(i));
      if (seen[*r]) throw ParseError("row listed twice" + at_line(i));
      seen[*r] = 1;
      for (const auto& t : tokens(lines[i].substr(colon + 1))) {
        auto c = to_int(t);
        if (!c || *c < 1 || *c > *l) throw ParseError("column index out of range" + at_line(i));
        rows[*r - 1].push_back(*c);
      }
      Row& row = rows[*r - 1];
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw ParseError("repeated column" + at_line(i));
    }
    return BinMatrix(*l, std::move(rows));
  }
  int r = 0;
  for (; i < lines.size(); ++i) {
    std::string bits;
    for (char c : lines[i])
      if (!std::isspace(static_cast<unsigned char>(c))) bits.push_back(c);
    if (bits.empty()) continue;
    if (r == *k) throw ParseError("more rows than declared" + at_line(i));
    if (static_cast<int>(bits.size()) != *l)
      throw ParseError("row has " + std::to_string(bits.size()) + " entries, expected " + std::to_string(*l) +
                       at_line(i));
    for (int j = 0; j < *l; ++j) {
      if (bits[j] == '1')
        rows[r].push_back(j + 1);
      else if (bits[j] != '0')
        throw ParseError("entries must be 0 or 1" + at_line(i));
    }
    ++r;
  }
  if (r != *k && *l > 0) throw ParseError("expected " + std::to_string(*k) + " rows, found " + std::to_string(r));
  return BinMatrix(*l, std::move(rows));
}

std::string format_matrix(const BinMatrix& m, bool sparse) {
  std::string out = std::to_string(m.n_rows()) + " " + std::to_string(m.n_cols()) + (sparse ? " sparse\n" : "\n");
  if (sparse) {
    for (int i = 1; i <= m.n_rows(); ++i) {
      out += std::to_string(i) + ":";
      for (int c : m.row(i)) out += " " + std::to_string(c);
      out += "\n";
    }
  } else {
    for (const auto& s : m.to_strings()) out += s + "\n";
  }
  return out;
}

GraphInput parse_graph(std::string_view text) {
  auto lines = lines_of(text);
  std::vector<std::string> names;
  std::unordered_map<std::string, int> id;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::vector<int>> xs, ys;
  auto vertex = [&](const std::string& s, bool may_add, std::size_t line) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    if (!may_add) throw ParseError("unknown vertex " + s + at_line(line));
    id.emplace(s, static_cast<int>(names.size()));
    names.push_back(s);
    return static_cast<int>(names.size()) - 1;
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    auto t = tokens(lines[i]);
    if (t[0] == "X:" || t[0] == "Y:") {
      auto& side = t[0] == "X:" ? xs : ys;
      if (side) throw ParseError("side listed twice" + at_line(i));
      if (!edges.empty()) throw ParseError("sides must come before the edges" + at_line(i));
      side.emplace();
      for (std::size_t j = 1; j < t.size(); ++j) {
        if (id.count(t[j])) throw ParseError("vertex " + t[j] + " listed twice" + at_line(i));
        side->push_back(vertex(t[j], true, i));
      }
      continue;
    }
    if (t.size() != 2) throw ParseError("expected an edge \"u v\"" + at_line(i));
    if (xs.has_value() != ys.has_value()) throw ParseError("both X: and Y: are needed" + at_line(i));
    bool listed = xs.has_value();
    int u = vertex(t[0], !listed, i);
    int v = vertex(t[1], !listed, i);
    if (u == v) throw ParseError("loop at " + t[0] + at_line(i));
    edges.emplace_back(u, v);
  }
  if (xs.has_value() != ys.has_value()) throw ParseError("both X: and Y: are needed");
  GraphInput out;
  try {
    out.graph = make_graph(names, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (xs) out.split = Bipartition{*xs, *ys};
  return out;
}

std::string format_bigraph(const Bigraph& g) {
  std::string out = "X:";
  for (const auto& s : g.side_x) out += " " + s;
  out += "\nY:";
  for (const auto& s : g.side_y) out += " " + s;
  out += "\n";
  for (std::size_t i = 0; i < g.side_x.size(); ++i)
    for (int j : g.adj[i]) out += g.side_x[i] + " " + g.side_y[j - 1] + "\n";
  return out;
}

Bigraph parse_bigraph(std::string_view text) {
  if (looks_like_matrix(text)) return bigraph_of(parse_matrix(text));
  GraphInput in = parse_graph(text);
  if (!in.split) return to_bigraph(in.graph);
  try {
    return to_bigraph(in.graph, *in.split);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace dcirc
