#include "dcirc/cons_circ.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "dcirc/pq_tree.hpp"

namespace dcirc {

namespace {

// Reversal (and rotation, for circular orders) toward column 1 first, so that
// unconstrained columns come out in their natural order.
ColumnOrder normalized(std::vector<int> perm, bool circular) {
  if (perm.size() < 2) return {perm};
  if (circular) {
    std::rotate(perm.begin(), std::min_element(perm.begin(), perm.end()), perm.end());
    if (perm[1] > perm.back()) std::reverse(perm.begin() + 1, perm.end());
  } else if (perm.front() > perm.back()) {
    std::reverse(perm.begin(), perm.end());
  }
  return {perm};
}

}  // namespace

PrefixResult consecutive_ones(const BinMatrix& m) {
  PQTree tree(m.n_cols());
  for (int i = 1; i <= m.n_rows(); ++i)
    if (!tree.reduce(m.row(i))) return {std::nullopt, i};
  return {normalized(tree.frontier(), false), 0};
}

int cut_column(const BinMatrix& m) {
  if (m.n_cols() == 0) return 0;
  std::vector<int> cnt(m.n_cols() + 1, 0);
  for (const Row& r : m.rows())
    for (int c : r) ++cnt[c];
  int best = 1;
  for (int c = 2; c <= m.n_cols(); ++c)
    if (cnt[c] < cnt[best]) best = c;
  return best;
}

PrefixResult circular_ones(const BinMatrix& m) {
  const int n = m.n_cols();
  int c = cut_column(m);
  PQTree tree(n);
  Row flipped;
  for (int i = 1; i <= m.n_rows(); ++i) {
    const Row& r = m.row(i);
    if (c == 0 || !std::binary_search(r.begin(), r.end(), c)) {
      if (!tree.reduce(r)) return {std::nullopt, i};
      continue;
    }
    flipped.clear();
    auto it = r.begin();
    for (int j = 1; j <= n; ++j) {
      if (it != r.end() && *it == j) {
        ++it;
        continue;
      }
      flipped.push_back(j);
    }
    if (!tree.reduce(flipped)) return {std::nullopt, i};
  }
  return {normalized(tree.frontier(), true), 0};
}

bool has_consecutive_ones(const BinMatrix& m) { return consecutive_ones(m).ok(); }
bool has_circular_ones(const BinMatrix& m) { return circular_ones(m).ok(); }

bool certificate_holds(const BinMatrix& host, const NegCertificate& c) {
  if (!embedding_valid(host, c.emb)) return false;
  try {
    return submatrix(host, c.emb) == generate(c.id);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

NegCertificate circular_ones_certificate(const BinMatrix& m) {
  PrefixResult pr = circular_ones(m);
  if (pr.ok()) throw std::invalid_argument("matrix has the circular-ones property");
  // Row-minimize: repeatedly move the row completing the least failing prefix to
  // the top and drop the rows after it, until every row is known to be needed.
  std::vector<int> idx;
  for (int i = 1; i <= pr.fail_index; ++i) idx.push_back(i);
  std::set<int> needed;
  while (true) {
    int fi = circular_ones(select_rows(m, idx)).fail_index;
    if (fi == 0) throw std::logic_error("row minimization lost the failure");
    std::vector<int> next;
    next.reserve(fi);
    next.push_back(idx[fi - 1]);
    needed.insert(idx[fi - 1]);
    for (int j = 0; j + 1 < fi; ++j) next.push_back(idx[j]);
    idx = std::move(next);
    bool all = std::all_of(idx.begin(), idx.end(), [&](int r) { return needed.count(r) > 0; });
    if (all) break;
    // When the last row completes the failure, bring the first unconfirmed row last.
    if (fi == static_cast<int>(idx.size())) {
      auto it = std::find_if(idx.begin(), idx.end(), [&](int r) { return needed.count(r) == 0; });
      int r = *it;
      idx.erase(it);
      idx.push_back(r);
    }
  }
  BinMatrix rows_only = select_rows(m, idx);
  // Column-minimize: drop repeated columns, then greedily drop columns keeping the failure.
  std::vector<int> cols;
  {
    BinMatrix tr = transpose(rows_only);
    std::map<Row, int> seen;
    for (int j = 1; j <= tr.n_rows(); ++j)
      if (seen.emplace(tr.row(j), j).second) cols.push_back(j);
  }
  for (std::size_t p = 0; p < cols.size();) {
    std::vector<int> trial = cols;
    trial.erase(trial.begin() + static_cast<long>(p));
    if (!has_circular_ones(select_cols(rows_only, trial)))
      cols = std::move(trial);
    else
      ++p;
  }
  BinMatrix f = select_cols(rows_only, cols);
  auto hit = classify_in(f, "ForbRow", 0);
  if (!hit) throw std::logic_error("minimal circular-ones obstruction not in ForbRow");
  NegCertificate out;
  out.id = hit->first;
  out.emb = compose(Embedding{idx, cols}, hit->second);
  return out;
}

}  // namespace dcirc
