#include "dcirc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dcirc {

namespace {

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

void check_dims(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("dimensions must be non-negative");
}

}  // namespace

BinMatrix gen_random(int k, int l, double density, std::uint64_t seed) {
  check_dims(k, l);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution one(std::clamp(density, 0.0, 1.0));
  std::vector<Row> rows(k);
  for (auto& r : rows)
    for (int j = 1; j <= l; ++j)
      if (one(rng)) r.push_back(j);
  return BinMatrix(l, std::move(rows));
}

BinMatrix gen_circular(int k, int l, std::uint64_t seed) {
  check_dims(k, l);
  std::mt19937_64 rng(seed);
  std::vector<int> col = shuffled(l, rng);  // col[p] sits at position p
  std::vector<Row> rows(k);
  if (l == 0) return BinMatrix(0, std::move(rows));
  std::uniform_int_distribution<int> start(0, l - 1), len(0, l);
  for (auto& r : rows) {
    int s = start(rng), n = len(rng);
    for (int t = 0; t < n; ++t) r.push_back(col[(s + t) % l]);
    std::sort(r.begin(), r.end());
  }
  return BinMatrix(l, std::move(rows));
}

BinMatrix gen_planted(int k, int l, std::uint64_t seed, int avg_len) {
  check_dims(k, l);
  if (l < 3) throw std::invalid_argument("planted instances need at least 3 columns");
  std::mt19937_64 rng(seed);
  std::vector<int> col = shuffled(l, rng);
  std::uniform_int_distribution<int> pos(0, l - 1);
  std::uniform_int_distribution<int> len(1, std::clamp(2 * avg_len - 1, 1, l - 1));
  std::vector<int> starts(k);
  for (int& s : starts) s = pos(rng);
  std::sort(starts.begin(), starts.end());
  // unwrapped ends: non-decreasing, nontrivial rows, at most one turn in total
  std::vector<long long> ends(k);
  for (int i = 0; i < k; ++i) {
    long long e = starts[i] + len(rng) - 1;
    if (i > 0) e = std::max(e, ends[i - 1]);
    e = std::min<long long>(e, starts[i] + l - 2);
    if (i > 0) e = std::min<long long>(e, ends[0] + l);
    ends[i] = std::max<long long>(e, starts[i]);
  }
  std::vector<Row> rows(k);
  for (int i = 0; i < k; ++i) {
    for (long long p = starts[i]; p <= ends[i]; ++p) rows[i].push_back(col[p % l]);
    std::sort(rows[i].begin(), rows[i].end());
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  return BinMatrix(l, std::move(rows));
}

BinMatrix gen_planted_size(std::size_t target, std::uint64_t seed) {
  // rows + cols + ones with avg_len ones per row and rows = cols
  const int avg_len = 8;
  int n = std::max(3, static_cast<int>(target / (2 + avg_len)));
  return gen_planted(n, n, seed, avg_len);
}

}  // namespace dcirc
