#pragma once

#include <cstdint>
#include <random>

#include "dcirc/matrix.hpp"

namespace dcirc {

// Each entry is 1 with probability density.
BinMatrix gen_random(int k, int l, double density, std::uint64_t seed);
// Every row a random circular interval of a hidden column order.
BinMatrix gen_circular(int k, int l, std::uint64_t seed);
// Rows are arcs of a hidden column order whose starts and ends both advance
// once around the circle, so the matrix has the circularly compatible ones
// property (hence is D-circular). Rows and columns are shuffled. avg_len is the
// mean number of ones per row.
BinMatrix gen_planted(int k, int l, std::uint64_t seed, int avg_len = 8);
// Planted instance with size() close to target (rows = columns).
BinMatrix gen_planted_size(std::size_t target, std::uint64_t seed);

}  // namespace dcirc
