#pragma once

// Shared test oracles, all independent of the library's evaluation paths:
// pairwise spread, exhaustive hypercube numberings, hook length counts,
// Pascal-triangle central binomial sums, unpruned extension enumeration.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hamband/arrangement.hpp"
#include "hamband/shape.hpp"

namespace testsupport {

// Spread straight from the definition: scan every pair of cells that
// differ in exactly one coordinate.
inline hamband::Value spread_bruteforce(const hamband::Arrangement& a) {
  const hamband::Shape& shape = a.shape();
  const std::int64_t volume = shape.volume();
  hamband::Value best = 0;
  for (std::int64_t i = 0; i < volume; ++i)
    for (std::int64_t j = i + 1; j < volume; ++j) {
      const hamband::Cell ci = shape.cell_at(i), cj = shape.cell_at(j);
      int diff = 0;
      for (int t = 0; t < shape.dim_count(); ++t)
        if (ci.coords[t] != cj.coords[t]) ++diff;
      if (diff != 1) continue;
      const hamband::Value d = a.values()[i] - a.values()[j];
      best = std::max(best, d < 0 ? -d : d);
    }
  return best;
}

inline hamband::Arrangement random_arrangement(const hamband::Shape& shape,
                                               std::mt19937_64& rng) {
  std::vector<hamband::Value> values(shape.volume());
  std::iota(values.begin(), values.end(), hamband::Value{1});
  std::shuffle(values.begin(), values.end(), rng);
  return hamband::Arrangement(shape, std::move(values));
}

inline long long numbering_bandwidth(int d, const std::vector<std::uint32_t>& order) {
  std::vector<long long> pos(std::size_t{1} << d);
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<long long>(k);
  long long band = 0;
  for (std::uint32_t v = 0; v < (1u << d); ++v)
    for (int bit = 0; bit < d; ++bit) {
      const std::uint32_t u = v | (1u << bit);
      if (u == v) continue;
      band = std::max(band, std::llabs(pos[v] - pos[u]));
    }
  return band;
}

// Minimum bandwidth over every ordering of the 2^d hypercube vertices.
// Only feasible for d <= 3.
inline long long min_bandwidth_exhaustive(int d) {
  std::vector<std::uint32_t> order(std::size_t{1} << d);
  std::iota(order.begin(), order.end(), 0u);
  long long best = numbering_bandwidth(d, order);
  while (std::next_permutation(order.begin(), order.end()))
    best = std::min(best, numbering_bandwidth(d, order));
  return best;
}

// Sum of central binomial coefficients, computed from a Pascal triangle.
inline long long central_binomial_sum(int d) {
  std::vector<unsigned long long> row{1};
  unsigned long long sum = 0;
  for (int t = 0; t < d; ++t) {
    sum += row[t / 2];
    std::vector<unsigned long long> next(row.size() + 1, 1);
    for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return static_cast<long long>(sum);
}

// Standard-tableau count of an n1 x n2 rectangle via the hook length
// formula, (n1*n2)! / prod(hooks). Exact in 128-bit arithmetic for
// volumes up to 24.
inline unsigned long long hook_length_count(int n1, int n2) {
  unsigned __int128 factorial = 1;
  for (int k = 2; k <= n1 * n2; ++k) factorial *= static_cast<unsigned>(k);
  unsigned __int128 hooks = 1;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) hooks *= static_cast<unsigned>((n1 - i) + (n2 - j) - 1);
  return static_cast<unsigned long long>(factorial / hooks);
}

// Unpruned enumeration of the linear extensions of the grid poset.
inline unsigned long long count_extensions_bruteforce(const hamband::Shape& shape) {
  const std::int64_t volume = shape.volume();
  const int d = shape.dim_count();
  std::vector<char> filled(volume, 0);
  unsigned long long total = 0;
  auto ready = [&](std::int64_t cell) {
    const hamband::Cell c = shape.cell_at(cell);
    for (int t = 1; t <= d; ++t)
      if (c.coords[t - 1] > 1 && !filled[cell - shape.stride(t)]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::int64_t placed) -> void {
    if (placed == volume) {
      ++total;
      return;
    }
    for (std::int64_t cell = 0; cell < volume; ++cell) {
      if (filled[cell] || !ready(cell)) continue;
      filled[cell] = 1;
      self(self, placed + 1);
      filled[cell] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace testsupport
