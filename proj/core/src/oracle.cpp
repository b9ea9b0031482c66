#include "hamband/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "hamband/bounds.hpp"

namespace hamband {

namespace {

// Line ids per cell: d ids, one for each dimension, numbered so that the
// lines of dimension t occupy a contiguous block.
struct LineIndex {
  explicit LineIndex(const Shape& shape) {
    const int d = shape.dim_count();
    const std::int64_t volume = shape.volume();
    ids.resize(static_cast<std::size_t>(volume) * d);
    std::int64_t base = 0;
    for (int t = 1; t <= d; ++t) {
      const std::int64_t stride = shape.stride(t);
      const int n = shape.dim(t);
      for (std::int64_t cell = 0; cell < volume; ++cell) {
        const std::int64_t collapsed =
            (cell / (stride * n)) * stride + cell % stride;
        ids[cell * d + (t - 1)] = static_cast<std::int32_t>(base + collapsed);
      }
      base += volume / n;
    }
    line_total = base;
  }

  std::vector<std::int32_t> ids;
  std::int64_t line_total = 0;
};

struct Searcher {
  Searcher(const Shape& shape_in, bool restricted_in, std::uint64_t budget_in)
      : shape(shape_in),
        restricted(restricted_in),
        budget(budget_in),
        d(shape_in.dim_count()),
        volume(shape_in.volume()),
        line_index(shape_in),
        line_min(line_index.line_total, 0),
        filled(volume, false),
        pred_remaining(volume, 0),
        values(volume, 0) {
    if (restricted) {
      for (std::int64_t cell = 0; cell < volume; ++cell) {
        const Cell c = shape.cell_at(cell);
        for (int t = 1; t <= d; ++t)
          if (c.coords[t - 1] > 1) ++pred_remaining[cell];
      }
    }
  }

  const Shape& shape;
  const bool restricted;
  const std::uint64_t budget;
  const int d;
  const std::int64_t volume;
  LineIndex line_index;

  std::vector<Value> line_min;  // 0 while the line is still empty
  std::vector<char> filled;
  std::vector<int> pred_remaining;
  std::vector<Value> values;

  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::optional<Value> incumbent;
  std::vector<Value> best_values;

  std::optional<OracleResult> best_result() const {
    if (!incumbent) return std::nullopt;
    return OracleResult{shape, *incumbent, Arrangement(shape, best_values), leaves};
  }

  void adjust_successors(std::int64_t cell, int delta) {
    const Cell c = shape.cell_at(cell);
    for (int t = 1; t <= d; ++t)
      if (c.coords[t - 1] < shape.dim(t)) pred_remaining[cell + shape.stride(t)] += delta;
  }

  void dfs(Value v, Value partial_spread) {
    if (v > volume) {
      incumbent = partial_spread;
      best_values = values;
      ++leaves;
      return;
    }
    bool expanded = false;
    for (std::int64_t cell = 0; cell < volume; ++cell) {
      if (filled[cell]) continue;
      if (restricted && pred_remaining[cell] > 0) continue;
      // v is the largest value placed so far, so it becomes the maximum
      // of every line it joins; the spread those lines reach is final.
      Value contribution = 0;
      const std::int32_t* ids = &line_index.ids[cell * d];
      for (int t = 0; t < d; ++t) {
        const Value lo = line_min[ids[t]];
        if (lo != 0) contribution = std::max(contribution, v - lo);
      }
      if (incumbent && contribution >= *incumbent) continue;

      if (++nodes > budget)
        throw BudgetExceeded("oracle: node budget of " + std::to_string(budget) +
                                 " exhausted",
                             nodes, best_result());
      filled[cell] = true;
      values[cell] = v;
      if (restricted) adjust_successors(cell, -1);
      Value saved[32];
      for (int t = 0; t < d; ++t) {
        saved[t] = line_min[ids[t]];
        if (saved[t] == 0) line_min[ids[t]] = v;
      }

      dfs(v + 1, std::max(partial_spread, contribution));

      for (int t = 0; t < d; ++t) line_min[ids[t]] = saved[t];
      if (restricted) adjust_successors(cell, +1);
      values[cell] = 0;
      filled[cell] = false;
      expanded = true;
    }
    if (!expanded) ++leaves;
  }
};

OracleResult run_search(const Shape& shape, bool restricted, std::uint64_t budget) {
  Searcher searcher(shape, restricted, budget);
  searcher.dfs(1, 0);
  auto result = searcher.best_result();
  if (!result) throw std::logic_error("oracle: search finished without a witness");

  if (spread(result->witness) != result->optimum)
    throw std::logic_error("oracle: witness spread disagrees with the optimum");
  if (restricted && !is_monotonic(result->witness))
    throw std::logic_error("oracle: restricted witness is not monotonic");
  if (shape.dim_count() >= 2 && result->optimum < lower_bound(shape))
    throw std::logic_error("oracle: optimum fell below the lower bound");
  return std::move(*result);
}

}  // namespace

OracleResult exact_min_spread(const Shape& shape, std::uint64_t node_budget) {
  if (shape.volume() > 24) {
    LinearExtensionCount estimate;
    try {
      estimate = count_linear_extensions(shape);
    } catch (const std::overflow_error&) {
      estimate.saturated = true;
    } catch (const std::invalid_argument&) {
      estimate.saturated = true;  // beyond the countable range entirely
    }
    if (estimate.saturated || estimate.count > node_budget)
      throw BudgetExceeded(
          "oracle: estimated linear-extension count exceeds the node budget", 0,
          std::nullopt);
  }
  return run_search(shape, /*restricted=*/true, node_budget);
}

OracleResult exact_min_spread_unrestricted(const Shape& shape,
                                           std::uint64_t node_budget) {
  if (shape.volume() > 9)
    throw std::invalid_argument(
        "exact_min_spread_unrestricted: limited to volume <= 9");
  return run_search(shape, /*restricted=*/false, node_budget);
}

LinearExtensionCount count_linear_extensions(const Shape& shape) {
  const std::int64_t volume = shape.volume();
  if (volume > 63)
    throw std::invalid_argument("count_linear_extensions: limited to volume <= 63");
  const int d = shape.dim_count();

  std::vector<std::uint64_t> pred_bits(volume, 0);
  for (std::int64_t cell = 0; cell < volume; ++cell) {
    const Cell c = shape.cell_at(cell);
    for (int t = 1; t <= d; ++t)
      if (c.coords[t - 1] > 1)
        pred_bits[cell] |= std::uint64_t{1} << (cell - shape.stride(t));
  }

  const std::uint64_t full =
      volume == 63 ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << volume) - 1;
  constexpr std::size_t kTableLimit = std::size_t{1} << 23;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  bool saturated = false;

  auto saturating_add = [&](std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
      saturated = true;
      return std::numeric_limits<std::uint64_t>::max();
    }
    return a + b;
  };

  auto count = [&](auto&& self, std::uint64_t mask) -> std::uint64_t {
    if (mask == full) return 1;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::int64_t cell = 0; cell < volume; ++cell) {
      const std::uint64_t bit = std::uint64_t{1} << cell;
      if (mask & bit) continue;
      if ((mask & pred_bits[cell]) != pred_bits[cell]) continue;
      total = saturating_add(total, self(self, mask | bit));
    }
    if (memo.size() >= kTableLimit)
      throw std::overflow_error("count_linear_extensions: downset table too large");
    memo.emplace(mask, total);
    return total;
  };

  const std::uint64_t total = count(count, 0);
  return LinearExtensionCount{total, saturated};
}

}  // namespace hamband
