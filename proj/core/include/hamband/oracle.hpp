#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "hamband/arrangement.hpp"
#include "hamband/shape.hpp"

namespace hamband {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct OracleResult {
  Shape shape;
  Value optimum = 0;
  Arrangement witness;
  /// Maximal search branches explored: completed extensions plus branches
  /// whose every candidate was pruned. Equals the linear-extension count
  /// when nothing is pruned.
  std::uint64_t extensions_visited = 0;
};

/// Raised when the node budget runs out; carries the best complete
/// arrangement found so far (an upper-bound witness), if any.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::string message, std::uint64_t nodes,
                 std::optional<OracleResult> best)
      : std::runtime_error(std::move(message)),
        nodes_used(nodes),
        best_so_far(std::move(best)) {}

  std::uint64_t nodes_used = 0;
  std::optional<OracleResult> best_so_far;
};

/// Exact minimum spread by enumerating linear extensions of the
/// product-of-chains poset: values 1..V are placed in increasing order,
/// a cell becoming placeable once the cell one step lower in every
/// coordinate is filled. Restricting the search to these monotonic
/// arrangements loses nothing, since sorting any arrangement monotonic
/// never increases its spread. A branch is cut as soon as placing the
/// next value into some line would reach the incumbent spread.
///
/// Requires volume <= 24, or an exactly counted linear-extension total
/// within the node budget. Every placement consumes one budget node.
OracleResult exact_min_spread(const Shape& shape,
                              std::uint64_t node_budget = kDefaultNodeBudget);

/// Branch and bound over all bijections (volume <= 9); must agree with
/// exact_min_spread. Exists to validate the monotone restriction in code.
OracleResult exact_min_spread_unrestricted(
    const Shape& shape, std::uint64_t node_budget = kDefaultNodeBudget);

struct LinearExtensionCount {
  std::uint64_t count = 0;
  bool saturated = false;  // true when the count overflowed and was clamped
};

/// Exact linear-extension count via dynamic programming over downsets,
/// guaranteed exact for volume <= 24 (2D counts match the hook length
/// formula). Counts that overflow 64 bits saturate and are flagged.
LinearExtensionCount count_linear_extensions(const Shape& shape);

}  // namespace hamband
