#pragma once

#include <optional>

#include "hamband/shape.hpp"

namespace hamband {

/// Bandwidth of the product of d 2-cliques:
/// sum over t = 0..d-1 of C(t, floor(t/2)). Valid for 1 <= d <= 64.
Value hypercube_bandwidth(int d);

/// Sharp two-dimensional lower bound, 2 <= n1 <= n2 (callers pass sorted
/// dims; arguments are not auto-swapped):
///   (n1+1)*n2/2 - 1 for odd n1,
///   n1*(n2+1)/2 - 1 for even n1 (covers the even-even sharpening).
/// Matched by the 2D constructions, so it is also the exact bandwidth.
Value lower_bound_2d(int n1, int n2);

/// Two-dimensional separating-quadrant bound, evaluated by direct
/// enumeration of max over rows/columns of min over cells of the
/// separating-orthant area expression. Equals
/// max(ceil(n1/2)*n2 - 1, n1*ceil(n2/2) - 1), which for even-even shapes
/// sits strictly below lower_bound_2d (the sharpened form).
Value quadrant_lower_bound_2d(int n1, int n2);

/// Lower bound for d >= 2: the sharp 2D form when d == 2, otherwise
/// hypercube_bandwidth(d) * prod(floor(n_t/2)).
Value lower_bound(const Shape& shape);

/// Upper bound for d >= 2 (spread of the constructions): the sharp 2D
/// form when d == 2; for d >= 3,
///   even n1: hypercube_bandwidth(d) * prod(ceil(n_t/2)) + n1/2 - 1,
///   odd  n1: upper_bound(n2..nd) + hypercube_bandwidth(d) * floor(n1/2)
///            * prod_{t>=2}(ceil(n_t/2)),
/// recursing with base cases d'=2 -> lower_bound_2d and d'=1 -> n-1.
Value upper_bound(const Shape& shape);

/// The d-dimensional formulas evaluated as-is at every d >= 2, including
/// d == 2 where they are weaker than the sharp forms. Exposed for study.
Value lower_bound_general(const Shape& shape);
Value upper_bound_general(const Shape& shape);

struct BoundsReport {
  Shape shape;
  Value lower = 0;
  Value upper = 0;
  std::optional<Value> construction_spread;
};

/// Assembles a report from the sharp bounds (or the general-form ones)
/// and validates lower <= [construction_spread <=] upper.
BoundsReport bounds_report(const Shape& shape,
                           std::optional<Value> construction_spread = {},
                           bool general_form = false);

}  // namespace hamband
