#pragma once

#include "hamband/arrangement.hpp"
#include "hamband/shape.hpp"

namespace hamband {

/// A built arrangement together with its recomputed spread and the
/// formula bracket it must land in. lower <= measured_spread <= upper is
/// enforced at construction time.
struct ConstructionResult {
  Arrangement arrangement;
  Value measured_spread = 0;
  Value lower = 0;
  Value upper = 0;
};

/// Even n1, 2 <= n1 <= n2: fill the upper half-columns consecutively left
/// to right, then the lower half-columns. Spread is exactly
/// n1*(n2+1)/2 - 1, the sharp bound.
ConstructionResult construct_2d_even(int n1, int n2);

/// Odd n1, 2 <= n1 <= n2: one continuous numbering over six blocks —
/// upper cells of the left columns, left half of the central row, upper
/// cells of the right columns, lower cells of the left columns, right
/// half of the central row, lower cells of the right columns. Spread is
/// exactly (n1+1)*n2/2 - 1, the sharp bound.
ConstructionResult construct_2d_odd(int n1, int n2);

/// Even n1, d >= 2: orthants filled one after another in the aligned
/// weight-major hypercube order, consecutive value blocks per orthant,
/// cells within an orthant in odometer order with dimension 1 fastest.
/// Accepts d == 2 through the same general path (weaker bracket) for
/// differential testing; the public dispatch uses the sharp 2D fills.
ConstructionResult construct_even(const Shape& shape);

/// Odd n1: delegates to construct_2d_odd for d == 2. For d >= 3 the
/// central hyperplane is left out of the orthant split; orthants are
/// filled in aligned order up to the first endpoint of a maximum-
/// difference hypercube edge, then the shadow of the filled orthants in
/// the central hyperplane is filled by the recursive (d-1)-dimensional
/// construction restricted to those cells, then the orthants through the
/// second endpoint, the rest of the central hyperplane, and the
/// remaining orthants.
ConstructionResult construct_odd(const Shape& shape);

/// Parity dispatch: d == 1 yields the identity arrangement, d == 2 the
/// sharp two-dimensional fills, d >= 3 construct_even/construct_odd.
ConstructionResult construct(const Shape& shape);

}  // namespace hamband
