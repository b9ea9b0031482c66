#include "hamband/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamband {

namespace {

Value checked_mul(Value a, Value b) {
  if (a != 0 && b > std::numeric_limits<Value>::max() / a)
    throw std::overflow_error("bound formula overflows the 64-bit value range");
  return a * b;
}

void require_sorted_2d(int n1, int n2) {
  if (n1 < 2)
    throw std::invalid_argument("2D bounds require n1 >= 2, got " + std::to_string(n1));
  if (n1 > n2)
    throw std::invalid_argument("2D bounds require n1 <= n2 (pass sorted dims)");
}

void require_dims(const Shape& shape, int min_d, const char* what) {
  if (shape.dim_count() < min_d)
    throw std::invalid_argument(std::string(what) + " requires at least " +
                                std::to_string(min_d) + " dimensions");
}

Value floor_half_product(const Shape& shape) {
  Value p = 1;
  for (int n : shape.dims()) p = checked_mul(p, n / 2);
  return p;
}

// ceil(n_t/2) product over dims()[from..].
Value ceil_half_product(const std::vector<int>& dims, std::size_t from) {
  Value p = 1;
  for (std::size_t i = from; i < dims.size(); ++i)
    p = checked_mul(p, (dims[i] + 1) / 2);
  return p;
}

Value upper_bound_rec(const std::vector<int>& dims, std::size_t from, bool general) {
  const std::size_t d = dims.size() - from;
  const int n1 = dims[from];
  if (d == 1) return n1 - 1;
  if (d == 2 && !general) return lower_bound_2d(n1, dims[from + 1]);
  const Value b = hypercube_bandwidth(static_cast<int>(d));
  if (n1 % 2 == 0)
    return checked_mul(b, ceil_half_product(dims, from)) + n1 / 2 - 1;
  return upper_bound_rec(dims, from + 1, general) +
         checked_mul(b, checked_mul(n1 / 2, ceil_half_product(dims, from + 1)));
}

}  // namespace

Value hypercube_bandwidth(int d) {
  if (d < 1 || d > 64)
    throw std::invalid_argument("hypercube_bandwidth: d must be in [1, 64]");
  // Pascal's triangle row by row; only the middle entry of each row is used.
  std::vector<std::uint64_t> row{1};
  std::uint64_t sum = 0;
  for (int t = 0; t < d; ++t) {
    sum += row[t / 2];  // C(t, floor(t/2))
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return static_cast<Value>(sum);
}

Value lower_bound_2d(int n1, int n2) {
  require_sorted_2d(n1, n2);
  const Value a = n1, b = n2;
  if (n1 % 2 == 1) return (a + 1) * b / 2 - 1;
  return a * (b + 1) / 2 - 1;
}

Value quadrant_lower_bound_2d(int n1, int n2) {
  require_sorted_2d(n1, n2);
  const Value v1 = n1, v2 = n2;
  Value best = std::numeric_limits<Value>::min();
  // Lines that are rows: minimize over the cells of row i1; the larger
  // part of the column through the cell is already filled.
  for (Value i1 = 1; i1 <= v1; ++i1) {
    Value line_min = std::numeric_limits<Value>::max();
    for (Value i2 = 1; i2 <= v2; ++i2) {
      const Value area = i1 * (v2 - i2 + 1) + (v1 - i1 + 1) * i2 - 2 -
                         std::max(i1 - 1, v1 - i1);
      line_min = std::min(line_min, area);
    }
    best = std::max(best, line_min);
  }
  // Columns, symmetrically.
  for (Value i2 = 1; i2 <= v2; ++i2) {
    Value line_min = std::numeric_limits<Value>::max();
    for (Value i1 = 1; i1 <= v1; ++i1) {
      const Value area = i1 * (v2 - i2 + 1) + (v1 - i1 + 1) * i2 - 2 -
                         std::max(i2 - 1, v2 - i2);
      line_min = std::min(line_min, area);
    }
    best = std::max(best, line_min);
  }
  return best;
}

Value lower_bound(const Shape& shape) {
  require_dims(shape, 2, "lower_bound");
  if (shape.dim_count() == 2) return lower_bound_2d(shape.dim(1), shape.dim(2));
  return checked_mul(hypercube_bandwidth(shape.dim_count()), floor_half_product(shape));
}

Value upper_bound(const Shape& shape) {
  require_dims(shape, 2, "upper_bound");
  if (shape.dim_count() == 2) return lower_bound_2d(shape.dim(1), shape.dim(2));
  return upper_bound_rec(shape.dims(), 0, /*general=*/false);
}

Value lower_bound_general(const Shape& shape) {
  require_dims(shape, 2, "lower_bound_general");
  return checked_mul(hypercube_bandwidth(shape.dim_count()), floor_half_product(shape));
}

Value upper_bound_general(const Shape& shape) {
  require_dims(shape, 2, "upper_bound_general");
  return upper_bound_rec(shape.dims(), 0, /*general=*/true);
}

BoundsReport bounds_report(const Shape& shape,
                           std::optional<Value> construction_spread,
                           bool general_form) {
  BoundsReport report{shape,
                      general_form ? lower_bound_general(shape) : lower_bound(shape),
                      general_form ? upper_bound_general(shape) : upper_bound(shape),
                      construction_spread};
  if (report.lower > report.upper)
    throw std::logic_error("bounds report: lower bound exceeds upper bound");
  if (report.construction_spread &&
      (*report.construction_spread < report.lower ||
       *report.construction_spread > report.upper))
    throw std::logic_error("bounds report: construction spread escapes the bracket");
  return report;
}

}  // namespace hamband
