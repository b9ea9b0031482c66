#include "hamband/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hamband/bounds.hpp"
#include "hamband/hypercube.hpp"

namespace hamband {

namespace {

constexpr std::int64_t kMaterializeLimit = 100'000'000;

void require_materializable(const Shape& shape) {
  if (shape.volume() > kMaterializeLimit)
    throw std::invalid_argument("construct: shape too large to materialize");
}

void require_2d_sorted(int n1, int n2) {
  if (n1 < 2 || n1 > n2)
    throw std::invalid_argument("construct: need 2 <= n1 <= n2");
}

std::int64_t index_of_coords(const Shape& shape, const std::vector<int>& coords) {
  std::int64_t index = 0;
  for (int t = 1; t <= shape.dim_count(); ++t)
    index += static_cast<std::int64_t>(coords[t - 1] - 1) * shape.stride(t);
  return index;
}

// Enumerates the cells of one orthant in odometer order, dimension 1
// varying fastest, invoking fn with the current coordinate vector.
template <typename F>
void for_each_orthant_cell(const Shape& shape, const OrthantDecomposition& dec,
                           std::uint32_t mask, F&& fn) {
  const int d = shape.dim_count();
  std::vector<std::pair<int, int>> range(d);
  for (int t = 1; t <= d; ++t) range[t - 1] = dec.coord_range(mask, t);
  std::vector<int> coords(d);
  for (int t = 0; t < d; ++t) coords[t] = range[t].first;
  while (true) {
    fn(coords);
    int t = 0;
    while (t < d) {
      if (++coords[t] <= range[t].second) break;
      coords[t] = range[t].first;
      ++t;
    }
    if (t == d) break;
  }
}

ConstructionResult finish(Arrangement arrangement, Value lower, Value upper) {
  const Value measured = spread(arrangement);
  if (measured < lower || measured > upper)
    throw std::logic_error("construct: spread " + std::to_string(measured) +
                           " escaped the bracket [" + std::to_string(lower) +
                           ", " + std::to_string(upper) + "]");
  return ConstructionResult{std::move(arrangement), measured, lower, upper};
}

}  // namespace

ConstructionResult construct_2d_even(int n1, int n2) {
  require_2d_sorted(n1, n2);
  if (n1 % 2 != 0)
    throw std::invalid_argument("construct_2d_even: n1 must be even");
  Shape shape{n1, n2};
  require_materializable(shape);
  const std::int64_t half = n1 / 2;
  std::vector<Value> values(shape.volume());
  for (int i1 = 1; i1 <= n1; ++i1)
    for (int i2 = 1; i2 <= n2; ++i2) {
      const std::int64_t index = static_cast<std::int64_t>(i1 - 1) * n2 + (i2 - 1);
      if (i1 <= half)
        values[index] = (i2 - 1) * half + i1;
      else
        values[index] = static_cast<std::int64_t>(n1) * n2 / 2 + (i2 - 1) * half +
                        (i1 - half);
    }
  auto result = finish(Arrangement(std::move(shape), std::move(values)),
                       lower_bound_2d(n1, n2), lower_bound_2d(n1, n2));
  if (result.measured_spread != static_cast<Value>(n1) * (n2 + 1) / 2 - 1)
    throw std::logic_error("construct_2d_even: spread disagrees with the closed form");
  return result;
}

ConstructionResult construct_2d_odd(int n1, int n2) {
  require_2d_sorted(n1, n2);
  if (n1 % 2 != 1)
    throw std::invalid_argument("construct_2d_odd: n1 must be odd");
  Shape shape{n1, n2};
  require_materializable(shape);
  const int up = n1 / 2;         // rows above the central row
  const int mid = up + 1;        // central row
  const int left = (n2 + 1) / 2; // columns in the left part
  std::vector<Value> values(shape.volume(), 0);
  Value next = 1;
  auto put = [&](int i1, int i2) {
    values[static_cast<std::int64_t>(i1 - 1) * n2 + (i2 - 1)] = next++;
  };
  // Upper cells of the left columns, column by column.
  for (int i2 = 1; i2 <= left; ++i2)
    for (int i1 = 1; i1 <= up; ++i1) put(i1, i2);
  // Left half of the central row.
  for (int i2 = 1; i2 <= left; ++i2) put(mid, i2);
  // Upper cells of the right columns.
  for (int i2 = left + 1; i2 <= n2; ++i2)
    for (int i1 = 1; i1 <= up; ++i1) put(i1, i2);
  // Lower cells of the left columns.
  for (int i2 = 1; i2 <= left; ++i2)
    for (int i1 = mid + 1; i1 <= n1; ++i1) put(i1, i2);
  // Right half of the central row.
  for (int i2 = left + 1; i2 <= n2; ++i2) put(mid, i2);
  // Lower cells of the right columns.
  for (int i2 = left + 1; i2 <= n2; ++i2)
    for (int i1 = mid + 1; i1 <= n1; ++i1) put(i1, i2);

  auto result = finish(Arrangement(std::move(shape), std::move(values)),
                       lower_bound_2d(n1, n2), lower_bound_2d(n1, n2));
  if (result.measured_spread != static_cast<Value>(n1 + 1) * n2 / 2 - 1)
    throw std::logic_error("construct_2d_odd: spread disagrees with the closed form");
  return result;
}

ConstructionResult construct_even(const Shape& shape) {
  const int d = shape.dim_count();
  if (d < 2) throw std::invalid_argument("construct_even: need d >= 2");
  if (shape.dim(1) % 2 != 0)
    throw std::invalid_argument("construct_even: n1 must be even");
  require_materializable(shape);

  const OrthantDecomposition dec = decompose(shape, /*odd_mode=*/false);
  const HypercubeNumbering numbering = align_max_edges_to_dim1(harper_numbering(d));

  std::vector<Value> values(shape.volume(), 0);
  Value next = 1;
  for (std::uint32_t mask : numbering.order())
    for_each_orthant_cell(shape, dec, mask, [&](const std::vector<int>& coords) {
      values[index_of_coords(shape, coords)] = next++;
    });
  if (next != shape.volume() + 1)
    throw std::logic_error("construct_even: orthants did not cover the matrix");

  const bool general = d == 2;
  const Value lo = general ? lower_bound_general(shape) : lower_bound(shape);
  const Value hi = general ? upper_bound_general(shape) : upper_bound(shape);
  return finish(Arrangement(shape, std::move(values)), lo, hi);
}

ConstructionResult construct_odd(const Shape& shape) {
  const int d = shape.dim_count();
  if (d < 2) throw std::invalid_argument("construct_odd: need d >= 2");
  if (shape.dim(1) % 2 != 1)
    throw std::invalid_argument("construct_odd: n1 must be odd");
  if (d == 2) return construct_2d_odd(shape.dim(1), shape.dim(2));
  require_materializable(shape);

  const OrthantDecomposition dec = decompose(shape, /*odd_mode=*/true);
  const HypercubeNumbering numbering = align_max_edges_to_dim1(harper_numbering(d));
  const auto& order = numbering.order();
  const Value band = numbering.bandwidth();

  // Maximum-difference edges, all along dimension 1 after alignment,
  // ordered by lower endpoint position with ties broken by the other
  // endpoint's bit string.
  std::vector<std::pair<std::int64_t, std::uint32_t>> max_edges;  // (p(u), v)
  for (std::uint32_t v = 0; v < (1u << d); ++v) {
    if (v & 1u) continue;
    const std::uint32_t u = v | 1u;
    if (std::abs(numbering.position(v) - numbering.position(u)) != band) continue;
    max_edges.emplace_back(std::min(numbering.position(v), numbering.position(u)),
                           numbering.position(v) < numbering.position(u) ? u : v);
  }
  if (max_edges.empty())
    throw std::logic_error("construct_odd: no maximum edge along dimension 1");
  std::sort(max_edges.begin(), max_edges.end());

  // Recursive optimal arrangement of the central hyperplane's shape.
  std::vector<int> sub_dims(shape.dims().begin() + 1, shape.dims().end());
  const Arrangement central = construct(Shape(sub_dims)).arrangement;
  const Shape& sub = central.shape();

  // Profile of a central cell: the orthant mask of dims 2..d it projects into.
  auto profile_of = [&](const Cell& cell) {
    std::uint32_t profile = 0;
    for (int t = 2; t <= d; ++t)
      if (cell.coords[t - 2] > shape.dim(t) / 2) profile |= 1u << (t - 2);
    return profile;
  };

  const int central_row = dec.central_coordinate();

  // Lays the matrix out for one choice of maximum edge: orthants through
  // the lower endpoint, the shadow of those orthants in the central
  // hyperplane, orthants through the upper endpoint, the rest of the
  // central hyperplane, the remaining orthants. Central cells follow the
  // rank order of the recursive arrangement restricted to each batch.
  auto build = [&](std::size_t stop_first, std::size_t stop_second) {
    std::vector<Value> values(shape.volume(), 0);
    Value next = 1;
    auto fill_orthants = [&](std::size_t from, std::size_t to) {  // half-open
      for (std::size_t k = from; k < to; ++k)
        for_each_orthant_cell(shape, dec, order[k],
                              [&](const std::vector<int>& coords) {
                                values[index_of_coords(shape, coords)] = next++;
                              });
    };
    std::unordered_set<std::uint32_t> shadow;
    for (std::size_t k = 0; k < stop_first; ++k) shadow.insert(order[k] >> 1);
    auto fill_central = [&](bool inside) {
      std::vector<int> coords(d);
      coords[0] = central_row;
      for (Value rank = 1; rank <= sub.volume(); ++rank) {
        const Cell cell = central.cell_of(rank);
        if (shadow.contains(profile_of(cell)) != inside) continue;
        std::copy(cell.coords.begin(), cell.coords.end(), coords.begin() + 1);
        values[index_of_coords(shape, coords)] = next++;
      }
    };
    fill_orthants(0, stop_first);
    fill_central(true);
    fill_orthants(stop_first, stop_second);
    fill_central(false);
    fill_orthants(stop_second, order.size());
    if (next != shape.volume() + 1)
      throw std::logic_error("construct_odd: fill did not cover the matrix");
    return values;
  };

  // The earliest maximum edge can push a line past the bracket once the
  // second central batch grows large, so scan the edges in order and keep
  // the first one whose layout stays inside; fall back to the flattest.
  const Value lo = lower_bound(shape);
  const Value hi = upper_bound(shape);
  std::vector<Value> best_values;
  Value best_spread = std::numeric_limits<Value>::max();
  for (const auto& [u_pos, v_vertex] : max_edges) {
    std::vector<Value> values = build(static_cast<std::size_t>(u_pos),
                                      static_cast<std::size_t>(numbering.position(v_vertex)));
    Arrangement candidate(shape, values);
    const Value measured = spread(candidate);
    if (measured <= hi)
      return finish(std::move(candidate), lo, hi);
    if (measured < best_spread) {
      best_spread = measured;
      best_values = std::move(values);
    }
  }
  return finish(Arrangement(shape, std::move(best_values)), lo, hi);
}

ConstructionResult construct(const Shape& shape) {
  const int d = shape.dim_count();
  if (d == 1) {
    require_materializable(shape);
    std::vector<Value> values(shape.volume());
    for (std::int64_t i = 0; i < shape.volume(); ++i) values[i] = i + 1;
    const Value band = shape.volume() - 1;  // a single clique
    return finish(Arrangement(shape, std::move(values)), band, band);
  }
  if (d == 2) {
    return shape.dim(1) % 2 == 0 ? construct_2d_even(shape.dim(1), shape.dim(2))
                                 : construct_2d_odd(shape.dim(1), shape.dim(2));
  }
  return shape.dim(1) % 2 == 0 ? construct_even(shape) : construct_odd(shape);
}

}  // namespace hamband
