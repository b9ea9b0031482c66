#include "hamband/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "hamband/bounds.hpp"

namespace hamband {

HypercubeNumbering HypercubeNumbering::from_order(int d,
                                                  std::vector<std::uint32_t> order) {
  if (d < 1 || d > 20)
    throw std::invalid_argument("hypercube numbering: d must be in [1, 20]");
  const std::size_t count = std::size_t{1} << d;
  if (order.size() != count)
    throw std::invalid_argument("hypercube numbering: expected " +
                                std::to_string(count) + " vertices");
  std::vector<std::int64_t> position(count, -1);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint32_t v = order[k];
    if (v >= count || position[v] != -1)
      throw std::invalid_argument("hypercube numbering: order is not a permutation");
    position[v] = static_cast<std::int64_t>(k) + 1;
  }
  if (order[0] != 0)
    throw std::invalid_argument(
        "hypercube numbering: must start at the all-zeros vertex");

  Value achieved = 0;
  for (std::uint32_t v = 0; v < count; ++v)
    for (int bit = 0; bit < d; ++bit) {
      const std::uint32_t u = v | (1u << bit);
      if (u == v) continue;
      achieved = std::max(achieved, std::abs(position[v] - position[u]));
    }
  const Value expected = hypercube_bandwidth(d);
  if (achieved != expected)
    throw std::invalid_argument("hypercube numbering: achieved bandwidth " +
                                std::to_string(achieved) + " != " +
                                std::to_string(expected));

  HypercubeNumbering numbering;
  numbering.d_ = d;
  numbering.order_ = std::move(order);
  numbering.position_ = std::move(position);
  numbering.bandwidth_ = achieved;
  return numbering;
}

std::int64_t HypercubeNumbering::position(std::uint32_t vertex) const {
  if (vertex >= order_.size())
    throw std::invalid_argument("hypercube numbering: vertex out of range");
  return position_[vertex];
}

std::vector<std::string> HypercubeNumbering::bit_strings() const {
  std::vector<std::string> out;
  out.reserve(order_.size());
  for (std::uint32_t v : order_) {
    std::string s(d_, '0');
    for (int bit = 0; bit < d_; ++bit)
      if (v & (1u << bit)) s[d_ - 1 - bit] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

HypercubeNumbering harper_numbering(int d) {
  if (d < 1 || d > 20)
    throw std::invalid_argument("harper_numbering: d must be in [1, 20]");
  const std::uint32_t count = 1u << d;
  // Always number an unnumbered neighbor of the earliest-numbered vertex
  // that still has one; scanning bits from the low end makes the greedy
  // deterministic. (Sorting by weight with lexicographic ties agrees with
  // this up to d = 4 but stops being optimal at d = 5.)
  std::vector<std::uint32_t> order;
  order.reserve(count);
  order.push_back(0);
  std::vector<char> seen(count, 0);
  seen[0] = 1;
  for (std::size_t focus = 0; focus < order.size(); ++focus)
    for (int bit = 0; bit < d; ++bit) {
      const std::uint32_t u = order[focus] ^ (1u << bit);
      if (!seen[u]) {
        seen[u] = 1;
        order.push_back(u);
      }
    }
  return HypercubeNumbering::from_order(d, std::move(order));
}

HypercubeNumbering align_max_edges_to_dim1(const HypercubeNumbering& numbering) {
  const int d = numbering.dim();
  const std::uint32_t count = 1u << d;
  const Value band = numbering.bandwidth();

  std::uint32_t max_edge_bits = 0;
  for (std::uint32_t v = 0; v < count; ++v)
    for (int bit = 0; bit < d; ++bit) {
      const std::uint32_t u = v | (1u << bit);
      if (u == v) continue;
      if (std::abs(numbering.position(v) - numbering.position(u)) == band)
        max_edge_bits |= 1u << bit;
    }

  if (std::popcount(max_edge_bits) != 1) {
    std::string bits;
    for (int bit = 0; bit < d; ++bit)
      if (max_edge_bits & (1u << bit)) bits += (bits.empty() ? "" : ",") + std::to_string(bit + 1);
    throw AlignmentError(
        "maximum-difference edges run along dimensions {" + bits +
        "}; no coordinate permutation maps them all to dimension 1");
  }
  const int hot = std::countr_zero(max_edge_bits);
  if (hot == 0) return numbering;

  // When the maximum edges sit on the top bit, reverse all coordinates:
  // bit t goes to dimension d-t+1. The reversal keeps each half-cube's
  // subsequence aligned with the (d-1)-dimensional numbering, which the
  // recursive constructions rely on. Otherwise transpose the hot bit
  // with bit 0.
  std::vector<std::uint32_t> mapped;
  mapped.reserve(count);
  if (hot == d - 1) {
    for (std::uint32_t v : numbering.order()) {
      std::uint32_t w = 0;
      for (int bit = 0; bit < d; ++bit)
        if (v & (1u << bit)) w |= 1u << (d - 1 - bit);
      mapped.push_back(w);
    }
  } else {
    for (std::uint32_t v : numbering.order()) {
      const std::uint32_t a = (v >> hot) & 1u, b = v & 1u;
      std::uint32_t w = v & ~((1u << hot) | 1u);
      w |= a | (b << hot);
      mapped.push_back(w);
    }
  }
  return HypercubeNumbering::from_order(d, std::move(mapped));
}

std::pair<int, int> OrthantDecomposition::coord_range(std::uint32_t mask,
                                                      int t) const {
  const int n = shape_.dim(t);
  const bool high = (mask >> (t - 1)) & 1u;
  if (odd_mode_ && t == 1) {
    const int central = (n + 1) / 2;
    return high ? std::pair{central + 1, n} : std::pair{1, central - 1};
  }
  const int low_size = n / 2;
  return high ? std::pair{low_size + 1, n} : std::pair{1, low_size};
}

std::int64_t OrthantDecomposition::orthant_volume(std::uint32_t mask) const {
  std::int64_t volume = 1;
  for (int t = 1; t <= dim(); ++t) {
    const auto [lo, hi] = coord_range(mask, t);
    volume *= hi - lo + 1;
  }
  return volume;
}

std::int64_t OrthantDecomposition::covered_volume() const {
  const std::int64_t v = shape_.volume();
  return odd_mode_ ? v - v / shape_.dim(1) : v;
}

int OrthantDecomposition::central_coordinate() const {
  if (!odd_mode_)
    throw std::logic_error("central coordinate only exists in odd mode");
  return (shape_.dim(1) + 1) / 2;
}

OrthantDecomposition decompose(const Shape& shape, bool odd_mode) {
  if (shape.dim_count() > 20)
    throw std::invalid_argument("decompose: limited to 20 dimensions");
  if (shape.dim(1) < 2)
    throw std::invalid_argument("decompose: dims must be at least 2");
  if (odd_mode && shape.dim(1) % 2 == 0)
    throw std::invalid_argument("decompose: odd mode requires an odd n1");
  OrthantDecomposition dec(shape, odd_mode);
  // The low/high ranges are disjoint by construction; covering reduces to
  // the per-dimension sizes adding back up.
  for (int t = 1; t <= dec.dim(); ++t) {
    const auto [lo0, hi0] = dec.coord_range(0, t);
    const auto [lo1, hi1] = dec.coord_range(1u << (t - 1), t);
    const int expected = (odd_mode && t == 1) ? shape.dim(t) - 1 : shape.dim(t);
    if ((hi0 - lo0 + 1) + (hi1 - lo1 + 1) != expected || hi0 + 1 > lo1)
      throw std::logic_error("decompose: halves fail to partition a dimension");
  }
  return dec;
}

}  // namespace hamband
