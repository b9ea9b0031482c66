#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamband/shape.hpp"

namespace hamband {

/// Vertices of K_2^d are d-bit masks. Bit t-1 (LSB = dimension 1) selects
/// the high half of dimension t when the mask is used as an orthant id;
/// bit strings render most-significant bit first.

/// Raised when a numbering cannot be repaired so that every
/// maximum-difference edge runs along dimension 1.
struct AlignmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An ordering of the 2^d hypercube vertices; position k (1-based) holds
/// the vertex numbered k. Valid instances are permutations that start at
/// the all-zeros vertex and achieve bandwidth hypercube_bandwidth(d).
class HypercubeNumbering {
 public:
  /// Validates the invariants above; throws std::invalid_argument.
  static HypercubeNumbering from_order(int d, std::vector<std::uint32_t> order);

  int dim() const { return d_; }
  const std::vector<std::uint32_t>& order() const { return order_; }

  /// 1-based position of a vertex.
  std::int64_t position(std::uint32_t vertex) const;

  /// Achieved bandwidth: max |position(u) - position(v)| over vertex
  /// pairs at Hamming distance 1. Equals hypercube_bandwidth(dim()).
  Value bandwidth() const { return bandwidth_; }

  /// Vertices in order, rendered as d-bit strings (MSB first).
  std::vector<std::string> bit_strings() const;

 private:
  HypercubeNumbering() = default;

  int d_ = 0;
  std::vector<std::uint32_t> order_;
  std::vector<std::int64_t> position_;
  Value bandwidth_ = 0;
};

/// Harper numbering: starting from the all-zeros vertex, each new vertex
/// is an unnumbered neighbor of the earliest-numbered vertex that still
/// has one, neighbors taken in ascending coordinate order. Deterministic
/// and optimal; the factory asserts the achieved bandwidth against the
/// closed form. Valid for 1 <= d <= 20.
HypercubeNumbering harper_numbering(int d);

/// Permutes coordinates so that every maximum-difference edge differs in
/// the bit mapped to matrix dimension 1 (the LSB). The permutation is a
/// hypercube automorphism: bandwidth and the multiset of edge position
/// differences are unchanged. Throws AlignmentError when the maximum
/// edges span several coordinates and no permutation can align them.
HypercubeNumbering align_max_edges_to_dim1(const HypercubeNumbering& numbering);

/// Splits each dimension of a shape into a low and a high half, indexing
/// the 2^d orthants by bit masks. Low halves take floor(n_t/2) and high
/// halves ceil(n_t/2). In odd mode (n1 odd) dimension 1 instead uses the
/// rows strictly below/above the central row ceil(n1/2), which is left
/// out of every orthant.
class OrthantDecomposition {
 public:
  const Shape& shape() const { return shape_; }
  bool odd_mode() const { return odd_mode_; }
  int dim() const { return shape_.dim_count(); }
  std::uint32_t orthant_count() const { return 1u << dim(); }

  /// Inclusive 1-based coordinate range of orthant `mask` along dim t.
  std::pair<int, int> coord_range(std::uint32_t mask, int t) const;

  std::int64_t orthant_volume(std::uint32_t mask) const;

  /// Cells covered by all orthants together: the full volume, minus the
  /// central hyperplane (volume / n1) in odd mode.
  std::int64_t covered_volume() const;

  /// Odd mode only: the excluded central coordinate ceil(n1/2).
  int central_coordinate() const;

 private:
  friend OrthantDecomposition decompose(const Shape&, bool);
  OrthantDecomposition(Shape shape, bool odd_mode)
      : shape_(std::move(shape)), odd_mode_(odd_mode) {}

  Shape shape_;
  bool odd_mode_ = false;
};

/// odd_mode requires an odd n1; the per-dimension ranges are verified to
/// partition the covered cells.
OrthantDecomposition decompose(const Shape& shape, bool odd_mode);

}  // namespace hamband
