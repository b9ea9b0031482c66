#pragma once

#include <vector>

#include "hamband/shape.hpp"

namespace hamband {

/// A bijection between the cells of a shape and the values 1..volume,
/// stored densely in row-major order (last coordinate fastest).
/// Construction validates bijectivity and builds the inverse lookup.
class Arrangement {
 public:
  Arrangement(Shape shape, std::vector<Value> values_row_major);

  const Shape& shape() const { return shape_; }
  const std::vector<Value>& values() const { return values_; }

  Value value_at(std::int64_t cell_index) const;
  Value value_at(const Cell& cell) const { return value_at(shape_.index_of(cell)); }

  /// Inverse lookup; throws std::invalid_argument for values outside 1..volume.
  Cell cell_of(Value value) const;
  std::int64_t cell_index_of(Value value) const;

  bool operator==(const Arrangement&) const = default;

 private:
  Shape shape_;
  std::vector<Value> values_;
  std::vector<std::int64_t> cell_by_value_;
};

/// A bijective labeling of the Hamming-graph vertices (vertices are the
/// cells of the shape) with 1..volume. Same data as an Arrangement under
/// the arrangement/labeling correspondence; kept as a distinct type so
/// the two evaluation routes stay separate.
class Labeling {
 public:
  Labeling(Shape shape, std::vector<Value> labels_row_major);

  const Shape& shape() const { return shape_; }
  const std::vector<Value>& labels() const { return labels_; }

  Value label_at(std::int64_t vertex_index) const;
  Value label_at(const Cell& vertex) const { return label_at(shape_.index_of(vertex)); }

  bool operator==(const Labeling&) const = default;

 private:
  Shape shape_;
  std::vector<Value> labels_;
};

/// Maximum over all lines of (largest value - smallest value) on the line.
/// Zero for the one-cell matrix.
Value spread(const Arrangement& a);

/// Max minus min of the values on one line; throws std::invalid_argument
/// when the line does not belong to the arrangement's shape.
Value line_spread(const Arrangement& a, const Line& line);

/// True iff values strictly increase along every line.
bool is_monotonic(const Arrangement& a);

/// Sorts the values to be ascending along every line, one dimension at a
/// time (dimension 1 lines first), one line at a time. Never increases
/// the spread. Sorting a later dimension must keep the earlier ones
/// monotonic; that stability is asserted on the result.
Arrangement monotone_sort(const Arrangement& a);

/// Maximum label difference across Hamming-graph edges (vertex pairs that
/// differ in exactly one coordinate). Edges are enumerated implicitly as
/// the unordered pairs within each line; equals the spread of the
/// corresponding arrangement.
Value graph_bandwidth(const Labeling& labeling);

Arrangement to_arrangement(const Labeling& labeling);
Labeling to_labeling(const Arrangement& a);

}  // namespace hamband
