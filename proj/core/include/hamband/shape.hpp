#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hamband {

/// Value/label type. Values are 1-based everywhere in external formats;
/// any zero-based indexing is an internal detail that must not leak.
using Value = std::int64_t;

/// Coordinates of one matrix cell, 1-based: coords[t-1] lies in [1, n_t].
struct Cell {
  std::vector<int> coords;

  Cell() = default;
  explicit Cell(std::vector<int> c) : coords(std::move(c)) {}
  Cell(std::initializer_list<int> c) : coords(c) {}

  bool operator==(const Cell&) const = default;
};

/// A full one-dimensional submatrix: every coordinate fixed except
/// free_dim (1-based). `anchor` holds the fixed coordinates; the entry at
/// free_dim is irrelevant and treated as 1.
struct Line {
  int free_dim = 1;
  std::vector<int> anchor;

  Line() = default;
  Line(int free, std::vector<int> fixed)
      : free_dim(free), anchor(std::move(fixed)) {}

  bool operator==(const Line&) const = default;
};

/// Clique orders n_1 <= ... <= n_d of a Hamming graph, equivalently the
/// side lengths of the matrix whose cells are numbered.
///
/// Construction normalizes the input: dims are sorted ascending and
/// factors of 1 are dropped (a 1-clique contributes no edges). An
/// all-ones input degenerates to the one-cell shape [1]; an empty input
/// is rejected, as is any volume that overflows the signed 64-bit range.
class Shape {
 public:
  explicit Shape(std::vector<int> dims);
  Shape(std::initializer_list<int> dims) : Shape(std::vector<int>(dims)) {}

  int dim_count() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }

  /// Clique order of dimension t, 1-based.
  int dim(int t) const;

  std::int64_t volume() const { return volume_; }

  /// Number of lines: sum over dimensions of volume / n_t.
  std::int64_t line_count() const;

  /// Distance in the dense row-major layout between neighbouring cells
  /// along dimension t. The last coordinate varies fastest.
  std::int64_t stride(int t) const;

  /// Row-major index of a cell; throws std::invalid_argument when the
  /// cell does not belong to this shape.
  std::int64_t index_of(const Cell& cell) const;

  Cell cell_at(std::int64_t index) const;

  bool contains(const Cell& cell) const;

  bool operator==(const Shape&) const = default;

 private:
  std::vector<int> dims_;
  std::vector<std::int64_t> strides_;
  std::int64_t volume_ = 0;
};

/// All lines of a shape, grouped by free dimension; each line appears
/// exactly once.
std::vector<Line> lines(const Shape& shape);

}  // namespace hamband
