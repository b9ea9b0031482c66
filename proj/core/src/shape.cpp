#include "hamband/shape.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace hamband {

Shape::Shape(std::vector<int> dims) {
  if (dims.empty())
    throw std::invalid_argument("shape: at least one clique order required");
  for (int n : dims)
    if (n < 1)
      throw std::invalid_argument("shape: clique orders must be positive, got " +
                                  std::to_string(n));
  std::erase(dims, 1);
  if (dims.empty()) dims.push_back(1);  // one-cell matrix survives as [1]
  std::sort(dims.begin(), dims.end());

  std::int64_t volume = 1;
  for (int n : dims) {
    if (volume > std::numeric_limits<std::int64_t>::max() / n)
      throw std::invalid_argument("shape: volume overflows the 64-bit value range");
    volume *= n;
  }

  dims_ = std::move(dims);
  volume_ = volume;
  strides_.assign(dims_.size(), 1);
  for (int t = static_cast<int>(dims_.size()) - 2; t >= 0; --t)
    strides_[t] = strides_[t + 1] * dims_[t + 1];
}

int Shape::dim(int t) const {
  if (t < 1 || t > dim_count())
    throw std::invalid_argument("shape: dimension index out of range");
  return dims_[t - 1];
}

std::int64_t Shape::line_count() const {
  std::int64_t total = 0;
  for (int n : dims_) total += volume_ / n;
  return total;
}

std::int64_t Shape::stride(int t) const {
  if (t < 1 || t > dim_count())
    throw std::invalid_argument("shape: dimension index out of range");
  return strides_[t - 1];
}

bool Shape::contains(const Cell& cell) const {
  if (static_cast<int>(cell.coords.size()) != dim_count()) return false;
  for (int t = 0; t < dim_count(); ++t)
    if (cell.coords[t] < 1 || cell.coords[t] > dims_[t]) return false;
  return true;
}

std::int64_t Shape::index_of(const Cell& cell) const {
  if (!contains(cell))
    throw std::invalid_argument("cell does not belong to this shape");
  std::int64_t index = 0;
  for (int t = 0; t < dim_count(); ++t)
    index += static_cast<std::int64_t>(cell.coords[t] - 1) * strides_[t];
  return index;
}

Cell Shape::cell_at(std::int64_t index) const {
  if (index < 0 || index >= volume_)
    throw std::invalid_argument("cell index out of range");
  Cell cell;
  cell.coords.resize(dim_count());
  for (int t = 0; t < dim_count(); ++t) {
    cell.coords[t] = static_cast<int>(index / strides_[t]) % dims_[t] + 1;
  }
  return cell;
}

std::vector<Line> lines(const Shape& shape) {
  std::vector<Line> out;
  out.reserve(shape.line_count());
  const std::int64_t volume = shape.volume();
  for (int t = 1; t <= shape.dim_count(); ++t) {
    const std::int64_t stride = shape.stride(t);
    const int n = shape.dim(t);
    const std::int64_t block = stride * n;
    for (std::int64_t base = 0; base < volume; base += block)
      for (std::int64_t offset = 0; offset < stride; ++offset) {
        Cell anchor = shape.cell_at(base + offset);
        anchor.coords[t - 1] = 1;
        out.emplace_back(t, std::move(anchor.coords));
      }
  }
  return out;
}

}  // namespace hamband
