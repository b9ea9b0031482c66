#include "hamband/arrangement.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace hamband {

namespace {

std::vector<std::int64_t> build_inverse(const Shape& shape,
                                        const std::vector<Value>& values,
                                        const char* what) {
  const std::int64_t volume = shape.volume();
  if (static_cast<std::int64_t>(values.size()) != volume)
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(volume) + " values, got " +
                                std::to_string(values.size()));
  std::vector<std::int64_t> inverse(volume, -1);
  for (std::int64_t i = 0; i < volume; ++i) {
    const Value v = values[i];
    if (v < 1 || v > volume || inverse[v - 1] != -1)
      throw std::invalid_argument(std::string(what) +
                                  ": values are not a bijection onto 1.." +
                                  std::to_string(volume));
    inverse[v - 1] = i;
  }
  return inverse;
}

}  // namespace

Arrangement::Arrangement(Shape shape, std::vector<Value> values_row_major)
    : shape_(std::move(shape)), values_(std::move(values_row_major)) {
  cell_by_value_ = build_inverse(shape_, values_, "arrangement");
}

Value Arrangement::value_at(std::int64_t cell_index) const {
  if (cell_index < 0 || cell_index >= shape_.volume())
    throw std::invalid_argument("arrangement: cell index out of range");
  return values_[cell_index];
}

std::int64_t Arrangement::cell_index_of(Value value) const {
  if (value < 1 || value > shape_.volume())
    throw std::invalid_argument("arrangement: value out of range");
  return cell_by_value_[value - 1];
}

Cell Arrangement::cell_of(Value value) const {
  return shape_.cell_at(cell_index_of(value));
}

Labeling::Labeling(Shape shape, std::vector<Value> labels_row_major)
    : shape_(std::move(shape)), labels_(std::move(labels_row_major)) {
  build_inverse(shape_, labels_, "labeling");
}

Value Labeling::label_at(std::int64_t vertex_index) const {
  if (vertex_index < 0 || vertex_index >= shape_.volume())
    throw std::invalid_argument("labeling: vertex index out of range");
  return labels_[vertex_index];
}

namespace {

// Applies fn(base + offset, stride, n) once per line of the shape.
template <typename F>
void for_each_line(const Shape& shape, F&& fn) {
  const std::int64_t volume = shape.volume();
  for (int t = 1; t <= shape.dim_count(); ++t) {
    const std::int64_t stride = shape.stride(t);
    const int n = shape.dim(t);
    const std::int64_t block = stride * n;
    for (std::int64_t base = 0; base < volume; base += block)
      for (std::int64_t offset = 0; offset < stride; ++offset)
        fn(base + offset, stride, n);
  }
}

}  // namespace

Value spread(const Arrangement& a) {
  const auto& values = a.values();
  Value best = 0;
  for_each_line(a.shape(), [&](std::int64_t start, std::int64_t stride, int n) {
    Value lo = std::numeric_limits<Value>::max();
    Value hi = std::numeric_limits<Value>::min();
    for (int k = 0; k < n; ++k) {
      const Value v = values[start + k * stride];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    best = std::max(best, hi - lo);
  });
  return best;
}

Value line_spread(const Arrangement& a, const Line& line) {
  const Shape& shape = a.shape();
  if (line.free_dim < 1 || line.free_dim > shape.dim_count() ||
      static_cast<int>(line.anchor.size()) != shape.dim_count())
    throw std::invalid_argument("line does not belong to the arrangement's shape");
  Cell anchor{line.anchor};
  anchor.coords[line.free_dim - 1] = 1;
  const std::int64_t start = shape.index_of(anchor);  // validates coordinates
  const std::int64_t stride = shape.stride(line.free_dim);
  const int n = shape.dim(line.free_dim);
  Value lo = std::numeric_limits<Value>::max();
  Value hi = std::numeric_limits<Value>::min();
  for (int k = 0; k < n; ++k) {
    const Value v = a.values()[start + k * stride];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

bool is_monotonic(const Arrangement& a) {
  const auto& values = a.values();
  bool ok = true;
  for_each_line(a.shape(), [&](std::int64_t start, std::int64_t stride, int n) {
    for (int k = 0; k + 1 < n; ++k)
      if (values[start + k * stride] >= values[start + (k + 1) * stride]) ok = false;
  });
  return ok;
}

Arrangement monotone_sort(const Arrangement& a) {
  const Shape& shape = a.shape();
  std::vector<Value> values = a.values();
  std::vector<Value> scratch;
  const std::int64_t volume = shape.volume();
  for (int t = 1; t <= shape.dim_count(); ++t) {
    const std::int64_t stride = shape.stride(t);
    const int n = shape.dim(t);
    const std::int64_t block = stride * n;
    for (std::int64_t base = 0; base < volume; base += block)
      for (std::int64_t offset = 0; offset < stride; ++offset) {
        scratch.clear();
        for (int k = 0; k < n; ++k) scratch.push_back(values[base + offset + k * stride]);
        std::sort(scratch.begin(), scratch.end());
        for (int k = 0; k < n; ++k) values[base + offset + k * stride] = scratch[k];
      }
  }
  Arrangement sorted(shape, std::move(values));
  if (!is_monotonic(sorted))
    throw std::logic_error("monotone_sort: single pass per dimension left a descending line");
  return sorted;
}

Value graph_bandwidth(const Labeling& labeling) {
  const auto& labels = labeling.labels();
  Value best = 0;
  for_each_line(labeling.shape(), [&](std::int64_t start, std::int64_t stride, int n) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Value d = labels[start + i * stride] - labels[start + j * stride];
        best = std::max(best, d < 0 ? -d : d);
      }
  });
  return best;
}

Arrangement to_arrangement(const Labeling& labeling) {
  return Arrangement(labeling.shape(), labeling.labels());
}

Labeling to_labeling(const Arrangement& a) {
  return Labeling(a.shape(), a.values());
}

}  // namespace hamband
