#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hamband/shape.hpp"

using namespace hamband;

TEST_CASE("shape normalizes dims ascending and drops unit factors") {
  CHECK(Shape{4, 2, 3}.dims() == std::vector<int>{2, 3, 4});
  CHECK(Shape{1, 3, 1, 2}.dims() == std::vector<int>{2, 3});
  CHECK(Shape{5}.dims() == std::vector<int>{5});
  CHECK(Shape{1, 1}.dims() == std::vector<int>{1});  // one-cell matrix
  CHECK(Shape{1, 1}.volume() == 1);
}

TEST_CASE("shape rejects degenerate input") {
  CHECK_THROWS_AS(Shape(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Shape({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Shape({-3}), std::invalid_argument);
}

TEST_CASE("shape rejects volume overflow") {
  std::vector<int> dims(4, 1'000'000'000);  // 10^36 cells
  CHECK_THROWS_AS((Shape(dims)), std::invalid_argument);
}

TEST_CASE("volume, strides, and cell indexing round-trip") {
  Shape s{2, 3, 4};
  CHECK(s.volume() == 24);
  CHECK(s.stride(3) == 1);
  CHECK(s.stride(2) == 4);
  CHECK(s.stride(1) == 12);
  for (std::int64_t i = 0; i < s.volume(); ++i) CHECK(s.index_of(s.cell_at(i)) == i);
  CHECK(s.index_of(Cell{1, 1, 1}) == 0);
  CHECK(s.index_of(Cell{2, 3, 4}) == 23);
  CHECK_THROWS_AS(s.index_of(Cell{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(s.index_of(Cell{1, 4, 1}), std::invalid_argument);
}

TEST_CASE("line count matches sum of volume over each dim") {
  for (Shape s : {Shape{2, 2}, Shape{3, 4}, Shape{2, 3, 4}, Shape{7}, Shape{1, 1}}) {
    std::int64_t expected = 0;
    for (int n : s.dims()) expected += s.volume() / n;
    CHECK(s.line_count() == expected);

    auto all = lines(s);
    CHECK(static_cast<std::int64_t>(all.size()) == expected);
    // every line visited exactly once
    std::set<std::pair<int, std::vector<int>>> distinct;
    for (const Line& l : all) distinct.insert({l.free_dim, l.anchor});
    CHECK(static_cast<std::int64_t>(distinct.size()) == expected);
  }
}
