#include <doctest.h>

#include <stdexcept>

#include "hamband/bounds.hpp"
#include "hamband/construct.hpp"
#include "support.hpp"

using namespace hamband;

TEST_CASE("2D even fill on fixed shapes") {
  CHECK(construct_2d_even(2, 3).arrangement.values() ==
        std::vector<Value>{1, 2, 3, 4, 5, 6});
  CHECK(construct_2d_even(2, 3).measured_spread == 3);

  ConstructionResult wide = construct_2d_even(2, 11);
  for (int i = 0; i < 22; ++i) CHECK(wide.arrangement.values()[i] == i + 1);
  CHECK(wide.measured_spread == 11);

  CHECK(construct_2d_even(4, 4).measured_spread == 9);
  CHECK(construct_2d_even(4, 4).measured_spread == lower_bound_2d(4, 4));
}

TEST_CASE("2D odd fill on fixed shapes") {
  CHECK(construct_2d_odd(3, 4).arrangement.values() ==
        std::vector<Value>{1, 2, 5, 6, 3, 4, 9, 10, 7, 8, 11, 12});
  CHECK(construct_2d_odd(3, 4).measured_spread == 7);
  CHECK(construct_2d_odd(3, 3).measured_spread == 5);
  CHECK(construct_2d_odd(3, 5).measured_spread == (3 + 1) * 5 / 2 - 1);
}

TEST_CASE("2D fills reject wrong parity or unsorted dims") {
  CHECK_THROWS_AS(construct_2d_even(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(construct_2d_odd(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(construct_2d_even(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(construct_2d_odd(1, 1), std::invalid_argument);
}

TEST_CASE("even d-dimensional construction") {
  CHECK(construct_even(Shape{2, 2}).measured_spread == 2);
  CHECK(construct_even(Shape{2, 2, 2}).measured_spread == 4);

  ConstructionResult big = construct_even(Shape{4, 4, 4});
  CHECK(big.measured_spread >= 32);
  CHECK(big.measured_spread <= 33);

  CHECK_THROWS_AS(construct_even(Shape{3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(construct_even(Shape{5}), std::invalid_argument);
}

TEST_CASE("odd d-dimensional construction") {
  CHECK(construct_odd(Shape{3, 3}).arrangement ==
        construct_2d_odd(3, 3).arrangement);

  ConstructionResult r333 = construct_odd(Shape{3, 3, 3});
  CHECK(r333.measured_spread >= 4);
  CHECK(r333.measured_spread <= 21);

  CHECK(construct_odd(Shape{3, 4, 4}).measured_spread <= 25);

  CHECK_THROWS_AS(construct_odd(Shape{2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(construct_odd(Shape{4}), std::invalid_argument);
}

TEST_CASE("construct dispatches on dimension and parity") {
  ConstructionResult chain = construct(Shape{5});
  CHECK(chain.arrangement.values() == std::vector<Value>{1, 2, 3, 4, 5});
  CHECK(chain.measured_spread == 4);
  CHECK(chain.lower == 4);
  CHECK(chain.upper == 4);

  CHECK(construct(Shape{2, 3}).arrangement == construct_2d_even(2, 3).arrangement);
  CHECK(construct(Shape{3, 3, 3}).arrangement == construct_odd(Shape{3, 3, 3}).arrangement);
  CHECK(construct(Shape{2, 2, 2}).arrangement == construct_even(Shape{2, 2, 2}).arrangement);
}

TEST_CASE("2D constructions are optimal for all shapes up to 12") {
  for (int n1 = 2; n1 <= 12; ++n1)
    for (int n2 = n1; n2 <= 12; ++n2)
      CHECK(construct(Shape{n1, n2}).measured_spread == lower_bound_2d(n1, n2));
}

TEST_CASE("3- and 4-dimensional constructions stay inside the bracket") {
  auto check = [](const Shape& s) {
    CAPTURE(s.dims());
    ConstructionResult r = construct(s);
    CHECK(r.lower == lower_bound(s));
    CHECK(r.upper == upper_bound(s));
    CHECK(r.measured_spread >= r.lower);
    CHECK(r.measured_spread <= r.upper);
    // stable under monotone sorting
    Arrangement sorted = monotone_sort(r.arrangement);
    CHECK(is_monotonic(sorted));
    CHECK(spread(sorted) == r.measured_spread);
  };
  for (int a = 2; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      for (int c = b; c <= 6; ++c) {
        check(Shape{a, b, c});
        for (int e = c; e <= 6; ++e) check(Shape{a, b, c, e});
      }
}

TEST_CASE("all-2 shapes reproduce the hypercube bandwidth") {
  for (int d = 2; d <= 6; ++d) {
    std::vector<int> dims(d, 2);
    CHECK(construct(Shape(dims)).measured_spread == hypercube_bandwidth(d));
  }
}

TEST_CASE("construction outputs are valid bijections") {
  for (Shape s : {Shape{3, 5, 6}, Shape{2, 3, 4, 5}, Shape{3, 3, 3, 3}}) {
    ConstructionResult r = construct(s);
    // Arrangement construction revalidates; check the spread claim too.
    CHECK(spread(r.arrangement) == r.measured_spread);
    CHECK(testsupport::spread_bruteforce(r.arrangement) == r.measured_spread);
  }
}
