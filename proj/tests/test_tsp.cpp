#include "onion/tsp.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "onion/errors.hpp"

using namespace onion;
using test_helpers::pts;

namespace {

Instance square_instance() {
  return {"square", pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), Metric::Euc2d};
}

}  // namespace

TEST_CASE("distance: Euclidean basics") {
  Point a{0, 0, 0}, b{1, 3, 4};
  CHECK(distance(a, b, Metric::Euc2d) == 5.0);
  CHECK(distance(a, a, Metric::Euc2d) == 0.0);
  CHECK(distance(b, b, Metric::Att) == 0.0);
}

TEST_CASE("distance: pseudo-Euclidean rounding") {
  auto att = [](double ax, double ay, double bx, double by) {
    return distance({0, ax, ay}, {1, bx, by}, Metric::Att);
  };
  // sqrt(25/10) = 1.58..; nearest int 2 already covers it
  CHECK(att(0, 0, 3, 4) == 2.0);
  // sqrt(100/10) = 3.16..; nearest int 3 is short, so bump to 4
  CHECK(att(0, 0, 10, 0) == 4.0);
  // tiny distances round up to 1, never to 0
  CHECK(att(0, 0, 0, 1) == 1.0);

  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> coord(0, 5000);
  for (int i = 0; i < 2000; ++i) {
    Point p{0, double(coord(gen)), double(coord(gen))};
    Point q{1, double(coord(gen)), double(coord(gen))};
    double d = distance(p, q, Metric::Att);
    double r = std::sqrt(((p.x - q.x) * (p.x - q.x) +
                          (p.y - q.y) * (p.y - q.y)) / 10.0);
    CHECK(d == std::floor(d));     // integer-valued
    CHECK(d >= r);                 // never undershoots the real value
    CHECK(d <= std::ceil(r + 0.5));
    CHECK(d == distance(q, p, Metric::Att));
  }
}

TEST_CASE("distance: symmetry and triangle inequality") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    Point a{0, coord(gen), coord(gen)};
    Point b{1, coord(gen), coord(gen)};
    Point c{2, coord(gen), coord(gen)};
    CHECK(distance(a, b, Metric::Euc2d) == distance(b, a, Metric::Euc2d));
    CHECK(distance(a, c, Metric::Euc2d) <=
          distance(a, b, Metric::Euc2d) + distance(b, c, Metric::Euc2d)
              + 1e-12);
  }
}

TEST_CASE("tour_length: squares and a single city") {
  Instance sq = square_instance();
  Tour perimeter{{0, 1, 2, 3}, 0.0};
  CHECK(tour_length(perimeter, sq) == doctest::Approx(4.0).epsilon(1e-12));

  Tour crossed{{0, 2, 1, 3}, 0.0};  // both diagonals plus two sides
  CHECK(tour_length(crossed, sq) ==
        doctest::Approx(2.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));

  Instance one{"one", pts({{5, 5}}), Metric::Euc2d};
  CHECK(tour_length(Tour{{0}, 0.0}, one) == 0.0);
}

TEST_CASE("tour_length: rejects anything but a permutation") {
  Instance sq = square_instance();
  CHECK_THROWS_WITH_AS(tour_length(Tour{{0, 1, 2}, 0.0}, sq), "invalid tour",
                       InputError);
  CHECK_THROWS_WITH_AS(tour_length(Tour{{0, 1, 2, 2}, 0.0}, sq),
                       "invalid tour", InputError);
  CHECK_THROWS_WITH_AS(tour_length(Tour{{0, 1, 2, 4}, 0.0}, sq),
                       "invalid tour", InputError);
  CHECK_THROWS_WITH_AS(make_tour({1, 2, 3}, sq), "invalid tour", InputError);
}

TEST_CASE("canonical_order: fixed examples") {
  CHECK(canonical_order({2, 1, 0, 3}) == std::vector<int>{0, 1, 2, 3});
  CHECK(canonical_order({0, 3, 2, 1}) == std::vector<int>{0, 1, 2, 3});
  CHECK(canonical_order({3, 2, 0, 1}) == std::vector<int>{0, 1, 3, 2});
  CHECK(canonical_order({1, 0}) == std::vector<int>{0, 1});
  CHECK(canonical_order({0}) == std::vector<int>{0});
}

TEST_CASE("canonical_order: rotations and reversal all collapse") {
  std::mt19937_64 gen(13);
  for (int n : {2, 3, 5, 8, 12}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), gen);
      auto canon = canonical_order(order);

      CHECK(canon[0] == 0);  // starts at the smallest id
      REQUIRE(std::is_permutation(canon.begin(), canon.end(), order.begin()));

      for (int r = 0; r < n; ++r) {
        std::vector<int> rotated = order;
        std::rotate(rotated.begin(), rotated.begin() + r, rotated.end());
        CHECK(canonical_order(rotated) == canon);
        std::reverse(rotated.begin(), rotated.end());
        CHECK(canonical_order(rotated) == canon);
      }
    }
  }
}

TEST_CASE("tour length is invariant under rotation and reversal") {
  auto p = test_helpers::random_real_points(12, 21);
  Instance inst{"r", p, Metric::Euc2d};
  std::vector<int> order(12);
  for (int i = 0; i < 12; ++i) order[i] = i;
  std::mt19937_64 gen(22);
  std::shuffle(order.begin(), order.end(), gen);
  double base = tour_length(Tour{order, 0.0}, inst);
  for (int r = 0; r < 12; ++r) {
    std::vector<int> rotated = order;
    std::rotate(rotated.begin(), rotated.begin() + r, rotated.end());
    CHECK(tour_length(Tour{rotated, 0.0}, inst) ==
          doctest::Approx(base).epsilon(1e-12));
    std::reverse(rotated.begin(), rotated.end());
    CHECK(tour_length(Tour{rotated, 0.0}, inst) ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("make_tour: canonical order with a consistent cached length") {
  Instance sq = square_instance();
  Tour t = make_tour({3, 2, 1, 0}, sq);
  CHECK(t.order == std::vector<int>{0, 1, 2, 3});
  CHECK(t.length == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(!validate_tour(t, sq).has_value());
}

TEST_CASE("validate_tour: reports the violation instead of throwing") {
  Instance sq = square_instance();
  CHECK(!validate_tour(Tour{{0, 1, 2, 3}, 4.0}, sq).has_value());
  CHECK(validate_tour(Tour{{0, 1, 1, 3}, 4.0}, sq) ==
        std::optional<std::string>{"id visited twice"});
  CHECK(validate_tour(Tour{{0, 1, 2, 3}, 4.5}, sq) ==
        std::optional<std::string>{"length mismatch"});
  CHECK(validate_tour(Tour{{0, 1, 2}, 4.0}, sq).has_value());
  CHECK(validate_tour(Tour{{0, 1, 2, 9}, 4.0}, sq).has_value());
  // tolerance is relative: a 1e-12 wobble on length 4 passes
  CHECK(!validate_tour(Tour{{0, 1, 2, 3}, 4.0 + 4e-12}, sq).has_value());
}
