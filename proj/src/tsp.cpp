#include "onion/tsp.hpp"

#include <algorithm>
#include <cmath>

#include "onion/errors.hpp"

namespace onion {

namespace {

bool is_permutation_of_instance(const std::vector<int>& order, int n) {
  if ((int)order.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int id : order) {
    if (id < 0 || id >= n || seen[id]) return false;
    seen[id] = 1;
  }
  return true;
}

double closed_length(const std::vector<int>& order, const Instance& inst) {
  double total = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Point& a = inst.points[order[i]];
    const Point& b = inst.points[order[(i + 1) % order.size()]];
    total += distance(a, b, inst.metric);
  }
  return total;
}

}  // namespace

double distance(const Point& a, const Point& b, Metric metric) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  switch (metric) {
    case Metric::Euc2d:
      return std::sqrt(dx * dx + dy * dy);
    case Metric::Att: {
      // pseudo-Euclidean rounding: nearest integer, bumped up when it
      // would fall below the real value
      double r = std::sqrt((dx * dx + dy * dy) / 10.0);
      double t = std::floor(r + 0.5);
      return t < r ? t + 1.0 : t;
    }
  }
  return 0.0;  // unreachable
}

std::vector<int> canonical_order(std::vector<int> order) {
  if (order.size() < 2) return order;
  auto start = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), start, order.end());

  // pick the lexicographically smaller direction; the reverse tour visits
  // order[n-1], order[n-2], ... after the fixed first element
  std::vector<int> reversed(order.size());
  reversed[0] = order[0];
  std::reverse_copy(order.begin() + 1, order.end(), reversed.begin() + 1);
  return std::min(order, reversed);
}

Tour make_tour(std::vector<int> order, const Instance& inst) {
  if (!is_permutation_of_instance(order, (int)inst.points.size()))
    throw InputError("invalid tour");
  Tour t;
  t.order = canonical_order(std::move(order));
  t.length = closed_length(t.order, inst);
  return t;
}

double tour_length(const Tour& t, const Instance& inst) {
  if (!is_permutation_of_instance(t.order, (int)inst.points.size()))
    throw InputError("invalid tour");
  return closed_length(t.order, inst);
}

std::optional<std::string> validate_tour(const Tour& t, const Instance& inst) {
  int n = (int)inst.points.size();
  if ((int)t.order.size() != n) return "wrong number of cities";
  std::vector<char> seen(n, 0);
  for (int id : t.order) {
    if (id < 0 || id >= n) return "unknown id";
    if (seen[id]) return "id visited twice";
    seen[id] = 1;
  }
  double actual = closed_length(t.order, inst);
  double scale = std::max({1.0, std::abs(actual), std::abs(t.length)});
  if (std::abs(actual - t.length) > 1e-9 * scale) return "length mismatch";
  return std::nullopt;
}

}  // namespace onion
